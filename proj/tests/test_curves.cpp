#include <stdexcept>

#include "doctest.h"
#include "pinforms/curves.hpp"
#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"
#include "pinforms/surface.hpp"

using namespace pinforms;

TEST_CASE("ribbon layout") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const RibbonModel r = ribbon_model(n2);
  CHECK(r.slots == std::vector<int>{0, 0, 1, 1});
  CHECK(r.band_slots[0] == std::array<int, 2>{0, 1});
  CHECK(r.band_slots[1] == std::array<int, 2>{2, 3});
  CHECK(r.twisted == std::vector<uint8_t>{1, 1});

  HomologyModel o1(SurfaceSpec::parse("O1"));
  const RibbonModel s = ribbon_model(o1);
  CHECK(s.slots == std::vector<int>{0, 1, 0, 1});
  CHECK(s.band_slots[0] == std::array<int, 2>{0, 2});
  CHECK(s.band_slots[1] == std::array<int, 2>{1, 3});
  CHECK(s.twisted == std::vector<uint8_t>{0, 0});

  HomologyModel disk2(SurfaceSpec::parse("O0:b=2"));
  const RibbonModel d = ribbon_model(disk2);
  CHECK(d.slots == std::vector<int>{0, 0});
  CHECK(d.twisted == std::vector<uint8_t>{0});
}

TEST_CASE("word reduction") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const Word w = parse_system(n2, "c1,-c1").words[0];
  CHECK(reduce(w).empty());
  // cyclic cancellation
  const Word v = parse_system(n2, "c1,c2,-c1").words[0];
  CHECK(reduce(v) == parse_system(n2, "c2").words[0]);
  CHECK(is_reduced(parse_system(n2, "c1,c2").words[0]));
  CHECK_FALSE(is_reduced(parse_system(n2, "c1,c2,-c1").words[0]));
  // reducing a system drops empty components
  CurveSystem sys = parse_system(n2, "c1,-c1;c2");
  CHECK(reduce(sys).words.size() == 1);
}

TEST_CASE("homology classes of systems") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  CHECK(homology_class(n2, parse_system(n2, "c1,c2")).v == Coeffs{1, 1});
  CHECK(homology_class(n2, parse_system(n2, "c1,-c2")).v == Coeffs{1, 3});
  CHECK(homology_class(n2, parse_system(n2, "c1,c1,c2")).v == Coeffs{0, 3});
  CHECK(homology_class(n2, parse_system(n2, "c1;c2")).v == Coeffs{1, 1});
  CHECK(homology_class(n2, CurveSystem{}).v == Coeffs{0, 0});
}

TEST_CASE("self-intersection counts") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  const RibbonModel rn1 = ribbon_model(n1);
  CHECK(self_intersections(rn1, parse_system(n1, "c1")) == 0);
  // two parallel copies of the core of a crosscap cross once
  CHECK(self_intersections(rn1, parse_system(n1, "c1;c1")) == 1);

  HomologyModel o1(SurfaceSpec::parse("O1"));
  const RibbonModel ro1 = ribbon_model(o1);
  CHECK(self_intersections(ro1, parse_system(o1, "a1")) == 0);
  CHECK(self_intersections(ro1, parse_system(o1, "a1;b1")) == 1);
  CHECK(self_intersections(ro1, parse_system(o1, "a1;a1")) == 0);

  HomologyModel n2(SurfaceSpec::parse("N2"));
  const RibbonModel rn2 = ribbon_model(n2);
  CHECK(self_intersections(rn2, parse_system(n2, "c1,c2")) == 0);
  CHECK(self_intersections(rn2, parse_system(n2, "c1,-c2")) == 1);
  CHECK(self_intersections(rn2, parse_system(n2, "c1,c1,c2")) == 2);

  // words must be reduced
  CHECK_THROWS_AS(self_intersections(rn2, parse_system(n2, "c1,-c1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      self_intersections(rn2, CurveSystem{{Word{Letter{7, 1}}}}),
      std::invalid_argument);
}

TEST_CASE("calibrated holonomy reproduces forms on small systems") {
  for (const char* name : {"N1", "N2", "O1"}) {
    HomologyModel m(SurfaceSpec::parse(name));
    const RibbonModel ribbon = ribbon_model(m);
    std::vector<CurveSystem> systems;
    systems.push_back(CurveSystem{});
    for (int g = 0; g < m.generator_count(); ++g) {
      systems.push_back(CurveSystem{{Word{Letter{g, 1}}}});
      systems.push_back(CurveSystem{{Word{Letter{g, -1}}}});
      systems.push_back(CurveSystem{{Word{Letter{g, 1}, Letter{g, 1}}}});
      for (int h = 0; h < g; ++h)
        systems.push_back(
            CurveSystem{{Word{Letter{h, 1}}, Word{Letter{g, 1}}}});
    }
    for (StructureType t : all_structure_types()) {
      for (const QForm& q : enumerate_forms(m, t)) {
        const Cochain phi = calibrate(q);
        for (const CurveSystem& sys : systems)
          CHECK(q_curve(ribbon, sys, phi, t) ==
                eval(q, homology_class(m, sys)));
      }
    }
  }
}

TEST_CASE("cochain parity is enforced") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  const RibbonModel ribbon = ribbon_model(n1);
  const CurveSystem sys = parse_system(n1, "c1");
  // w1(c1) = 1, so an even value breaks the projection constraint
  CHECK_THROWS_AS(q_curve(ribbon, sys, Cochain{{0}}, kPinMinus),
                  std::domain_error);
  CHECK_THROWS_AS(q_curve(ribbon, sys, Cochain{{4}}, kPinMinus),
                  std::invalid_argument);
  CHECK_THROWS_AS(q_curve(ribbon, sys, Cochain{{1, 1}}, kPinMinus),
                  std::invalid_argument);
}

TEST_CASE("system grammar round trips") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  for (const char* text : {"c1", "c1,c2", "c1,-c2;c1", "-c1,-c1"}) {
    const CurveSystem sys = parse_system(n2, text);
    CHECK(format_system(n2, sys) == text);
  }
  CHECK(parse_system(n2, " c1 , c2 ").words[0].size() == 2);
  CHECK(parse_system(n2, "").words.empty());
  CHECK(parse_system(n2, "c1;").words.size() == 1);
  CHECK_THROWS_AS(parse_system(n2, "a1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system(n2, "c1,,c2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system(n2, "c1,-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system(n2, "c1;;c2"), std::invalid_argument);

  HomologyModel o1(SurfaceSpec::parse("O1"));
  CHECK(format_system(o1, parse_system(o1, "a1,-b1")) == "a1,-b1");
}
