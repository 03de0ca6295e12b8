#include <stdexcept>

#include "doctest.h"
#include "pinforms/homology.hpp"
#include "pinforms/surface.hpp"

using namespace pinforms;

TEST_CASE("spec strings parse and print") {
  CHECK(SurfaceSpec::parse("O2").name() == "O2");
  CHECK(SurfaceSpec::parse("N3:b=2").name() == "N3:b=2");
  CHECK(SurfaceSpec::parse("sphere") == SurfaceSpec::parse("O0"));
  CHECK(SurfaceSpec::parse("torus") == SurfaceSpec::parse("O1"));
  CHECK(SurfaceSpec::parse("rp2") == SurfaceSpec::parse("N1"));
  CHECK(SurfaceSpec::parse("klein") == SurfaceSpec::parse("N2"));
  CHECK(SurfaceSpec::parse("torus:b=1").name() == "O1:b=1");
}

TEST_CASE("bad spec strings are rejected") {
  CHECK_THROWS_AS(SurfaceSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::parse("X1"), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::parse("N"), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::parse("N2:b="), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::parse("N2:c=1"), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::parse("N0"), std::domain_error);
}

TEST_CASE("euler characteristic") {
  CHECK(SurfaceSpec::parse("O0").euler_characteristic() == 2);
  CHECK(SurfaceSpec::parse("O1").euler_characteristic() == 0);
  CHECK(SurfaceSpec::parse("N1").euler_characteristic() == 1);
  CHECK(SurfaceSpec::parse("N2").euler_characteristic() == 0);
  CHECK(SurfaceSpec::parse("N1:b=1").euler_characteristic() == 0);
  CHECK(SurfaceSpec::parse("O0:b=2").euler_characteristic() == 0);
}

TEST_CASE("generator conventions") {
  HomologyModel o2(SurfaceSpec::parse("O2"));
  CHECK(o2.generator_labels() ==
        std::vector<std::string>{"a1", "b1", "a2", "b2"});
  CHECK(o2.pairing_entry(0, 1) == 1);
  CHECK(o2.pairing_entry(1, 0) == 1);
  CHECK(o2.pairing_entry(0, 2) == 0);
  CHECK(o2.pairing_entry(0, 0) == 0);
  CHECK(o2.w1_entry(0) == 0);
  CHECK_FALSE(o2.has_relation());

  HomologyModel n2(SurfaceSpec::parse("N2"));
  CHECK(n2.generator_labels() == std::vector<std::string>{"c1", "c2"});
  CHECK(n2.pairing_entry(0, 0) == 1);
  CHECK(n2.pairing_entry(0, 1) == 0);
  CHECK(n2.w1_entry(0) == 1);
  CHECK(n2.has_relation());
  CHECK(n2.torsion_element().v == Coeffs{1, 1});

  HomologyModel disk2(SurfaceSpec::parse("O0:b=2"));
  CHECK(disk2.generator_labels() == std::vector<std::string>{"d1"});
  CHECK(disk2.pairing_entry(0, 0) == 0);
  CHECK(disk2.w1_entry(0) == 0);
  CHECK_FALSE(disk2.has_relation());

  HomologyModel m(SurfaceSpec::parse("N2:b=1"));
  CHECK(m.b1() == 2);
  CHECK_FALSE(m.has_relation());
  CHECK_THROWS_AS(m.torsion_element(), std::domain_error);

  CHECK(n2.generator_index("c2") == 1);
  CHECK_THROWS_AS(n2.generator_index("a1"), std::invalid_argument);
}

TEST_CASE("element counts") {
  CHECK(HomologyModel(SurfaceSpec::parse("O0")).elements().size() == 1);
  CHECK(HomologyModel(SurfaceSpec::parse("O1")).elements().size() == 16);
  CHECK(HomologyModel(SurfaceSpec::parse("O2")).elements().size() == 256);
  CHECK(HomologyModel(SurfaceSpec::parse("N1")).elements().size() == 2);
  CHECK(HomologyModel(SurfaceSpec::parse("N2")).elements().size() == 8);
  CHECK(HomologyModel(SurfaceSpec::parse("N4")).elements().size() == 128);
  CHECK(HomologyModel(SurfaceSpec::parse("N1:b=1")).elements().size() == 4);
}

TEST_CASE("canonical representatives absorb the relation") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  CHECK(n2.canonicalize({3, 2}).v == Coeffs{1, 0});
  CHECK(n2.canonicalize({2, 2}).v == Coeffs{0, 0});
  CHECK(n2.canonicalize({1, 1}).v == Coeffs{1, 1});
  CHECK(n2.canonicalize({6, 1}).v == Coeffs{0, 3});

  // no relation with boundary: plain mod 4
  HomologyModel m(SurfaceSpec::parse("N2:b=1"));
  CHECK(m.canonicalize({3, 2}).v == Coeffs{3, 2});
  CHECK(m.canonicalize({5, 2}).v == Coeffs{1, 2});
}

TEST_CASE("arithmetic respects the relation") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  const HClass c = n1.generator(0);
  CHECK(n1.add(c, c) == n1.zero());  // 2c = 0
  CHECK(n1.negate(c) == c);          // -c = 3c = c + 2c

  HomologyModel n2(SurfaceSpec::parse("N2"));
  const HClass c1 = n2.generator(0), c2 = n2.generator(1);
  CHECK(n2.add(c1, c1).v == Coeffs{0, 2});  // 2c1 = 2c2 via the relation
  CHECK(n2.pairing(c1, c1) == 1);
  CHECK(n2.pairing(c1, c2) == 0);
  CHECK(n2.w1_eval(n2.add(c1, c2)) == 0);
  CHECK(n2.w1_eval(c1) == 1);

  HomologyModel o1(SurfaceSpec::parse("O1"));
  CHECK(o1.pairing(o1.generator(0), o1.generator(1)) == 1);
  CHECK(o1.pairing(o1.generator(0), o1.generator(0)) == 0);
  CHECK(o1.w1_eval(o1.generator(0)) == 0);
}

TEST_CASE("indexed tables agree with direct arithmetic") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const auto& els = n2.elements();
  for (size_t i = 0; i < els.size(); ++i) {
    CHECK(n2.element_index(els[i]) == i);
    CHECK(n2.w1_by_index(i) == n2.w1_eval(els[i]));
    for (size_t j = 0; j < els.size(); ++j) {
      CHECK(n2.add_index(i, j) == n2.element_index(n2.add(els[i], els[j])));
      CHECK(n2.pairing_by_index(i, j) == n2.pairing(els[i], els[j]));
    }
  }
}

TEST_CASE("same_model identifies equal surfaces") {
  HomologyModel a(SurfaceSpec::parse("N2"));
  HomologyModel b(SurfaceSpec::parse("klein"));
  HomologyModel c(SurfaceSpec::parse("N2:b=1"));
  CHECK(same_model(a, b));
  CHECK_FALSE(same_model(a, c));
}
