#include <stdexcept>

#include "doctest.h"
#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"
#include "pinforms/surface.hpp"
#include "pinforms/veesum.hpp"

using namespace pinforms;

TEST_CASE("vee combines values by s + t + 2st") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  const QForm q1{&n1, kPinMinus, {1}};
  const QForm q3{&n1, kPinMinus, {3}};
  CHECK(vee(q1, q3).type == kTrivial);
  CHECK(vee(q1, q3).values == std::vector<uint8_t>{2});  // 1+3+2*3 = 10
  CHECK(vee(q1, q1).values == std::vector<uint8_t>{0});  // 1+1+2 = 4

  HomologyModel n2(SurfaceSpec::parse("N2"));
  const QForm a{&n2, kPinMinus, {1, 1}};
  const QForm b{&n2, kPinMinus, {1, 3}};
  const QForm sum = vee(a, b);
  CHECK(sum.type == kTrivial);
  CHECK(sum.values == std::vector<uint8_t>{0, 2});
}

TEST_CASE("vee adds types") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const QForm pm{&n2, kPinMinus, {1, 1}};
  const QForm pp{&n2, kPinPlus, {0, 0}};
  const QForm ot{&n2, kOTilde, {1, 1}};
  CHECK(vee(pm, pp).type == kOTilde);
  CHECK(vee(pm, ot).type == kPinPlus);
  CHECK(vee(pp, ot).type == kPinMinus);
  CHECK(vee(ot, ot).type == kTrivial);
}

TEST_CASE("vee requires one surface") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  HomologyModel n2b(SurfaceSpec::parse("N2:b=1"));
  const QForm a{&n2, kPinMinus, {1, 1}};
  const QForm b{&n2b, kPinMinus, {1, 1}};
  CHECK_THROWS_AS(vee(a, b), std::invalid_argument);
}

TEST_CASE("identity and involutions") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const QForm e = group_identity(n2);
  CHECK(e.type == kTrivial);
  CHECK(e.values == std::vector<uint8_t>{0, 0});
  for (StructureType t : all_structure_types()) {
    for (const QForm& q : enumerate_forms(n2, t)) {
      CHECK(vee(q, e) == q);
      CHECK(vee(q, q) == e);
    }
  }
}

TEST_CASE("structure group size") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  CHECK(structure_group(n1).size() == 4);  // two types of two forms
  CHECK(structure_group_order(n1) == 4);

  HomologyModel n2(SurfaceSpec::parse("N2"));
  CHECK(structure_group(n2).size() == 16);
  CHECK(structure_group_order(n2) == 16);

  HomologyModel o0(SurfaceSpec::parse("O0"));
  CHECK(structure_group(o0).size() == 4);  // one form per type

  HomologyModel n3(SurfaceSpec::parse("N3"));
  CHECK(structure_group_order(n3) == 16);  // 2 admitted types * 2^3
}

TEST_CASE("the group is closed under vee") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  const auto g = structure_group(n1);
  for (const QForm& x : g)
    for (const QForm& y : g) {
      const QForm s = vee(x, y);
      bool found = false;
      for (const QForm& z : g) found = found || z == s;
      CHECK(found);
    }
}
