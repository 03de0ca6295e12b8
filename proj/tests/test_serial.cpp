#include <stdexcept>

#include "doctest.h"
#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"
#include "pinforms/serial.hpp"
#include "pinforms/surface.hpp"

using namespace pinforms;

TEST_CASE("format pins the grammar") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  CHECK(format_form(QForm{&n2, kPinMinus, {1, 3}}) == "pin-:[1,3]");
  CHECK(format_form(QForm{&n2, kTrivial, {0, 2}}) == "trivial:[0,2]");

  HomologyModel o0(SurfaceSpec::parse("O0"));
  CHECK(format_form(QForm{&o0, kPinPlus, {}}) == "pin+:[]");
}

TEST_CASE("parse inverts format") {
  for (const char* name : {"N1", "N2", "O1", "O0", "N2:b=1"}) {
    HomologyModel m(SurfaceSpec::parse(name));
    for (StructureType t : all_structure_types())
      for (const QForm& q : enumerate_forms(m, t))
        CHECK(parse_form(m, format_form(q)) == q);
  }
}

TEST_CASE("malformed forms are rejected") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  CHECK_THROWS_AS(parse_form(n2, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-:[1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-:1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "spin:[1,3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-:[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-:[1,3,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-:[1,4]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form(n2, "pin-:[1,past]"), std::invalid_argument);
}

TEST_CASE("parse does not check the axioms") {
  // shape is syntax; the axioms belong to verify_form
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const QForm q = parse_form(n2, "pin-:[0,0]");  // parity-violating
  CHECK(q.values == std::vector<uint8_t>{0, 0});
  CHECK_THROWS_AS(verify_form(q), std::domain_error);
}
