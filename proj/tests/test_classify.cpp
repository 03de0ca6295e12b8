#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pinforms/classify.hpp"
#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"
#include "pinforms/surface.hpp"

using namespace pinforms;

TEST_CASE("identity automorphism") {
  for (const char* name : {"N2", "O1", "N1:b=1"}) {
    HomologyModel m(SurfaceSpec::parse(name));
    const FormAutomorphism id = identity_automorphism(m);
    CHECK_NOTHROW(verify_automorphism(m, id));
    for (const HClass& x : m.elements()) CHECK(apply(m, id, x) == x);
    for (const QForm& q : enumerate_forms(m, kPinMinus))
      CHECK(apply(id, q) == q);
  }
}

TEST_CASE("automorphism counts on small surfaces") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  CHECK(automorphisms(n1).size() == 1);

  HomologyModel n2(SurfaceSpec::parse("N2"));
  const auto auts = automorphisms(n2);
  CHECK(auts.size() == 8);
  for (const FormAutomorphism& a : auts)
    CHECK_NOTHROW(verify_automorphism(n2, a));

  HomologyModel o1(SurfaceSpec::parse("O1"));
  CHECK(automorphisms(o1).size() == 96);
}

TEST_CASE("automorphisms preserve the structure data") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  for (const FormAutomorphism& a : automorphisms(n2)) {
    for (const HClass& x : n2.elements()) {
      CHECK(n2.w1_eval(apply(n2, a, x)) == n2.w1_eval(x));
      for (const HClass& y : n2.elements())
        CHECK(n2.pairing(apply(n2, a, x), apply(n2, a, y)) ==
              n2.pairing(x, y));
    }
    CHECK(apply(n2, a, n2.torsion_element()) == n2.torsion_element());
  }
}

TEST_CASE("invalid automorphisms are rejected") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  FormAutomorphism a = identity_automorphism(n2);
  a.col[1][1] = 0;  // collapses the second generator: not invertible
  CHECK_THROWS_AS(verify_automorphism(n2, a), std::domain_error);

  FormAutomorphism b = identity_automorphism(n2);
  b.col[0][1] = 1;  // c1 -> c1 + c2 breaks the identity pairing
  CHECK_THROWS_AS(verify_automorphism(n2, b), std::domain_error);

  // swapping a1 and b1 preserves B and w1
  HomologyModel o1(SurfaceSpec::parse("O1"));
  FormAutomorphism swap = identity_automorphism(o1);
  swap.col[0] = {0, 1, 0, 0};
  swap.col[1] = {1, 0, 0, 0};
  CHECK_NOTHROW(verify_automorphism(o1, swap));
}

TEST_CASE("orbit structure of pin+ forms on the Klein bottle") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const auto parts = orbits(n2, kPinPlus);
  REQUIRE(parts.size() == 2);
  const auto forms = enumerate_forms(n2, kPinPlus);
  const auto labels = orbit_labels(n2, kPinPlus);
  REQUIRE(labels.size() == forms.size());
  std::set<uint8_t> values;
  for (const auto& part : parts) {
    const uint8_t v = two_torsion_value(forms[part[0]]);
    for (size_t idx : part) CHECK(two_torsion_value(forms[idx]) == v);
    values.insert(v);
  }
  CHECK(values == std::set<uint8_t>{0, 2});
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = 0; j < forms.size(); ++j)
      CHECK(cobordant(forms[i], forms[j]) == (labels[i] == labels[j]));
}

TEST_CASE("orbits of the obstructed type are empty") {
  HomologyModel n3(SurfaceSpec::parse("N3"));
  CHECK(orbits(n3, kPinPlus).empty());
  CHECK(orbit_labels(n3, kPinPlus).empty());
}

TEST_CASE("two_torsion_value needs torsion") {
  HomologyModel o1(SurfaceSpec::parse("O1"));
  const QForm q{&o1, kPinPlus, {0, 0}};
  CHECK_THROWS_AS(two_torsion_value(q), std::domain_error);

  HomologyModel n2(SurfaceSpec::parse("N2"));
  const QForm p{&n2, kPinPlus, {0, 2}};
  CHECK(two_torsion_value(p) == (0 + 2 + 2 * 0) % 4);
}

TEST_CASE("cobordant rejects what it cannot compare") {
  HomologyModel n2(SurfaceSpec::parse("N2"));
  const auto pp = enumerate_forms(n2, kPinPlus);
  const auto pm = enumerate_forms(n2, kPinMinus);
  CHECK_THROWS_AS(cobordant(pp[0], pm[0]), std::invalid_argument);

  HomologyModel n2b(SurfaceSpec::parse("N2:b=1"));
  const auto open_pp = enumerate_forms(n2b, kPinPlus);
  CHECK_THROWS_AS(cobordant(open_pp[0], open_pp[1]), std::domain_error);

  HomologyModel o1(SurfaceSpec::parse("O1"));
  const auto or_pp = enumerate_forms(o1, kPinPlus);
  CHECK_THROWS_AS(cobordant(or_pp[0], or_pp[1]), std::domain_error);
}

TEST_CASE("Gauss sum invariants") {
  HomologyModel n1(SurfaceSpec::parse("N1"));
  const auto forms = enumerate_forms(n1, kPinMinus);
  REQUIRE(forms.size() == 2);
  std::multiset<int> sigma;
  for (const QForm& q : forms) sigma.insert(brown_invariant(q));
  CHECK(sigma == std::multiset<int>{1, 7});

  HomologyModel o1(SurfaceSpec::parse("O1"));
  CHECK(brown_invariant(QForm{&o1, kPinMinus, {0, 0}}) == 0);
  CHECK(brown_invariant(QForm{&o1, kPinMinus, {2, 2}}) == 4);

  // only pin- on closed surfaces carries the invariant
  CHECK_THROWS_AS(brown_invariant(QForm{&o1, kPinPlus, {0, 0}}),
                  std::domain_error);
  HomologyModel n1b(SurfaceSpec::parse("N1:b=1"));
  CHECK_THROWS_AS(brown_invariant(QForm{&n1b, kPinMinus, {1}}),
                  std::domain_error);
}

TEST_CASE("materialization refuses oversized groups") {
  HomologyModel o2(SurfaceSpec::parse("O2"));
  CHECK_THROWS_AS(automorphisms(o2), std::domain_error);
}

TEST_CASE("searchability bound") {
  HomologyModel n5(SurfaceSpec::parse("N5"));
  CHECK_THROWS_AS(automorphisms(n5), std::domain_error);
  CHECK_THROWS_AS(orbits(n5, kPinMinus), std::domain_error);
  CHECK_THROWS_AS(identity_automorphism(n5), std::domain_error);
  FormAutomorphism big;
  big.n = 5;
  CHECK_THROWS_AS(verify_automorphism(n5, big), std::domain_error);
  CHECK_THROWS_AS(apply(n5, big, HClass{Coeffs(5, 0)}), std::invalid_argument);
}
