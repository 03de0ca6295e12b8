#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"

namespace pinforms {

/// Z/4-linear automorphism of H1, stored column-wise (column j = image
/// of generator j; only the leading n x n block is meaningful). Valid
/// ones are invertible, preserve the intersection pairing mod 2 and w1,
/// and fix the two-torsion class exactly when the surface has one
/// (which also keeps the relation subgroup in place).
struct FormAutomorphism {
  int n = 0;
  std::array<std::array<uint8_t, 4>, 4> col{};
  auto operator<=>(const FormAutomorphism&) const = default;
};

/// Throws std::domain_error beyond the 4-generator search bound.
FormAutomorphism identity_automorphism(const HomologyModel& model);

/// Throws std::domain_error describing the first violated invariant
/// (including surfaces beyond the 4-generator search bound).
void verify_automorphism(const HomologyModel& model,
                         const FormAutomorphism& a);

/// Throws std::invalid_argument when a does not match the model's rank.
HClass apply(const HomologyModel& model, const FormAutomorphism& a,
             const HClass& x);

/// The pulled-back form q o A, again a valid form of the same type.
/// Throws std::invalid_argument when a does not match the form's rank.
QForm apply(const FormAutomorphism& a, const QForm& q);

/// Visits every automorphism in ascending column-lexicographic order.
/// Pruned depth-first search over columns; with a torsion class the
/// last column is forced by the t-fixing constraint. Throws
/// std::domain_error when the surface has more than 4 generators.
void for_each_automorphism(const HomologyModel& model,
                           const std::function<void(const FormAutomorphism&)>& fn);

/// Materialized list, ascending. Throws std::domain_error beyond the
/// 4-generator search bound or when the group exceeds 2^20 elements
/// (large orientable cases; use for_each_automorphism or orbits there).
std::vector<FormAutomorphism> automorphisms(const HomologyModel& model);

/// Orbit partition of enumerate_forms(model, type) under q -> q o A.
/// Each inner vector holds form indices ascending; outer vectors are
/// ordered by their first element. Empty when the type is obstructed.
std::vector<std::vector<size_t>> orbits(const HomologyModel& model,
                                        StructureType type);

/// Orbit id per form index, numbered by first appearance.
std::vector<size_t> orbit_labels(const HomologyModel& model,
                                 StructureType type);

/// eval(q, t) on the unique two-torsion class. Throws std::domain_error
/// when the surface has none (orientable or with boundary).
uint8_t two_torsion_value(const QForm& q);

/// Cobordism predicate for pin+ structures on a closed non-orientable
/// surface: two structures bound alike exactly when their values on
/// the two-torsion class agree.
/// Throws std::invalid_argument on type or surface mismatch and
/// std::domain_error when the surface has no two-torsion class.
bool cobordant(const QForm& q1, const QForm& q2);

/// Brown invariant sigma in Z/8 of a pin- form on a closed surface:
/// the Gauss sum over H1(F;Z/2) of i^q equals 2^(b1/2) e^(i pi sigma/4);
/// computed exactly in Z[i] with the modulus verified. Throws
/// std::domain_error on wrong type, non-closed surface, or modulus
/// mismatch (the latter cannot happen for enumerated forms).
uint8_t brown_invariant(const QForm& q);

}  // namespace pinforms
