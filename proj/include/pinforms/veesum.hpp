#pragma once

#include <vector>

#include "pinforms/forms.hpp"

namespace pinforms {

/// Vee sum of two structures on the same surface. Types add in (Z/2)^2
/// and values combine pointwise by
///   (q1 v q2)(x) = q1(x) + q2(x) + 2 q1(x) q2(x)   in Z/4,
/// which is determined by the generator values alone. The result is
/// validated against this identity on every class before returning.
/// Throws std::invalid_argument when the surfaces differ.
QForm vee(const QForm& q1, const QForm& q2);

/// Identity of the vee operation: the zero form of trivial type.
QForm group_identity(const HomologyModel& model);

/// Every structure on the surface, in a fixed order: types as listed by
/// all_structure_types, forms of each type in value-lexicographic order.
/// Under vee this is an elementary abelian 2-group; its order is the
/// number of admitted types times 2^b1.
std::vector<QForm> structure_group(const HomologyModel& model);

size_t structure_group_order(const HomologyModel& model);

}  // namespace pinforms
