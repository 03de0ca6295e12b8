#pragma once

#include <cstdint>
#include <vector>

#include "pinforms/homology.hpp"
#include "pinforms/structure_type.hpp"

namespace pinforms {

/// Quadratic form on H1(F;Z/4) encoding a structure of the given type.
/// Determined by its generator values; eval extends them to all classes.
///
/// A valid form of type (a,b) satisfies
///   q(x + y) = q(x) + q(y) + 2a<x,y>   in Z/4
///   q(x)     = b w1(x)                 mod 2.
struct QForm {
  const HomologyModel* model = nullptr;
  StructureType type;
  std::vector<uint8_t> values;  // q(g_i) in 0..3, one per generator

  bool operator==(const QForm& o) const {
    return same_model(*model, *o.model) && type == o.type && values == o.values;
  }
};

/// Whether the surface admits structures of this type: the obstruction
/// a w2 + b w1^2 must vanish. Fails exactly for pin+ and otilde on
/// closed non-orientable surfaces with an odd number of crosscaps.
bool admits(const HomologyModel& model, StructureType type);

/// Number of forms of this type: 2^b1 when admitted, 0 otherwise.
size_t form_count(const HomologyModel& model, StructureType type);

/// Value of q on a class, by the polarization formula on the canonical
/// representative n:
///   q(sum n_i g_i) = sum n_i q_i
///                  + 2a (sum_{i<j} n_i n_j B_ij + sum_i C(n_i,2) B_ii)
/// with C(n,2) = n(n-1)/2 taken on the integer representative.
uint8_t eval(const QForm& q, const HClass& x);

/// Checks the two form axioms exhaustively over all classes and pairs,
/// plus representative independence across the relation. Throws
/// std::domain_error describing the first violation.
void verify_form(const QForm& q);

/// All forms of this type in lexicographic order of value vectors.
/// Empty exactly when the type is obstructed. Every returned form
/// passes verify_form by construction: any generator assignment with
/// q_i = b w1(g_i) mod 2 extends to a valid form once the type is
/// admitted at all.
std::vector<QForm> enumerate_forms(const HomologyModel& model,
                                   StructureType type);

/// q + 2l for a mod-2 linear functional l given by its generator bits.
/// This is the simply transitive action making the type's forms a torsor
/// over Hom(H1; Z/2).
QForm shift(const QForm& q, const std::vector<uint8_t>& bits);

}  // namespace pinforms
