#pragma once

#include <cstdint>
#include <vector>

#include "pinforms/structure_type.hpp"

namespace pinforms {

enum class IsoClass { cyclic4, klein4 };

/// A Z/2-extension of O_1 = {+1,-1} as an explicit finite group: a full
/// multiplication table, the projection to O_1, and the nontrivial
/// element of the central order-2 kernel.
///
/// Labeled instances use the uniformized Z/4 encoding: element ids are
/// 0..3, the identity is 0, the kernel generator is 2, and proj is the
/// parity of the id. For cyclic instances (pin-, otilde) the id is the
/// element of Z/4 itself; for Klein instances (pin+, trivial) the id
/// s + 2y encodes the pair (s, y) in O_1 x Z/2 and the law is xor.
struct FiniteExtension {
  std::vector<std::vector<uint8_t>> table;
  std::vector<int8_t> proj;  // +1 or -1 per element id
  uint8_t kernel_gen = 2;
  StructureType label;

  size_t order() const { return table.size(); }
  uint8_t compose(uint8_t x, uint8_t y) const { return table.at(x).at(y); }
  uint8_t inverse(uint8_t x) const;
};

/// The fixed order-4 representative of the type's extension class.
FiniteExtension labeled_extension(StructureType type);

/// Checks the extension invariants: associativity, identity 0, proj a
/// surjective homomorphism with kernel {0, kernel_gen} of order 2, and
/// kernel_gen central. Throws std::domain_error on violation.
void verify_extension(const FiniteExtension& g);

/// cyclic4 iff some element has order 4. Throws std::domain_error unless
/// the group has order 4. Labeled instances: cyclic4 iff label.b = 1.
IsoClass iso_class(const FiniteExtension& g);

/// G1 v G2: the fibered product {(x,y) : proj(x) = proj(y)} of order 8,
/// modulo the diagonal kernel {(0,0), (k1,k2)}. The four cosets are
/// re-encoded into the uniformized Z/4 labels by the fixed isomorphism
/// catalog (see vee_group in extensions.cpp); the result is asserted to
/// coincide with labeled_extension(label1 + label2), table and all.
/// Requires both inputs in uniformized encoding.
FiniteExtension vee_group(const FiniteExtension& g1,
                          const FiniteExtension& g2);

/// Structure value q(circle) of a group element under the type's circle
/// dictionary (one embedded circle, no self-intersections):
///   pin-: h + 2,  otilde: h,  pin+: 2(y + 1),  trivial: 2y
/// with h the cyclic element and y the Z/2 part of a Klein element.
uint8_t circle_value(StructureType type, uint8_t element);

/// Inverse of circle_value. Klein dictionaries do not see the O_1 part,
/// so it is supplied as partner_parity (the projection the partner in a
/// fibered product forces). Throws std::domain_error on an odd value for
/// a type with b = 0, which has no odd circle values.
uint8_t circle_element(StructureType type, uint8_t value,
                       uint8_t partner_parity);

/// Sum of two circle structure values of explicitly given types: decode
/// through the circle dictionaries, compose in the diagonal quotient of
/// the fibered product, re-encode under type1 + type2. Always equals
/// x + y + 2xy mod 4. Throws std::domain_error when both types have
/// b = 1 and the decoded elements project differently to O_1.
uint8_t circle_sum(StructureType type1, uint8_t x, StructureType type2,
                   uint8_t y);

/// Untyped circle sum: odd values decode as otilde, even as trivial,
/// which never conflicts. Total on all 16 pairs; equals x + y + 2xy.
uint8_t holonomy_sum(uint8_t x, uint8_t y);

}  // namespace pinforms
