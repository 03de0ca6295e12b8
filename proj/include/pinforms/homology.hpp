#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "pinforms/surface.hpp"

namespace pinforms {

/// Coefficient vector over Z/4, one entry per generator, entries in 0..3.
using Coeffs = std::vector<uint8_t>;

/// First homology class with Z/4 coefficients, stored as the canonical
/// coefficient vector for its coset (see HomologyModel::canonicalize).
struct HClass {
  Coeffs v;
  auto operator<=>(const HClass&) const = default;
};

/// First homology of a compact surface with Z/4 coefficients, presented
/// on a fixed generator basis together with the mod-2 intersection
/// pairing and the first Stiefel-Whitney class.
///
/// Generator conventions:
///   closed orientable genus g:    a1,b1,...,ag,bg; B the standard
///                                 symplectic pairing mod 2; w1 = 0.
///   closed non-orientable, h crosscaps:
///                                 c1,...,ch; B the identity; w1 = 1 on
///                                 every ci; one relation 2*(1,...,1),
///                                 so classes are vectors in (Z/4)^h
///                                 modulo adding (2,...,2); the torsion
///                                 class t is (1,...,1).
///   with k >= 1 boundary circles: same as above plus k-1 pairing-radical
///                                 generators d1,...,d_{k-1} (zero pairing
///                                 row, w1 = 0); no relations.
///
/// b1 always equals the generator count (2g, h, 2g+k-1 or h+k-1).
class HomologyModel {
 public:
  explicit HomologyModel(SurfaceSpec spec);
  ~HomologyModel();

  HomologyModel(const HomologyModel&) = delete;
  HomologyModel& operator=(const HomologyModel&) = delete;

  const SurfaceSpec& surface() const { return spec_; }
  int generator_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  /// Index of a generator label ("c2", "b1", "d1"); throws if unknown.
  int generator_index(std::string_view label) const;

  uint8_t pairing_entry(int i, int j) const { return pairing_[i][j]; }
  uint8_t w1_entry(int i) const { return w1_[i]; }
  int b1() const { return generator_count(); }
  uint8_t w2_eval() const { return w2_eval_; }
  uint8_t w1sq_eval() const { return w1sq_eval_; }

  /// True exactly for closed non-orientable surfaces, where the single
  /// relation 2*(1,...,1) holds and the torsion class exists.
  bool has_relation() const { return has_relation_; }
  bool has_torsion() const { return has_relation_; }
  /// The order-2 class (1,...,1); throws std::domain_error if absent.
  HClass torsion_element() const;

  /// Canonical representative of the coset of v. Without a relation this
  /// reduces entries mod 4; with the relation it additionally picks the
  /// lexicographically smaller of v and v + (2,...,2), i.e. the
  /// representative whose first entry is 0 or 1.
  HClass canonicalize(Coeffs v) const;

  HClass zero() const { return HClass{Coeffs(labels_.size(), 0)}; }
  HClass generator(int i) const;
  HClass add(const HClass& x, const HClass& y) const;
  HClass negate(const HClass& x) const;

  /// Mod-2 intersection number. Well defined on classes.
  uint8_t pairing(const HClass& x, const HClass& y) const;
  /// Value of w1 on x, in Z/2. Well defined on classes.
  uint8_t w1_eval(const HClass& x) const;

  /// All classes, sorted lexicographically by canonical vector.
  /// Count: 4^(2g) closed orientable, 4^(h-1)*2 closed non-orientable,
  /// 4^b1 with boundary.
  const std::vector<HClass>& elements() const;
  size_t element_index(const HClass& x) const;
  size_t add_index(size_t i, size_t j) const;
  uint8_t pairing_by_index(size_t i, size_t j) const;
  uint8_t w1_by_index(size_t i) const;

 private:
  struct Index;
  const Index& index() const;

  SurfaceSpec spec_;
  std::vector<std::string> labels_;
  std::vector<std::vector<uint8_t>> pairing_;
  std::vector<uint8_t> w1_;
  bool has_relation_ = false;
  uint8_t w2_eval_ = 0;
  uint8_t w1sq_eval_ = 0;

  mutable std::once_flag index_once_;
  mutable std::unique_ptr<Index> index_;
};

/// Models are interchangeable when they present the same surface.
inline bool same_model(const HomologyModel& x, const HomologyModel& y) {
  return &x == &y || x.surface() == y.surface();
}

}  // namespace pinforms
