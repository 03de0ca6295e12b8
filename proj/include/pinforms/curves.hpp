#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"

namespace pinforms {

/// One passage through a band: generator index and direction.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// Cyclic word over the generators; a component of a curve system.
using Word = std::vector<Letter>;

/// Immersed collection of circles, one cyclic word per component.
struct CurveSystem {
  std::vector<Word> words;
};

/// One-vertex ribbon (fat) graph carrying the surface: one band per
/// homology generator, attached to the vertex disk at two slots each.
/// Slot order around the disk and twists:
///   non-orientable: c1 c1 c2 c2 ... (each c band twisted),
///   orientable:     a1 b1 a1 b1 a2 b2 a2 b2 ... (untwisted),
/// then d1 d1 d2 d2 ... for the radical bands (untwisted).
struct RibbonModel {
  const HomologyModel* model = nullptr;
  std::vector<int> slots;                      // band index per slot
  std::vector<std::array<int, 2>> band_slots;  // the two slots of each band
  std::vector<uint8_t> twisted;                // per band
};

RibbonModel ribbon_model(const HomologyModel& model);

/// Holonomy cochain: a value per generator in the uniformized Z/4
/// encoding of the type's circle group. Valid when each value's parity
/// equals w1 of its generator (the O_1 projection is forced).
struct Cochain {
  std::vector<uint8_t> values;
};

/// Free and cyclic reduction; may return the empty word.
Word reduce(Word word);
bool is_reduced(const Word& word);
/// Reduces every word and drops the empty ones (trivial components).
CurveSystem reduce(CurveSystem system);

/// Signed exponent-sum vector mod 4, canonicalized.
HClass homology_class(const HomologyModel& model, const CurveSystem& system);

/// Self-intersection count of the system drawn on the ribbon model:
/// interleaving pairs of chords through the vertex disk, plus C(k,2)
/// per twisted band carrying k strands. Strand ordering convention:
/// the k strands of a band are ranked by discovery order; a strand of
/// rank r sits at sub-position r on the band's first slot and k-1-r on
/// its second. Requires reduced words.
size_t self_intersections(const RibbonModel& ribbon,
                          const CurveSystem& system);

/// Total holonomy of the system in the type's labeled circle group.
/// Per component: compose the letters (an inverse letter contributes
/// the group inverse composed with kernel^{a w1(g)}), then apply the
/// rotation correction kernel^{a r(w)} with
///   r(w) = 1 + length(w) + i({w}) + v(w)  mod 2,
///   v(w) = sum_{g<g'} l_g l_g' B_{gg'} + sum_g C(l_g,2) B_gg  mod 2,
/// where l is the unsigned passage-count vector of w. Components then
/// compose in the group.
uint8_t holonomy(const RibbonModel& ribbon, const CurveSystem& system,
                 const Cochain& phi, StructureType type);

/// q of the class realized by the system, per the type's dictionary:
///   pin-: h + 2(n+i),  otilde: h,
///   pin+: 2 (p2 h + n + i mod 2),  trivial: 2 p2 h,
/// all in Z/4, with n the component count, i the self-intersection
/// count, h the total holonomy and p2 its Z/2 part. Throws
/// std::domain_error when phi breaks the parity constraint.
uint8_t q_curve(const RibbonModel& ribbon, const CurveSystem& system,
                const Cochain& phi, StructureType type);

/// The cochain making q_curve reproduce eval(q, .) on every class:
/// inverts the dictionary on the one-letter systems {g}.
Cochain calibrate(const QForm& q);

/// Word grammar: letters separated by ',', a leading '-' inverts
/// ("c1,-c2"); components separated by ';'. Whitespace ignored.
CurveSystem parse_system(const HomologyModel& model, std::string_view text);
std::string format_system(const HomologyModel& model,
                          const CurveSystem& system);

}  // namespace pinforms
