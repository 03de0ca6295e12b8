#include "pinforms/curves.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pinforms/extensions.hpp"

namespace pinforms {

namespace {

void check_letters(const HomologyModel& m, const CurveSystem& s) {
  for (const auto& w : s.words)
    for (const auto& l : w) {
      if (l.gen < 0 || l.gen >= m.generator_count())
        throw std::invalid_argument("curve word uses an unknown generator");
      if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("curve letter sign must be +1 or -1");
    }
}

void check_reduced(const CurveSystem& s) {
  for (const auto& w : s.words)
    if (!is_reduced(w))
      throw std::invalid_argument("curve system is not reduced");
}

// Unsigned passage counts per generator for one word.
std::vector<size_t> passage_counts(const HomologyModel& m, const Word& w) {
  std::vector<size_t> counts(static_cast<size_t>(m.generator_count()), 0);
  for (const auto& l : w) ++counts[static_cast<size_t>(l.gen)];
  return counts;
}

}  // namespace

RibbonModel ribbon_model(const HomologyModel& model) {
  RibbonModel r;
  r.model = &model;
  const SurfaceSpec& spec = model.surface();
  const int n = model.generator_count();
  r.band_slots.assign(static_cast<size_t>(n), {0, 0});
  r.twisted.assign(static_cast<size_t>(n), 0);
  if (spec.orientable) {
    for (int i = 0; i + 1 < 2 * spec.genus; i += 2) {
      r.slots.push_back(i);      // a
      r.slots.push_back(i + 1);  // b
      r.slots.push_back(i);
      r.slots.push_back(i + 1);
    }
  } else {
    for (int i = 0; i < spec.genus; ++i) {
      r.slots.push_back(i);
      r.slots.push_back(i);
      r.twisted[static_cast<size_t>(i)] = 1;
    }
  }
  const int radical_base = spec.orientable ? 2 * spec.genus : spec.genus;
  for (int i = radical_base; i < n; ++i) {
    r.slots.push_back(i);
    r.slots.push_back(i);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (size_t pos = 0; pos < r.slots.size(); ++pos) {
    const auto band = static_cast<size_t>(r.slots[pos]);
    r.band_slots[band][seen[band] ? 1 : 0] = static_cast<int>(pos);
    seen[band] = true;
  }
  return r;
}

Word reduce(Word word) {
  bool changed = true;
  while (changed && word.size() >= 2) {
    changed = false;
    for (size_t i = 0; i < word.size(); ++i) {
      const size_t j = (i + 1) % word.size();
      if (i == j) break;
      if (word[i].gen == word[j].gen && word[i].sign == -word[j].sign) {
        word.erase(word.begin() + static_cast<long>(std::max(i, j)));
        word.erase(word.begin() + static_cast<long>(std::min(i, j)));
        changed = true;
        break;
      }
    }
  }
  return word;
}

bool is_reduced(const Word& word) {
  if (word.size() < 2) return true;
  for (size_t i = 0; i < word.size(); ++i) {
    const size_t j = (i + 1) % word.size();
    if (word[i].gen == word[j].gen && word[i].sign == -word[j].sign)
      return false;
  }
  return true;
}

CurveSystem reduce(CurveSystem system) {
  CurveSystem out;
  for (auto& w : system.words) {
    Word r = reduce(std::move(w));
    if (!r.empty()) out.words.push_back(std::move(r));
  }
  return out;
}

HClass homology_class(const HomologyModel& model, const CurveSystem& system) {
  check_letters(model, system);
  Coeffs v(static_cast<size_t>(model.generator_count()), 0);
  for (const auto& w : system.words)
    for (const auto& l : w)
      v[static_cast<size_t>(l.gen)] =
          static_cast<uint8_t>((v[static_cast<size_t>(l.gen)] + l.sign + 4) & 3);
  return model.canonicalize(std::move(v));
}

size_t self_intersections(const RibbonModel& ribbon,
                          const CurveSystem& system) {
  const HomologyModel& m = *ribbon.model;
  check_letters(m, system);
  check_reduced(system);

  // Rank every passage by discovery order within its band.
  std::vector<size_t> total(static_cast<size_t>(m.generator_count()), 0);
  std::vector<std::vector<size_t>> ranks;
  for (const auto& w : system.words) {
    ranks.emplace_back();
    for (const auto& l : w)
      ranks.back().push_back(total[static_cast<size_t>(l.gen)]++);
  }

  // Endpoint of a strand at one of its band's slots, as a point on the
  // vertex-disk boundary: (slot, sub-position), globally ordered.
  using Point = std::pair<int, int>;
  const auto endpoint = [&](int gen, size_t rank, int side) {
    const auto g = static_cast<size_t>(gen);
    const int sub = side == 0 ? static_cast<int>(rank)
                              : static_cast<int>(total[g] - 1 - rank);
    return Point{ribbon.band_slots[g][static_cast<size_t>(side)], sub};
  };

  std::vector<std::pair<Point, Point>> chords;
  for (size_t wi = 0; wi < system.words.size(); ++wi) {
    const auto& w = system.words[wi];
    for (size_t j = 0; j < w.size(); ++j) {
      const auto& cur = w[j];
      const auto& nxt = w[(j + 1) % w.size()];
      const size_t nrank = ranks[wi][(j + 1) % w.size()];
      const Point exit = endpoint(cur.gen, ranks[wi][j], cur.sign > 0 ? 1 : 0);
      const Point entry = endpoint(nxt.gen, nrank, nxt.sign > 0 ? 0 : 1);
      chords.emplace_back(std::min(exit, entry), std::max(exit, entry));
    }
  }

  size_t count = 0;
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      const bool a_inside =
          chords[i].first < chords[j].first && chords[j].first < chords[i].second;
      const bool b_inside =
          chords[i].first < chords[j].second && chords[j].second < chords[i].second;
      if (a_inside != b_inside) ++count;
    }
  for (size_t g = 0; g < total.size(); ++g)
    if (ribbon.twisted[g]) count += total[g] * (total[g] - 1) / 2;
  return count;
}

uint8_t holonomy(const RibbonModel& ribbon, const CurveSystem& system,
                 const Cochain& phi, StructureType type) {
  const HomologyModel& m = *ribbon.model;
  check_letters(m, system);
  check_reduced(system);
  if (phi.values.size() != static_cast<size_t>(m.generator_count()))
    throw std::invalid_argument("cochain has wrong rank for surface " +
                                m.surface().name());

  const FiniteExtension group = labeled_extension(type);
  uint8_t acc_total = 0;
  for (const auto& w : system.words) {
    if (w.empty()) continue;
    uint8_t acc = 0;
    for (const auto& l : w) {
      uint8_t x = phi.values[static_cast<size_t>(l.gen)];
      if (l.sign < 0) {
        x = group.inverse(x);
        if (type.a && m.w1_entry(l.gen)) x = group.compose(x, group.kernel_gen);
      }
      acc = group.compose(acc, x);
    }
    if (type.a) {
      const auto counts = passage_counts(m, w);
      size_t v = 0;
      for (size_t g = 0; g < counts.size(); ++g) {
        v += counts[g] * (counts[g] - (counts[g] ? 1 : 0)) / 2 *
             m.pairing_entry(static_cast<int>(g), static_cast<int>(g));
        for (size_t g2 = g + 1; g2 < counts.size(); ++g2)
          v += counts[g] * counts[g2] *
               m.pairing_entry(static_cast<int>(g), static_cast<int>(g2));
      }
      const size_t i_self =
          self_intersections(ribbon, CurveSystem{{w}});
      if ((1 + w.size() + i_self + v) & 1)
        acc = group.compose(acc, group.kernel_gen);
    }
    acc_total = group.compose(acc_total, acc);
  }
  return acc_total;
}

uint8_t q_curve(const RibbonModel& ribbon, const CurveSystem& system,
                const Cochain& phi, StructureType type) {
  const HomologyModel& m = *ribbon.model;
  if (phi.values.size() != static_cast<size_t>(m.generator_count()))
    throw std::invalid_argument("cochain has wrong rank for surface " +
                                m.surface().name());
  for (size_t g = 0; g < phi.values.size(); ++g) {
    if (phi.values[g] > 3)
      throw std::invalid_argument("cochain value out of Z/4 range");
    if (((phi.values[g] ^ m.w1_entry(static_cast<int>(g))) & 1) != 0)
      throw std::domain_error(
          "cochain parity differs from w1 at generator " +
          m.generator_labels()[g]);
  }

  CurveSystem live;
  for (const auto& w : system.words)
    if (!w.empty()) live.words.push_back(w);
  check_letters(m, live);
  check_reduced(live);

  const size_t n = live.words.size();
  const size_t i = self_intersections(ribbon, live);
  const uint8_t h = holonomy(ribbon, live, phi, type);
  if (type.b)
    return type.a ? static_cast<uint8_t>((h + 2 * (n + i)) & 3) : h;
  const size_t p2h = h >> 1;
  if (type.a) return static_cast<uint8_t>(2 * ((p2h + n + i) & 1));
  return static_cast<uint8_t>(2 * (p2h & 1));
}

Cochain calibrate(const QForm& q) {
  const HomologyModel& m = *q.model;
  const RibbonModel ribbon = ribbon_model(m);
  Cochain phi;
  phi.values.resize(q.values.size());
  for (size_t g = 0; g < q.values.size(); ++g) {
    const CurveSystem one{{Word{Letter{static_cast<int>(g), 1}}}};
    const size_t i0 = self_intersections(ribbon, one);
    const uint8_t qg = q.values[g];
    const uint8_t w1g = m.w1_entry(static_cast<int>(g));
    if (q.type.b) {
      phi.values[g] = q.type.a
                          ? static_cast<uint8_t>((qg + 2 * (1 + i0)) & 3)
                          : qg;
    } else {
      const size_t p2 = q.type.a ? ((qg >> 1) + 1 + i0) & 1 : (qg >> 1) & 1;
      phi.values[g] = static_cast<uint8_t>(w1g + 2 * p2);
    }
  }
  return phi;
}

CurveSystem parse_system(const HomologyModel& model, std::string_view text) {
  CurveSystem out;
  Word word;
  std::string token;
  const auto flush_token = [&] {
    if (token.empty())
      throw std::invalid_argument("empty letter in curve word");
    Letter l;
    size_t start = 0;
    if (token[0] == '-') {
      l.sign = -1;
      start = 1;
    }
    l.gen = model.generator_index(token.substr(start));
    word.push_back(l);
    token.clear();
  };
  const auto flush_word = [&] {
    if (!token.empty()) flush_token();
    if (word.empty()) throw std::invalid_argument("empty curve word");
    out.words.push_back(std::move(word));
    word.clear();
  };
  for (const char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == ',') {
      flush_token();
    } else if (c == ';') {
      flush_word();
    } else {
      token += c;
    }
  }
  if (!token.empty() || !word.empty()) flush_word();
  return out;
}

std::string format_system(const HomologyModel& model,
                          const CurveSystem& system) {
  std::string out;
  for (size_t wi = 0; wi < system.words.size(); ++wi) {
    if (wi) out += ';';
    for (size_t j = 0; j < system.words[wi].size(); ++j) {
      if (j) out += ',';
      const auto& l = system.words[wi][j];
      if (l.sign < 0) out += '-';
      out += model.generator_labels()[static_cast<size_t>(l.gen)];
    }
  }
  return out;
}

}  // namespace pinforms
