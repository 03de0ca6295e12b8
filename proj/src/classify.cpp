#include "pinforms/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pinforms {

namespace {

constexpr int kSearchBound = 4;
constexpr size_t kMaterializeBound = size_t{1} << 20;

Coeffs column_vector(const FormAutomorphism& a, int j) {
  Coeffs v(static_cast<size_t>(a.n));
  for (int i = 0; i < a.n; ++i)
    v[static_cast<size_t>(i)] = a.col[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return v;
}

// Mod-2 data of one candidate column.
struct ColumnBits {
  uint8_t mask = 0;    // v mod 2, bit i = v[i]
  uint8_t bmask = 0;   // (B v) mod 2
  uint8_t parity = 0;  // w1 . v mod 2
};

ColumnBits column_bits(const HomologyModel& m, const Coeffs& v) {
  ColumnBits out;
  const int n = m.generator_count();
  for (int i = 0; i < n; ++i) {
    const uint8_t bit = v[static_cast<size_t>(i)] & 1;
    out.mask |= static_cast<uint8_t>(bit << i);
    out.parity ^= static_cast<uint8_t>(bit & m.w1_entry(i));
    if (!bit) continue;
    for (int k = 0; k < n; ++k)
      out.bmask ^= static_cast<uint8_t>(m.pairing_entry(k, i) << k);
  }
  return out;
}

struct Search {
  const HomologyModel& m;
  int n;
  bool relation;
  std::vector<Coeffs> candidates;       // all 4^n vectors, ascending
  std::vector<ColumnBits> bits;         // parallel to candidates
  FormAutomorphism current;
  std::array<uint8_t, 4> col_mask{};    // chosen columns mod 2
  std::array<uint8_t, 4> col_bmask{};   // B * chosen columns mod 2
  std::array<uint8_t, 4> echelon{};     // Z/2 row space of chosen columns
  const std::function<void(const FormAutomorphism&)>& fn;

  bool independent(uint8_t mask) const {
    for (const auto row : echelon)
      if (row && ((mask ^ row) < mask)) mask ^= row;
    return mask != 0;
  }

  bool admissible(int j, const ColumnBits& cb) const {
    if (cb.parity != m.w1_entry(j)) return false;
    for (int k = 0; k < j; ++k) {
      const auto prod = static_cast<uint8_t>(
          std::popcount(static_cast<unsigned>(cb.mask & col_bmask[static_cast<size_t>(k)])) & 1);
      if (prod != m.pairing_entry(j, k)) return false;
    }
    if ((std::popcount(static_cast<unsigned>(cb.mask & cb.bmask)) & 1) !=
        m.pairing_entry(j, j))
      return false;
    return independent(cb.mask);
  }

  void place(int j, size_t ci) {
    for (int i = 0; i < n; ++i)
      current.col[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          candidates[ci][static_cast<size_t>(i)];
    col_mask[static_cast<size_t>(j)] = bits[ci].mask;
    col_bmask[static_cast<size_t>(j)] = bits[ci].bmask;
  }

  void descend(int j) {
    if (j == n) {
      fn(current);
      return;
    }
    const auto saved = echelon;
    if (relation && j == n - 1) {
      // The t-fixing constraint forces the last column.
      Coeffs v(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        unsigned sum = 0;
        for (int k = 0; k < n - 1; ++k)
          sum += current.col[static_cast<size_t>(k)][static_cast<size_t>(i)];
        v[static_cast<size_t>(i)] = static_cast<uint8_t>((1 - sum) & 3);
      }
      const ColumnBits cb = column_bits(m, v);
      if (admissible(j, cb)) {
        const size_t ci = index_of(v);
        place(j, ci);
        absorb(cb.mask);
        descend(j + 1);
        echelon = saved;
      }
      return;
    }
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
      if (!admissible(j, bits[ci])) continue;
      place(j, ci);
      absorb(bits[ci].mask);
      descend(j + 1);
      echelon = saved;
    }
  }

  void absorb(uint8_t mask) {
    for (auto& row : echelon) {
      if (row && ((mask ^ row) < mask)) mask ^= row;
      if (!row) {
        row = mask;
        return;
      }
    }
  }

  size_t index_of(const Coeffs& v) const {
    size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * 4 + v[static_cast<size_t>(i)];
    return idx;
  }
};

void check_searchable(const HomologyModel& m) {
  if (m.generator_count() > kSearchBound)
    throw std::domain_error("automorphism search supports at most 4 generators; " +
                            m.surface().name() + " has " +
                            std::to_string(m.generator_count()));
}

size_t form_index(const QForm& q) {
  // Position of q in enumerate_forms order: the shift bits, msb first.
  const HomologyModel& m = *q.model;
  size_t idx = 0;
  for (size_t i = 0; i < q.values.size(); ++i) {
    const uint8_t base =
        static_cast<uint8_t>(q.type.b * m.w1_entry(static_cast<int>(i)));
    idx = idx * 2 + (((q.values[i] - base) & 3) >> 1);
  }
  return idx;
}

struct DisjointSets {
  std::vector<size_t> parent;
  explicit DisjointSets(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t x, size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

FormAutomorphism identity_automorphism(const HomologyModel& model) {
  check_searchable(model);
  FormAutomorphism a;
  a.n = model.generator_count();
  for (int i = 0; i < a.n; ++i)
    a.col[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return a;
}

void verify_automorphism(const HomologyModel& model,
                         const FormAutomorphism& a) {
  check_searchable(model);
  const int n = model.generator_count();
  if (a.n != n)
    throw std::domain_error("automorphism has wrong rank for surface " +
                            model.surface().name());
  uint8_t echelon[4] = {0, 0, 0, 0};
  for (int j = 0; j < n; ++j) {
    const Coeffs v = column_vector(a, j);
    for (const auto e : v)
      if (e > 3) throw std::domain_error("automorphism entry out of Z/4 range");
    const ColumnBits cb = column_bits(model, v);
    if (cb.parity != model.w1_entry(j))
      throw std::domain_error("automorphism does not preserve w1");
    uint8_t mask = cb.mask;
    for (const auto row : echelon)
      if (row && ((mask ^ row) < mask)) mask ^= row;
    if (!mask) throw std::domain_error("automorphism is not invertible over Z/4");
    for (auto& row : echelon)
      if (!row) {
        row = mask;
        break;
      }
  }
  for (int j = 0; j < n; ++j) {
    const ColumnBits cj = column_bits(model, column_vector(a, j));
    for (int k = 0; k <= j; ++k) {
      const ColumnBits ck = column_bits(model, column_vector(a, k));
      if ((std::popcount(static_cast<unsigned>(cj.mask & ck.bmask)) & 1) !=
          model.pairing_entry(j, k))
        throw std::domain_error(
            "automorphism does not preserve the intersection pairing");
    }
  }
  if (model.has_torsion()) {
    const HClass t = model.torsion_element();
    if (apply(model, a, t) != model.canonicalize(t.v))
      throw std::domain_error("automorphism moves the two-torsion class");
  }
}

HClass apply(const HomologyModel& model, const FormAutomorphism& a,
             const HClass& x) {
  if (a.n != model.generator_count() || a.n > kSearchBound ||
      x.v.size() != static_cast<size_t>(a.n))
    throw std::invalid_argument("automorphism rank mismatch");
  Coeffs out(static_cast<size_t>(a.n), 0);
  for (int j = 0; j < a.n; ++j)
    for (int i = 0; i < a.n; ++i)
      out[static_cast<size_t>(i)] = static_cast<uint8_t>(
          (out[static_cast<size_t>(i)] +
           x.v[static_cast<size_t>(j)] * a.col[static_cast<size_t>(j)][static_cast<size_t>(i)]) &
          3);
  return model.canonicalize(std::move(out));
}

QForm apply(const FormAutomorphism& a, const QForm& q) {
  const HomologyModel& m = *q.model;
  if (a.n != m.generator_count() || a.n > kSearchBound)
    throw std::invalid_argument("automorphism rank mismatch");
  QForm out{&m, q.type, std::vector<uint8_t>(q.values.size())};
  for (int j = 0; j < a.n; ++j)
    out.values[static_cast<size_t>(j)] =
        eval(q, m.canonicalize(column_vector(a, j)));
  return out;
}

void for_each_automorphism(
    const HomologyModel& model,
    const std::function<void(const FormAutomorphism&)>& fn) {
  check_searchable(model);
  const int n = model.generator_count();
  Search s{model, n, model.has_relation(), {}, {}, {}, {}, {}, {}, fn};
  s.current.n = n;
  const size_t count = size_t{1} << (2 * n);
  s.candidates.reserve(count);
  s.bits.reserve(count);
  Coeffs v(static_cast<size_t>(n), 0);
  for (size_t ci = 0; ci < count; ++ci) {
    size_t rest = ci;
    for (int i = n - 1; i >= 0; --i) {
      v[static_cast<size_t>(i)] = static_cast<uint8_t>(rest & 3);
      rest >>= 2;
    }
    s.candidates.push_back(v);
    s.bits.push_back(column_bits(model, v));
  }
  s.descend(0);
}

std::vector<FormAutomorphism> automorphisms(const HomologyModel& model) {
  std::vector<FormAutomorphism> out;
  for_each_automorphism(model, [&](const FormAutomorphism& a) {
    if (out.size() >= kMaterializeBound)
      throw std::domain_error(
          "automorphism group too large to materialize; iterate with "
          "for_each_automorphism");
    out.push_back(a);
  });
  return out;
}

std::vector<std::vector<size_t>> orbits(const HomologyModel& model,
                                        StructureType type) {
  const auto forms = enumerate_forms(model, type);
  if (forms.empty()) return {};
  check_searchable(model);

  DisjointSets sets(forms.size());
  // The action on the form torsor is affine over Z/2: a form with shift
  // bits c maps to bits d ^ M^T c, with M the matrix mod 2 and d the
  // image bits of the base form. Distinct (M mod 2, d) pairs are few,
  // so dedupe on them and apply each action once.
  std::vector<bool> seen(size_t{1} << (20), false);
  const int n = model.generator_count();
  for_each_automorphism(model, [&](const FormAutomorphism& a) {
    uint32_t key = 0;
    for (int j = 0; j < n; ++j) {
      uint8_t colbits = 0;
      for (int i = 0; i < n; ++i)
        colbits |= static_cast<uint8_t>(
            (a.col[static_cast<size_t>(j)][static_cast<size_t>(i)] & 1) << i);
      key = (key << 4) | colbits;
    }
    const size_t d = form_index(apply(a, forms[0]));
    key = (key << 4) | static_cast<uint32_t>(d);
    if (seen[key]) return;
    seen[key] = true;
    for (size_t f = 0; f < forms.size(); ++f)
      sets.unite(f, form_index(apply(a, forms[f])));
  });

  std::vector<std::vector<size_t>> out;
  std::vector<size_t> where(forms.size(), SIZE_MAX);
  for (size_t f = 0; f < forms.size(); ++f) {
    const size_t root = sets.find(f);
    if (where[root] == SIZE_MAX) {
      where[root] = out.size();
      out.emplace_back();
    }
    out[where[root]].push_back(f);
  }
  return out;
}

std::vector<size_t> orbit_labels(const HomologyModel& model,
                                 StructureType type) {
  const auto parts = orbits(model, type);
  size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<size_t> labels(total, 0);
  for (size_t oi = 0; oi < parts.size(); ++oi)
    for (const size_t f : parts[oi]) labels[f] = oi;
  return labels;
}

uint8_t two_torsion_value(const QForm& q) {
  return eval(q, q.model->torsion_element());
}

bool cobordant(const QForm& q1, const QForm& q2) {
  if (!q1.model || !q2.model || !same_model(*q1.model, *q2.model))
    throw std::invalid_argument("cobordism compares structures on one surface");
  if (q1.type != kPinPlus || q2.type != kPinPlus)
    throw std::invalid_argument("cobordism predicate applies to pin+ forms");
  if (!q1.model->surface().closed())
    throw std::domain_error("cobordism predicate needs a closed surface");
  return two_torsion_value(q1) == two_torsion_value(q2);
}

uint8_t brown_invariant(const QForm& q) {
  const HomologyModel& m = *q.model;
  if (q.type != kPinMinus)
    throw std::domain_error("Brown invariant applies to pin- forms");
  if (!m.surface().closed())
    throw std::domain_error("Brown invariant needs a closed surface");
  const int n = m.generator_count();
  long long re = 0, im = 0;
  Coeffs v(static_cast<size_t>(n), 0);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i)
      v[static_cast<size_t>(i)] = static_cast<uint8_t>((mask >> i) & 1);
    switch (eval(q, HClass{v})) {
      case 0: ++re; break;
      case 1: ++im; break;
      case 2: --re; break;
      case 3: --im; break;
    }
  }
  if (re * re + im * im != (1LL << n))
    throw std::domain_error("Gauss sum modulus mismatch; the form is invalid");
  if (re > 0) return im > 0 ? 1 : (im == 0 ? 0 : 7);
  if (re == 0) return im > 0 ? 2 : 6;
  return im > 0 ? 3 : (im == 0 ? 4 : 5);
}

}  // namespace pinforms
