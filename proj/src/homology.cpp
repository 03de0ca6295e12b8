#include "pinforms/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinforms {

namespace {

// Table building stays affordable up to this many classes; beyond it the
// indexed lookups fall back to direct computation.
constexpr size_t kTableLimit = 4096;

void check_size(const HomologyModel& m, const HClass& x) {
  if (x.v.size() != static_cast<size_t>(m.generator_count()))
    throw std::invalid_argument("homology class has wrong rank for surface " +
                                m.surface().name());
}

}  // namespace

struct HomologyModel::Index {
  std::vector<HClass> elements;
  // add_table[i * n + j] = index of elements[i] + elements[j]; empty when
  // the element count exceeds kTableLimit.
  std::vector<uint32_t> add_table;
  std::vector<uint8_t> pair_table;
  std::vector<uint8_t> w1_table;
};

HomologyModel::~HomologyModel() = default;

HomologyModel::HomologyModel(SurfaceSpec spec) : spec_(spec) {
  if (!spec_.orientable && spec_.genus < 1)
    throw std::domain_error("non-orientable surface needs at least one crosscap");
  if (spec_.orientable) {
    for (int i = 1; i <= spec_.genus; ++i) {
      labels_.push_back("a" + std::to_string(i));
      labels_.push_back("b" + std::to_string(i));
    }
  } else {
    for (int i = 1; i <= spec_.genus; ++i)
      labels_.push_back("c" + std::to_string(i));
  }
  for (int i = 1; i < spec_.boundary; ++i)
    labels_.push_back("d" + std::to_string(i));

  const int n = generator_count();
  pairing_.assign(n, std::vector<uint8_t>(n, 0));
  w1_.assign(n, 0);
  if (spec_.orientable) {
    for (int i = 0; i + 1 < 2 * spec_.genus; i += 2)
      pairing_[i][i + 1] = pairing_[i + 1][i] = 1;
  } else {
    for (int i = 0; i < spec_.genus; ++i) {
      pairing_[i][i] = 1;
      w1_[i] = 1;
    }
  }

  has_relation_ = spec_.closed() && !spec_.orientable;
  if (has_relation_) {
    w2_eval_ = static_cast<uint8_t>(spec_.genus % 2);
    w1sq_eval_ = w2_eval_;
  }
}

int HomologyModel::generator_index(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator '" + std::string(label) +
                              "' on surface " + spec_.name());
}

HClass HomologyModel::torsion_element() const {
  if (!has_relation_)
    throw std::domain_error("surface " + spec_.name() +
                            " has no two-torsion class");
  return HClass{Coeffs(labels_.size(), 1)};
}

HClass HomologyModel::canonicalize(Coeffs v) const {
  if (v.size() != labels_.size())
    throw std::invalid_argument("coefficient vector has wrong rank for surface " +
                                spec_.name());
  for (auto& e : v) e = static_cast<uint8_t>(e & 3);
  if (has_relation_ && v[0] >= 2)
    for (auto& e : v) e = static_cast<uint8_t>((e + 2) & 3);
  return HClass{std::move(v)};
}

HClass HomologyModel::generator(int i) const {
  Coeffs v(labels_.size(), 0);
  v.at(static_cast<size_t>(i)) = 1;
  return HClass{std::move(v)};
}

HClass HomologyModel::add(const HClass& x, const HClass& y) const {
  check_size(*this, x);
  check_size(*this, y);
  Coeffs v(x.v.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = static_cast<uint8_t>((x.v[i] + y.v[i]) & 3);
  return canonicalize(std::move(v));
}

HClass HomologyModel::negate(const HClass& x) const {
  check_size(*this, x);
  Coeffs v(x.v.size());
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = static_cast<uint8_t>((4 - x.v[i]) & 3);
  return canonicalize(std::move(v));
}

uint8_t HomologyModel::pairing(const HClass& x, const HClass& y) const {
  check_size(*this, x);
  check_size(*this, y);
  unsigned acc = 0;
  for (size_t i = 0; i < x.v.size(); ++i) {
    if (!(x.v[i] & 1)) continue;
    for (size_t j = 0; j < y.v.size(); ++j)
      acc += static_cast<unsigned>(y.v[j] & 1) & pairing_[i][j];
  }
  return static_cast<uint8_t>(acc & 1);
}

uint8_t HomologyModel::w1_eval(const HClass& x) const {
  check_size(*this, x);
  unsigned acc = 0;
  for (size_t i = 0; i < x.v.size(); ++i) acc += (x.v[i] & 1) & w1_[i];
  return static_cast<uint8_t>(acc & 1);
}

const HomologyModel::Index& HomologyModel::index() const {
  std::call_once(index_once_, [this] {
    auto idx = std::make_unique<Index>();
    const size_t n = labels_.size();
    // Canonical vectors in lexicographic order: every entry ranges over
    // 0..3 except, with the relation, the first one ranges over 0..1.
    Coeffs v(n, 0);
    while (true) {
      idx->elements.push_back(HClass{v});
      size_t i = n;
      bool advanced = false;
      while (i > 0) {
        --i;
        const uint8_t limit = (has_relation_ && i == 0) ? 1 : 3;
        if (v[i] < limit) {
          ++v[i];
          std::fill(v.begin() + static_cast<long>(i) + 1, v.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    const size_t count = idx->elements.size();
    idx->w1_table.resize(count);
    for (size_t i = 0; i < count; ++i)
      idx->w1_table[i] = w1_eval(idx->elements[i]);
    if (count <= kTableLimit) {
      idx->add_table.resize(count * count);
      idx->pair_table.resize(count * count);
      for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) {
          const HClass s = add(idx->elements[i], idx->elements[j]);
          const auto it = std::lower_bound(idx->elements.begin(),
                                           idx->elements.end(), s);
          idx->add_table[i * count + j] =
              static_cast<uint32_t>(it - idx->elements.begin());
          idx->pair_table[i * count + j] =
              pairing(idx->elements[i], idx->elements[j]);
        }
    }
    index_ = std::move(idx);
  });
  return *index_;
}

const std::vector<HClass>& HomologyModel::elements() const {
  return index().elements;
}

size_t HomologyModel::element_index(const HClass& x) const {
  const auto& els = index().elements;
  const HClass c = canonicalize(x.v);
  const auto it = std::lower_bound(els.begin(), els.end(), c);
  if (it == els.end() || *it != c)
    throw std::invalid_argument("class is not an element of H1 of " +
                                spec_.name());
  return static_cast<size_t>(it - els.begin());
}

size_t HomologyModel::add_index(size_t i, size_t j) const {
  const auto& idx = index();
  const size_t count = idx.elements.size();
  if (!idx.add_table.empty()) return idx.add_table[i * count + j];
  return element_index(add(idx.elements.at(i), idx.elements.at(j)));
}

uint8_t HomologyModel::pairing_by_index(size_t i, size_t j) const {
  const auto& idx = index();
  if (!idx.pair_table.empty()) return idx.pair_table[i * idx.elements.size() + j];
  return pairing(idx.elements.at(i), idx.elements.at(j));
}

uint8_t HomologyModel::w1_by_index(size_t i) const {
  return index().w1_table.at(i);
}

}  // namespace pinforms
