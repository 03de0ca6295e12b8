#include "pinforms/forms.hpp"

#include <stdexcept>
#include <string>

namespace pinforms {

namespace {

uint8_t choose2(uint8_t n) { return static_cast<uint8_t>(n * (n - 1) / 2); }

// Polarization sum on a raw coefficient vector, before canonicalization.
uint8_t eval_raw(const QForm& q, const Coeffs& n) {
  const HomologyModel& m = *q.model;
  unsigned acc = 0;
  for (size_t i = 0; i < n.size(); ++i) {
    acc += static_cast<unsigned>(n[i]) * q.values[i];
    if (!q.type.a) continue;
    acc += 2u * choose2(n[i]) * m.pairing_entry(static_cast<int>(i),
                                                static_cast<int>(i));
    for (size_t j = i + 1; j < n.size(); ++j)
      acc += 2u * n[i] * n[j] *
             m.pairing_entry(static_cast<int>(i), static_cast<int>(j));
  }
  return static_cast<uint8_t>(acc & 3);
}

void check_shape(const QForm& q) {
  if (!q.model) throw std::invalid_argument("form has no surface model");
  if (q.values.size() != static_cast<size_t>(q.model->generator_count()))
    throw std::invalid_argument("form has wrong rank for surface " +
                                q.model->surface().name());
  for (const auto v : q.values)
    if (v > 3) throw std::invalid_argument("form value out of Z/4 range");
}

}  // namespace

bool admits(const HomologyModel& model, StructureType type) {
  const unsigned obstruction =
      type.a * model.w2_eval() + type.b * model.w1sq_eval();
  return (obstruction & 1) == 0;
}

size_t form_count(const HomologyModel& model, StructureType type) {
  if (!admits(model, type)) return 0;
  return size_t{1} << model.b1();
}

uint8_t eval(const QForm& q, const HClass& x) {
  check_shape(q);
  return eval_raw(q, q.model->canonicalize(x.v).v);
}

void verify_form(const QForm& q) {
  check_shape(q);
  const HomologyModel& m = *q.model;
  for (size_t i = 0; i < q.values.size(); ++i)
    if (((q.values[i] ^ (q.type.b * m.w1_entry(static_cast<int>(i)))) & 1) != 0)
      throw std::domain_error(
          "form of type " + std::string(q.type.name()) + " on " +
          m.surface().name() + " breaks the parity constraint at generator " +
          m.generator_labels()[i]);

  const auto& els = m.elements();
  if (m.has_relation()) {
    // Representative independence: both lifts of a class must agree.
    Coeffs shifted(q.values.size());
    for (const auto& x : els) {
      for (size_t i = 0; i < shifted.size(); ++i)
        shifted[i] = static_cast<uint8_t>((x.v[i] + 2) & 3);
      if (eval_raw(q, x.v) != eval_raw(q, shifted))
        throw std::domain_error("form of type " + std::string(q.type.name()) +
                                " on " + m.surface().name() +
                                " is not constant on a relation coset");
    }
  }
  std::vector<uint8_t> vals(els.size());
  for (size_t i = 0; i < els.size(); ++i) {
    vals[i] = eval_raw(q, els[i].v);
    if (((vals[i] & 1) ^ (q.type.b & m.w1_by_index(i))) != 0)
      throw std::domain_error("form of type " + std::string(q.type.name()) +
                              " on " + m.surface().name() +
                              " breaks the parity constraint on a class");
  }
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j) {
      const uint8_t expect = static_cast<uint8_t>(
          (vals[i] + vals[j] + 2 * q.type.a * m.pairing_by_index(i, j)) & 3);
      if (vals[m.add_index(i, j)] != expect)
        throw std::domain_error("form of type " + std::string(q.type.name()) +
                                " on " + m.surface().name() +
                                " breaks the quadratic refinement identity");
    }
}

std::vector<QForm> enumerate_forms(const HomologyModel& model,
                                   StructureType type) {
  std::vector<QForm> out;
  if (!admits(model, type)) return out;
  const int n = model.b1();
  out.reserve(size_t{1} << n);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    QForm q{&model, type, std::vector<uint8_t>(static_cast<size_t>(n))};
    for (int i = 0; i < n; ++i) {
      const uint8_t base = static_cast<uint8_t>(type.b * model.w1_entry(i));
      const uint8_t bit = (mask >> (n - 1 - i)) & 1;
      q.values[static_cast<size_t>(i)] = static_cast<uint8_t>(base + 2 * bit);
    }
    out.push_back(std::move(q));
  }
  return out;
}

QForm shift(const QForm& q, const std::vector<uint8_t>& bits) {
  check_shape(q);
  if (bits.size() != q.values.size())
    throw std::invalid_argument("functional has wrong rank for surface " +
                                q.model->surface().name());
  QForm out = q;
  for (size_t i = 0; i < bits.size(); ++i)
    out.values[i] = static_cast<uint8_t>((q.values[i] + 2 * (bits[i] & 1)) & 3);
  return out;
}

}  // namespace pinforms
