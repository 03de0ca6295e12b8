#include "pinforms/veesum.hpp"

#include <iterator>
#include <stdexcept>

namespace pinforms {

namespace {

uint8_t vee_value(uint8_t s, uint8_t t) {
  return static_cast<uint8_t>((s + t + 2 * s * t) & 3);
}

}  // namespace

QForm vee(const QForm& q1, const QForm& q2) {
  if (!q1.model || !q2.model || !same_model(*q1.model, *q2.model))
    throw std::invalid_argument("vee sum needs two structures on one surface");
  const HomologyModel& m = *q1.model;
  QForm out{&m, q1.type + q2.type, std::vector<uint8_t>(q1.values.size())};
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = vee_value(q1.values[i], q2.values[i]);
  for (const auto& x : m.elements())
    if (eval(out, x) != vee_value(eval(q1, x), eval(q2, x)))
      throw std::logic_error("vee sum left the pointwise identity on " +
                             m.surface().name());
  return out;
}

QForm group_identity(const HomologyModel& model) {
  return QForm{&model, kTrivial,
               std::vector<uint8_t>(static_cast<size_t>(model.b1()), 0)};
}

std::vector<QForm> structure_group(const HomologyModel& model) {
  std::vector<QForm> out;
  for (const auto type : all_structure_types()) {
    auto forms = enumerate_forms(model, type);
    out.insert(out.end(), std::make_move_iterator(forms.begin()),
               std::make_move_iterator(forms.end()));
  }
  return out;
}

size_t structure_group_order(const HomologyModel& model) {
  size_t types = 0;
  for (const auto type : all_structure_types())
    if (admits(model, type)) ++types;
  return types << model.b1();
}

}  // namespace pinforms
