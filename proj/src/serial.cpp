#include "pinforms/serial.hpp"

#include <stdexcept>

namespace pinforms {

std::string format_form(const QForm& q) {
  std::string out(q.type.name());
  out += ":[";
  for (size_t i = 0; i < q.values.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + q.values[i]);
  }
  out += ']';
  return out;
}

QForm parse_form(const HomologyModel& model, std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("form literal needs a type prefix: " +
                                std::string(text));
  const StructureType type = StructureType::parse(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw std::invalid_argument("form values must be bracketed: " +
                                std::string(text));
  rest = rest.substr(1, rest.size() - 2);

  QForm q{&model, type, {}};
  if (!rest.empty()) {
    size_t start = 0;
    while (true) {
      const size_t comma = rest.find(',', start);
      const std::string_view item = rest.substr(
          start, comma == std::string_view::npos ? rest.size() - start
                                                 : comma - start);
      if (item.size() != 1 || item[0] < '0' || item[0] > '3')
        throw std::invalid_argument("form value must be a digit 0..3: " +
                                    std::string(text));
      q.values.push_back(static_cast<uint8_t>(item[0] - '0'));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (q.values.size() != static_cast<size_t>(model.generator_count()))
    throw std::invalid_argument(
        "form has " + std::to_string(q.values.size()) + " values but " +
        model.surface().name() + " has " +
        std::to_string(model.generator_count()) + " generators");
  return q;
}

}  // namespace pinforms
