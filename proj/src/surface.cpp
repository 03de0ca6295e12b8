#include "pinforms/surface.hpp"

#include <cctype>
#include <stdexcept>

namespace pinforms {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 6) return false;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::string SurfaceSpec::name() const {
  std::string s = orientable ? "O" : "N";
  s += std::to_string(genus);
  if (boundary > 0) s += ":b=" + std::to_string(boundary);
  return s;
}

SurfaceSpec SurfaceSpec::parse(std::string_view text) {
  std::string_view head = text;
  std::string_view tail;
  if (auto pos = text.find(':'); pos != std::string_view::npos) {
    head = text.substr(0, pos);
    tail = text.substr(pos + 1);
  }

  SurfaceSpec spec;
  if (head == "sphere") {
    spec = {true, 0, 0};
  } else if (head == "torus") {
    spec = {true, 1, 0};
  } else if (head == "rp2") {
    spec = {false, 1, 0};
  } else if (head == "klein") {
    spec = {false, 2, 0};
  } else if (!head.empty() && (head[0] == 'O' || head[0] == 'N')) {
    spec.orientable = head[0] == 'O';
    if (!parse_int(head.substr(1), spec.genus))
      throw std::invalid_argument("bad surface spec: " + std::string(text));
  } else {
    throw std::invalid_argument("bad surface spec: " + std::string(text));
  }

  if (!tail.empty()) {
    if (tail.substr(0, 2) != "b=" || !parse_int(tail.substr(2), spec.boundary))
      throw std::invalid_argument("bad surface spec: " + std::string(text));
  }

  if (!spec.orientable && spec.genus == 0)
    throw std::domain_error("non-orientable surface needs at least one crosscap");
  return spec;
}

}  // namespace pinforms
