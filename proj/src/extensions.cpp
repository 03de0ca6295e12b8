#include "pinforms/extensions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace pinforms {

namespace {

void check_z4(uint8_t v, const char* what) {
  if (v > 3)
    throw std::invalid_argument(std::string(what) + " must lie in 0..3");
}

// The fixed isomorphism from the diagonal quotient of G1 x_{O1} G2 onto
// the uniformized encoding of the label sum. Constant on cosets of
// {(0,0), (2,2)}; vee_group asserts it is a group isomorphism.
uint8_t encode_pair(const FiniteExtension& g1, const FiniteExtension& g2,
                    uint8_t x, uint8_t y) {
  const bool cyclic1 = g1.label.b != 0;
  const bool cyclic2 = g2.label.b != 0;
  if (!cyclic2) return g1.compose(x, static_cast<uint8_t>(2 * (y >> 1)));
  if (!cyclic1) return g2.compose(y, static_cast<uint8_t>(2 * (x >> 1)));
  return static_cast<uint8_t>((x & 1) + 2 * (((x - y) & 3) >> 1));
}

void require_uniformized(const FiniteExtension& g) {
  verify_extension(g);
  if (g.order() != 4 || g.kernel_gen != 2)
    throw std::invalid_argument("extension is not in uniformized encoding");
  for (uint8_t i = 0; i < 4; ++i)
    if (g.proj[i] != ((i & 1) ? -1 : +1))
      throw std::invalid_argument("extension is not in uniformized encoding");
}

}  // namespace

uint8_t FiniteExtension::inverse(uint8_t x) const {
  const auto& row = table.at(x);
  for (uint8_t y = 0; y < row.size(); ++y)
    if (row[y] == 0) return y;
  throw std::domain_error("element has no inverse in the table");
}

FiniteExtension labeled_extension(StructureType type) {
  FiniteExtension g;
  g.label = type;
  g.kernel_gen = 2;
  g.table.assign(4, std::vector<uint8_t>(4));
  g.proj.assign(4, 0);
  for (uint8_t x = 0; x < 4; ++x) {
    g.proj[x] = (x & 1) ? -1 : +1;
    for (uint8_t y = 0; y < 4; ++y)
      g.table[x][y] =
          type.b ? static_cast<uint8_t>((x + y) & 3) : static_cast<uint8_t>(x ^ y);
  }
  return g;
}

void verify_extension(const FiniteExtension& g) {
  const size_t n = g.order();
  if (n == 0 || g.proj.size() != n || g.kernel_gen >= n)
    throw std::domain_error("extension tables are malformed");
  for (const auto& row : g.table) {
    if (row.size() != n) throw std::domain_error("multiplication table is not square");
    for (const auto e : row)
      if (e >= n) throw std::domain_error("multiplication table entry out of range");
  }
  for (uint8_t x = 0; x < n; ++x)
    if (g.compose(0, x) != x || g.compose(x, 0) != x)
      throw std::domain_error("element 0 is not the identity");
  for (uint8_t x = 0; x < n; ++x)
    for (uint8_t y = 0; y < n; ++y)
      for (uint8_t z = 0; z < n; ++z)
        if (g.compose(g.compose(x, y), z) != g.compose(x, g.compose(y, z)))
          throw std::domain_error("multiplication is not associative");
  bool hit_plus = false, hit_minus = false;
  for (uint8_t x = 0; x < n; ++x) {
    if (g.proj[x] != 1 && g.proj[x] != -1)
      throw std::domain_error("projection takes a value outside O1");
    (g.proj[x] == 1 ? hit_plus : hit_minus) = true;
    for (uint8_t y = 0; y < n; ++y)
      if (g.proj[g.compose(x, y)] != g.proj[x] * g.proj[y])
        throw std::domain_error("projection is not a homomorphism");
  }
  if (!hit_plus || !hit_minus)
    throw std::domain_error("projection is not onto O1");
  for (uint8_t x = 0; x < n; ++x) {
    const bool in_kernel = x == 0 || x == g.kernel_gen;
    if ((g.proj[x] == 1) != in_kernel)
      throw std::domain_error("kernel of the projection is not {identity, kernel_gen}");
  }
  if (g.kernel_gen == 0 || g.compose(g.kernel_gen, g.kernel_gen) != 0)
    throw std::domain_error("kernel generator does not have order 2");
  for (uint8_t x = 0; x < n; ++x)
    if (g.compose(g.kernel_gen, x) != g.compose(x, g.kernel_gen))
      throw std::domain_error("kernel generator is not central");
}

IsoClass iso_class(const FiniteExtension& g) {
  if (g.order() != 4)
    throw std::domain_error("iso_class expects a group of order 4");
  for (uint8_t x = 1; x < 4; ++x)
    if (g.compose(x, x) != 0) return IsoClass::cyclic4;
  return IsoClass::klein4;
}

FiniteExtension vee_group(const FiniteExtension& g1,
                          const FiniteExtension& g2) {
  require_uniformized(g1);
  require_uniformized(g2);

  // Fibered product over O1 and its diagonal-kernel cosets {p, p*(2,2)}.
  std::vector<std::pair<uint8_t, uint8_t>> pairs;
  for (uint8_t x = 0; x < 4; ++x)
    for (uint8_t y = 0; y < 4; ++y)
      if (g1.proj[x] == g2.proj[y]) pairs.emplace_back(x, y);
  if (pairs.size() != 8)
    throw std::logic_error("fibered product does not have order 8");

  const auto mate = [&](std::pair<uint8_t, uint8_t> p) {
    return std::pair<uint8_t, uint8_t>(g1.compose(p.first, g1.kernel_gen),
                                       g2.compose(p.second, g2.kernel_gen));
  };
  std::vector<std::pair<uint8_t, uint8_t>> cosets;
  for (const auto& p : pairs)
    if (p <= mate(p)) cosets.push_back(p);
  if (cosets.size() != 4)
    throw std::logic_error("diagonal quotient does not have order 4");

  const FiniteExtension out = labeled_extension(g1.label + g2.label);

  // The catalog map must send cosets bijectively to labels 0..3,
  // independently of representatives, turning the quotient law into the
  // labeled representative's table and matching projections.
  std::array<bool, 4> seen{};
  for (const auto& p : cosets) {
    const uint8_t e = encode_pair(g1, g2, p.first, p.second);
    const auto m = mate(p);
    if (e > 3 || encode_pair(g1, g2, m.first, m.second) != e)
      throw std::logic_error("quotient encoding is not constant on cosets");
    if (seen[e]) throw std::logic_error("quotient encoding is not injective");
    seen[e] = true;
    if (out.proj[e] != g1.proj[p.first])
      throw std::logic_error("quotient encoding breaks the projection");
  }
  for (const auto& p : cosets)
    for (const auto& q : cosets) {
      const uint8_t prod = encode_pair(g1, g2, g1.compose(p.first, q.first),
                                       g2.compose(p.second, q.second));
      if (prod != out.compose(encode_pair(g1, g2, p.first, p.second),
                              encode_pair(g1, g2, q.first, q.second)))
        throw std::logic_error("quotient law disagrees with the labeled table");
    }
  return out;
}

uint8_t circle_value(StructureType type, uint8_t element) {
  check_z4(element, "group element");
  if (type.b) return type.a ? static_cast<uint8_t>((element + 2) & 3) : element;
  const uint8_t y = element >> 1;
  return static_cast<uint8_t>((2 * (y + type.a)) & 3);
}

uint8_t circle_element(StructureType type, uint8_t value,
                       uint8_t partner_parity) {
  check_z4(value, "structure value");
  if (type.b) return type.a ? static_cast<uint8_t>((value + 2) & 3) : value;
  if (value & 1)
    throw std::domain_error("type " + std::string(type.name()) +
                            " has no odd circle values");
  const uint8_t y = static_cast<uint8_t>(((value >> 1) ^ type.a) & 1);
  return static_cast<uint8_t>((partner_parity & 1) + 2 * y);
}

uint8_t circle_sum(StructureType type1, uint8_t x, StructureType type2,
                   uint8_t y) {
  check_z4(x, "structure value");
  check_z4(y, "structure value");
  uint8_t e1, e2;
  if (type1.b && type2.b) {
    e1 = circle_element(type1, x, 0);
    e2 = circle_element(type2, y, 0);
    if (((e1 ^ e2) & 1) != 0)
      throw std::domain_error("values project differently to O1; the circle "
                              "sum needs matching projections");
  } else if (type1.b) {
    e1 = circle_element(type1, x, 0);
    e2 = circle_element(type2, y, static_cast<uint8_t>(e1 & 1));
  } else if (type2.b) {
    e2 = circle_element(type2, y, 0);
    e1 = circle_element(type1, x, static_cast<uint8_t>(e2 & 1));
  } else {
    e1 = circle_element(type1, x, 0);
    e2 = circle_element(type2, y, 0);
  }
  const FiniteExtension g1 = labeled_extension(type1);
  const FiniteExtension g2 = labeled_extension(type2);
  const uint8_t result =
      circle_value(type1 + type2, encode_pair(g1, g2, e1, e2));
  if (result != static_cast<uint8_t>((x + y + 2 * x * y) & 3))
    throw std::logic_error("circle sum left the pointwise identity");
  return result;
}

uint8_t holonomy_sum(uint8_t x, uint8_t y) {
  check_z4(x, "holonomy value");
  check_z4(y, "holonomy value");
  return circle_sum((x & 1) ? kOTilde : kTrivial, x,
                    (y & 1) ? kOTilde : kTrivial, y);
}

}  // namespace pinforms
