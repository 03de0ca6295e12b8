#include "pinforms/selftest.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinforms/classify.hpp"
#include "pinforms/cli.hpp"
#include "pinforms/curves.hpp"
#include "pinforms/extensions.hpp"
#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"
#include "pinforms/serial.hpp"
#include "pinforms/structure_type.hpp"
#include "pinforms/surface.hpp"
#include "pinforms/veesum.hpp"

namespace pinforms {
namespace {

constexpr const char* kFamilyNames[] = {"O0", "O1", "O2",     "N1",
                                        "N2", "N3", "N4",     "N1:b=1",
                                        "O0:b=2",   "O1:b=1", "N2:b=1"};

const std::vector<std::unique_ptr<HomologyModel>>& family() {
  static const auto models = [] {
    std::vector<std::unique_ptr<HomologyModel>> v;
    for (const char* name : kFamilyNames)
      v.push_back(std::make_unique<HomologyModel>(SurfaceSpec::parse(name)));
    return v;
  }();
  return models;
}

const HomologyModel& member(const std::string& name) {
  for (const auto& m : family())
    if (m->surface().name() == name) return *m;
  throw std::logic_error("not in the reference family: " + name);
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome pass() { return {}; }

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string at(const HomologyModel& m, StructureType t) {
  return m.surface().name() + " " + std::string(t.name());
}

// ---- criterion 1: form counts and the admissibility pattern ------------

Outcome c1_counting() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    for (StructureType t : all_structure_types()) {
      const bool adm = admits(m, t);
      const size_t expect = adm ? size_t(1) << m.b1() : 0;
      if (form_count(m, t) != expect)
        return fail(at(m, t) + ": form_count " +
                    std::to_string(form_count(m, t)) + ", expected " +
                    std::to_string(expect));
      if (enumerate_forms(m, t).size() != expect)
        return fail(at(m, t) + ": enumerate_forms size mismatch");
      const SurfaceSpec& s = m.surface();
      const bool odd_closed_crosscaps =
          !s.orientable && s.closed() && s.genus % 2 == 1;
      const bool should_vanish = odd_closed_crosscaps && t.a != t.b;
      if (adm == should_vanish)
        return fail(at(m, t) + ": admissibility should be " +
                    (should_vanish ? "false" : "true"));
    }
  }
  return pass();
}

// ---- criterion 2: every enumerated form satisfies the axioms -----------

Outcome c2_axioms() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    for (StructureType t : all_structure_types()) {
      for (const QForm& q : enumerate_forms(m, t)) {
        try {
          verify_form(q);
        } catch (const std::exception& e) {
          return fail(at(m, t) + " " + format_form(q) + ": " + e.what());
        }
      }
    }
  }
  return pass();
}

// ---- criterion 3: pin- factors through mod 2, otilde is linear ---------

Outcome c3_factoring() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    const auto& els = m.elements();
    const size_t count = els.size();
    std::vector<size_t> twice(count);
    for (size_t j = 0; j < count; ++j) twice[j] = m.add_index(j, j);
    for (const QForm& q : enumerate_forms(m, kPinMinus)) {
      std::vector<uint8_t> vals(count);
      for (size_t i = 0; i < count; ++i) vals[i] = eval(q, els[i]);
      for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
          if (vals[m.add_index(i, twice[j])] != vals[i])
            return fail(at(m, kPinMinus) + " " + format_form(q) +
                        ": q(x + 2y) != q(x)");
    }
    for (const QForm& q : enumerate_forms(m, kOTilde)) {
      std::vector<uint8_t> vals(count);
      for (size_t i = 0; i < count; ++i) vals[i] = eval(q, els[i]);
      for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
          if (vals[m.add_index(i, j)] != ((vals[i] + vals[j]) & 3))
            return fail(at(m, kOTilde) + " " + format_form(q) +
                        ": not linear");
    }
  }
  return pass();
}

// ---- criterion 4: vee equals the pointwise formula on every element ----

Outcome c4_vee_pointwise() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    std::vector<QForm> all;
    for (StructureType t : all_structure_types())
      for (QForm& q : enumerate_forms(m, t)) all.push_back(std::move(q));
    const auto& els = m.elements();
    for (const QForm& q1 : all) {
      for (const QForm& q2 : all) {
        const QForm out = vee(q1, q2);
        if (out.type != q1.type + q2.type)
          return fail(m.surface().name() + ": vee type is not the sum for " +
                      format_form(q1) + ", " + format_form(q2));
        for (const HClass& x : els) {
          const int s = eval(q1, x), t = eval(q2, x);
          if (eval(out, x) != ((s + t + 2 * s * t) & 3))
            return fail(m.surface().name() + ": vee(" + format_form(q1) +
                        ", " + format_form(q2) + ") misses s+t+2st");
        }
      }
    }
  }
  return pass();
}

// ---- criterion 5: the structure group is an elementary abelian 2-group -

Outcome c5_group_axioms() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    const std::string surf = m.surface().name();
    const std::vector<QForm> g = structure_group(m);
    const size_t n = g.size();
    if (n != structure_group_order(m))
      return fail(surf + ": group size " + std::to_string(n) +
                  " != structure_group_order " +
                  std::to_string(structure_group_order(m)));
    auto idx_of = [&](const QForm& q) -> size_t {
      for (size_t i = 0; i < n; ++i)
        if (g[i] == q) return i;
      return n;
    };
    std::vector<std::vector<size_t>> tab(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        tab[i][j] = idx_of(vee(g[i], g[j]));
        if (tab[i][j] == n)
          return fail(surf + ": vee left the group (closure)");
      }
    const size_t e = idx_of(group_identity(m));
    if (e == n) return fail(surf + ": identity not in the group");
    for (size_t i = 0; i < n; ++i) {
      if (tab[e][i] != i || tab[i][e] != i)
        return fail(surf + ": identity law fails at " + format_form(g[i]));
      if (tab[i][i] != e)
        return fail(surf + ": " + format_form(g[i]) + " is not an involution");
      for (size_t j = i; j < n; ++j)
        if (tab[i][j] != tab[j][i]) return fail(surf + ": not commutative");
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
          if (tab[tab[i][j]][k] != tab[i][tab[j][k]])
            return fail(surf + ": associativity fails");
    // vee with the trivial form 2c is the shift by the functional c
    for (const QForm& q : g) {
      for (const QForm& t : g) {
        if (t.type != kTrivial) continue;
        std::vector<uint8_t> bits(t.values.size());
        for (size_t i = 0; i < bits.size(); ++i) bits[i] = t.values[i] >> 1;
        if (!(vee(q, t) == shift(q, bits)))
          return fail(surf + ": vee(" + format_form(q) + ", " +
                      format_form(t) + ") != shift");
      }
    }
  }
  return pass();
}

// ---- criterion 6: circle groups and the label arithmetic ---------------

Outcome c6_circle() {
  for (StructureType t : all_structure_types()) {
    const FiniteExtension g = labeled_extension(t);
    try {
      verify_extension(g);
    } catch (const std::exception& e) {
      return fail("labeled_extension(" + std::string(t.name()) + "): " +
                  e.what());
    }
    const IsoClass want = t.b ? IsoClass::cyclic4 : IsoClass::klein4;
    if (iso_class(g) != want)
      return fail("labeled_extension(" + std::string(t.name()) +
                  "): wrong isomorphism class");
  }
  for (StructureType t1 : all_structure_types()) {
    for (StructureType t2 : all_structure_types()) {
      FiniteExtension out;
      try {
        out = vee_group(labeled_extension(t1), labeled_extension(t2));
        verify_extension(out);
      } catch (const std::exception& e) {
        return fail(std::string(t1.name()) + " v " + std::string(t2.name()) +
                    ": " + e.what());
      }
      if (!(out.label == t1 + t2))
        return fail(std::string(t1.name()) + " v " + std::string(t2.name()) +
                    ": label is not the sum");
      const IsoClass want = out.label.b ? IsoClass::cyclic4 : IsoClass::klein4;
      if (iso_class(out) != want)
        return fail(std::string(t1.name()) + " v " + std::string(t2.name()) +
                    ": wrong isomorphism class");
    }
  }
  if (iso_class(vee_group(labeled_extension(kPinMinus),
                          labeled_extension(kPinMinus))) != IsoClass::klein4)
    return fail("pin- v pin- is not the Klein four-group");
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (holonomy_sum(uint8_t(x), uint8_t(y)) !=
          uint8_t((x + y + 2 * x * y) & 3))
        return fail("holonomy_sum(" + std::to_string(x) + ", " +
                    std::to_string(y) + ") != x + y + 2xy");
  for (StructureType t1 : all_structure_types()) {
    for (StructureType t2 : all_structure_types()) {
      for (int x = 0; x < 4; ++x) {
        if (t1.b == 0 && (x & 1)) continue;
        for (int y = 0; y < 4; ++y) {
          if (t2.b == 0 && (y & 1)) continue;
          const bool clash = t1.b == 1 && t2.b == 1 && ((x ^ y) & 1);
          if (clash) {
            try {
              circle_sum(t1, uint8_t(x), t2, uint8_t(y));
              return fail("circle_sum accepted a parity clash");
            } catch (const std::domain_error&) {
            }
          } else if (circle_sum(t1, uint8_t(x), t2, uint8_t(y)) !=
                     uint8_t((x + y + 2 * x * y) & 3)) {
            return fail("circle_sum(" + std::string(t1.name()) + " " +
                        std::to_string(x) + ", " + std::string(t2.name()) +
                        " " + std::to_string(y) + ") != x + y + 2xy");
          }
        }
      }
    }
  }
  return pass();
}

// ---- criterion 7: pin+ orbits on N2 and N4 ------------------------------

Outcome c7_orbits() {
  // the small case is also checked through the materialized list
  {
    const auto& auts = automorphisms(member("N2"));
    if (auts.size() != 8)
      return fail("N2: automorphism count " + std::to_string(auts.size()) +
                  ", expected 8");
    for (const FormAutomorphism& a : auts) {
      try {
        verify_automorphism(member("N2"), a);
      } catch (const std::exception& e) {
        return fail(std::string("N2: emitted automorphism rejected: ") +
                    e.what());
      }
    }
  }
  for (const char* name : {"N2", "N4"}) {
    const HomologyModel& m = member(name);
    const auto parts = orbits(m, kPinPlus);
    if (parts.size() != 2)
      return fail(std::string(name) + ": " + std::to_string(parts.size()) +
                  " pin+ orbits, expected 2");
    const auto forms = enumerate_forms(m, kPinPlus);
    const auto labels = orbit_labels(m, kPinPlus);
    std::set<uint8_t> seen;
    for (const auto& part : parts) {
      const uint8_t v = two_torsion_value(forms[part[0]]);
      for (size_t idx : part)
        if (two_torsion_value(forms[idx]) != v)
          return fail(std::string(name) +
                      ": q(t) not constant on an orbit");
      seen.insert(v);
    }
    if (seen != std::set<uint8_t>{0, 2})
      return fail(std::string(name) + ": orbit q(t) values are not {0,2}");
    for (size_t i = 0; i < forms.size(); ++i)
      for (size_t j = 0; j < forms.size(); ++j)
        if (cobordant(forms[i], forms[j]) != (labels[i] == labels[j]))
          return fail(std::string(name) + ": cobordant(" +
                      format_form(forms[i]) + ", " + format_form(forms[j]) +
                      ") disagrees with the orbits");
  }
  return pass();
}

// ---- criterion 8: the curve model reproduces every form ----------------

bool cancels(const Letter& x, const Letter& y) {
  return x.gen == y.gen && x.sign == -y.sign;
}

std::vector<Word> reduced_words(const HomologyModel& m, int max_len) {
  std::vector<Letter> alphabet;
  for (int g = 0; g < m.generator_count(); ++g) {
    alphabet.push_back({g, +1});
    alphabet.push_back({g, -1});
  }
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, size_t target) -> void {
    if (cur.size() == target) {
      if (is_reduced(cur)) out.push_back(cur);
      return;
    }
    for (const Letter& l : alphabet) {
      if (!cur.empty() && cancels(cur.back(), l)) continue;
      cur.push_back(l);
      self(self, target);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= max_len; ++len) rec(rec, size_t(len));
  return out;
}

Outcome c8_curve_oracle() {
  constexpr int kMaxLetters = 6;
  for (const char* name : {"N1", "N2", "N3", "O1"}) {
    const HomologyModel& m = member(name);
    const RibbonModel ribbon = ribbon_model(m);
    const std::vector<Word> words = reduced_words(m, kMaxLetters);

    struct Calibrated {
      QForm q;
      Cochain phi;
    };
    std::vector<Calibrated> forms;
    for (StructureType t : all_structure_types())
      for (QForm& q : enumerate_forms(m, t)) {
        Cochain phi = calibrate(q);
        forms.push_back({std::move(q), std::move(phi)});
      }

    std::string bad;
    auto check_system = [&](const CurveSystem& sys) -> bool {
      const HClass cls = homology_class(m, sys);
      for (const Calibrated& f : forms) {
        if (q_curve(ribbon, sys, f.phi, f.q.type) != eval(f.q, cls)) {
          bad = std::string(name) + " " + format_form(f.q) + " on \"" +
                format_system(m, sys) + "\": q_curve != eval";
          return false;
        }
      }
      return true;
    };

    if (!check_system(CurveSystem{})) return fail(bad);
    // multisets of words, indices non-decreasing; words come sorted by
    // length, so the remaining-budget cutoff below is a clean break
    std::vector<size_t> picked;
    CurveSystem sys;
    auto rec = [&](auto&& self, size_t from, int remaining) -> bool {
      if (!sys.words.empty() && !check_system(sys)) return false;
      for (size_t i = from; i < words.size(); ++i) {
        const int len = int(words[i].size());
        if (len > remaining) break;
        sys.words.push_back(words[i]);
        const bool ok = self(self, i, remaining - len);
        sys.words.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!rec(rec, 0, kMaxLetters)) return fail(bad);

    // mutual crossing parity between one-word systems is the pairing
    std::vector<size_t> self_i(words.size());
    std::vector<HClass> cls(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
      self_i[i] = self_intersections(ribbon, CurveSystem{{words[i]}});
      cls[i] = homology_class(m, CurveSystem{{words[i]}});
    }
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = i; j < words.size(); ++j) {
        if (int(words[i].size() + words[j].size()) > kMaxLetters) break;
        const CurveSystem pair{{words[i], words[j]}};
        const long long mutual =
            (long long)self_intersections(ribbon, pair) -
            (long long)self_i[i] - (long long)self_i[j];
        if (mutual < 0)
          return fail(std::string(name) +
                      ": mutual crossing count went negative");
        if ((mutual & 1) != m.pairing(cls[i], cls[j]))
          return fail(std::string(name) + ": crossing parity of \"" +
                      format_system(m, CurveSystem{{words[i]}}) + "\" vs \"" +
                      format_system(m, CurveSystem{{words[j]}}) +
                      "\" misses the pairing");
      }
    }
  }
  return pass();
}

// ---- criterion 9: Gauss sums have the right modulus and octants --------

Outcome c9_gauss() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    if (!m.surface().closed()) continue;
    for (const QForm& q : enumerate_forms(m, kPinMinus)) {
      try {
        brown_invariant(q);  // modulus asserted inside
      } catch (const std::exception& e) {
        return fail(at(m, kPinMinus) + " " + format_form(q) + ": " +
                    e.what());
      }
    }
  }
  std::multiset<int> n1;
  for (const QForm& q : enumerate_forms(member("N1"), kPinMinus))
    n1.insert(brown_invariant(q));
  if (n1 != std::multiset<int>{1, 7})
    return fail("N1 pin- invariants are not {1, 7}");
  for (const QForm& q : enumerate_forms(member("O1"), kPinMinus)) {
    bool zero = true;
    for (uint8_t v : q.values) zero = zero && v == 0;
    if (zero && brown_invariant(q) != 0)
      return fail("O1: the zero form has nonzero invariant");
  }
  return pass();
}

// ---- criterion 10: serialization round trip and CLI determinism --------

Outcome c10_cli() {
  for (const auto& mp : family()) {
    const HomologyModel& m = *mp;
    for (StructureType t : all_structure_types())
      for (const QForm& q : enumerate_forms(m, t))
        if (!(parse_form(m, format_form(q)) == q))
          return fail(at(m, t) + ": parse(format(" + format_form(q) +
                      ")) changed the form");
  }
  const std::vector<std::vector<std::string>> runs = {
      {"surface", "info", "--surface", "N2:b=1"},
      {"surface", "info", "--surface", "O2", "--format", "json"},
      {"forms", "list", "--surface", "N2", "--type", "pin-"},
      {"forms", "list", "--surface", "N4", "--type", "pin+", "--format",
       "json"},
      {"forms", "list", "--surface", "O1", "--type", "otilde", "--format",
       "csv"},
      {"forms", "list", "--surface", "N3", "--type", "pin+"},
      {"forms", "exists", "--surface", "N3", "--type", "otilde"},
      {"forms", "sum", "--surface", "N2", "pin-:[1,1]", "pin-:[1,3]"},
      {"forms", "classify", "--surface", "N2", "--type", "pin+"},
      {"forms", "classify", "--surface", "N4", "--type", "pin+", "--format",
       "json"},
      {"groups", "vee", "pin-", "pin-"},
      {"curve", "eval", "--surface", "N2", "--form", "pin-:[1,1]", "--words",
       "c1,c2;c1", "--format", "json"},
  };
  for (const auto& args : runs) {
    std::ostringstream out1, err1, out2, err2;
    const int s1 = run_cli(args, out1, err1);
    const int s2 = run_cli(args, out2, err2);
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    if (s1 != 0)
      return fail("`" + joined + "` exited " + std::to_string(s1));
    if (s1 != s2 || out1.str() != out2.str() || err1.str() != err2.str())
      return fail("`" + joined + "` is not deterministic");
    if (out1.str().empty())
      return fail("`" + joined + "` produced no output");
  }
  return pass();
}

// ---- negative control: a corrupted form must be rejected ---------------

Outcome nc_control() {
  const HomologyModel& m = member("N2");
  QForm corrupt{&m, kPinMinus, {0, 1}};  // q(c1) even though w1(c1) = 1
  try {
    verify_form(corrupt);
  } catch (const std::domain_error&) {
    return pass();
  } catch (const std::exception& e) {
    return fail(std::string("wrong exception type: ") + e.what());
  }
  return fail("verify_form accepted a parity-violating form");
}

struct Criterion {
  const char* id;
  const char* name;
  Outcome (*fn)();
  int budget_ms;  // 0 = no budget
};

constexpr Criterion kCriteria[] = {
    {"1", "structure-counting", c1_counting, 1000},
    {"2", "form-axioms", c2_axioms, 10000},
    {"3", "factoring-linearity", c3_factoring, 0},
    {"4", "sum-pointwise", c4_vee_pointwise, 0},
    {"5", "group-axioms", c5_group_axioms, 0},
    {"6", "circle-groups", c6_circle, 0},
    {"7", "pinplus-orbits", c7_orbits, 60000},
    {"8", "curve-oracle", c8_curve_oracle, 120000},
    {"9", "gauss-sums", c9_gauss, 0},
    {"10", "cli-roundtrip", c10_cli, 0},
    {"NC", "negative-control", nc_control, 0},
};

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> results;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = fail(std::string("unexpected exception: ") + e.what());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (o.passed && c.budget_ms > 0 && elapsed > c.budget_ms)
      o = fail("exceeded the " + std::to_string(c.budget_ms) + " ms budget");
    results.push_back({c.id, c.name, o.passed, o.detail});
  }
  return results;
}

int run_selftest(std::ostream& out) {
  const auto results = run_acceptance();
  size_t passed = 0;
  for (const CriterionResult& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " ("
        << r.name << ")";
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace pinforms
