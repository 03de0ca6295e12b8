#include "pinforms/cli.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pinforms/classify.hpp"
#include "pinforms/curves.hpp"
#include "pinforms/extensions.hpp"
#include "pinforms/forms.hpp"
#include "pinforms/homology.hpp"
#include "pinforms/selftest.hpp"
#include "pinforms/serial.hpp"
#include "pinforms/structure_type.hpp"
#include "pinforms/surface.hpp"
#include "pinforms/veesum.hpp"

namespace pinforms {
namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format to_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string digit_string(const std::vector<uint8_t>& v) {
  std::string s;
  for (uint8_t x : v) s += char('0' + x);
  return s;
}

std::string comma_string(const std::vector<uint8_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += char('0' + v[i]);
  }
  return s;
}

bool row_has_qt(const HomologyModel& m) { return m.has_torsion(); }

bool row_has_sigma(const HomologyModel& m, const QForm& q) {
  return q.type == kPinMinus && m.surface().closed();
}

void emit_form_rows(std::ostream& out, const HomologyModel& m,
                    const std::vector<QForm>& forms,
                    const std::vector<size_t>* orbit, Format f) {
  switch (f) {
    case Format::text:
      for (size_t i = 0; i < forms.size(); ++i) {
        out << format_form(forms[i]);
        if (row_has_qt(m)) out << "  qt=" << int(two_torsion_value(forms[i]));
        if (row_has_sigma(m, forms[i]))
          out << "  sigma=" << int(brown_invariant(forms[i]));
        if (orbit) out << "  orbit=" << (*orbit)[i];
        out << "\n";
      }
      break;
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (size_t i = 0; i < forms.size(); ++i) {
        ordered_json row;
        row["surface"] = m.surface().name();
        row["type"] = std::string(forms[i].type.name());
        row["values"] =
            std::vector<int>(forms[i].values.begin(), forms[i].values.end());
        if (row_has_qt(m)) row["qt"] = int(two_torsion_value(forms[i]));
        if (row_has_sigma(m, forms[i]))
          row["sigma"] = int(brown_invariant(forms[i]));
        if (orbit) row["orbit"] = int((*orbit)[i]);
        arr.push_back(std::move(row));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "surface,type,values,qt,sigma,orbit\n";
      for (size_t i = 0; i < forms.size(); ++i) {
        out << m.surface().name() << ',' << forms[i].type.name() << ','
            << digit_string(forms[i].values) << ',';
        if (row_has_qt(m)) out << int(two_torsion_value(forms[i]));
        out << ',';
        if (row_has_sigma(m, forms[i]))
          out << int(brown_invariant(forms[i]));
        out << ',';
        if (orbit) out << (*orbit)[i];
        out << "\n";
      }
      break;
  }
}

void note_obstructed(std::ostream& out, const HomologyModel& m,
                     StructureType t) {
  out << "no " << t.name() << " structures on " << m.surface().name()
      << ": the obstruction class is nonzero\n";
}

void cmd_surface_info(std::ostream& out, const std::string& spec, Format f) {
  HomologyModel m(SurfaceSpec::parse(spec));
  const SurfaceSpec& s = m.surface();
  std::string generators, w1;
  for (int i = 0; i < m.generator_count(); ++i) {
    if (i) {
      generators += ',';
      w1 += ',';
    }
    generators += m.generator_labels()[i];
    w1 += char('0' + m.w1_entry(i));
  }
  switch (f) {
    case Format::text:
      out << "surface " << s.name() << "\n"
          << "orientable " << (s.orientable ? "true" : "false") << "\n"
          << "genus " << s.genus << "\n"
          << "boundary " << s.boundary << "\n"
          << "euler " << s.euler_characteristic() << "\n"
          << "b1 " << m.b1() << "\n"
          << "generators " << generators << "\n"
          << "w1 " << w1 << "\n"
          << "relation " << (m.has_relation() ? "yes" : "none") << "\n"
          << "elements " << m.elements().size() << "\n"
          << "forms";
      for (StructureType t : all_structure_types())
        out << " " << t.name() << "=" << form_count(m, t);
      out << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["surface"] = s.name();
      j["orientable"] = s.orientable;
      j["genus"] = s.genus;
      j["boundary"] = s.boundary;
      j["euler"] = s.euler_characteristic();
      j["b1"] = m.b1();
      j["generators"] = m.generator_labels();
      std::vector<int> w1_bits;
      for (int i = 0; i < m.generator_count(); ++i)
        w1_bits.push_back(m.w1_entry(i));
      j["w1"] = w1_bits;
      j["relation"] = m.has_relation();
      j["elements"] = m.elements().size();
      ordered_json counts;
      for (StructureType t : all_structure_types())
        counts[std::string(t.name())] = form_count(m, t);
      j["forms"] = counts;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "surface,orientable,genus,boundary,euler,b1,relation,elements,"
             "trivial,pin+,otilde,pin-\n"
          << s.name() << ',' << (s.orientable ? "true" : "false") << ','
          << s.genus << ',' << s.boundary << ',' << s.euler_characteristic()
          << ',' << m.b1() << ',' << (m.has_relation() ? "yes" : "none")
          << ',' << m.elements().size();
      for (StructureType t : all_structure_types())
        out << ',' << form_count(m, t);
      out << "\n";
      break;
  }
}

void cmd_forms_list(std::ostream& out, const std::string& spec,
                    const std::string& type, Format f) {
  HomologyModel m(SurfaceSpec::parse(spec));
  const StructureType t = StructureType::parse(type);
  const auto forms = enumerate_forms(m, t);
  if (forms.empty() && f == Format::text) {
    note_obstructed(out, m, t);
    return;
  }
  emit_form_rows(out, m, forms, nullptr, f);
}

void cmd_forms_exists(std::ostream& out, const std::string& spec,
                      const std::string& type, Format f) {
  HomologyModel m(SurfaceSpec::parse(spec));
  const StructureType t = StructureType::parse(type);
  const bool exists = admits(m, t);
  switch (f) {
    case Format::text:
      out << (exists ? "true" : "false") << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["surface"] = m.surface().name();
      j["type"] = std::string(t.name());
      j["exists"] = exists;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "surface,type,exists\n"
          << m.surface().name() << ',' << t.name() << ','
          << (exists ? "true" : "false") << "\n";
      break;
  }
}

QForm parse_checked(const HomologyModel& m, const std::string& text) {
  QForm q = parse_form(m, text);
  if (!admits(m, q.type))
    throw std::domain_error("no " + std::string(q.type.name()) +
                            " structures on " + m.surface().name());
  verify_form(q);
  return q;
}

void cmd_forms_sum(std::ostream& out, const std::string& spec,
                   const std::string& lhs, const std::string& rhs, Format f) {
  HomologyModel m(SurfaceSpec::parse(spec));
  const QForm a = parse_checked(m, lhs);
  const QForm b = parse_checked(m, rhs);
  std::vector<QForm> one;
  one.push_back(vee(a, b));
  emit_form_rows(out, m, one, nullptr, f);
}

void cmd_forms_classify(std::ostream& out, const std::string& spec,
                        const std::string& type, Format f) {
  HomologyModel m(SurfaceSpec::parse(spec));
  const StructureType t = StructureType::parse(type);
  const auto forms = enumerate_forms(m, t);
  if (forms.empty() && f == Format::text) {
    note_obstructed(out, m, t);
    return;
  }
  const auto labels = orbit_labels(m, t);
  emit_form_rows(out, m, forms, &labels, f);
}

void cmd_groups_vee(std::ostream& out, const std::string& left,
                    const std::string& right, Format f) {
  const StructureType t1 = StructureType::parse(left);
  const StructureType t2 = StructureType::parse(right);
  const FiniteExtension g =
      vee_group(labeled_extension(t1), labeled_extension(t2));
  const char* iso =
      iso_class(g) == IsoClass::cyclic4 ? "cyclic4" : "klein4";
  switch (f) {
    case Format::text:
      out << t1.name() << " v " << t2.name() << " = " << g.label.name()
          << "\n"
          << "iso " << iso << "\n"
          << "table\n";
      for (const auto& row : g.table) {
        for (size_t j = 0; j < row.size(); ++j)
          out << (j ? " " : "") << int(row[j]);
        out << "\n";
      }
      break;
    case Format::json: {
      ordered_json j;
      j["left"] = std::string(t1.name());
      j["right"] = std::string(t2.name());
      j["label"] = std::string(g.label.name());
      j["iso"] = iso;
      ordered_json table = ordered_json::array();
      for (const auto& row : g.table)
        table.push_back(std::vector<int>(row.begin(), row.end()));
      j["table"] = table;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      std::string flat;
      for (size_t i = 0; i < g.table.size(); ++i) {
        if (i) flat += ';';
        flat += digit_string(g.table[i]);
      }
      out << "left,right,label,iso,table\n"
          << t1.name() << ',' << t2.name() << ',' << g.label.name() << ','
          << iso << ',' << flat << "\n";
      break;
    }
  }
}

void cmd_curve_eval(std::ostream& out, const std::string& spec,
                    const std::string& form, const std::string& words,
                    Format f) {
  HomologyModel m(SurfaceSpec::parse(spec));
  const QForm q = parse_checked(m, form);
  const CurveSystem sys = reduce(parse_system(m, words));
  const RibbonModel ribbon = ribbon_model(m);
  const Cochain phi = calibrate(q);
  const uint8_t value = q_curve(ribbon, sys, phi, q.type);
  const HClass cls = homology_class(m, sys);
  if (value != eval(q, cls))
    throw std::logic_error("curve model disagrees with the form");
  const std::string echo = format_system(m, sys);
  switch (f) {
    case Format::text:
      out << "surface " << m.surface().name() << "\n"
          << "system " << echo << "\n"
          << "class " << comma_string(cls.v) << "\n"
          << "value " << int(value) << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["surface"] = m.surface().name();
      j["system"] = echo;
      j["class"] = std::vector<int>(cls.v.begin(), cls.v.end());
      j["value"] = int(value);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "surface,system,class,value\n"
          << m.surface().name() << ',' << csv_cell(echo) << ','
          << csv_cell(comma_string(cls.v)) << ',' << int(value) << "\n";
      break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"quadratic and linear forms for pin structures on surfaces"};
  app.name("pinforms");
  app.require_subcommand(1);

  std::string surface_str, type_str, form_str, words_str;
  std::string lhs_str, rhs_str, left_str, right_str;
  std::string format = "text";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", surface_str,
                    "surface spec, e.g. N2, O1:b=1, torus, klein")
        ->required();
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", type_str, "trivial, pin+, otilde or pin-")
        ->required();
  };

  CLI::App* surface_cmd = app.add_subcommand("surface", "surface reports");
  surface_cmd->require_subcommand(1);
  CLI::App* surface_info =
      surface_cmd->add_subcommand("info", "homology and form counts");
  add_surface(surface_info);
  add_format(surface_info);

  CLI::App* forms_cmd = app.add_subcommand("forms", "structure forms");
  forms_cmd->require_subcommand(1);
  CLI::App* forms_list =
      forms_cmd->add_subcommand("list", "enumerate the forms of a type");
  add_surface(forms_list);
  add_type(forms_list);
  add_format(forms_list);
  CLI::App* forms_sum =
      forms_cmd->add_subcommand("sum", "vee sum of two forms");
  add_surface(forms_sum);
  forms_sum->add_option("lhs", lhs_str, "first form, e.g. pin-:[1,1]")
      ->required();
  forms_sum->add_option("rhs", rhs_str, "second form")->required();
  add_format(forms_sum);
  CLI::App* forms_classify = forms_cmd->add_subcommand(
      "classify", "orbits under form automorphisms");
  add_surface(forms_classify);
  add_type(forms_classify);
  add_format(forms_classify);
  CLI::App* forms_exists =
      forms_cmd->add_subcommand("exists", "whether the type is admitted");
  add_surface(forms_exists);
  add_type(forms_exists);
  add_format(forms_exists);

  CLI::App* groups_cmd =
      app.add_subcommand("groups", "circle extension groups");
  groups_cmd->require_subcommand(1);
  CLI::App* groups_vee =
      groups_cmd->add_subcommand("vee", "vee of two circle groups");
  groups_vee->add_option("left", left_str, "first type")->required();
  groups_vee->add_option("right", right_str, "second type")->required();
  add_format(groups_vee);

  CLI::App* curve_cmd = app.add_subcommand("curve", "curve systems");
  curve_cmd->require_subcommand(1);
  CLI::App* curve_eval = curve_cmd->add_subcommand(
      "eval", "evaluate a form on a curve system through holonomy");
  add_surface(curve_eval);
  curve_eval->add_option("--form", form_str, "form, e.g. pin-:[1,1]")
      ->required();
  curve_eval
      ->add_option("--words", words_str,
                   "curve system, e.g. \"c1,c2;c1\" ('-' inverts a letter)")
      ->required();
  add_format(curve_eval);

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Format f = to_format(format);
    if (surface_info->parsed()) {
      cmd_surface_info(out, surface_str, f);
    } else if (forms_list->parsed()) {
      cmd_forms_list(out, surface_str, type_str, f);
    } else if (forms_sum->parsed()) {
      cmd_forms_sum(out, surface_str, lhs_str, rhs_str, f);
    } else if (forms_classify->parsed()) {
      cmd_forms_classify(out, surface_str, type_str, f);
    } else if (forms_exists->parsed()) {
      cmd_forms_exists(out, surface_str, type_str, f);
    } else if (groups_vee->parsed()) {
      cmd_groups_vee(out, left_str, right_str, f);
    } else if (curve_eval->parsed()) {
      cmd_curve_eval(out, surface_str, form_str, words_str, f);
    } else if (selftest_cmd->parsed()) {
      return run_selftest(out);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pinforms
