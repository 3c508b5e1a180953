#include "celef/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "celef/error.hpp"
#include "celef/report.hpp"

namespace celef {

namespace {

ModelFile load_input(const std::string& input) {
  if (input.starts_with("catalog:")) {
    const CatalogEntry* e = find_entry(input.substr(8));
    if (!e) throw PreconditionError("no catalog entry named '" + input.substr(8) + "'");
    return from_catalog(*e);
  }
  if (input.ends_with(".json")) {
    std::ifstream in(input);
    if (!in) throw ParseError(0, 0, "cannot open '" + input + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, e.byte, e.what());
    }
    return model_file_from_json(j);
  }
  return load_model_file(input);
}

unsigned thread_count() {
  const char* env = std::getenv("CELEF_THREADS");
  if (env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw PreconditionError("CELEF_THREADS must be an integer in [1, 1024]");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const Json& report, const std::string& json_path, std::ostream& out) {
  if (json_path == "-") {
    out << report.dump(2) << "\n";
    return;
  }
  out << render_text(report);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw PreconditionError("cannot write '" + json_path + "'");
    f << report.dump(2) << "\n";
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DegreeError*>(&e) ||
      dynamic_cast<const PreconditionError*>(&e)) {
    return kExitUsage;
  }
  if (dynamic_cast<const ValidationError*>(&e)) return kExitValidation;
  return kExitInternal;
}

std::string describe_error(const std::exception& e, const std::string& input) {
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    return "parse error: " + input + ":" + std::to_string(p->line()) + ":" + std::to_string(p->column()) + ": " +
           p->detail();
  }
  if (dynamic_cast<const DegreeError*>(&e)) return std::string("degree error: ") + e.what();
  if (dynamic_cast<const PreconditionError*>(&e)) return std::string("error: ") + e.what();
  if (dynamic_cast<const ValidationError*>(&e)) return std::string("validation failed: ") + e.what();
  return std::string("internal error: ") + e.what();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lefschetz and basic cohomology checks for invariant l.c.s. and contact models", "celef"};
  app.require_subcommand(1);

  std::string input, json_path, basic_list, mode_name = "all", k_text = "all";
  std::string export_format = "text", export_out;
  std::vector<std::string> entry_names;
  bool catalog_flag = false, export_all = false, export_list = false;

  auto* validate = app.add_subcommand("validate", "check the declared l.c.s. or contact structure");
  validate->add_option("file", input, "model file, .json mirror, or catalog:<name>")->required();
  validate->add_option("--json", json_path, "also write the JSON report here ('-' replaces the text)");

  auto* cohom = app.add_subcommand("cohomology", "Betti numbers of the model and of a basic subcomplex");
  cohom->add_option("file", input, "model file, .json mirror, or catalog:<name>")->required();
  cohom->add_option("--basic", basic_list, "comma-separated fields: U, V, xi or generator names");
  cohom->add_option("--json", json_path, "also write the JSON report here ('-' replaces the text)");

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz relations and the related checks");
  lef->add_option("file", input, "model file, .json mirror, or catalog:<name>")->required();
  lef->add_option("--mode", mode_name, "deRham, basic, contact or all")
      ->check(CLI::IsMember({"deRham", "basic", "contact", "all"}));
  lef->add_option("--k", k_text, "degree or 'all'");
  lef->add_option("--json", json_path, "also write the JSON report here ('-' replaces the text)");

  auto* suite = app.add_subcommand("suite", "regression run over the built-in catalog");
  suite->add_flag("--catalog", catalog_flag, "run the built-in catalog (default)");
  suite->add_option("--entry", entry_names, "restrict to these entries");
  suite->add_option("--json", json_path, "also write the JSON report here ('-' replaces the text)");

  auto* exp = app.add_subcommand("export", "write catalog entries in the model file format");
  exp->add_option("name", input, "catalog entry name");
  exp->add_flag("--all", export_all, "export every entry");
  exp->add_flag("--list", export_list, "list entry names");
  exp->add_option("--format", export_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  exp->add_option("-o,--output", export_out, "output file (single entry) or directory (--all)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      Json r = validate_report(load_input(input));
      emit(r, json_path, out);
      return r["validation"]["status"] == "valid" ? kExitOk : kExitValidation;
    }
    if (cohom->parsed()) {
      emit(cohomology_report(load_input(input), split_list(basic_list)), json_path, out);
      return kExitOk;
    }
    if (lef->parsed()) {
      LefschetzMode mode = mode_name == "deRham"  ? LefschetzMode::DeRham
                           : mode_name == "basic" ? LefschetzMode::Basic
                           : mode_name == "contact" ? LefschetzMode::Contact
                                                    : LefschetzMode::All;
      std::optional<int> k;
      if (k_text != "all") {
        try {
          std::size_t used = 0;
          k = std::stoi(k_text, &used);
          if (used != k_text.size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
          err << "error: --k expects an integer or 'all'\n";
          return kExitUsage;
        }
      }
      emit(lefschetz_report(load_input(input), mode, k), json_path, out);
      return kExitOk;
    }
    if (suite->parsed()) {
      (void)catalog_flag;
      std::vector<CatalogEntry> entries;
      if (entry_names.empty()) {
        entries = builtin_entries();
      } else {
        for (const auto& n : entry_names) {
          const CatalogEntry* e = find_entry(n);
          if (!e) throw PreconditionError("no catalog entry named '" + n + "'");
          entries.push_back(*e);
        }
      }
      Json r = suite_report(entries, thread_count());
      emit(r, json_path, out);
      return r["passed"].get<bool>() ? kExitOk : kExitInternal;
    }
    if (exp->parsed()) {
      if (export_list) {
        for (const auto& e : builtin_entries()) out << e.name << "\n";
        return kExitOk;
      }
      auto render = [&](const CatalogEntry& e) {
        ModelFile f = from_catalog(e);
        return export_format == "json" ? to_json(f).dump(2) + "\n" : serialize(f);
      };
      if (export_all) {
        for (const auto& e : builtin_entries()) {
          if (export_out.empty()) {
            out << "# " << e.name << "\n" << render(e) << "\n";
          } else {
            std::string path = export_out + "/" + e.name + (export_format == "json" ? ".json" : ".model");
            std::ofstream f(path);
            if (!f) throw PreconditionError("cannot write '" + path + "'");
            f << render(e);
          }
        }
        return kExitOk;
      }
      if (input.empty()) throw PreconditionError("export needs an entry name, --all or --list");
      const CatalogEntry* e = find_entry(input);
      if (!e) throw PreconditionError("no catalog entry named '" + input + "'");
      if (export_out.empty()) {
        out << render(*e);
      } else {
        std::ofstream f(export_out);
        if (!f) throw PreconditionError("cannot write '" + export_out + "'");
        f << render(*e);
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << describe_error(e, input) << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace celef
