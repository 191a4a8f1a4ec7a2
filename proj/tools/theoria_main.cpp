#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "theoria/dsl.hpp"
#include "theoria/exports.hpp"
#include "theoria/verify.hpp"

namespace {

std::uint64_t env_depth() {
  const char* s = std::getenv("THEORIA_DEPTH");
  if (!s) return 12;
  try {
    return std::stoull(s);
  } catch (...) {
    return 12;
  }
}

int run_script_file(const std::string& path, const theoria::RunOptions& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open script: " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    theoria::SessionScript script = theoria::parse_script(buf.str());
    return theoria::run_script(script, opt, std::cout, std::cerr);
  } catch (const theoria::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == theoria::Errc::ParseError ? 2 : 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theoria: symbolic engine for E-closed families of theories"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool json = false;
  bool serial = false;
  std::uint64_t depth = env_depth();
  std::string script_path;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--serial", serial, "run sweep kernels on the serial reference path");
  app.add_option("--depth", depth, "default oracle depth (env THEORIA_DEPTH)");
  app.add_option("script", script_path, "script file to execute");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::size_t seeds = 100;
  std::uint64_t base_seed = 1;
  verify_cmd->add_option("--suite", suite, "closure|lgs|semilattice|lattice|distributivity|boolean|oracle|all");
  verify_cmd->add_option("--seeds", seeds, "random instances per randomized check");
  verify_cmd->add_option("--seed", base_seed, "base seed");

  auto* gallery_cmd = app.add_subcommand("gallery", "print a gallery case as DSL text");
  std::string case_name;
  gallery_cmd->add_option("case", case_name, "case name (omit to list)");

  auto* export_cmd = app.add_subcommand("export", "export a gallery case");
  std::string export_case, export_format = "dsl";
  export_cmd->add_option("--case", export_case, "gallery case name")->required();
  export_cmd->add_option("--format", export_format, "dsl|json");

  CLI11_PARSE(app, argc, argv);

  theoria::par::default_mode() =
      serial ? theoria::par::Mode::Serial : theoria::par::mode_from_env();

  try {
    if (*verify_cmd) {
      theoria::VerifyOptions opt;
      opt.seeds = seeds;
      opt.base_seed = base_seed;
      opt.depth = depth;
      opt.mode = theoria::par::default_mode();
      auto results = theoria::run_suite(suite, opt);
      bool ok = true;
      theoria::Json arr = theoria::Json::array();
      for (const auto& r : results) {
        ok = ok && r.ok();
        if (json) {
          theoria::Json fr = theoria::Json::array();
          for (const auto& f : r.failures) fr.push_back({{"what", f.what}, {"seed", f.seed}});
          arr.push_back({{"suite", r.suite}, {"checks", r.checks}, {"failures", fr}});
        } else {
          std::cout << (r.ok() ? "[PASS] " : "[FAIL] ") << r.suite << " (" << r.checks
                    << " checks)\n";
          for (const auto& f : r.failures)
            std::cout << "       seed " << f.seed << ": " << f.what << "\n";
        }
      }
      if (json) std::cout << arr.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (*gallery_cmd) {
      if (case_name.empty()) {
        for (const auto& n : theoria::gallery_names()) std::cout << n << "\n";
        return 0;
      }
      theoria::GalleryCase c = theoria::make_gallery_case(case_name);
      if (json) {
        std::cout << theoria::gallery_case_json(c).dump(2) << "\n";
      } else {
        std::cout << "# " << c.name << ": " << c.title << "\n";
        for (const auto& [name, fam] : c.families)
          std::cout << "let " << name << " = " << theoria::family_dsl(fam) << "\n";
      }
      return 0;
    }
    if (*export_cmd) {
      theoria::GalleryCase c = theoria::make_gallery_case(export_case);
      if (export_format == "json") {
        std::cout << theoria::gallery_case_json(c).dump(2) << "\n";
      } else if (export_format == "dsl") {
        for (const auto& [name, fam] : c.families)
          std::cout << "let " << name << " = " << theoria::family_dsl(fam) << "\n";
      } else {
        std::cerr << "unknown export format: " << export_format << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const theoria::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == theoria::Errc::UnknownSuite || e.code() == theoria::Errc::UndefinedName ? 2 : 1;
  }

  if (script_path.empty()) {
    std::cout << app.help();
    return 2;
  }
  theoria::RunOptions opt;
  opt.json = json;
  opt.depth = depth;
  opt.mode = theoria::par::default_mode();
  return run_script_file(script_path, opt);
}
