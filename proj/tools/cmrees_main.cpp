#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cmrees/registry.hpp"
#include "cmrees/report.hpp"

namespace {

struct RunConfig {
  std::string group;
  std::string group_file;
  int order = 0;  // 0 = default 2n+4
  std::string families;
  std::string suite = "identities";
  std::string format = "tsv";
  std::string out;
};

cmrees::GroupPtr resolve(const RunConfig& cfg) {
  if (!cfg.group_file.empty()) return cmrees::load_group_file(cfg.group_file);
  if (!cfg.group.empty()) return cmrees::resolve_group(cfg.group);
  throw CLI::ValidationError("--group or --group-file is required");
}

cmrees::FamilyPartition resolve_families(const cmrees::GroupPtr& g, const std::string& spec) {
  // Accept inline JSON ("[[...]]" or "blocks = [[...]]") as well as a file path.
  auto first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && (spec[first] == '[' || spec.rfind("blocks", first) == first))
    return cmrees::parse_family_partition(g, spec);
  return cmrees::load_family_partition(g, spec);
}

int emit(const cmrees::SuiteReport& rep, const RunConfig& cfg) {
  std::string text = (cfg.format == "json") ? cmrees::render_json(rep) : cmrees::render_tsv(rep);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chern-character image lattices for complex reflection groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* cmd, bool with_suite) {
    cmd->add_option("--group", cfg.group, "registry group name (or a group file path)");
    cmd->add_option("--group-file", cfg.group_file, "group definition file");
    cmd->add_option("--order", cfg.order, "hbar truncation order (default 2*dim+4)");
    cmd->add_option("--families", cfg.families, "family partition (file path or inline JSON)");
    if (with_suite)
      cmd->add_option("--suite", cfg.suite, "one of chartab|identities|theorem-a|theorem-b|conjecture")
          ->check(CLI::IsMember({"chartab", "identities", "theorem-a", "theorem-b", "conjecture"}));
    cmd->add_option("--format", cfg.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
  };

  CLI::App* chartab = app.add_subcommand("chartab", "print a character table");
  add_common(chartab, false);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, true);
  CLI::App* conjecture = app.add_subcommand("conjecture", "graded dimensions for a family partition");
  add_common(conjecture, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.order != 0 && cfg.order < 1) throw std::runtime_error("--order must be >= 1");
    if (chartab->parsed()) {
      auto g = resolve(cfg);
      return emit(cmrees::run_chartab_suite(g), cfg);
    }
    if (verify->parsed()) {
      if (cfg.suite == "theorem-b") {
        int n = cfg.order ? cfg.order : 8;
        return emit(cmrees::run_theorem_b_suite(n), cfg);
      }
      auto g = resolve(cfg);
      int n = cfg.order ? cfg.order : cmrees::default_hbar_order(g);
      if (cfg.suite == "chartab") return emit(cmrees::run_chartab_suite(g), cfg);
      if (cfg.suite == "identities") return emit(cmrees::run_identity_suite(g, n), cfg);
      if (cfg.suite == "theorem-a") return emit(cmrees::run_theorem_a_suite(g, n), cfg);
      if (cfg.suite == "conjecture") {
        if (cfg.families.empty()) throw std::runtime_error("--families is required");
        auto fam = resolve_families(g, cfg.families);
        return emit(cmrees::run_conjecture_suite(g, fam), cfg);
      }
    }
    if (conjecture->parsed()) {
      auto g = resolve(cfg);
      auto fam = cfg.families.empty() ? cmrees::discrete_partition(g)
                                      : resolve_families(g, cfg.families);
      return emit(cmrees::run_conjecture_suite(g, fam), cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
