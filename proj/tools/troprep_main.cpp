#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "troprep/io.hpp"

namespace {

using namespace troprep;

int order_cap_from_env() {
  const char* cap = std::getenv("TROPREP_ORDER_CAP");
  if (!cap || !*cap) return kMaskBits;
  try {
    return std::stoi(cap);
  } catch (const std::exception&) {
    throw GroupSpecError("TROPREP_ORDER_CAP must be an integer, got: " + std::string(cap));
  }
}

GroupTable load_group(const std::string& spec) {
  return parse_group_spec(spec, order_cap_from_env());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot open output file: " + path);
  out << content;
  if (!out) throw DocumentError("failed writing output file: " + path);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

struct Common {
  std::string group;
  int dim = 2;
  std::string out;
};

int run_orbits(const Common& c) {
  GroupTable g = load_group(c.group);
  auto orbits = orbit_partition(g, c.dim);
  std::cout << orbits_text(g, c.dim, orbits);
  if (!c.out.empty()) write_file(c.out, orbits_json(g, c.dim, orbits));
  return 0;
}

int run_classify(const Common& c, bool no_prune, bool oracle, int threads, bool timings) {
  GroupTable g = load_group(c.group);
  SearchOptions opt;
  opt.use_pruning = !no_prune && !oracle;
  opt.oracle_mode = oracle;
  opt.parallel = threads > 1;
  opt.threads = threads;
  ClassificationReport report = enumerate_fixed_plucker(g, c.dim, opt);
  std::cout << classification_text(g, report, timings);
  if (!c.out.empty()) write_file(c.out, classification_json(g, report, timings));
  return 0;
}

int run_check(const std::string& path, const std::string& out,
              const std::string& emit_family) {
  BasisFamily family = parse_family_document(read_input(path));
  ExchangeVerdict verdict = is_basis_family(family);
  std::cout << verdict_text(family, verdict);
  if (!out.empty()) write_file(out, verdict_json(family, verdict));
  if (!emit_family.empty()) write_file(emit_family, family_document(family));
  return verdict.matroid ? 0 : 1;
}

int run_verify(const std::vector<std::string>& ids, bool catalog_given,
               const std::string& catalog_csv, const std::string& json_out, int threads) {
  std::vector<GroupTable> catalog;
  if (catalog_given) {
    for (const auto& spec : split_csv(catalog_csv)) catalog.push_back(load_group(spec));
  } else {
    catalog = default_catalog();
  }
  std::vector<TheoremCheck> checks;
  if (ids.empty()) {
    checks = run_all(catalog, threads);
  } else {
    for (const auto& id : ids) checks.push_back(run_check(id, catalog, threads));
  }
  std::cout << checks_text(checks);
  if (!json_out.empty()) write_file(json_out, checks_json(checks));
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return 1;
  return 0;
}

int run_subgroups(const std::string& group, const std::string& out) {
  GroupTable g = load_group(group);
  std::cout << subgroups_text(g);
  if (!out.empty()) write_file(out, subgroups_json(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classify d-dimensional tropical subrepresentations of B[G]"};
  app.require_subcommand(1);

  Common orbit_args;
  auto* orbits_cmd = app.add_subcommand("orbits", "list the orbits of G on d-subsets");
  orbits_cmd->add_option("--group", orbit_args.group, "group spec, e.g. Z:6, D:4, Q8, Z:2xZ:4")
      ->required();
  orbits_cmd->add_option("--dim", orbit_args.dim, "subset size d")->required();
  orbits_cmd->add_option("--out", orbit_args.out, "write a JSON report here");

  Common classify_args;
  bool no_prune = false, oracle = false, timings = false;
  int threads = 0;
  auto* classify_cmd =
      app.add_subcommand("classify", "enumerate all matroidal unions of orbits");
  classify_cmd->add_option("--group", classify_args.group, "group spec")->required();
  classify_cmd->add_option("--dim", classify_args.dim, "subset size d")->required();
  classify_cmd->add_flag("--no-prune", no_prune, "disable implication-rule propagation");
  classify_cmd->add_flag("--oracle", oracle, "exhaustively test every orbit union");
  classify_cmd->add_option("--threads", threads, "worker count (results are identical)");
  classify_cmd->add_flag("--timings", timings, "emit wall-clock time in reports");
  classify_cmd->add_option("--out", classify_args.out, "write a JSON report here");

  std::string family_path, check_out, emit_family;
  auto* check_cmd =
      app.add_subcommand("check", "run the basis-exchange check on a family document");
  check_cmd->add_option("family", family_path, "family JSON file, or - for stdin")
      ->required();
  check_cmd->add_option("--out", check_out, "write a JSON verdict here");
  check_cmd->add_option("--emit-family", emit_family, "write the normalized family here");

  std::vector<std::string> check_ids_arg;
  std::string catalog_csv, verify_json;
  int verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the named verification suite");
  verify_cmd->add_option("--check", check_ids_arg, "check id (repeatable); default all");
  verify_cmd->add_option("--catalog", catalog_csv, "comma-separated group specs");
  verify_cmd->add_option("--json", verify_json, "write a JSON report here");
  verify_cmd->add_option("--threads", verify_threads, "worker count");

  std::string subgroup_group, subgroup_out;
  auto* subgroups_cmd = app.add_subcommand("subgroups", "enumerate all subgroups");
  subgroups_cmd->add_option("--group", subgroup_group, "group spec")->required();
  subgroups_cmd->add_option("--out", subgroup_out, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (orbits_cmd->parsed()) return run_orbits(orbit_args);
    if (classify_cmd->parsed())
      return run_classify(classify_args, no_prune, oracle, threads, timings);
    if (check_cmd->parsed()) return run_check(family_path, check_out, emit_family);
    if (verify_cmd->parsed())
      return run_verify(check_ids_arg, verify_cmd->count("--catalog") > 0, catalog_csv,
                        verify_json, verify_threads);
    if (subgroups_cmd->parsed()) return run_subgroups(subgroup_group, subgroup_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
