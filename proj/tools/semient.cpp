// Command-line driver: verify, suite, construct, list.
//
// Exit status: 0 pass, 1 fail, 2 usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "semient/driver.hpp"
#include "semient/suite.hpp"

namespace {

using namespace semient;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

struct Common {
  std::string field;
  bool json = false;
  std::vector<std::string> files;
  std::string registry;
};

std::optional<Field> field_of(const Common &c) {
  if (c.field.empty())
    return std::nullopt;
  try {
    return Field::parse(c.field);
  } catch (const std::invalid_argument &e) {
    throw InputError(std::string("--field: ") + e.what());
  }
}

std::filesystem::path registry_dir(const Common &c) {
  return c.registry.empty() ? default_data_dir() / "registry" : std::filesystem::path(c.registry);
}

/// The registry, or `source` when it names a file, plus every --file merged in.
StructureFile load_source(const Common &c, const std::string &source) {
  const std::optional<Field> field = field_of(c);
  StructureFile out = source == "registry" ? StructureFile::load_directory(registry_dir(c), field)
                                           : StructureFile::load(source, field);
  for (const auto &f : c.files)
    out.merge(StructureFile::load(f, out.field()));
  return out;
}

void print_report(const Report &r, bool json) {
  std::cout << (json ? canonical(report_to_json(r)) : r.to_text());
}

int cmd_verify(const Common &c, const std::string &source, const std::string &object, const std::string &check) {
  const StructureFile file = load_source(c, source);
  Object o;
  try {
    o = resolve_object(file, object);
  } catch (const PreconditionError &e) {
    print_report(e.report(), c.json);
    return exit_fail;
  }
  const Report r = run_check(o, check);
  print_report(r, c.json);
  return r.passed() ? exit_pass : exit_fail;
}

int cmd_suite(const Common &c, const std::string &grid_path, unsigned jobs) {
  const Grid grid = Grid::load(grid_path.empty() ? default_data_dir() / "grids" / "default.json" : std::filesystem::path(grid_path));
  const SuiteResult result = run_suite(grid, registry_dir(c), field_of(c).value_or(Field::rationals()), jobs);
  std::cout << (c.json ? canonical(result.to_json()) : result.to_text());
  return result.passed() ? exit_pass : exit_fail;
}

int cmd_construct(const Common &c, const std::string &expr, std::string name) {
  const StructureFile file = load_source(c, "registry");
  if (name.empty())
    name = parse_expression(expr).name;
  std::vector<std::pair<std::string, Object>> parts;
  try {
    parts = construct(file, expr, name);
  } catch (const PreconditionError &e) {
    std::cerr << e.what() << "\n";
    print_report(e.report(), c.json);
    return exit_fail;
  }
  StructureFile out(file.field());
  for (const auto &[n, o] : parts)
    out.put(n, o);
  std::cout << out.dump();
  return exit_pass;
}

int cmd_list(const Common &c, const std::string &source, bool checks) {
  const StructureFile file = load_source(c, source);
  if (c.json) {
    Json j = Json::object();
    for (const auto &n : file.names()) {
      Json entry{{"type", file.type_of(n)}};
      if (checks)
        entry["checks"] = check_names(file.object(n));
      j["objects"][n] = entry;
    }
    j["constructions"] = construction_names();
    std::cout << canonical(j);
    return exit_pass;
  }
  for (const auto &n : file.names()) {
    std::cout << n << "  " << file.type_of(n);
    if (checks) {
      std::cout << "  [";
      const auto names = check_names(file.object(n));
      for (std::size_t i = 0; i < names.size(); ++i)
        std::cout << (i ? " " : "") << names[i];
      std::cout << "]";
    }
    std::cout << "\n";
  }
  std::cout << "constructions:";
  for (const auto &n : construction_names())
    std::cout << " " << n;
  std::cout << "\n";
  return exit_pass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of semi-entwining structures and Yang-Baxter systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--field", common.field, "scalar field: q or fp:<p>");
  app.add_flag("--json", common.json, "machine-readable output");
  app.add_option("--registry", common.registry, "registry directory (default: the shipped data)");
  app.add_option("--file", common.files, "extra structure file merged into the source")->check(CLI::ExistingFile);

  std::string source;
  std::string object;
  std::string check;
  CLI::App *verify = app.add_subcommand("verify", "run one check on one object");
  verify->add_option("source", source, "structure file, or 'registry'")->required();
  verify->add_option("object", object, "object name or construction such as gamma_q@Kx2-1,q=1")->required();
  verify->add_option("check", check, "check name; see 'list --checks'")->required();

  std::string grid;
  unsigned jobs = 1;
  CLI::App *suite = app.add_subcommand("suite", "run the acceptance grid");
  suite->add_option("--grid", grid, "grid file (default: the shipped default grid)");
  suite->add_option("--jobs", jobs, "worker threads (0: hardware concurrency)");

  std::string expr;
  std::string name;
  CLI::App *construct_cmd = app.add_subcommand("construct", "emit a constructed object as a structure file");
  construct_cmd->add_option("expression", expr, "construction such as R_rs@Kx2-1,r=1,s=1")->required();
  construct_cmd->add_option("--name", name, "object name in the emitted file");

  bool with_checks = false;
  std::string list_source = "registry";
  CLI::App *list = app.add_subcommand("list", "enumerate objects and constructions");
  list->add_option("source", list_source, "structure file, or 'registry'");
  list->add_flag("--checks", with_checks, "also list the checks for each object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_input;
  }

  try {
    if (*verify)
      return cmd_verify(common, source, object, check);
    if (*suite)
      return cmd_suite(common, grid, jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs);
    if (*construct_cmd)
      return cmd_construct(common, expr, name);
    return cmd_list(common, list_source, with_checks);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
