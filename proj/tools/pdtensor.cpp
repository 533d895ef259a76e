#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pdtensor/catalog.hpp"
#include "pdtensor/session_exec.hpp"

namespace {

using pdtensor::ExecFlags;
using pdtensor::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int emit(const Json& doc, const ExecFlags& flags) {
  std::cout << pdtensor::render(doc, flags.machine);
  return doc["exit_code"].get<int>();
}

int default_threads() {
  if (const char* env = std::getenv("PDTENSOR_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "pdtensor: ignoring PDTENSOR_THREADS=" << env << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded homological algebra over quotients of polynomial rings"};
  app.require_subcommand(1);

  ExecFlags flags;
  flags.threads = default_threads();
  int bound = 0;
  std::string format = "text";
  auto* bound_opt = app.add_option("--bound", bound, "Homological bound for betti, resolve, tor, ext and trcheck")
                        ->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", flags.degree_cap, "Largest degree a computation may reach")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", flags.seed, "Seed for random modules and hunts");
  app.add_option("--threads", flags.threads, "Worker threads (default PDTENSOR_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", flags.timing, "Record wall-clock seconds per task");

  std::string run_file;
  auto* run = app.add_subcommand("run", "Execute a session file");
  run->add_option("file", run_file, "Session file (.hca)")->required();

  std::string example;
  bool all = false;
  auto* paper = app.add_subcommand("paper", "Run encoded examples and theorem checks");
  auto* ex_opt = paper->add_option("--example", example, "Example id");
  auto* all_opt = paper->add_flag("--all", all, "Full suite");
  ex_opt->excludes(all_opt);

  std::string ring = "R4";
  int trials = 200;
  auto* hunt = app.add_subcommand("hunt", "Search random cyclic pairs with finite pd tensor product");
  hunt->add_option("--ring", ring, "Catalog ring id")->check(CLI::IsMember(pdtensor::catalog_ids()));
  hunt->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);

  std::string oracle_file;
  auto* oracle = app.add_subcommand("oracle", "Dense linear-algebra cross-check of a session file");
  oracle->add_option("file", oracle_file, "Session file (.hca)")->required();

  for (auto* sub : {run, paper, hunt, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pdtensor::kExitUsage;
  }
  if (*bound_opt) flags.bound = bound;
  flags.machine = format == "machine";

  try {
    if (*run || *oracle) {
      const std::string& path = *run ? run_file : oracle_file;
      pdtensor::Session session;
      try {
        session = pdtensor::parse_session(read_file(path));
      } catch (const pdtensor::SessionError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return pdtensor::kExitUsage;
      }
      return emit(*run ? pdtensor::execute(session, flags) : pdtensor::run_oracle(session, flags), flags);
    }
    if (*paper) {
      if (!example.empty()) return emit(pdtensor::run_paper_example(example, flags), flags);
      if (!all) {
        std::cerr << "pdtensor paper: give --example <id> or --all\n";
        return pdtensor::kExitUsage;
      }
      return emit(pdtensor::run_paper_suite(flags), flags);
    }
    return emit(pdtensor::run_hunt_command(ring, trials, flags), flags);
  } catch (const std::exception& e) {
    std::cerr << "pdtensor: " << e.what() << "\n";
    return pdtensor::kExitUsage;
  }
}
