#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "fusion/corpus.hpp"
#include "fusion/errors.hpp"
#include "fusion/harness.hpp"

using namespace fusion;
namespace h = fusion::harness;

namespace {

std::pair<std::size_t, std::size_t> parse_degrees(const std::string& s) {
  static const std::regex kRange(R"((\d+)(?:\.\.|-)(\d+))");
  static const std::regex kOne(R"(\d+)");
  std::smatch m;
  if (std::regex_match(s, m, kRange)) {
    std::size_t a = std::stoul(m[1]), b = std::stoul(m[2]);
    if (a > b) throw ParseError("empty degree range: " + s);
    return {a, b};
  }
  if (std::regex_match(s, kOne)) return {std::stoul(s), std::stoul(s)};
  throw ParseError("degrees must look like 2..3 or 2: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems, higher limits and their acceptance experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  h::Config cfg;
  std::vector<std::string> groups;
  std::optional<unsigned> prime;
  std::string degrees, format = "json";
  app.add_option("--group", groups, "Group ids, group files, or 'corpus'")->delimiter(',');
  app.add_option("--prime", prime, "Prime p");
  app.add_option("--degrees", degrees, "Degree range, e.g. 2..3");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory of the on-disk result cache");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--bound-lattice", cfg.lattice_bound, "Largest |S| whose subgroup lattice is enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound-complex", cfg.complex_bound, "Largest number of bar complex generators")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound-aut", cfg.aut_bound, "Largest |S| for Out(S, F)")->check(CLI::PositiveNumber);
  app.add_option("--bound-group", cfg.group_bound, "Largest group order")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed of sampled experiments");
  app.add_option("--module", cfg.module, "Module of the lambda verb: perm, trivial or sign")
      ->check(CLI::IsMember({"perm", "trivial", "sign"}));
  app.add_flag("--timing", cfg.timing, "Record per-instance milliseconds");

  for (const char* verb : {"limits", "lambda", "fusion", "offenders", "chains", "linking"})
    app.add_subcommand(verb, std::string("Run the ") + verb + " experiment");
  std::string experiment;
  auto* verify = app.add_subcommand("verify", "Run one acceptance experiment by id");
  verify->add_option("experiment", experiment, "Experiment id")->required()->check(CLI::IsMember(h::experiment_ids()));
  auto* corpus = app.add_subcommand("corpus", "Corpus management");
  auto* list = corpus->add_subcommand("list", "List corpus group ids");
  corpus->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& id : corpus_ids()) std::cout << id << '\t' << named_group(id, 40320)->order() << '\n';
      return 0;
    }
    cfg.experiment = verify->parsed() ? experiment : app.get_subcommands().front()->get_name();
    cfg.groups = groups;
    cfg.prime = prime;
    if (!degrees.empty()) cfg.degrees = parse_degrees(degrees);
    auto report = h::run(cfg);
    std::cout << h::emit(report, h::format_from_string(format));
    int code = report.exit_code();
    if (verify->parsed()) {
      auto v = h::verdict(report);
      std::cerr << (v.pass ? "PASS " : "FAIL ") << experiment << ": " << v.summary << '\n';
      if (code == 0 && !v.pass) code = 1;
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
