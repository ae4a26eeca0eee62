// Runs every acceptance experiment with its default configuration and prints
// one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fusion/harness.hpp"

namespace h = fusion::harness;

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  h::Config base;
  std::vector<std::string> only;
  std::string report_dir;
  app.add_option("--only", only, "Criterion ids to run")->delimiter(',');
  app.add_option("--jobs", base.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", base.cache_dir, "Directory of the on-disk result cache");
  app.add_option("--report-dir", report_dir, "Write each JSON report here");
  app.add_flag("--timing", base.timing, "Print wall time per criterion");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& id : h::acceptance_ids()) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    h::Config cfg = base;
    cfg.experiment = id;
    auto t0 = std::chrono::steady_clock::now();
    auto report = h::run(cfg);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!report_dir.empty()) {
      std::ofstream out(report_dir + "/" + id + ".json");
      out << h::emit(report, h::Format::json);
    }
    auto v = h::verdict(report);
    failed += !v.pass;
    std::string upper = id;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::cout << (v.pass ? "PASS " : "FAIL ") << upper << ": " << v.summary;
    if (base.timing) std::cout << " [" << static_cast<long>(s * 1000) / 1000.0 << " s]";
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
