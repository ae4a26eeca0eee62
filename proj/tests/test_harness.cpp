#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fusion/errors.hpp"
#include "fusion/harness.hpp"

using namespace fusion;
using namespace fusion::harness;
namespace fs = std::filesystem;

namespace {

Config limits_s4() {
  Config c;
  c.experiment = "limits";
  c.groups = {"S4"};
  c.prime = 2;
  c.degrees = std::make_pair(std::size_t{1}, std::size_t{3});
  return c;
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("fusion_harness_" + name);
  fs::remove_all(d);
  return d;
}

std::size_t file_count(const fs::path& d) {
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(d))
    if (e.is_regular_file()) ++n;
  return n;
}

}  // namespace

TEST_CASE("limits of S4 at 2 vanish in degrees 1..3") {
  auto r = run(limits_s4());
  REQUIRE(r.instances.size() == 1);
  const auto& in = r.instances[0];
  CHECK(in.status == Status::pass);
  CHECK(in.group == "S4");
  CHECK(in.prime == 2);
  for (const char* k : {"lim1", "lim2", "lim3"}) CHECK(in.results[k] == Json::array());
  CHECK(!in.ms.has_value());
  CHECK(r.exit_code() == 0);
  CHECK(r.version == kVersion);
}

TEST_CASE("report shape and json round trip") {
  Config c = limits_s4();
  auto r = run(c);
  Json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"experiment", "instances", "version", "hashes"});
  for (const char* k : {"group", "prime", "inputs", "results", "witnesses", "ms"})
    CHECK(j["instances"][0].contains(k));
  CHECK(j["instances"][0]["ms"].is_null());
  CHECK(to_json(from_json(j)) == j);
  CHECK(to_json(from_json(Json::parse(j.dump()))).dump() == j.dump());
}

TEST_CASE("output is byte-identical across runs and job counts") {
  Config c;
  c.experiment = "timmesfeld";
  std::string one = emit(run(c), Format::json);
  CHECK(emit(run(c), Format::json) == one);
  c.jobs = 3;
  CHECK(emit(run(c), Format::json) == one);
}

TEST_CASE("timing fills ms") {
  Config c = limits_s4();
  c.timing = true;
  auto r = run(c);
  REQUIRE(r.instances[0].ms.has_value());
  CHECK(*r.instances[0].ms >= 0.0);
}

TEST_CASE("cache hits, misses and corrupt entries") {
  fs::path dir = fresh_dir("cache");
  Config c = limits_s4();
  std::string plain = emit(run(c), Format::json);
  c.cache_dir = dir.string();
  CHECK(emit(run(c), Format::json) == plain);
  CHECK(file_count(dir) == 1);
  CHECK(emit(run(c), Format::json) == plain);
  CHECK(file_count(dir) == 1);

  // a different bound is a different key
  Config d = c;
  d.complex_bound = c.complex_bound + 1;
  auto rd = run(d);
  CHECK(file_count(dir) == 2);
  CHECK(rd.instances[0].results == run(c).instances[0].results);
  CHECK(rd.hashes["config"] != run(c).hashes["config"]);

  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) std::ofstream(e.path()) << "{ not json";
  CHECK(emit(run(c), Format::json) == plain);
  run(d);
  // both entries were rewritten
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) {
      std::ifstream in(e.path());
      CHECK(Json::accept(in));
    }
  fs::remove_all(dir);
}

TEST_CASE("a cache entry under the wrong key is ignored") {
  fs::path dir = fresh_dir("key");
  Config c = limits_s4();
  c.cache_dir = dir.string();
  run(c);
  fs::path file;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) file = e.path();
  REQUIRE(!file.empty());
  std::ifstream in(file);
  Json j = Json::parse(in);
  in.close();
  j["key"] = "other";
  j["instance"]["results"]["lim1"] = Json::array({2});
  std::ofstream(file) << j.dump();
  CHECK(run(c).instances[0].results["lim1"] == Json::array());
  fs::remove_all(dir);
}

TEST_CASE("csv and text emitters") {
  auto r = run(limits_s4());
  std::istringstream csv(emit(r, Format::csv));
  std::string header, row, extra;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(!std::getline(csv, extra));
  CHECK(header.rfind("experiment,group,prime,status,", 0) == 0);
  CHECK(header.find("lim2") != std::string::npos);
  CHECK(row.rfind("limits,S4,2,pass,", 0) == 0);
  std::string text = emit(r, Format::text);
  CHECK(text.find("S4 p=2: pass") != std::string::npos);
  CHECK(format_from_string("csv") == Format::csv);
  CHECK_THROWS_AS(format_from_string("xml"), ParseError);
}

TEST_CASE("exit codes") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.instances.resize(3);
  CHECK(r.exit_code() == 0);
  r.instances[0].status = Status::fail;
  CHECK(r.exit_code() == 1);
  r.instances[1].status = Status::bound;
  CHECK(r.exit_code() == 3);
  r.instances[2].status = Status::violation;
  CHECK(r.exit_code() == 2);
}

TEST_CASE("per-instance errors are recorded") {
  Config c = limits_s4();
  c.groups = {"no-such-group"};
  CHECK_THROWS(run(c));
  c.groups = {"S4"};
  c.lattice_bound = 2;
  auto r = run(c);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].status == Status::bound);
  CHECK(r.exit_code() == 3);
}

TEST_CASE("unknown experiment") {
  Config c;
  c.experiment = "nope";
  CHECK_THROWS_AS(run(c), DomainError);
  for (const auto& id : acceptance_ids())
    CHECK(std::find(experiment_ids().begin(), experiment_ids().end(), id) != experiment_ids().end());
  CHECK(acceptance_ids().size() == 14);
}

TEST_CASE("verdicts") {
  Config c;
  c.experiment = "linking";
  c.groups = {"S3"};
  c.prime = 3;
  auto r = run(c);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].results["morphisms"] == 6);
  CHECK(verdict(r).pass);

  Report ses;
  ses.experiment = "ses-gamma-star";
  ses.instances.resize(4);
  CHECK(!verdict(ses).pass);
  ses.instances.resize(5);
  CHECK(verdict(ses).pass);
  ses.instances[2].status = Status::bound;
  CHECK(!verdict(ses).pass);

  Report red;
  red.experiment = "lambda-red";
  red.instances.resize(2);
  red.instances[0].results["functors"] = 4;
  red.instances[1].results["functors"] = 5;
  CHECK(!verdict(red).pass);
  red.instances[1].results["functors"] = 6;
  CHECK(verdict(red).pass);
}

TEST_CASE("hashes depend on inputs") {
  auto a = run(limits_s4());
  Config c = limits_s4();
  c.degrees = std::make_pair(std::size_t{1}, std::size_t{2});
  auto b = run(c);
  CHECK(a.hashes["groups"] == b.hashes["groups"]);
  CHECK(a.hashes["inputs"] != b.hashes["inputs"]);
  CHECK(hash_hex("") == "cbf29ce484222325");
}
