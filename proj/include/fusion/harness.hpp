#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fusion::harness {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

enum class Status { pass, fail, violation, bound };
const char* to_string(Status s);
Status status_from_string(const std::string& s);

enum class Format { json, csv, text };
/// ParseError on anything but "json", "csv", "text".
Format format_from_string(const std::string& s);

struct Config {
  std::string experiment;
  /// Group ids or group files; empty selects the experiment's default instances.
  std::vector<std::string> groups;
  std::optional<unsigned> prime;
  std::optional<std::pair<std::size_t, std::size_t>> degrees;
  std::size_t lattice_bound = 128;
  std::size_t complex_bound = 20'000'000;  // bar complex strings
  std::size_t aut_bound = 32;              // |S| for Out(S, F)
  std::size_t group_bound = 40320;
  std::uint64_t seed = 1;
  std::string module = "perm";  // lambda verb: perm, trivial or sign
  std::size_t jobs = 1;
  std::string cache_dir;  // empty: no cache
  bool timing = false;
};

struct Instance {
  std::string group;
  unsigned prime = 0;
  Json inputs = Json::object();
  Json results = Json::object();
  Json witnesses = Json::object();
  Status status = Status::pass;
  std::string message;
  std::optional<double> ms;
};

struct Report {
  std::string experiment;
  std::vector<Instance> instances;
  std::string version = kVersion;
  Json hashes = Json::object();
  /// 0 all pass, 2 a theorem violation, 3 a bound exceeded, 1 any other failure.
  int exit_code() const;
};

/// Experiment ids accepted by run(): the acceptance criteria in lower case
/// and the CLI verbs.
const std::vector<std::string>& experiment_ids();
const std::vector<std::string>& acceptance_ids();

/// Runs every instance, in a pool of `jobs` workers. Per-instance errors are
/// recorded, never thrown. DomainError on an unknown experiment.
Report run(const Config& cfg);

Json to_json(const Report& r);
Report from_json(const Json& j);
std::string emit(const Report& r, Format f);

/// Verdict of one acceptance criterion: all instances pass and the criterion's
/// own count requirements hold.
struct Verdict {
  bool pass = false;
  std::string summary;
};
Verdict verdict(const Report& r);

/// FNV-1a, as 16 hex digits.
std::string hash_hex(const std::string& s);

}  // namespace fusion::harness
