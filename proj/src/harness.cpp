#include "fusion/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "experiments.hpp"
#include "fusion/errors.hpp"

namespace fusion::harness {

namespace fs = std::filesystem;

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::violation:
      return "violation";
    case Status::bound:
      return "bound";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  for (auto st : {Status::pass, Status::fail, Status::violation, Status::bound})
    if (s == to_string(st)) return st;
  throw ParseError("unknown status: " + s);
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw ParseError("unknown format: " + s);
}

int Report::exit_code() const {
  bool bound = false, failed = false;
  for (const auto& in : instances) {
    if (in.status == Status::violation) return 2;
    bound = bound || in.status == Status::bound;
    failed = failed || in.status == Status::fail;
  }
  if (bound) return 3;
  return failed ? 1 : 0;
}

const std::vector<std::string>& acceptance_ids() {
  static const std::vector<std::string> ids = {
      "main-vanish-2", "main-vanish-odd", "fixpt",      "ses-gamma-star", "lambda-red",     "lambda-props", "timmesfeld",
      "offender-lemmas", "radical-a3",   "radical-a4", "free-detect",    "linking-axioms", "theorem-b-odd", "saturation"};
  return ids;
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = acceptance_ids();
    for (const char* verb : {"limits", "lambda", "fusion", "offenders", "chains", "linking"}) v.push_back(verb);
    return v;
  }();
  return ids;
}

std::string hash_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json instance_json(const Instance& in) {
  Json j;
  j["group"] = in.group;
  j["prime"] = in.prime;
  j["inputs"] = in.inputs;
  j["results"] = in.results;
  j["witnesses"] = in.witnesses;
  j["ms"] = in.ms ? Json(*in.ms) : Json(nullptr);
  j["status"] = to_string(in.status);
  if (!in.message.empty()) j["message"] = in.message;
  return j;
}

Instance instance_from(const Json& j) {
  Instance in;
  in.group = j.at("group").get<std::string>();
  in.prime = j.at("prime").get<unsigned>();
  in.inputs = j.at("inputs");
  in.results = j.at("results");
  in.witnesses = j.at("witnesses");
  if (!j.at("ms").is_null()) in.ms = j.at("ms").get<double>();
  in.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("message")) in.message = j.at("message").get<std::string>();
  return in;
}

std::string config_key(const Config& cfg) {
  Json j;
  j["experiment"] = cfg.experiment;
  j["lattice"] = cfg.lattice_bound;
  j["complex"] = cfg.complex_bound;
  j["aut"] = cfg.aut_bound;
  j["group_bound"] = cfg.group_bound;
  j["seed"] = cfg.seed;
  j["module"] = cfg.module;
  j["degrees"] = cfg.degrees ? Json{cfg.degrees->first, cfg.degrees->second} : Json(nullptr);
  return j.dump();
}

std::string task_key(const Config& cfg, const detail::Task& t) {
  Json j;
  j["config"] = config_key(cfg);
  j["group"] = t.group;
  j["group_hash"] = hash_hex(t.group_text);
  j["prime"] = t.prime;
  j["inputs"] = t.inputs;
  return j.dump();
}

std::optional<Instance> cache_read(const fs::path& file, const std::string& key) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != key) throw std::runtime_error("key mismatch");
    return instance_from(j.at("instance"));
  } catch (const std::exception& e) {
    std::cerr << "warning: cache entry " << file.string() << " unusable (" << e.what() << "), recomputing\n";
    return std::nullopt;
  }
}

void cache_write(const fs::path& file, const std::string& key, Instance in) {
  in.ms.reset();
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << Json{{"key", key}, {"instance", instance_json(in)}}.dump() << '\n';
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
}

Instance execute(const Config& cfg, const detail::Task& t) {
  auto t0 = std::chrono::steady_clock::now();
  std::string key = task_key(cfg, t);
  fs::path file;
  if (!cfg.cache_dir.empty()) {
    file = fs::path(cfg.cache_dir) / cfg.experiment / (hash_hex(key) + ".json");
    if (auto hit = cache_read(file, key)) {
      if (cfg.timing)
        hit->ms = std::round(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() * 1000) / 1000;
      return *hit;
    }
  }
  Instance in;
  in.group = t.group;
  in.prime = t.prime;
  in.inputs = t.inputs;
  try {
    t.body(in);
  } catch (const TheoremViolation& e) {
    in.status = Status::violation;
    in.message = e.what();
  } catch (const BoundExceeded& e) {
    in.status = Status::bound;
    in.message = e.what();
  } catch (const std::bad_alloc&) {
    in.status = Status::bound;
    in.message = "out of memory";
  } catch (const std::exception& e) {
    in.status = Status::fail;
    in.message = e.what();
  }
  if (!file.empty()) cache_write(file, key, in);
  if (cfg.timing)
    in.ms = std::round(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() * 1000) / 1000;
  return in;
}

}  // namespace

Report run(const Config& cfg) {
  auto tasks = detail::build_tasks(cfg);
  Report r;
  r.experiment = cfg.experiment;
  r.instances.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) r.instances[i] = execute(cfg, tasks[i]);
  };
  std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  r.hashes["config"] = hash_hex(config_key(cfg));
  Json groups = Json::object();
  std::string all;
  for (const auto& t : tasks) {
    groups[t.group] = hash_hex(t.group_text);
    all += task_key(cfg, t) + "\n";
  }
  r.hashes["groups"] = groups;
  r.hashes["inputs"] = hash_hex(all);
  return r;
}

Json to_json(const Report& r) {
  Json j;
  j["experiment"] = r.experiment;
  j["instances"] = Json::array();
  for (const auto& in : r.instances) j["instances"].push_back(instance_json(in));
  j["version"] = r.version;
  j["hashes"] = r.hashes;
  return j;
}

Report from_json(const Json& j) {
  Report r;
  r.experiment = j.at("experiment").get<std::string>();
  for (const auto& in : j.at("instances")) r.instances.push_back(instance_from(in));
  r.version = j.at("version").get<std::string>();
  r.hashes = j.at("hashes");
  return r;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::pair<std::string, std::string>> row_of(const Instance& in) {
  std::vector<std::pair<std::string, std::string>> row = {
      {"group", in.group}, {"prime", std::to_string(in.prime)}, {"status", to_string(in.status)}};
  flatten(in.inputs, "input", row);
  flatten(in.results, "", row);
  row.emplace_back("ms", in.ms ? Json(*in.ms).dump() : "");
  row.emplace_back("message", in.message);
  return row;
}

}  // namespace

std::string emit(const Report& r, Format f) {
  std::ostringstream out;
  if (f == Format::json) {
    out << to_json(r).dump(2) << '\n';
    return out.str();
  }
  if (f == Format::csv) {
    std::vector<std::string> cols;
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    for (const auto& in : r.instances) {
      rows.push_back(row_of(in));
      for (const auto& [k, v] : rows.back())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
    if (cols.empty()) cols = {"group", "prime", "status"};
    out << "experiment";
    for (const auto& c : cols) out << ',' << csv_field(c);
    out << '\n';
    for (const auto& row : rows) {
      out << csv_field(r.experiment);
      for (const auto& c : cols) {
        out << ',';
        for (const auto& [k, v] : row)
          if (k == c) out << csv_field(v);
      }
      out << '\n';
    }
    return out.str();
  }
  out << r.experiment << " (" << r.instances.size() << " instances)\n";
  for (const auto& in : r.instances) {
    out << "  " << in.group << " p=" << in.prime << ": " << to_string(in.status);
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(in.results, "", kv);
    for (const auto& [k, v] : kv) out << "  " << k << "=" << v;
    if (in.ms) out << "  ms=" << Json(*in.ms).dump();
    if (!in.message.empty()) out << "  (" << in.message << ")";
    out << '\n';
  }
  return out.str();
}

Verdict verdict(const Report& r) {
  Verdict v;
  std::size_t pass = 0;
  std::string bad;
  for (const auto& in : r.instances) {
    if (in.status == Status::pass) {
      ++pass;
      continue;
    }
    if (!bad.empty()) bad += "; ";
    bad += in.group + " p=" + std::to_string(in.prime) + " " + to_string(in.status);
    if (!in.message.empty()) bad += " (" + in.message + ")";
  }
  std::size_t n = r.instances.size();
  std::size_t need = 1;
  std::string counted = "instances";
  std::size_t count = n;
  if (r.experiment == "ses-gamma-star") need = 5;
  if (r.experiment == "lambda-props") need = 50;
  if (r.experiment == "lambda-red") {
    need = 10;
    counted = "one-class functors";
    count = 0;
    for (const auto& in : r.instances)
      if (in.results.contains("functors")) count += in.results["functors"].get<std::size_t>();
  }
  v.pass = pass == n && count >= need;
  v.summary = std::to_string(pass) + "/" + std::to_string(n) + " instances pass";
  if (counted != "instances") v.summary += ", " + std::to_string(count) + " " + counted;
  if (count < need) v.summary += ", need " + std::to_string(need) + " " + counted;
  if (!bad.empty()) v.summary += "; failing: " + bad;
  return v;
}

}  // namespace fusion::harness
