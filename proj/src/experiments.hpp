#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fusion/harness.hpp"

namespace fusion::harness::detail {

struct Task {
  std::string group;
  unsigned prime = 0;
  Json inputs = Json::object();
  std::string group_text;  // canonical generators, for input hashes
  std::function<void(Instance&)> body;
};

/// DomainError for an unknown experiment id.
std::vector<Task> build_tasks(const Config& cfg);

}  // namespace fusion::harness::detail
