#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusion/group.hpp"

namespace fusion {

/// Builds a named group: Cn, Dn (order n), Sn, An, Q8, SD16, V4, C2xC2,
/// GL(n,q), SL(n,q) for prime q (acting on nonzero vectors), and direct
/// products written "AxB". Throws ParseError on unknown ids.
GroupPtr named_group(std::string_view id, std::size_t max_order = kDefaultMaxOrder);

/// Group file text: "degree N" then one generator per line in cycle notation.
/// Blank lines and lines starting with '#' are ignored.
GroupPtr parse_group_text(std::string_view text, std::size_t max_order = kDefaultMaxOrder,
                          std::string name = {});

/// Generators in cycle notation; the degree defaults to the largest point.
GroupPtr group_from_generators(const std::vector<std::string>& gens, std::size_t degree = 0,
                               std::size_t max_order = kDefaultMaxOrder, std::string name = {});

/// A named id, or a path to a group file.
GroupPtr load_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

/// The standard corpus ids.
const std::vector<std::string>& corpus_ids();

}  // namespace fusion
