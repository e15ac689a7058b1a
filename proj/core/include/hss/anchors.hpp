#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace hss {

/// Source anchor of a check id. Throws std::out_of_range for ids missing from the registry.
std::string_view anchor_for(std::string_view check_id);

bool has_anchor(std::string_view check_id);

/// Every (check id, anchor) pair, sorted by id.
const std::vector<std::pair<std::string_view, std::string_view>>& anchor_registry();

}  // namespace hss
