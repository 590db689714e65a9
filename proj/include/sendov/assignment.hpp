#pragma once

#include <vector>

namespace sendov {

/// Minimal-cost assignment on a square cost matrix (Jonker-Volgenant style
/// shortest augmenting paths). Returns, for each row, the assigned column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace sendov
