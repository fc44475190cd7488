#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace alphacover {

/// Sets over a universe of at most 64 elements, as bitmasks.
using SetMasks = std::vector<std::uint64_t>;

/// Minimum cover of `universe` by the DP f[X] = 1 + min over sets S holding the
/// lowest element of X of f[X \ S]. Returns chosen set indices, or nullopt if the
/// sets cannot cover the universe or the minimum exceeds `limit`.
/// Universe must span at most 26 elements (the table has 2^|universe| entries).
std::optional<std::vector<int>> set_cover_dp(int universe_size, const SetMasks& sets, int limit);

/// Same answer by depth-first branching on the lowest uncovered element with
/// iterative deepening; works for universes up to 64 elements.
std::optional<std::vector<int>> set_cover_branching(int universe_size, const SetMasks& sets, int limit);

/// Tries all combinations of sets in order of increasing size; exhaustive reference.
std::optional<std::vector<int>> set_cover_combinations(int universe_size, const SetMasks& sets, int limit);

}  // namespace alphacover
