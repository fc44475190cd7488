#include "alphacover/set_cover.hpp"

#include <algorithm>
#include <bit>

#include "alphacover/errors.hpp"

namespace alphacover {

namespace {

std::uint64_t full_mask(int size) { return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1; }

bool coverable(int universe_size, const SetMasks& sets) {
    std::uint64_t all = 0;
    for (std::uint64_t s : sets) all |= s;
    return (all & full_mask(universe_size)) == full_mask(universe_size);
}

}  // namespace

std::optional<std::vector<int>> set_cover_dp(int universe_size, const SetMasks& sets, int limit) {
    if (universe_size > 26) throw SizeGuardError("set_cover_dp: universe above 26 elements");
    if (universe_size == 0) return std::vector<int>{};
    if (limit <= 0 || !coverable(universe_size, sets)) return std::nullopt;

    const std::uint32_t full = static_cast<std::uint32_t>(full_mask(universe_size));
    std::vector<std::vector<int>> by_low(static_cast<std::size_t>(universe_size));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::uint32_t s = static_cast<std::uint32_t>(sets[i] & full);
        for (int e = 0; e < universe_size; ++e)
            if (s >> e & 1U) by_low[static_cast<std::size_t>(e)].push_back(static_cast<int>(i));
    }
    constexpr std::uint8_t inf = 255;
    std::vector<std::uint8_t> f(std::size_t{full} + 1, inf);
    f[0] = 0;
    for (std::uint32_t x = 1; x <= full; ++x) {
        int low = std::countr_zero(x);
        std::uint8_t best = inf;
        for (int i : by_low[static_cast<std::size_t>(low)]) {
            std::uint8_t rest = f[x & ~static_cast<std::uint32_t>(sets[static_cast<std::size_t>(i)])];
            if (rest < best) best = rest;
        }
        if (best != inf) f[x] = static_cast<std::uint8_t>(best + 1);
    }
    if (f[full] == inf || f[full] > limit) return std::nullopt;
    std::vector<int> chosen;
    for (std::uint32_t x = full; x != 0;) {
        int low = std::countr_zero(x);
        for (int i : by_low[static_cast<std::size_t>(low)]) {
            std::uint32_t rest = x & ~static_cast<std::uint32_t>(sets[static_cast<std::size_t>(i)]);
            if (f[rest] + 1 == f[x]) {
                chosen.push_back(i);
                x = rest;
                break;
            }
        }
    }
    return chosen;
}

namespace {

class Brancher {
public:
    Brancher(const SetMasks& sets, int universe_size) : sets_(sets), full_(full_mask(universe_size)) {
        for (std::uint64_t& s : sets_) s &= full_;
    }

    bool run(int budget) { return search(0, budget); }
    const std::vector<int>& chosen() const { return chosen_; }

private:
    bool search(std::uint64_t covered, int budget) {
        if (covered == full_) return true;
        if (budget == 0) return false;
        std::uint64_t open = full_ & ~covered;
        int low = std::countr_zero(open);
        // Bound: no set covers more than `widest` new elements.
        int widest = 0;
        for (std::uint64_t s : sets_) widest = std::max(widest, std::popcount(s & open));
        if (widest == 0 || static_cast<long long>(widest) * budget < std::popcount(open)) return false;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if (!(sets_[i] >> low & 1U)) continue;
            chosen_.push_back(static_cast<int>(i));
            if (search(covered | sets_[i], budget - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    SetMasks sets_;
    std::uint64_t full_;
    std::vector<int> chosen_;
};

}  // namespace

std::optional<std::vector<int>> set_cover_branching(int universe_size, const SetMasks& sets, int limit) {
    if (universe_size > 64) throw SizeGuardError("set_cover_branching: universe above 64 elements");
    if (universe_size == 0) return std::vector<int>{};
    if (!coverable(universe_size, sets)) return std::nullopt;
    for (int budget = 1; budget <= limit; ++budget) {
        Brancher b(sets, universe_size);
        if (b.run(budget)) return b.chosen();
    }
    return std::nullopt;
}

std::optional<std::vector<int>> set_cover_combinations(int universe_size, const SetMasks& sets, int limit) {
    if (universe_size > 64) throw SizeGuardError("set_cover_combinations: universe above 64 elements");
    const std::uint64_t full = full_mask(universe_size);
    if (universe_size == 0) return std::vector<int>{};
    if (!coverable(universe_size, sets)) return std::nullopt;
    const int m = static_cast<int>(sets.size());
    for (int size = 1; size <= std::min(limit, m); ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t u = 0;
            for (int i : idx) u |= sets[static_cast<std::size_t>(i)];
            if ((u & full) == full) return idx;
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace alphacover
