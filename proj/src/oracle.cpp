#include "alphacover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "alphacover/errors.hpp"
#include "alphacover/set_cover.hpp"

namespace alphacover {

namespace {

struct CoverProblem {
    EdgeSet edges;
    CliqueFamily cliques;
    SetMasks masks;
};

CoverProblem cover_problem(const Graph& g) {
    CoverProblem p{g.edges(), {}, {}};
    if (p.edges.size() > kMaxBruteforceEccEdges) {
        throw SizeGuardError("ecc_bruteforce: m = " + std::to_string(p.edges.size()) + " exceeds " +
                             std::to_string(kMaxBruteforceEccEdges));
    }
    for (const VertexSet& c : maximal_cliques(g)) {
        if (c.size() < 2) continue;
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < p.edges.size(); ++i)
            if (contains(c, p.edges[i].u) && contains(c, p.edges[i].v)) m |= std::uint64_t{1} << i;
        p.cliques.push_back(c);
        p.masks.push_back(m);
    }
    return p;
}

CoverResult collect(const CoverProblem& p, const std::vector<int>& chosen) {
    CoverResult r;
    r.size = static_cast<int>(chosen.size());
    for (int i : chosen) r.family.push_back(p.cliques[static_cast<std::size_t>(i)]);
    std::sort(r.family.begin(), r.family.end());
    return r;
}

}  // namespace

CoverResult ecc_bruteforce(const Graph& g) {
    CoverProblem p = cover_problem(g);
    auto chosen = set_cover_dp(static_cast<int>(p.edges.size()), p.masks, static_cast<int>(p.masks.size()));
    return collect(p, chosen.value_or(std::vector<int>{}));
}

CoverResult ecc_bruteforce_combinations(const Graph& g) {
    CoverProblem p = cover_problem(g);
    auto chosen = set_cover_combinations(static_cast<int>(p.edges.size()), p.masks, static_cast<int>(p.masks.size()));
    return collect(p, chosen.value_or(std::vector<int>{}));
}

namespace {

class PartitionEnumerator {
public:
    PartitionEnumerator(const Graph& g, int max_size) : edges_(g.edges()), max_size_(max_size) {
        if (edges_.size() > 63) throw SizeGuardError("enumerate_partitions: more than 63 edges");
        by_edge_.resize(edges_.size());
        for (const VertexSet& c : all_cliques(g, 2)) {
            std::uint64_t m = 0;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (contains(c, edges_[i].u) && contains(c, edges_[i].v)) m |= std::uint64_t{1} << i;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (m >> i & 1U) by_edge_[i].push_back(cliques_.size());
            cliques_.push_back(c);
            masks_.push_back(m);
        }
    }

    std::vector<CliqueFamily> run() {
        std::uint64_t all = edges_.empty() ? 0 : (~std::uint64_t{0} >> (64 - edges_.size()));
        walk(all);
        return std::move(out_);
    }

private:
    void walk(std::uint64_t open) {
        if (open == 0) {
            CliqueFamily f;
            for (std::size_t i : stack_) f.push_back(cliques_[i]);
            std::sort(f.begin(), f.end());
            out_.push_back(std::move(f));
            return;
        }
        if (static_cast<int>(stack_.size()) >= max_size_) return;
        int low = std::countr_zero(open);
        for (std::size_t c : by_edge_[static_cast<std::size_t>(low)]) {
            if ((masks_[c] & open) != masks_[c]) continue;
            stack_.push_back(c);
            walk(open & ~masks_[c]);
            stack_.pop_back();
        }
    }

    EdgeSet edges_;
    int max_size_;
    CliqueFamily cliques_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::size_t>> by_edge_;
    std::vector<std::size_t> stack_;
    std::vector<CliqueFamily> out_;
};

}  // namespace

std::vector<CliqueFamily> enumerate_partitions(const Graph& g, int max_size) {
    return PartitionEnumerator(g, max_size).run();
}

}  // namespace alphacover
