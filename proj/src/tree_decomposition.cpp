#include "alphacover/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "alphacover/errors.hpp"

namespace alphacover {

int TreeDecomposition::width() const {
    int w = -1;
    for (const VertexSet& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int NiceDecomposition::width() const {
    int w = -1;
    for (const NiceNode& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

Verdict validate(const Graph& g, const TreeDecomposition& td) {
    const int t = static_cast<int>(td.bags.size());
    if (t == 0) return Verdict::fail("decomposition has no bags");
    if (static_cast<int>(td.tree_edges.size()) != t - 1) {
        return Verdict::fail("tree on " + std::to_string(t) + " bags needs " + std::to_string(t - 1) + " edges");
    }
    std::vector<int> parent(static_cast<std::size_t>(t));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= t || b >= t || a == b) return Verdict::fail("tree edge out of range");
        int ra = find(a), rb = find(b);
        if (ra == rb) return Verdict::fail("tree edges contain a cycle");
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    for (const VertexSet& bag : td.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (bag[i] < 0 || bag[i] >= g.n()) return Verdict::fail("bag vertex out of range");
            if (i > 0 && bag[i - 1] >= bag[i]) return Verdict::fail("bag is not strictly ascending");
        }
    }
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < t; ++i)
        for (Vertex v : td.bags[static_cast<std::size_t>(i)]) holders[static_cast<std::size_t>(v)].push_back(i);
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto& hv = holders[static_cast<std::size_t>(v)];
        if (hv.empty()) return Verdict::fail("vertex " + std::to_string(v) + " is in no bag");
        // Bags holding v must induce a connected subtree: |edges inside| = |bags| - 1.
        std::size_t inside = 0;
        for (auto [a, b] : td.tree_edges) {
            inside += contains(td.bags[static_cast<std::size_t>(a)], v) && contains(td.bags[static_cast<std::size_t>(b)], v);
        }
        if (inside + 1 != hv.size()) return Verdict::fail("bags holding vertex " + std::to_string(v) + " are disconnected");
    }
    for (const Edge& e : g.edges()) {
        bool found = false;
        for (int i : holders[static_cast<std::size_t>(e.u)]) found = found || contains(td.bags[static_cast<std::size_t>(i)], e.v);
        if (!found) return Verdict::fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is in no bag");
    }
    return Verdict::pass();
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
    const int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        return td;
    }
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = {g.neighbors(v).begin(), g.neighbors(v).end()};
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    std::vector<VertexSet> bag_of(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long long best_fill = 0;
        std::size_t best_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            const auto& nb = adj[static_cast<std::size_t>(v)];
            long long fill = 0;
            for (auto a = nb.begin(); a != nb.end(); ++a)
                for (auto b = std::next(a); b != nb.end(); ++b) fill += !adj[static_cast<std::size_t>(*a)].contains(*b);
            if (best < 0 || fill < best_fill || (fill == best_fill && nb.size() < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = nb.size();
            }
        }
        const auto nb = adj[static_cast<std::size_t>(best)];
        VertexSet bag(nb.begin(), nb.end());
        bag.insert(std::lower_bound(bag.begin(), bag.end(), best), best);
        bag_of[static_cast<std::size_t>(best)] = std::move(bag);
        for (Vertex a : nb) {
            adj[static_cast<std::size_t>(a)].erase(best);
            for (Vertex b : nb)
                if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
        }
        adj[static_cast<std::size_t>(best)].clear();
        gone[static_cast<std::size_t>(best)] = 1;
        position[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
    }

    // Bag i belongs to order[i]; its parent is the bag of the earliest-eliminated
    // later neighbour, or simply the next bag when there is none.
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<std::size_t>(i)];
        td.bags.push_back(bag_of[static_cast<std::size_t>(v)]);
    }
    for (int i = 0; i + 1 < n; ++i) {
        Vertex v = order[static_cast<std::size_t>(i)];
        int target = n;
        for (Vertex u : bag_of[static_cast<std::size_t>(v)])
            if (u != v) target = std::min(target, position[static_cast<std::size_t>(u)]);
        if (target == n) target = i + 1;
        td.tree_edges.emplace_back(i, target);
    }
    return td;
}

TreeDecomposition path_decomposition(std::vector<VertexSet> bags) {
    TreeDecomposition td;
    for (auto& b : bags) std::sort(b.begin(), b.end());
    td.bags = std::move(bags);
    for (int i = 0; i + 1 < static_cast<int>(td.bags.size()); ++i) td.tree_edges.emplace_back(i, i + 1);
    return td;
}

namespace {

class NiceBuilder {
public:
    explicit NiceBuilder(const TreeDecomposition& td) : td_(td), adj_(td.bags.size()) {
        for (auto [a, b] : td.tree_edges) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
    }

    NiceDecomposition build() {
        // Iterative post-order from bag 0 so deep paths do not exhaust the stack.
        const std::size_t t = td_.bags.size();
        std::vector<int> parent(t, -1), order;
        std::vector<char> seen(t, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int y : adj_[static_cast<std::size_t>(x)]) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    stack.push_back(y);
                }
            }
        }
        std::vector<int> top(t, -1);  // nice node whose bag equals bag x
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            const VertexSet& bag = td_.bags[static_cast<std::size_t>(x)];
            std::vector<int> branches;
            for (int y : adj_[static_cast<std::size_t>(x)]) {
                if (parent[static_cast<std::size_t>(y)] != x) continue;
                branches.push_back(morph(top[static_cast<std::size_t>(y)], bag));
            }
            if (branches.empty()) branches.push_back(morph(add({NiceKind::leaf, {}, -1, {}}), bag));
            int acc = branches[0];
            for (std::size_t i = 1; i < branches.size(); ++i) acc = add({NiceKind::join, bag, -1, {acc, branches[i]}});
            top[static_cast<std::size_t>(x)] = acc;
        }
        morph(top[0], {});
        return std::move(out_);
    }

private:
    int add(NiceNode node) {
        out_.nodes.push_back(std::move(node));
        return static_cast<int>(out_.nodes.size()) - 1;
    }

    // Forget what the target lacks, then introduce what it adds.
    int morph(int from, const VertexSet& target) {
        VertexSet bag = out_.nodes[static_cast<std::size_t>(from)].bag;
        for (Vertex v : set_difference(bag, target)) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            from = add({NiceKind::forget, bag, v, {from}});
        }
        for (Vertex v : set_difference(target, bag)) {
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            from = add({NiceKind::introduce, bag, v, {from}});
        }
        return from;
    }

    const TreeDecomposition& td_;
    std::vector<std::vector<int>> adj_;
    NiceDecomposition out_;
};

}  // namespace

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    if (Verdict v = validate(g, td); !v) throw PreconditionError("invalid tree decomposition: " + v.diagnostic);
    return NiceBuilder(td).build();
}

bool is_nice(const NiceDecomposition& nd) {
    if (nd.nodes.empty() || !nd.nodes.back().bag.empty()) return false;
    for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
        const NiceNode& x = nd.nodes[i];
        for (int c : x.children)
            if (c < 0 || static_cast<std::size_t>(c) >= i) return false;
        switch (x.kind) {
            case NiceKind::leaf:
                if (!x.children.empty() || !x.bag.empty()) return false;
                break;
            case NiceKind::introduce: {
                if (x.children.size() != 1) return false;
                const VertexSet& c = nd.nodes[static_cast<std::size_t>(x.children[0])].bag;
                if (!contains(x.bag, x.vertex) || contains(c, x.vertex)) return false;
                if (set_difference(x.bag, VertexSet{x.vertex}) != c) return false;
                break;
            }
            case NiceKind::forget: {
                if (x.children.size() != 1) return false;
                const VertexSet& c = nd.nodes[static_cast<std::size_t>(x.children[0])].bag;
                if (contains(x.bag, x.vertex) || !contains(c, x.vertex)) return false;
                if (set_difference(c, VertexSet{x.vertex}) != x.bag) return false;
                break;
            }
            case NiceKind::join:
                if (x.children.size() != 2) return false;
                for (int c : x.children)
                    if (nd.nodes[static_cast<std::size_t>(c)].bag != x.bag) return false;
                break;
        }
    }
    return true;
}

}  // namespace alphacover
