#include "ghs/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace ghs {

namespace {

void extend(Multigraph& g, int max_edges,
            const std::function<void(const Multigraph&)>& fn) {
    fn(g);
    if (g.edge_count() == max_edges) return;
    auto last = g.edges.back();
    int used = g.vertices;
    // Next edge (u,v), u <= v, not lexicographically below the last one.
    // u must be an existing vertex; v may introduce vertex `used`.
    for (int u = last.first; u < used; ++u) {
        int vmin = u == last.first ? last.second : u;
        for (int v = vmin; v <= used; ++v) {
            g.edges.emplace_back(u, v);
            int saved = g.vertices;
            if (v == used) g.vertices = used + 1;
            extend(g, max_edges, fn);
            g.vertices = saved;
            g.edges.pop_back();
        }
    }
}

}  // namespace

void enumerate_connected_multigraphs(
    int max_edges, const std::function<void(const Multigraph&)>& fn) {
    if (max_edges < 1) return;
    Multigraph g;
    g.vertices = 1;
    g.edges = {{0, 0}};  // a single loop
    extend(g, max_edges, fn);
    g.vertices = 2;
    g.edges = {{0, 1}};
    extend(g, max_edges, fn);
}

void enumerate_connected_multigraphs_bruteforce(
    int max_edges, const std::function<void(const Multigraph&)>& fn) {
    // Sorted multisets of pairs over {0..k-1}, all k up to max_edges + 1.
    for (int k = 1; k <= max_edges + 1; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < k; ++u)
            for (int v = u; v < k; ++v) pairs.emplace_back(u, v);
        std::vector<int> pick;
        auto recurse = [&](auto&& self, int idx, int remaining) -> void {
            if (!pick.empty()) {
                Multigraph g;
                g.vertices = k;
                for (int p : pick) g.edges.push_back(pairs[p]);
                bool touches_all = true;
                std::vector<bool> seen(k, false);
                for (const auto& [u, v] : g.edges) seen[u] = seen[v] = true;
                for (bool s : seen) touches_all = touches_all && s;
                if (touches_all && is_connected(g)) fn(g);
            }
            if (remaining == 0) return;
            for (int p = idx; p < static_cast<int>(pairs.size()); ++p) {
                pick.push_back(p);
                self(self, p, remaining - 1);  // multisets: repeats allowed
                pick.pop_back();
            }
        };
        recurse(recurse, 0, max_edges);
    }
}

std::vector<std::pair<int, int>> canonical_edge_list(const Multigraph& g) {
    std::vector<int> perm(g.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
        std::vector<std::pair<int, int>> mapped;
        for (const auto& [u, v] : g.edges) {
            int a = perm[u], b = perm[v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace ghs
