#include "ghs/cycles.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ghs {

EdgeSet CycleBasis::support(int i) const {
    EdgeSet s = 0;
    for (int e = 1; e <= n; ++e)
        if (vectors[i][e - 1] != 0) s |= edge_bit(e);
    return s;
}

bool is_simple_cycle_support(const Multigraph& g, EdgeSet support) {
    if (support == 0) return false;
    thread_local std::vector<int> degree, root;
    degree.assign(g.vertices, 0);
    root.assign(g.vertices, -1);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (!edge_in(support, e)) continue;
        int u = g.source(e), v = g.target(e);
        degree[u] += 1;
        degree[v] += 1;  // a loop adds 2 to its vertex
        if (root[u] < 0) root[u] = u;
        if (root[v] < 0) root[v] = v;
        root[find(u)] = find(v);
    }
    int components = 0;
    for (int v = 0; v < g.vertices; ++v) {
        if (root[v] < 0) continue;
        if (degree[v] != 2) return false;
        if (find(v) == v) ++components;
    }
    return components == 1;
}

std::vector<int> orient_simple_cycle(const Multigraph& g, EdgeSet support) {
    std::vector<int> vec(g.edge_count(), 0);
    int start = 0;
    for (int e = 1; e <= g.edge_count(); ++e)
        if (edge_in(support, e)) {
            start = e;
            break;
        }
    if (start == 0) throw std::invalid_argument("empty cycle support");
    // Walk the cycle starting along `start` in its own direction.
    vec[start - 1] = 1;
    if (g.is_loop(start)) return vec;
    int at = g.target(start);
    int stop = g.source(start);
    EdgeSet used = edge_bit(start);
    while (at != stop) {
        bool advanced = false;
        for (int e = 1; e <= g.edge_count(); ++e) {
            if (!edge_in(support, e) || edge_in(used, e)) continue;
            if (g.source(e) == at) {
                vec[e - 1] = 1;
                at = g.target(e);
            } else if (g.target(e) == at) {
                vec[e - 1] = -1;
                at = g.source(e);
            } else {
                continue;
            }
            used |= edge_bit(e);
            advanced = true;
            break;
        }
        if (!advanced) throw std::invalid_argument("support is not a cycle");
    }
    if (used != support) throw std::invalid_argument("support is not a cycle");
    return vec;
}

CycleBasis cycle_basis(const Multigraph& g, EdgeSet tree) {
    if (!is_spanning_tree(g, tree)) throw std::domain_error("not a spanning tree");
    // Parent pointers by BFS over tree edges from vertex 0.
    std::vector<int> parent_edge(g.vertices, 0);  // signed label into parent
    std::vector<int> parent(g.vertices, -1);
    std::vector<bool> seen(g.vertices, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 1; e <= g.edge_count(); ++e) {
            if (!edge_in(tree, e)) continue;
            int u = g.source(e), w = g.target(e);
            if (u == v && !seen[w]) {
                seen[w] = true;
                parent[w] = v;
                parent_edge[w] = e;  // edge points v -> w
                q.push(w);
            } else if (w == v && !seen[u]) {
                seen[u] = true;
                parent[u] = v;
                parent_edge[u] = -e;  // edge points u -> v
                q.push(u);
            }
        }
    }
    std::vector<int> depth(g.vertices, 0);
    for (int v = 0; v < g.vertices; ++v) {
        int d = 0, at = v;
        while (parent[at] != -1) {
            at = parent[at];
            ++d;
        }
        depth[v] = d;
    }

    CycleBasis b;
    b.n = g.edge_count();
    b.provenance = CycleBasis::Provenance::FundamentalFromTree;
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (edge_in(tree, e)) continue;
        std::vector<int> vec(g.edge_count(), 0);
        vec[e - 1] = 1;
        // Tree path from target(e) back to source(e): climb both ends.
        int a = g.target(e), c = g.source(e);
        while (a != c) {
            int* climb = depth[a] >= depth[c] ? &a : &c;
            int sign = climb == &a ? 1 : -1;
            int pe = parent_edge[*climb];
            // Walking from child to parent traverses the edge against its
            // direction when parent_edge is positive (parent -> child).
            vec[std::abs(pe) - 1] += sign * (pe > 0 ? -1 : 1);
            *climb = parent[*climb];
        }
        b.vectors.push_back(std::move(vec));
    }
    return b;
}

std::vector<OrientedCycle> simple_cycles(const Multigraph& g, int max_edges) {
    int n = g.edge_count();
    if (n > max_edges) throw std::domain_error("search bound exceeded");
    std::vector<OrientedCycle> out;
    for (EdgeSet s = 1; s < (EdgeSet{1} << n); ++s) {
        if (!is_simple_cycle_support(g, s)) continue;
        out.push_back({s, orient_simple_cycle(g, s)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ca = edge_count(a.support), cb = edge_count(b.support);
        if (ca != cb) return ca < cb;
        return a.support < b.support;
    });
    return out;
}

namespace {

// Rank over F2 of the support vectors.
int f2_rank(std::vector<EdgeSet> rows) {
    int rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == 0) continue;
        EdgeSet pivot = rows[i] & -rows[i];
        ++rank;
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & pivot) rows[j] ^= rows[i];
    }
    return rank;
}

}  // namespace

std::string check_cycle_basis(const Multigraph& g, const CycleBasis& b) {
    auto [h0, h1] = betti(g);
    if (b.n != g.edge_count()) return "edge count mismatch";
    if (b.size() != h1) return "wrong number of basis vectors";
    auto bm = boundary_matrix(g);
    std::vector<EdgeSet> supports;
    for (int i = 0; i < b.size(); ++i) {
        const auto& vec = b.vectors[i];
        if (static_cast<int>(vec.size()) != b.n) return "vector length mismatch";
        for (int v = 0; v < g.vertices; ++v) {
            long s = 0;
            for (int e = 0; e < b.n; ++e) s += long{bm[v][e]} * vec[e];
            if (s != 0) return "vector not in kernel of boundary map";
        }
        for (int c : vec)
            if (c != 0 && c != 1 && c != -1) return "coefficient not in {-1,0,1}";
        if (!is_simple_cycle_support(g, b.support(i)))
            return "support is not a simple cycle";
        supports.push_back(b.support(i));
    }
    if (f2_rank(supports) != h1) return "vectors dependent over F2";
    return "";
}

CycleBasis subdivided_wheel_basis() {
    CycleBasis b;
    b.n = 8;
    b.provenance = CycleBasis::Provenance::UserSupplied;
    b.vectors = {
        {0, 1, 0, 0, 0, 1, 0, 1},      // triangle through edges 2,6,8
        {1, 1, 0, 1, 0, 1, 1, 0},      // pentagon 1,2,4,6,7
        {-1, -1, 0, -1, -1, 0, 0, 0},  // square 1,2,4,5 reversed
        {1, 1, 1, 0, 0, 0, 0, 0},      // triangle 1,2,3
    };
    return b;
}

CycleBasis wheel_face_basis(int h) {
    CycleBasis b;
    b.n = 2 * h;
    b.provenance = CycleBasis::Provenance::FaceBoundaries;
    for (int i = 1; i <= h; ++i) {
        std::vector<int> vec(2 * h, 0);
        vec[i - 1] = 1;             // spoke i
        vec[h + i - 1] = 1;         // rim edge h+i
        vec[i % h] = -1;            // spoke i+1, wrapping to spoke 1
        b.vectors.push_back(std::move(vec));
    }
    return b;
}

}  // namespace ghs
