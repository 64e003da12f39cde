#include "ghs/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ghs {

void Multigraph::validate() const {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
    if (edge_count() > kMaxEdges) throw std::invalid_argument("too many edges");
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertices || v < 0 || v >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
    }
}

Multigraph wheel(int h) {
    if (h < 3) throw std::invalid_argument("wheel requires h >= 3");
    Multigraph g;
    g.vertices = h + 1;
    for (int i = 1; i <= h; ++i) g.edges.emplace_back(0, i);  // spokes
    for (int i = 1; i <= h; ++i)                              // rim
        g.edges.emplace_back(i, i % h + 1);
    return g;
}

Multigraph banana(int m) {
    if (m < 1) throw std::invalid_argument("banana requires m >= 1");
    Multigraph g;
    g.vertices = 2;
    for (int i = 0; i < m; ++i) g.edges.emplace_back(0, 1);
    return g;
}

Multigraph cycle_graph(int k) {
    if (k < 1) throw std::invalid_argument("cycle requires k >= 1");
    Multigraph g;
    g.vertices = k;
    for (int i = 0; i < k; ++i) g.edges.emplace_back(i, (i + 1) % k);
    return g;
}

Multigraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete requires n >= 1");
    Multigraph g;
    g.vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("sides must be >= 1");
    Multigraph g;
    g.vertices = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
    return g;
}

Multigraph diamond() {
    Multigraph g;
    g.vertices = 4;
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}};
    return g;
}

Multigraph figure_eight() {
    Multigraph g;
    g.vertices = 5;
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
    return g;
}

Multigraph subdivided_wheel() {
    // Vertices: 0..4.  Labels fixed to match the cycle basis in cycles.cpp.
    Multigraph g;
    g.vertices = 5;
    g.edges = {
        {1, 4},  // 1
        {0, 1},  // 2
        {4, 0},  // 3
        {4, 3},  // 4
        {3, 0},  // 5
        {2, 0},  // 6
        {3, 2},  // 7
        {1, 2},  // 8
    };
    return g;
}

namespace {

// Union-find over vertices.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

int component_count(const Multigraph& g) {
    Dsu d(g.vertices);
    int comps = g.vertices;
    for (const auto& [u, v] : g.edges)
        if (d.unite(u, v)) --comps;
    return comps;
}

bool is_connected(const Multigraph& g) { return component_count(g) == 1; }

bool is_two_connected(const Multigraph& g) {
    if (!is_connected(g) || g.edge_count() == 0) return false;
    bool has_loop = false;
    for (int e = 1; e <= g.edge_count(); ++e) has_loop |= g.is_loop(e);
    if (has_loop) return g.vertices == 1 && g.edge_count() == 1;
    if (g.vertices <= 2) return true;
    for (int cut = 0; cut < g.vertices; ++cut) {
        Dsu d(g.vertices);
        int comps = g.vertices - 1;  // ignore the removed vertex
        for (const auto& [u, v] : g.edges) {
            if (u == cut || v == cut) continue;
            if (d.unite(u, v)) --comps;
        }
        if (comps > 1) return false;
    }
    return true;
}

std::pair<int, int> betti(const Multigraph& g) {
    int h0 = component_count(g);
    int h1 = g.edge_count() - g.vertices + h0;
    return {h0, h1};
}

std::vector<std::vector<int>> boundary_matrix(const Multigraph& g) {
    std::vector<std::vector<int>> m(g.vertices,
                                    std::vector<int>(g.edge_count(), 0));
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        m[g.source(e)][e - 1] += 1;
        m[g.target(e)][e - 1] -= 1;
    }
    return m;
}

namespace {

void tree_backtrack(const Multigraph& g, int next_label, EdgeSet chosen,
                    int chosen_count, const Dsu& dsu_in, int need,
                    std::vector<EdgeSet>& out) {
    if (chosen_count == need) {
        out.push_back(chosen);
        return;
    }
    int n = g.edge_count();
    // Not enough non-loop edges left to finish.
    if (n - next_label + 1 < need - chosen_count) return;
    for (int e = next_label; e <= n; ++e) {
        if (g.is_loop(e)) continue;
        Dsu d = dsu_in;
        if (!d.unite(g.source(e), g.target(e))) continue;  // would close a cycle
        tree_backtrack(g, e + 1, chosen | edge_bit(e), chosen_count + 1, d,
                       need, out);
    }
}

}  // namespace

std::vector<EdgeSet> spanning_trees(const Multigraph& g) {
    if (!is_connected(g)) throw std::domain_error("not connected");
    std::vector<EdgeSet> out;
    tree_backtrack(g, 1, 0, 0, Dsu(g.vertices), g.vertices - 1, out);
    return out;
}

Int count_spanning_trees(const Multigraph& g) {
    if (!is_connected(g)) throw std::domain_error("not connected");
    int n = g.vertices;
    if (n <= 1) return 1;
    // Reduced Laplacian (drop the last row/column); loops contribute nothing.
    std::vector<std::vector<Int>> L(n - 1, std::vector<Int>(n - 1, 0));
    for (const auto& [u, v] : g.edges) {
        if (u == v) continue;
        if (u < n - 1) L[u][u] += 1;
        if (v < n - 1) L[v][v] += 1;
        if (u < n - 1 && v < n - 1) {
            L[u][v] -= 1;
            L[v][u] -= 1;
        }
    }
    // Bareiss fraction-free determinant.
    int m = n - 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (L[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < m; ++r)
                if (L[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(L[k], L[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j) {
                L[i][j] = (L[i][j] * L[k][k] - L[i][k] * L[k][j]) / prev;
            }
        prev = L[k][k];
    }
    return sign * L[m - 1][m - 1];
}

bool is_spanning_tree(const Multigraph& g, EdgeSet t) {
    if (edge_count(t) != g.vertices - 1) return false;
    Dsu d(g.vertices);
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (!edge_in(t, e)) continue;
        if (g.is_loop(e)) return false;
        if (!d.unite(g.source(e), g.target(e))) return false;
    }
    int comps = 0;
    for (int v = 0; v < g.vertices; ++v)
        if (d.find(v) == v) ++comps;
    return comps == 1;
}

bool is_bridge(const Multigraph& g, int label) {
    if (g.is_loop(label)) return false;
    Dsu d(g.vertices);
    int comps = g.vertices;
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (e == label) continue;
        if (d.unite(g.source(e), g.target(e))) --comps;
    }
    int before = component_count(g);
    return comps > before;
}

namespace {

void check_label(const Multigraph& g, int label) {
    if (label < 1 || label > g.edge_count())
        throw std::invalid_argument("invalid edge label");
}

}  // namespace

SurgeryResult delete_edge(const Multigraph& g, int label) {
    check_label(g, label);
    SurgeryResult r;
    r.graph.vertices = g.vertices;
    r.old_to_new.assign(g.edge_count() + 1, 0);
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (e == label) continue;
        r.graph.edges.push_back(g.edges[e - 1]);
        r.old_to_new[e] = r.graph.edge_count();
    }
    return r;
}

SurgeryResult contract_edge(const Multigraph& g, int label) {
    check_label(g, label);
    if (g.is_loop(label)) throw std::domain_error("loop contraction");
    int keep = g.source(label), gone = g.target(label);
    SurgeryResult r;
    r.graph.vertices = g.vertices - 1;
    r.old_to_new.assign(g.edge_count() + 1, 0);
    auto remap = [&](int v) {
        if (v == gone) v = keep;
        return v > gone ? v - 1 : v;
    };
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (e == label) continue;
        r.graph.edges.emplace_back(remap(g.source(e)), remap(g.target(e)));
        r.old_to_new[e] = r.graph.edge_count();
    }
    return r;
}

SubdivideResult subdivide_edge(const Multigraph& g, int label) {
    check_label(g, label);
    SubdivideResult r;
    r.graph = g;
    int w = r.graph.vertices++;
    int t = r.graph.edges[label - 1].second;
    r.graph.edges[label - 1].second = w;
    r.graph.edges.emplace_back(w, t);
    r.e1 = label;
    r.e2 = r.graph.edge_count();
    return r;
}

Multigraph parse_graph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    Multigraph g;
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        g.vertices = j.at("vertices").get<int>();
        for (const auto& e : j.at("edges"))
            g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } else {
        std::istringstream in(text);
        std::string line;
        int max_vertex = -1;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            int u, v;
            if (!(ls >> u)) continue;  // blank or comment-only line
            if (!(ls >> v)) throw std::invalid_argument("malformed edge line");
            g.edges.emplace_back(u, v);
            max_vertex = std::max({max_vertex, u, v});
        }
        g.vertices = max_vertex + 1;
    }
    g.validate();
    return g;
}

std::string to_text(const Multigraph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_json(const Multigraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump();
}

std::string graph_digest(const Multigraph& g) {
    std::string s = to_json(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ghs
