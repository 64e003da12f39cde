#include "ghs/torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ghs {

WeightLattice weight_lattice(const MultiPoly& f, WeightConvention conv) {
    if (f.is_zero()) throw std::domain_error("zero polynomial");
    int n = f.nvars();
    std::vector<Monomial> mons;
    for (const auto& [m, c] : f.terms()) mons.push_back(m);
    ZMat rows;
    if (conv == WeightConvention::Zero) {
        for (const auto& m : mons) {
            ZVec r(n);
            for (int i = 0; i < n; ++i) r[i] = int(m[i]);
            rows.push_back(std::move(r));
        }
    } else {
        for (size_t k = 1; k < mons.size(); ++k) {
            ZVec r(n);
            for (int i = 0; i < n; ++i)
                r[i] = int(mons[k][i]) - int(mons[0][i]);
            rows.push_back(std::move(r));
        }
    }
    WeightLattice out;
    out.n = n;
    out.convention = conv;
    out.basis = kernel(rows, n);
    return out;
}

int projective_rank(const MultiPoly& f) {
    if (f.is_zero()) throw std::domain_error("zero polynomial");
    if (!f.homogeneous_degree()) throw std::domain_error("inhomogeneous input");
    return weight_lattice(f, WeightConvention::Constant).rank() - 1;
}

namespace {

int off_index(int h, int i, int j) {
    // Row-major position of (i,j), i < j, in the upper off-diagonal list.
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += h - a;
    return idx + (j - i - 1);
}

}  // namespace

bool lambda_h_member(const WeightSystem& ws) {
    int h = ws.h;
    if (static_cast<int>(ws.diag.size()) != h) return false;
    if (static_cast<int>(ws.off_diag.size()) != h * (h - 1) / 2) return false;
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j)
            if (2 * ws.off_diag[off_index(h, i, j)] != ws.diag[i - 1] + ws.diag[j - 1])
                return false;
    return true;
}

WeightLattice lambda_h_lattice(int h) {
    int m = h + h * (h - 1) / 2;
    ZMat rows;
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j) {
            ZVec r(m, 0);
            r[h + off_index(h, i, j)] = 2;
            r[i - 1] -= 1;
            r[j - 1] -= 1;
            rows.push_back(std::move(r));
        }
    WeightLattice out;
    out.n = m;
    out.convention = WeightConvention::Constant;
    out.basis = kernel(rows, m);
    return out;
}

WeightSystem extend_weight_system(const WeightSystem& ws,
                                  std::optional<Int> omega11) {
    int h = ws.h + 1;
    if (ws.h < 1) throw std::invalid_argument("empty system");
    Int top = omega11 ? *omega11 : ws.diag[0] + 2;
    for (const auto& d : ws.diag)
        if ((top - d) % 2 != 0) throw std::domain_error("parity violation");
    WeightSystem out;
    out.h = h;
    out.diag.push_back(top);
    out.diag.insert(out.diag.end(), ws.diag.begin(), ws.diag.end());
    for (int i = 2; i <= h; ++i)
        out.off_diag.push_back((top + out.diag[i - 1]) / 2);
    // The old off-diagonal block keeps its row-major order.
    out.off_diag.insert(out.off_diag.end(), ws.off_diag.begin(),
                        ws.off_diag.end());
    return out;
}

WeightSystem restrict_weight_system(const WeightSystem& ws) {
    if (ws.h < 2) throw std::invalid_argument("nothing to restrict");
    WeightSystem out;
    out.h = ws.h - 1;
    out.diag.assign(ws.diag.begin() + 1, ws.diag.end());
    out.off_diag.assign(ws.off_diag.begin() + (ws.h - 1), ws.off_diag.end());
    return out;
}

ClusterPartition clusters(const NormalizedMatrix& nm) {
    std::vector<std::pair<int, int>> positions;
    for (const auto& [pos, e] : nm.upper) positions.push_back(pos);
    int p = static_cast<int>(positions.size());
    std::vector<int> parent(p);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Link all positions sharing a fresh variable.
    std::map<int, int> first_with_var;
    for (int k = 0; k < p; ++k) {
        auto [i, j] = positions[k];
        for (int v : nm.entry_support(i, j)) {
            auto it = first_with_var.find(v);
            if (it == first_with_var.end())
                first_with_var[v] = k;
            else
                parent[find(k)] = find(it->second);
        }
    }
    std::map<int, std::vector<std::pair<int, int>>> grouped;
    for (int k = 0; k < p; ++k) grouped[find(k)].push_back(positions[k]);

    ClusterPartition out;
    for (auto& [root, members] : grouped) {
        std::sort(members.begin(), members.end());
        out.clusters.push_back(members);
    }
    std::sort(out.clusters.begin(), out.clusters.end());

    for (const auto& [pos, e] : nm.upper) {
        if (e.kind != NormalizedMatrix::Kind::Dependent) continue;
        auto [i, j] = pos;
        // Diagonal fresh variables of row i and column j.
        auto diag_var = [&](int d) {
            auto it = nm.upper.find({d, d});
            return it->second.fresh_index;
        };
        int vi = diag_var(i), vj = diag_var(j);
        bool has_i = e.coeffs[vi - 1] != 0, has_j = e.coeffs[vj - 1] != 0;
        if (!has_i && !has_j) out.excessive.insert(pos);
    }
    int excess = static_cast<int>(out.excessive.size());
    for (const auto& c : out.clusters) excess += static_cast<int>(c.size()) - 1;
    out.excess = excess;
    return out;
}

int rank_lower_bound(const NormalizedMatrix& nm) {
    int delta = clusters(nm).excess;
    return std::max(0, nm.h - 1 + nm.n - nm.ell - delta);
}

bool ExactRankResult::contains_variable_weights(const ZVec& vw) const {
    if (lattice.empty()) return false;
    size_t h = lattice[0].size() - vw.size();
    // Project the lattice onto the variable-weight coordinates and test
    // membership there.
    ZMat proj;
    for (const auto& row : lattice)
        proj.emplace_back(row.begin() + h, row.end());
    return lattice_contains(proj, vw);
}

ExactRankResult exact_diagonal_rank(const NormalizedMatrix& nm) {
    int h = nm.h, n = nm.n;
    int cols = h + n;
    ZMat rows;
    for (const auto& [pos, e] : nm.upper) {
        auto [i, j] = pos;
        for (int v : nm.entry_support(i, j)) {
            ZVec r(cols, 0);
            r[h + v - 1] = 2;
            r[i - 1] -= 1;
            r[j - 1] -= 1;
            rows.push_back(std::move(r));
        }
    }
    ExactRankResult out;
    out.lattice = kernel(rows, cols);
    out.rank = static_cast<int>(out.lattice.size()) - 1;
    for (const auto& row : out.lattice) {
        WeightSystem ws;
        ws.h = h;
        ws.diag.assign(row.begin(), row.begin() + h);
        ws.var_weights.assign(row.begin() + h, row.end());
        out.basis.push_back(std::move(ws));
    }
    return out;
}

bool verify_action(const MultiPoly& f, const ZVec& weights) {
    if (static_cast<int>(weights.size()) != f.nvars())
        throw std::invalid_argument("weight vector length mismatch");
    bool first = true;
    Int value = 0;
    for (const auto& [m, c] : f.terms()) {
        Int s = 0;
        for (int i = 0; i < f.nvars(); ++i) s += weights[i] * int(m[i]);
        if (first) {
            value = s;
            first = false;
        } else if (s != value) {
            return false;
        }
    }
    return true;
}

}  // namespace ghs
