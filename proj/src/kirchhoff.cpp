#include "ghs/kirchhoff.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghs {

MultiPoly kirchhoff(const Multigraph& g) {
    int n = g.edge_count();
    MultiPoly p(n);
    if (!is_connected(g)) return p;
    EdgeSet all = n == 0 ? 0 : ((EdgeSet{1} << n) - 1);
    for (EdgeSet t : spanning_trees(g)) {
        EdgeSet complement = all & ~t;
        Monomial m(n, 0);
        for (int e = 1; e <= n; ++e)
            if (edge_in(complement, e)) m[e - 1] = 1;
        p.add_term(m, 1);
    }
    return p;
}

namespace {

MultiPoly dc_recurse(const Multigraph& g, const std::vector<int>& orig_label,
                     int nvars) {
    // Highest-labeled edge that is neither a loop nor a bridge.
    int pick = 0;
    for (int e = g.edge_count(); e >= 1; --e) {
        if (g.is_loop(e) || is_bridge(g, e)) continue;
        pick = e;
        break;
    }
    if (pick == 0) {
        // Only loops and bridges remain: each loop contributes its variable,
        // bridges and trees contribute 1.
        MultiPoly p = MultiPoly::constant(nvars, 1);
        for (int e = 1; e <= g.edge_count(); ++e)
            if (g.is_loop(e))
                p = p * MultiPoly::variable(nvars, orig_label[e]);
        return p;
    }
    SurgeryResult del = delete_edge(g, pick);
    SurgeryResult con = contract_edge(g, pick);
    std::vector<int> del_labels(g.edge_count(), 0), con_labels(g.edge_count(), 0);
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (del.old_to_new[e] > 0) del_labels[del.old_to_new[e]] = orig_label[e];
        if (con.old_to_new[e] > 0) con_labels[con.old_to_new[e]] = orig_label[e];
    }
    MultiPoly xe = MultiPoly::variable(nvars, orig_label[pick]);
    return xe * dc_recurse(del.graph, del_labels, nvars) +
           dc_recurse(con.graph, con_labels, nvars);
}

}  // namespace

MultiPoly kirchhoff_dc(const Multigraph& g) {
    int n = g.edge_count();
    if (!is_connected(g)) return MultiPoly(n);
    std::vector<int> labels(n + 1);
    for (int e = 0; e <= n; ++e) labels[e] = e;
    return dc_recurse(g, labels, n);
}

SymbolicMatrix build_cycle_matrix(const Multigraph& g, const CycleBasis& b) {
    std::string fail = check_cycle_basis(g, b);
    if (!fail.empty()) throw std::domain_error("invalid basis: " + fail);
    int h = b.size(), n = g.edge_count();
    SymbolicMatrix m(h, n);
    for (int i = 1; i <= h; ++i)
        for (int j = i; j <= h; ++j) {
            LinearForm f(n);
            for (int e = 0; e < n; ++e)
                f.c[e] = Int(b.vectors[i - 1][e]) * b.vectors[j - 1][e];
            m.set(i, j, f);
        }
    return m;
}

VerifyReport verify_det_equals_kirchhoff(const Multigraph& g,
                                         const CycleBasis& b) {
    VerifyReport r;
    r.det = determinant(build_cycle_matrix(g, b));
    r.tree_sum = kirchhoff(g);
    r.ok = r.det == r.tree_sum;
    return r;
}

bool check_diagonal_independent(const SymbolicMatrix& m) {
    return span_dimension(m.diagonal()) == m.dim();
}

std::vector<int> NormalizedMatrix::entry_support(int i, int j) const {
    auto it = upper.find({std::min(i, j), std::max(i, j)});
    if (it == upper.end()) return {};
    const Entry& e = it->second;
    if (e.kind == Kind::Fresh) return {e.fresh_index};
    std::vector<int> out;
    for (int k = 0; k < ell; ++k)
        if (e.coeffs[k] != 0) out.push_back(k + 1);
    return out;
}

SymbolicMatrix NormalizedMatrix::scaled_matrix() const {
    SymbolicMatrix m(h, n);
    for (const auto& [pos, e] : upper) {
        LinearForm f(n);
        if (e.kind == Kind::Fresh) {
            f.c[e.fresh_index - 1] = 1;
        } else {
            for (int k = 0; k < ell; ++k) f.c[k] = e.coeffs[k];
        }
        m.set(pos.first, pos.second, f);
    }
    return m;
}

namespace {

// Solve sum_k q_k * basis_k = target over Q; empty result means independent.
// On success the presentation is scaled to integers: scale * target =
// sum coeffs_k * basis_k with scale > 0 and gcd(scale, content) = 1.
struct Expression {
    bool dependent = false;
    Int scale = 1;
    std::vector<Int> coeffs;
};

Expression express_in_span(const std::vector<LinearForm>& basis,
                           const LinearForm& target) {
    Expression out;
    size_t f = basis.size(), n = target.c.size();
    if (f == 0) return out;
    // Columns: basis forms, then the target; rows: the n coordinates.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(f + 1));
    for (size_t j = 0; j < f; ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = basis[j].c[i];
    for (size_t i = 0; i < n; ++i) a[i][f] = target.c[i];
    std::vector<int> pivot_row(f, -1);
    size_t row = 0;
    for (size_t col = 0; col < f && row < n; ++col) {
        size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[row], a[p]);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            mpq_class factor = a[i][col] / a[row][col];
            for (size_t j = col; j <= f; ++j) a[i][j] -= factor * a[row][j];
        }
        pivot_row[col] = static_cast<int>(row);
        ++row;
    }
    // Inconsistent rows mean the target sits outside the span.
    for (size_t i = row; i < n; ++i)
        if (a[i][f] != 0) return out;
    out.dependent = true;
    std::vector<mpq_class> q(f, 0);
    for (size_t col = 0; col < f; ++col)
        if (pivot_row[col] >= 0)
            q[col] = a[pivot_row[col]][f] / a[pivot_row[col]][col];
    Int scale = 1;
    for (const auto& x : q) scale = lcm(scale, x.get_den());
    out.scale = scale;
    out.coeffs.resize(f);
    for (size_t k = 0; k < f; ++k)
        out.coeffs[k] = q[k].get_num() * (scale / q[k].get_den());
    return out;
}

}  // namespace

NormalizedMatrix normalize(const SymbolicMatrix& m) {
    int h = m.dim();
    for (int i = 1; i <= h; ++i)
        if (m.at(i, i).is_zero()) throw std::domain_error("dependent diagonal");
    if (!check_diagonal_independent(m))
        throw std::domain_error("dependent diagonal");

    NormalizedMatrix nm;
    nm.h = h;
    nm.n = m.nvars();
    nm.original = m;

    // Visit order: diagonal, then off-diagonal bands.
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= h; ++i) order.emplace_back(i, i);
    for (int band = 1; band < h; ++band)
        for (int i = 1; i + band <= h; ++i) order.emplace_back(i, i + band);

    for (auto [i, j] : order) {
        const LinearForm& entry = m.at(i, j);
        if (entry.is_zero()) continue;
        Expression ex = express_in_span(nm.fresh_forms, entry);
        NormalizedMatrix::Entry e;
        if (ex.dependent) {
            e.kind = NormalizedMatrix::Kind::Dependent;
            e.scale = ex.scale;
            e.coeffs = ex.coeffs;
        } else {
            nm.fresh_forms.push_back(entry);
            nm.fresh_positions.emplace_back(i, j);
            e.kind = NormalizedMatrix::Kind::Fresh;
            e.fresh_index = static_cast<int>(nm.fresh_forms.size());
        }
        nm.upper.emplace(std::make_pair(i, j), std::move(e));
    }
    nm.ell = static_cast<int>(nm.fresh_forms.size());
    // Dependent coefficient vectors were sized before later fresh variables
    // appeared; pad them to length ell.
    for (auto& [pos, e] : nm.upper)
        if (e.kind == NormalizedMatrix::Kind::Dependent)
            e.coeffs.resize(nm.ell, 0);
    if (nm.ell > nm.n)
        throw std::logic_error("span larger than ambient space");
    return nm;
}

ExpandedDet expanded_determinant(const NormalizedMatrix& nm, int max_dim) {
    // Common denominator over all entries, then one integer determinant.
    Int d = 1;
    for (const auto& [pos, e] : nm.upper)
        if (e.kind == NormalizedMatrix::Kind::Dependent) d = lcm(d, e.scale);
    SymbolicMatrix a(nm.h, nm.n);
    for (const auto& [pos, e] : nm.upper) {
        LinearForm f(nm.n);
        if (e.kind == NormalizedMatrix::Kind::Fresh) {
            f.c[e.fresh_index - 1] = d;
        } else {
            Int mult = d / e.scale;
            for (int k = 0; k < nm.ell; ++k) f.c[k] = mult * e.coeffs[k];
        }
        a.set(pos.first, pos.second, f);
    }
    MultiPoly det = determinant(a, max_dim);
    // det = d^h * (true determinant); strip what divides out exactly.
    Int dh;
    mpz_pow_ui(dh.get_mpz_t(), d.get_mpz_t(), nm.h);
    Int content = 0;
    for (const auto& [mon, c] : det.terms()) content = gcd(content, c);
    Int g = content == 0 ? dh : gcd(content, dh);
    ExpandedDet out;
    out.scale = dh / g;
    out.det = MultiPoly(nm.n);
    for (const auto& [mon, c] : det.terms()) out.det.add_term(mon, c / g);
    return out;
}

}  // namespace ghs
