#include "ghs/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ghs/kirchhoff.hpp"

namespace ghs {

namespace {

// Monomials as flat variable-index lists; evaluation is then a plain product.
struct CompiledPoly {
    std::vector<std::vector<int>> factors;  // indices into the point, 0-based
    std::vector<unsigned> coeffs;           // already reduced mod q
};

CompiledPoly compile(const MultiPoly& p, unsigned q) {
    CompiledPoly c;
    for (const auto& [m, coeff] : p.terms()) {
        std::vector<int> f;
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) f.push_back(static_cast<int>(i));
        Int r = coeff % q;
        if (r < 0) r += q;
        c.factors.push_back(std::move(f));
        c.coeffs.push_back(static_cast<unsigned>(r.get_ui()));
    }
    return c;
}

unsigned eval_compiled(const CompiledPoly& c, const std::vector<unsigned>& x,
                       unsigned q) {
    std::uint64_t acc = 0;
    for (size_t t = 0; t < c.factors.size(); ++t) {
        std::uint64_t v = c.coeffs[t];
        for (int i : c.factors[t]) {
            v = v * x[i] % q;
            if (v == 0) break;
        }
        acc += v;
    }
    return static_cast<unsigned>(acc % q);
}

}  // namespace

CountRecord count_points(const Multigraph& g, unsigned q,
                         const CountOptions& opt) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    int n = g.edge_count();
    if (std::pow(double(q), double(n)) > opt.work_bound)
        throw std::domain_error("work bound exceeded");

    CompiledPoly poly;
    if (opt.tree_route) {
        // Complements of the spanning trees, multiplied out on the fly.
        CompiledPoly c;
        EdgeSet all = n == 0 ? 0 : ((EdgeSet{1} << n) - 1);
        for (EdgeSet t : spanning_trees(g)) {
            std::vector<int> f;
            for (int e = 1; e <= n; ++e)
                if (edge_in(all & ~t, e)) f.push_back(e - 1);
            c.factors.push_back(std::move(f));
            c.coeffs.push_back(1 % q);
        }
        poly = std::move(c);
    } else {
        poly = compile(kirchhoff(g), q);
    }

    unsigned long long zeros = 0, total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    std::vector<unsigned> x(n, 0);
    if (opt.reversed) x.assign(n, q - 1);
    for (unsigned long long i = 0; i < total; ++i) {
        if (eval_compiled(poly, x, q) == 0) ++zeros;
        // Odometer step.
        for (int k = n - 1; k >= 0; --k) {
            if (!opt.reversed) {
                if (++x[k] < q) break;
                x[k] = 0;
            } else {
                if (x[k]-- > 0) break;
                x[k] = q - 1;
            }
        }
    }

    CountRecord rec;
    rec.graph_digest = graph_digest(g);
    rec.q = q;
    rec.affine_count = Int(static_cast<unsigned long>(zeros));
    if (zeros == 0) {
        // Constant non-vanishing polynomial: the hypersurface is empty.
        rec.projective_count = 0;
        return rec;
    }
    Int num = rec.affine_count - 1;
    if (num % (q - 1) != 0) throw std::logic_error("cone identity failed");
    rec.projective_count = num / (q - 1);
    return rec;
}

std::optional<std::vector<Int>> polynomial_fit(
    const std::vector<CountRecord>& records) {
    if (records.size() < 2) throw std::invalid_argument("need >= 2 records");
    std::vector<CountRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.q < b.q; });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].q == sorted[i - 1].q)
            throw std::invalid_argument("duplicate primes");

    size_t k = sorted.size() - 1;  // training points; the last is held out
    // Newton divided differences over Q.
    std::vector<mpq_class> xs(k), coef(k);
    for (size_t i = 0; i < k; ++i) {
        xs[i] = sorted[i].q;
        coef[i] = mpq_class(sorted[i].projective_count);
    }
    for (size_t level = 1; level < k; ++level)
        for (size_t i = k - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // Expand into monomial coefficients, lowest degree first.
    std::vector<mpq_class> poly{0};
    std::vector<mpq_class> basis{1};  // product (x - x_0)...(x - x_{j-1})
    for (size_t j = 0; j < k; ++j) {
        if (poly.size() < basis.size()) poly.resize(basis.size(), 0);
        for (size_t d = 0; d < basis.size(); ++d) poly[d] += coef[j] * basis[d];
        // basis *= (x - x_j)
        basis.insert(basis.begin(), 0);
        for (size_t d = 0; d + 1 < basis.size(); ++d)
            basis[d] -= xs[j] * basis[d + 1];
    }
    std::vector<Int> out;
    for (const auto& c : poly) {
        if (c.get_den() != 1) return std::nullopt;  // not an integer polynomial
        out.push_back(c.get_num());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    // Holdout check at the largest prime.
    Int x = sorted[k].q, value = 0, power = 1;
    for (const auto& c : out) {
        value += c * power;
        power *= x;
    }
    if (value != sorted[k].projective_count) return std::nullopt;
    return out;
}

}  // namespace ghs
