#include "ghs/symbolic_matrix.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ghs {

void SymbolicMatrix::set(int i, int j, const LinearForm& f) {
    if (i < 1 || i > h_ || j < 1 || j > h_)
        throw std::invalid_argument("matrix index out of range");
    if (f.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch");
    entries_[(i - 1) * h_ + (j - 1)] = f;
    entries_[(j - 1) * h_ + (i - 1)] = f;
}

std::vector<LinearForm> SymbolicMatrix::diagonal() const {
    std::vector<LinearForm> d;
    for (int i = 1; i <= h_; ++i) d.push_back(at(i, i));
    return d;
}

std::vector<LinearForm> SymbolicMatrix::upper_entries() const {
    std::vector<LinearForm> out;
    for (int i = 1; i <= h_; ++i)
        for (int j = i; j <= h_; ++j)
            if (!at(i, j).is_zero()) out.push_back(at(i, j));
    return out;
}

namespace {

// Minor over the rows depth..h-1 and the columns in `cols`.  Expanding rows
// in a fixed order makes the column mask a complete memo key.
MultiPoly minor_det(const SymbolicMatrix& m, unsigned cols,
                    std::unordered_map<unsigned, MultiPoly>& memo) {
    int h = m.dim();
    int depth = h - __builtin_popcount(cols);
    if (cols == 0) return MultiPoly::constant(m.nvars(), 1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    MultiPoly result(m.nvars());
    int sign = 1;
    for (int j = 0; j < h; ++j) {
        if (!((cols >> j) & 1)) continue;
        const LinearForm& entry = m.at(depth + 1, j + 1);
        if (!entry.is_zero()) {
            MultiPoly sub = minor_det(m, cols & ~(1u << j), memo);
            MultiPoly term = entry.to_poly() * sub;
            if (sign < 0) term = -term;
            result += term;
        }
        sign = -sign;
    }
    memo.emplace(cols, result);
    return result;
}

}  // namespace

MultiPoly determinant(const SymbolicMatrix& m, int max_dim) {
    if (m.dim() > max_dim) throw std::domain_error("dimension bound exceeded");
    if (m.dim() == 0) return MultiPoly::constant(m.nvars(), 1);
    std::unordered_map<unsigned, MultiPoly> memo;
    return minor_det(m, (1u << m.dim()) - 1, memo);
}

SymbolicMatrix generic_symmetric_matrix(int h) {
    int n = h * (h + 1) / 2;
    SymbolicMatrix m(h, n);
    int next = 1;
    for (int i = 1; i <= h; ++i) {
        LinearForm f(n);
        f.c[next - 1] = 1;
        m.set(i, i, f);
        ++next;
    }
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j) {
            LinearForm f(n);
            f.c[next - 1] = 1;
            m.set(i, j, f);
            ++next;
        }
    return m;
}

}  // namespace ghs
