#include "ghs/intlinalg.hpp"

#include <algorithm>

namespace ghs {

int zmat_rank(ZMat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpz_class a = m[r][c], b = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

ZMat hnf_rows(ZMat m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination in column c below row r.
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (piv == rows ||
                                     cmp(abs(m[i][c]), abs(m[piv][c])) < 0))
                    piv = i;
            if (piv == rows) break;
            std::swap(m[r], m[piv]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                mpz_class q = m[i][c] / m[r][c];
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

namespace {

// HNF of m with the unimodular row transformation tracked alongside.
void hnf_with_transform(ZMat& m, ZMat& u) {
    size_t rows = m.size();
    if (rows == 0) return;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (piv == rows ||
                                     cmp(abs(m[i][c]), abs(m[piv][c])) < 0))
                    piv = i;
            if (piv == rows) break;
            std::swap(m[r], m[piv]);
            std::swap(u[r], u[piv]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                mpz_class q = m[i][c] / m[r][c];
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                    for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
                }
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] != 0) {
            if (m[r][c] < 0) {
                for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
                for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
            }
            ++r;
        }
    }
}

}  // namespace

ZMat kernel(const ZMat& m, int cols) {
    // Rows of the kernel of m come out of the transform rows that map the
    // transposed matrix to zero.
    size_t n = static_cast<size_t>(cols);
    ZMat t(n, ZVec(m.size(), 0));  // transpose, n rows
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
    ZMat u(n, ZVec(n, 0));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    if (m.empty()) return hnf_rows(u);
    hnf_with_transform(t, u);
    ZMat ker;
    for (size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (const auto& x : t[i])
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) ker.push_back(u[i]);
    }
    return hnf_rows(ker);
}

ZMat saturate(const ZMat& rows, int cols) {
    return kernel(kernel(rows, cols), cols);
}

bool lattice_contains(const ZMat& rows, const ZVec& v) {
    ZMat h = hnf_rows(rows);
    ZVec r = v;
    size_t cols = v.size();
    for (const auto& row : h) {
        size_t c = 0;
        while (c < cols && row[c] == 0) ++c;
        if (c == cols) continue;
        if (r[c] == 0) continue;
        if (r[c] % row[c] != 0) return false;
        mpz_class q = r[c] / row[c];
        for (size_t j = c; j < cols; ++j) r[j] -= q * row[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

bool same_lattice(const ZMat& a, const ZMat& b) {
    ZMat ha = hnf_rows(a), hb = hnf_rows(b);
    return ha == hb;
}

}  // namespace ghs
