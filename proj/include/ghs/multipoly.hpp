#ifndef GHS_MULTIPOLY_HPP
#define GHS_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ghs/intlinalg.hpp"

namespace ghs {

// Exponent vector of a monomial.
using Monomial = std::vector<std::uint8_t>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic order, descending, so that map iteration starts at the
// leading term.  Total degree decides first, then lex on exponents.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/**
 * Sparse multivariate polynomial with exact integer coefficients over a fixed
 * number of variables x1..xn.  Zero coefficients are never stored; terms sit
 * in graded-lex order, which fixes the text and JSON serializations.
 */
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Int, GrlexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Int& c);
    static MultiPoly variable(int nvars, int var);  // var in 1..nvars

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    // Adds c * x^m, dropping the term if the total cancels.
    void add_term(const Monomial& m, const Int& c);
    Int coefficient(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const = default;

    // Common total degree of all terms, or nullopt when mixed.  The zero
    // polynomial reports degree 0.
    std::optional<int> homogeneous_degree() const;

    // Replaces variable var by the given linear form (coefficients over a
    // possibly larger variable set); the result lives over max(n, form size)
    // variables.
    MultiPoly substitute(int var, const std::vector<Int>& form_coeffs) const;

    // Evaluation at a point over F_p; p must be prime.
    unsigned eval_mod_p(const std::vector<unsigned>& point, unsigned p) const;

    // Exact integer evaluation.
    Int eval(const std::vector<Int>& point) const;

    std::string to_string() const;
    std::string to_json() const;

private:
    int nvars_ = 0;
    TermMap terms_;
};

/**
 * A homogeneous degree-1 form: integer coefficient vector over x1..xn.
 */
struct LinearForm {
    std::vector<Int> c;

    LinearForm() = default;
    explicit LinearForm(int nvars) : c(nvars, 0) {}

    int nvars() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm operator-() const;
    bool operator==(const LinearForm& o) const = default;

    MultiPoly to_poly() const;
    std::string to_string() const;
};

// Dimension over Q of the span of the given forms.
int span_dimension(const std::vector<LinearForm>& forms);

bool is_prime(unsigned p);

}  // namespace ghs

#endif
