#include "ghs/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ghs {

MultiPoly MultiPoly::constant(int nvars, const Int& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    if (var < 1 || var > nvars) throw std::invalid_argument("variable index");
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[var - 1] = 1;
    p.terms_[m] = 1;
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable-count mismatch");
    MultiPoly r(a.nvars_);
    Monomial m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return std::nullopt;
    return d;
}

MultiPoly MultiPoly::substitute(int var, const std::vector<Int>& form) const {
    if (var < 1 || var > nvars_) throw std::invalid_argument("variable index");
    int n = std::max(nvars_, static_cast<int>(form.size()));
    MultiPoly form_poly(n);
    for (int i = 0; i < static_cast<int>(form.size()); ++i) {
        if (form[i] == 0) continue;
        Monomial m(n, 0);
        m[i] = 1;
        form_poly.add_term(m, form[i]);
    }
    MultiPoly result(n);
    for (const auto& [m, c] : terms_) {
        Monomial base(n, 0);
        for (int i = 0; i < nvars_; ++i) base[i] = m[i];
        int k = base[var - 1];
        base[var - 1] = 0;
        MultiPoly piece(n);
        piece.add_term(base, c);
        for (int i = 0; i < k; ++i) piece = piece * form_poly;
        result += piece;
    }
    return result;
}

unsigned MultiPoly::eval_mod_p(const std::vector<unsigned>& point,
                               unsigned p) const {
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point length mismatch");
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = mpz_class(c % p >= 0 ? c % p : c % p + p).get_ui();
        for (int i = 0; i < nvars_ && t; ++i)
            for (int e = 0; e < m[i]; ++e) t = t * point[i] % p;
        acc = (acc + t) % p;
    }
    return static_cast<unsigned>(acc);
}

Int MultiPoly::eval(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point length mismatch");
    Int acc = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

namespace {

void append_monomial(std::ostream& out, const Monomial& m, const Int& c) {
    Int a = abs(c);
    bool printed = false;
    if (a != 1 || total_degree(m) == 0) {
        out << a.get_str();
        printed = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (printed) out << '*';
        out << 'x' << (i + 1);
        if (m[i] > 1) out << '^' << int(m[i]);
        printed = true;
    }
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        append_monomial(out, m, c);
    }
    return out.str();
}

std::string MultiPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json term = nlohmann::json::array();
        term.push_back(c.get_str());
        nlohmann::json exps = nlohmann::json::array();
        for (auto e : m) exps.push_back(int(e));
        term.push_back(exps);
        arr.push_back(term);
    }
    return arr.dump();
}

bool LinearForm::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("variable-count mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("variable-count mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

LinearForm LinearForm::operator-() const {
    LinearForm r(nvars());
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
}

MultiPoly LinearForm::to_poly() const {
    MultiPoly p(nvars());
    for (int i = 0; i < nvars(); ++i) {
        if (c[i] == 0) continue;
        Monomial m(nvars(), 0);
        m[i] = 1;
        p.add_term(m, c[i]);
    }
    return p;
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

int span_dimension(const std::vector<LinearForm>& forms) {
    if (forms.empty()) return 0;
    ZMat m;
    for (const auto& f : forms) m.push_back(f.c);
    return zmat_rank(std::move(m));
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace ghs
