#ifndef MOMZERO_POLYNOMIAL_HPP
#define MOMZERO_POLYNOMIAL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiindex.hpp"
#include "rational.hpp"

namespace momzero {

/// Sparse polynomial with exact rational coefficients. Terms are kept in a
/// glex-ordered map, so iteration order is deterministic.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, Rational, GlexLess>;

    explicit Polynomial(std::size_t n) : n_(n) {}

    static Polynomial constant(std::size_t n, const Rational& c) {
        Polynomial p(n);
        p.add_term(MultiIndex::zeros(n), c);
        return p;
    }

    static Polynomial monomial(const MultiIndex& a, const Rational& c = Rational(1)) {
        Polynomial p(a.size());
        p.add_term(a, c);
        return p;
    }

    std::size_t variable_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
        return d;
    }

    Rational coeff(const MultiIndex& a) const {
        if (a.size() != n_) throw std::invalid_argument("polynomial: index length mismatch");
        auto it = terms_.find(a);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& a, const Rational& c) {
        if (a.size() != n_) throw std::invalid_argument("polynomial: index length mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(a, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same(o);
        Polynomial r = *this;
        for (const auto& [a, c] : o.terms_) r.add_term(a, c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        require_same(o);
        Polynomial r(n_);
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) r.add_term(a + b, ca * cb);
        return r;
    }

    Polynomial operator*(const Rational& s) const {
        Polynomial r(n_);
        if (s == 0) return r;
        for (const auto& [a, c] : terms_) r.terms_.emplace(a, c * s);
        return r;
    }

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Glex-largest term.
    const MultiIndex& leading_index() const {
        if (terms_.empty()) throw std::domain_error("polynomial: zero has no leading term");
        return terms_.rbegin()->first;
    }

    const Rational& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("polynomial: zero has no leading term");
        return terms_.rbegin()->second;
    }

    Polynomial monic() const { return *this * (Rational(1) / leading_coeff()); }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != n_) throw std::invalid_argument("polynomial: point length mismatch");
        Rational total = 0;
        for (const auto& [a, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < n_; ++i)
                if (a[i] > 0) t *= rational_pow(point[i], a[i]);
            total += t;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + rational_str(it->second) + ")*X^" + it->first.str();
        }
        return s;
    }

  private:
    void require_same(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("polynomial: variable count mismatch");
    }

    std::size_t n_;
    TermMap terms_;
};

}  // namespace momzero

#endif
