#ifndef MOMZERO_ORTHO_BASIS_HPP
#define MOMZERO_ORTHO_BASIS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grouping.hpp"
#include "linalg.hpp"
#include "moment_matrix.hpp"
#include "multiindex.hpp"
#include "polynomial.hpp"

namespace momzero {

/// Monic orthogonal family for a positive definite truncated moment matrix.
/// Row k holds the coefficients of p_k over basis monomials 0..k, with
/// coefficient 1 at position k, and C M C^T = diag(h) with every h_k > 0.
/// The orthonormal family is obtained by scaling row k with h_k^(-1/2); all
/// zero/nonzero questions are unaffected by that scaling, so the library
/// works with the monic form and stays inside the rationals.
class OrthoBasis {
  public:
    OrthoBasis(GLexBasis basis, std::vector<std::vector<Rational>> rows,
               std::vector<Rational> norms)
        : basis_(std::move(basis)), rows_(std::move(rows)), h_(std::move(norms)) {}

    unsigned order() const { return basis_.max_degree(); }
    const GLexBasis& basis() const { return basis_; }
    std::size_t size() const { return rows_.size(); }

    /// c_{row,col}; zero for col > row (strict upper triangle is not stored).
    Rational coeff(std::size_t row, std::size_t col) const {
        if (row >= rows_.size() || col >= rows_.size())
            throw std::invalid_argument("ortho basis: coefficient index out of range");
        if (col > row) return Rational(0);
        return rows_[row][col];
    }

    const Rational& norm(std::size_t row) const { return h_.at(row); }
    const std::vector<Rational>& norms() const { return h_; }

    Polynomial row_polynomial(std::size_t k) const {
        Polynomial p(basis_.variable_count());
        for (std::size_t j = 0; j <= k; ++j) p.add_term(basis_.at(j), rows_.at(k)[j]);
        return p;
    }

    /// Full square lower-triangular coefficient matrix C.
    Mat coefficient_matrix() const {
        const std::size_t s = rows_.size();
        Mat c(s, std::vector<Rational>(s, Rational(0)));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j <= i; ++j) c[i][j] = rows_[i][j];
        return c;
    }

    /// Basis of the order-r truncation: simply the degree <= r prefix.
    OrthoBasis truncate(unsigned r) const {
        if (r > order()) throw std::invalid_argument("ortho basis: truncation above order");
        GLexBasis small = GLexBasis::enumerate(basis_.variable_count(), r);
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> norms;
        for (std::size_t k = 0; k < small.size(); ++k) {
            rows.emplace_back(rows_[k].begin(), rows_[k].begin() + static_cast<std::ptrdiff_t>(k + 1));
            norms.push_back(h_[k]);
        }
        return OrthoBasis(std::move(small), std::move(rows), std::move(norms));
    }

  private:
    GLexBasis basis_;
    std::vector<std::vector<Rational>> rows_;  // row k has k+1 entries
    std::vector<Rational> h_;
};

struct GramSchmidtOutcome {
    bool positive_definite = false;
    std::size_t failure_index = 0;  // first row with nonpositive squared norm
    std::optional<OrthoBasis> basis;
};

/// Monic Gram-Schmidt against the bilinear form M. Succeeds exactly when M is
/// positive definite; otherwise reports the first failing pivot.
inline GramSchmidtOutcome try_gram_schmidt(const MomentMatrix& M) {
    const std::size_t s = M.size();
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> h;
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            // <X^{e_k}, p_j> = sum_l c_{j,l} M(k, l)
            Rational proj = 0;
            for (std::size_t l = 0; l <= j; ++l) proj += rows[j][l] * M.at(k, l);
            if (proj == 0) continue;
            const Rational mu = proj / h[j];
            for (std::size_t l = 0; l <= j; ++l) c[l] -= mu * rows[j][l];
        }
        // h_k = <p_k, X^{e_k}> by orthogonality and monicity.
        Rational hk = 0;
        for (std::size_t l = 0; l <= k; ++l) hk += c[l] * M.at(l, k);
        if (hk <= 0) {
            GramSchmidtOutcome out;
            out.positive_definite = false;
            out.failure_index = k;
            return out;
        }
        rows.push_back(std::move(c));
        h.push_back(std::move(hk));
    }
    GramSchmidtOutcome out;
    out.positive_definite = true;
    out.basis.emplace(M.basis(), std::move(rows), std::move(h));
    return out;
}

inline OrthoBasis gram_schmidt(const MomentMatrix& M) {
    GramSchmidtOutcome out = try_gram_schmidt(M);
    if (!out.positive_definite)
        throw std::domain_error("gram_schmidt: matrix not positive definite (pivot at position " +
                                std::to_string(out.failure_index) + ", index " +
                                M.basis().at(out.failure_index).str() + ")");
    return *std::move(out.basis);
}

/// Exact positive definiteness test via the pivot signs of the factorization.
inline bool is_positive_definite(const MomentMatrix& M) {
    return try_gram_schmidt(M).positive_definite;
}

/// Determinantal construction of the orthogonal polynomial attached to sigma:
/// the determinant of the square matrix whose first rows are the moment rows
/// (y_{a+b})_{b <=glex sigma} for a <glex sigma and whose last row holds the
/// monomials X^b, normalized monic. Requires y up to order 2|sigma| and a
/// nonsingular leading principal minor.
inline Polynomial determinantal_polynomial(const MomentSequence& y, const MultiIndex& sigma) {
    const std::size_t n = y.variable_count();
    if (sigma.size() != n)
        throw std::invalid_argument("determinantal: index length mismatch");
    if (y.order() < 2 * sigma.degree())
        throw std::invalid_argument("determinantal: sequence order shortfall");
    const GLexBasis basis = GLexBasis::enumerate(n, sigma.degree());
    const std::size_t k = basis.position(sigma);

    if (k == 0) return Polynomial::constant(n, Rational(1));

    // Cofactor expansion along the monomial row: the coefficient of X^{e_j}
    // is (-1)^{k+j} times the minor that drops column j.
    std::vector<Rational> minors(k + 1);
    for (std::size_t drop = 0; drop <= k; ++drop) {
        Mat m(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j <= k; ++j) {
                if (j == drop) continue;
                m[i][cj++] = y.value(basis.at(i) + basis.at(j));
            }
        }
        minors[drop] = mat_det(std::move(m));
    }
    // The coefficient of X^sigma is the leading principal minor det M_{k-1}.
    const Rational lead = minors[k];
    if (lead == 0)
        throw std::domain_error("determinantal: singular leading principal minor at " + sigma.str());
    Polynomial p(n);
    for (std::size_t j = 0; j <= k; ++j) {
        Rational c = minors[j] / lead;
        if ((k + j) % 2 == 1) c = -c;
        p.add_term(basis.at(j), c);
    }
    return p;
}

/// One-variable closed form for the degree-k orthogonal polynomial of the
/// sigma-weighted factor measure:
///   L_k(x) = sum_{j=0..k} C(k+sigma, k-j) (-x)^j / j!.
/// Leading coefficient (-1)^k / k!.
inline Polynomial laguerre_closed_form(unsigned sigma, unsigned k) {
    Polynomial p(1);
    for (unsigned j = 0; j <= k; ++j) {
        Rational c(binomial(k + sigma, k - j), factorial(j));
        if (j % 2 == 1) c = -c;
        p.add_term(MultiIndex{j}, c);
    }
    return p;
}

/// Product of per-variable closed forms, expanded over monomials.
inline Polynomial laguerre_product_closed_form(const std::vector<unsigned>& sigma,
                                               const MultiIndex& alpha) {
    const std::size_t n = sigma.size();
    if (alpha.size() != n)
        throw std::invalid_argument("laguerre product closed form: length mismatch");
    Polynomial p = Polynomial::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial one_var = laguerre_closed_form(sigma[i], alpha[i]);
        Polynomial lifted(n);
        for (const auto& [a, c] : one_var.terms()) {
            std::vector<std::uint32_t> e(n, 0);
            e[i] = a[0];
            lifted.add_term(MultiIndex(std::move(e)), c);
        }
        p = p * lifted;
    }
    return p;
}

/// Measured degree, in the weight exponent of variable `var`, of the X^beta
/// coefficient of the closed-form family member at alpha. The coefficient is
/// a polynomial in that exponent; its degree is probed exactly on the integer
/// grid 0..(alpha_var - beta_var + 2) by finite differences, holding the other
/// weight exponents at 1. Returns the measured degree (alpha_var - beta_var).
inline unsigned coeff_sigma_degree(const MultiIndex& alpha, const MultiIndex& beta,
                                   std::size_t var) {
    const std::size_t n = alpha.size();
    if (beta.size() != n) throw std::invalid_argument("coeff_sigma_degree: length mismatch");
    if (var >= n) throw std::invalid_argument("coeff_sigma_degree: variable out of range");
    if (!fg_leq(beta, alpha))
        throw std::invalid_argument("coeff_sigma_degree: beta must divide alpha componentwise");

    const unsigned span = alpha[var] - beta[var];
    std::vector<Rational> values;
    for (unsigned s = 0; s <= span + 2; ++s) {
        std::vector<unsigned> sig(n, 1);
        sig[var] = s;
        values.push_back(laguerre_product_closed_form(sig, alpha).coeff(beta));
    }
    // Finite differences: degree = last level with a nonzero entry.
    unsigned level = 0;
    unsigned deg = 0;
    std::vector<Rational> cur = values;
    auto nonzero = [](const std::vector<Rational>& v) {
        for (const Rational& q : v)
            if (q != 0) return true;
        return false;
    };
    while (cur.size() > 1) {
        if (nonzero(cur)) deg = level;
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
        cur = std::move(next);
        ++level;
    }
    if (nonzero(cur)) deg = level;
    return deg;
}

struct TriangularityReport {
    bool holds = true;
    // (row index, column index) pairs with a nonzero coefficient where the
    // support condition demands zero.
    std::vector<std::pair<MultiIndex, MultiIndex>> witnesses;
};

/// Full triangularity: every row polynomial p_a is supported on monomials
/// X^g with g dividing X^a (componentwise), not merely g <=glex a.
inline TriangularityReport is_fully_triangular(const OrthoBasis& B) {
    TriangularityReport rep;
    for (std::size_t k = 0; k < B.size(); ++k)
        for (std::size_t j = 0; j < k; ++j)
            if (B.coeff(k, j) != 0 && !fg_leq(B.basis().at(j), B.basis().at(k))) {
                rep.holds = false;
                rep.witnesses.emplace_back(B.basis().at(k), B.basis().at(j));
            }
    return rep;
}

/// Conditional triangularity with respect to a contiguous split (X | Y), Y
/// the trailing block: within each row, the Y-part of every support monomial
/// must divide the Y-part of the row index. The X-part is unconstrained.
inline TriangularityReport is_conditionally_triangular(const OrthoBasis& B, const Grouping& split) {
    if (split.variable_count() != B.basis().variable_count())
        throw std::invalid_argument("conditional triangularity: split dimension mismatch");
    if (!split.is_contiguous_pair())
        throw std::invalid_argument(
            "conditional triangularity: split must be two contiguous blocks with the "
            "conditioned block trailing");
    TriangularityReport rep;
    for (std::size_t k = 0; k < B.size(); ++k) {
        const MultiIndex beta = split.extract(B.basis().at(k), 1);
        for (std::size_t j = 0; j < k; ++j) {
            const MultiIndex beta_col = split.extract(B.basis().at(j), 1);
            if (B.coeff(k, j) != 0 && !fg_leq(beta_col, beta)) {
                rep.holds = false;
                rep.witnesses.emplace_back(B.basis().at(k), B.basis().at(j));
            }
        }
    }
    return rep;
}

}  // namespace momzero

#endif
