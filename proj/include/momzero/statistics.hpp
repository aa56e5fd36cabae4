#ifndef MOMZERO_STATISTICS_HPP
#define MOMZERO_STATISTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "inverse_pattern.hpp"
#include "linalg.hpp"
#include "moment_matrix.hpp"
#include "moment_sequence.hpp"
#include "multiindex.hpp"
#include "ortho_basis.hpp"

namespace momzero {

/// Moments of the recentered variables X - E[X], by exact binomial expansion.
/// First moments of the result are zero.
inline MomentSequence center_moments(const MomentSequence& y) {
    const std::size_t n = y.variable_count();
    if (y.order() < 1) throw std::invalid_argument("center: order too small");
    std::vector<Rational> mean(n);
    for (std::size_t i = 0; i < n; ++i) mean[i] = y.value(MultiIndex::unit(n, i));

    MomentSequence out(n, y.order(), y.normalized());
    const GLexBasis all = GLexBasis::enumerate(n, y.order());
    for (const MultiIndex& a : all.indices()) {
        // E prod (X_i - m_i)^{a_i} = sum_{b <= a} prod C(a_i, b_i) (-m_i)^{a_i-b_i} y_b
        Rational total = 0;
        std::vector<std::uint32_t> b(n, 0);
        // Enumerate b componentwise below a.
        while (true) {
            Rational c = 1;
            for (std::size_t i = 0; i < n; ++i) {
                const unsigned drop = a[i] - b[i];
                if (drop > 0) {
                    Rational f = Rational(binomial(a[i], b[i])) * rational_pow(-mean[i], drop);
                    c *= f;
                }
                else {
                    c *= Rational(1);
                }
            }
            total += c * y.value(MultiIndex(b));
            std::size_t i = 0;
            while (i < n && b[i] == a[i]) b[i++] = 0;
            if (i == n) break;
            ++b[i];
        }
        out.set(a, total);
    }
    return out;
}

/// Second-moment block of a centered order-1 moment matrix.
class CovarianceView {
  public:
    CovarianceView(Mat r) : r_(std::move(r)) {}
    std::size_t variable_count() const { return r_.size(); }
    const Mat& matrix() const { return r_; }
    const Rational& at(std::size_t i, std::size_t j) const { return r_.at(i).at(j); }

  private:
    Mat r_;
};

/// Extracts the covariance matrix R from M_1 of a centered sequence. The
/// first row and column of M_1 must vanish off the corner (mean zero); the
/// matrix then splits as diag(mass, R).
inline CovarianceView covariance_block(const MomentMatrix& M1) {
    if (M1.order() != 1) throw std::invalid_argument("covariance block: need an order-1 matrix");
    const std::size_t n = M1.basis().variable_count();
    for (std::size_t i = 1; i <= n; ++i)
        if (M1.at(0, i) != 0)
            throw std::invalid_argument("covariance block: sequence is not centered");
    Mat r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = M1.at(i + 1, j + 1);
    return CovarianceView(std::move(r));
}

/// Covariance of X_i and X_j after regressing both on the remaining
/// variables: cov(X_i, X_j) - cov(Y, X_i)^T var(Y)^{-1} cov(Y, X_j) with
/// Y = all variables other than i and j. Indices are 0-based.
inline Rational partial_covariance(const CovarianceView& V, std::size_t i, std::size_t j) {
    const std::size_t n = V.variable_count();
    if (i >= n || j >= n || i == j)
        throw std::invalid_argument("partial covariance: bad variable pair");
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) rest.push_back(k);
    if (rest.empty()) return V.at(i, j);  // nothing to condition on

    const std::size_t m = rest.size();
    Mat var_y(m, std::vector<Rational>(m));
    std::vector<Rational> cov_yi(m), cov_yj(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) var_y[a][b] = V.at(rest[a], rest[b]);
        cov_yi[a] = V.at(rest[a], i);
        cov_yj[a] = V.at(rest[a], j);
    }
    const std::vector<Rational> w = solve_linear(var_y, cov_yj);  // var(Y)^{-1} cov(Y, X_j)
    Rational correction = 0;
    for (std::size_t a = 0; a < m; ++a) correction += cov_yi[a] * w[a];
    return V.at(i, j) - correction;
}

struct PartialCorrelationEntry {
    std::size_t i = 0, j = 0;      // 0-based pair, i < j
    Rational precision_entry;      // R^{-1}(i, j)
    bool zero = false;             // vanishing partial correlation
    Rational squared_scaled;       // R^{-1}(i,j)^2 / (R^{-1}(i,i) R^{-1}(j,j))
    int sign = 0;                  // sign of the scaled precision entry
};

struct PartialCorrelationView {
    Mat precision;  // R^{-1}, exact
    std::vector<PartialCorrelationEntry> entries;
};

/// Inverts the covariance matrix exactly and reports each off-diagonal pair.
/// The scaled entry R^{-1}(i,j)/sqrt(R^{-1}(i,i) R^{-1}(j,j)) involves square
/// roots, so it is reported as (sign, square); the partial correlation itself
/// is the negative of that scaled value.
inline PartialCorrelationView partial_correlation_report(const CovarianceView& V) {
    PartialCorrelationView out;
    out.precision = mat_inverse(V.matrix());
    const std::size_t n = V.variable_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PartialCorrelationEntry e;
            e.i = i;
            e.j = j;
            e.precision_entry = out.precision[i][j];
            e.zero = (e.precision_entry == 0);
            e.squared_scaled = e.precision_entry * e.precision_entry /
                               (out.precision[i][i] * out.precision[j][j]);
            e.sign = sign(e.precision_entry);
            out.entries.push_back(std::move(e));
        }
    return out;
}

struct PairAgreementReport {
    std::size_t i = 0, j = 0;          // 0-based pair
    Rational precision_entry;          // R^{-1}(i, j)
    bool precision_zero = false;       // inverse-side statement
    bool conditionally_triangular = false;  // basis-side statement at order 1
    bool agree = false;
    std::vector<std::pair<MultiIndex, MultiIndex>> triangle_witnesses;
};

/// Degree-1 bridge between the precision matrix and the basis: R^{-1}(i,j)
/// vanishes exactly when the order-1 basis is conditionally triangular with
/// (X_i, X_j) as the trailing block. The sequence must be centered with M_1
/// positive definite.
inline PairAgreementReport pair_agreement_check(const MomentSequence& y, std::size_t i,
                                                std::size_t j) {
    const std::size_t n = y.variable_count();
    if (i >= n || j >= n || i == j)
        throw std::invalid_argument("pair check: bad variable pair");
    if (n < 3) throw std::invalid_argument("pair check: needs at least three variables");

    PairAgreementReport rep;
    rep.i = i;
    rep.j = j;

    const MomentMatrix M1 = MomentMatrix::build(y, 1);
    if (!is_positive_definite(M1))
        throw std::domain_error("pair check: order-1 moment matrix not positive definite");
    const CovarianceView V = covariance_block(M1);
    const Mat precision = mat_inverse(V.matrix());
    rep.precision_entry = precision[i][j];
    rep.precision_zero = (rep.precision_entry == 0);

    // Recast with (X_i, X_j) as the trailing pair: permute the variables so
    // the conditioned pair sits at the end, then test the order-1 basis.
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) perm.push_back(k);
    perm.push_back(i);
    perm.push_back(j);
    const MomentSequence yp = permute_variables(y, perm);
    const OrthoBasis B = gram_schmidt(MomentMatrix::build(yp, 1));
    const TriangularityReport tri =
        is_conditionally_triangular(B, Grouping::contiguous_pair(n, n - 2));
    rep.conditionally_triangular = tri.holds;
    rep.triangle_witnesses = tri.witnesses;
    rep.agree = (rep.precision_zero == rep.conditionally_triangular);
    return rep;
}

/// Eight-atom centered measure on (X1, X2, X3) built as X2 = X1 + U and
/// X3 = X1 + V with X1, U, V independent signs: the covariance matrix is
/// [[1,1,1],[1,2,1],[1,1,2]] and its inverse vanishes exactly at the
/// (X2, X3) entry, so the pair (2,3) has zero partial covariance.
inline AtomicMeasure zero_partial_covariance_instance() {
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> weights;
    for (int x : {-1, 1})
        for (int u : {-1, 1})
            for (int v : {-1, 1}) {
                pts.push_back({Rational(x), Rational(x + u), Rational(x + v)});
                weights.emplace_back(Integer(1), Integer(8));
            }
    return AtomicMeasure(std::move(pts), std::move(weights));
}

struct CiExperimentReport {
    bool positive_definite = false;
    bool conditional_independence = false;  // holds by construction after the shift
    bool vanishing_condition = false;       // the inverse-side condition at order d
    std::vector<VWitness> violations;       // nonzero entries at forced pairs
    std::size_t atom_count = 0;
};

/// Perturbs the first coordinate of a three-variable atomic measure so every
/// atom sits on its own fiber (making Y_1, Y_2 trivially independent given
/// X), then tests the vanishing condition on the order-d inverse with split
/// X | (Y_1, Y_2). A positive-definite failure is an error so callers can
/// retry with fresh atoms.
inline CiExperimentReport ci_experiment(const AtomicMeasure& base, unsigned d,
                                        const std::vector<Rational>& eps) {
    if (base.variable_count() != 3)
        throw std::invalid_argument("ci experiment: needs variables (X, Y1, Y2)");
    const AtomicMeasure shifted = perturb_first_coordinate(base, eps);

    CiExperimentReport rep;
    rep.atom_count = shifted.atom_count();
    // Distinct first coordinates (guaranteed by the perturbation) mean each
    // conditional law given X is a point mass, so the conditional product
    // property holds trivially.
    rep.conditional_independence = true;

    const MomentSequence y = atomic_moments(shifted, d);
    const MomentMatrix M = MomentMatrix::build(y, d);
    const GramSchmidtOutcome gs = try_gram_schmidt(M);
    if (!gs.positive_definite)
        throw std::domain_error("ci experiment: moment matrix not positive definite");
    rep.positive_definite = true;

    const InverseMatrix Z = InverseMatrix::from_basis(*gs.basis);
    const VCheckResult v = check_zero_in_inverse(Z, Grouping::contiguous_pair(3, 1), d);
    rep.vanishing_condition = v.holds;
    rep.violations = v.violations;
    return rep;
}

}  // namespace momzero

#endif
