#ifndef MOMZERO_INVERSE_PATTERN_HPP
#define MOMZERO_INVERSE_PATTERN_HPP

#include <atomic>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grouping.hpp"
#include "linalg.hpp"
#include "moment_matrix.hpp"
#include "moment_sequence.hpp"
#include "multiindex.hpp"
#include "ortho_basis.hpp"

namespace momzero {

/// Exact inverse of a truncated moment matrix, assembled from the monic
/// factorization as Z = C^T diag(1/h) C. Entrywise this is
///   z_{ab} = sum over rows g >=glex a, b of c_{ga} c_{gb} / h_g,
/// so the support questions reduce to questions about the basis rows.
class InverseMatrix {
  public:
    static InverseMatrix from_basis(const OrthoBasis& B) {
        InverseMatrix z;
        z.source_.push_back(B);
        const std::size_t s = B.size();
        z.z_.assign(s, std::vector<Rational>(s, Rational(0)));
        for (std::size_t g = 0; g < s; ++g) {
            const Rational inv_h = Rational(1) / B.norm(g);
            for (std::size_t a = 0; a <= g; ++a) {
                if (B.coeff(g, a) == 0) continue;
                const Rational left = B.coeff(g, a) * inv_h;
                for (std::size_t b = 0; b <= a; ++b) {
                    if (B.coeff(g, b) == 0) continue;
                    z.z_[a][b] += left * B.coeff(g, b);
                }
            }
        }
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = a + 1; b < s; ++b) z.z_[a][b] = z.z_[b][a];
        return z;
    }

    unsigned order() const { return source().order(); }
    const GLexBasis& basis() const { return source().basis(); }
    const OrthoBasis& source() const { return source_.front(); }
    std::size_t size() const { return z_.size(); }
    const Mat& entries() const { return z_; }

    const Rational& at(std::size_t i, std::size_t j) const { return z_.at(i).at(j); }
    const Rational& at(const MultiIndex& a, const MultiIndex& b) const {
        return z_[basis().position(a)][basis().position(b)];
    }

    /// Inverse of the order-r truncation, derived from the same factorization
    /// (the monic rows nest, so no fresh elimination is needed).
    InverseMatrix nested(unsigned r) const {
        if (r > order()) throw std::invalid_argument("inverse: nested order above own order");
        if (r == order()) return *this;
        return from_basis(source().truncate(r));
    }

  private:
    InverseMatrix() = default;
    std::vector<OrthoBasis> source_;  // single element; vector dodges default-ctor needs
    Mat z_;
};

/// Entry (a, b) of every order-d inverse is forced to vanish, for every
/// measure, exactly when deg lcm(X^a, X^b) > d.
inline bool congenital_zero_predicate(const MultiIndex& a, const MultiIndex& b, unsigned d) {
    if (a.degree() > d || b.degree() > d)
        throw std::invalid_argument("congenital predicate: index outside truncation");
    return lcm_max(a, b).degree() > d;
}

/// Blockwise refinement for measures that are products across the blocks of
/// g: the forced-zero condition is that every index dominating a and b
/// blockwise in glex has total degree above d. Closed form: the cheapest such
/// dominator takes the glex-larger of the two subindices in each block, so
/// the test is sum_j max(|a_j|, |b_j|) > d.
inline bool grouped_congenital_predicate(const MultiIndex& a, const MultiIndex& b, unsigned d,
                                         const Grouping& g) {
    if (a.degree() > d || b.degree() > d)
        throw std::invalid_argument("grouped predicate: index outside truncation");
    if (a.size() != g.variable_count() || b.size() != g.variable_count())
        throw std::invalid_argument("grouped predicate: dimension mismatch");
    unsigned total = 0;
    for (std::size_t j = 0; j < g.block_count(); ++j)
        total += std::max(g.extract(a, j).degree(), g.extract(b, j).degree());
    return total > d;
}

/// Same predicate by direct enumeration of candidate dominators of degree
/// <= d. Kept as an independent cross-check for the closed form.
inline bool grouped_congenital_bruteforce(const MultiIndex& a, const MultiIndex& b, unsigned d,
                                          const Grouping& g) {
    if (a.degree() > d || b.degree() > d)
        throw std::invalid_argument("grouped predicate: index outside truncation");
    const std::size_t n = g.variable_count();
    const GLexBasis candidates = GLexBasis::enumerate(n, d);
    for (const MultiIndex& cand : candidates.indices()) {
        bool dominates = true;
        for (std::size_t j = 0; j < g.block_count() && dominates; ++j) {
            const MultiIndex cj = g.extract(cand, j);
            if (glex_less(cj, g.extract(a, j)) || glex_less(cj, g.extract(b, j)))
                dominates = false;
        }
        if (dominates) return false;  // a dominator inside the truncation exists
    }
    return true;
}

/// Boolean zero table of an inverse. The diagonal is never zero when the
/// matrix comes from a positive definite instance.
class ZeroPattern {
  public:
    explicit ZeroPattern(const InverseMatrix& z) : basis_(z.basis()) {
        const std::size_t s = z.size();
        zero_.assign(s, std::vector<bool>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) zero_[i][j] = (z.at(i, j) == 0);
    }

    const GLexBasis& basis() const { return basis_; }
    std::size_t size() const { return zero_.size(); }
    bool zero_at(std::size_t i, std::size_t j) const { return zero_.at(i).at(j); }
    bool zero_at(const MultiIndex& a, const MultiIndex& b) const {
        return zero_[basis_.position(a)][basis_.position(b)];
    }

    std::size_t offdiagonal_zero_count() const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (i != j && zero_[i][j]) ++c;
        return c;
    }

  private:
    GLexBasis basis_;
    std::vector<std::vector<bool>> zero_;
};

struct PatternMismatch {
    MultiIndex a, b;
    bool predicted_zero = false;  // what the predicate says
    Rational value;               // the actual inverse entry
};

/// Compares the zero pattern of Z against the lcm-degree predicate at every
/// pair, in both directions. Empty result means exact agreement.
inline std::vector<PatternMismatch> compare_pattern_vs_predicate(const InverseMatrix& Z) {
    std::vector<PatternMismatch> out;
    const GLexBasis& basis = Z.basis();
    const unsigned d = Z.order();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const bool predicted = congenital_zero_predicate(basis.at(i), basis.at(j), d);
            const bool zero = (Z.at(i, j) == 0);
            if (predicted != zero)
                out.push_back({basis.at(i), basis.at(j), predicted, Z.at(i, j)});
        }
    return out;
}

/// One-sided check for grouped instances: every pair the grouped predicate
/// forces must actually be zero. (Additional zeros are legitimate; symmetric
/// factors produce parity zeros beyond the forced set.)
inline std::vector<PatternMismatch> check_forced_zeros_grouped(const InverseMatrix& Z,
                                                               const Grouping& g) {
    std::vector<PatternMismatch> out;
    const GLexBasis& basis = Z.basis();
    const unsigned d = Z.order();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (grouped_congenital_predicate(basis.at(i), basis.at(j), d, g) && Z.at(i, j) != 0)
                out.push_back({basis.at(i), basis.at(j), true, Z.at(i, j)});
    return out;
}

struct VWitness {
    MultiIndex row, col;
    Rational value;
};

struct VCheckResult {
    bool holds = true;
    std::size_t forced_pairs = 0;  // pairs where the emptiness hypothesis held
    std::vector<VWitness> violations;
};

/// Vanishing condition on the order-r inverse for a contiguous split (X | Y):
/// for each pair of indices (a,b), (a',b') in the truncation, if no index
/// (g,s) of degree <= r glex-dominates both while s divides-dominates both
/// b and b' (componentwise s >= max(b,b')), then the corresponding inverse
/// entry must vanish. Pairs whose hypothesis fails are unconstrained.
inline VCheckResult check_zero_in_inverse(const InverseMatrix& Z, const Grouping& split,
                                          unsigned r) {
    if (r > Z.order()) throw std::invalid_argument("check_zero_in_inverse: r above order");
    if (split.variable_count() != Z.basis().variable_count())
        throw std::invalid_argument("check_zero_in_inverse: split dimension mismatch");
    if (!split.is_contiguous_pair())
        throw std::invalid_argument(
            "check_zero_in_inverse: split must be two contiguous blocks with the "
            "conditioned block trailing");

    const InverseMatrix Zr = Z.nested(r);
    const GLexBasis& basis = Zr.basis();
    VCheckResult out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const MultiIndex beta_i = split.extract(basis.at(i), 1);
        for (std::size_t j = 0; j <= i; ++j) {
            const MultiIndex need = lcm_max(beta_i, split.extract(basis.at(j), 1));
            bool dominator_inside = false;
            // Candidates glex-above both pairs form a suffix of the basis.
            for (std::size_t k = i; k < basis.size() && !dominator_inside; ++k)
                if (fg_leq(need, split.extract(basis.at(k), 1))) dominator_inside = true;
            if (dominator_inside) continue;
            ++out.forced_pairs;
            if (Zr.at(i, j) != 0) {
                out.holds = false;
                out.violations.push_back({basis.at(i), basis.at(j), Zr.at(i, j)});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

struct InstanceOutcome {
    std::string label;
    bool pass = false;
    std::vector<PatternMismatch> mismatches;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<InstanceOutcome> instances;
    std::vector<std::string> anomalies;

    bool pass() const {
        for (const auto& io : instances)
            if (!io.pass) return false;
        return anomalies.empty();
    }
};

namespace detail {
inline std::string sigma_label(const std::vector<unsigned>& sigma) {
    std::string s = "sigma=[";
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(sigma[i]);
    }
    return s + "]";
}
}  // namespace detail

/// For each weight vector, builds the product-factor instance, inverts M_d
/// exactly and compares the zero pattern with the lcm-degree predicate at
/// every pair. Pairs that are nonzero by the predicate but vanish in every
/// sampled instance are flagged as anomalies (the existential half of the
/// statement is sampled, not proven).
inline SuiteReport verify_product_theorem(std::size_t n, unsigned d,
                                          const std::vector<std::vector<unsigned>>& sigmas,
                                          unsigned jobs = 1) {
    SuiteReport rep;
    rep.suite = "product-forced-zeros";
    const GLexBasis basis = GLexBasis::enumerate(n, d);
    const std::size_t s = basis.size();
    for (const auto& sigma : sigmas)
        if (sigma.size() != n)
            throw std::invalid_argument("verify_product_theorem: sigma length mismatch");

    struct Slot {
        InstanceOutcome outcome;
        std::vector<std::vector<bool>> zero;
    };
    std::vector<Slot> slots(sigmas.size());
    auto run_one = [&](std::size_t idx) {
        Slot& slot = slots[idx];
        slot.outcome.label = detail::sigma_label(sigmas[idx]);
        const MomentSequence y = laguerre_product_moments(sigmas[idx], d);
        const OrthoBasis B = gram_schmidt(MomentMatrix::build(y, d));
        const InverseMatrix Z = InverseMatrix::from_basis(B);
        slot.outcome.mismatches = compare_pattern_vs_predicate(Z);
        slot.outcome.pass = slot.outcome.mismatches.empty();
        slot.zero.assign(s, std::vector<bool>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) slot.zero[i][j] = (Z.at(i, j) == 0);
    };

    // Each worker owns whole slots, so the fan-out needs no locking and the
    // merged report is identical for every width.
    if (jobs <= 1 || sigmas.size() <= 1) {
        for (std::size_t k = 0; k < sigmas.size(); ++k) run_one(k);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        const std::size_t width = std::min<std::size_t>(jobs, sigmas.size());
        for (std::size_t w = 0; w < width; ++w)
            pool.emplace_back([&] {
                for (std::size_t k = cursor.fetch_add(1); k < sigmas.size();
                     k = cursor.fetch_add(1))
                    run_one(k);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<bool>> zero_everywhere(s, std::vector<bool>(s, true));
    for (Slot& slot : slots) {
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (!slot.zero[i][j]) zero_everywhere[i][j] = false;
        rep.instances.push_back(std::move(slot.outcome));
    }

    if (!sigmas.empty())
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (zero_everywhere[i][j] &&
                    !congenital_zero_predicate(basis.at(i), basis.at(j), d))
                    rep.anomalies.push_back("entry (" + basis.at(i).str() + "," +
                                            basis.at(j).str() +
                                            ") vanished in every sample but is not forced");
    return rep;
}

struct EquivalenceReport {
    std::string suite;
    bool side_pattern = false;     // inverse-side statement
    bool side_triangular = false;  // basis-side statement
    bool equivalent = false;       // sides agree
    std::vector<PatternMismatch> pattern_witnesses;          // nonzero forced entries
    std::vector<std::pair<MultiIndex, MultiIndex>> triangle_witnesses;
};

/// Equivalence between "every order-r inverse, r <= d, vanishes wherever
/// deg lcm > r" and full triangularity of the basis.
inline EquivalenceReport verify_full_triangularity_equiv(const OrthoBasis& B) {
    EquivalenceReport rep;
    rep.suite = "full-triangularity";
    const unsigned d = B.order();
    bool pattern_ok = true;
    for (unsigned r = 0; r <= d; ++r) {
        const InverseMatrix Zr = InverseMatrix::from_basis(B.truncate(r));
        const GLexBasis& basis = Zr.basis();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (congenital_zero_predicate(basis.at(i), basis.at(j), r) && Zr.at(i, j) != 0) {
                    pattern_ok = false;
                    rep.pattern_witnesses.push_back(
                        {basis.at(i), basis.at(j), true, Zr.at(i, j)});
                }
    }
    const TriangularityReport tri = is_fully_triangular(B);
    rep.side_pattern = pattern_ok;
    rep.side_triangular = tri.holds;
    rep.triangle_witnesses = tri.witnesses;
    rep.equivalent = (rep.side_pattern == rep.side_triangular);
    return rep;
}

/// Equivalence between the vanishing condition at every order r <= d and
/// conditional triangularity with respect to the split.
inline EquivalenceReport verify_conditional_equiv(const OrthoBasis& B, const Grouping& split) {
    EquivalenceReport rep;
    rep.suite = "conditional-triangularity";
    const unsigned d = B.order();
    const InverseMatrix Z = InverseMatrix::from_basis(B);
    bool v_all = true;
    for (unsigned r = 0; r <= d; ++r) {
        const VCheckResult res = check_zero_in_inverse(Z, split, r);
        if (!res.holds) {
            v_all = false;
            for (const auto& w : res.violations)
                rep.pattern_witnesses.push_back({w.row, w.col, true, w.value});
        }
    }
    const TriangularityReport tri = is_conditionally_triangular(B, split);
    rep.side_pattern = v_all;
    rep.side_triangular = tri.holds;
    rep.triangle_witnesses = tri.witnesses;
    rep.equivalent = (rep.side_pattern == rep.side_triangular);
    return rep;
}

}  // namespace momzero

#endif
