#ifndef MOMZERO_MOMENT_SEQUENCE_HPP
#define MOMZERO_MOMENT_SEQUENCE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouping.hpp"
#include "multiindex.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace momzero {

/// Truncated moment table: exact values y_a for every |a| <= order.
class MomentSequence {
  public:
    using Table = std::map<MultiIndex, Rational, GlexLess>;

    MomentSequence(std::size_t n, unsigned order, bool normalized)
        : n_(n), order_(order), normalized_(normalized) {}

    std::size_t variable_count() const { return n_; }
    unsigned order() const { return order_; }
    bool normalized() const { return normalized_; }
    const Table& table() const { return values_; }

    const Rational& value(const MultiIndex& a) const {
        if (a.size() != n_) throw std::invalid_argument("moment sequence: index length mismatch");
        if (a.degree() > order_)
            throw std::invalid_argument("moment sequence: degree " + std::to_string(a.degree()) +
                                        " exceeds order " + std::to_string(order_));
        auto it = values_.find(a);
        if (it == values_.end())
            throw std::invalid_argument("moment sequence: missing entry " + a.str());
        return it->second;
    }

    void set(const MultiIndex& a, Rational v) {
        if (a.size() != n_) throw std::invalid_argument("moment sequence: index length mismatch");
        if (a.degree() > order_) throw std::invalid_argument("moment sequence: degree exceeds order");
        values_[a] = std::move(v);
    }

    bool complete() const {
        return values_.size() == GLexBasis::enumerate(n_, order_).size();
    }

    bool operator==(const MomentSequence& o) const {
        return n_ == o.n_ && order_ == o.order_ && normalized_ == o.normalized_ &&
               values_ == o.values_;
    }

    /// Checks the stored table against the declared shape; throws on defects.
    void validate() const {
        const GLexBasis all = GLexBasis::enumerate(n_, order_);
        for (const MultiIndex& a : all.indices())
            if (values_.find(a) == values_.end())
                throw std::invalid_argument("moment sequence: missing entry " + a.str());
        if (normalized_ && value(MultiIndex::zeros(n_)) != 1)
            throw std::invalid_argument("moment sequence: normalized flag but mass != 1");
    }

  private:
    std::size_t n_;
    unsigned order_;
    bool normalized_;
    Table values_;
};

/// Finitely supported measure: rational points with positive rational weights
/// summing to one.
class AtomicMeasure {
  public:
    AtomicMeasure(std::vector<std::vector<Rational>> points, std::vector<Rational> weights)
        : points_(std::move(points)), weights_(std::move(weights)) {
        if (points_.empty()) throw std::invalid_argument("atomic measure: no atoms");
        if (points_.size() != weights_.size())
            throw std::invalid_argument("atomic measure: point/weight count mismatch");
        const std::size_t n = points_[0].size();
        if (n == 0) throw std::invalid_argument("atomic measure: zero-dimensional points");
        Rational total = 0;
        for (std::size_t l = 0; l < points_.size(); ++l) {
            if (points_[l].size() != n)
                throw std::invalid_argument("atomic measure: inconsistent point dimension");
            if (weights_[l] <= 0) throw std::invalid_argument("atomic measure: weight not positive");
            total += weights_[l];
        }
        if (total != 1) throw std::invalid_argument("atomic measure: weights must sum to 1");
    }

    std::size_t variable_count() const { return points_[0].size(); }
    std::size_t atom_count() const { return points_.size(); }
    const std::vector<Rational>& point(std::size_t l) const { return points_.at(l); }
    const Rational& weight(std::size_t l) const { return weights_.at(l); }

  private:
    std::vector<std::vector<Rational>> points_;
    std::vector<Rational> weights_;
};

/// Moments of the product of normalized one-sided Gamma-type factors:
/// the i-th marginal has y_k = (k + sigma_i)! / sigma_i!.
inline MomentSequence laguerre_product_moments(const std::vector<unsigned>& sigma, unsigned d) {
    const std::size_t n = sigma.size();
    if (n == 0) throw std::invalid_argument("laguerre moments: empty sigma");
    MomentSequence y(n, 2 * d, true);
    const GLexBasis all = GLexBasis::enumerate(n, 2 * d);
    for (const MultiIndex& a : all.indices()) {
        Rational v = 1;
        for (std::size_t i = 0; i < n; ++i)
            v *= Rational(factorial(a[i] + sigma[i]), factorial(sigma[i]));
        y.set(a, v);
    }
    return y;
}

/// Moments of a product measure assembled from one-variable factor sequences.
/// Every factor must be defined at least to the requested order.
inline MomentSequence product_moments(const std::vector<MomentSequence>& factors, unsigned order) {
    if (factors.empty()) throw std::invalid_argument("product moments: no factors");
    bool normalized = true;
    for (const auto& f : factors) {
        if (f.variable_count() != 1)
            throw std::invalid_argument("product moments: factors must be one-variable");
        if (f.order() < order)
            throw std::invalid_argument("product moments: factor order shortfall");
        normalized = normalized && f.normalized();
    }
    const std::size_t n = factors.size();
    MomentSequence y(n, order, normalized);
    const GLexBasis all = GLexBasis::enumerate(n, order);
    for (const MultiIndex& a : all.indices()) {
        Rational v = 1;
        for (std::size_t i = 0; i < n; ++i) v *= factors[i].value(MultiIndex{a[i]});
        y.set(a, v);
    }
    return y;
}

/// Moments of a measure that is a product across the blocks of a grouping.
/// Block j is described by its own sequence in |block j| variables.
inline MomentSequence grouped_product_moments(const Grouping& g,
                                              const std::vector<MomentSequence>& blocks,
                                              unsigned order) {
    if (blocks.size() != g.block_count())
        throw std::invalid_argument("grouped product moments: block count mismatch");
    bool normalized = true;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].variable_count() != g.block(j).size())
            throw std::invalid_argument("grouped product moments: block dimension mismatch");
        if (blocks[j].order() < order)
            throw std::invalid_argument("grouped product moments: block order shortfall");
        normalized = normalized && blocks[j].normalized();
    }
    const std::size_t n = g.variable_count();
    MomentSequence y(n, order, normalized);
    const GLexBasis all = GLexBasis::enumerate(n, order);
    for (const MultiIndex& a : all.indices()) {
        Rational v = 1;
        for (std::size_t j = 0; j < blocks.size(); ++j) v *= blocks[j].value(g.extract(a, j));
        y.set(a, v);
    }
    return y;
}

/// Exact moments of an atomic measure up to degree 2d.
inline MomentSequence atomic_moments(const AtomicMeasure& m, unsigned d) {
    const std::size_t n = m.variable_count();
    MomentSequence y(n, 2 * d, true);
    const GLexBasis all = GLexBasis::enumerate(n, 2 * d);
    for (const MultiIndex& a : all.indices()) {
        Rational v = 0;
        for (std::size_t l = 0; l < m.atom_count(); ++l) {
            Rational t = m.weight(l);
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] > 0) t *= rational_pow(m.point(l)[i], a[i]);
            v += t;
        }
        y.set(a, v);
    }
    return y;
}

/// Seeded random atomic measure: rational coordinates with numerators in
/// [coord_lo, coord_hi] and denominators up to max_den, positive rational
/// weights. Deterministic in the generator state.
inline AtomicMeasure random_atomic_measure(Rng& rng, std::size_t n, std::size_t atoms,
                                           long long coord_lo, long long coord_hi,
                                           unsigned max_den) {
    if (n == 0 || atoms == 0)
        throw std::invalid_argument("random atomic measure: empty shape");
    std::vector<std::vector<Rational>> pts(atoms, std::vector<Rational>(n));
    for (auto& p : pts)
        for (auto& c : p) c = rng.rational_in(coord_lo, coord_hi, max_den);
    std::vector<long long> raw(atoms);
    long long total = 0;
    for (auto& w : raw) {
        w = rng.int_in(1, 9);
        total += w;
    }
    std::vector<Rational> weights(atoms);
    for (std::size_t l = 0; l < atoms; ++l)
        weights[l] = Rational(Integer(raw[l]), Integer(total));
    return AtomicMeasure(std::move(pts), std::move(weights));
}

/// Moments of the normalized planar measure with density proportional to
/// (1 - x^2 - y^2)^t on the unit disk, t a natural number. Odd exponents give
/// zero; for even exponents (2a, 2b) the value is
///   (2a)! (2b)! (t+1)! / (4^(a+b) a! b! (a+b+t+1)!).
/// The normalization makes every moment rational (the pi factors cancel).
inline MomentSequence disk_moments(unsigned t, unsigned d) {
    MomentSequence y(2, 2 * d, true);
    const GLexBasis all = GLexBasis::enumerate(2, 2 * d);
    for (const MultiIndex& idx : all.indices()) {
        if (idx[0] % 2 == 1 || idx[1] % 2 == 1) {
            y.set(idx, Rational(0));
            continue;
        }
        const unsigned a = idx[0] / 2, b = idx[1] / 2;
        Integer num = factorial(2 * a) * factorial(2 * b) * factorial(t + 1);
        Integer den = factorial(a) * factorial(b) * factorial(a + b + t + 1);
        den <<= 2 * (a + b);  // 4^(a+b)
        y.set(idx, Rational(num, den));
    }
    return y;
}

/// Shifts atom l by eps[l] in the first coordinate. The perturbed measure must
/// have pairwise distinct first coordinates; collisions are an error.
inline AtomicMeasure perturb_first_coordinate(const AtomicMeasure& m,
                                              const std::vector<Rational>& eps) {
    if (eps.size() != m.atom_count())
        throw std::invalid_argument("perturb: need one epsilon per atom");
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> w;
    for (std::size_t l = 0; l < m.atom_count(); ++l) {
        auto p = m.point(l);
        p[0] += eps[l];
        pts.push_back(std::move(p));
        w.push_back(m.weight(l));
    }
    for (std::size_t l = 0; l < pts.size(); ++l)
        for (std::size_t k = l + 1; k < pts.size(); ++k)
            if (pts[l][0] == pts[k][0])
                throw std::invalid_argument("perturb: first coordinates collide");
    return AtomicMeasure(std::move(pts), std::move(w));
}

struct ProductRankResult {
    bool is_product = false;
    std::vector<Rational> u;  // u_i = y_(i,0)
    std::vector<Rational> v;  // v_j = y_(0,j) / y_(0,0)
};

/// Two-variable product test: the grid (y_(i,j))_{i,j<=d} has rank <= 1
/// exactly when the truncated sequence factors as y_(i,j) = u_i v_j.
inline ProductRankResult is_product_rank_test(const MomentSequence& y, unsigned d) {
    if (y.variable_count() != 2)
        throw std::invalid_argument("product rank test: needs a two-variable sequence");
    if (y.order() < 2 * d)
        throw std::invalid_argument("product rank test: sequence order shortfall");
    const std::size_t s = d + 1;
    std::vector<std::vector<Rational>> grid(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            grid[i][j] = y.value(MultiIndex{static_cast<std::uint32_t>(i),
                                            static_cast<std::uint32_t>(j)});

    ProductRankResult out;
    // Rank <= 1: every row is a rational multiple of the first nonzero row.
    std::size_t r0 = s;
    for (std::size_t i = 0; i < s && r0 == s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (grid[i][j] != 0) {
                r0 = i;
                break;
            }
    bool rank_le_1 = true;
    if (r0 < s) {
        std::size_t j0 = 0;
        while (grid[r0][j0] == 0) ++j0;
        for (std::size_t i = 0; i < s && rank_le_1; ++i) {
            const Rational lambda = grid[i][j0] / grid[r0][j0];
            for (std::size_t j = 0; j < s; ++j)
                if (grid[i][j] != lambda * grid[r0][j]) {
                    rank_le_1 = false;
                    break;
                }
        }
    }
    out.is_product = rank_le_1;
    if (rank_le_1 && grid[0][0] != 0) {
        for (std::size_t i = 0; i < s; ++i) out.u.push_back(grid[i][0]);
        for (std::size_t j = 0; j < s; ++j) out.v.push_back(grid[0][j] / grid[0][0]);
    }
    return out;
}

/// Relabels variables: new variable k carries the moments of old variable
/// perm[k]. perm must be a permutation of {0..n-1}.
inline MomentSequence permute_variables(const MomentSequence& y,
                                        const std::vector<std::size_t>& perm) {
    const std::size_t n = y.variable_count();
    if (perm.size() != n) throw std::invalid_argument("permute: length mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("permute: not a permutation");
        seen[p] = true;
    }
    MomentSequence out(n, y.order(), y.normalized());
    const GLexBasis all = GLexBasis::enumerate(n, y.order());
    for (const MultiIndex& a : all.indices()) {
        std::vector<std::uint32_t> old(n);
        for (std::size_t k = 0; k < n; ++k) old[perm[k]] = a[k];
        out.set(a, y.value(MultiIndex(std::move(old))));
    }
    return out;
}

}  // namespace momzero

#endif
