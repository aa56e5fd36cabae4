#ifndef MOMZERO_MOMENT_MATRIX_HPP
#define MOMZERO_MOMENT_MATRIX_HPP

#include <cstddef>
#include <stdexcept>

#include "linalg.hpp"
#include "moment_sequence.hpp"
#include "multiindex.hpp"
#include "polynomial.hpp"

namespace momzero {

/// Truncated moment matrix M_d(y): rows and columns indexed by the glex basis
/// of degree <= d, entry (a, b) equal to y_{a+b}. Symmetric by construction,
/// with the generalized Hankel property that the entry depends on a+b only.
class MomentMatrix {
  public:
    static MomentMatrix build(const MomentSequence& y, unsigned d) {
        if (y.order() < 2 * d)
            throw std::invalid_argument("moment matrix: sequence order " +
                                        std::to_string(y.order()) + " < 2d");
        MomentMatrix m;
        m.d_ = d;
        m.basis_ = GLexBasis::enumerate(y.variable_count(), d);
        const std::size_t s = m.basis_.size();
        m.a_.assign(s, std::vector<Rational>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                m.a_[i][j] = y.value(m.basis_.at(i) + m.basis_.at(j));
        return m;
    }

    unsigned order() const { return d_; }
    const GLexBasis& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    const Mat& entries() const { return a_; }

    const Rational& at(std::size_t i, std::size_t j) const { return a_.at(i).at(j); }

    const Rational& at(const MultiIndex& a, const MultiIndex& b) const {
        return a_[basis_.position(a)][basis_.position(b)];
    }

  private:
    MomentMatrix() = default;
    unsigned d_ = 0;
    GLexBasis basis_;
    Mat a_;
};

/// The Riesz functional: applies the moment table linearly to a polynomial.
inline Rational apply_functional(const MomentSequence& y, const Polynomial& p) {
    if (p.variable_count() != y.variable_count())
        throw std::invalid_argument("apply_functional: variable count mismatch");
    if (p.degree() > y.order())
        throw std::invalid_argument("apply_functional: polynomial degree exceeds order");
    Rational total = 0;
    for (const auto& [a, c] : p.terms()) total += c * y.value(a);
    return total;
}

/// Bilinear pairing <f, h> = f^T M h over coefficient vectors in the basis of
/// degree <= d. Both polynomials must live inside the truncation.
inline Rational inner_product(const Polynomial& f, const Polynomial& h, const MomentMatrix& M) {
    const GLexBasis& basis = M.basis();
    auto coords = [&](const Polynomial& p) {
        std::vector<std::pair<std::size_t, Rational>> v;
        for (const auto& [a, c] : p.terms()) {
            if (!basis.contains(a))
                throw std::invalid_argument("inner_product: degree exceeds matrix order");
            v.emplace_back(basis.position(a), c);
        }
        return v;
    };
    Rational total = 0;
    for (const auto& [i, ci] : coords(f))
        for (const auto& [j, cj] : coords(h)) total += ci * cj * M.at(i, j);
    return total;
}

}  // namespace momzero

#endif
