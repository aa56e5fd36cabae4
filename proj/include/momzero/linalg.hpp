#ifndef MOMZERO_LINALG_HPP
#define MOMZERO_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace momzero {

/// Dense rational matrix, row major. Small sizes only; everything is exact.
using Mat = std::vector<std::vector<Rational>>;

inline Mat mat_identity(std::size_t s) {
    Mat m(s, std::vector<Rational>(s, Rational(0)));
    for (std::size_t i = 0; i < s; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t r = a.size();
    const std::size_t k = b.size();
    if (r == 0 || k == 0) return {};
    if (a[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
    const std::size_t c = b[0].size();
    Mat out(r, std::vector<Rational>(c, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

inline std::vector<Rational> mat_vec(const Mat& a, const std::vector<Rational>& x) {
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    }
    return out;
}

inline Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat out(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

inline bool mat_is_identity(const Mat& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
    return true;
}

/// Gauss-Jordan inverse. Pivoting picks the first nonzero entry; with exact
/// arithmetic there is no stability concern. Throws on singular input.
inline Mat mat_inverse(Mat a) {
    const std::size_t s = a.size();
    for (const auto& row : a)
        if (row.size() != s) throw std::invalid_argument("mat_inverse: not square");
    Mat inv = mat_identity(s);
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && a[piv][col] == 0) ++piv;
        if (piv == s) throw std::domain_error("mat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < s; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < s; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < s; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline std::vector<Rational> solve_linear(Mat a, std::vector<Rational> b) {
    const std::size_t s = a.size();
    if (b.size() != s) throw std::invalid_argument("solve_linear: shape mismatch");
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && a[piv][col] == 0) ++piv;
        if (piv == s) throw std::domain_error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational p = a[col][col];
        for (std::size_t j = col; j < s; ++j) a[col][j] /= p;
        b[col] /= p;
        for (std::size_t i = 0; i < s; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < s; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

/// Determinant by fraction-free-ish Gaussian elimination over the rationals.
inline Rational mat_det(Mat a) {
    const std::size_t s = a.size();
    for (const auto& row : a)
        if (row.size() != s) throw std::invalid_argument("mat_det: not square");
    Rational det = 1;
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && a[piv][col] == 0) ++piv;
        if (piv == s) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < s; ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < s; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace momzero

#endif
