#ifndef MOMZERO_TESTUTIL_HPP
#define MOMZERO_TESTUTIL_HPP

// Shared test helpers. The disk-moment oracle here is derived independently
// of the library's closed form: the density is expanded binomially and each
// monomial is integrated over the disk in polar form, with the angular
// integral reduced through complex exponentials. Both routes must agree
// exactly, which pins the closed form.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <momzero/momzero.hpp>

namespace testutil {

using momzero::AtomicMeasure;
using momzero::Integer;
using momzero::MomentSequence;
using momzero::OrthoBasis;
using momzero::Rational;
using momzero::Rng;

/// Integral of x^a y^b over the unit disk, divided by pi. Zero for odd
/// exponents. For even ones, writing cos^a sin^b through complex
/// exponentials leaves only the constant angular term
///   A = (-1)^{b/2} 2^{-(a+b)} sum_{k+l=(a+b)/2} C(a,k) C(b,l) (-1)^{b-l},
/// and the radial factor integrates to 1/(a+b+2), so the value is
/// 2A/(a+b+2) once the 2 pi from the angular integral is divided by pi.
inline Rational disk_monomial_integral_over_pi(unsigned a, unsigned b) {
    if (a % 2 == 1 || b % 2 == 1) return Rational(0);
    const unsigned half = (a + b) / 2;
    Integer sum = 0;
    for (unsigned k = 0; k <= a && k <= half; ++k) {
        const unsigned l = half - k;
        if (l > b) continue;
        Integer term = momzero::binomial(a, k) * momzero::binomial(b, l);
        if ((b - l) % 2 == 1) term = -term;
        sum += term;
    }
    Rational A(sum, Integer(1) << (a + b));
    if ((b / 2) % 2 == 1) A = -A;
    return Rational(2) * A / Rational(a + b + 2);
}

/// Normalized moments of the density (1 - x^2 - y^2)^t on the unit disk,
/// assembled from the multinomial expansion of the density.
inline Rational disk_moment_oracle(unsigned t, unsigned ax, unsigned ay) {
    auto raw = [&](unsigned a, unsigned b) {
        Rational v = 0;
        for (unsigned p = 0; p <= t; ++p)
            for (unsigned q = 0; p + q <= t; ++q) {
                const Integer coef =
                    momzero::factorial(t) /
                    (momzero::factorial(p) * momzero::factorial(q) * momzero::factorial(t - p - q));
                Rational term(coef);
                if ((p + q) % 2 == 1) term = -term;
                v += term * disk_monomial_integral_over_pi(a + 2 * p, b + 2 * q);
            }
        return v;
    };
    return raw(ax, ay) / raw(0, 0);
}

struct PdInstance {
    AtomicMeasure measure;
    MomentSequence y;
    OrthoBasis basis;
};

/// Seeded random atomic measure whose order-d moment matrix passes the
/// positive-definite gate; retries deterministically on failure.
inline PdInstance random_pd_atomic(const Rng& base, std::size_t n, unsigned d,
                                   std::size_t atoms, long long coord_bound = 5,
                                   unsigned max_den = 4, unsigned tries = 200) {
    for (unsigned attempt = 0; attempt < tries; ++attempt) {
        Rng stream = base.fork(attempt);
        AtomicMeasure m = momzero::random_atomic_measure(stream, n, atoms, -coord_bound,
                                                         coord_bound, max_den);
        MomentSequence y = momzero::atomic_moments(m, d);
        momzero::GramSchmidtOutcome gs =
            momzero::try_gram_schmidt(momzero::MomentMatrix::build(y, d));
        if (gs.positive_definite)
            return {std::move(m), std::move(y), *std::move(gs.basis)};
    }
    throw std::runtime_error("random_pd_atomic: no positive-definite draw in " +
                             std::to_string(tries) + " tries");
}

}  // namespace testutil

#endif
