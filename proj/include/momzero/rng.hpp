#ifndef MOMZERO_RNG_HPP
#define MOMZERO_RNG_HPP

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace momzero {

namespace detail {
// splitmix64, used only to derive child seeds deterministically.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Seeded source of reproducible draws. mt19937_64 output is pinned by the
/// C++ standard, so identical seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return gen_(); }

    /// Uniform draw in [0, bound), bias-free via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return x % bound;
    }

    long long int_in(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::int_in: empty range");
        const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(below(width));
    }

    /// Random rational with numerator in [lo, hi] and denominator in [1, max_den].
    Rational rational_in(long long lo, long long hi, unsigned max_den) {
        const long long n = int_in(lo, hi);
        const long long d = int_in(1, static_cast<long long>(max_den));
        return Rational(Integer(n), Integer(d));
    }

    /// Independent child stream; deterministic in (seed, stream id).
    Rng fork(std::uint64_t stream) const {
        return Rng(detail::mix64(seed_ ^ detail::mix64(stream + 1)));
    }

  private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

}  // namespace momzero

#endif
