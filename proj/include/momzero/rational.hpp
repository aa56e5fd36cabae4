#ifndef MOMZERO_RATIONAL_HPP
#define MOMZERO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace momzero {

// All arithmetic in the library is exact. A "zero" result is a genuine zero,
// never a small number.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline int sign(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// Canonical "numerator/denominator" form, denominator always present.
inline std::string rational_str(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "n" or "n/d" with optional leading minus on the numerator.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw std::runtime_error("bad rational: '" + std::string(text) + "'"); };
    std::size_t start = text.find_first_not_of(" \t");
    std::size_t stop = text.find_last_not_of(" \t");
    if (start == std::string_view::npos) bad();
    text = text.substr(start, stop - start + 1);

    const std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);

    auto check_int = [&](std::string_view s) {
        if (s.empty()) bad();
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad();
    };
    check_int(num);
    Integer n{std::string(num)};
    Integer d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        check_int(den);
        if (den[0] == '-') bad();  // sign lives on the numerator
        d = Integer{std::string(den)};
        if (d == 0) bad();
    }
    return Rational(n, d);
}

}  // namespace momzero

#endif
