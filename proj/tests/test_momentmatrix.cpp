#include <catch2/catch_amalgamated.hpp>
#include <momzero/momzero.hpp>

#include "testutil.hpp"

using namespace momzero;

TEST_CASE("moment matrix entries are the sums of the index pair") {
    const MomentSequence y = laguerre_product_moments({1, 2}, 2);
    const MomentMatrix M = MomentMatrix::build(y, 2);
    REQUIRE(M.size() == 6);
    REQUIRE(M.order() == 2);
    const GLexBasis& b = M.basis();
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) {
            REQUIRE(M.at(i, j) == y.value(b.at(i) + b.at(j)));
            REQUIRE(M.at(i, j) == M.at(j, i));
        }
    REQUIRE(M.at(MultiIndex{1, 1}, MultiIndex{1, 1}) == 72);
    REQUIRE(M.at(MultiIndex{0, 0}, MultiIndex{0, 0}) == 1);
}

TEST_CASE("entries depend on the index sum only") {
    const MomentSequence y = disk_moments(1, 2);
    const MomentMatrix M = MomentMatrix::build(y, 2);
    const GLexBasis& b = M.basis();
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j)
            for (std::size_t k = 0; k < M.size(); ++k)
                for (std::size_t l = 0; l < M.size(); ++l)
                    if (b.at(i) + b.at(j) == b.at(k) + b.at(l))
                        REQUIRE(M.at(i, j) == M.at(k, l));
}

TEST_CASE("atomic moment matrix equals the weighted sum of outer products") {
    Rng rng(7);
    const AtomicMeasure m = random_atomic_measure(rng, 2, 5, -3, 3, 2);
    const MomentSequence y = atomic_moments(m, 2);
    const MomentMatrix M = MomentMatrix::build(y, 2);
    const GLexBasis& b = M.basis();

    Mat expect(M.size(), std::vector<Rational>(M.size(), Rational(0)));
    for (std::size_t l = 0; l < m.atom_count(); ++l) {
        std::vector<Rational> v(M.size());
        for (std::size_t k = 0; k < M.size(); ++k) {
            Rational t = 1;
            for (std::size_t i = 0; i < 2; ++i)
                if (b.at(k)[i] > 0) t *= rational_pow(m.point(l)[i], b.at(k)[i]);
            v[k] = t;
        }
        for (std::size_t r = 0; r < M.size(); ++r)
            for (std::size_t c = 0; c < M.size(); ++c)
                expect[r][c] += m.weight(l) * v[r] * v[c];
    }
    REQUIRE(M.entries() == expect);
}

TEST_CASE("order shortfall is rejected") {
    const MomentSequence y = laguerre_product_moments({1, 2}, 1);  // order 2
    REQUIRE_THROWS_AS(MomentMatrix::build(y, 2), std::invalid_argument);
}

TEST_CASE("the linear functional is linear and matches the table") {
    const MomentSequence y = laguerre_product_moments({1, 2}, 2);
    Rng rng(31);
    auto random_poly = [&](unsigned maxdeg) {
        Polynomial p(2);
        const GLexBasis b = GLexBasis::enumerate(2, maxdeg);
        for (const MultiIndex& a : b.indices())
            p.add_term(a, rng.rational_in(-3, 3, 4));
        return p;
    };
    for (int it = 0; it < 20; ++it) {
        const Polynomial f = random_poly(2), g = random_poly(2);
        const Rational c = rng.rational_in(-5, 5, 3);
        REQUIRE(apply_functional(y, f + g) ==
                apply_functional(y, f) + apply_functional(y, g));
        REQUIRE(apply_functional(y, f * c) == c * apply_functional(y, f));
    }
    Polynomial mono(2);
    mono.add_term(MultiIndex{2, 2}, Rational(1));
    REQUIRE(apply_functional(y, mono) == 72);
}

TEST_CASE("bilinear pairing through the matrix equals the functional of the product") {
    const MomentSequence y = laguerre_product_moments({2, 1}, 2);
    const MomentMatrix M = MomentMatrix::build(y, 2);
    Rng rng(17);
    auto random_poly = [&] {
        Polynomial p(2);
        const GLexBasis b = GLexBasis::enumerate(2, 2);
        for (const MultiIndex& a : b.indices())
            p.add_term(a, rng.rational_in(-4, 4, 3));
        return p;
    };
    for (int it = 0; it < 25; ++it) {
        const Polynomial f = random_poly(), h = random_poly();
        REQUIRE(inner_product(f, h, M) == apply_functional(y, f * h));
        REQUIRE(inner_product(f, h, M) == inner_product(h, f, M));
    }
}

TEST_CASE("pairing rejects polynomials outside the truncation") {
    const MomentSequence y = laguerre_product_moments({0, 0}, 1);
    const MomentMatrix M = MomentMatrix::build(y, 1);
    Polynomial big(2);
    big.add_term(MultiIndex{2, 0}, Rational(1));
    Polynomial ok = Polynomial::constant(2, Rational(1));
    REQUIRE_THROWS_AS(inner_product(big, ok, M), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_functional(y, big * big), std::invalid_argument);
}
