#include <catch2/catch_amalgamated.hpp>
#include <momzero/momzero.hpp>

using namespace momzero;

TEST_CASE("multi-index construction, parsing, rendering") {
    const MultiIndex a = MultiIndex::parse("[2,0,1]");
    REQUIRE(a.size() == 3);
    REQUIRE(a[0] == 2);
    REQUIRE(a[1] == 0);
    REQUIRE(a[2] == 1);
    REQUIRE(a.degree() == 3);
    REQUIRE(a.str() == "[2,0,1]");

    REQUIRE(MultiIndex::zeros(2).str() == "[0,0]");
    REQUIRE(MultiIndex::unit(3, 1).str() == "[0,1,0]");
    REQUIRE(MultiIndex::zeros(4).degree() == 0);

    REQUIRE_THROWS(MultiIndex::parse("2,0"));
    REQUIRE_THROWS(MultiIndex::parse("[2,,1]"));
    REQUIRE_THROWS(MultiIndex::parse("[2 ,1]"));
    REQUIRE_THROWS(MultiIndex::parse("[a]"));
}

TEST_CASE("multi-index addition and equality") {
    const MultiIndex a{1, 2};
    const MultiIndex b{3, 0};
    REQUIRE(((a + b) == MultiIndex{4, 2}));
    REQUIRE(a != b);
    REQUIRE_THROWS_AS((a + MultiIndex{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("glex comparison: degree dominates") {
    REQUIRE(glex_compare(MultiIndex{0, 1}, MultiIndex{1, 0}) == std::strong_ordering::greater);
    REQUIRE(glex_less(MultiIndex{1, 0}, MultiIndex{0, 1}));
    REQUIRE(glex_less(MultiIndex{1, 1}, MultiIndex{3, 0}));
    REQUIRE(glex_compare(MultiIndex{2, 2}, MultiIndex{2, 2}) == std::strong_ordering::equal);
}

TEST_CASE("glex comparison: within a degree, larger exponent at the first "
          "differing position sorts earlier") {
    // Ascending order in two variables: 1, X1, X2, X1^2, X1X2, X2^2.
    REQUIRE(glex_less(MultiIndex{2, 0}, MultiIndex{1, 1}));
    REQUIRE(glex_less(MultiIndex{1, 1}, MultiIndex{0, 2}));
    // [1,3,1] dominates at the first position where the entries differ.
    REQUIRE(glex_less(MultiIndex{1, 3, 1}, MultiIndex{1, 1, 3}));
    REQUIRE(glex_compare(MultiIndex{1, 1, 3}, MultiIndex{1, 3, 1}) ==
            std::strong_ordering::greater);
    REQUIRE_THROWS_AS(glex_compare(MultiIndex{1}, MultiIndex{1, 2}), std::invalid_argument);
}

TEST_CASE("glex is a total order compatible with addition") {
    Rng rng(101);
    auto draw = [&] {
        std::vector<std::uint32_t> e(3);
        for (auto& v : e) v = static_cast<std::uint32_t>(rng.int_in(0, 4));
        return MultiIndex(std::move(e));
    };
    for (int it = 0; it < 500; ++it) {
        const MultiIndex a = draw(), b = draw(), c = draw();
        const auto ab = glex_compare(a, b);
        // antisymmetry
        if (ab == std::strong_ordering::less)
            REQUIRE(glex_compare(b, a) == std::strong_ordering::greater);
        else if (ab == std::strong_ordering::greater)
            REQUIRE(glex_compare(b, a) == std::strong_ordering::less);
        else
            REQUIRE(a == b);
        // translation invariance
        REQUIRE(glex_compare(a + c, b + c) == ab);
        // transitivity on a sampled chain
        if (glex_less(a, b) && glex_less(b, c)) REQUIRE(glex_less(a, c));
    }
}

TEST_CASE("divisibility order and lcm") {
    const MultiIndex a{1, 2, 0};
    const MultiIndex b{2, 2, 1};
    REQUIRE(fg_leq(a, b));
    REQUIRE_FALSE(fg_leq(b, a));
    REQUIRE(fg_leq(a, a));
    REQUIRE(lcm_max(a, b) == b);
    REQUIRE((lcm_max(MultiIndex{2, 0}, MultiIndex{1, 3}) == MultiIndex{2, 3}));

    // divisibility refines glex
    Rng rng(55);
    auto draw = [&] {
        std::vector<std::uint32_t> e(3);
        for (auto& v : e) v = static_cast<std::uint32_t>(rng.int_in(0, 3));
        return MultiIndex(std::move(e));
    };
    for (int it = 0; it < 300; ++it) {
        const MultiIndex a2 = draw(), b2 = draw();
        if (fg_leq(a2, b2) && a2 != b2) REQUIRE(glex_less(a2, b2));
        // lcm is the least upper bound in the divisibility order
        const MultiIndex m = lcm_max(a2, b2);
        REQUIRE(fg_leq(a2, m));
        REQUIRE(fg_leq(b2, m));
        const MultiIndex g = draw();
        if (fg_leq(a2, g) && fg_leq(b2, g)) REQUIRE(fg_leq(m, g));
    }
}

TEST_CASE("glex basis enumeration") {
    const GLexBasis b = GLexBasis::enumerate(2, 2);
    REQUIRE(b.size() == 6);
    REQUIRE(b.variable_count() == 2);
    REQUIRE(b.max_degree() == 2);
    const char* expected[] = {"[0,0]", "[1,0]", "[0,1]", "[2,0]", "[1,1]", "[0,2]"};
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(b.at(i).str() == expected[i]);

    // size is C(n + d, d)
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned d = 0; d <= 4; ++d) {
            const GLexBasis bb = GLexBasis::enumerate(n, d);
            REQUIRE(Integer(bb.size()) == binomial(static_cast<unsigned>(n) + d, d));
            // strictly ascending
            for (std::size_t i = 0; i + 1 < bb.size(); ++i)
                REQUIRE(glex_less(bb.at(i), bb.at(i + 1)));
            // position inverts at
            for (std::size_t i = 0; i < bb.size(); ++i) {
                REQUIRE(bb.position(bb.at(i)) == i);
                REQUIRE(bb.contains(bb.at(i)));
            }
        }

    REQUIRE(b.at(0) == MultiIndex::zeros(2));
    REQUIRE_FALSE(b.contains(MultiIndex{3, 0}));
    REQUIRE_THROWS_AS(b.position(MultiIndex{3, 0}), std::invalid_argument);
}
