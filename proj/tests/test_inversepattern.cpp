#include <catch2/catch_amalgamated.hpp>
#include <momzero/momzero.hpp>

#include "testutil.hpp"

using namespace momzero;

namespace {

void check_inverse_identities(const MomentSequence& y, unsigned d) {
    const MomentMatrix M = MomentMatrix::build(y, d);
    const InverseMatrix Z = InverseMatrix::from_basis(gram_schmidt(M));
    REQUIRE(mat_is_identity(mat_mul(Z.entries(), M.entries())));
    REQUIRE(mat_is_identity(mat_mul(M.entries(), Z.entries())));
    REQUIRE(Z.entries() == mat_inverse(M.entries()));
    // nested truncations match direct inversion of the smaller matrix
    for (unsigned r = 0; r <= d; ++r) {
        const MomentMatrix Mr = MomentMatrix::build(y, r);
        REQUIRE(Z.nested(r).entries() == mat_inverse(Mr.entries()));
    }
    REQUIRE_THROWS_AS(Z.nested(d + 1), std::invalid_argument);
}

}  // namespace

TEST_CASE("inverse equals the matrix inverse, nested at every order") {
    check_inverse_identities(laguerre_product_moments({1, 2}, 2), 2);
    check_inverse_identities(disk_moments(1, 3), 3);
    Rng rng(41);
    check_inverse_identities(testutil::random_pd_atomic(rng, 2, 2, 8).y, 2);
}

TEST_CASE("forced-zero predicate: pins and bounds") {
    // lcm of (2,0) and (0,1) is (2,1): outside degree 2, inside degree 3
    REQUIRE(congenital_zero_predicate(MultiIndex{2, 0}, MultiIndex{0, 1}, 2));
    REQUIRE_FALSE(congenital_zero_predicate(MultiIndex{2, 0}, MultiIndex{0, 1}, 3));
    REQUIRE_FALSE(congenital_zero_predicate(MultiIndex{1, 0}, MultiIndex{0, 1}, 2));
    // comparable indices are never forced
    const GLexBasis all = GLexBasis::enumerate(2, 3);
    for (const MultiIndex& a : all.indices())
        for (const MultiIndex& b : all.indices())
            if (fg_leq(a, b) || fg_leq(b, a))
                REQUIRE_FALSE(congenital_zero_predicate(a, b, 3));
    REQUIRE_THROWS_AS(congenital_zero_predicate(MultiIndex{4, 0}, MultiIndex{0, 1}, 3),
                      std::invalid_argument);
}

TEST_CASE("zero pattern of the reference product instance") {
    const MomentSequence y = laguerre_product_moments({1, 2}, 2);
    const InverseMatrix Z = InverseMatrix::from_basis(gram_schmidt(MomentMatrix::build(y, 2)));
    const ZeroPattern p(Z);
    REQUIRE(p.size() == 6);
    REQUIRE(p.offdiagonal_zero_count() == 10);
    // the five unordered forced pairs
    const std::vector<std::pair<MultiIndex, MultiIndex>> zeros = {
        {{0, 1}, {2, 0}}, {{1, 1}, {2, 0}}, {{0, 2}, {2, 0}},
        {{0, 2}, {1, 1}}, {{1, 0}, {0, 2}}};
    for (const auto& [a, b] : zeros) {
        REQUIRE(p.zero_at(a, b));
        REQUIRE(p.zero_at(b, a));
    }
    for (std::size_t i = 0; i < p.size(); ++i) REQUIRE_FALSE(p.zero_at(i, i));
}

TEST_CASE("pattern matches the predicate exactly on product instances") {
    for (const std::vector<unsigned>& sigma :
         {std::vector<unsigned>{1, 2}, std::vector<unsigned>{0, 0}, std::vector<unsigned>{3, 5}})
        for (unsigned d : {1u, 2u, 3u}) {
            const MomentSequence y = laguerre_product_moments(sigma, d);
            const InverseMatrix Z =
                InverseMatrix::from_basis(gram_schmidt(MomentMatrix::build(y, d)));
            REQUIRE(compare_pattern_vs_predicate(Z).empty());
        }
}

TEST_CASE("grouped predicate: closed form equals enumeration") {
    for (const char* spec : {"1|2,3", "1,2|3", "1|2|3", "1,2,3"}) {
        const Grouping g = Grouping::parse(3, spec);
        for (unsigned d : {1u, 2u, 3u}) {
            const GLexBasis all = GLexBasis::enumerate(3, d);
            for (const MultiIndex& a : all.indices())
                for (const MultiIndex& b : all.indices())
                    REQUIRE(grouped_congenital_predicate(a, b, d, g) ==
                            grouped_congenital_bruteforce(a, b, d, g));
        }
    }
}

TEST_CASE("grouped predicate: edge groupings") {
    // all singletons reduces to the plain predicate
    const Grouping singles = Grouping::singletons(2);
    const GLexBasis all = GLexBasis::enumerate(2, 3);
    for (const MultiIndex& a : all.indices())
        for (const MultiIndex& b : all.indices())
            REQUIRE(grouped_congenital_predicate(a, b, 3, singles) ==
                    congenital_zero_predicate(a, b, 3));
    // one block forces nothing except by total degree of the larger index
    const Grouping whole = Grouping::parse(2, "1,2");
    for (const MultiIndex& a : all.indices())
        for (const MultiIndex& b : all.indices())
            REQUIRE_FALSE(grouped_congenital_predicate(a, b, 3, whole));
    REQUIRE_THROWS_AS(
        grouped_congenital_predicate(MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}, 2, singles),
        std::invalid_argument);
}

TEST_CASE("grouped forced zeros hold on a block-product instance") {
    const Grouping g = Grouping::parse(3, "1|2,3");
    const MomentSequence y = grouped_product_moments(
        g, {laguerre_product_moments({2}, 3), disk_moments(1, 3)}, 6);
    const InverseMatrix Z = InverseMatrix::from_basis(gram_schmidt(MomentMatrix::build(y, 3)));
    REQUIRE(check_forced_zeros_grouped(Z, g).empty());
    // the finer singleton prediction is wrong for this instance: the lcm
    // predicate forces pairs inside the disk block that do not vanish
    REQUIRE_FALSE(compare_pattern_vs_predicate(Z).empty());
}

TEST_CASE("vanishing condition on the order-r inverse") {
    const Grouping split = Grouping::contiguous_pair(3, 1);
    const MomentSequence y = grouped_product_moments(
        split, {laguerre_product_moments({2}, 2), disk_moments(1, 2)}, 4);
    const InverseMatrix Z = InverseMatrix::from_basis(gram_schmidt(MomentMatrix::build(y, 2)));
    // degree-one truncations satisfy it: the conditioned disk pair is
    // centered, uncorrelated, and independent of the leading variable
    for (unsigned r = 0; r <= 1; ++r) {
        const VCheckResult res = check_zero_in_inverse(Z, split, r);
        REQUIRE(res.holds);
        REQUIRE(res.violations.empty());
        // at r = 1 the pair (X2, X3) has trailing lcm (1,1), which nothing
        // of degree one dominates; at r = 0 every pair is self-dominated
        REQUIRE(res.forced_pairs == (r == 1 ? 1 : 0));
    }
    // at order 2 the disk's correlated even moments make a forced pair
    // nonzero: rows (0;2,0) and (0;0,2) have trailing lcm (2,2), which no
    // degree-2 index dominates, yet the inverse couples them
    const VCheckResult deg2 = check_zero_in_inverse(Z, split, 2);
    REQUIRE_FALSE(deg2.holds);
    bool cross_seen = false;
    for (const VWitness& w : deg2.violations) {
        REQUIRE(w.value != 0);
        REQUIRE(Z.at(w.row, w.col) == w.value);
        if (w.row == MultiIndex{0, 0, 2} && w.col == MultiIndex{0, 2, 0}) cross_seen = true;
    }
    REQUIRE(cross_seen);
    REQUIRE_THROWS_AS(check_zero_in_inverse(Z, split, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(check_zero_in_inverse(Z, Grouping::parse(3, "1|2|3"), 1),
                      std::invalid_argument);

    // a generic instance violates it, and the forced pairs are reported
    Rng rng(43);
    const testutil::PdInstance inst = testutil::random_pd_atomic(rng, 3, 1, 6);
    const InverseMatrix Zg = InverseMatrix::from_basis(inst.basis);
    const VCheckResult bad = check_zero_in_inverse(Zg, split, 1);
    REQUIRE(bad.forced_pairs > 0);
    REQUIRE_FALSE(bad.holds);
    for (const VWitness& w : bad.violations) {
        REQUIRE(w.value != 0);
        REQUIRE(Zg.at(w.row, w.col) == w.value);
    }
}

TEST_CASE("product verification suite passes and parallel runs agree") {
    std::vector<std::vector<unsigned>> sigmas = {{0, 0}, {1, 2}, {2, 1}, {3, 5}, {4, 0}};
    const SuiteReport serial = verify_product_theorem(2, 2, sigmas, 1);
    REQUIRE(serial.pass());
    REQUIRE(serial.instances.size() == sigmas.size());
    for (const auto& inst : serial.instances) REQUIRE(inst.mismatches.empty());
    REQUIRE(serial.anomalies.empty());

    const SuiteReport wide = verify_product_theorem(2, 2, sigmas, 3);
    REQUIRE(render_suite_report(wide) == render_suite_report(serial));

    REQUIRE_THROWS_AS(verify_product_theorem(2, 2, {{1, 2, 3}}, 1), std::invalid_argument);
}

TEST_CASE("full-triangularity equivalence on both kinds of instance") {
    // product instance: basis triangular and every forced entry vanishes
    const EquivalenceReport lag = verify_full_triangularity_equiv(
        gram_schmidt(MomentMatrix::build(laguerre_product_moments({1, 2}, 2), 2)));
    REQUIRE(lag.side_pattern);
    REQUIRE(lag.side_triangular);
    REQUIRE(lag.equivalent);
    REQUIRE(lag.pattern_witnesses.empty());
    REQUIRE(lag.triangle_witnesses.empty());

    // disk instance: both sides fail together — the cross term in row (0,2)
    // breaks triangularity and the matching inverse entry is nonzero
    for (unsigned t : {0u, 1u, 2u}) {
        const EquivalenceReport disk = verify_full_triangularity_equiv(
            gram_schmidt(MomentMatrix::build(disk_moments(t, 3), 3)));
        REQUIRE_FALSE(disk.side_pattern);
        REQUIRE_FALSE(disk.side_triangular);
        REQUIRE(disk.equivalent);
        REQUIRE_FALSE(disk.pattern_witnesses.empty());
        REQUIRE_FALSE(disk.triangle_witnesses.empty());
    }

    Rng rng(47);
    const testutil::PdInstance inst = testutil::random_pd_atomic(rng, 2, 2, 8);
    const EquivalenceReport gen = verify_full_triangularity_equiv(inst.basis);
    REQUIRE_FALSE(gen.side_pattern);
    REQUIRE_FALSE(gen.side_triangular);
    REQUIRE(gen.equivalent);
    REQUIRE_FALSE(gen.pattern_witnesses.empty());
    REQUIRE_FALSE(gen.triangle_witnesses.empty());
}

TEST_CASE("conditional equivalence on both kinds of instance") {
    const Grouping split = Grouping::contiguous_pair(3, 1);
    const MomentSequence y = grouped_product_moments(
        split, {laguerre_product_moments({1}, 2), disk_moments(0, 2)}, 4);

    // order 1: trailing block centered and uncorrelated — both sides hold
    const EquivalenceReport good =
        verify_conditional_equiv(gram_schmidt(MomentMatrix::build(y, 1)), split);
    REQUIRE(good.side_pattern);
    REQUIRE(good.side_triangular);
    REQUIRE(good.equivalent);
    REQUIRE(good.pattern_witnesses.empty());
    REQUIRE(good.triangle_witnesses.empty());

    // order 2: the disk cross term breaks both sides at once
    const EquivalenceReport broken =
        verify_conditional_equiv(gram_schmidt(MomentMatrix::build(y, 2)), split);
    REQUIRE_FALSE(broken.side_pattern);
    REQUIRE_FALSE(broken.side_triangular);
    REQUIRE(broken.equivalent);
    REQUIRE_FALSE(broken.pattern_witnesses.empty());
    REQUIRE_FALSE(broken.triangle_witnesses.empty());

    // a genuinely triangular block product keeps both sides true at order 2
    const MomentSequence lag3 = laguerre_product_moments({1, 0, 2}, 2);
    const EquivalenceReport tri =
        verify_conditional_equiv(gram_schmidt(MomentMatrix::build(lag3, 2)), split);
    REQUIRE(tri.side_pattern);
    REQUIRE(tri.side_triangular);
    REQUIRE(tri.equivalent);

    Rng rng(53);
    const testutil::PdInstance inst = testutil::random_pd_atomic(rng, 3, 1, 6);
    const EquivalenceReport bad = verify_conditional_equiv(inst.basis, split);
    REQUIRE_FALSE(bad.side_pattern);
    REQUIRE_FALSE(bad.side_triangular);
    REQUIRE(bad.equivalent);
}
