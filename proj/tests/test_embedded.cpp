#include <doctest.h>

#include <stdexcept>

#include "emblat/embedded.hpp"
#include "emblat/lattice.hpp"
#include "oracles.hpp"

using namespace emblat;

namespace {
EmbeddedSubset E(std::vector<int> s, std::vector<std::vector<int>> blocks, int n) {
    return EmbeddedSubset::of(std::move(s), Partition::of(blocks, n));
}
}  // namespace

TEST_SUITE("embedded") {
    TEST_CASE("construction and validation") {
        const EmbeddedSubset x = E({2, 1}, {{1, 2}, {3}}, 3);
        CHECK(x.s() == std::vector<int>{1, 2});
        CHECK(x.height() == 2);
        CHECK(x.str() == "12{12,3}");
        CHECK(EmbeddedSubset::bottom(3).height() == 0);
        CHECK(EmbeddedSubset::top(3).is_top());
        CHECK(EmbeddedSubset::atom(2, 3).height() == 1);
        CHECK_THROWS_AS(E({1, 3}, {{1, 2}, {3}}, 3), std::invalid_argument);
        CHECK_THROWS_AS(EmbeddedSubset::atom(4, 3), std::invalid_argument);
        CHECK_THROWS_AS(EmbeddedSubset::bottom(3).s(), std::logic_error);
    }

    TEST_CASE("order relation on the figure") {
        const auto bot = EmbeddedSubset::bottom(3);
        const auto a1 = EmbeddedSubset::atom(1, 3);
        const auto e12 = E({1, 2}, {{1, 2}, {3}}, 3);
        const auto e3 = E({3}, {{1, 2}, {3}}, 3);
        CHECK(emb_leq(bot, bot));
        CHECK(emb_leq(bot, a1));
        CHECK(emb_leq(bot, e12));
        CHECK(emb_leq(a1, e12));
        CHECK_FALSE(emb_leq(e12, e3));
        CHECK_FALSE(emb_leq(e3, e12));
        CHECK_FALSE(emb_leq(e12, a1));
        CHECK_THROWS_AS(emb_leq(a1, EmbeddedSubset::atom(1, 4)), std::invalid_argument);
    }

    TEST_CASE("order is a partial order (exhaustive n=3)") {
        const EmbeddedLattice L = EmbeddedLattice::build(3);
        const int V = L.size();
        for (int i = 0; i < V; ++i) {
            CHECK(emb_leq(L.element(i), L.element(i)));
            for (int j = 0; j < V; ++j) {
                const bool ij = emb_leq(L.element(i), L.element(j));
                if (i != j && ij) CHECK_FALSE(emb_leq(L.element(j), L.element(i)));
                for (int k = 0; k < V; ++k) {
                    if (ij && emb_leq(L.element(j), L.element(k)))
                        CHECK(emb_leq(L.element(i), L.element(k)));
                }
            }
        }
    }

    TEST_CASE("join and meet formulas match the figure") {
        const auto a1 = EmbeddedSubset::atom(1, 3);
        const auto a2 = EmbeddedSubset::atom(2, 3);
        const auto e12 = E({1, 2}, {{1, 2}, {3}}, 3);
        const auto e3 = E({3}, {{1, 2}, {3}}, 3);
        CHECK(emb_join(a1, a2) == e12);
        CHECK(emb_meet(e12, e3).is_bottom());
        CHECK(emb_join(e12, EmbeddedSubset::bottom(3)) == e12);
        CHECK(emb_meet(e12, EmbeddedSubset::bottom(3)).is_bottom());
        CHECK(emb_meet(e12, E({1}, {{1}, {2, 3}}, 3)) == a1);
        CHECK(emb_join(e12, e3) == EmbeddedSubset::top(3));
    }

    TEST_CASE("join/meet are least upper/greatest lower bounds (exhaustive n<=4)") {
        for (int n = 2; n <= 4; ++n) {
            const EmbeddedLattice L = EmbeddedLattice::build(n);
            const int V = L.size();
            auto leq = [&](int i, int j) { return L.leq(i, j); };
            for (int i = 0; i < V; ++i) {
                for (int j = i; j < V; ++j) {
                    const int jn = L.index_of(emb_join(L.element(i), L.element(j)));
                    const int mt = L.index_of(emb_meet(L.element(i), L.element(j)));
                    CHECK(jn == *oracles::brute_lub(V, leq, i, j));
                    CHECK(mt == *oracles::brute_glb(V, leq, i, j));
                    CHECK(jn == L.join_index(i, j));
                    CHECK(mt == L.meet_index(i, j));
                }
            }
        }
    }

    TEST_CASE("closed-form cover counts") {
        CHECK(emb_upper_cover_count(E({1, 2}, {{1, 2}, {3}}, 3)) == Bigint(1));
        CHECK(emb_lower_cover_count(EmbeddedSubset::top(3)) == Bigint(6));
        // atoms cover nothing inside C(n); the bottom adjacency is extra
        CHECK(emb_lower_cover_count(EmbeddedSubset::atom(1, 4)) == Bigint(0));
        CHECK(emb_upper_cover_count(EmbeddedSubset::atom(1, 4)) == Bigint(6));
    }

    TEST_CASE("interval type rotates the distinguished block first") {
        const auto x = EmbeddedSubset::atom(3, 3);
        const auto y = E({3}, {{1, 2}, {3}}, 3);
        // pi_y blocks: {1,2} then {3}; distinguished {3} comes first
        CHECK(emb_interval_type(x, y) == std::vector<int>{1, 2});
        CHECK_THROWS_AS(emb_interval_type(EmbeddedSubset::bottom(3), y), std::invalid_argument);
        CHECK_THROWS_AS(emb_interval_type(y, x), std::domain_error);
    }

    TEST_CASE("chain count formulas: paper table and instances") {
        const std::vector<std::int64_t> table{1, 2, 9, 72, 900, 16200, 396900, 12700800};
        for (int n = 1; n <= 8; ++n) {
            CHECK(embedded_chain_count_total(n) == Bigint(table[n - 1]));
            CHECK(count_chains_embedded(EmbeddedSubset::bottom(n), EmbeddedSubset::top(n)) ==
                  Bigint(table[n - 1]));
        }
        const auto e12 = E({1, 2}, {{1, 2}, {3}}, 3);
        CHECK(count_chains_embedded(EmbeddedSubset::bottom(3), e12) == Bigint(2));
        CHECK(count_chains_embedded(e12, e12) == Bigint(1));
        CHECK_THROWS_AS(count_chains_embedded(e12, EmbeddedSubset::atom(1, 3)),
                        std::domain_error);
    }

    TEST_CASE("chain count equals the cover-DAG oracle on every comparable pair, n<=4") {
        for (int n = 1; n <= 4; ++n) {
            const EmbeddedLattice L = EmbeddedLattice::build(n);
            for (int i = 0; i < L.size(); ++i) {
                for (int j = 0; j < L.size(); ++j) {
                    if (!L.leq(i, j)) continue;
                    CHECK(count_chains_embedded(L.element(i), L.element(j)) ==
                          L.count_maximal_chains_oracle(i, j));
                }
            }
        }
    }

    TEST_CASE("the uncorrected interval variant disagrees with the oracle") {
        // [1{1,2,3}, 12{12,3}] is a single cover edge; the uncorrected
        // coefficient gives 2 instead of 1
        const auto x = EmbeddedSubset::atom(1, 3);
        const auto y = E({1, 2}, {{1, 2}, {3}}, 3);
        CHECK(count_chains_embedded_uncorrected(x, y) == Rational(2));
        CHECK(count_chains_embedded(x, y) == Bigint(1));
        const EmbeddedLattice L = EmbeddedLattice::build(3);
        CHECK(L.count_maximal_chains_oracle(L.index_of(x), L.index_of(y)) == Bigint(1));
    }

    TEST_CASE("element count closed form") {
        const std::vector<std::int64_t> table{2, 4, 11, 38, 152, 675, 3264, 17008};
        for (int n = 1; n <= 8; ++n) CHECK(embedded_element_count(n) == Bigint(table[n - 1]));
    }

    TEST_CASE("moebius closed form: special values") {
        // mu(bot, 1{1,23}) = 0: the partition is not pi_bot_S
        CHECK(moebius_embedded(EmbeddedSubset::bottom(3), E({1}, {{1}, {2, 3}}, 3)) == Bigint(0));
        // mu(bot, 12{12,3}) = (-1)^2
        CHECK(moebius_embedded(EmbeddedSubset::bottom(3), E({1, 2}, {{1, 2}, {3}}, 3)) ==
              Bigint(1));
        // mu(i pi_bot, top) = (-1)^{n-1}(n-1)!
        CHECK(moebius_embedded(EmbeddedSubset::atom(1, 3), EmbeddedSubset::top(3)) == Bigint(2));
        CHECK(moebius_embedded(EmbeddedSubset::bottom(3), EmbeddedSubset::bottom(3)) ==
              Bigint(1));
        CHECK(moebius_embedded(EmbeddedSubset::bottom(3), EmbeddedSubset::top(3)) == Bigint(-1));
        CHECK_THROWS_AS(
            moebius_embedded(E({1, 2}, {{1, 2}, {3}}, 3), E({3}, {{1, 2}, {3}}, 3)),
            std::domain_error);
    }

    TEST_CASE("moebius closed form equals the recursion oracle, n<=4") {
        for (int n = 1; n <= 4; ++n) {
            const EmbeddedLattice L = EmbeddedLattice::build(n);
            const int V = L.size();
            auto leq = [&](int i, int j) { return L.leq(i, j); };
            for (int i = 0; i < V; ++i) {
                for (int j = 0; j < V; ++j) {
                    if (!L.leq(i, j)) continue;
                    CHECK(moebius_embedded(L.element(i), L.element(j)) ==
                          oracles::moebius_recursive(V, leq, i, j));
                }
            }
        }
    }

    TEST_CASE("moebius from bottom agrees with the atom-subset sum") {
        // in any lattice, mu(bot, x) = sum over atom subsets joining to x of
        // (-1)^{|subset|}; here the only elements reachable as atom joins are
        // the (S, pi_bot_S), all others must get 0
        for (int n = 2; n <= 4; ++n) {
            const EmbeddedLattice L = EmbeddedLattice::build(n);
            const std::vector<int> atoms = L.atom_indices();
            std::vector<Bigint> atom_sum(L.size(), Bigint(0));
            for (unsigned mask = 0; mask < (1u << atoms.size()); ++mask) {
                int join = 0;
                int bits = 0;
                for (std::size_t i = 0; i < atoms.size(); ++i) {
                    if (mask >> i & 1) {
                        ++bits;
                        join = L.join_index(join, atoms[i]);
                    }
                }
                atom_sum[join] += (bits % 2) ? Bigint(-1) : Bigint(1);
            }
            for (int x = 0; x < L.size(); ++x)
                CHECK(moebius_embedded(L.element(0), L.element(x)) == atom_sum[x]);
        }
    }

    TEST_CASE("pi_bot_of_set") {
        CHECK(pi_bot_of_set({2, 3}, 4) == Partition::of({{2, 3}, {1}, {4}}, 4));
        CHECK(pi_bot_of_set({1, 2, 3}, 3) == Partition::single_block(3));
    }
}
