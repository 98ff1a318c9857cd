#include <doctest.h>

#include <stdexcept>

#include <set>

#include "emblat/games.hpp"
#include "oracles.hpp"

using namespace emblat;

namespace {

EmbeddedSubset E(std::vector<int> s, std::vector<std::vector<int>> blocks, int n) {
    return EmbeddedSubset::of(std::move(s), Partition::of(blocks, n));
}

// the worked n=3 game: v(123{123})=3, v(12{12,3})=2, v(3{12,3})=0, v(1{1,23})=1,
// v(23{1,23})=2, v(13{13,2})=1, v(2{13,2})=1, v(1 pi_bot)=1, v(2 pi_bot)=1, v(3 pi_bot)=0
Game worked_game(const LatticePtr& lat) {
    std::vector<std::pair<EmbeddedSubset, Rational>> a{
        {EmbeddedSubset::top(3), Rational(3)},
        {E({1, 2}, {{1, 2}, {3}}, 3), Rational(2)},
        {E({3}, {{1, 2}, {3}}, 3), Rational(0)},
        {E({1}, {{1}, {2, 3}}, 3), Rational(1)},
        {E({2, 3}, {{1}, {2, 3}}, 3), Rational(2)},
        {E({1, 3}, {{1, 3}, {2}}, 3), Rational(1)},
        {E({2}, {{1, 3}, {2}}, 3), Rational(1)},
        {EmbeddedSubset::atom(1, 3), Rational(1)},
        {EmbeddedSubset::atom(2, 3), Rational(1)},
        {EmbeddedSubset::atom(3, 3), Rational(0)},
    };
    return Game::from_assignments(lat, a);
}

}  // namespace

TEST_SUITE("games") {
    TEST_CASE("game construction guards") {
        auto lat = build_lattice_shared(3);
        CHECK_THROWS_AS(Game(lat, std::vector<Rational>(5, Rational(0))),
                        std::invalid_argument);
        std::vector<Rational> bad(lat->size(), Rational(0));
        bad[0] = Rational(1);
        CHECK_THROWS_AS(Game(lat, bad), std::invalid_argument);

        CHECK_THROWS_WITH_AS(
            Game::from_assignments(lat, {{EmbeddedSubset::bottom(3), Rational(1)}}, true),
            doctest::Contains("bottom"), std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            Game::from_assignments(lat,
                                   {{EmbeddedSubset::atom(1, 3), Rational(1)},
                                    {EmbeddedSubset::atom(1, 3), Rational(2)}},
                                   true),
            doctest::Contains("twice"), std::invalid_argument);
        CHECK_THROWS_AS(Game::from_assignments(lat, {{EmbeddedSubset::atom(1, 3), Rational(1)}},
                                               false),
                        std::invalid_argument);
        const Game z = Game::from_assignments(lat, {}, true);
        CHECK(z == Game::zero(lat));
    }

    TEST_CASE("worked n=3 example: transform, basis decomposition") {
        auto lat = build_lattice_shared(3);
        const Game v = worked_game(lat);
        const MoebiusVector m = moebius_transform(v);
        const std::set<int> support{
            lat->index_of(EmbeddedSubset::atom(1, 3)),
            lat->index_of(EmbeddedSubset::atom(2, 3)),
            lat->index_of(E({2, 3}, {{1}, {2, 3}}, 3)),
        };
        for (int i = 0; i < lat->size(); ++i) {
            if (support.count(i))
                CHECK(m.at(i) == Rational(1));
            else
                CHECK(m.at(i) == Rational(0));
        }
        // v = u_{1 pi_bot} + u_{2 pi_bot} + u_{23{1,23}}
        const Game u1 = unanimity_game(lat, EmbeddedSubset::atom(1, 3));
        const Game u2 = unanimity_game(lat, EmbeddedSubset::atom(2, 3));
        const Game u3 = unanimity_game(lat, E({2, 3}, {{1}, {2, 3}}, 3));
        for (int i = 0; i < lat->size(); ++i)
            CHECK(v.at(i) == u1.at(i) + u2.at(i) + u3.at(i));
        CHECK(zeta_transform(m) == v);
    }

    TEST_CASE("the n=3 closed formulas for the transform hold on random games") {
        auto lat = build_lattice_shared(3);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Game v = random_game(lat, seed, RandomGameMode::uniform_values);
            const MoebiusVector m = moebius_transform(v);
            for (int i = 1; i <= 3; ++i) {
                const auto ai = EmbeddedSubset::atom(i, 3);
                CHECK(m.at(ai) == v.at(ai));
            }
            // m(ij{ij,k}) = v(ij{ij,k}) - v(i) - v(j); m(i{i,jk}) = v - v(i)
            const auto e12 = E({1, 2}, {{1, 2}, {3}}, 3);
            CHECK(m.at(e12) == v.at(e12) - v.at(EmbeddedSubset::atom(1, 3)) -
                                   v.at(EmbeddedSubset::atom(2, 3)));
            const auto e1 = E({1}, {{1}, {2, 3}}, 3);
            CHECK(m.at(e1) == v.at(e1) - v.at(EmbeddedSubset::atom(1, 3)));
        }
    }

    TEST_CASE("transform matches the explicit moebius-sum route") {
        auto lat = build_lattice_shared(3);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Game v = random_game(lat, seed, RandomGameMode::uniform_values);
            const MoebiusVector m = moebius_transform(v);
            for (int x = 0; x < lat->size(); ++x) {
                Rational s(0);
                for (int y = 0; y < lat->size(); ++y) {
                    if (!lat->leq(y, x)) continue;
                    s += Rational(moebius_embedded(lat->element(y), lat->element(x))) * v.at(y);
                }
                CHECK(m.at(x) == s);
            }
        }
    }

    TEST_CASE("round trips are exact") {
        for (int n = 3; n <= 4; ++n) {
            auto lat = build_lattice_shared(n);
            for (std::uint64_t seed = 0; seed < (n == 3 ? 50u : 10u); ++seed) {
                const Game v = random_game(lat, seed, RandomGameMode::uniform_values);
                CHECK(zeta_transform(moebius_transform(v)) == v);
                const Game b = random_game(lat, seed, RandomGameMode::nonneg_moebius);
                const MoebiusVector mb = moebius_transform(b);
                CHECK(zeta_transform(mb) == b);
            }
        }
    }

    TEST_CASE("unanimity games form the dual basis of the transform") {
        for (int n = 2; n <= 4; ++n) {
            auto lat = build_lattice_shared(n);
            for (int e = 1; e < lat->size(); ++e) {
                const Game u = unanimity_game(lat, lat->element(e));
                const MoebiusVector m = moebius_transform(u);
                for (int x = 0; x < lat->size(); ++x)
                    CHECK(m.at(x) == (x == e ? Rational(1) : Rational(0)));
            }
        }
        CHECK_THROWS_AS(unanimity_game(build_lattice_shared(3), EmbeddedSubset::bottom(3)),
                        std::invalid_argument);
    }

    TEST_CASE("zeta rejects mass at bottom") {
        auto lat = build_lattice_shared(3);
        std::vector<Rational> m(lat->size(), Rational(0));
        m[0] = Rational(1);
        CHECK_THROWS_AS(MoebiusVector(lat, m), std::invalid_argument);
    }

    TEST_CASE("monotonicity checker") {
        auto lat = build_lattice_shared(3);
        CHECK(check_monotone(Game::zero(lat)).ok);
        const Game u = unanimity_game(lat, EmbeddedSubset::top(3));
        CHECK(check_monotone(u).ok);
        // a single dip breaks it, witness names a cover pair
        std::vector<Rational> vals(lat->size(), Rational(1));
        vals[0] = Rational(0);
        vals[lat->index_of(E({1, 2}, {{1, 2}, {3}}, 3))] = Rational(-1);
        const auto res = check_monotone(Game(lat, vals));
        CHECK_FALSE(res.ok);
        REQUIRE(res.witness);
        CHECK(res.witness->elements.size() == 2);
    }

    TEST_CASE("modularity classes") {
        auto lat = build_lattice_shared(3);
        CHECK(check_additive(Game::zero(lat)).ok);
        CHECK(check_supermodular(Game::zero(lat)).ok);
        CHECK(check_submodular(Game::zero(lat)).ok);

        // frozen verdicts for the worked example game: supermodular but not
        // submodular (witness 12{12,3}, 13{13,2}: v(top) + v(1{1,2,3}) = 4 > 3)
        const Game ex1 = worked_game(lat);
        CHECK(check_supermodular(ex1).ok);
        const auto sub = check_submodular(ex1);
        CHECK_FALSE(sub.ok);
        REQUIRE(sub.witness);
        CHECK_FALSE(check_additive(ex1).ok);

        // no nonzero additive game exists at n=3 (constant-valuation theorem)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Game g = random_game(lat, seed, RandomGameMode::uniform_values);
            bool nonzero = false;
            for (int i = 0; i < lat->size(); ++i)
                if (!g.at(i).is_zero()) nonzero = true;
            if (nonzero) CHECK_FALSE(check_additive(g).ok);
        }
    }

    TEST_CASE("k-monotone scanner agrees with the naive subset-sum oracle") {
        auto lat = build_lattice_shared(3);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            for (int k = 2; k <= 4; ++k) {
                // uniform random games are almost never k-monotone; belief-mode
                // games always are: both branches get exercised
                for (auto mode : {RandomGameMode::uniform_values, RandomGameMode::nonneg_moebius}) {
                    const Game g = random_game(lat, seed, mode);
                    const auto naive = oracles::naive_k_monotone_violation(g, k);
                    const auto fast = check_k_monotone(g, k);
                    CHECK(fast.ok == !naive.has_value());
                    if (naive) {
                        REQUIRE(fast.witness);
                        std::vector<EmbeddedSubset> expect;
                        for (int i : *naive) expect.push_back(lat->element(i));
                        CHECK(fast.witness->elements == expect);
                    }
                }
            }
        }
        CHECK_THROWS_AS(check_k_monotone(Game::zero(lat), 1), std::invalid_argument);

        // same cross-check on the 38-element lattice
        auto lat4 = build_lattice_shared(4);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            for (auto mode : {RandomGameMode::uniform_values, RandomGameMode::nonneg_moebius}) {
                const Game g = random_game(lat4, seed, mode);
                for (int k = 2; k <= 3; ++k) {
                    const auto naive = oracles::naive_k_monotone_violation(g, k);
                    const auto fast = check_k_monotone(g, k);
                    CHECK(fast.ok == !naive.has_value());
                    if (naive && fast.witness) {
                        std::vector<EmbeddedSubset> expect;
                        for (int i : *naive) expect.push_back(lat4->element(i));
                        CHECK(fast.witness->elements == expect);
                    }
                }
            }
        }
    }

    TEST_CASE("unanimity games are k-monotone for all tested k") {
        auto lat = build_lattice_shared(3);
        for (int e = 1; e < lat->size(); ++e) {
            const Game u = unanimity_game(lat, lat->element(e));
            for (int k = 2; k <= 6; ++k) CHECK(check_k_monotone(u, k).ok);
        }
    }

    TEST_CASE("k-monotonicity is decreasing in k") {
        auto lat = build_lattice_shared(3);
        // beta >= 2 alpha fails => 2-monotone fails, witness is the first atom pair
        const Game bad2 = twoparam_belief(lat, Rational(1, 4), Rational(1, 4));
        const auto r2 = check_k_monotone(bad2, 2);
        CHECK_FALSE(r2.ok);
        REQUIRE(r2.witness);
        CHECK(r2.witness->elements[0] == EmbeddedSubset::atom(1, 3));
        CHECK(r2.witness->elements[1] == EmbeddedSubset::atom(2, 3));
        CHECK(k_monotone_up_to(bad2, 6) == 1);

        // (1/10, 2/5): 2-monotone but not 3-monotone; everything above fails too
        const Game g34 = twoparam_belief(lat, Rational(1, 10), Rational(2, 5));
        CHECK(check_k_monotone(g34, 2).ok);
        CHECK_FALSE(check_k_monotone(g34, 3).ok);
        for (int k = 4; k <= 6; ++k) CHECK_FALSE(check_k_monotone(g34, k).ok);
        CHECK(k_monotone_up_to(g34, 9) == 2);

        // random belief games pass every k up to the Barthelemy bound
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Game b = random_game(lat, seed, RandomGameMode::nonneg_moebius);
            CHECK(k_monotone_up_to(b, lat->size() - 2) == lat->size() - 2);
        }
    }

    TEST_CASE("infty-monotonicity and beliefs") {
        auto lat = build_lattice_shared(3);
        CHECK(check_infty_monotone(Game::zero(lat)).ok);
        const Game utop = unanimity_game(lat, EmbeddedSubset::top(3));
        CHECK(check_belief(utop).ok);
        CHECK(check_invertible_belief(utop).ok);
        // normalization is required for belief
        CHECK_FALSE(check_belief(Game::zero(lat)).ok);
        // every zeta image of nonnegative normalized masses is a belief function
        for (std::uint64_t seed = 100; seed < 120; ++seed) {
            const Game b = random_game(lat, seed, RandomGameMode::nonneg_moebius);
            CHECK(check_belief(b).ok);
            CHECK(check_invertible_belief(b).ok);
        }
    }

    TEST_CASE("the (1/10, 7/25) game: exact transform value and scan behavior") {
        auto lat = build_lattice_shared(3);
        const Game f = twoparam_belief(lat, Rational(1, 10), Rational(7, 25));
        CHECK(check_monotone(f).ok);
        const MoebiusVector m = moebius_transform(f);
        CHECK(m.at(EmbeddedSubset::top(3)) == Rational(-2, 25));
        // this game circulates as a claimed infinity-monotone capacity; the
        // all-coatom 6-family refutes that (its inclusion-exclusion triple
        // meets land on atoms), so the scan stops at k = 5
        CHECK(k_monotone_up_to(f, 9) == 5);
        const auto r6 = check_k_monotone(f, 6);
        CHECK_FALSE(r6.ok);
        REQUIRE(r6.witness);
        CHECK(r6.witness->elements.size() == 6);
        for (const auto& e : r6.witness->elements) CHECK(e.height() == 2);
        // cross-checked with the naive oracle
        const auto naive = oracles::naive_k_monotone_violation(f, 6);
        REQUIRE(naive);
        std::vector<EmbeddedSubset> expect;
        for (int i : *naive) expect.push_back(lat->element(i));
        CHECK(r6.witness->elements == expect);
        CHECK_FALSE(check_belief(f).ok);
    }

    TEST_CASE("two-parameter constraint extraction") {
        auto lat = build_lattice_shared(3);
        const auto c2 = twoparam_kmono_constraints(*lat, 2);
        auto has = [&](const std::vector<LinearConstraint>& cs, long long a, long long b,
                       long long c) {
            return std::find(cs.begin(), cs.end(), LinearConstraint{a, b, c}) != cs.end();
        };
        CHECK(has(c2, -2, 1, 0));   // beta >= 2 alpha (atom pair joining at height 2)
        CHECK(has(c2, 1, -2, 1));   // 1 >= 2 beta - alpha
        CHECK(has(c2, 0, -2, 1));   // 1 >= 2 beta (disjoint singleton coatoms)
        const auto c6 = twoparam_kmono_constraints(*lat, 6);
        CHECK(has(c6, 6, -6, 1));   // 1 >= 6 beta - 6 alpha, i.e. m(top) >= 0
        // k = 7 adds nothing new on top of k <= 6
        const auto c7 = twoparam_kmono_constraints(*lat, 7);
        std::set<LinearConstraint> upto6;
        for (int k = 2; k <= 6; ++k)
            for (const auto& c : twoparam_kmono_constraints(*lat, k)) upto6.insert(c);
        for (const auto& c : c7) CHECK(upto6.count(c) == 1);
    }

    TEST_CASE("minitive checks and generation") {
        auto lat = build_lattice_shared(3);
        const Game utop = unanimity_game(lat, EmbeddedSubset::top(3));
        CHECK(check_minitive(utop).ok);

        // chain bottom < 1 pi_bot < 12{12,3} < top with masses 1/2 at the atom
        // and 1/2 at top
        const std::vector<EmbeddedSubset> chain{
            EmbeddedSubset::bottom(3), EmbeddedSubset::atom(1, 3),
            E({1, 2}, {{1, 2}, {3}}, 3), EmbeddedSubset::top(3)};
        const std::vector<Rational> masses{Rational(0), Rational(1, 2), Rational(0),
                                           Rational(1, 2)};
        const Game g = generate_minitive(lat, chain, masses);
        CHECK(g.at(EmbeddedSubset::bottom(3)) == Rational(0));
        CHECK(g.at(EmbeddedSubset::top(3)) == Rational(1));
        CHECK(g.at(EmbeddedSubset::atom(1, 3)) == Rational(1, 2));
        CHECK(check_minitive(g).ok);
        CHECK(check_belief(g).ok);

        // the worked example is not minitive; lexicographically first witness
        // pair is the two atoms meeting at bottom
        const auto res = check_minitive(worked_game(lat));
        CHECK_FALSE(res.ok);
        REQUIRE(res.witness);
        CHECK(res.witness->elements[0] == EmbeddedSubset::atom(1, 3));
        CHECK(res.witness->elements[1] == EmbeddedSubset::atom(2, 3));

        CHECK_THROWS_WITH_AS(
            generate_minitive(lat, {EmbeddedSubset::atom(1, 3)}, {Rational(-1)}),
            doctest::Contains("negative"), std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            generate_minitive(lat, {EmbeddedSubset::atom(1, 3)}, {Rational(1, 2)}),
            doctest::Contains("sum"), std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            generate_minitive(lat, {EmbeddedSubset::atom(1, 3), EmbeddedSubset::atom(2, 3)},
                              {Rational(1, 2), Rational(1, 2)}),
            doctest::Contains("chain"), std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            generate_minitive(lat, {EmbeddedSubset::bottom(3)}, {Rational(1)}),
            doctest::Contains("bottom"), std::invalid_argument);
    }

    TEST_CASE("random game determinism") {
        auto lat = build_lattice_shared(3);
        const Game a = random_game(lat, 7, RandomGameMode::uniform_values);
        const Game b = random_game(lat, 7, RandomGameMode::uniform_values);
        CHECK(a == b);
        const Game c = random_game(lat, 8, RandomGameMode::uniform_values);
        CHECK(a != c);
        const Game d = random_game(lat, 7, RandomGameMode::nonneg_moebius);
        CHECK(a != d);
    }

    TEST_CASE("two-parameter family basics") {
        auto lat = build_lattice_shared(3);
        const Game z = twoparam_belief(lat, Rational(0), Rational(0));
        CHECK(z == unanimity_game(lat, EmbeddedSubset::top(3)));
        CHECK_THROWS_AS(twoparam_belief(build_lattice_shared(4), Rational(0), Rational(0)),
                        std::invalid_argument);
        // any 1 >= beta >= alpha >= 0 gives a capacity, anything else does not
        for (int a = 0; a <= 4; ++a) {
            for (int b = 0; b <= 4; ++b) {
                const Game g = twoparam_belief(lat, Rational(a, 4), Rational(b, 4));
                CHECK(check_monotone(g).ok == (b >= a));
            }
        }
        CHECK_FALSE(check_monotone(twoparam_belief(lat, Rational(1, 4), Rational(3, 2))).ok);
    }

    TEST_CASE("valuation space dimensions and certificates") {
        for (int n = 3; n <= 4; ++n) {
            const EmbeddedLattice L = EmbeddedLattice::build(n);
            const ValuationSpace free = valuation_space(L, false);
            CHECK(free.dimension == 1);
            REQUIRE(free.basis.size() == 1);
            // the one-dimensional space is the constants
            for (int i = 1; i < L.size(); ++i) CHECK(free.basis[0][i] == free.basis[0][0]);
            CHECK_FALSE(free.basis[0][0].is_zero());
            CHECK_FALSE(free.strictly_monotone_example.has_value());

            const ValuationSpace fixed = valuation_space(L, true);
            CHECK(fixed.dimension == 0);
            CHECK(fixed.basis.empty());
        }

        const EmbeddedLattice L2 = EmbeddedLattice::build(2);
        const ValuationSpace v2 = valuation_space(L2, false);
        CHECK(v2.dimension == 3);
        REQUIRE(v2.strictly_monotone_example.has_value());
        const auto& h = *v2.strictly_monotone_example;
        for (int x = 0; x < L2.size(); ++x)
            for (int y : L2.upper_covers(x)) CHECK(h[x] < h[y]);
        CHECK(valuation_space(L2, true).dimension == 2);
    }

    TEST_CASE("property report coherence") {
        auto lat = build_lattice_shared(3);
        const Game utop = unanimity_game(lat, EmbeddedSubset::top(3));
        const PropertyReport r = analyze_game(utop);
        CHECK(r.monotone);
        CHECK(r.normalized);
        CHECK(r.belief);
        CHECK(r.invertible_belief);
        CHECK(r.minitive);
        CHECK(r.supermodular);
        CHECK_FALSE(r.additive);  // submodularity fails for u_top at n=3
        CHECK(r.k_monotone_up_to == lat->size() - 2);
        CHECK_FALSE(r.submodular);
        CHECK(r.witness.has_value());  // carries the submodularity violation

        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const PropertyReport g =
                analyze_game(random_game(lat, seed, RandomGameMode::uniform_values), 4);
            CHECK(g.additive == (g.supermodular && g.submodular));
            if (g.belief) CHECK(g.monotone);
            const bool any_false = !g.monotone || !g.normalized || !g.supermodular ||
                                   !g.submodular || !g.belief || !g.invertible_belief ||
                                   !g.minitive || g.k_monotone_up_to < 4;
            if (any_false) CHECK(g.witness.has_value());
        }
    }
}
