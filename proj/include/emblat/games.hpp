#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emblat/lattice.hpp"
#include "emblat/rational.hpp"

namespace emblat {

using LatticePtr = std::shared_ptr<const EmbeddedLattice>;

LatticePtr build_lattice_shared(int n);

// A game in partition function form: an exact rational value per lattice
// element, zero at bottom. Values are indexed by lattice element index.
class Game {
public:
    Game(LatticePtr lat, std::vector<Rational> values);

    static Game zero(LatticePtr lat);
    // Builds from explicit (element, value) assignments. Without default_fill
    // every non-bottom element must be assigned exactly once; with it,
    // unassigned elements are zero. A nonzero assignment to bottom is an
    // error, as is any duplicate.
    static Game from_assignments(LatticePtr lat,
                                 const std::vector<std::pair<EmbeddedSubset, Rational>>& a,
                                 bool default_fill = false);

    const EmbeddedLattice& lattice() const { return *lat_; }
    const LatticePtr& lattice_ptr() const { return lat_; }
    int size() const { return static_cast<int>(v_.size()); }
    const Rational& at(int idx) const { return v_[idx]; }
    const Rational& at(const EmbeddedSubset& x) const { return v_[lat_->index_of(x)]; }
    const std::vector<Rational>& values() const { return v_; }

    friend bool operator==(const Game& a, const Game& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Game& a, const Game& b) { return !(a == b); }

private:
    LatticePtr lat_;
    std::vector<Rational> v_;
};

// The Moebius transform of a game (Harsanyi dividends): coordinates in the
// unanimity basis. Zero at bottom.
class MoebiusVector {
public:
    MoebiusVector(LatticePtr lat, std::vector<Rational> masses);

    const EmbeddedLattice& lattice() const { return *lat_; }
    const LatticePtr& lattice_ptr() const { return lat_; }
    int size() const { return static_cast<int>(m_.size()); }
    const Rational& at(int idx) const { return m_[idx]; }
    const Rational& at(const EmbeddedSubset& x) const { return m_[lat_->index_of(x)]; }
    const std::vector<Rational>& masses() const { return m_; }

    friend bool operator==(const MoebiusVector& a, const MoebiusVector& b) {
        return a.m_ == b.m_;
    }
    friend bool operator!=(const MoebiusVector& a, const MoebiusVector& b) { return !(a == b); }

private:
    LatticePtr lat_;
    std::vector<Rational> m_;
};

// m(x) = sum_{y <= x} mu(y,x) v(y), computed by the triangular solve of
// sum_{y <= x} m(y) = v(x). Exact inverse of zeta_transform.
MoebiusVector moebius_transform(const Game& v);

// v(x) = sum_{y <= x} m(y). Requires m(bottom) = 0.
Game zeta_transform(const MoebiusVector& m);

// u_e: indicator of the upset of e. Requires e != bottom.
Game unanimity_game(LatticePtr lat, const EmbeddedSubset& e);

// ---- property checkers ------------------------------------------------------

struct Witness {
    std::vector<EmbeddedSubset> elements;
    std::string note;
};

struct CheckResult {
    bool ok = true;
    std::optional<Witness> witness;
    explicit operator bool() const { return ok; }
};

CheckResult check_monotone(const Game& v);
CheckResult check_supermodular(const Game& v);
CheckResult check_submodular(const Game& v);
CheckResult check_additive(const Game& v);

// k-monotonicity: v(join of family) >= inclusion-exclusion sum of meets, for
// every multiset family of k non-bottom elements ("not necessarily
// different"). The scan aggregates the 2^k-1 meet terms per element with
// exact integer coefficients, so verdicts are exact; the first violating
// family in lexicographic order (by element index) is the witness. k >= 2.
CheckResult check_k_monotone(const Game& v, int k);

// Monotone and k-monotone for all 2 <= k <= bound. The default bound is
// |L| - 2 (Barthelemy); families grow as C(|L|-2+k, k), so the default is
// practical for n <= 3 and an explicit bound should be given otherwise.
CheckResult check_infty_monotone(const Game& v, std::optional<int> bound = std::nullopt);

// Largest k in [2, bound] such that the game is j-monotone for all j <= k;
// returns 1 when even 2-monotonicity fails.
int k_monotone_up_to(const Game& v, int bound);

// belief: normalized (v(top)=1) infinity-monotone capacity.
CheckResult check_belief(const Game& v, std::optional<int> bound = std::nullopt);
// invertible belief: additionally the Moebius transform is nonnegative,
// vanishes at bottom and sums to 1.
CheckResult check_invertible_belief(const Game& v, std::optional<int> bound = std::nullopt);

// minitive: v(bottom)=0, v(top)=1 and v(x ^ y) = min(v(x), v(y)) for all pairs.
CheckResult check_minitive(const Game& v);

struct PropertyReport {
    bool monotone = false;
    bool normalized = false;
    bool supermodular = false;
    bool submodular = false;
    bool additive = false;
    bool belief = false;
    bool invertible_belief = false;
    bool minitive = false;
    int k_monotone_up_to = 1;
    std::optional<Witness> witness;  // from the first failing check
};
PropertyReport analyze_game(const Game& v, std::optional<int> bound = std::nullopt);

// ---- generators --------------------------------------------------------------

// The two-parameter n=3 family: 0 at bottom, alpha at the atoms, beta at
// height two, 1 at the top.
Game twoparam_belief(LatticePtr lat, const Rational& alpha, const Rational& beta);

// Zeta transform of nonnegative masses summing to 1 placed on a chain;
// the result is a minitive game. Validates the chain (pairwise comparable,
// no bottom) and the masses.
Game generate_minitive(LatticePtr lat, const std::vector<EmbeddedSubset>& chain,
                       const std::vector<Rational>& masses);

enum class RandomGameMode { uniform_values, nonneg_moebius };

// Deterministic for a fixed seed (raw mt19937_64 stream, no distribution
// objects). uniform_values draws v(x) = z/100 with z uniform in
// [-10000, 10000]; nonneg_moebius draws nonnegative masses summing to 1 and
// applies zeta (a belief function by construction).
Game random_game(LatticePtr lat, std::uint64_t seed, RandomGameMode mode);

// ---- valuations ---------------------------------------------------------------

// Exact basis of the space of valuations: solutions of
// f(x) + f(y) = f(x v y) + f(x ^ y) over all unordered incomparable pairs
// (comparable pairs are tautological), optionally with f(bottom) = 0.
// Solved by fraction-free (Bareiss) elimination. When a strictly monotone
// valuation exists (n = 2), one is returned as a certificate.
struct ValuationSpace {
    int dimension = 0;
    std::vector<std::vector<Rational>> basis;  // each vector indexed by element
    std::optional<std::vector<Rational>> strictly_monotone_example;
};
ValuationSpace valuation_space(const EmbeddedLattice& lat, bool fix_bottom_zero);

// ---- parametric scan of the two-parameter family ------------------------------

// One inequality ca*alpha + cb*beta + cc >= 0.
struct LinearConstraint {
    long long ca = 0;
    long long cb = 0;
    long long cc = 0;
    friend bool operator==(const LinearConstraint& a, const LinearConstraint& b) {
        return a.ca == b.ca && a.cb == b.cb && a.cc == b.cc;
    }
    friend bool operator<(const LinearConstraint& a, const LinearConstraint& b) {
        if (a.ca != b.ca) return a.ca < b.ca;
        if (a.cb != b.cb) return a.cb < b.cb;
        return a.cc < b.cc;
    }
};

// The set of distinct k-monotonicity constraints of the two-parameter family,
// as linear inequalities in (alpha, beta). Requires n = 3. The set is the
// image of the full multiset scan, so evaluating it is equivalent to the scan.
std::vector<LinearConstraint> twoparam_kmono_constraints(const EmbeddedLattice& lat, int k);

}  // namespace emblat
