#include "emblat/games.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace emblat {

LatticePtr build_lattice_shared(int n) {
    return std::make_shared<const EmbeddedLattice>(EmbeddedLattice::build(n));
}

Game::Game(LatticePtr lat, std::vector<Rational> values) : lat_(std::move(lat)), v_(std::move(values)) {
    if (!lat_) throw std::invalid_argument("Game: null lattice");
    if (static_cast<int>(v_.size()) != lat_->size())
        throw std::invalid_argument("Game: expected " + std::to_string(lat_->size()) +
                                    " values, got " + std::to_string(v_.size()));
    if (!v_[0].is_zero()) throw std::invalid_argument("Game: v(bottom) must be 0");
}

Game Game::zero(LatticePtr lat) {
    std::vector<Rational> v(lat->size(), Rational(0));
    return Game(std::move(lat), std::move(v));
}

Game Game::from_assignments(LatticePtr lat,
                            const std::vector<std::pair<EmbeddedSubset, Rational>>& a,
                            bool default_fill) {
    std::vector<Rational> v(lat->size(), Rational(0));
    std::vector<char> seen(lat->size(), 0);
    for (const auto& [elem, val] : a) {
        const int idx = lat->index_of(elem);
        if (idx == 0) {
            if (!val.is_zero())
                throw std::invalid_argument("Game: nonzero value assigned to bottom");
            continue;
        }
        if (seen[idx])
            throw std::invalid_argument("Game: element " + elem.str() + " assigned twice");
        seen[idx] = 1;
        v[idx] = val;
    }
    if (!default_fill) {
        for (int i = 1; i < lat->size(); ++i)
            if (!seen[i])
                throw std::invalid_argument("Game: element " + lat->element(i).str() +
                                            " not assigned");
    }
    return Game(std::move(lat), std::move(v));
}

MoebiusVector::MoebiusVector(LatticePtr lat, std::vector<Rational> masses)
    : lat_(std::move(lat)), m_(std::move(masses)) {
    if (!lat_) throw std::invalid_argument("MoebiusVector: null lattice");
    if (static_cast<int>(m_.size()) != lat_->size())
        throw std::invalid_argument("MoebiusVector: expected " + std::to_string(lat_->size()) +
                                    " masses, got " + std::to_string(m_.size()));
    if (!m_[0].is_zero()) throw std::invalid_argument("MoebiusVector: m(bottom) must be 0");
}

MoebiusVector moebius_transform(const Game& v) {
    const EmbeddedLattice& L = v.lattice();
    const int V = L.size();
    std::vector<Rational> m(V, Rational(0));
    // indices are topological, so sum_{y <= x} m(y) = v(x) solves forward
    for (int x = 0; x < V; ++x) {
        Rational acc = v.at(x);
        for (int y = 0; y < x; ++y) {
            if (!m[y].is_zero() && L.leq(y, x)) acc -= m[y];
        }
        m[x] = std::move(acc);
    }
    return MoebiusVector(v.lattice_ptr(), std::move(m));
}

Game zeta_transform(const MoebiusVector& m) {
    const EmbeddedLattice& L = m.lattice();
    if (!m.at(0).is_zero()) throw std::invalid_argument("zeta_transform: m(bottom) must be 0");
    const int V = L.size();
    std::vector<Rational> v(V, Rational(0));
    for (int x = 0; x < V; ++x) {
        Rational acc(0);
        for (int y = 0; y <= x; ++y) {
            if (!m.at(y).is_zero() && L.leq(y, x)) acc += m.at(y);
        }
        v[x] = std::move(acc);
    }
    return Game(m.lattice_ptr(), std::move(v));
}

Game unanimity_game(LatticePtr lat, const EmbeddedSubset& e) {
    if (e.is_bottom()) throw std::invalid_argument("unanimity_game: e must not be bottom");
    const int ei = lat->index_of(e);
    std::vector<Rational> v(lat->size(), Rational(0));
    for (int x = 0; x < lat->size(); ++x)
        if (lat->leq(ei, x)) v[x] = Rational(1);
    return Game(std::move(lat), std::move(v));
}

// ---- property checkers ------------------------------------------------------

namespace {

Witness make_witness(const EmbeddedLattice& L, const std::vector<int>& idx, std::string note) {
    Witness w;
    for (int i : idx) w.elements.push_back(L.element(i));
    w.note = std::move(note);
    return w;
}

struct OrderTables {
    int V;
    std::vector<int> join, meet;
    explicit OrderTables(const EmbeddedLattice& L)
        : V(L.size()),
          join(static_cast<std::size_t>(V) * V),
          meet(static_cast<std::size_t>(V) * V) {
        for (int i = 0; i < V; ++i) {
            for (int j = i; j < V; ++j) {
                const int jn = L.join_index(i, j);
                const int mn = L.meet_index(i, j);
                join[static_cast<std::size_t>(i) * V + j] = jn;
                join[static_cast<std::size_t>(j) * V + i] = jn;
                meet[static_cast<std::size_t>(i) * V + j] = mn;
                meet[static_cast<std::size_t>(j) * V + i] = mn;
            }
        }
    }
    int jn(int i, int j) const { return join[static_cast<std::size_t>(i) * V + j]; }
    int mn(int i, int j) const { return meet[static_cast<std::size_t>(i) * V + j]; }
};

// Game values as integer numerators over a common denominator. The sign of
// v(join) - sum coef*v is denominator-free, so the scan can run on integers.
struct ScaledValues {
    bool use_i64 = false;
    std::vector<long long> small;
    std::vector<Bigint> big;
};

ScaledValues scale_values(const std::vector<Rational>& v, int k_max) {
    ScaledValues out;
    Bigint d(1);
    for (const Rational& r : v) {
        Bigint g = Bigint::gcd(d, r.den());
        d = Bigint::div_exact(d, g) * r.den();
    }
    out.big.reserve(v.size());
    for (const Rational& r : v) out.big.push_back(r.num() * Bigint::div_exact(d, r.den()));
    if (k_max <= 40) {
        const long long limit = std::numeric_limits<long long>::max() >> (k_max + 2);
        bool ok = true;
        for (const Bigint& b : out.big) {
            if (!b.fits_int64() || std::llabs(b.to_int64()) > limit) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.use_i64 = true;
            for (const Bigint& b : out.big) out.small.push_back(b.to_int64());
        }
    }
    return out;
}

// Walks every multiset family of k non-bottom elements in lexicographic
// order, maintaining the inclusion-exclusion coefficient of each possible
// meet incrementally: adding element e to a family with coefficient vector T
// yields T' = T + delta_e - push_e(T) where push_e moves T[f] to meet(f,e).
// At a leaf the k-monotonicity inequality reads v(join) >= sum_x T[x] v(x).
template <typename Num>
bool kmono_scan(const OrderTables& tab, const std::vector<Num>& num, int k,
                std::vector<int>* violating) {
    const int V = tab.V;
    std::vector<Num> coef(V, Num(0));
    std::vector<int> family;
    family.reserve(k);

    std::function<bool(int, int)> rec = [&](int min_e, int join) -> bool {
        if (static_cast<int>(family.size()) == k) {
            Num rhs(0);
            for (int x = 0; x < V; ++x) {
                if (!(coef[x] == Num(0))) rhs += coef[x] * num[x];
            }
            if (num[join] < rhs) {
                *violating = family;
                return false;
            }
            return true;
        }
        for (int e = min_e; e < V; ++e) {
            std::vector<std::pair<int, Num>> olds;
            for (int x = 0; x < V; ++x)
                if (!(coef[x] == Num(0))) olds.emplace_back(x, coef[x]);
            coef[e] += Num(1);
            for (const auto& [f, tf] : olds) coef[tab.mn(f, e)] -= tf;
            family.push_back(e);
            const int nj = family.size() == 1 ? e : tab.jn(join, e);
            const bool ok = rec(e, nj);
            family.pop_back();
            for (const auto& [f, tf] : olds) coef[tab.mn(f, e)] += tf;
            coef[e] -= Num(1);
            if (!ok) return false;
        }
        return true;
    };
    return rec(1, 0);
}

CheckResult kmono_check(const EmbeddedLattice& L, const OrderTables& tab,
                        const ScaledValues& sv, int k) {
    std::vector<int> bad;
    bool ok = sv.use_i64 ? kmono_scan<long long>(tab, sv.small, k, &bad)
                         : kmono_scan<Bigint>(tab, sv.big, k, &bad);
    CheckResult r;
    r.ok = ok;
    if (!ok)
        r.witness = make_witness(L, bad, std::to_string(k) + "-monotonicity fails on this family");
    return r;
}

int default_bound(const EmbeddedLattice& L) { return L.size() - 2; }

}  // namespace

CheckResult check_monotone(const Game& v) {
    const EmbeddedLattice& L = v.lattice();
    for (int x = 0; x < L.size(); ++x) {
        for (int y : L.upper_covers(x)) {
            if (v.at(x) > v.at(y)) {
                CheckResult r;
                r.ok = false;
                r.witness = make_witness(L, {x, y}, "v decreases along this cover");
                return r;
            }
        }
    }
    return {};
}

namespace {
CheckResult modularity_scan(const Game& v, bool super) {
    const EmbeddedLattice& L = v.lattice();
    const int V = L.size();
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j) {
            if (L.leq(i, j) || L.leq(j, i)) continue;  // comparable pairs hold with equality
            const Rational lhs = v.at(L.join_index(i, j)) + v.at(L.meet_index(i, j));
            const Rational rhs = v.at(i) + v.at(j);
            const bool bad = super ? lhs < rhs : lhs > rhs;
            if (bad) {
                CheckResult r;
                r.ok = false;
                r.witness = make_witness(L, {i, j},
                                         super ? "supermodularity fails on this pair"
                                               : "submodularity fails on this pair");
                return r;
            }
        }
    }
    return {};
}
}  // namespace

CheckResult check_supermodular(const Game& v) { return modularity_scan(v, true); }
CheckResult check_submodular(const Game& v) { return modularity_scan(v, false); }

CheckResult check_additive(const Game& v) {
    CheckResult sup = check_supermodular(v);
    if (!sup.ok) return sup;
    return check_submodular(v);
}

CheckResult check_k_monotone(const Game& v, int k) {
    if (k < 2) throw std::invalid_argument("check_k_monotone: k must be >= 2");
    const OrderTables tab(v.lattice());
    const ScaledValues sv = scale_values(v.values(), k);
    return kmono_check(v.lattice(), tab, sv, k);
}

CheckResult check_infty_monotone(const Game& v, std::optional<int> bound) {
    CheckResult mono = check_monotone(v);
    if (!mono.ok) return mono;
    const int b = bound.value_or(default_bound(v.lattice()));
    const OrderTables tab(v.lattice());
    const ScaledValues sv = scale_values(v.values(), std::max(b, 2));
    for (int k = 2; k <= b; ++k) {
        CheckResult r = kmono_check(v.lattice(), tab, sv, k);
        if (!r.ok) return r;
    }
    return {};
}

int k_monotone_up_to(const Game& v, int bound) {
    if (bound < 2) throw std::invalid_argument("k_monotone_up_to: bound must be >= 2");
    const OrderTables tab(v.lattice());
    const ScaledValues sv = scale_values(v.values(), bound);
    for (int k = 2; k <= bound; ++k) {
        if (!kmono_check(v.lattice(), tab, sv, k).ok) return k - 1;
    }
    return bound;
}

CheckResult check_belief(const Game& v, std::optional<int> bound) {
    const EmbeddedLattice& L = v.lattice();
    if (v.at(L.top_index()) != Rational(1)) {
        CheckResult r;
        r.ok = false;
        r.witness = make_witness(L, {L.top_index()},
                                 "not normalized: v(top) = " + v.at(L.top_index()).str());
        return r;
    }
    return check_infty_monotone(v, bound);
}

CheckResult check_invertible_belief(const Game& v, std::optional<int> bound) {
    CheckResult bel = check_belief(v, bound);
    if (!bel.ok) return bel;
    const EmbeddedLattice& L = v.lattice();
    const MoebiusVector m = moebius_transform(v);
    Rational total(0);
    for (int x = 0; x < L.size(); ++x) {
        if (m.at(x) < Rational(0)) {
            CheckResult r;
            r.ok = false;
            r.witness = make_witness(L, {x}, "negative Moebius mass m = " + m.at(x).str());
            return r;
        }
        total += m.at(x);
    }
    if (total != Rational(1)) {
        CheckResult r;
        r.ok = false;
        r.witness = make_witness(L, {}, "Moebius masses sum to " + total.str());
        return r;
    }
    return {};
}

CheckResult check_minitive(const Game& v) {
    const EmbeddedLattice& L = v.lattice();
    const int V = L.size();
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j) {
            const Rational& lo = std::min(v.at(i), v.at(j));
            if (v.at(L.meet_index(i, j)) != lo) {
                CheckResult r;
                r.ok = false;
                r.witness = make_witness(L, {i, j}, "v(x ^ y) != min(v(x), v(y))");
                return r;
            }
        }
    }
    if (v.at(L.top_index()) != Rational(1)) {
        CheckResult r;
        r.ok = false;
        r.witness =
            make_witness(L, {L.top_index()}, "v(top) = " + v.at(L.top_index()).str() + " != 1");
        return r;
    }
    return {};
}

PropertyReport analyze_game(const Game& v, std::optional<int> bound) {
    const EmbeddedLattice& L = v.lattice();
    const int b = bound.value_or(default_bound(L));
    PropertyReport rep;
    auto note = [&](const CheckResult& r) {
        if (!r.ok && !rep.witness) rep.witness = r.witness;
        return r.ok;
    };
    rep.monotone = note(check_monotone(v));
    rep.normalized = v.at(L.top_index()) == Rational(1);
    if (!rep.normalized && !rep.witness)
        rep.witness = make_witness(L, {L.top_index()},
                                   "not normalized: v(top) = " + v.at(L.top_index()).str());
    rep.supermodular = note(check_supermodular(v));
    rep.submodular = note(check_submodular(v));
    rep.additive = rep.supermodular && rep.submodular;
    rep.k_monotone_up_to = k_monotone_up_to(v, b);
    if (rep.k_monotone_up_to < b && !rep.witness)
        note(check_k_monotone(v, rep.k_monotone_up_to + 1));
    rep.belief = rep.monotone && rep.normalized && rep.k_monotone_up_to == b;
    rep.invertible_belief = rep.belief && note(check_invertible_belief(v, b));
    rep.minitive = note(check_minitive(v));
    return rep;
}

// ---- generators --------------------------------------------------------------

Game twoparam_belief(LatticePtr lat, const Rational& alpha, const Rational& beta) {
    if (lat->n() != 3)
        throw std::invalid_argument("twoparam_belief: the two-parameter family lives on n=3");
    std::vector<Rational> v(lat->size());
    for (int x = 0; x < lat->size(); ++x) {
        switch (lat->height(x)) {
            case 0: v[x] = Rational(0); break;
            case 1: v[x] = alpha; break;
            case 2: v[x] = beta; break;
            default: v[x] = Rational(1); break;
        }
    }
    return Game(std::move(lat), std::move(v));
}

Game generate_minitive(LatticePtr lat, const std::vector<EmbeddedSubset>& chain,
                       const std::vector<Rational>& masses) {
    if (chain.size() != masses.size())
        throw std::invalid_argument("generate_minitive: chain and masses differ in length");
    Rational total(0);
    for (const Rational& m : masses) {
        if (m < Rational(0)) throw std::invalid_argument("generate_minitive: negative mass");
        total += m;
    }
    if (total != Rational(1))
        throw std::invalid_argument("generate_minitive: masses sum to " + total.str() +
                                    ", expected 1");
    std::vector<int> idx(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].is_bottom() && !masses[i].is_zero())
            throw std::invalid_argument("generate_minitive: mass at bottom");
        idx[i] = lat->index_of(chain[i]);
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (!lat->leq(idx[i], idx[j]) && !lat->leq(idx[j], idx[i]))
                throw std::invalid_argument("generate_minitive: support is not a chain (" +
                                            chain[i].str() + " and " + chain[j].str() +
                                            " are incomparable)");
        }
    }
    std::vector<Rational> m(lat->size(), Rational(0));
    for (std::size_t i = 0; i < idx.size(); ++i) m[idx[i]] += masses[i];
    return zeta_transform(MoebiusVector(std::move(lat), std::move(m)));
}

Game random_game(LatticePtr lat, std::uint64_t seed, RandomGameMode mode) {
    std::mt19937_64 eng(seed);
    const int V = lat->size();
    std::vector<Rational> vals(V, Rational(0));
    if (mode == RandomGameMode::uniform_values) {
        for (int x = 1; x < V; ++x) {
            const std::int64_t z = static_cast<std::int64_t>(eng() % 20001) - 10000;
            vals[x] = Rational(z, 100);
        }
        return Game(std::move(lat), std::move(vals));
    }
    // nonneg_moebius
    std::vector<std::int64_t> w(V, 0);
    std::int64_t total = 0;
    while (total == 0) {
        for (int x = 1; x < V; ++x) {
            w[x] = static_cast<std::int64_t>(eng() % 1001);
            total += w[x];
        }
    }
    std::vector<Rational> m(V, Rational(0));
    for (int x = 1; x < V; ++x) m[x] = Rational(w[x], total);
    return zeta_transform(MoebiusVector(std::move(lat), std::move(m)));
}

// ---- valuations ---------------------------------------------------------------

ValuationSpace valuation_space(const EmbeddedLattice& L, bool fix_bottom_zero) {
    const int V = L.size();
    std::vector<std::vector<Bigint>> rows;
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j) {
            if (L.leq(i, j) || L.leq(j, i)) continue;
            std::vector<Bigint> r(V, Bigint(0));
            r[i] += Bigint(1);
            r[j] += Bigint(1);
            r[L.join_index(i, j)] -= Bigint(1);
            r[L.meet_index(i, j)] -= Bigint(1);
            rows.push_back(std::move(r));
        }
    }
    if (fix_bottom_zero) {
        std::vector<Bigint> r(V, Bigint(0));
        r[0] = Bigint(1);
        rows.push_back(std::move(r));
    }

    // fraction-free (Bareiss) forward elimination
    const int R = static_cast<int>(rows.size());
    std::vector<int> pivot_cols;
    Bigint prev(1);
    int rank = 0;
    for (int col = 0; col < V && rank < R; ++col) {
        int sel = -1;
        for (int r = rank; r < R; ++r) {
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        for (int r = rank + 1; r < R; ++r) {
            for (int c = col + 1; c < V; ++c) {
                rows[r][c] = Bigint::div_exact(
                    rows[r][c] * rows[rank][col] - rows[r][col] * rows[rank][c], prev);
            }
            rows[r][col] = Bigint(0);
        }
        prev = rows[rank][col];
        pivot_cols.push_back(col);
        ++rank;
    }

    ValuationSpace out;
    out.dimension = V - rank;
    std::vector<char> is_pivot(V, 0);
    for (int c : pivot_cols) is_pivot[c] = 1;
    for (int f = 0; f < V; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(V, Rational(0));
        x[f] = Rational(1);
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = pivot_cols[r];
            Rational s(0);
            for (int c = pc + 1; c < V; ++c) {
                if (!rows[r][c].is_zero() && !x[c].is_zero())
                    s += Rational(rows[r][c]) * x[c];
            }
            x[pc] = -s / Rational(rows[r][pc]);
        }
        out.basis.push_back(std::move(x));
    }

    // strictly monotone certificate: try the height function
    std::vector<Rational> h(V);
    for (int i = 0; i < V; ++i) h[i] = Rational(L.height(i));
    bool valid = true;
    for (int i = 0; i < V && valid; ++i) {
        for (int j = i + 1; j < V && valid; ++j) {
            if (L.leq(i, j) || L.leq(j, i)) continue;
            if (h[i] + h[j] != h[L.join_index(i, j)] + h[L.meet_index(i, j)]) valid = false;
        }
    }
    for (int x = 0; x < V && valid; ++x)
        for (int y : L.upper_covers(x))
            if (!(h[x] < h[y])) valid = false;
    if (valid) out.strictly_monotone_example = std::move(h);
    return out;
}

// ---- parametric scan of the two-parameter family ------------------------------

std::vector<LinearConstraint> twoparam_kmono_constraints(const EmbeddedLattice& L, int k) {
    if (L.n() != 3) throw std::invalid_argument("twoparam_kmono_constraints: n must be 3");
    if (k < 2) throw std::invalid_argument("twoparam_kmono_constraints: k must be >= 2");
    const OrderTables tab(L);
    const int V = L.size();
    std::set<LinearConstraint> seen;
    std::vector<long long> coef(V, 0);

    std::function<void(int, int, int)> rec = [&](int depth, int min_e, int join) {
        if (depth == k) {
            long long bucket[4] = {0, 0, 0, 0};
            bucket[L.height(join)] += 1;
            for (int x = 0; x < V; ++x)
                if (coef[x] != 0) bucket[L.height(x)] -= coef[x];
            // value by height: 0, alpha, beta, 1; bucket[0] multiplies 0
            seen.insert(LinearConstraint{bucket[1], bucket[2], bucket[3]});
            return;
        }
        for (int e = min_e; e < V; ++e) {
            std::vector<std::pair<int, long long>> olds;
            for (int x = 0; x < V; ++x)
                if (coef[x] != 0) olds.emplace_back(x, coef[x]);
            coef[e] += 1;
            for (const auto& [f, tf] : olds) coef[tab.mn(f, e)] -= tf;
            rec(depth + 1, e, depth == 0 ? e : tab.jn(join, e));
            for (const auto& [f, tf] : olds) coef[tab.mn(f, e)] += tf;
            coef[e] -= 1;
        }
    };
    rec(0, 1, 0);
    return std::vector<LinearConstraint>(seen.begin(), seen.end());
}

}  // namespace emblat
