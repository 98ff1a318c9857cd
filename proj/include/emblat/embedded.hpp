#pragma once

#include <string>
#include <vector>

#include "emblat/bigint.hpp"
#include "emblat/partition.hpp"
#include "emblat/rational.hpp"

namespace emblat {

// An embedded subset: a pair (S, pi) with pi a partition of {1..n} and S one
// of its blocks, plus the adjoined artificial bottom element. The order is
// the product order (S subset, pi refinement), with bottom below everything.
class EmbeddedSubset {
public:
    static EmbeddedSubset bottom(int n);
    // Validates that s is a block of pi (set equality after sorting).
    static EmbeddedSubset of(std::vector<int> s, Partition pi);
    static EmbeddedSubset atom(int i, int n);  // (i, pi_bot)
    static EmbeddedSubset top(int n);          // (N, {N})

    int n() const { return n_; }
    bool is_bottom() const { return block_ < 0; }
    bool is_top() const { return !is_bottom() && pi_.block_count() == 1; }

    // The distinguished block; only valid on non-bottom elements.
    const std::vector<int>& s() const;
    const Partition& pi() const;
    int block_index() const { return block_; }

    // 0 for bottom, n - b(pi) + 1 otherwise.
    int height() const;

    // Paper-style label: "12{12,3}", bottom prints as "⊥".
    std::string str() const;

    friend bool operator==(const EmbeddedSubset& a, const EmbeddedSubset& b);
    friend bool operator!=(const EmbeddedSubset& a, const EmbeddedSubset& b) { return !(a == b); }
    // Total order by (height, distinguished block, partition); bottom first.
    // This is the canonical element ordering used for lattice indexing.
    friend bool operator<(const EmbeddedSubset& a, const EmbeddedSubset& b);

private:
    int n_ = 0;
    int block_ = -1;  // index of S in pi_.blocks(), -1 for bottom
    Partition pi_;    // singletons placeholder when bottom
};

// ---- order and lattice operations (no materialization needed) --------------

// x below y in the product order. Throws on mismatched n.
bool emb_leq(const EmbeddedSubset& x, const EmbeddedSubset& y);

// Join: (T u T', rho) where T, T' are the blocks of pi v pi' containing S, S'
// and rho merges them (a single block if T = T'). Meet: (S n S', pi ^ pi') when
// S n S' is nonempty, bottom otherwise.
EmbeddedSubset emb_join(const EmbeddedSubset& x, const EmbeddedSubset& y);
EmbeddedSubset emb_meet(const EmbeddedSubset& x, const EmbeddedSubset& y);

// Closed-form cover counts for a non-bottom element with k-partition pi:
// covered by C(k,2) elements; covers sum_T 2^{t-1} - k + 2^{s-1} - 1 elements
// of C(n) (the bottom adjacency of atoms is extra).
Bigint emb_upper_cover_count(const EmbeddedSubset& x);
Bigint emb_lower_cover_count(const EmbeddedSubset& x);

// Interval type of [x,y] for non-bottom x: l_i = number of pi_x-blocks inside
// the i-th block of pi_y, distinguished block of y first (l_1 counts S_x's
// block siblings inside S_y, including S_x itself). Sum l_i = b(pi_x).
std::vector<int> emb_interval_type(const EmbeddedSubset& x, const EmbeddedSubset& y);

// Exact number of maximal chains in [x,y].
//   x = bottom:  s * (n-k)!/2^{n-k} * s! s_2! ... s_k!   (y = (S,pi), |S| = s)
//   otherwise:   (k'-k)!/2^{k'-k} * l_1! ... l_k!
// The second case is the partition-interval count transported through the
// isomorphism [x,y] ~ [pi_x, pi_y]. Throws std::domain_error if !(x <= y).
Bigint count_chains_embedded(const EmbeddedSubset& x, const EmbeddedSubset& y);

// A circulating uncorrected variant of the interval coefficient,
// l_1 (k'-k) / 2^{k'-k} * l_1! ... l_k!, kept for auditability: it disagrees
// with the cover-DAG count and is not integral in general, hence the rational
// return type. Requires non-bottom x.
Rational count_chains_embedded_uncorrected(const EmbeddedSubset& x, const EmbeddedSubset& y);

// Total chain count bottom -> top: (n!)^2 / 2^{n-1}.
Bigint embedded_chain_count_total(int n);

// Number of elements of the lattice: sum_k k*S(n,k) + 1.
Bigint embedded_element_count(int n);

// Moebius function on the embedded lattice:
//   mu(bot, (S,pi)) = (-1)^{|S|} if pi = pi_bot_S, else 0
//   mu((S',pi'), (S,pi)) = (-1)^{k'-k} (l_1-1)! ... (l_k-1)!
// Throws std::domain_error when x and y are not comparable.
Bigint moebius_embedded(const EmbeddedSubset& x, const EmbeddedSubset& y);

// The partition formed by S and singletons (pi_bot_S).
Partition pi_bot_of_set(const std::vector<int>& s, int n);

}  // namespace emblat
