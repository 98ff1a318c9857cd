#pragma once

#include <functional>
#include <string>
#include <vector>

#include "emblat/bigint.hpp"

namespace emblat {

// A set partition of {1..n} in canonical form: every block sorted ascending,
// blocks ordered by their minimum element. Canonical form makes equality,
// ordering and serialization unambiguous. Immutable after construction.
class Partition {
public:
    // Validates and canonicalizes raw blocks. Throws std::invalid_argument
    // naming the offending element on overlap, gap or out-of-range input.
    static Partition of(const std::vector<std::vector<int>>& raw_blocks, int n);

    // pi_bot: {{1},{2},...,{n}}
    static Partition singletons(int n);
    // pi_top: {{1..n}}
    static Partition single_block(int n);
    // From a restricted growth string (rgs[i] = block index of element i+1,
    // 0-based, first occurrences in increasing order). Trusted input.
    static Partition from_rgs(const std::vector<int>& rgs);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    // 0-based index of the block containing element e (1-based).
    int block_of(int e) const { return block_id_[e]; }
    std::vector<int> block_sizes() const;
    // The restricted growth string; doubles as the canonical key.
    const std::vector<int>& rgs() const { return rgs_; }

    bool is_bottom() const { return block_count() == n_; }
    bool is_top() const { return block_count() == 1; }

    // Display form, e.g. "{12,3}" for n <= 9, "{1 2,3}" otherwise.
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_ == b.n_ && a.rgs_ == b.rgs_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Lexicographic on the rgs; a deterministic total order used for indexing.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.rgs_ < b.rgs_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_id_;  // 1-based element -> block index; [0] unused
    std::vector<int> rgs_;

    static Partition from_canonical_blocks(std::vector<std::vector<int>> blocks, int n);
};

// ---- refinement order ------------------------------------------------------

// p <= q: every block of p contained in a block of q. Throws on mismatched n.
bool refines(const Partition& p, const Partition& q);

Partition partition_meet(const Partition& p, const Partition& q);
Partition partition_join(const Partition& p, const Partition& q);

struct PartitionCovers {
    std::vector<Partition> lower;  // one block split in two
    std::vector<Partition> upper;  // two blocks merged
};
PartitionCovers partition_covers(const Partition& p);

// Closed-form cover counts: sum_S 2^{|S|-1} - |pi| below, C(k,2) above.
Bigint partition_lower_cover_count(const Partition& p);
Bigint partition_upper_cover_count(const Partition& p);

// The interval [p,q] is isomorphic to prod_i Pi(m_i) where m_i is the number
// of p-blocks inside the i-th block of q (in q's canonical block order).
// Entries are >= 1 and sum to b(p). Throws std::domain_error when !(p <= q).
std::vector<int> interval_type(const Partition& p, const Partition& q);

// Number of maximal chains in [p,q]: (k'-k)!/2^{k'-k} * m_1! ... m_{b(q)}!
// with k' = b(p), k = b(q). Exact.
Bigint count_chains_partition(const Partition& p, const Partition& q);

// Moebius function on Pi(n): (-1)^{b(p)-b(q)} * prod (m_i - 1)!.
// Throws std::domain_error when p and q are not comparable.
Bigint moebius_partition(const Partition& p, const Partition& q);

// ---- counting and enumeration ---------------------------------------------

// Stirling number of the second kind via the alternating closed form
// S(n,k) = (1/k!) sum_i (-1)^{k-i} C(k,i) i^n. Requires 0 <= k <= n.
Bigint stirling2(int n, int k);

Bigint bell_number(int n);

// Visits every partition of {1..n} exactly once, restricted growth strings
// in lexicographic order. Supports n up to kMaxStreamN.
inline constexpr int kMaxStreamN = 20;
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

// Materialized enumeration. Bell numbers grow fast; bounded at
// kMaxEnumerateN = 12 (Bell(12) = 4213597).
inline constexpr int kMaxEnumerateN = 12;
std::vector<Partition> enumerate_partitions(int n);

}  // namespace emblat
