#include "emblat/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace emblat {

Partition Partition::from_canonical_blocks(std::vector<std::vector<int>> blocks, int n) {
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.block_id_.assign(n + 1, -1);
    p.rgs_.assign(n, 0);
    for (int b = 0; b < static_cast<int>(p.blocks_.size()); ++b) {
        for (int e : p.blocks_[b]) {
            p.block_id_[e] = b;
            p.rgs_[e - 1] = b;
        }
    }
    return p;
}

Partition Partition::of(const std::vector<std::vector<int>>& raw_blocks, int n) {
    if (n < 1) throw std::invalid_argument("Partition: n must be positive");
    std::vector<int> seen(n + 1, 0);
    for (const auto& blk : raw_blocks) {
        if (blk.empty()) throw std::invalid_argument("Partition: empty block");
        for (int e : blk) {
            if (e < 1 || e > n)
                throw std::invalid_argument("Partition: element " + std::to_string(e) +
                                            " out of range 1.." + std::to_string(n));
            if (++seen[e] > 1)
                throw std::invalid_argument("Partition: element " + std::to_string(e) +
                                            " repeated");
        }
    }
    for (int e = 1; e <= n; ++e) {
        if (!seen[e])
            throw std::invalid_argument("Partition: element " + std::to_string(e) + " missing");
    }
    std::vector<std::vector<int>> blocks = raw_blocks;
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return from_canonical_blocks(std::move(blocks), n);
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int e = 1; e <= n; ++e) blocks.push_back({e});
    return from_canonical_blocks(std::move(blocks), n);
}

Partition Partition::single_block(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return from_canonical_blocks({std::move(all)}, n);
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
    const int n = static_cast<int>(rgs.size());
    int k = 0;
    for (int v : rgs) k = std::max(k, v + 1);
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    return from_canonical_blocks(std::move(blocks), n);
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> s;
    s.reserve(blocks_.size());
    for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
    return s;
}

std::string Partition::str() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += ",";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i && n_ > 9) out += " ";
            out += std::to_string(blocks_[b][i]);
        }
    }
    out += "}";
    return out;
}

// ---- refinement order ------------------------------------------------------

namespace {
void require_same_n(const Partition& p, const Partition& q, const char* what) {
    if (p.n() != q.n())
        throw std::invalid_argument(std::string(what) + ": mismatched ground sets (n=" +
                                    std::to_string(p.n()) + " vs n=" + std::to_string(q.n()) +
                                    ")");
}
}  // namespace

bool refines(const Partition& p, const Partition& q) {
    require_same_n(p, q, "refines");
    for (const auto& blk : p.blocks()) {
        const int target = q.block_of(blk.front());
        for (int e : blk) {
            if (q.block_of(e) != target) return false;
        }
    }
    return true;
}

Partition partition_meet(const Partition& p, const Partition& q) {
    require_same_n(p, q, "partition_meet");
    const int n = p.n();
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int e = 1; e <= n; ++e) cells[{p.block_of(e), q.block_of(e)}].push_back(e);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(cells.size());
    for (auto& [key, cell] : cells) blocks.push_back(std::move(cell));
    return Partition::of(blocks, n);
}

Partition partition_join(const Partition& p, const Partition& q) {
    require_same_n(p, q, "partition_join");
    const int n = p.n();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& blk : p.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    for (const auto& blk : q.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    std::map<int, std::vector<int>> comp;
    for (int e = 1; e <= n; ++e) comp[find(e)].push_back(e);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(comp.size());
    for (auto& [root, members] : comp) blocks.push_back(std::move(members));
    return Partition::of(blocks, n);
}

PartitionCovers partition_covers(const Partition& p) {
    PartitionCovers out;
    const auto& blocks = p.blocks();
    const int k = p.block_count();

    // lower covers: split one block into two nonempty parts. The part not
    // containing the block minimum ranges over nonempty subsets of the rest.
    for (int b = 0; b < k; ++b) {
        const auto& blk = blocks[b];
        const int t = static_cast<int>(blk.size());
        if (t < 2) continue;
        const unsigned rest = t - 1;
        for (unsigned mask = 1; mask < (1u << rest); ++mask) {
            std::vector<int> keep{blk[0]}, moved;
            for (unsigned i = 0; i < rest; ++i) {
                if (mask & (1u << i))
                    moved.push_back(blk[i + 1]);
                else
                    keep.push_back(blk[i + 1]);
            }
            std::vector<std::vector<int>> nb;
            nb.reserve(k + 1);
            for (int c = 0; c < k; ++c) {
                if (c == b) {
                    nb.push_back(keep);
                    nb.push_back(moved);
                } else {
                    nb.push_back(blocks[c]);
                }
            }
            out.lower.push_back(Partition::of(nb, p.n()));
        }
    }
    // upper covers: merge two blocks.
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            std::vector<std::vector<int>> nb;
            nb.reserve(k - 1);
            std::vector<int> merged = blocks[a];
            merged.insert(merged.end(), blocks[b].begin(), blocks[b].end());
            nb.push_back(std::move(merged));
            for (int c = 0; c < k; ++c)
                if (c != a && c != b) nb.push_back(blocks[c]);
            out.upper.push_back(Partition::of(nb, p.n()));
        }
    }
    return out;
}

Bigint partition_lower_cover_count(const Partition& p) {
    Bigint total(0);
    for (const auto& blk : p.blocks()) total += Bigint::pow2(blk.size() - 1);
    return total - Bigint(p.block_count());
}

Bigint partition_upper_cover_count(const Partition& p) {
    return Bigint::binomial(p.block_count(), 2);
}

std::vector<int> interval_type(const Partition& p, const Partition& q) {
    if (!refines(p, q))
        throw std::domain_error("interval_type: " + p.str() + " does not refine " + q.str());
    std::vector<int> m(q.block_count(), 0);
    for (const auto& blk : p.blocks()) ++m[q.block_of(blk.front())];
    return m;
}

Bigint count_chains_partition(const Partition& p, const Partition& q) {
    const std::vector<int> m = interval_type(p, q);  // throws if not comparable
    const int d = p.block_count() - q.block_count();
    Bigint num = Bigint::factorial(d);
    for (int mi : m) num *= Bigint::factorial(mi);
    return Bigint::div_exact(num, Bigint::pow2(d));
}

Bigint moebius_partition(const Partition& p, const Partition& q) {
    const std::vector<int> m = interval_type(p, q);  // throws if not comparable
    const int d = p.block_count() - q.block_count();
    Bigint r(1);
    for (int mi : m) r *= Bigint::factorial(mi - 1);
    return (d % 2) ? -r : r;
}

// ---- counting and enumeration ---------------------------------------------

Bigint stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("stirling2: need 0 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    Bigint sum(0);
    for (int i = 0; i <= k; ++i) {
        Bigint term = Bigint::binomial(k, i) * Bigint::ipow(Bigint(i), n);
        if ((k - i) % 2)
            sum -= term;
        else
            sum += term;
    }
    return Bigint::div_exact(sum, Bigint::factorial(k));
}

Bigint bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: n must be nonnegative");
    if (n == 0) return Bigint(1);
    Bigint total(0);
    for (int k = 1; k <= n; ++k) total += stirling2(n, k);
    return total;
}

namespace {
void rgs_recurse(int n, int pos, int maxv, std::vector<int>& a,
                 const std::function<void(const Partition&)>& visit) {
    if (pos == n) {
        visit(Partition::from_rgs(a));
        return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
        a[pos] = v;
        rgs_recurse(n, pos + 1, std::max(maxv, v), a, visit);
    }
}
}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 1 || n > kMaxStreamN)
        throw std::invalid_argument("for_each_partition: n out of range 1.." +
                                    std::to_string(kMaxStreamN));
    std::vector<int> a(n, 0);
    rgs_recurse(n, 1, 0, a, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1 || n > kMaxEnumerateN)
        throw std::invalid_argument("enumerate_partitions: n out of range 1.." +
                                    std::to_string(kMaxEnumerateN));
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace emblat
