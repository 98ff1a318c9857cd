#include "emblat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace emblat {

EmbeddedLattice EmbeddedLattice::build(int n) {
    if (n < 1 || n > kMaxBuildN)
        throw std::invalid_argument("EmbeddedLattice::build: n out of range 1.." +
                                    std::to_string(kMaxBuildN));
    EmbeddedLattice L;
    L.n_ = n;

    const std::vector<Partition> parts = enumerate_partitions(n);
    const int np = static_cast<int>(parts.size());

    L.elements_.push_back(EmbeddedSubset::bottom(n));
    for (const Partition& p : parts)
        for (int b = 0; b < p.block_count(); ++b)
            L.elements_.push_back(EmbeddedSubset::of(p.block(b), p));
    std::sort(L.elements_.begin(), L.elements_.end());

    const int V = static_cast<int>(L.elements_.size());
    L.heights_.resize(V);
    for (int i = 0; i < V; ++i) {
        L.heights_[i] = L.elements_[i].height();
        L.index_.emplace(L.elements_[i], i);
    }

    // refinement relation between partitions, then the product order
    std::map<std::vector<int>, int> pindex;
    for (int i = 0; i < np; ++i) pindex.emplace(parts[i].rgs(), i);
    std::vector<char> prec(static_cast<std::size_t>(np) * np, 0);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            prec[static_cast<std::size_t>(i) * np + j] = refines(parts[i], parts[j]) ? 1 : 0;

    std::vector<std::uint32_t> mask(V, 0);
    std::vector<int> pid(V, -1);
    for (int i = 1; i < V; ++i) {
        for (int e : L.elements_[i].s()) mask[i] |= 1u << (e - 1);
        pid[i] = pindex.at(L.elements_[i].pi().rgs());
    }

    L.up_.init(V, V);
    L.down_.init(V, V);
    for (int i = 0; i < V; ++i) {
        for (int j = 0; j < V; ++j) {
            bool le = i == 0 || (j != 0 && (mask[i] & ~mask[j]) == 0 &&
                                 prec[static_cast<std::size_t>(pid[i]) * np + pid[j]]);
            if (le) {
                L.up_.set(i, j);
                L.down_.set(j, i);
            }
        }
    }

    // covers by transitive reduction: x covers-below y iff x < y and no z
    // has x < z < y, tested with one row intersection per candidate
    L.upper_covers_.resize(V);
    L.lower_covers_.resize(V);
    const int W = L.up_.words_per_row;
    for (int y = 0; y < V; ++y) {
        const std::uint64_t* dy = L.down_.row(y);
        for (int x = 0; x < V; ++x) {
            if (x == y || !L.up_.get(x, y)) continue;
            const std::uint64_t* ux = L.up_.row(x);
            std::uint64_t strict = 0;
            for (int w = 0; w < W; ++w) {
                std::uint64_t both = ux[w] & dy[w];
                // drop x and y themselves
                if (w == x / 64) both &= ~(1ull << (x % 64));
                if (w == y / 64) both &= ~(1ull << (y % 64));
                strict |= both;
                if (strict) break;
            }
            if (!strict) {
                L.lower_covers_[y].push_back(x);
                L.upper_covers_[x].push_back(y);
            }
        }
    }
    return L;
}

int EmbeddedLattice::index_of(const EmbeddedSubset& x) const {
    auto it = index_.find(x);
    if (it == index_.end())
        throw std::invalid_argument("EmbeddedLattice: element " + x.str() +
                                    " is not in the lattice (n=" + std::to_string(n_) + ")");
    return it->second;
}

bool EmbeddedLattice::is_cover(int lo, int hi) const {
    const auto& ups = upper_covers_[lo];
    return std::find(ups.begin(), ups.end(), hi) != ups.end();
}

int EmbeddedLattice::cover_edge_count() const {
    int total = 0;
    for (const auto& u : upper_covers_) total += static_cast<int>(u.size());
    return total;
}

std::vector<int> EmbeddedLattice::atom_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (heights_[i] == 1) out.push_back(i);
    return out;
}

int EmbeddedLattice::join_index(int i, int j) const {
    // least common upper bound = lowest-index bit of up(i) & up(j)
    const std::uint64_t* a = up_.row(i);
    const std::uint64_t* b = up_.row(j);
    for (int w = 0; w < up_.words_per_row; ++w) {
        std::uint64_t both = a[w] & b[w];
        if (both) return w * 64 + std::countr_zero(both);
    }
    throw std::logic_error("EmbeddedLattice: no common upper bound");
}

int EmbeddedLattice::meet_index(int i, int j) const {
    const std::uint64_t* a = down_.row(i);
    const std::uint64_t* b = down_.row(j);
    for (int w = down_.words_per_row; w-- > 0;) {
        std::uint64_t both = a[w] & b[w];
        if (both) return w * 64 + 63 - std::countl_zero(both);
    }
    throw std::logic_error("EmbeddedLattice: no common lower bound");
}

Bigint EmbeddedLattice::count_maximal_chains_oracle(int x, int y) const {
    if (!leq(x, y))
        throw std::domain_error("count_maximal_chains_oracle: elements not comparable");
    // indices are topologically sorted (strictly comparable implies strictly
    // smaller height, hence smaller index)
    std::map<int, Bigint> paths;
    paths[x] = Bigint(1);
    for (auto it = paths.begin(); it != paths.end(); ++it) {
        const int z = it->first;
        if (z == y) continue;
        for (int w : upper_covers_[z]) {
            if (!leq(w, y)) continue;
            auto [slot, inserted] = paths.try_emplace(w, Bigint(0));
            slot->second += it->second;
        }
    }
    auto it = paths.find(y);
    return it == paths.end() ? Bigint(0) : it->second;
}

EmbeddedLattice::Irreducibles EmbeddedLattice::irreducibles() const {
    Irreducibles out;
    for (int i = 0; i < size(); ++i) {
        if (i != bottom_index() && lower_covers_[i].size() == 1) out.join_irr.push_back(i);
        if (i != top_index() && upper_covers_[i].size() == 1) out.meet_irr.push_back(i);
    }
    return out;
}

std::vector<int> EmbeddedLattice::complements_of(int i) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j) {
        if (join_index(i, j) == top_index() && meet_index(i, j) == bottom_index())
            out.push_back(j);
    }
    return out;
}

EmbeddedLattice::Properties EmbeddedLattice::probe_properties() const {
    Properties p;
    const int V = size();

    // ranked: longest-path rank from bottom increases by one across every cover
    std::vector<int> rank(V, 0);
    p.ranked = true;
    for (int z = 0; z < V; ++z) {
        for (int w : upper_covers_[z]) rank[w] = std::max(rank[w], rank[z] + 1);
    }
    for (int z = 0; z < V && p.ranked; ++z)
        for (int w : upper_covers_[z])
            if (rank[w] != rank[z] + 1) {
                p.ranked = false;
                break;
            }

    std::vector<int> jt(static_cast<std::size_t>(V) * V), mt(static_cast<std::size_t>(V) * V);
    for (int i = 0; i < V; ++i)
        for (int j = i; j < V; ++j) {
            int jn = join_index(i, j), mn = meet_index(i, j);
            jt[static_cast<std::size_t>(i) * V + j] = jt[static_cast<std::size_t>(j) * V + i] = jn;
            mt[static_cast<std::size_t>(i) * V + j] = mt[static_cast<std::size_t>(j) * V + i] = mn;
        }
    auto jn = [&](int i, int j) { return jt[static_cast<std::size_t>(i) * V + j]; };
    auto mn = [&](int i, int j) { return mt[static_cast<std::size_t>(i) * V + j]; };

    p.upper_semimodular = true;
    p.lower_semimodular = true;
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j) {
            const int m = mn(i, j), s = jn(i, j);
            if (is_cover(m, i) && is_cover(m, j) && !(is_cover(i, s) && is_cover(j, s)))
                p.upper_semimodular = false;
            if (is_cover(i, s) && is_cover(j, s) && !(is_cover(m, i) && is_cover(m, j)))
                p.lower_semimodular = false;
            if (!p.upper_semimodular && !p.lower_semimodular) break;
        }
    }

    // modular law x <= z  =>  x v (y ^ z) = (x v y) ^ z
    p.modular = true;
    for (int x = 0; x < V && p.modular; ++x)
        for (int z = 0; z < V && p.modular; ++z) {
            if (!leq(x, z)) continue;
            for (int y = 0; y < V; ++y)
                if (jn(x, mn(y, z)) != mn(jn(x, y), z)) {
                    p.modular = false;
                    break;
                }
        }

    p.distributive = true;
    for (int x = 0; x < V && p.distributive; ++x)
        for (int y = 0; y < V && p.distributive; ++y)
            for (int z = y; z < V; ++z)
                if (mn(x, jn(y, z)) != jn(mn(x, y), mn(x, z))) {
                    p.distributive = false;
                    break;
                }

    p.atomistic = true;
    const std::vector<int> atoms = atom_indices();
    for (int x = 0; x < V && p.atomistic; ++x) {
        int acc = bottom_index();
        for (int a : atoms)
            if (leq(a, x)) acc = jn(acc, a);
        if (acc != x) p.atomistic = false;
    }
    return p;
}

}  // namespace emblat
