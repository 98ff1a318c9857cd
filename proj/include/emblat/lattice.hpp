#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "emblat/bigint.hpp"
#include "emblat/embedded.hpp"

namespace emblat {

// Full materialization is intended for n <= 7 (3264 elements); the closed
// forms in embedded.hpp cover larger n.
inline constexpr int kMaxBuildN = 7;

// The materialized lattice of embedded subsets: every element indexed in the
// canonical order (height, then EmbeddedSubset order; bottom is index 0, top
// is the last index), the full order relation as bit rows, and cover lists
// computed generically from the order (no structural shortcuts). Immutable
// after build; all queries are read-only and safe for concurrent use.
class EmbeddedLattice {
public:
    static EmbeddedLattice build(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const EmbeddedSubset& element(int i) const { return elements_[i]; }
    const std::vector<EmbeddedSubset>& elements() const { return elements_; }
    // Throws std::invalid_argument if x is not an element (wrong n).
    int index_of(const EmbeddedSubset& x) const;

    int bottom_index() const { return 0; }
    int top_index() const { return size() - 1; }
    int height(int i) const { return heights_[i]; }

    bool leq(int i, int j) const { return up_.get(i, j); }
    bool is_cover(int lo, int hi) const;

    const std::vector<int>& upper_covers(int i) const { return upper_covers_[i]; }
    const std::vector<int>& lower_covers(int i) const { return lower_covers_[i]; }
    int cover_edge_count() const;

    // Indices of the atoms (height-1 elements), ascending.
    std::vector<int> atom_indices() const;

    // Join / meet resolved through the order rows: the unique minimal (resp.
    // maximal) element of the common upset (resp. downset).
    int join_index(int i, int j) const;
    int meet_index(int i, int j) const;

    // Cover-DAG dynamic program counting maximal chains of [x,y]; the ground
    // truth the closed forms are checked against. Throws if !(x <= y).
    Bigint count_maximal_chains_oracle(int x, int y) const;

    struct Irreducibles {
        std::vector<int> join_irr;  // exactly one lower cover (bottom excluded)
        std::vector<int> meet_irr;  // exactly one upper cover (top excluded)
    };
    Irreducibles irreducibles() const;

    // All y with x v y = top and x ^ y = bottom. By convention the complement
    // of bottom is {top} and vice versa.
    std::vector<int> complements_of(int i) const;

    struct Properties {
        bool ranked = false;
        bool upper_semimodular = false;
        bool lower_semimodular = false;
        bool modular = false;
        bool distributive = false;
        bool atomistic = false;
    };
    // Generic probes over the materialized order; O(V^3) for the modular and
    // distributive scans, intended for n <= 5.
    Properties probe_properties() const;

private:
    // Row-major bit matrix.
    struct BitMatrix {
        int rows = 0;
        int words_per_row = 0;
        std::vector<std::uint64_t> bits;
        void init(int r, int c) {
            rows = r;
            words_per_row = (c + 63) / 64;
            bits.assign(static_cast<std::size_t>(r) * words_per_row, 0);
        }
        void set(int i, int j) { bits[static_cast<std::size_t>(i) * words_per_row + j / 64] |= 1ull << (j % 64); }
        bool get(int i, int j) const {
            return bits[static_cast<std::size_t>(i) * words_per_row + j / 64] >> (j % 64) & 1;
        }
        const std::uint64_t* row(int i) const { return &bits[static_cast<std::size_t>(i) * words_per_row]; }
    };

    int n_ = 0;
    std::vector<EmbeddedSubset> elements_;
    std::vector<int> heights_;
    std::map<EmbeddedSubset, int> index_;
    BitMatrix up_;    // up_(i,j)  <=> i <= j
    BitMatrix down_;  // down_(i,j) <=> j <= i
    std::vector<std::vector<int>> upper_covers_;
    std::vector<std::vector<int>> lower_covers_;
};

}  // namespace emblat
