#include "emblat/embedded.hpp"

#include <algorithm>
#include <stdexcept>

namespace emblat {

EmbeddedSubset EmbeddedSubset::bottom(int n) {
    if (n < 1) throw std::invalid_argument("EmbeddedSubset: n must be positive");
    EmbeddedSubset e;
    e.n_ = n;
    e.block_ = -1;
    e.pi_ = Partition::singletons(n);
    return e;
}

EmbeddedSubset EmbeddedSubset::of(std::vector<int> s, Partition pi) {
    std::sort(s.begin(), s.end());
    const auto& blocks = pi.blocks();
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        if (blocks[b] == s) {
            EmbeddedSubset e;
            e.n_ = pi.n();
            e.block_ = b;
            e.pi_ = std::move(pi);
            return e;
        }
    }
    std::string ss = "{";
    for (std::size_t i = 0; i < s.size(); ++i) ss += (i ? "," : "") + std::to_string(s[i]);
    ss += "}";
    throw std::invalid_argument("EmbeddedSubset: " + ss + " is not a block of " + pi.str());
}

EmbeddedSubset EmbeddedSubset::atom(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("EmbeddedSubset: atom element out of range");
    return of({i}, Partition::singletons(n));
}

EmbeddedSubset EmbeddedSubset::top(int n) {
    Partition t = Partition::single_block(n);
    return of(t.block(0), t);
}

const std::vector<int>& EmbeddedSubset::s() const {
    if (is_bottom()) throw std::logic_error("EmbeddedSubset: bottom has no distinguished block");
    return pi_.block(block_);
}

const Partition& EmbeddedSubset::pi() const {
    if (is_bottom()) throw std::logic_error("EmbeddedSubset: bottom has no partition");
    return pi_;
}

int EmbeddedSubset::height() const {
    return is_bottom() ? 0 : n_ - pi_.block_count() + 1;
}

std::string EmbeddedSubset::str() const {
    if (is_bottom()) return "⊥";
    std::string out;
    for (std::size_t i = 0; i < s().size(); ++i) {
        if (i && n_ > 9) out += " ";
        out += std::to_string(s()[i]);
    }
    return out + pi_.str();
}

bool operator==(const EmbeddedSubset& a, const EmbeddedSubset& b) {
    if (a.n_ != b.n_) return false;
    if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
    return a.block_ == b.block_ && a.pi_ == b.pi_;
}

bool operator<(const EmbeddedSubset& a, const EmbeddedSubset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.height() != b.height()) return a.height() < b.height();
    if (a.is_bottom()) return false;  // both bottom
    if (a.s() != b.s()) return a.s() < b.s();
    return a.pi_.rgs() < b.pi_.rgs();
}

// ---- order and lattice operations -------------------------------------------

namespace {
void require_same_n(const EmbeddedSubset& x, const EmbeddedSubset& y, const char* what) {
    if (x.n() != y.n())
        throw std::invalid_argument(std::string(what) + ": mismatched ground sets");
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace

bool emb_leq(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    require_same_n(x, y, "emb_leq");
    if (x.is_bottom()) return true;
    if (y.is_bottom()) return false;
    return subset_of(x.s(), y.s()) && refines(x.pi(), y.pi());
}

EmbeddedSubset emb_join(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    require_same_n(x, y, "emb_join");
    if (x.is_bottom()) return y;
    if (y.is_bottom()) return x;
    Partition pj = partition_join(x.pi(), y.pi());
    const int bt = pj.block_of(x.s().front());
    const int bt2 = pj.block_of(y.s().front());
    if (bt == bt2) return EmbeddedSubset::of(pj.block(bt), pj);
    // merge the two blocks carrying S and S'
    std::vector<std::vector<int>> blocks;
    std::vector<int> merged = pj.block(bt);
    merged.insert(merged.end(), pj.block(bt2).begin(), pj.block(bt2).end());
    blocks.push_back(merged);
    for (int b = 0; b < pj.block_count(); ++b)
        if (b != bt && b != bt2) blocks.push_back(pj.block(b));
    Partition rho = Partition::of(blocks, pj.n());
    return EmbeddedSubset::of(std::move(merged), std::move(rho));
}

EmbeddedSubset emb_meet(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    require_same_n(x, y, "emb_meet");
    if (x.is_bottom() || y.is_bottom()) return EmbeddedSubset::bottom(x.n());
    std::vector<int> inter;
    std::set_intersection(x.s().begin(), x.s().end(), y.s().begin(), y.s().end(),
                          std::back_inserter(inter));
    if (inter.empty()) return EmbeddedSubset::bottom(x.n());
    return EmbeddedSubset::of(std::move(inter), partition_meet(x.pi(), y.pi()));
}

Bigint emb_upper_cover_count(const EmbeddedSubset& x) {
    if (x.is_bottom()) throw std::invalid_argument("emb_upper_cover_count: bottom");
    return Bigint::binomial(x.pi().block_count(), 2);
}

Bigint emb_lower_cover_count(const EmbeddedSubset& x) {
    if (x.is_bottom()) throw std::invalid_argument("emb_lower_cover_count: bottom");
    Bigint total = partition_lower_cover_count(x.pi());
    total += Bigint::pow2(x.s().size() - 1) - Bigint(1);
    return total;
}

std::vector<int> emb_interval_type(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    if (x.is_bottom()) throw std::invalid_argument("emb_interval_type: x must be non-bottom");
    if (!emb_leq(x, y)) throw std::domain_error("emb_interval_type: elements not comparable");
    const std::vector<int> by_block = interval_type(x.pi(), y.pi());
    // rotate y's distinguished block to the front
    std::vector<int> l;
    l.reserve(by_block.size());
    const int dist = y.block_index();
    l.push_back(by_block[dist]);
    for (int b = 0; b < static_cast<int>(by_block.size()); ++b)
        if (b != dist) l.push_back(by_block[b]);
    return l;
}

Bigint count_chains_embedded(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    if (!emb_leq(x, y)) throw std::domain_error("count_chains_embedded: elements not comparable");
    if (y.is_bottom()) return Bigint(1);
    if (x.is_bottom()) {
        // every chain from bottom passes through one of the s atoms below y
        const Partition bot = Partition::singletons(y.n());
        return Bigint(static_cast<std::int64_t>(y.s().size())) *
               count_chains_partition(bot, y.pi());
    }
    // [x,y] is isomorphic to the partition interval [pi_x, pi_y]
    return count_chains_partition(x.pi(), y.pi());
}

Rational count_chains_embedded_uncorrected(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    const std::vector<int> l = emb_interval_type(x, y);  // validates
    const int d = x.pi().block_count() - y.pi().block_count();
    Bigint num = Bigint(l[0]) * Bigint(d);
    for (int li : l) num *= Bigint::factorial(li);
    return Rational(num, Bigint::pow2(d));
}

Bigint embedded_chain_count_total(int n) {
    if (n < 1) throw std::invalid_argument("embedded_chain_count_total: n must be positive");
    Bigint f = Bigint::factorial(n);
    return Bigint::div_exact(f * f, Bigint::pow2(n - 1));
}

Bigint embedded_element_count(int n) {
    if (n < 1) throw std::invalid_argument("embedded_element_count: n must be positive");
    Bigint total(1);
    for (int k = 1; k <= n; ++k) total += Bigint(k) * stirling2(n, k);
    return total;
}

Partition pi_bot_of_set(const std::vector<int>& s, int n) {
    std::vector<std::vector<int>> blocks{s};
    std::vector<char> in_s(n + 1, 0);
    for (int e : s) in_s[e] = 1;
    for (int e = 1; e <= n; ++e)
        if (!in_s[e]) blocks.push_back({e});
    return Partition::of(blocks, n);
}

Bigint moebius_embedded(const EmbeddedSubset& x, const EmbeddedSubset& y) {
    if (!emb_leq(x, y)) throw std::domain_error("moebius_embedded: elements not comparable");
    if (x.is_bottom()) {
        if (y.is_bottom()) return Bigint(1);
        if (y.pi() == pi_bot_of_set(y.s(), y.n()))
            return (y.s().size() % 2) ? Bigint(-1) : Bigint(1);
        return Bigint(0);
    }
    return moebius_partition(x.pi(), y.pi());
}

}  // namespace emblat
