#pragma once
/**
 * @file weights.hpp
 * @brief Integer GL(n) weights: dominance, Bott straightening, partitions,
 *        subset/partition correspondences, and parity-constrained box counts.
 *
 * Conventions used throughout the library:
 *  - A weight λ ∈ ℤⁿ is dominant when λ₁ ≥ λ₂ ≥ ... ≥ λₙ.
 *  - δ always denotes the staircase (n−1, n−2, ..., 1, 0); n is carried by the
 *    weight itself and never passed separately.
 *  - Out-of-range entries follow the conventions λ_s = +∞ for s ≤ 0 and
 *    λ_s = −∞ for s > n.  All membership predicates go through the total
 *    comparison helpers Weight::ge_at / Weight::le_at so those conventions
 *    live in exactly one place.
 *  - Subsets I ⊆ {1..n} are strictly increasing and 1-based.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chargl {

using std::int64_t;

/// Residues mod 2 as a dedicated type; raw ints are never used as parities.
enum class Parity : int { even = 0, odd = 1 };

constexpr Parity parity_of(int x) noexcept {
    return (x % 2 == 0) ? Parity::even : Parity::odd;
}

constexpr Parity flip(Parity p) noexcept {
    return p == Parity::even ? Parity::odd : Parity::even;
}

constexpr bool same_parity(int a, int b) noexcept { return (a - b) % 2 == 0; }

constexpr bool has_parity(int x, Parity p) noexcept { return parity_of(x) == p; }

inline const char* to_string(Parity p) noexcept {
    return p == Parity::even ? "even" : "odd";
}

/// A GL(n) integer weight (not necessarily dominant).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> parts) : parts_(std::move(parts)) {}

    /// The zero weight of length n.
    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<size_t>(n), 0)); }
    /// The constant weight (c, c, ..., c) of length n.
    static Weight constant(int n, int c) { return Weight(std::vector<int>(static_cast<size_t>(n), c)); }

    int n() const noexcept { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    /// 1-based in-range access; use ge_at/le_at when the ±∞ conventions apply.
    int at(int i) const {
        if (i < 1 || i > n()) throw std::out_of_range("Weight::at: index " + std::to_string(i));
        return parts_[static_cast<size_t>(i - 1)];
    }

    /// λ_s ≥ c under the conventions λ_s = +∞ (s ≤ 0), −∞ (s > n).
    bool ge_at(int s, int c) const noexcept {
        if (s <= 0) return true;
        if (s > n()) return false;
        return parts_[static_cast<size_t>(s - 1)] >= c;
    }

    /// λ_s ≤ c under the same conventions.
    bool le_at(int s, int c) const noexcept {
        if (s <= 0) return false;
        if (s > n()) return true;
        return parts_[static_cast<size_t>(s - 1)] <= c;
    }

    bool is_dominant() const noexcept {
        for (int i = 1; i < n(); ++i)
            if (parts_[static_cast<size_t>(i - 1)] < parts_[static_cast<size_t>(i)]) return false;
        return true;
    }

    /// λ + (c, c, ..., c).
    Weight plus_constant(int c) const {
        std::vector<int> v = parts_;
        for (int& x : v) x += c;
        return Weight(std::move(v));
    }

    /// Componentwise bounds check against [lo, hi].
    bool within(int lo, int hi) const noexcept {
        for (int x : parts_)
            if (x < lo || x > hi) return false;
        return true;
    }

    int max_part() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }
    int min_part() const { return parts_.empty() ? 0 : *std::min_element(parts_.begin(), parts_.end()); }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < n(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[static_cast<size_t>(i)]);
        }
        return s + ")";
    }

    friend bool operator==(const Weight& a, const Weight& b) noexcept { return a.parts_ == b.parts_; }
    friend bool operator!=(const Weight& a, const Weight& b) noexcept { return !(a == b); }
    /// Lexicographic (ascending) — containers that need descending order use LexDesc.
    friend bool operator<(const Weight& a, const Weight& b) noexcept { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// Pair of weights for the m×n (general) matrix space: (GL_m part, GL_n part).
using BiWeight = std::pair<Weight, Weight>;

/// Lexicographically descending order on weights and weight pairs; this is the
/// canonical storage and output order of the whole library.
struct LexDesc {
    bool operator()(const Weight& a, const Weight& b) const noexcept { return b < a; }
    bool operator()(const BiWeight& a, const BiWeight& b) const noexcept {
        if (a.first != b.first) return b.first < a.first;
        return b.second < a.second;
    }
};

/// Outcome of straightening: either zero, or a sign together with the unique
/// dominant representative.
class StraightenResult {
public:
    static StraightenResult zero() { return StraightenResult(); }
    StraightenResult(int sign, Weight w) : sign_(sign), weight_(std::move(w)) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("StraightenResult: sign must be ±1");
    }

    bool is_zero() const noexcept { return !weight_.has_value(); }
    int sign() const {
        if (is_zero()) throw std::logic_error("StraightenResult::sign on zero result");
        return sign_;
    }
    const Weight& weight() const {
        if (is_zero()) throw std::logic_error("StraightenResult::weight on zero result");
        return *weight_;
    }

    friend bool operator==(const StraightenResult& a, const StraightenResult& b) {
        if (a.is_zero() != b.is_zero()) return false;
        if (a.is_zero()) return true;
        return a.sign_ == b.sign_ && *a.weight_ == *b.weight_;
    }

private:
    StraightenResult() = default;
    int sign_ = 0;
    std::optional<Weight> weight_;
};

/**
 * Bott straightening: with δ = (n−1,...,0), S_λ = 0 if λ+δ has a repeated
 * entry, and otherwise S_λ = sgn(σ)·S_{sort(λ+δ)−δ} where σ is the unique
 * permutation sorting λ+δ into strictly decreasing order.
 *
 * Examples (frozen in tests): S_{(2,1,4,3)} = 0, S_{(1,1,0,7)} = −S_{(4,2,2,1)},
 * and S_λ = 0 whenever λ_{i+1} = λ_i + 1 for some i.
 */
inline StraightenResult straighten(const Weight& lam) {
    const int n = lam.n();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = lam.parts()[static_cast<size_t>(i)] + (n - 1 - i);

    // Fast path: already strictly decreasing (⇔ λ dominant).
    bool sorted = true;
    for (int i = 0; i + 1 < n; ++i)
        if (v[static_cast<size_t>(i)] <= v[static_cast<size_t>(i + 1)]) { sorted = false; break; }
    if (sorted) return StraightenResult(1, lam);

    // Insertion sort (descending), counting transpositions; n is tiny.
    int sign = 1;
    for (int i = 1; i < n; ++i) {
        int j = i;
        while (j > 0 && v[static_cast<size_t>(j - 1)] < v[static_cast<size_t>(j)]) {
            std::swap(v[static_cast<size_t>(j - 1)], v[static_cast<size_t>(j)]);
            sign = -sign;
            --j;
        }
        if (j > 0 && v[static_cast<size_t>(j - 1)] == v[static_cast<size_t>(j)]) return StraightenResult::zero();
    }
    for (int i = 0; i + 1 < n; ++i)
        if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(i + 1)]) return StraightenResult::zero();

    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] - (n - 1 - i);
    return StraightenResult(sign, Weight(std::move(w)));
}

/// A partition: weakly decreasing nonnegative parts; trailing zeros are not stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// |μ| = Σ μ_i.
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// 1-based part access; parts beyond the length are 0.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("Partition::part");
        return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    /// Conjugate (transposed Young diagram): μ′_i = #{j : μ_j ≥ i}.
    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.resize(static_cast<size_t>(parts_[0]));
            for (int i = 1; i <= parts_[0]; ++i) {
                int cnt = 0;
                for (int p : parts_)
                    if (p >= i) ++cnt;
                c[static_cast<size_t>(i - 1)] = cnt;
            }
        }
        return Partition(std::move(c));
    }

    /// μ fits in the a×b box: at most a parts, each at most b.
    bool fits_in_box(int a, int b) const noexcept {
        return length() <= a && (parts_.empty() || parts_[0] <= b);
    }

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) noexcept { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) noexcept { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// Visit every partition inside the a×b box (a parts allowed, parts ≤ b),
/// including the empty partition, in lexicographically descending order.
template <class F>
inline void for_each_partition_in_box(int a, int b, F&& f) {
    if (a < 0 || b < 0) throw std::invalid_argument("for_each_partition_in_box: negative box");
    if (a == 0 || b == 0) {
        f(Partition{});
        return;
    }
    // Each partition corresponds to exactly one weakly decreasing vector of
    // length a with entries in [0, b] (pad with zeros), so enumerate those.
    std::vector<int> mu;
    std::function<void(int, int)> gen = [&](int pos, int maxpart) {
        if (pos == a) {
            f(Partition(std::vector<int>(mu)));
            return;
        }
        for (int v = maxpart; v >= 0; --v) {
            mu.push_back(v);
            gen(pos + 1, v);
            mu.pop_back();
        }
    };
    gen(0, b);
}

/// Strictly increasing k-subset of {1..n}.
class SubsetK {
public:
    SubsetK(std::vector<int> elems, int n) : elems_(std::move(elems)), n_(n) {
        if (n < 0) throw std::invalid_argument("SubsetK: negative n");
        for (size_t t = 0; t < elems_.size(); ++t) {
            if (elems_[t] < 1 || elems_[t] > n) throw std::invalid_argument("SubsetK: element out of range");
            if (t + 1 < elems_.size() && elems_[t] >= elems_[t + 1])
                throw std::invalid_argument("SubsetK: elements must be strictly increasing");
        }
    }

    int k() const noexcept { return static_cast<int>(elems_.size()); }
    int n() const noexcept { return n_; }
    const std::vector<int>& elems() const noexcept { return elems_; }
    /// 1-based element access: i_t.
    int elem(int t) const {
        if (t < 1 || t > k()) throw std::out_of_range("SubsetK::elem");
        return elems_[static_cast<size_t>(t - 1)];
    }
    bool contains(int i) const noexcept { return std::binary_search(elems_.begin(), elems_.end(), i); }

    /// Complement in {1..n}, ascending.
    std::vector<int> complement() const {
        std::vector<int> c;
        c.reserve(static_cast<size_t>(n_ - k()));
        for (int i = 1; i <= n_; ++i)
            if (!contains(i)) c.push_back(i);
        return c;
    }

    /// All k-subsets of {1..n} in lexicographic order of element lists.
    static std::vector<SubsetK> all(int n, int k) {
        std::vector<SubsetK> out;
        if (k < 0 || k > n) return out;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int next) {
            if (static_cast<int>(cur.size()) == k) {
                out.emplace_back(cur, n);
                return;
            }
            int need = k - static_cast<int>(cur.size());
            for (int i = next; i + need - 1 <= n; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(1);
        return out;
    }

    friend bool operator==(const SubsetK& a, const SubsetK& b) noexcept {
        return a.n_ == b.n_ && a.elems_ == b.elems_;
    }

private:
    std::vector<int> elems_;
    int n_;
};

/**
 * Subset ↔ partition correspondence between k-subsets I ⊆ {1..n} and
 * partitions μ in the k×(n−k) box:
 *     I = { μ_k + 1, μ_{k−1} + 2, ..., μ_1 + k }.
 */
inline SubsetK subset_from_partition(const Partition& mu, int k, int n) {
    if (!mu.fits_in_box(k, n - k))
        throw std::invalid_argument("subset_from_partition: partition does not fit the k×(n−k) box");
    std::vector<int> elems(static_cast<size_t>(k));
    for (int t = 1; t <= k; ++t) elems[static_cast<size_t>(t - 1)] = mu.part(k - t + 1) + t;
    return SubsetK(std::move(elems), n);
}

/// Inverse of subset_from_partition: μ_{k−t+1} = i_t − t.
inline Partition partition_from_subset(const SubsetK& I) {
    const int k = I.k();
    std::vector<int> mu(static_cast<size_t>(k));
    for (int t = 1; t <= k; ++t) mu[static_cast<size_t>(k - t)] = I.elem(t) - t;
    return Partition(std::move(mu));
}

/**
 * Complement formula: with μ the partition of I and μ′ its conjugate,
 *     I^c = { k + 1 − μ′_1, k + 2 − μ′_2, ..., n − μ′_{n−k} }.
 * Exposed (rather than derived from SubsetK::complement) so the identity can
 * be tested; both must agree.
 */
inline SubsetK complement_subset_from_partition(const Partition& mu, int k, int n) {
    if (!mu.fits_in_box(k, n - k))
        throw std::invalid_argument("complement_subset_from_partition: partition does not fit the box");
    const Partition muc = mu.conjugate();
    std::vector<int> elems(static_cast<size_t>(n - k));
    for (int t = 1; t <= n - k; ++t) elems[static_cast<size_t>(t - 1)] = k + t - muc.part(t);
    return SubsetK(std::move(elems), n);
}

/// sgn(σ(I)) = (−1)^{|μ(I)|}: the sign of the grouping permutation that moves
/// the positions of I to the front while preserving relative order.
inline int sign_sigma(const SubsetK& I) {
    return partition_from_subset(I).size() % 2 == 0 ? 1 : -1;
}

/// λ + (r^I): add r to the entries of λ at the positions in I.
inline Weight plus_r_on_subset(const Weight& lam, int r, const SubsetK& I) {
    if (I.n() != lam.n()) throw std::invalid_argument("plus_r_on_subset: size mismatch");
    std::vector<int> v = lam.parts();
    for (int i : I.elems()) v[static_cast<size_t>(i - 1)] += r;
    return Weight(std::move(v));
}

/// The two halves λ¹(I) (length k) and λ²(I) (length n−k) of λ(r,I):
///     λ(r,I)_t = r + t + λ_{i_t} − i_t   (t ≤ k, i_t ∈ I ascending),
///     λ(r,I)_t =     t + λ_{i_t} − i_t   (t > k, i_t ∈ I^c ascending).
struct LambdaSplit {
    Weight head;  ///< λ¹(I), length k
    Weight tail;  ///< λ²(I), length n−k
};

inline LambdaSplit lambda_split(const Weight& lam, const SubsetK& I) {
    if (I.n() != lam.n()) throw std::invalid_argument("lambda_split: size mismatch");
    const int n = lam.n(), k = I.k();
    std::vector<int> head(static_cast<size_t>(k)), tail(static_cast<size_t>(n - k));
    for (int t = 1; t <= k; ++t) {
        const int i = I.elem(t);
        head[static_cast<size_t>(t - 1)] = t + lam.at(i) - i;
    }
    const std::vector<int> comp = I.complement();
    for (int t = k + 1; t <= n; ++t) {
        const int i = comp[static_cast<size_t>(t - k - 1)];
        tail[static_cast<size_t>(t - k - 1)] = t + lam.at(i) - i;
    }
    return LambdaSplit{Weight(std::move(head)), Weight(std::move(tail))};
}

/// λ(r,I) assembled from the split: (λ¹(I) + (r^k)) followed by λ²(I).
/// Satisfies S_{λ+(r^I)} = sgn(σ(I))·S_{λ(r,I)}.
inline Weight lambda_rI(const Weight& lam, int r, const SubsetK& I) {
    LambdaSplit sp = lambda_split(lam, I);
    std::vector<int> v;
    v.reserve(static_cast<size_t>(lam.n()));
    for (int x : sp.head.parts()) v.push_back(x + r);
    for (int x : sp.tail.parts()) v.push_back(x);
    return Weight(std::move(v));
}

/// Binomial coefficient with the zero conventions C(x,y) = 0 for y < 0 or x < y.
inline int64_t binom(int x, int y) {
    if (y < 0 || x < y) return 0;
    if (y == 0 || y == x) return 1;
    y = std::min(y, x - y);
    int64_t r = 1;
    for (int i = 1; i <= y; ++i) r = r * (x - y + i) / i;
    return r;
}

/**
 * |P^{h,j}(a,b)|: partitions μ in the a×b box with μ_i ≡ h (mod 2) for
 * i = 1..a and μ′_i ≡ j (mod 2) for i = 1..b — trailing zeros count as slots,
 * so e.g. h = odd forces exactly a nonzero (odd) parts.
 *
 * Closed forms (floor division):
 *   |P^{0,0}(a,b)| = C(⌊a/2⌋+⌊b/2⌋, ⌊b/2⌋)
 *   |P^{0,1}(a,b)| = C(⌊(a−1)/2⌋+b/2, b/2)                (0 if b odd)
 *   |P^{1,0}(a,b)| = C(a/2+⌊(b−1)/2⌋, ⌊(b−1)/2⌋)          (0 if a odd)
 *   |P^{1,1}(a,b)| = C((a−1)/2+(b−1)/2, (b−1)/2)           (0 unless a,b odd)
 * The degenerate cases a = 0 or b = 0 are answered by direct feasibility of
 * the empty partition instead (a row of zeros is even, so e.g. P^{h,j}(a,0)
 * is nonempty iff a = 0 or h is even).
 */
inline int64_t count_Phj(Parity h, Parity j, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("count_Phj: box sides must be nonnegative");
    if (a == 0 || b == 0) {
        const bool rows_ok = (a == 0) || h == Parity::even;
        const bool cols_ok = (b == 0) || j == Parity::even;
        return (rows_ok && cols_ok) ? 1 : 0;
    }
    // a, b ≥ 1 below, so plain integer division is floor division throughout.
    if (h == Parity::even && j == Parity::even) return binom(a / 2 + b / 2, b / 2);
    if (h == Parity::even && j == Parity::odd) {
        if (b % 2 != 0) return 0;
        return binom((a - 1) / 2 + b / 2, b / 2);
    }
    if (h == Parity::odd && j == Parity::even) {
        if (a % 2 != 0) return 0;
        return binom(a / 2 + (b - 1) / 2, (b - 1) / 2);
    }
    if (a % 2 == 0 || b % 2 == 0) return 0;
    return binom((a - 1) / 2 + (b - 1) / 2, (b - 1) / 2);
}

/// Visit all dominant weights of length n with entries in [lo, hi], in
/// lexicographically descending order.
template <class F>
inline void for_each_dominant(int n, int lo, int hi, F&& f) {
    if (n < 0) throw std::invalid_argument("for_each_dominant: negative n");
    if (lo > hi) return;
    std::vector<int> cur(static_cast<size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos == n) {
            f(Weight(std::vector<int>(cur)));
            return;
        }
        for (int v = maxv; v >= lo; --v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, hi);
}

}  // namespace chargl
