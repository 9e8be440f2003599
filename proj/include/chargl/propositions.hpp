#pragma once
/**
 * @file propositions.hpp
 * @brief Closed-form right-hand sides for the pushforward characters, and
 *        drivers that verify them against the stable-limit left-hand sides
 *        weight by weight over a window.
 *
 * The content being checked: the coefficient of S_λ in the pushforward
 * character equals a signed parity-box count read off the stratum of λ.
 *
 *  - Symmetric n×n, subset size k, parity class j ∈ {even, odd} (the class of
 *    r − k − 1): with s the Z-stratum of λ, the coefficient vanishes unless
 *    s ≥ n−k, the tail entries λ_{s+1..n} all have parity j, and the head
 *    entries λ_{1..s} share one parity h; then it is
 *        (−1)^{(n−k)·h} · |P^{h′,j′}(s−(n−k), n−k)|
 *    with h′ ≡ n−k+j−h and j′ ≡ s+1−h (mod 2), and h := j when s = 0.
 *  - General m×n, subset size k on both factors: nonzero only on the pairs
 *    (companion(λ), λ) with λ in an A-stratum s ≥ n−k, where it equals
 *    (−1)^{(m−n)(n−k−s)} · C(s, s−(n−k)).
 *  - Skew n×n, family parameter k (subset size 2k), m = ⌊n/2⌋: nonzero only
 *    on the B-strata, value C(s, m−k).
 */

#include <optional>
#include <tuple>
#include <vector>

#include "chargl/charsets.hpp"
#include "chargl/euler.hpp"
#include "chargl/grothendieck.hpp"
#include "chargl/parallel.hpp"
#include "chargl/weights.hpp"

namespace chargl {

/// Parity index j of the twist class: r ≡ k+1+j (mod 2).
inline Parity rclass_parity(RClass cls) noexcept {
    return cls == RClass::r_cong_k_plus_1 ? Parity::even : Parity::odd;
}

/// Closed-form coefficient over the symmetric space (see file header).
inline int64_t rhs_mult(const Weight& lam, int k, Parity j, const MatrixSpace& sp) {
    if (sp.kind() != SpaceKind::symmetric) throw std::invalid_argument("rhs_mult: symmetric space expected");
    const int n = sp.n();
    if (lam.n() != n) throw std::invalid_argument("rhs_mult: weight length mismatch");
    if (k < 0 || k > n) throw std::invalid_argument("rhs_mult: need 0 <= k <= n");
    const int s = z_stratum(lam);
    if (s < n - k) return 0;
    const int jj = static_cast<int>(j);
    for (int i = s + 1; i <= n; ++i)
        if (!same_parity(lam.at(i), jj)) return 0;
    int h = jj;
    if (s >= 1) {
        h = static_cast<int>(parity_of(lam.at(1)));
        for (int i = 2; i <= s; ++i)
            if (!same_parity(lam.at(i), lam.at(1))) return 0;
    }
    const int sign = ((n - k) * h) % 2 == 0 ? 1 : -1;
    return sign * count_Phj(parity_of(n - k + jj - h), parity_of(s + 1 - h), s - (n - k), n - k);
}

/// Closed-form coefficient over the general space.
inline int64_t rhs_mult(const BiWeight& dl, int k, const MatrixSpace& sp) {
    if (sp.kind() != SpaceKind::general) throw std::invalid_argument("rhs_mult: general space expected");
    const int m = sp.m(), n = sp.n();
    if (dl.first.n() != m || dl.second.n() != n) throw std::invalid_argument("rhs_mult: pair length mismatch");
    if (k < 0 || k > n) throw std::invalid_argument("rhs_mult: need 0 <= k <= n");
    const std::optional<int> s = a_stratum(dl.second, m);
    if (!s || *s < n - k) return 0;
    if (dl.first != companion_A(dl.second, *s, m)) return 0;
    const int sign = ((m - n) * (n - k - *s)) % 2 == 0 ? 1 : -1;
    return sign * binom(*s, *s - (n - k));
}

/// Closed-form coefficient over the skew space (family parameter k ≤ ⌊n/2⌋).
inline int64_t rhs_mult_skew(const Weight& lam, int k, const MatrixSpace& sp) {
    if (sp.kind() != SpaceKind::skew) throw std::invalid_argument("rhs_mult_skew: skew space expected");
    const int n = sp.n();
    if (lam.n() != n) throw std::invalid_argument("rhs_mult_skew: weight length mismatch");
    const int m = n / 2;
    if (k < 0 || k > m) throw std::invalid_argument("rhs_mult_skew: need 0 <= k <= n/2");
    const std::optional<int> s = b_stratum(lam);
    if (!s) return 0;
    return binom(*s, m - k);
}

/// One disagreement between the two sides: key, limit value, closed form.
template <class Key>
using PropMismatch = std::tuple<Key, int64_t, int64_t>;

/// Outcome of one verification sweep.
template <class Key>
struct BasicPropReport {
    using window_type = typename rep_traits<Key>::window_type;
    SpaceKind kind = SpaceKind::symmetric;
    int m = 0, n = 0, k = 0;
    std::optional<RClass> cls;
    window_type window{};
    int64_t checked = 0;
    std::vector<PropMismatch<Key>> mismatches;
    bool passed() const noexcept { return mismatches.empty(); }
};

using PropReport = BasicPropReport<Weight>;
using PropReportPair = BasicPropReport<BiWeight>;

/**
 * Compare limit and closed form at every dominant weight of the window.
 * Symmetric spaces require a parity class; skew spaces take cls = nullopt
 * and interpret k as the family parameter (subset size 2k).
 */
inline PropReport verify_proposition(const MatrixSpace& sp, int k, std::optional<RClass> cls, const Window& w,
                                     int jobs = 1) {
    if (sp.is_pair()) throw std::invalid_argument("verify_proposition: pair space needs the pair driver");
    PropReport rep;
    rep.kind = sp.kind();
    rep.m = sp.m();
    rep.n = sp.n();
    rep.k = k;
    rep.cls = cls;
    rep.window = w;
    const bool symmetric = sp.kind() == SpaceKind::symmetric;
    if (symmetric && !cls) throw std::invalid_argument("verify_proposition: symmetric space requires a class");
    if (!symmetric && cls) throw std::invalid_argument("verify_proposition: skew space takes no class");
    const int n = sp.n();
    const int kk = symmetric ? k : 2 * k;
    const int sign = symmetric && (k * (n - k)) % 2 != 0 ? -1 : 1;
    std::vector<Weight> keys;
    if (!w.empty()) for_each_dominant(n, w.lo, w.hi, [&](const Weight& lam) { keys.push_back(lam); });
    const auto sides = parallel_map_ordered(
        keys,
        [&](const Weight& lam) {
            const int64_t lhs = sign * limit_mult(lam, kk, cls, sp);
            const int64_t rhs = symmetric ? rhs_mult(lam, k, rclass_parity(*cls), sp) : rhs_mult_skew(lam, k, sp);
            return std::pair<int64_t, int64_t>{lhs, rhs};
        },
        jobs);
    rep.checked = static_cast<int64_t>(keys.size());
    for (size_t i = 0; i < keys.size(); ++i)
        if (sides[i].first != sides[i].second)
            rep.mismatches.emplace_back(keys[i], sides[i].first, sides[i].second);
    return rep;
}

/// Pair-space driver: every dominant pair of the window.
inline PropReportPair verify_proposition_pair(const MatrixSpace& sp, int k, const BiWindow& w, int jobs = 1) {
    if (!sp.is_pair()) throw std::invalid_argument("verify_proposition_pair: single-weight space");
    PropReportPair rep;
    rep.kind = sp.kind();
    rep.m = sp.m();
    rep.n = sp.n();
    rep.k = k;
    rep.window = w;
    const int m = sp.m(), n = sp.n();
    const int sign = (k * (m - n)) % 2 == 0 ? 1 : -1;
    std::vector<BiWeight> keys;
    if (!w.empty())
        for_each_dominant(m, w.first.lo, w.first.hi, [&](const Weight& d) {
            for_each_dominant(n, w.second.lo, w.second.hi,
                              [&](const Weight& lam) { keys.push_back(BiWeight{d, lam}); });
        });
    const auto sides = parallel_map_ordered(
        keys,
        [&](const BiWeight& dl) {
            const int64_t lhs = sign * limit_mult(dl, k, std::nullopt, sp);
            const int64_t rhs = rhs_mult(dl, k, sp);
            return std::pair<int64_t, int64_t>{lhs, rhs};
        },
        jobs);
    rep.checked = static_cast<int64_t>(keys.size());
    for (size_t i = 0; i < keys.size(); ++i)
        if (sides[i].first != sides[i].second)
            rep.mismatches.emplace_back(keys[i], sides[i].first, sides[i].second);
    return rep;
}

/**
 * The contributing subsets behind the symmetric closed form: given a dominant
 * λ of length n and subset size kk, the subsets I whose split satisfies
 *   head entries λ¹(I)_t ≡ n + kk + j (mod 2),
 *   tail entries λ²(I)_t ≡ n + 1 (mod 2) with the last one ≥ n+1.
 * For suitable λ these are counted by a parity box; their signs are constant.
 */
inline std::vector<SubsetK> enumerate_P_lambda(const Weight& lam, int kk, Parity j) {
    const int n = lam.n();
    std::vector<SubsetK> out;
    for (const SubsetK& I : SubsetK::all(n, kk)) {
        const LambdaSplit sp = lambda_split(lam, I);
        bool ok = true;
        for (int t = 1; t <= kk && ok; ++t)
            if (!same_parity(sp.head.at(t), n + kk + static_cast<int>(j))) ok = false;
        for (int t = 1; t <= n - kk && ok; ++t)
            if (!same_parity(sp.tail.at(t), n + 1)) ok = false;
        if (ok && kk < n && !(sp.tail.at(n - kk) >= n + 1)) ok = false;
        if (ok) out.push_back(I);
    }
    return out;
}

/**
 * The box partitions contributing in the skew case (subset size 2k < n,
 * m = ⌊n/2⌋): μ in the 2k×(n−2k) box with every column even, the last column
 * exactly 2m−2s, and the rows below index 2m−2s even.
 */
inline std::vector<Partition> enumerate_B_box(int kk, int n, int s) {
    if (kk % 2 != 0 || kk >= n) throw std::invalid_argument("enumerate_B_box: need even subset size < n");
    const int m = n / 2;
    std::vector<Partition> out;
    for_each_partition_in_box(kk, n - kk, [&](const Partition& mu) {
        const Partition muc = mu.conjugate();
        for (int i = 1; i <= n - kk; ++i)
            if (muc.part(i) % 2 != 0) return;
        if (muc.part(n - kk) != 2 * m - 2 * s) return;
        for (int i = 2 * m - 2 * s + 1; i <= kk; ++i)
            if (mu.part(i) % 2 != 0) return;
        out.push_back(mu);
    });
    return out;
}

}  // namespace chargl
