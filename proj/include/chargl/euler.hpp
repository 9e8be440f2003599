#pragma once
/**
 * @file euler.hpp
 * @brief Euler characteristics on the Grassmannian and the windowed
 *        pushforward character of the form bundles.
 *
 * On Gr(k, n) with tautological sub/quotient ranks (n−k, k), every
 * χ(S_α𝒬 ⊗ S_β𝓡) is a single straightening of the concatenated weight.
 * The twisted form bundles Ω^i(r) expand into such terms by partitions in
 * the k×(n−k) box, and their alternating sum recovers the degree-k form
 * character p_{k,r} = Σ_{|I|=k} S_{(r^I)} — an identity the test suite pins
 * exactly.  The windowed pushforward character is the stable limit
 * multiplicity taken weight by weight, with the sign of the relative
 * dimension in front.
 */

#include <optional>

#include "chargl/grothendieck.hpp"
#include "chargl/parallel.hpp"
#include "chargl/weights.hpp"

namespace chargl {

/// χ(Gr(k,n), S_α𝒬 ⊗ S_β𝓡) with |α| = k, |β| = n−k: straighten (α, β).
inline StraightenResult bott_chi(const Weight& alpha, const Weight& beta) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(alpha.n() + beta.n()));
    for (int x : alpha.parts()) v.push_back(x);
    for (int x : beta.parts()) v.push_back(x);
    return straighten(Weight(std::move(v)));
}

/**
 * χ(Ω^i(r)) on Gr(k,n) as a virtual GL(n) character:
 *   Σ over μ in the k×(n−k) box with |μ| = i of the straightening of
 *   (r−μ_k, ..., r−μ_1, μ′_1, ..., μ′_{n−k}).
 */
inline VirtualRep chi_forms(int k, int n, int r, int i) {
    if (k < 0 || k > n) throw std::invalid_argument("chi_forms: need 0 <= k <= n");
    VirtualRep out(Window::all());
    for_each_partition_in_box(k, n - k, [&](const Partition& mu) {
        if (mu.size() != i) return;
        std::vector<int> v;
        v.reserve(static_cast<size_t>(n));
        for (int t = k; t >= 1; --t) v.push_back(r - mu.part(t));
        const Partition muc = mu.conjugate();
        for (int t = 1; t <= n - k; ++t) v.push_back(muc.part(t));
        const StraightenResult s = straighten(Weight(std::move(v)));
        if (!s.is_zero()) out.add(s.weight(), s.sign());
    });
    return hulled(out);
}

/// p_{k,r} as the alternating sum Σ_i (−1)^i χ(Ω^i(r)), window tightened to
/// the support hull.
inline VirtualRep pkr_from_forms(int k, int n, int r) {
    if (k < 0 || k > n) throw std::invalid_argument("pkr_from_forms: need 0 <= k <= n");
    VirtualRep out(Window::all());
    for (int i = 0; i <= k * (n - k); ++i) {
        const VirtualRep chi = chi_forms(k, n, r, i);
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [key, c] : chi.terms()) out.add(key, sign * c);
    }
    return hulled(out);
}

/// p_{k,r} by its definition: straighten S_{(r^I)} over all k-subsets.
inline VirtualRep pkr_direct(int k, int n, int r) {
    if (k < 0 || k > n) throw std::invalid_argument("pkr_direct: need 0 <= k <= n");
    VirtualRep out(Window::all());
    for (const SubsetK& I : SubsetK::all(n, k)) {
        const StraightenResult s = straighten(plus_r_on_subset(Weight::zero(n), r, I));
        if (!s.is_zero()) out.add(s.weight(), s.sign());
    }
    return hulled(out);
}

/// Which twist limit a pushforward takes: the two parity classes of the
/// symmetric space, or the single unconstrained limit of the other spaces.
enum class PushVariant { m0, m1, plain };

inline const char* to_string(PushVariant v) noexcept {
    switch (v) {
        case PushVariant::m0: return "m0";
        case PushVariant::m1: return "m1";
        default: return "plain";
    }
}

/**
 * Windowed pushforward character over a single-weight space.
 *
 * Symmetric n×n, subset size k, sign (−1)^{k(n−k)}; variant m0 takes the
 * r ≡ k+1 limit and m1 the r ≡ k limit.  Skew n×n uses subset size 2k, no
 * parity class, and sign +1; only the plain variant is meaningful there.
 */
inline VirtualRep pushforward_euler(const MatrixSpace& sp, int k, PushVariant variant, const Window& w,
                                    int jobs = 1) {
    if (sp.is_pair()) throw std::invalid_argument("pushforward_euler: pair space needs the pair overload");
    const int n = sp.n();
    if (k < 0 || k > n) throw std::invalid_argument("pushforward_euler: need 0 <= k <= n");
    int kk = k, sign = 1;
    std::optional<RClass> cls;
    if (sp.kind() == SpaceKind::symmetric) {
        if (variant == PushVariant::plain)
            throw std::invalid_argument("pushforward_euler: symmetric space needs variant m0 or m1");
        cls = (variant == PushVariant::m0) ? RClass::r_cong_k_plus_1 : RClass::r_cong_k;
        sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
    } else {
        if (variant != PushVariant::plain)
            throw std::invalid_argument("pushforward_euler: skew space takes the plain variant");
        kk = 2 * k;
        if (kk > n) throw std::invalid_argument("pushforward_euler: need 2k <= n on the skew space");
    }
    std::vector<Weight> keys;
    if (!w.empty()) for_each_dominant(n, w.lo, w.hi, [&](const Weight& lam) { keys.push_back(lam); });
    const std::vector<int64_t> vals = parallel_map_ordered(
        keys, [&](const Weight& lam) { return limit_mult(lam, kk, cls, sp); }, jobs);
    VirtualRep out(w);
    for (size_t i = 0; i < keys.size(); ++i) out.add(keys[i], sign * vals[i]);
    return out;
}

/// Pair-space pushforward: keys (δ, λ) over the pair window, subset size k on
/// both factors, sign (−1)^{k(m−n)}.
inline BiVirtualRep pushforward_euler_pair(const MatrixSpace& sp, int k, const BiWindow& w, int jobs = 1) {
    if (!sp.is_pair()) throw std::invalid_argument("pushforward_euler_pair: single-weight space");
    const int m = sp.m(), n = sp.n();
    if (k < 0 || k > n) throw std::invalid_argument("pushforward_euler_pair: need 0 <= k <= n");
    const int sign = (k * (m - n)) % 2 == 0 ? 1 : -1;
    std::vector<BiWeight> keys;
    if (!w.empty())
        for_each_dominant(m, w.first.lo, w.first.hi, [&](const Weight& d) {
            for_each_dominant(n, w.second.lo, w.second.hi,
                              [&](const Weight& lam) { keys.push_back(BiWeight{d, lam}); });
        });
    const std::vector<int64_t> vals = parallel_map_ordered(
        keys, [&](const BiWeight& dl) { return limit_mult(dl, k, std::nullopt, sp); }, jobs);
    BiVirtualRep out(w);
    for (size_t i = 0; i < keys.size(); ++i) out.add(keys[i], sign * vals[i]);
    return out;
}

}  // namespace chargl
