#pragma once
/**
 * @file charsets.hpp
 * @brief The named families of dominant-weight sets whose indicator sums are
 *        the characters of the simple equivariant modules, together with the
 *        stratification helpers and windowed enumeration.
 *
 * All sets live inside the dominant cone of ℤⁿ (pairs of cones for the
 * general m×n space).  Boundary comparisons follow the λ_s = ±∞ conventions
 * of Weight::ge_at / Weight::le_at, so every definition below is total in s.
 *
 * Families over the symmetric space (weights of length n):
 *   C1(s): all entries ≡ s+1 (mod 2), λ_s ≥ s+1 ≥ λ_{s+2};
 *   C2(s): entries ≡ s+1 (i ≤ s) and ≡ s (i > s), λ_s ≥ s+1, λ_{s+1} ≤ s;
 *   Chj(s; h, j): Z(s) with entry parities h (i ≤ s) and j (i > s);
 *   Z(s):  λ_s ≥ s+1, λ_{s+1} ≤ s+1   (a partition of the dominant cone);
 *   Y(u):  λ_u ≥ u−1, λ_{u+1} ≤ u−1   (a second partition, shifted);
 *   Ssdet / SsdetHalf: all entries even / all entries odd.
 * Over the general m×n space (conditions on the length-n weight λ):
 *   A(s):  λ_s ≥ s+(m−n), λ_{s+1} ≤ s, with the length-m companion
 *          (λ_1−(m−n), ..., λ_s−(m−n), s, ..., s, λ_{s+1}, ..., λ_n);
 *   Sdet (m = n): all pairs (λ, λ).
 * Over the skew n×n space:
 *   B(s), 0 ≤ s ≤ ⌊n/2⌋ — see member() for the even/odd shapes;
 *   SPf (n even): all weights with λ_{2i−1} = λ_{2i} throughout.
 * E denotes the boundary character of the space (see mult_in_E).
 */

#include <optional>
#include <string>

#include "chargl/grothendieck.hpp"
#include "chargl/weights.hpp"

namespace chargl {

enum class Family { C1, C2, Chj, Z, Y, A, B, E, Sdet, Ssdet, SsdetHalf, SPf };

/// Identifier of one concrete weight set: family + space dimensions + indices.
class CharSetId {
public:
    static CharSetId c1(int n, int s) { return make(Family::C1, n, n, s, "C1"); }
    static CharSetId c2(int n, int s) { return make(Family::C2, n, n, s, "C2"); }
    static CharSetId chj(int n, int s, Parity h, Parity j) {
        CharSetId id = make(Family::Chj, n, n, s, "Chj");
        id.h_ = h;
        id.j_ = j;
        return id;
    }
    static CharSetId z(int n, int s) { return make(Family::Z, n, n, s, "Z"); }
    static CharSetId y(int n, int u) { return make(Family::Y, n, n, u, "Y"); }
    static CharSetId a(int m, int n, int s) {
        if (m < n) throw std::invalid_argument("CharSetId::a: need m >= n");
        return make(Family::A, m, n, s, "A");
    }
    static CharSetId b(int n, int s) {
        if (s < 0 || s > n / 2) throw std::invalid_argument("CharSetId::b: need 0 <= s <= n/2");
        CharSetId id(Family::B, n, n, s);
        return id;
    }
    static CharSetId e(const MatrixSpace& sp) {
        CharSetId id(Family::E, sp.m(), sp.n(), 0);
        id.kind_ = sp.kind();
        return id;
    }
    static CharSetId sdet(int n) {
        CharSetId id(Family::Sdet, n, n, 0);
        id.kind_ = SpaceKind::general;
        return id;
    }
    static CharSetId ssdet(int n) { return CharSetId(Family::Ssdet, n, n, 0); }
    static CharSetId ssdet_half(int n) { return CharSetId(Family::SsdetHalf, n, n, 0); }
    static CharSetId spf(int n) {
        if (n % 2 != 0) throw std::invalid_argument("CharSetId::spf: need even n");
        return CharSetId(Family::SPf, n, n, 0);
    }

    Family family() const noexcept { return fam_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int s() const noexcept { return s_; }
    Parity h() const noexcept { return h_; }
    Parity j() const noexcept { return j_; }
    /// Space kind for the E family (which is space-dependent).
    SpaceKind space_kind() const noexcept { return kind_; }

    std::string label() const {
        switch (fam_) {
            case Family::C1: return "C1(s=" + std::to_string(s_) + ")";
            case Family::C2: return "C2(s=" + std::to_string(s_) + ")";
            case Family::Chj:
                return "C{" + std::string(to_string(h_)) + "," + to_string(j_) + "}(s=" + std::to_string(s_) + ")";
            case Family::Z: return "Z(s=" + std::to_string(s_) + ")";
            case Family::Y: return "Y(u=" + std::to_string(s_) + ")";
            case Family::A: return "A(s=" + std::to_string(s_) + ")";
            case Family::B: return "B(s=" + std::to_string(s_) + ")";
            case Family::E: return "E";
            case Family::Sdet: return "S_det";
            case Family::Ssdet: return "S_sdet";
            case Family::SsdetHalf: return "S_sdet^(1/2)";
            default: return "S_Pf";
        }
    }

private:
    CharSetId(Family f, int m, int n, int s) : fam_(f), m_(m), n_(n), s_(s) {}
    static CharSetId make(Family f, int m, int n, int s, const char* what) {
        if (n < 1) throw std::invalid_argument(std::string("CharSetId::") + what + ": need n >= 1");
        if (s < 0 || s > n) throw std::invalid_argument(std::string("CharSetId::") + what + ": need 0 <= s <= n");
        return CharSetId(f, m, n, s);
    }
    Family fam_;
    int m_, n_, s_;
    Parity h_ = Parity::even, j_ = Parity::even;
    SpaceKind kind_ = SpaceKind::symmetric;
};

/// Membership of a dominant single weight (non-dominant weights are in no set).
inline bool member(const CharSetId& id, const Weight& lam) {
    const int n = id.n();
    if (lam.n() != n) throw std::invalid_argument("member: weight length mismatch");
    if (!lam.is_dominant()) return false;
    const int s = id.s();
    switch (id.family()) {
        case Family::C1: {
            if (!lam.ge_at(s, s + 1) || !lam.le_at(s + 2, s + 1)) return false;
            for (int i = 1; i <= n; ++i)
                if (!same_parity(lam.at(i), s + 1)) return false;
            return true;
        }
        case Family::C2: {
            if (!lam.ge_at(s, s + 1) || !lam.le_at(s + 1, s)) return false;
            for (int i = 1; i <= n; ++i)
                if (!same_parity(lam.at(i), i <= s ? s + 1 : s)) return false;
            return true;
        }
        case Family::Chj: {
            if (!lam.ge_at(s, s + 1) || !lam.le_at(s + 1, s + 1)) return false;
            for (int i = 1; i <= n; ++i)
                if (parity_of(lam.at(i)) != (i <= s ? id.h() : id.j())) return false;
            return true;
        }
        case Family::Z:
            return lam.ge_at(s, s + 1) && lam.le_at(s + 1, s + 1);
        case Family::Y:
            return lam.ge_at(s, s - 1) && lam.le_at(s + 1, s - 1);
        case Family::A:
            return lam.ge_at(s, s + id.m() - n) && lam.le_at(s + 1, s);
        case Family::B: {
            if (n % 2 == 0) {
                for (int i = 1; i <= n / 2; ++i)
                    if (lam.at(2 * i - 1) != lam.at(2 * i)) return false;
                return lam.ge_at(2 * s, 2 * s - 1) && lam.le_at(2 * s + 1, 2 * s);
            }
            // Odd n = 2m+1: s paired leading blocks, the pivot entry pinned to
            // 2s, then pairs shifted by one position.
            if (!lam.ge_at(2 * s + 1, 2 * s) || !lam.le_at(2 * s + 1, 2 * s)) return false;
            for (int i = 1; i <= s; ++i)
                if (lam.at(2 * i - 1) != lam.at(2 * i)) return false;
            for (int i = s + 1; 2 * i + 1 <= n; ++i)
                if (lam.at(2 * i) != lam.at(2 * i + 1)) return false;
            return true;
        }
        case Family::E: {
            if (id.space_kind() == SpaceKind::general)
                throw std::invalid_argument("member: E over the general space takes a weight pair");
            const MatrixSpace sp = id.space_kind() == SpaceKind::symmetric ? MatrixSpace::symmetric(n)
                                                                           : MatrixSpace::skew(n);
            return mult_in_E(lam, sp) != 0;
        }
        case Family::Ssdet: {
            for (int i = 1; i <= n; ++i)
                if (!has_parity(lam.at(i), Parity::even)) return false;
            return true;
        }
        case Family::SsdetHalf: {
            for (int i = 1; i <= n; ++i)
                if (!has_parity(lam.at(i), Parity::odd)) return false;
            return true;
        }
        case Family::SPf: {
            for (int i = 1; i <= n / 2; ++i)
                if (lam.at(2 * i - 1) != lam.at(2 * i)) return false;
            return true;
        }
        default:
            throw std::invalid_argument("member: this family takes a weight pair");
    }
}

/// Membership of a weight pair (general space families).
inline bool member(const CharSetId& id, const BiWeight& dl) {
    if (dl.first.n() != id.m() || dl.second.n() != id.n())
        throw std::invalid_argument("member: weight pair length mismatch");
    if (!dl.first.is_dominant() || !dl.second.is_dominant()) return false;
    switch (id.family()) {
        case Family::E:
            if (id.space_kind() != SpaceKind::general)
                throw std::invalid_argument("member: E over a single-weight space takes a single weight");
            return mult_in_E(dl, MatrixSpace::general(id.m(), id.n())) != 0;
        case Family::Sdet:
            return dl.first == dl.second;
        default:
            throw std::invalid_argument("member: this family takes a single weight");
    }
}

/// The unique s ∈ [0, n] with λ ∈ Z(s) (exists for every dominant weight).
inline int z_stratum(const Weight& lam) {
    int s = 0;
    for (int i = 1; i <= lam.n(); ++i)
        if (lam.at(i) >= i + 1) s = i;
    return s;
}

/// The unique u ∈ [0, n] with λ ∈ Y(u).
inline int y_stratum(const Weight& lam) {
    int u = 0;
    for (int i = 1; i <= lam.n(); ++i)
        if (lam.at(i) >= i - 1) u = i;
    return u;
}

/// The unique s ∈ [0, n] with λ ∈ A(s; m, n), when one exists.  For m = n the
/// strata cover the dominant cone; for m > n they are disjoint but can leave
/// gaps, hence the optional.
inline std::optional<int> a_stratum(const Weight& lam, int m) {
    const int n = lam.n();
    for (int s = 0; s <= n; ++s)
        if (lam.ge_at(s, s + m - n) && lam.le_at(s + 1, s)) return s;
    return std::nullopt;
}

/// The unique s ∈ [0, ⌊n/2⌋] with λ ∈ B(s), when one exists (the B-strata are
/// disjoint; every weight with the required pairing shape lies in exactly one).
inline std::optional<int> b_stratum(const Weight& lam) {
    const int n = lam.n();
    for (int s = 0; s <= n / 2; ++s)
        if (member(CharSetId::b(n, s), lam)) return s;
    return std::nullopt;
}

/// Length-m companion of λ ∈ A(s; m, n): entries 1..s lowered by m−n, then
/// m−n copies of s, then the untouched tail.  Throws if λ ∉ A(s).
inline Weight companion_A(const Weight& lam, int s, int m) {
    const int n = lam.n();
    if (!(lam.ge_at(s, s + m - n) && lam.le_at(s + 1, s)))
        throw std::invalid_argument("companion_A: weight not in the requested stratum");
    std::vector<int> v;
    v.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= s; ++i) v.push_back(lam.at(i) - (m - n));
    for (int i = 0; i < m - n; ++i) v.push_back(s);
    for (int i = s + 1; i <= n; ++i) v.push_back(lam.at(i));
    return Weight(std::move(v));
}

/// Indicator character of a single-weight family over a window: every member
/// weight with multiplicity 1, keys descending.
inline VirtualRep enumerate(const CharSetId& id, const Window& w) {
    switch (id.family()) {
        case Family::Sdet:
            throw std::invalid_argument("enumerate: pair family needs enumerate_pair");
        case Family::E:
            if (id.space_kind() == SpaceKind::general)
                throw std::invalid_argument("enumerate: pair family needs enumerate_pair");
            break;
        default:
            break;
    }
    VirtualRep out(w);
    if (!w.empty())
        for_each_dominant(id.n(), w.lo, w.hi, [&](const Weight& lam) {
            if (member(id, lam)) out.add(lam, 1);
        });
    return out;
}

/// Indicator character of a pair family (E over general, Sdet, A with its
/// companion) over a pair of windows.
inline BiVirtualRep enumerate_pair(const CharSetId& id, const BiWindow& w) {
    BiVirtualRep out(w);
    if (w.empty()) return out;
    const Window& w2 = w.second;
    switch (id.family()) {
        case Family::E: {
            if (id.space_kind() != SpaceKind::general)
                throw std::invalid_argument("enumerate_pair: single-weight family needs enumerate");
            const MatrixSpace sp = MatrixSpace::general(id.m(), id.n());
            const int mn = id.m() - id.n();
            for_each_dominant(id.n(), w2.lo, w2.hi, [&](const Weight& lam) {
                if (!lam.ge_at(id.n(), id.m())) return;
                std::vector<int> d;
                d.reserve(static_cast<size_t>(id.m()));
                for (int i = 1; i <= id.n(); ++i) d.push_back(lam.at(i) - mn);
                for (int i = id.n() + 1; i <= id.m(); ++i) d.push_back(id.n());
                const BiWeight key{Weight(std::move(d)), lam};
                if (mult_in_E(key, sp)) out.add(key, 1);
            });
            return out;
        }
        case Family::Sdet: {
            for_each_dominant(id.n(), w2.lo, w2.hi, [&](const Weight& lam) { out.add(BiWeight{lam, lam}, 1); });
            return out;
        }
        case Family::A: {
            for_each_dominant(id.n(), w2.lo, w2.hi, [&](const Weight& lam) {
                if (member(id, lam)) out.add(BiWeight{companion_A(lam, id.s(), id.m()), lam}, 1);
            });
            return out;
        }
        default:
            throw std::invalid_argument("enumerate_pair: single-weight family needs enumerate");
    }
}

/// Torus orbit demo: D_I = {e ∈ ℤ^N : e_i ≥ 0 exactly when i ∈ I}.
inline bool torus_member(const SubsetK& I, const Weight& e) {
    if (e.n() != I.n()) throw std::invalid_argument("torus_member: length mismatch");
    for (int i = 1; i <= e.n(); ++i)
        if ((e.at(i) >= 0) != I.contains(i)) return false;
    return true;
}

/// All points of D_I inside the box {−B..B}^N, descending lex.  The count is
/// always (B+1)^|I| · B^{N−|I|}.
inline std::vector<Weight> torus_enumerate(const SubsetK& I, int box) {
    if (box < 0) throw std::invalid_argument("torus_enumerate: negative box");
    const int N = I.n();
    std::vector<Weight> out;
    std::vector<int> cur(static_cast<size_t>(N));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == N) {
            out.emplace_back(cur);
            return;
        }
        const bool nonneg = I.contains(pos + 1);
        const int hi = nonneg ? box : -1;
        const int lo = nonneg ? 0 : -box;
        for (int v = hi; v >= lo; --v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace chargl
