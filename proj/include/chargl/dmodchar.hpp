#pragma once
/**
 * @file dmodchar.hpp
 * @brief The catalogue of simple equivariant modules on each matrix space:
 *        identifiers, characters, orbit data, composition series of the
 *        localizations, the Fourier permutation, invariant levels, and the
 *        b-function roots of the semi-invariants.
 *
 * Simples are indexed by the orbit stratification:
 *   symmetric n×n:  C(s, j) with 0 ≤ s ≤ n and j ∈ {1, 2} — the two local
 *                   systems on the rank-(n−s) orbit; at s = n they coincide
 *                   and the catalogue keeps the j = 1 copy;
 *   general m×n:    A(s), 0 ≤ s ≤ n, supported on the rank-(n−s) locus;
 *   skew n×n:       B(s), 0 ≤ s ≤ ⌊n/2⌋, supported on rank ≤ 2(⌊n/2⌋−s).
 * Every simple character is the indicator sum of its weight set (all
 * multiplicities 1), which is what makes the identities below decidable per
 * window.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chargl/charsets.hpp"
#include "chargl/grothendieck.hpp"
#include "chargl/oracle.hpp"
#include "chargl/weights.hpp"

namespace chargl {

enum class SimpleFamily { A, B, C };

/// Identifier of one simple equivariant module.
class DModuleId {
public:
    /// Symmetric space: C(s, j), j ∈ {1, 2}; (s = n, j = 2) names the same
    /// module as (s = n, j = 1) and is canonicalized to it.
    static DModuleId c(int n, int s, int j) {
        if (n < 1 || s < 0 || s > n) throw std::invalid_argument("DModuleId::c: need 0 <= s <= n");
        if (j != 1 && j != 2) throw std::invalid_argument("DModuleId::c: need j in {1,2}");
        if (s == n && j == 2) j = 1;
        DModuleId id(SimpleFamily::C, n, n, s);
        id.j_ = j;
        return id;
    }
    static DModuleId a(int m, int n, int s) {
        if (n < 1 || m < n || s < 0 || s > n)
            throw std::invalid_argument("DModuleId::a: need m >= n >= 1, 0 <= s <= n");
        return DModuleId(SimpleFamily::A, m, n, s);
    }
    static DModuleId b(int n, int s) {
        if (n < 1 || s < 0 || s > n / 2) throw std::invalid_argument("DModuleId::b: need 0 <= s <= n/2");
        return DModuleId(SimpleFamily::B, n, n, s);
    }

    SimpleFamily family() const noexcept { return fam_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int s() const noexcept { return s_; }
    /// Local-system index over the symmetric space (1 or 2); 0 elsewhere.
    int j() const noexcept { return j_; }

    MatrixSpace space() const {
        switch (fam_) {
            case SimpleFamily::A: return MatrixSpace::general(m_, n_);
            case SimpleFamily::B: return MatrixSpace::skew(n_);
            default: return MatrixSpace::symmetric(n_);
        }
    }

    /// The underlying weight set.
    CharSetId weight_set() const {
        switch (fam_) {
            case SimpleFamily::A: return CharSetId::a(m_, n_, s_);
            case SimpleFamily::B: return CharSetId::b(n_, s_);
            default: return j_ == 1 ? CharSetId::c1(n_, s_) : CharSetId::c2(n_, s_);
        }
    }

    std::string label() const {
        switch (fam_) {
            case SimpleFamily::A: return "A(s=" + std::to_string(s_) + ")";
            case SimpleFamily::B: return "B(s=" + std::to_string(s_) + ")";
            default: return "C(s=" + std::to_string(s_) + ",j=" + std::to_string(j_) + ")";
        }
    }

    friend bool operator==(const DModuleId& a, const DModuleId& b) noexcept {
        return a.fam_ == b.fam_ && a.m_ == b.m_ && a.n_ == b.n_ && a.s_ == b.s_ && a.j_ == b.j_;
    }

private:
    DModuleId(SimpleFamily f, int m, int n, int s) : fam_(f), m_(m), n_(n), s_(s) {}
    SimpleFamily fam_;
    int m_, n_, s_;
    int j_ = 0;
};

/// Orbit support and local-system summary of one simple.
struct SimpleInfo {
    std::string label;
    int support_rank;     ///< matrix rank on the dense orbit of the support
    int support_codim;    ///< codimension of that orbit in the space
    std::string local_system;
};

inline SimpleInfo describe(const DModuleId& id) {
    SimpleInfo info;
    info.label = id.label();
    const int s = id.s();
    switch (id.family()) {
        case SimpleFamily::C:
            info.support_rank = id.n() - s;
            info.support_codim = s * (s + 1) / 2;
            info.local_system = id.j() == 2 ? "trivial" : "square-root twist";
            break;
        case SimpleFamily::A:
            info.support_rank = id.n() - s;
            info.support_codim = (id.m() - id.n() + s) * s;
            info.local_system = "trivial";
            break;
        default: {
            const int mm = id.n() / 2;
            info.support_rank = 2 * (mm - s);
            const int c = id.n() % 2 == 0 ? 2 * s : 2 * s + 1;
            info.support_codim = static_cast<int>(binom(c, 2));
            info.local_system = "trivial";
            break;
        }
    }
    return info;
}

/// All simples of the space, in stratum order (symmetric: j = 1 for every s,
/// then j = 2 for s < n).
inline std::vector<DModuleId> simples_list(const MatrixSpace& sp) {
    std::vector<DModuleId> out;
    switch (sp.kind()) {
        case SpaceKind::symmetric:
            for (int s = 0; s <= sp.n(); ++s) out.push_back(DModuleId::c(sp.n(), s, 1));
            for (int s = 0; s < sp.n(); ++s) out.push_back(DModuleId::c(sp.n(), s, 2));
            break;
        case SpaceKind::general:
            for (int s = 0; s <= sp.n(); ++s) out.push_back(DModuleId::a(sp.m(), sp.n(), s));
            break;
        default:
            for (int s = 0; s <= sp.n() / 2; ++s) out.push_back(DModuleId::b(sp.n(), s));
            break;
    }
    return out;
}

/// Windowed character of a simple over a single-weight space.
inline VirtualRep character(const DModuleId& id, const Window& w) {
    if (id.family() == SimpleFamily::A) throw std::invalid_argument("character: pair space needs character_pair");
    return enumerate(id.weight_set(), w);
}

/// Windowed character of a simple over the general space.
inline BiVirtualRep character_pair(const DModuleId& id, const BiWindow& w) {
    if (id.family() != SimpleFamily::A)
        throw std::invalid_argument("character_pair: single-weight space needs character");
    return enumerate_pair(id.weight_set(), w);
}

/// One row of a composition series: a simple and its multiplicity.
struct CompositionTerm {
    DModuleId id;
    int64_t multiplicity;
};

/// Decomposition of one localization character into simples over a window.
struct CompositionReport {
    std::string target;                  ///< label of the decomposed character
    std::vector<CompositionTerm> terms;
    int64_t checked = 0;                 ///< weights compared
    bool exact = false;                  ///< equality held on the whole window
};

namespace detail {

inline CompositionReport check_single(const std::string& target, const CharSetId& big,
                                      const std::vector<DModuleId>& parts, const Window& w) {
    CompositionReport rep;
    rep.target = target;
    VirtualRep sum(w);
    for (const DModuleId& id : parts) {
        rep.terms.push_back(CompositionTerm{id, 1});
        sum = add(sum, character(id, w));
    }
    const VirtualRep whole = enumerate(big, w);
    rep.checked = 0;
    if (!w.empty())
        for_each_dominant(big.n(), w.lo, w.hi, [&](const Weight&) { ++rep.checked; });
    rep.exact = (sum == whole);
    return rep;
}

}  // namespace detail

/**
 * Composition series of the localization characters, verified weight by
 * weight on the window:
 *   symmetric: the even character splits as C(0,2) + Σ_{s odd} C(s,1), the
 *              odd character as Σ_{s even} C(s,1);
 *   general m = n: the graded localization splits as Σ_s A(s);
 *   skew even n: the Pfaffian localization splits as Σ_s B(s).
 */
inline std::vector<CompositionReport> composition_report(const MatrixSpace& sp, const Window& w) {
    std::vector<CompositionReport> out;
    const int n = sp.n();
    switch (sp.kind()) {
        case SpaceKind::symmetric: {
            std::vector<DModuleId> even_parts{DModuleId::c(n, 0, 2)};
            std::vector<DModuleId> odd_parts;
            for (int s = 1; s <= n; s += 2) even_parts.push_back(DModuleId::c(n, s, 1));
            for (int s = 0; s <= n; s += 2) odd_parts.push_back(DModuleId::c(n, s, 1));
            out.push_back(detail::check_single("S_sdet", CharSetId::ssdet(n), even_parts, w));
            out.push_back(detail::check_single("S_sdet^(1/2)", CharSetId::ssdet_half(n), odd_parts, w));
            return out;
        }
        case SpaceKind::skew: {
            if (n % 2 != 0)
                throw std::invalid_argument("composition_report: skew space needs even n");
            std::vector<DModuleId> parts;
            for (int s = 0; s <= n / 2; ++s) parts.push_back(DModuleId::b(n, s));
            out.push_back(detail::check_single("S_Pf", CharSetId::spf(n), parts, w));
            return out;
        }
        default: {
            if (sp.m() != sp.n())
                throw std::invalid_argument("composition_report: general space needs m = n");
            CompositionReport rep;
            rep.target = "S_det";
            BiVirtualRep sum(BiWindow::same(w));
            for (int s = 0; s <= n; ++s) {
                const DModuleId id = DModuleId::a(n, n, s);
                rep.terms.push_back(CompositionTerm{id, 1});
                sum = add(sum, character_pair(id, BiWindow::same(w)));
            }
            const BiVirtualRep whole = enumerate_pair(CharSetId::sdet(n), BiWindow::same(w));
            rep.checked = 0;
            if (!w.empty()) for_each_dominant(n, w.lo, w.hi, [&](const Weight&) { ++rep.checked; });
            rep.exact = (sum == whole);
            out.push_back(std::move(rep));
            return out;
        }
    }
}

/// The observed Fourier image of one simple, plus candidate index laws.
struct FourierReport {
    SpaceKind kind = SpaceKind::symmetric;
    int m = 0, n = 0;
    Window window{};
    /// label of each simple → label of the simple its transform matches
    /// ("?" when no catalogue entry matches on the window).
    std::vector<std::pair<std::string, std::string>> mapping;
    bool bijection = false;
    /// Human-readable candidate index laws with their observed consistency.
    std::vector<std::pair<std::string, bool>> laws;
};

/**
 * Compute the Fourier transform of every simple character over the window
 * and match it against the catalogue.  The mapping is determined empirically
 * (set equality of windowed characters); the named index laws are then each
 * scored against it.
 */
inline FourierReport fourier_permutation(const MatrixSpace& sp, const Window& w, int /*jobs*/ = 1) {
    FourierReport rep;
    rep.kind = sp.kind();
    rep.m = sp.m();
    rep.n = sp.n();
    rep.window = w;
    const std::vector<DModuleId> simples = simples_list(sp);
    std::vector<std::string> images;

    const auto match_label = [&](const DModuleId& from) -> std::string {
        if (sp.is_pair()) {
            const BiVirtualRep f = fourier(character_pair(from, BiWindow::same(w)), sp);
            for (const DModuleId& cand : simples)
                if (character_pair(cand, f.window()) == f) return cand.label();
            return "?";
        }
        const VirtualRep f = fourier(character(from, w), sp);
        for (const DModuleId& cand : simples)
            if (character(cand, f.window()) == f) return cand.label();
        return "?";
    };

    for (const DModuleId& id : simples) {
        const std::string to = match_label(id);
        rep.mapping.emplace_back(id.label(), to);
        images.push_back(to);
    }
    std::sort(images.begin(), images.end());
    rep.bijection = std::unique(images.begin(), images.end()) == images.end() &&
                    !std::binary_search(images.begin(), images.end(), std::string("?"));

    // Score a candidate law: expected(from) must equal the observed image for
    // every simple where the law makes a prediction.
    const auto score = [&](auto&& expected) {
        for (size_t i = 0; i < simples.size(); ++i) {
            const std::optional<DModuleId> want = expected(simples[i]);
            if (want && want->label() != rep.mapping[i].second) return false;
        }
        return true;
    };
    const int n = sp.n();
    switch (sp.kind()) {
        case SpaceKind::symmetric: {
            rep.laws.emplace_back("C(s,1)<->C(n-1-s,1), C(s,2)<->C(n-s,2)",
                                  score([&](const DModuleId& id) -> std::optional<DModuleId> {
                                      if (id.j() == 1 && id.s() < n) return DModuleId::c(n, n - 1 - id.s(), 1);
                                      if (id.j() == 1 && id.s() == n) return DModuleId::c(n, 0, 2);
                                      return DModuleId::c(n, n - id.s(), 2);
                                  }));
            rep.laws.emplace_back("C(s,1)<->C(n-s,1), C(s,2)<->C(n-1-s,2)",
                                  score([&](const DModuleId& id) -> std::optional<DModuleId> {
                                      if (id.j() == 1) return DModuleId::c(n, n - id.s(), 1);
                                      return DModuleId::c(n, n - 1 - id.s(), 2);
                                  }));
            break;
        }
        case SpaceKind::general:
            rep.laws.emplace_back("A(s)<->A(n-s)", score([&](const DModuleId& id) -> std::optional<DModuleId> {
                                      return DModuleId::a(sp.m(), n, n - id.s());
                                  }));
            break;
        default:
            rep.laws.emplace_back("B(s)<->B(n/2-s)", score([&](const DModuleId& id) -> std::optional<DModuleId> {
                                      return DModuleId::b(n, n / 2 - id.s());
                                  }));
            break;
    }
    return rep;
}

/**
 * Roots of the b-function of the defining semi-invariant:
 *   symmetric n×n (determinant): −(1+i)/2 for i = 1..n;
 *   general n×n (determinant):   −i for i = 1..n;
 *   skew 2m×2m (Pfaffian):       −(2i−1) for i = 1..m.
 */
inline std::vector<Rational> bfunction_roots(const MatrixSpace& sp) {
    std::vector<Rational> roots;
    switch (sp.kind()) {
        case SpaceKind::symmetric:
            for (int i = 1; i <= sp.n(); ++i) roots.emplace_back(Rational(-(1 + i), 2));
            break;
        case SpaceKind::general:
            if (sp.m() != sp.n())
                throw std::invalid_argument("bfunction_roots: general space needs m = n");
            for (int i = 1; i <= sp.n(); ++i) roots.emplace_back(-i);
            break;
        default:
            if (sp.n() % 2 != 0)
                throw std::invalid_argument("bfunction_roots: skew space needs even n");
            for (int i = 1; i <= sp.n() / 2; ++i) roots.emplace_back(-(2 * i - 1));
            break;
    }
    return roots;
}

/**
 * Levels c in the window whose determinantal power weight lies in the simple's
 * weight set: the constant weight (c,...,c) (paired with itself over the
 * general space).  Ascending.
 */
inline std::vector<int> sl_invariant_levels(const DModuleId& id, const Window& w) {
    std::vector<int> out;
    if (w.empty()) return out;
    const CharSetId set = id.weight_set();
    for (int c = w.lo; c <= w.hi; ++c) {
        if (id.family() == SimpleFamily::A) {
            const Weight lam = Weight::constant(id.n(), c);
            if (member(set, lam) && Weight::constant(id.m(), c) == companion_A(lam, id.s(), id.m()))
                out.push_back(c);
        } else {
            if (member(set, Weight::constant(id.n(), c))) out.push_back(c);
        }
    }
    return out;
}

}  // namespace chargl
