/**
 * @file acceptance.cpp
 * @brief Framework-free acceptance gate: one pass/fail line per criterion.
 *
 * Usage: acceptance [path-to-chargl-cli]
 * The CLI path is needed only by the determinism criterion; the run fails it
 * when the path is missing.  Exit code: number of failed criteria.
 */

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "chargl/dmodchar.hpp"
#include "chargl/euler.hpp"
#include "chargl/oracle.hpp"
#include "chargl/parallel.hpp"
#include "chargl/propositions.hpp"

using namespace chargl;

namespace {

int g_jobs = 1;

/// Brute-force count of box partitions with row parity h and column parity j
/// (padded rows and conjugate columns both count).
int64_t count_phj_brute(Parity h, Parity j, int a, int b) {
    int64_t count = 0;
    for_each_partition_in_box(a, b, [&](const Partition& mu) {
        for (int i = 1; i <= a; ++i)
            if (!has_parity(mu.part(i), h)) return;
        const Partition muc = mu.conjugate();
        for (int i = 1; i <= b; ++i)
            if (!has_parity(muc.part(i), j)) return;
        ++count;
    });
    return count;
}

/// Run one CLI invocation, capturing stdout; returns {exit code, output}.
std::pair<int, std::string> run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

// ---------------------------------------------------------------------------

/// 1. Limit identity over the symmetric space: n <= 4, every k, both classes,
///    window [-10,10].
bool criterion_limits_symmetric() {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (RClass cls : {RClass::r_cong_k_plus_1, RClass::r_cong_k}) {
                const PropReport rep =
                    verify_proposition(MatrixSpace::symmetric(n), k, cls, Window{-10, 10}, g_jobs);
                if (!rep.passed() || rep.checked == 0) return false;
            }
    return true;
}

/// 2. Limit identity over the general space: six shapes, every k, [-8,8].
bool criterion_limits_general() {
    const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 2}};
    for (const auto& [m, n] : shapes)
        for (int k = 0; k <= n; ++k) {
            const PropReportPair rep = verify_proposition_pair(MatrixSpace::general(m, n), k,
                                                               BiWindow::same(Window{-8, 8}), g_jobs);
            if (!rep.passed() || rep.checked == 0) return false;
        }
    return true;
}

/// 3. Limit identity over the skew space: n <= 6, every family index, [-8,8].
bool criterion_limits_skew() {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n / 2; ++k) {
            const PropReport rep =
                verify_proposition(MatrixSpace::skew(n), k, std::nullopt, Window{-8, 8}, g_jobs);
            if (!rep.passed() || rep.checked == 0) return false;
        }
    return true;
}

/// 4. The alternating sum over twisted form spaces equals the direct
///    expansion: k <= n <= 5, r in [0,6].
bool criterion_forms_identity() {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= 6; ++r)
                if (!(pkr_from_forms(k, n, r) == pkr_direct(k, n, r))) return false;
    return true;
}

/// 5. Closed-form parity-constrained box counts match brute force:
///    a, b <= 10, all four parity pairs (484 cases).
bool criterion_box_counts() {
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= 10; ++b)
            for (Parity h : {Parity::even, Parity::odd})
                for (Parity j : {Parity::even, Parity::odd})
                    if (count_Phj(h, j, a, b) != count_phj_brute(h, j, a, b)) return false;
    return true;
}

/// 6. 200 random products against the exact rational evaluation oracle,
///    five points each, fixed seed.
bool criterion_random_products() {
    std::mt19937_64 rng(0xacce9701u);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int k = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
        const int r = static_cast<int>(rng() % 11) - 5;
        std::vector<int> v(static_cast<size_t>(n));
        std::uniform_int_distribution<int> dist(-5, 5);
        for (int& x : v) x = dist(rng);
        std::sort(v.begin(), v.end(), std::greater<int>());
        const Weight lam(v);
        VirtualRep rep(Window::all());
        rep.add(lam, 1);
        const VirtualRep expansion = tensor_pkr(rep, n, k, r);
        for (int pt = 0; pt < 5; ++pt) {
            const EvalPoint p = random_point(n, rng);
            if (pkr_eval(n, k, r, p) * schur_eval(lam, p) != vrep_eval(expansion, p)) return false;
        }
    }
    return true;
}

/// 7. Composition series of the localizations hold on windows: general
///    m = n <= 4 and symmetric n <= 4 on [-8,8]; skew n = 4 on [-9,9] and
///    n = 6 on [-6,6].
bool criterion_composition() {
    for (int n = 1; n <= 4; ++n) {
        for (const CompositionReport& rep :
             composition_report(MatrixSpace::general(n, n), Window{-8, 8}))
            if (!rep.exact) return false;
        for (const CompositionReport& rep :
             composition_report(MatrixSpace::symmetric(n), Window{-8, 8}))
            if (!rep.exact) return false;
    }
    for (const CompositionReport& rep : composition_report(MatrixSpace::skew(4), Window{-9, 9}))
        if (!rep.exact) return false;
    for (const CompositionReport& rep : composition_report(MatrixSpace::skew(6), Window{-6, 6}))
        if (!rep.exact) return false;
    return true;
}

/// 8. Stratum laws on [-10,10], n <= 5: the Z and Y families partition the
///    dominant cone at their stratum index; the square-shape A families
///    partition it; the B families partition the paired weights (even n) and
///    are pairwise disjoint (odd n).
bool criterion_partition_laws() {
    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        for_each_dominant(n, -10, 10, [&](const Weight& lam) {
            int zc = 0, yc = 0, ac = 0, bc = 0;
            for (int s = 0; s <= n; ++s) {
                if (member(CharSetId::z(n, s), lam)) {
                    ++zc;
                    if (s != z_stratum(lam)) ok = false;
                }
                if (member(CharSetId::y(n, s), lam)) {
                    ++yc;
                    if (s != y_stratum(lam)) ok = false;
                }
                if (member(CharSetId::a(n, n, s), lam)) ++ac;
            }
            for (int s = 0; s <= n / 2; ++s)
                if (member(CharSetId::b(n, s), lam)) ++bc;
            if (zc != 1 || yc != 1 || ac != 1) ok = false;
            bool paired = true;
            for (int i = 1; i + 1 <= n; i += 2) paired = paired && lam.at(i) == lam.at(i + 1);
            if (n % 2 == 0) {
                if (bc != (paired ? 1 : 0)) ok = false;
            } else {
                if (bc > 1) ok = false;
            }
        });
        if (!ok) return false;
    }
    return true;
}

/// 9. Invariant levels: the trivial-twist middle strata carry none
///    (symmetric, 1 <= s <= n-1, n <= 5, [-12,12]); every general (m = n <= 4)
///    and skew (n <= 6) simple carries at least one.
bool criterion_invariant_levels() {
    const Window w{-12, 12};
    for (int n = 2; n <= 5; ++n)
        for (int s = 1; s <= n - 1; ++s)
            if (!sl_invariant_levels(DModuleId::c(n, s, 2), w).empty()) return false;
    for (int n = 1; n <= 4; ++n)
        for (const DModuleId& id : simples_list(MatrixSpace::general(n, n)))
            if (sl_invariant_levels(id, w).empty()) return false;
    for (int n = 2; n <= 6; ++n)
        for (const DModuleId& id : simples_list(MatrixSpace::skew(n)))
            if (sl_invariant_levels(id, w).empty()) return false;
    return true;
}

/// 10. The transform permutes each catalogue (n <= 4, [-12,12]) and is an
///     involution on 500 random windowed characters.
bool criterion_fourier() {
    for (int n = 1; n <= 4; ++n) {
        if (!fourier_permutation(MatrixSpace::symmetric(n), Window{-12, 12}).bijection) return false;
        if (!fourier_permutation(MatrixSpace::general(n, n), Window{-12, 12}).bijection) return false;
        if (n >= 2 && !fourier_permutation(MatrixSpace::skew(n), Window{-12, 12}).bijection)
            return false;
    }

    std::mt19937_64 rng(0xacce9702u);
    const auto random_window = [&] {
        const int lo = static_cast<int>(rng() % 25) - 12;
        const int hi = lo + static_cast<int>(rng() % (static_cast<unsigned>(12 - lo) + 1));
        return Window{lo, hi};
    };
    const auto random_weight = [&](int n, const Window& w) {
        std::vector<int> v(static_cast<size_t>(n));
        std::uniform_int_distribution<int> dist(w.lo, w.hi);
        for (int& x : v) x = dist(rng);
        std::sort(v.begin(), v.end(), std::greater<int>());
        return Weight(v);
    };
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Window w = random_window();
        const int terms = static_cast<int>(rng() % 9);
        if (trial % 3 == 2) {
            const MatrixSpace sp = MatrixSpace::general(n, n);
            BiVirtualRep rep(BiWindow::same(w));
            for (int t = 0; t < terms; ++t)
                rep.add(BiWeight{random_weight(n, w), random_weight(n, w)},
                        1 + static_cast<int>(rng() % 3));
            if (!(fourier(fourier(rep, sp), sp) == rep)) return false;
        } else {
            const MatrixSpace sp =
                trial % 3 == 0 ? MatrixSpace::symmetric(n) : MatrixSpace::skew(n);
            VirtualRep rep(w);
            for (int t = 0; t < terms; ++t)
                rep.add(random_weight(n, w), static_cast<int>(rng() % 7) - 3);
            if (!(fourier(fourier(rep, sp), sp) == rep)) return false;
        }
    }
    return true;
}

/// 11. Exact b-function roots up to n = 10 on all three space types.
bool criterion_bfunction() {
    for (int n = 1; n <= 10; ++n) {
        std::vector<Rational> sym, gen;
        for (int i = 1; i <= n; ++i) {
            sym.emplace_back(Rational(-(1 + i), 2));
            gen.emplace_back(-i);
        }
        if (bfunction_roots(MatrixSpace::symmetric(n)) != sym) return false;
        if (bfunction_roots(MatrixSpace::general(n, n)) != gen) return false;
        if (n % 2 == 0) {
            std::vector<Rational> pf;
            for (int i = 1; i <= n / 2; ++i) pf.emplace_back(-(2 * i - 1));
            if (bfunction_roots(MatrixSpace::skew(n)) != pf) return false;
        }
    }
    return true;
}

/// 12. Torus weight enumeration: counts are (B+1)^|I| B^(N-|I|) for N <= 6,
///     B <= 3; brute membership scan agrees for N <= 4; the N = 2, B = 2
///     subset sizes are 4/6/6/9.
bool criterion_torus() {
    const auto ipow = [](int64_t base, int exp) {
        int64_t v = 1;
        for (int i = 0; i < exp; ++i) v *= base;
        return v;
    };
    for (int N = 1; N <= 6; ++N)
        for (int B = 0; B <= 3; ++B)
            for (unsigned mask = 0; mask < (1u << N); ++mask) {
                std::vector<int> elems;
                for (int i = 0; i < N; ++i)
                    if (mask & (1u << i)) elems.push_back(i + 1);
                const SubsetK I(elems, N);
                const std::vector<Weight> pts = torus_enumerate(I, B);
                const int64_t want = ipow(B + 1, I.k()) * ipow(B, N - I.k());
                if (static_cast<int64_t>(pts.size()) != want) return false;
                if (N <= 4) {
                    for (const Weight& e : pts)
                        if (!torus_member(I, e)) return false;
                    int64_t scan = 0;
                    std::vector<int> cur(static_cast<size_t>(N));
                    const std::function<void(int)> rec = [&](int pos) {
                        if (pos == N) {
                            if (torus_member(I, Weight(cur))) ++scan;
                            return;
                        }
                        for (int v = -B; v <= B; ++v) {
                            cur[static_cast<size_t>(pos)] = v;
                            rec(pos + 1);
                        }
                    };
                    rec(0);
                    if (scan != static_cast<int64_t>(pts.size())) return false;
                }
            }

    const std::vector<size_t> sizes{torus_enumerate(SubsetK({}, 2), 2).size(),
                                    torus_enumerate(SubsetK({1}, 2), 2).size(),
                                    torus_enumerate(SubsetK({2}, 2), 2).size(),
                                    torus_enumerate(SubsetK({1, 2}, 2), 2).size()};
    return sizes == std::vector<size_t>{4, 6, 6, 9};
}

/// 13. Byte-deterministic CLI output, including across --jobs 1 and --jobs 8.
bool criterion_determinism(const std::string& cli) {
    if (cli.empty()) {
        std::cerr << "  (no CLI path supplied)\n";
        return false;
    }
    const std::vector<std::pair<std::string, std::string>> runs{
        {"character --space symmetric --n 3 --s 1 --j 2 --window=-6:6",
         "character --space symmetric --n 3 --s 1 --j 2 --window=-6:6"},
        {"verify --space symmetric --n 3 --window=-6:6 --jobs 1",
         "verify --space symmetric --n 3 --window=-6:6 --jobs 8"},
        {"verify --space general --m 3 --n 2 --window=-4:4 --jobs 1",
         "verify --space general --m 3 --n 2 --window=-4:4 --jobs 8"},
        {"verify --space skew --n 4 --window=-6:6 --jobs 1",
         "verify --space skew --n 4 --window=-6:6 --jobs 8"},
        {"torus --n 2 --subset 1,2 --box 2", "torus --n 2 --subset 1,2 --box 2"}};
    for (const auto& [a, b] : runs) {
        const auto [rca, outa] = run_cli(cli, a);
        const auto [rcb, outb] = run_cli(cli, b);
        if (rca != 0 || rcb != 0 || outa.empty() || outa != outb) return false;
    }
    return true;
}

struct Criterion {
    std::string name;
    std::function<bool()> check;
    double budget_seconds;  ///< 0 = no explicit budget
};

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    g_jobs = default_jobs();

    const std::vector<Criterion> criteria{
        {"limit identity, symmetric space (n<=4, all k, both classes, [-10,10])",
         criterion_limits_symmetric, 300.0},
        {"limit identity, general space (six shapes, all k, [-8,8])", criterion_limits_general,
         600.0},
        {"limit identity, skew space (n<=6, all k, [-8,8])", criterion_limits_skew, 300.0},
        {"alternating form sums equal direct expansions (k<=n<=5, r<=6)",
         criterion_forms_identity, 0.0},
        {"parity box counts match brute force (a,b<=10, 4 parity pairs)", criterion_box_counts,
         0.0},
        {"200 random products verified by rational evaluation", criterion_random_products, 0.0},
        {"composition series of the localizations hold on windows", criterion_composition, 0.0},
        {"stratum membership laws partition the dominant cone (n<=5)", criterion_partition_laws,
         0.0},
        {"invariant levels: empty middle strata, nonempty catalogues", criterion_invariant_levels,
         0.0},
        {"transform permutes the catalogues and squares to the identity", criterion_fourier, 0.0},
        {"exact b-function roots (n<=10, three space types)", criterion_bfunction, 0.0},
        {"torus weight enumeration counts and membership scans (N<=6, B<=3)", criterion_torus,
         0.0},
        {"byte-deterministic CLI output across repeated runs and --jobs 1/8",
         [&] { return criterion_determinism(cli); }, 0.0},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].check();
        } catch (const std::exception& e) {
            std::cerr << "  exception: " << e.what() << '\n';
            ok = false;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_seconds > 0 && secs > criteria[i].budget_seconds) ok = false;
        if (!ok) ++failures;
        std::printf("%s %2zu %s (%.1fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
