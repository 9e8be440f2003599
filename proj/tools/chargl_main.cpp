/**
 * @file chargl_main.cpp
 * @brief Command-line driver: windowed characters, identity verification,
 *        Fourier permutation tables, b-function roots, single limits, and
 *        torus weight enumeration.
 *
 * Exit codes: 0 success, 2 invalid parameters, 3 a verified identity failed,
 * 4 a limit failed to stabilize.
 */

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chargl/dmodchar.hpp"
#include "chargl/euler.hpp"
#include "chargl/propositions.hpp"
#include "chargl/report.hpp"

namespace {

using namespace chargl;

/// Options whose values may begin with '-' (windows, weights); fuse
/// "--opt value" into "--opt=value" so the parser does not read the value as
/// an option name.
std::vector<std::string> fuse_negative_values(int argc, char** argv) {
    static const std::vector<std::string> fused = {"--window", "--weight", "--delta", "--r"};
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(argc));
    for (int i = 0; i < argc; ++i) {
        std::string arg = argv[i];
        if (i + 1 < argc && std::find(fused.begin(), fused.end(), arg) != fused.end()) {
            out.push_back(arg + "=" + argv[i + 1]);
            ++i;
        } else {
            out.push_back(std::move(arg));
        }
    }
    return out;
}

struct Options {
    std::string space;
    std::string window;
    std::string weight;
    std::string delta;
    std::string subset;
    std::string cls;
    std::string what = "euler";
    std::string format = "jsonl";
    std::string r_range = "0:4";
    int m = 0;
    int n = 0;
    int s = 0;
    int j = 1;
    int k = -1;
    int box = 0;
    int jobs = 1;
};

MatrixSpace make_space(const Options& o) {
    if (o.space == "symmetric") {
        if (o.m != 0) throw std::invalid_argument("--m applies only to the general space");
        return MatrixSpace::symmetric(o.n);
    }
    if (o.space == "skew") {
        if (o.m != 0) throw std::invalid_argument("--m applies only to the general space");
        return MatrixSpace::skew(o.n);
    }
    if (o.space == "general") return MatrixSpace::general(o.m == 0 ? o.n : o.m, o.n);
    throw std::invalid_argument("--space must be symmetric, general, or skew");
}

Window required_window(const Options& o) {
    if (o.window.empty()) throw std::invalid_argument("--window is required");
    return parse_window(o.window);
}

std::optional<RClass> optional_class(const Options& o) {
    if (o.cls.empty()) return std::nullopt;
    return parse_class(o.cls);
}

int run_character(const Options& o) {
    const MatrixSpace sp = make_space(o);
    const Window w = required_window(o);
    const OutputFormat fmt = parse_format(o.format);
    switch (sp.kind()) {
        case SpaceKind::symmetric:
            emit(std::cout, character(DModuleId::c(sp.n(), o.s, o.j), w), fmt);
            break;
        case SpaceKind::skew:
            if (o.j != 1) throw std::invalid_argument("--j applies only to the symmetric space");
            emit(std::cout, character(DModuleId::b(sp.n(), o.s), w), fmt);
            break;
        default:
            if (o.j != 1) throw std::invalid_argument("--j applies only to the symmetric space");
            emit(std::cout, character_pair(DModuleId::a(sp.m(), sp.n(), o.s), BiWindow::same(w)), fmt);
            break;
    }
    return kExitOk;
}

int run_verify(const Options& o) {
    int rc = kExitOk;
    if (o.what == "forms") {
        if (o.n <= 0) throw std::invalid_argument("--n is required");
        const Window rr = parse_window(o.r_range);
        std::vector<int> ks;
        if (o.k >= 0) ks.push_back(o.k);
        else for (int k = 0; k <= o.n; ++k) ks.push_back(k);
        for (int k : ks)
            for (int r = rr.lo; r <= rr.hi; ++r) {
                const bool ok = pkr_from_forms(k, o.n, r) == pkr_direct(k, o.n, r);
                std::cout << "forms n=" << o.n << " k=" << k << " r=" << r
                          << (ok ? " PASS" : " FAIL") << '\n';
                if (!ok) rc = kExitVerifyFailed;
            }
        return rc;
    }

    const MatrixSpace sp = make_space(o);
    const Window w = required_window(o);
    if (o.what == "composition") {
        for (const CompositionReport& rep : composition_report(sp, w)) {
            describe(std::cout, rep);
            if (!rep.exact) rc = kExitVerifyFailed;
        }
        return rc;
    }
    if (o.what != "euler") throw std::invalid_argument("--what must be euler, composition, or forms");

    const int k_max = sp.kind() == SpaceKind::skew ? sp.n() / 2 : sp.n();
    std::vector<int> ks;
    if (o.k >= 0) ks.push_back(o.k);
    else for (int k = 0; k <= k_max; ++k) ks.push_back(k);

    std::vector<std::optional<RClass>> classes;
    if (sp.kind() == SpaceKind::symmetric) {
        if (o.cls.empty()) classes = {RClass::r_cong_k_plus_1, RClass::r_cong_k};
        else classes = {parse_class(o.cls)};
    } else {
        if (!o.cls.empty()) throw std::invalid_argument("--class applies only to the symmetric space");
        classes = {std::nullopt};
    }

    for (int k : ks)
        for (const auto& cls : classes) {
            if (sp.is_pair()) {
                const PropReportPair rep = verify_proposition_pair(sp, k, BiWindow::same(w), o.jobs);
                describe(std::cout, rep);
                if (!rep.passed()) rc = kExitVerifyFailed;
            } else {
                const PropReport rep = verify_proposition(sp, k, cls, w, o.jobs);
                describe(std::cout, rep);
                if (!rep.passed()) rc = kExitVerifyFailed;
            }
        }
    return rc;
}

int run_fourier(const Options& o) {
    const MatrixSpace sp = make_space(o);
    const FourierReport rep = fourier_permutation(sp, required_window(o), o.jobs);
    describe(std::cout, rep);
    return rep.bijection ? kExitOk : kExitVerifyFailed;
}

int run_bfunction(const Options& o) {
    for (const Rational& r : bfunction_roots(make_space(o))) std::cout << r << '\n';
    return kExitOk;
}

int run_limit(const Options& o) {
    const MatrixSpace sp = make_space(o);
    if (o.k < 0) throw std::invalid_argument("--k is required");
    int64_t value = 0;
    if (sp.is_pair()) {
        if (o.delta.empty()) throw std::invalid_argument("--delta is required for the general space");
        if (!o.cls.empty()) throw std::invalid_argument("--class applies only to the symmetric space");
        value = limit_mult(BiWeight{parse_weight(o.delta), parse_weight(o.weight)}, o.k, std::nullopt, sp);
    } else {
        if (!o.delta.empty()) throw std::invalid_argument("--delta applies only to the general space");
        const int kk = sp.kind() == SpaceKind::skew ? 2 * o.k : o.k;
        value = limit_mult(parse_weight(o.weight), kk, optional_class(o), sp);
    }
    std::cout << value << '\n';
    return kExitOk;
}

int run_torus(const Options& o) {
    if (o.n <= 0) throw std::invalid_argument("--n is required");
    if (o.subset.empty()) throw std::invalid_argument("--subset is required");
    emit(std::cout, torus_enumerate(parse_subset(o.subset, o.n), o.box), parse_format(o.format));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace chargl;
    Options o;
    if (const char* env = std::getenv("CHARGL_JOBS")) {
        try {
            o.jobs = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "error: CHARGL_JOBS must be an integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Windowed characters of equivariant modules on matrix spaces"};
    app.require_subcommand(1);
    int (*run)(const Options&) = nullptr;

    const auto add_space = [&](CLI::App* sub, bool with_window) {
        sub->add_option("--space", o.space, "symmetric, general, or skew")
            ->check(CLI::IsMember({"symmetric", "general", "skew"}));
        sub->add_option("--m", o.m, "rows of the general space (defaults to --n)");
        sub->add_option("--n", o.n, "matrix size / columns");
        if (with_window) sub->add_option("--window", o.window, "weight window lo:hi");
    };

    CLI::App* character_cmd = app.add_subcommand("character", "print the windowed character of a simple");
    add_space(character_cmd, true);
    character_cmd->add_option("--s", o.s, "stratum index");
    character_cmd->add_option("--j", o.j, "local system (symmetric space: 1 or 2)");
    character_cmd->add_option("--format", o.format, "jsonl or tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}));
    character_cmd->callback([&] { run = &run_character; });

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify character identities over a window");
    add_space(verify_cmd, true);
    verify_cmd->add_option("--what", o.what, "euler, composition, or forms")
        ->check(CLI::IsMember({"euler", "composition", "forms"}));
    verify_cmd->add_option("--k", o.k, "single index (default: all)");
    verify_cmd->add_option("--class", o.cls, "limit class for the symmetric space: even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    verify_cmd->add_option("--r", o.r_range, "exponent range lo:hi for --what forms");
    verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->callback([&] { run = &run_verify; });

    CLI::App* fourier_cmd = app.add_subcommand("fourier", "print the transform permutation table");
    add_space(fourier_cmd, true);
    fourier_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    fourier_cmd->callback([&] { run = &run_fourier; });

    CLI::App* bfunction_cmd = app.add_subcommand("bfunction", "print the b-function roots");
    add_space(bfunction_cmd, false);
    bfunction_cmd->callback([&] { run = &run_bfunction; });

    CLI::App* limit_cmd = app.add_subcommand("limit", "stabilized multiplicity of one weight");
    add_space(limit_cmd, false);
    limit_cmd->add_option("--k", o.k, "family index, as in verify (skew space: subset size 2k)");
    limit_cmd->add_option("--class", o.cls, "limit class for the symmetric space: even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    limit_cmd->add_option("--weight", o.weight, "comma-separated weight");
    limit_cmd->add_option("--delta", o.delta, "first factor of a pair weight (general space)");
    limit_cmd->callback([&] { run = &run_limit; });

    CLI::App* torus_cmd = app.add_subcommand("torus", "enumerate torus weights of a coordinate subset");
    torus_cmd->add_option("--n", o.n, "ambient size");
    torus_cmd->add_option("--subset", o.subset, "comma-separated subset of 1..n");
    torus_cmd->add_option("--box", o.box, "entry bound")->check(CLI::NonNegativeNumber);
    torus_cmd->add_option("--format", o.format, "jsonl or tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}));
    torus_cmd->callback([&] { run = &run_torus; });

    std::vector<std::string> fused = fuse_negative_values(argc, argv);
    std::vector<char*> args;
    args.reserve(fused.size());
    for (std::string& s : fused) args.push_back(s.data());

    try {
        app.parse(static_cast<int>(args.size()), args.data());
        return run ? run(o) : kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const StabilizationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitStabilization;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
