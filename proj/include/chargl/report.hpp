#pragma once
/**
 * @file report.hpp
 * @brief Command-line parsing helpers and deterministic emission of windowed
 *        characters and verification reports.
 *
 * Output formats:
 *   jsonl — one object per weight, {"weight":[...],"mult":m} (a pair weight
 *           is [[...],[...]]), closed by a {"total":N} footer;
 *   tsv   — tab-separated "parts<TAB>mult" (pairs use three columns), closed
 *           by "total<TAB>N".
 * Terms are emitted in descending lexicographic order of the weight, which is
 * the storage order of the representations, so output is byte-deterministic.
 */

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chargl/dmodchar.hpp"
#include "chargl/grothendieck.hpp"
#include "chargl/propositions.hpp"
#include "chargl/weights.hpp"

namespace chargl {

/// Process exit codes shared by the command-line driver and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;           ///< invalid parameters
inline constexpr int kExitVerifyFailed = 3;    ///< a verified identity does not hold
inline constexpr int kExitStabilization = 4;   ///< a limit failed to stabilize

enum class OutputFormat { jsonl, tsv };

namespace detail {

inline int parse_int_strict(std::string_view s, const char* what) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || s.empty())
        throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
    return value;
}

inline std::vector<int> parse_int_list(std::string_view s, const char* what) {
    std::vector<int> out;
    size_t start = 0;
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    while (true) {
        const size_t comma = s.find(',', start);
        const std::string_view item =
            comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
        out.push_back(parse_int_strict(item, what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Parse "lo:hi" (either side may be negative).  Requires lo <= hi.
inline Window parse_window(const std::string& s) {
    const size_t colon = s.find(':');
    if (colon == std::string::npos || s.find(':', colon + 1) != std::string::npos)
        throw std::invalid_argument("window: expected 'lo:hi', got '" + s + "'");
    const Window w{detail::parse_int_strict(std::string_view(s).substr(0, colon), "window"),
                   detail::parse_int_strict(std::string_view(s).substr(colon + 1), "window")};
    if (w.empty()) throw std::invalid_argument("window: need lo <= hi, got '" + s + "'");
    return w;
}

/// Parse a comma-separated weight, e.g. "5,3,-1".
inline Weight parse_weight(const std::string& s) { return Weight(detail::parse_int_list(s, "weight")); }

/// Parse a comma-separated strictly increasing subset of {1..n}, e.g. "1,3".
inline SubsetK parse_subset(const std::string& s, int n) {
    return SubsetK(detail::parse_int_list(s, "subset"), n);
}

/// Parse the limit class name: "even" (r ≡ k+1) or "odd" (r ≡ k).
inline RClass parse_class(const std::string& s) {
    if (s == "even") return RClass::r_cong_k_plus_1;
    if (s == "odd") return RClass::r_cong_k;
    throw std::invalid_argument("class: expected 'even' or 'odd', got '" + s + "'");
}

inline const char* class_name(RClass cls) noexcept {
    return cls == RClass::r_cong_k_plus_1 ? "even" : "odd";
}

inline OutputFormat parse_format(const std::string& s) {
    if (s == "jsonl") return OutputFormat::jsonl;
    if (s == "tsv") return OutputFormat::tsv;
    throw std::invalid_argument("format: expected 'jsonl' or 'tsv', got '" + s + "'");
}

inline std::string to_string(const Window& w) {
    if (w.empty()) return "[]";
    return "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
}

namespace detail {

inline std::string parts_joined(const Weight& lam) {
    std::string s;
    for (int i = 0; i < lam.n(); ++i) {
        if (i) s += ' ';
        s += std::to_string(lam.parts()[static_cast<size_t>(i)]);
    }
    return s;
}

inline void emit_footer(std::ostream& os, OutputFormat fmt, size_t total) {
    if (fmt == OutputFormat::jsonl) {
        nlohmann::ordered_json j;
        j["total"] = total;
        os << j.dump() << '\n';
    } else {
        os << "total\t" << total << '\n';
    }
}

}  // namespace detail

/// Emit a windowed character, one term per line, then the total footer.
inline void emit(std::ostream& os, const VirtualRep& rep, OutputFormat fmt) {
    for (const auto& [lam, c] : rep.terms()) {
        if (fmt == OutputFormat::jsonl) {
            nlohmann::ordered_json j;
            j["weight"] = lam.parts();
            j["mult"] = c;
            os << j.dump() << '\n';
        } else {
            os << detail::parts_joined(lam) << '\t' << c << '\n';
        }
    }
    detail::emit_footer(os, fmt, rep.term_count());
}

inline void emit(std::ostream& os, const BiVirtualRep& rep, OutputFormat fmt) {
    for (const auto& [dl, c] : rep.terms()) {
        if (fmt == OutputFormat::jsonl) {
            nlohmann::ordered_json j;
            j["weight"] = {dl.first.parts(), dl.second.parts()};
            j["mult"] = c;
            os << j.dump() << '\n';
        } else {
            os << detail::parts_joined(dl.first) << '\t' << detail::parts_joined(dl.second) << '\t' << c
               << '\n';
        }
    }
    detail::emit_footer(os, fmt, rep.term_count());
}

/// Emit a plain weight list (each weight once), then the total footer.
inline void emit(std::ostream& os, const std::vector<Weight>& weights, OutputFormat fmt) {
    for (const Weight& lam : weights) {
        if (fmt == OutputFormat::jsonl) {
            nlohmann::ordered_json j;
            j["weight"] = lam.parts();
            j["mult"] = 1;
            os << j.dump() << '\n';
        } else {
            os << detail::parts_joined(lam) << "\t1\n";
        }
    }
    detail::emit_footer(os, fmt, weights.size());
}

namespace detail {

template <class Key>
std::string key_str(const Key& k) {
    if constexpr (std::is_same_v<Key, Weight>) return k.to_string();
    else return k.first.to_string() + "x" + k.second.to_string();
}

template <class Key>
void describe_prop(std::ostream& os, const BasicPropReport<Key>& rep) {
    os << "verify space=" << to_string(rep.kind);
    if (rep.kind == SpaceKind::general) os << " m=" << rep.m;
    os << " n=" << rep.n << " k=" << rep.k;
    if (rep.cls) os << " class=" << class_name(*rep.cls);
    if constexpr (std::is_same_v<Key, Weight>) os << " window=" << chargl::to_string(rep.window);
    else os << " window=" << chargl::to_string(rep.window.first) << "x" << chargl::to_string(rep.window.second);
    os << " checked=" << rep.checked << " mismatches=" << rep.mismatches.size()
       << (rep.passed() ? " PASS" : " FAIL") << '\n';
    constexpr size_t kShow = 10;
    for (size_t i = 0; i < rep.mismatches.size() && i < kShow; ++i) {
        const auto& [key, lhs, rhs] = rep.mismatches[i];
        os << "  mismatch at " << key_str(key) << ": lhs=" << lhs << " rhs=" << rhs << '\n';
    }
    if (rep.mismatches.size() > kShow)
        os << "  ... and " << rep.mismatches.size() - kShow << " more\n";
}

}  // namespace detail

inline void describe(std::ostream& os, const PropReport& rep) { detail::describe_prop(os, rep); }
inline void describe(std::ostream& os, const PropReportPair& rep) { detail::describe_prop(os, rep); }

inline void describe(std::ostream& os, const CompositionReport& rep) {
    os << "composition " << rep.target << " =";
    for (size_t i = 0; i < rep.terms.size(); ++i) {
        os << (i ? " + " : " ") << rep.terms[i].id.label();
        if (rep.terms[i].multiplicity != 1) os << "*" << rep.terms[i].multiplicity;
    }
    os << ": checked=" << rep.checked << " exact=" << (rep.exact ? "yes" : "no") << '\n';
}

inline void describe(std::ostream& os, const FourierReport& rep) {
    os << "fourier space=" << to_string(rep.kind);
    if (rep.kind == SpaceKind::general) os << " m=" << rep.m;
    os << " n=" << rep.n << " window=" << to_string(rep.window) << '\n';
    for (const auto& [from, to] : rep.mapping) os << "  " << from << " -> " << to << '\n';
    os << "  bijection: " << (rep.bijection ? "yes" : "no") << '\n';
    for (const auto& [law, ok] : rep.laws)
        os << "  law " << law << ": " << (ok ? "consistent" : "inconsistent") << '\n';
}

}  // namespace chargl
