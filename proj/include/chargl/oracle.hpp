#pragma once
/**
 * @file oracle.hpp
 * @brief Independent numeric cross-checks: exact rational evaluation of
 *        (Laurent) Schur polynomials via the bialternant formula.
 *
 * Everything here is deliberately *dumb*: no straightening, no combinatorial
 * shortcuts.  schur_eval accepts arbitrary integer weights (not necessarily
 * dominant) and evaluates the alternant quotient
 *
 *     s_λ(p₁,...,pₙ) = det(p_i^{λ_j + n − j}) / det(p_i^{n − j})
 *
 * directly over exact rationals, so it is a genuinely independent referee for
 * the symbolic layer: identities between virtual characters are verified by
 * evaluating both sides at random points with distinct coordinates.
 *
 * Agreement at one random point is probabilistic evidence, not proof; the
 * test suites evaluate at several independent points, which makes a false
 * pass astronomically unlikely for the polynomial degrees involved.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "chargl/grothendieck.hpp"
#include "chargl/weights.hpp"

namespace chargl {

using Rational = boost::multiprecision::cpp_rational;

/// Evaluation point: one nonzero rational per variable.  Coordinates must be
/// pairwise distinct or the Vandermonde denominator vanishes.
using EvalPoint = std::vector<Rational>;

/// x^e for integer e of either sign (negative exponents via reciprocal).
inline Rational pow_int(const Rational& x, int e) {
    if (e == 0) return Rational(1);
    if (x == 0) throw std::domain_error("pow_int: zero base with nonpositive exponent");
    Rational base = e > 0 ? x : Rational(1) / x;
    int k = e > 0 ? e : -e;
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

namespace detail {

/// Exact determinant by fraction-free-ish Gaussian elimination over ℚ.
inline Rational det_rational(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = Rational(1) / m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] * inv;
            for (size_t c = col; c < n; ++c) m[row][c] -= factor * m[col][c];
        }
    }
    return det;
}

}  // namespace detail

/**
 * Bialternant evaluation of S_λ at p.  λ need not be dominant — the alternant
 * quotient automatically encodes the sign/vanishing of straightening, which is
 * exactly why this serves as an oracle for it.  Negative entries of λ are
 * fine (Laurent case) as long as every coordinate is nonzero.
 */
inline Rational schur_eval(const Weight& lam, const EvalPoint& p) {
    const int n = lam.n();
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("schur_eval: point size mismatch");
    for (const Rational& x : p)
        if (x == 0) throw std::domain_error("schur_eval: zero coordinate");
    if (n == 0) return Rational(1);

    std::vector<std::vector<Rational>> num(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    std::vector<std::vector<Rational>> den(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            num[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pow_int(p[static_cast<size_t>(i)], lam.at(j + 1) + n - (j + 1));
            den[static_cast<size_t>(i)][static_cast<size_t>(j)] = pow_int(p[static_cast<size_t>(i)], n - (j + 1));
        }
    }
    const Rational d = detail::det_rational(std::move(den));
    if (d == 0) throw std::domain_error("schur_eval: coordinates must be pairwise distinct");
    return detail::det_rational(std::move(num)) / d;
}

/// Σ over k-subsets I of Π_{i∈I} p_i^r — the evaluation of Σ_I S_{(r^I)}.
inline Rational pkr_eval(int n, int k, int r, const EvalPoint& p) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("pkr_eval: point size mismatch");
    Rational total(0);
    for (const SubsetK& I : SubsetK::all(n, k)) {
        Rational term(1);
        for (int i : I.elems()) term *= pow_int(p[static_cast<size_t>(i - 1)], r);
        total += term;
    }
    return total;
}

/// Evaluation of a virtual character: Σ coefficient · s_key(p).
inline Rational vrep_eval(const VirtualRep& rep, const EvalPoint& p) {
    Rational total(0);
    for (const auto& [k, c] : rep.terms()) total += Rational(c) * schur_eval(k, p);
    return total;
}

/// A random evaluation point with pairwise distinct prime coordinates.
inline EvalPoint random_point(int n, std::mt19937_64& rng) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    constexpr int num_primes = static_cast<int>(sizeof(primes) / sizeof(primes[0]));
    if (n > num_primes) throw std::invalid_argument("random_point: n too large for the prime pool");
    std::vector<int> pool(primes, primes + num_primes);
    std::shuffle(pool.begin(), pool.end(), rng);
    EvalPoint p;
    p.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p.emplace_back(pool[static_cast<size_t>(i)]);
    return p;
}

/// Probabilistic equality of two virtual characters with keys of length n:
/// evaluate both at `trials` independent random points and compare exactly.
inline bool equal_by_eval(const VirtualRep& a, const VirtualRep& b, int n, int trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const EvalPoint p = random_point(n, rng);
        if (vrep_eval(a, p) != vrep_eval(b, p)) return false;
    }
    return true;
}

}  // namespace chargl
