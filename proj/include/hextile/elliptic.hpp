#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hextile/errors.hpp"

namespace hextile {

using cd = std::complex<double>;

// Threshold below which a vanishing theta factor is snapped to an exact 0.
// Forbidden transitions downstream rely on these zeros being structural.
inline constexpr double kZeroSnap = 1e-12;

struct TruncationPolicy {
    double rel_epsilon = 1e-15;
    long max_terms = 1'000'000;
};

// Elliptic nome, |p| < 1 strictly.
struct Nome {
    cd p;
    explicit Nome(cd p_) : p(p_) {
        if (!(std::abs(p_) < 1.0))
            throw domain_error("Nome: |p| must be < 1");
    }
};

namespace detail {

// theta_p(x) = prod_{k>=0} (1 - p^k x)(1 - p^{k+1}/x), truncated when the
// remaining factors deviate from 1 by less than rel_epsilon in aggregate.
// Returns an exact 0 if any factor falls within kZeroSnap of 0.
template <class R>
std::complex<R> theta_impl(std::complex<R> p, std::complex<R> x,
                           R rel_eps, long max_terms) {
    using C = std::complex<R>;
    if (x == C(0)) throw domain_error("theta: x = 0");
    const R ap = std::abs(p);
    if (!(ap < R(1))) throw policy_error("theta: |p| >= 1");
    const C inv_x = C(1) / x;
    C a = x;          // p^k x
    C b = p * inv_x;  // p^{k+1} / x
    C acc(1);
    const R tail_guard = R(1) - ap;
    for (long k = 0; k < max_terms; ++k) {
        const C f1 = C(1) - a;
        const C f2 = C(1) - b;
        if (std::abs(f1) < R(kZeroSnap) || std::abs(f2) < R(kZeroSnap))
            return C(0);
        acc *= f1 * f2;
        const R rem = std::abs(a) * ap + std::abs(b) * ap;
        if (rem < rel_eps * tail_guard) return acc;
        a *= p;
        b *= p;
    }
    throw policy_error("theta: truncation did not converge");
}

}  // namespace detail

inline cd theta(const Nome& p, cd x, const TruncationPolicy& pol = {}) {
    return detail::theta_impl<double>(p.p, x, pol.rel_epsilon, pol.max_terms);
}

// Multi-argument convention: theta of a list is the product of singles.
inline cd theta(const Nome& p, std::initializer_list<cd> xs,
                const TruncationPolicy& pol = {}) {
    cd acc(1);
    for (cd x : xs) acc *= theta(p, x, pol);
    return acc;
}

// theta_p(x; q)_m = prod_{0<=i<m} theta_p(q^i x); negative m via
// theta_p(a;q)_{-n} = 1 / theta_p(a q^{-n};q)_n.
inline cd theta_pochhammer(const Nome& p, cd q, cd x, long m,
                           const TruncationPolicy& pol = {}) {
    if (x == cd(0)) throw domain_error("theta_pochhammer: x = 0");
    if (m >= 0) {
        cd acc(1), arg = x;
        for (long i = 0; i < m; ++i) {
            acc *= theta(p, arg, pol);
            arg *= q;
        }
        return acc;
    }
    const long n = -m;
    cd acc(1), arg = x * std::pow(q, cd(-double(n)));
    for (long i = 0; i < n; ++i) {
        const cd f = theta(p, arg, pol);
        if (f == cd(0))
            throw pole_error("theta_pochhammer: vanishing factor in reciprocal", i);
        acc *= f;
        arg *= q;
    }
    return cd(1) / acc;
}

inline cd theta_pochhammer(const Nome& p, cd q, std::initializer_list<cd> xs,
                           long m, const TruncationPolicy& pol = {}) {
    cd acc(1);
    for (cd x : xs) acc *= theta_pochhammer(p, q, x, m, pol);
    return acc;
}

// Gamma_{p,q}(x) = prod_{j,k>=0} (1 - p^{j+1} q^{k+1}/x) / (1 - p^j q^k x).
// Exposed for |q| < 1 only; zeros of the numerator snap to exact 0, pole
// proximity raises.
cd elliptic_gamma(const Nome& p, cd q, cd x, const TruncationPolicy& pol = {});

// Gamma_{p,q,t}(x) = prod_{i,j,k>=0} (1 - p^{i+1}q^{j+1}t^{k+1}/x)(1 - p^i q^j t^k x).
// Entire; lattice proximity of either factor family raises zero_error.
cd triple_gamma(const Nome& p, cd q, cd t, cd x, const TruncationPolicy& pol = {});

// phi(z,w) = z^{-1} theta_p(zw, z/w); BC_2-antisymmetric of degree 1.
inline cd phi(const Nome& p, cd z, cd w, const TruncationPolicy& pol = {}) {
    if (z == cd(0) || w == cd(0)) throw domain_error("phi: zero argument");
    return theta(p, z * w, pol) * theta(p, z / w, pol) / z;
}

// Integer power by repeated squaring (exact exponent bookkeeping).
inline cd ipow(cd b, long e) {
    if (e < 0) return cd(1) / ipow(b, -e);
    cd acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Table of q^e for e in [-half, half], for hot loops.
struct PowerTable {
    std::vector<cd> tab;
    long half = 0;
    PowerTable() = default;
    PowerTable(cd q, long half_) : tab(2 * half_ + 1), half(half_) {
        tab[half] = cd(1);
        for (long e = 1; e <= half; ++e) {
            tab[half + e] = tab[half + e - 1] * q;
            tab[half - e] = cd(1) / tab[half + e];
        }
    }
    cd operator()(long e) const { return tab[half + e]; }
};

}  // namespace hextile
