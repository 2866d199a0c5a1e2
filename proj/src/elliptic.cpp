#include "hextile/elliptic.hpp"

#include <algorithm>

namespace hextile {

namespace {

// Number of geometric terms of ratio `r` needed before m0 * r^n < cut.
long term_bound(double m0, double r, double cut, long max_terms) {
    if (m0 < cut) return 1;
    if (r <= 0.0) return 1;
    const long n = 2 + (long)std::ceil((std::log(cut) - std::log(m0)) / std::log(r));
    if (n > max_terms)
        throw policy_error("elliptic_gamma/triple_gamma: did not converge");
    return std::max<long>(n, 1);
}

}  // namespace

cd elliptic_gamma(const Nome& p, cd q, cd x, const TruncationPolicy& pol) {
    if (x == cd(0)) throw domain_error("elliptic_gamma: x = 0");
    const double aq = std::abs(q);
    if (!(aq < 1.0 - 1e-12))
        throw unsupported_error("elliptic_gamma: needs |q| < 1");
    const double ap = std::abs(p.p);
    const double ax = std::abs(x);
    const double cut = pol.rel_epsilon * (1.0 - ap) * (1.0 - aq);
    const double m0 = std::max({ax, ap * aq / ax, 1.0});
    const long jmax = (ap == 0.0) ? 1 : term_bound(m0, ap, cut, pol.max_terms);
    const long kmax = term_bound(m0, aq, cut, pol.max_terms);
    if (jmax * kmax > pol.max_terms)
        throw policy_error("elliptic_gamma: did not converge");
    const cd inv_x = cd(1) / x;
    cd acc(1);
    cd pj(1);
    for (long j = 0; j < jmax; ++j) {
        cd num = p.p * pj * q * inv_x;  // p^{j+1} q^{k+1} / x
        cd den = pj * x;                // p^j q^k x
        for (long k = 0; k < kmax; ++k) {
            if (std::abs(num) + std::abs(den) < cut) break;
            const cd fd = cd(1) - den;
            if (std::abs(fd) < kZeroSnap)
                throw pole_error("elliptic_gamma: pole proximity", j);
            const cd fn = cd(1) - num;
            if (std::abs(fn) < kZeroSnap) return cd(0);
            acc *= fn / fd;
            num *= q;
            den *= q;
        }
        pj *= p.p;
    }
    return acc;
}

cd triple_gamma(const Nome& p, cd q, cd t, cd x, const TruncationPolicy& pol) {
    if (x == cd(0)) throw domain_error("triple_gamma: x = 0");
    const double ap = std::abs(p.p), aq = std::abs(q), at = std::abs(t);
    if (!(aq < 1.0) || !(at < 1.0))
        throw unsupported_error("triple_gamma: needs |q| < 1 and |t| < 1");
    const double ax = std::abs(x);
    const double cut = pol.rel_epsilon * (1.0 - ap) * (1.0 - aq) * (1.0 - at);
    const double m0 = std::max({ax, ap * aq * at / ax, 1.0});
    const long imax = (ap == 0.0) ? 1 : term_bound(m0, ap, cut, pol.max_terms);
    const long jmax = (aq == 0.0) ? 1 : term_bound(m0, aq, cut, pol.max_terms);
    const long kmax = (at == 0.0) ? 1 : term_bound(m0, at, cut, pol.max_terms);
    if (imax * jmax * kmax > pol.max_terms)
        throw policy_error("triple_gamma: did not converge");
    const cd inv_x = cd(1) / x;
    cd acc(1);
    cd pi_(1);
    for (long i = 0; i < imax; ++i) {
        cd qj(1);
        for (long j = 0; j < jmax; ++j) {
            cd a = p.p * pi_ * q * qj * t * inv_x;  // p^{i+1} q^{j+1} t^{k+1} / x
            cd b = pi_ * qj * x;                    // p^i q^j t^k x
            for (long k = 0; k < kmax; ++k) {
                if (std::abs(a) + std::abs(b) < cut) break;
                if (std::abs(cd(1) - a) < kZeroSnap || std::abs(cd(1) - b) < kZeroSnap)
                    throw zero_error("triple_gamma: argument on zero lattice");
                acc *= (cd(1) - a) * (cd(1) - b);
                a *= t;
                b *= t;
            }
            qj *= q;
        }
        pi_ *= p.p;
    }
    return acc;
}

}  // namespace hextile
