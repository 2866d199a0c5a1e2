#include "hextile/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hextile {

namespace {

// v-form numerator/denominator exponents for the hole at (t, y); top vertex
// j = y - t/2 + 1.
struct WExponents {
    long v1a, v1b;   // q^{v1a} v1, q^{v1b} v1
    long v2a, v2b;   // q^{v2a} v2, q^{v2b} v2
    long v12;        // q^{v12} v1 v2 (numerator)
};

WExponents hole_exponents(const HexagonShape& shape, HoleSite s) {
    const long t = s.t, y = s.y, S = shape.S;
    return {y - 2 * t - S, y - 2 * t - S + 1, y + t, y + t + 1, 2 * y - t - S + 1};
}

}  // namespace

cd lozenge_weight(const HexagonShape& shape, HoleSite s, const EllipticParams& par) {
    const auto e = hole_exponents(shape, s);
    const cd v12 = par.v1 * par.v2;
    const cd num = par.theta1(ipow(par.q, e.v12) * v12);
    const cd den = par.theta1(ipow(par.q, e.v1a) * par.v1) *
                   par.theta1(ipow(par.q, e.v1b) * par.v1) *
                   par.theta1(ipow(par.q, e.v2a) * par.v2) *
                   par.theta1(ipow(par.q, e.v2b) * par.v2);
    if (den == cd(0)) throw degenerate_error("lozenge_weight: theta pole in denominator");
    return par.sqrt_v1v2 * ipow(par.sqrt_q, e.v12) * num / den;
}

cd lozenge_weight_u(const HexagonShape& shape, HoleSite s, const EllipticParams& par) {
    const long t = s.t, y = s.y;
    const cd u12 = par.u1 * par.u2;
    const cd num = par.theta1(ipow(par.q, 2 * y - t + 1) * u12);
    const cd den = par.theta1(ipow(par.q, y - 2 * t) * par.u1) *
                   par.theta1(ipow(par.q, y - 2 * t + 1) * par.u1) *
                   par.theta1(ipow(par.q, y + t) * par.u2) *
                   par.theta1(ipow(par.q, y + t + 1) * par.u2);
    if (den == cd(0)) throw degenerate_error("lozenge_weight_u: theta pole in denominator");
    // (u1 u2)^{1/2} = sqrt(v1 v2) q^{-S/2} with the fixed branches
    const cd root = par.sqrt_v1v2 * ipow(par.sqrt_q, -(long)shape.S);
    return root * ipow(par.sqrt_q, 2 * y - t + 1) * num / den;
}

std::array<cd, 3> ratio_site_utilde(const HexagonShape& shape, RatioSite s,
                                    const EllipticParams& par) {
    const long t = s.t, y = s.y, S = shape.S;
    const cd u1 = ipow(par.q, y - 2 * t - S) * par.v1;
    const cd u2 = ipow(par.q, y + t) * par.v2;
    const cd u3 = ipow(par.q, t - 2 * y + S) / (par.v1 * par.v2);
    return {u1, u2, u3};
}

cd weight_ratio_from_utilde(const Nome& p, cd q, const std::array<cd, 3>& ut,
                            const TruncationPolicy& pol) {
    cd num(1), den(1);
    for (const cd& u : ut) {
        num *= theta(p, u / q, pol);
        den *= theta(p, u * q, pol);
    }
    if (den == cd(0)) throw degenerate_error("weight_ratio: theta pole");
    return q * q * q * num / den;
}

cd weight_ratio(const HexagonShape& shape, RatioSite s, const EllipticParams& par) {
    return weight_ratio_from_utilde(par.p, par.q, ratio_site_utilde(shape, s, par), par.pol);
}

std::vector<RatioSite> ratio_sites(const HexagonShape& shape) {
    std::vector<RatioSite> out;
    for (int t = 0; t <= shape.T; ++t) {
        auto [lo, hi] = section_bounds(shape, t);
        for (int y = lo + 1; y <= hi; ++y) out.push_back({t, y});
    }
    return out;
}

std::pair<double, cd> tiling_log_weight(const PathEnsemble& e, const EllipticParams& par) {
    double logmag = 0.0;
    cd phase(1);
    for (int t = 0; t <= e.shape.T; ++t)
        for (int y : e.holes(t)) {
            const cd w = lozenge_weight(e.shape, {t, y}, par);
            if (w == cd(0)) return {-std::numeric_limits<double>::infinity(), cd(1)};
            logmag += std::log(std::abs(w));
            phase *= w / std::abs(w);
        }
    return {logmag, phase};
}

cd tiling_weight(const PathEnsemble& e, const EllipticParams& par) {
    auto [lm, ph] = tiling_log_weight(e, par);
    if (std::abs(lm) > 500.0)
        throw domain_error("tiling_weight: |log| > 500, use tiling_log_weight");
    return std::exp(lm) * ph;
}

std::pair<double, cd> tiling_log_weight_height_form(const PathEnsemble& e,
                                                    const EllipticParams& par) {
    // Cube-stack form of prod_v r^{h(v)}: each cube of the stepped surface
    // contributes r at its flip site.
    const auto h = paths_to_heights(e);
    const int b = e.shape.b(), c = e.shape.c();
    double logmag = 0.0;
    cd phase(1);
    for (int cx = 1; cx <= b; ++cx)
        for (int cy = 1; cy <= c; ++cy)
            for (int cz = 1; cz <= h[cx - 1][cy - 1]; ++cz) {
                const RatioSite s{cx - cy + c, cz + c - cy};
                const cd r = weight_ratio(e.shape, s, par);
                logmag += std::log(std::abs(r));
                phase *= r / std::abs(r);
            }
    return {logmag, phase};
}

long s3_label_exponent(const GaugeFace& f) {
    long e2 = 0;
    switch (f.type) {
        case LozengeType::Type1: e2 = f.cy2 + f.cz2 - 2 * f.cx2; break;
        case LozengeType::Type2: e2 = f.cx2 + f.cz2 - 2 * f.cy2; break;
        case LozengeType::Type3: e2 = f.cx2 + f.cy2 - 2 * f.cz2; break;
    }
    if (e2 % 2 != 0) throw domain_error("s3_label_exponent: off-lattice centroid");
    return e2 / 2;
}

cd s3_gauge_weight(const GaugeFace& f, const EllipticParams& par) {
    const long e = s3_label_exponent(f);
    cd u, sqrt_u;
    switch (f.type) {
        case LozengeType::Type1: u = par.u1; sqrt_u = par.sqrt_u1; break;
        case LozengeType::Type2: u = par.u2; sqrt_u = par.sqrt_u2; break;
        default: u = par.u3; sqrt_u = par.sqrt_u3; break;
    }
    return par.theta1(ipow(par.q, e) * u) / (sqrt_u * ipow(par.sqrt_q, e));
}

std::vector<GaugeFace> surface_faces(const HexagonShape& shape,
                                     const std::vector<std::vector<int>>& h) {
    const int b = shape.b(), c = shape.c(), a = shape.N;
    auto H = [&](int cx, int cy) -> int {
        if (cx < 1) return a;
        if (cx > b) return 0;
        if (cy < 1) return a;
        if (cy > c) return 0;
        return h[cx - 1][cy - 1];
    };
    std::vector<GaugeFace> out;
    out.reserve((size_t)(a * b + b * c + c * a));
    for (int cx = 1; cx <= b; ++cx)
        for (int cy = 1; cy <= c; ++cy)
            out.push_back({LozengeType::Type3, 2 * cx - 1, 2 * cy - 1, 2 * H(cx, cy)});
    for (int cx = 0; cx <= b; ++cx)  // faces normal to x between columns cx, cx+1
        for (int cy = 1; cy <= c; ++cy)
            for (int cz = H(cx + 1, cy) + 1; cz <= H(cx, cy); ++cz)
                out.push_back({LozengeType::Type1, 2 * cx, 2 * cy - 1, 2 * cz - 1});
    for (int cx = 1; cx <= b; ++cx)
        for (int cy = 0; cy <= c; ++cy)
            for (int cz = H(cx, cy + 1) + 1; cz <= H(cx, cy); ++cz)
                out.push_back({LozengeType::Type2, 2 * cx - 1, 2 * cy, 2 * cz - 1});
    return out;
}

std::pair<double, cd> tiling_log_weight_s3(const PathEnsemble& e, const EllipticParams& par) {
    const auto h = paths_to_heights(e);
    auto faces = surface_faces(e.shape, h);
    const long cy_shift = 2L * e.shape.c();  // path-compatible frame: cy -> cy - c
    double logmag = 0.0;
    cd phase(1);
    for (auto f : faces) {
        f.cy2 -= cy_shift;
        const cd w = s3_gauge_weight(f, par);
        if (w == cd(0)) return {-std::numeric_limits<double>::infinity(), cd(1)};
        logmag += std::log(std::abs(w));
        phase *= w / std::abs(w);
    }
    return {logmag, phase};
}

std::string PositivityReport::label_name() const {
    switch (label) {
        case Case::Real: return "real";
        case Case::TrigCase2: return "trigonometric-case2";
        case Case::TrigCase3: return "trigonometric-case3";
        default: return "rejected-case1";
    }
}

double real_checked(cd z, const char* what) {
    if (z == cd(0)) return 0.0;
    if (std::abs(z.imag()) > 1e-9 * std::abs(z.real()))
        throw configuration_error(std::string(what) + ": imaginary residue too large");
    return z.real();
}

namespace {

// Component of x on E = C*/p^Z for 0 < p < 1: 0 for identity (|x| = p^k),
// 1 for the non-identity circle (|x| = p^{k+1/2}), -1 otherwise.
int curve_component(double p, cd x, double tol = 1e-7) {
    const double mu = std::log(std::abs(x)) / std::log(p);
    const double frac = mu - std::floor(mu + 0.5);
    if (std::abs(frac) < tol) return 0;
    const double frac2 = mu - std::floor(mu);
    if (std::abs(frac2 - 0.5) < tol) return 1;
    return -1;
}

bool is_real(cd x) { return std::abs(x.imag()) <= 1e-9 * std::abs(x); }

// r depends on (t, y, S) only through e1 = y - 2t - S and e2 = y + t.
struct RatioTable {
    const EllipticParams& par;
    std::map<std::pair<long, long>, cd> cache;
    explicit RatioTable(const EllipticParams& par_) : par(par_) {}
    cd value(long e1, long e2) {
        auto it = cache.find({e1, e2});
        if (it != cache.end()) return it->second;
        const cd u1 = ipow(par.q, e1) * par.v1;
        const cd u2 = ipow(par.q, e2) * par.v2;
        const cd u3 = ipow(par.q, -e1 - e2) / (par.v1 * par.v2);
        const cd r = weight_ratio_from_utilde(par.p, par.q, {u1, u2, u3}, par.pol);
        cache.emplace(std::pair<long, long>{e1, e2}, r);
        return r;
    }
};

PositivityReport::Case classify(const HexagonShape&, const EllipticParams& par) {
    using Case = PositivityReport::Case;
    if (!is_real(par.p.p))
        throw unsupported_error("positivity_check: complex p unsupported");
    const double p = par.p.p.real();
    if (is_real(par.q) && is_real(par.v1) && is_real(par.v2)) return Case::Real;
    if (p <= 0.0)
        throw unsupported_error("positivity_check: p <= 0 requires real parameters");
    const int cq = curve_component(p, par.q);
    if (cq == 1) return Case::RejectedCase1;
    if (cq != 0)
        throw unsupported_error("positivity_check: q not on the real curve");
    int ident = 0;
    for (cd u : {par.u1, par.u2, par.u3}) {
        const int c = curve_component(p, u);
        if (c == 0) ++ident;
        else if (c != 1)
            throw unsupported_error("positivity_check: u_k not on the real curve");
    }
    if (ident == 3) return Case::TrigCase2;
    if (ident == 1) return Case::TrigCase3;
    throw unsupported_error("positivity_check: u placement not on a real form");
}

PositivityReport::Case classify_p0(const EllipticParams& par) {
    // p = 0 limit: classify by |.| = 1 (trigonometric) or realness.
    using Case = PositivityReport::Case;
    if (is_real(par.q) && is_real(par.v1) && is_real(par.v2)) return Case::Real;
    auto unit = [](cd x) { return std::abs(std::abs(x) - 1.0) < 1e-7; };
    if (unit(par.q) && unit(par.u1) && unit(par.u2) && unit(par.u3))
        return Case::TrigCase2;
    if (unit(par.q)) return Case::TrigCase3;
    throw unsupported_error("positivity_check: p = 0 placement unsupported");
}

}  // namespace

PositivityReport positivity_check(const HexagonShape& shape, const EllipticParams& par) {
    PositivityReport rep;
    rep.label = (std::abs(par.p.p) == 0.0) ? classify_p0(par) : classify(shape, par);
    RatioTable tab(par);
    rep.is_positive = true;
    for (int t = 0; t <= shape.T && rep.is_positive; ++t) {
        auto [lo, hi] = section_bounds(shape, t);
        for (int y = lo + 1; y <= hi; ++y) {
            const cd r = tab.value((long)y - 2 * t - shape.S, (long)y + t);
            if (!(std::abs(r.imag()) <= 1e-9 * std::abs(r) && r.real() > 0.0)) {
                rep.is_positive = false;
                rep.witness = {{RatioSite{t, y}, r}};
                break;
            }
        }
    }
    return rep;
}

SweepPositivity positivity_check_sweep(const HexagonShape& shape, const EllipticParams& par) {
    // Sites of hexagon (N, S', T) at section t lie on the diagonal
    // delta = e2 - e1 = 3t + S' of the (e1, e2) ratio table, with
    // e2 = y + t running over a contiguous segment. Evaluate each diagonal
    // cell once and answer the (S', t) segments by failure prefix counts.
    SweepPositivity out;
    const long dmax = 3L * shape.T + shape.S;
    std::vector<long> e2lo(dmax + 1, std::numeric_limits<long>::max());
    std::vector<long> e2hi(dmax + 1, std::numeric_limits<long>::min());
    auto segment = [&](int Sp, int t) -> std::pair<long, long> {
        const HexagonShape hs(shape.N, Sp, shape.T);
        auto [lo, hi] = section_bounds(hs, t);
        return {(long)lo + 1 + t, (long)hi + t};  // empty when lo + 1 > hi
    };
    for (int Sp = 0; Sp <= shape.S; ++Sp)
        for (int t = 0; t <= shape.T; ++t) {
            auto [a, b] = segment(Sp, t);
            if (a > b) continue;
            const long d = 3L * t + Sp;
            e2lo[d] = std::min(e2lo[d], a);
            e2hi[d] = std::max(e2hi[d], b);
        }
    RatioTable tab(par);
    auto site_ok = [&](long e1, long e2) {
        const cd r = tab.value(e1, e2);
        return std::abs(r.imag()) <= 1e-9 * std::abs(r) && r.real() > 0.0;
    };
    // failure-count prefix per diagonal
    std::vector<std::vector<int>> pref(dmax + 1);
    for (long d = 0; d <= dmax; ++d) {
        if (e2lo[d] > e2hi[d]) continue;
        const long n = e2hi[d] - e2lo[d] + 1;
        pref[d].assign(n + 1, 0);
        for (long i = 0; i < n; ++i) {
            const long e2 = e2lo[d] + i;
            pref[d][i + 1] = pref[d][i] + (site_ok(e2 - d, e2) ? 0 : 1);
        }
    }
    for (int Sp = 0; Sp <= shape.S; ++Sp)
        for (int t = 0; t <= shape.T; ++t) {
            auto [a, b] = segment(Sp, t);
            if (a > b) continue;
            const long d = 3L * t + Sp;
            const long ia = a - e2lo[d], ib = b - e2lo[d] + 1;
            if (pref[d][ib] - pref[d][ia] == 0) continue;
            for (long e2 = a; e2 <= b; ++e2)
                if (!site_ok(e2 - d, e2)) {
                    out.ok = false;
                    out.failing_S = Sp;
                    out.witness = {{RatioSite{t, (int)(e2 - t)}, tab.value(e2 - d, e2)}};
                    return out;
                }
        }
    return out;
}

}  // namespace hextile
