#include "hextile/geometry.hpp"

#include <algorithm>

namespace hextile {

std::pair<int, int> section_bounds(const HexagonShape& shape, int t) {
    const int lo = std::max(0, t + shape.S - shape.T);
    const int hi = std::min(t + shape.N - 1, shape.S + shape.N - 1);
    return {lo, hi};
}

bool config_admissible(const HexagonShape& shape, int t, const ParticleConfig& xs) {
    if ((int)xs.size() != shape.N) return false;
    auto [lo, hi] = section_bounds(shape, t);
    for (size_t k = 0; k < xs.size(); ++k) {
        if (xs[k] < lo || xs[k] > hi) return false;
        if (k > 0 && xs[k] <= xs[k - 1]) return false;
    }
    return true;
}

std::vector<ParticleConfig> enumerate_section_configs(const HexagonShape& shape, int t) {
    auto [lo, hi] = section_bounds(shape, t);
    const int n = shape.N;
    std::vector<ParticleConfig> out;
    ParticleConfig cur(n);
    // combinations of size n from [lo, hi]
    auto rec = [&](auto&& self, int k, int start) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= hi - (n - 1 - k); ++v) {
            cur[k] = v;
            self(self, k + 1, v + 1);
        }
    };
    if (hi - lo + 1 >= n) rec(rec, 0, lo);
    return out;
}

std::vector<int> config_to_partition(const ParticleConfig& xs) {
    const int n = (int)xs.size();
    std::vector<int> lambda(n);
    for (int i = 1; i <= n; ++i) {
        lambda[i - 1] = xs[n - i] - (n - i);
        if (lambda[i - 1] < 0) throw domain_error("config_to_partition: bad config");
    }
    for (int i = 1; i < n; ++i)
        if (lambda[i] > lambda[i - 1])
            throw domain_error("config_to_partition: not a partition");
    return lambda;
}

ParticleConfig partition_to_config(const std::vector<int>& lambda, int N) {
    if ((int)lambda.size() > N) throw domain_error("partition_to_config: too many parts");
    ParticleConfig xs(N);
    for (int i = 1; i <= N; ++i) {
        const int li = (i <= (int)lambda.size()) ? lambda[i - 1] : 0;
        xs[N - i] = li + N - i;
    }
    for (int k = 1; k < N; ++k)
        if (xs[k] <= xs[k - 1]) throw domain_error("partition_to_config: not strict");
    return xs;
}

FrameXYZ to_xyz(FrameIJ p, long s) {
    // x - y = i, 2z - (x+y) = j2, x + y + z = s  =>  3z = 2s/... solve:
    // x + y = s - z, so 2z - (s - z) = j2 -> z = (j2 + s) / 3.
    const long num = p.j2 + s;
    if (num % 3 != 0) throw domain_error("to_xyz: inconsistent height sum");
    const long z = num / 3;
    const long xy = s - z;
    if ((xy + p.i) % 2 != 0) throw domain_error("to_xyz: parity mismatch");
    const long x = (xy + p.i) / 2;
    return {x, xy - x, z};
}

EllipticParams::EllipticParams(Nome p_, cd q_, cd v1_, cd v2_, int S_,
                               TruncationPolicy pol_)
    : p(p_), q(q_), v1(v1_), v2(v2_), S(S_), pol(pol_) {
    if (q == cd(0) || v1 == cd(0) || v2 == cd(0))
        throw domain_error("EllipticParams: q, v1, v2 must be nonzero");
    u1 = ipow(q, -S) * v1;
    u2 = v2;
    u3 = cd(1) / (u1 * u2);
    sqrt_q = std::sqrt(q);
    sqrt_v1v2 = std::sqrt(v1 * v2);
    sqrt_v2_over_v1 = std::sqrt(v2 / v1);
    sqrt_u1 = std::sqrt(u1);
    sqrt_u2 = std::sqrt(u2);
    sqrt_u3 = cd(1) / (sqrt_u1 * sqrt_u2);  // forces sqrt(u1) sqrt(u2) sqrt(u3) = 1
}

CanonicalParams canonical_params(const HexagonShape& shape, int t,
                                 const EllipticParams& par) {
    const auto& q = par.q;
    const cd sq = par.sqrt_q;
    const cd r12 = par.sqrt_v1v2;
    const cd r21 = par.sqrt_v2_over_v1;      // sqrt(v2/v1)
    const cd r12inv = cd(1) / r12;           // sqrt(1/(v1 v2))
    const cd r12ratio = cd(1) / r21;         // sqrt(v1/v2)
    const int N = shape.N, S = shape.S, T = shape.T;
    // q^{(t+S+1)/2 - T} etc.; half exponents via sqrt_q so branches stay fixed.
    auto qhalf = [&](long twice_e) {  // q^{twice_e / 2}
        return ipow(sq, twice_e);
    };
    CanonicalParams c;
    c.A = qhalf(t + S + 1 - 2 * T) * r12;
    c.B = qhalf(t + S + 1 + 2 * T) * r21;
    c.C = qhalf(t - S + 1 - 2 * N) * r12inv;
    c.D = qhalf(-t + S + 1 - 2 * N) * r12inv;
    c.E = qhalf(-t - S + 1) * r12ratio;
    c.F = qhalf(-t - S + 1) * r12;
    (void)q;
    return c;
}

CanonicalProducts canonical_products(const HexagonShape& shape, int t,
                                     const EllipticParams& par) {
    const int N = shape.N, S = shape.S, T = shape.T;
    CanonicalProducts c;
    const cd v12 = par.v1 * par.v2;
    c.AF = par.qpow(1 - T) * v12;
    c.BF = par.qpow(1 + T) * par.v2;
    c.CF = par.qpow(1 - S - N);
    c.DF = par.qpow(1 - t - N);
    c.EF = par.qpow(1 - t - S) * par.v1;
    c.FF = par.qpow(1 - t - S) * v12;
    return c;
}

std::vector<std::pair<cd, cd>> canonical_edge_equations(
    const HexagonShape& shape, int t, const EllipticParams& par) {
    const int N = shape.N, S = shape.S, T = shape.T;
    const auto c = canonical_params(shape, t, par);
    const cd q = par.q;
    const cd sq = par.sqrt_q;
    // (ABC/DEF)^{1/2} with the same branch as the construction:
    // ABC/DEF = q^{3t+S} v2/v1, so take q^{(3t+S)/2} sqrt(v2/v1).
    const cd half_ratio = ipow(sq, 3 * t + S) * par.sqrt_v2_over_v1;
    auto cube = [](cd z) { return z * z * z; };
    const cd q32 = ipow(sq, 3);
    std::vector<std::pair<cd, cd>> eqs;
    const cd v12 = par.v1 * par.v2;
    const cd r1 = par.v1 / par.v2;
    // left vertical edge i=0:    u1/u2 = q^{-S} v1/v2
    eqs.push_back({ipow(q, -S) * r1, half_ratio * cube(c.E) / q32});
    // right vertical edge i=T:   q^{-3T-S} v1/v2
    eqs.push_back({ipow(q, -3 * T - S) * r1, half_ratio / cube(c.B) * q32});
    // NW edge:                   u3/u1 = q^{2S-3N} / (v1^2 v2)
    eqs.push_back({ipow(q, 2 * S - 3 * N) / (par.v1 * v12), half_ratio * cube(c.D) / q32});
    // SE edge:                   q^{3T-S} / (v1^2 v2)
    eqs.push_back({ipow(q, 3 * T - S) / (par.v1 * v12), half_ratio / cube(c.A) * q32});
    // NE edge:                   u2/u3 = q^{2S+3N} v1 v2^2
    eqs.push_back({ipow(q, 2 * S + 3 * N) * v12 * par.v2, half_ratio / cube(c.C) * q32});
    // SW edge:                   q^{-S} v1 v2^2
    eqs.push_back({ipow(q, -S) * v12 * par.v2, half_ratio * cube(c.F) / q32});
    // particle line i=t:         q^{-3t-S} v1/v2 = DEF/ABC
    eqs.push_back({ipow(q, -3 * t - S) * r1, (c.D * c.E * c.F) / (c.A * c.B * c.C)});
    return eqs;
}

}  // namespace hextile
