#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hextile/elliptic.hpp"

namespace hextile {

// Hexagon a x b x c encoded as N = a, T = b + c, S = c.
struct HexagonShape {
    int N = 1;  // a: number of paths / particles
    int S = 0;  // c
    int T = 0;  // b + c
    HexagonShape() = default;
    HexagonShape(int N_, int S_, int T_) : N(N_), S(S_), T(T_) {
        if (N < 1 || S < 0 || T < S)
            throw domain_error("HexagonShape: need N >= 1, 0 <= S <= T");
    }
    static HexagonShape from_abc(int a, int b, int c) {
        return HexagonShape(a, c, b + c);
    }
    int a() const { return N; }
    int b() const { return T - S; }
    int c() const { return S; }
};

struct SectionIndex {
    int t = 0;
    SectionIndex() = default;
    SectionIndex(const HexagonShape& shape, int t_) : t(t_) {
        if (t < 0 || t > shape.T) throw domain_error("SectionIndex: t out of [0,T]");
    }
};

// Strictly increasing particle positions on one vertical section.
using ParticleConfig = std::vector<int>;

// Admissible particle interval [lo, hi] on section t; covers the four cases
// max(0, t+S-T) <= x <= min(t+N-1, S+N-1).
std::pair<int, int> section_bounds(const HexagonShape& shape, int t);

bool config_admissible(const HexagonShape& shape, int t, const ParticleConfig& xs);

// All of X^{S,t} in lexicographic order.
std::vector<ParticleConfig> enumerate_section_configs(const HexagonShape& shape, int t);

// lambda_i + N - i = x_{N+1-i}; lambda listed weakly decreasing.
std::vector<int> config_to_partition(const ParticleConfig& xs);
ParticleConfig partition_to_config(const std::vector<int>& lambda, int N);

// -- coordinate frames ------------------------------------------------------
//
// Path frame (t, x); triangular-lattice frame (i, j) with (i,j) = (t, x - t/2);
// 3D stepped-surface frame (x,y,z) projected by i = x - y, j = z - (x+y)/2.
// j is stored doubled so half-integers stay exact.

struct FrameIJ {
    long i = 0;
    long j2 = 0;  // 2*j
};

struct FrameTX {
    long t = 0;
    long x = 0;
};

struct FrameXYZ {
    long x = 0, y = 0, z = 0;
};

inline FrameIJ to_ij(FrameTX p) { return {p.t, 2 * p.x - p.t}; }
inline FrameTX to_tx(FrameIJ p) { return {p.i, (p.j2 + p.i) / 2}; }
inline FrameIJ to_ij(FrameXYZ p) { return {p.x - p.y, 2 * p.z - p.x - p.y}; }
// Inverse of the projection given the height sum s = x + y + z.
FrameXYZ to_xyz(FrameIJ p, long s);

// -- model parameters -------------------------------------------------------

// Global parameter tuple (p, q, v1, v2) with derived u's and the square-root
// branches fixed once per run (principal branch of sqrt(v1 v2), sqrt(v2/v1),
// sqrt(q); sqrt(u_i) chosen so sqrt(u1) sqrt(u2) sqrt(u3) = 1).
struct EllipticParams {
    Nome p;
    cd q;
    cd v1, v2;
    int S = 0;  // u1 = q^{-S} v1 depends on the hexagon's S
    cd u1, u2, u3;
    cd sqrt_q, sqrt_v1v2, sqrt_v2_over_v1;
    cd sqrt_u1, sqrt_u2, sqrt_u3;
    TruncationPolicy pol;

    EllipticParams(Nome p_, cd q_, cd v1_, cd v2_, int S_,
                   TruncationPolicy pol_ = {});

    cd theta1(cd x) const { return theta(p, x, pol); }
    cd qpow(long e) const { return ipow(q, e); }
};

// Canonical six-tuple (A..F) with q^{2N-2} A B C D E F = q.
struct CanonicalParams {
    cd A, B, C, D, E, F;
};

CanonicalParams canonical_params(const HexagonShape& shape, int t,
                                 const EllipticParams& par);

// Branch-free pair products; everything downstream of the transition
// machinery is expressible in these.
struct CanonicalProducts {
    cd AF, BF, CF, DF, EF, FF;  // FF = F^2
    cd product(int which) const {  // 0..5 -> AF..FF
        switch (which) {
            case 0: return AF;
            case 1: return BF;
            case 2: return CF;
            case 3: return DF;
            case 4: return EF;
            default: return FF;
        }
    }
};

CanonicalProducts canonical_products(const HexagonShape& shape, int t,
                                     const EllipticParams& par);

// The seven displayed edge/particle-line identities, returned as
// (lhs, rhs) pairs for testing; both sides computed with the fixed branches.
std::vector<std::pair<cd, cd>> canonical_edge_equations(
    const HexagonShape& shape, int t, const EllipticParams& par);

}  // namespace hextile
