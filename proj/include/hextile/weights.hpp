#pragma once

#include <array>
#include <optional>
#include <string>

#include "hextile/ensemble.hpp"

namespace hextile {

// Horizontal lozenge identified by its section t and hole height y (path
// frame); the top vertex sits at (i, j) = (t, y - t/2 + 1).
struct HoleSite {
    int t = 0;
    int y = 0;
};

// Site of a weight ratio r = w(t,y)/w(t,y-1): both y and y-1 admissible hole
// heights; corresponds to the flip of one unit cube.
struct RatioSite {
    int t = 0;
    int y = 0;
};

// w(l), v-form of the displayed weight.
cd lozenge_weight(const HexagonShape& shape, HoleSite s, const EllipticParams& par);
// Same weight through the (u1, u2) parameters; agrees with the v-form.
cd lozenge_weight_u(const HexagonShape& shape, HoleSite s, const EllipticParams& par);

// (u~1, u~2, u~3) at a ratio site; product is exactly 1.
std::array<cd, 3> ratio_site_utilde(const HexagonShape& shape, RatioSite s,
                                    const EllipticParams& par);

// r = q^3 theta(u~1/q, u~2/q, u~3/q) / theta(q u~1, q u~2, q u~3).
cd weight_ratio_from_utilde(const Nome& p, cd q, const std::array<cd, 3>& ut,
                            const TruncationPolicy& pol = {});
cd weight_ratio(const HexagonShape& shape, RatioSite s, const EllipticParams& par);

// All ratio sites of the hexagon (one per unit cube of the a x b x c box).
std::vector<RatioSite> ratio_sites(const HexagonShape& shape);

// Product of w over horizontal lozenges, in log form: weight = exp(first) *
// second with |second| = 1. Guards against overflow for large hexagons.
std::pair<double, cd> tiling_log_weight(const PathEnsemble& e, const EllipticParams& par);
// Plain product; throws if |log| exceeds 500.
cd tiling_weight(const PathEnsemble& e, const EllipticParams& par);

// Height-power form prod_v r(v)^{h(v)}, again as (log magnitude, phase).
// Proportional to tiling_log_weight across tilings of one hexagon.
std::pair<double, cd> tiling_log_weight_height_form(const PathEnsemble& e,
                                                    const EllipticParams& par);

// -- S3-invariant gauge (Appendix) -------------------------------------------

enum class LozengeType { Type1 = 1, Type2 = 2, Type3 = 3 };  // normal x / y / z

// Face of the stepped surface, centroid given doubled (half-integers exact).
struct GaugeFace {
    LozengeType type;
    long cx2, cy2, cz2;
};

// wt = u~_i^{-1/2} theta_p(u~_i) with u~_i = q^e u_i and e the label exponent
// of the face; the square roots use the branches fixed in EllipticParams.
cd s3_gauge_weight(const GaugeFace& f, const EllipticParams& par);

// Label exponent e for a face (u~ = q^e u_type).
long s3_label_exponent(const GaugeFace& f);

// All faces of the stepped surface given column heights.
std::vector<GaugeFace> surface_faces(const HexagonShape& shape,
                                     const std::vector<std::vector<int>>& h);

std::pair<double, cd> tiling_log_weight_s3(const PathEnsemble& e, const EllipticParams& par);

// -- positivity ---------------------------------------------------------------

struct PositivityReport {
    bool is_positive = false;
    enum class Case { Real, TrigCase2, TrigCase3, RejectedCase1 } label = Case::Real;
    std::optional<std::pair<RatioSite, cd>> witness;  // first failing site
    std::string label_name() const;
};

// Classifies the parameter placement and then verifies r > 0 at every ratio
// site of the hexagon. p must be real and nonzero.
PositivityReport positivity_check(const HexagonShape& shape, const EllipticParams& par);

// Same check across the whole sampling sweep S' = 0..S; returns the first
// failing (S', site) if any. Ratio values are shared across S' since r does
// not depend on S'.
struct SweepPositivity {
    bool ok = true;
    int failing_S = -1;
    std::optional<std::pair<RatioSite, cd>> witness;
};
SweepPositivity positivity_check_sweep(const HexagonShape& shape, const EllipticParams& par);

// |Im z| / |Re z| must stay below 1e-9 for probability-bearing quantities.
double real_checked(cd z, const char* what);

}  // namespace hextile
