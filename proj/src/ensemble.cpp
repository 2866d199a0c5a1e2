#include "hextile/ensemble.hpp"

#include <algorithm>

namespace hextile {

bool PathEnsemble::valid() const {
    const int N = shape.N, S = shape.S, T = shape.T;
    if ((int)X.size() != T + 1) return false;
    for (int k = 0; k < N; ++k) {
        if (X[0][k] != k) return false;
        if (X[T][k] != S + k) return false;
    }
    for (int t = 0; t <= T; ++t) {
        if (!config_admissible(shape, t, X[t])) return false;
        if (t > 0)
            for (int k = 0; k < N; ++k) {
                const int d = X[t][k] - X[t - 1][k];
                if (d != 0 && d != 1) return false;
            }
    }
    return true;
}

std::vector<int> PathEnsemble::holes(int t) const {
    auto [lo, hi] = section_bounds(shape, t);
    std::vector<int> out;
    out.reserve(hi - lo + 1 - shape.N);
    size_t k = 0;
    for (int y = lo; y <= hi; ++y) {
        if (k < X[t].size() && X[t][k] == y) {
            ++k;
            continue;
        }
        out.push_back(y);
    }
    return out;
}

PathEnsemble parallelogram_start(int N, int T) {
    PathEnsemble e(HexagonShape(N, 0, T));
    for (int t = 0; t <= T; ++t)
        for (int k = 0; k < N; ++k) e.X[t][k] = k;
    return e;
}

std::vector<std::vector<int>> paths_to_heights(const PathEnsemble& e) {
    const int b = e.shape.b(), c = e.shape.c();
    std::vector<std::vector<int>> h(std::max(b, 0), std::vector<int>(std::max(c, 0), 0));
    for (int t = 1; t < e.shape.T; ++t) {
        const auto hole = e.holes(t);
        // cells on the main diagonal cx - cy = t - c, ordered by cx descending;
        // k-th ascending hole belongs to the k-th such cell.
        const int d = t - c;
        const int cx_max = std::min(b, c + d);
        int cx = cx_max;
        for (int k = 0; k < (int)hole.size(); ++k, --cx) {
            const int cy = cx - d;
            const int hv = hole[k] - (c - cy);
            if (cx < 1 || cx > b || cy < 1 || cy > c || hv < 0 || hv > e.shape.N)
                throw state_error("paths_to_heights: inconsistent ensemble");
            h[cx - 1][cy - 1] = hv;
        }
        if (cx != std::max(1, 1 + d) - 1)
            throw state_error("paths_to_heights: diagonal count mismatch");
    }
    return h;
}

PathEnsemble heights_to_paths(const HexagonShape& shape,
                              const std::vector<std::vector<int>>& h) {
    const int b = shape.b(), c = shape.c();
    PathEnsemble e(shape);
    for (int t = 0; t <= shape.T; ++t) {
        auto [lo, hi] = section_bounds(shape, t);
        std::vector<char> is_hole(hi - lo + 1, 0);
        const int d = t - c;
        for (int cx = std::max(1, 1 + d); cx <= std::min(b, c + d); ++cx) {
            const int cy = cx - d;
            const int y = h[cx - 1][cy - 1] + (c - cy);
            if (y < lo || y > hi || is_hole[y - lo])
                throw domain_error("heights_to_paths: invalid heights");
            is_hole[y - lo] = 1;
        }
        int k = 0;
        for (int y = lo; y <= hi; ++y)
            if (!is_hole[y - lo]) e.X[t][k++] = y;
        if (k != shape.N) throw domain_error("heights_to_paths: particle count");
    }
    if (!e.valid()) throw domain_error("heights_to_paths: not a valid ensemble");
    return e;
}

}  // namespace hextile
