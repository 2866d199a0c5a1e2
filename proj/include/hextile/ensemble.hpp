#pragma once

#include <vector>

#include "hextile/geometry.hpp"

namespace hextile {

// A full tiling as particle configs X(0..T).
struct PathEnsemble {
    HexagonShape shape;
    std::vector<ParticleConfig> X;  // X[t], t = 0..T

    PathEnsemble() = default;
    explicit PathEnsemble(const HexagonShape& s)
        : shape(s), X(s.T + 1, ParticleConfig(s.N)) {}

    bool valid() const;

    // Holes of section t (complement of X[t] in the admissible interval),
    // ascending.
    std::vector<int> holes(int t) const;
};

// Deterministic start of the sampling pipeline: the unique ensemble of
// Omega(N, 0, T) (all paths flat).
PathEnsemble parallelogram_start(int N, int T);

// Column heights h[cx-1][cy-1] of the boxed plane partition, cx in 1..b,
// cy in 1..c, extracted from the hole positions along main diagonals.
std::vector<std::vector<int>> paths_to_heights(const PathEnsemble& e);

// Inverse of paths_to_heights.
PathEnsemble heights_to_paths(const HexagonShape& shape,
                              const std::vector<std::vector<int>>& h);

}  // namespace hextile
