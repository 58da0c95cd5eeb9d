#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tasksets {

using Coords2 = std::array<double, 2>;

enum class EmbedMethod { Linear, Neighbor };

EmbedMethod embed_method_from_string(const std::string& s); // throws InvalidConfig

// Column-standardized copy of the matrix with zero-variance columns dropped.
// Throws ZeroVarianceAllColumns when nothing is left.
std::vector<std::vector<double>> zscore_columns(const std::vector<std::vector<double>>& rows);

// 2D embedding of the feature rows, outputs paired 1:1 with inputs. Rows are
// z-scored per column first.
//
// Linear: projection onto the top-2 principal components, each axis
// sign-fixed so its largest-magnitude loading is positive. Fully
// deterministic; the seed is ignored.
//
// Neighbor: k-nearest-neighbor attraction / sampled repulsion layout started
// from the linear solution. Reproducible for a fixed seed.
//
// Throws TooFewPlayers (< 3 rows) and ZeroVarianceAllColumns.
std::vector<Coords2> embed_2d(const std::vector<std::vector<double>>& rows, EmbedMethod method,
                              uint64_t seed);

} // namespace tasksets
