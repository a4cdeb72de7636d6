#pragma once

#include <vector>

namespace toponav {

// Feature descriptor attached to landmarks and map nodes. All descriptors in
// one map share a fixed dimension.
using Descriptor = std::vector<double>;

// Euclidean distance between two descriptors of equal dimension.
// Throws std::invalid_argument on dimension mismatch.
double descriptor_distance(const Descriptor& f1, const Descriptor& f2);

// exp(-distance), in (0, 1]; 1 iff the descriptors are identical. One monotone
// convention serves both the node-insertion gate and the subgoal-diversity
// penalty.
double descriptor_similarity(const Descriptor& f1, const Descriptor& f2);

}  // namespace toponav
