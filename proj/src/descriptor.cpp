#include "toponav/descriptor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace toponav {

double descriptor_distance(const Descriptor& f1, const Descriptor& f2) {
    if (f1.size() != f2.size()) {
        throw std::invalid_argument("descriptor dimension mismatch: " +
                                    std::to_string(f1.size()) + " vs " +
                                    std::to_string(f2.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        const double d = f1[i] - f2[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double descriptor_similarity(const Descriptor& f1, const Descriptor& f2) {
    return std::exp(-descriptor_distance(f1, f2));
}

}  // namespace toponav
