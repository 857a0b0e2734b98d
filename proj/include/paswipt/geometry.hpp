// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: basic geometry types.
#pragma once

#include <cmath>
#include <stdexcept>

namespace paswipt {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Euclidean distance between two points, in meters.
inline double distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!std::isfinite(d)) {
        throw std::invalid_argument("distance: non-finite coordinates");
    }
    return d;
}

}  // namespace paswipt
