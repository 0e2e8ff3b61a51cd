#pragma once

#include <Eigen/Core>

namespace elastica {

using Vec2 = Eigen::Vector2d;

// Rigid motion of the plane, y = R(rotation) * x + translation.
struct PlanarIsometry {
    double rotation = 0.0;          // radians, counterclockwise
    Vec2 translation = Vec2::Zero();

    Vec2 apply(const Vec2& x) const {
        const double c = std::cos(rotation), s = std::sin(rotation);
        return Vec2(c * x.x() - s * x.y() + translation.x(),
                    s * x.x() + c * x.y() + translation.y());
    }

    // Rotation part only (for tangent vectors).
    Vec2 rotate(const Vec2& v) const {
        const double c = std::cos(rotation), s = std::sin(rotation);
        return Vec2(c * v.x() - s * v.y(), s * v.x() + c * v.y());
    }

    PlanarIsometry inverse() const {
        PlanarIsometry inv;
        inv.rotation = -rotation;
        inv.translation = -inv.rotate(translation);
        return inv;
    }

    // this ∘ other (apply `other` first).
    PlanarIsometry compose(const PlanarIsometry& other) const {
        PlanarIsometry out;
        out.rotation = rotation + other.rotation;
        out.translation = apply(other.translation);
        return out;
    }
};

} // namespace elastica
