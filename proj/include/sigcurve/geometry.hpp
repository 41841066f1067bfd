#pragma once

#include <Eigen/Dense>

#include "sigcurve/errors.hpp"

namespace sigcurve {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class GroupKind { SE2, Affine };

/// A rigid motion or invertible affine map of the plane: x -> linear*x + translation.
struct GroupElement {
    GroupKind kind = GroupKind::SE2;
    Mat2 linear = Mat2::Identity();
    Vec2 translation = Vec2::Zero();

    static GroupElement identity(GroupKind k = GroupKind::SE2) {
        return GroupElement{k, Mat2::Identity(), Vec2::Zero()};
    }

    static GroupElement rotation(double angle, const Vec2& t = Vec2::Zero()) {
        Mat2 r;
        r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
        return GroupElement{GroupKind::SE2, r, t};
    }

    Vec2 apply(const Vec2& p) const { return linear * p + translation; }

    GroupElement inverse() const {
        Mat2 inv = linear.inverse();
        return GroupElement{kind, inv, -(inv * translation)};
    }

    /// Composition acting as (*this) after `other`: (this*other)(x) = this(other(x)).
    GroupElement compose(const GroupElement& other) const {
        GroupKind k = (kind == GroupKind::SE2 && other.kind == GroupKind::SE2)
                          ? GroupKind::SE2
                          : GroupKind::Affine;
        return GroupElement{k, linear * other.linear, linear * other.translation + translation};
    }

    void validate(double tol = 1e-9) const {
        if (kind == GroupKind::SE2) {
            Mat2 gram = linear.transpose() * linear;
            if ((gram - Mat2::Identity()).cwiseAbs().maxCoeff() > tol ||
                std::abs(linear.determinant() - 1.0) > tol)
                throw InvalidInput("SE2 linear part must be a rotation");
        } else if (std::abs(linear.determinant()) < tol) {
            throw InvalidInput("affine linear part must be invertible");
        }
    }
};

}  // namespace sigcurve
