#include "vtflow/geometry.hpp"

#include <cmath>
#include <sstream>

namespace vtflow {

namespace {

std::string fmt_point(const Vec3& p) {
    std::ostringstream os;
    os << "(" << p.x() << ", " << p.y() << ", " << p.z() << ")";
    return os.str();
}

}  // namespace

std::string to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::Sphere: return "sphere";
        case TargetKind::Torus: return "torus_of_revolution";
        case TargetKind::FlatPlane: return "flat_plane_patch";
    }
    return "?";
}

EmbeddedTarget EmbeddedTarget::sphere(double radius) {
    if (!(radius > 0.0)) throw Error("sphere radius must be positive");
    return EmbeddedTarget(TargetKind::Sphere, radius, 0.0);
}

EmbeddedTarget EmbeddedTarget::torus(double major_radius, double minor_radius) {
    if (!(major_radius > minor_radius) || !(minor_radius > 0.0)) {
        throw Error("torus requires R > r > 0");
    }
    return EmbeddedTarget(TargetKind::Torus, major_radius, minor_radius);
}

EmbeddedTarget EmbeddedTarget::flat_plane() {
    return EmbeddedTarget(TargetKind::FlatPlane, 1.0, 0.0);
}

double EmbeddedTarget::tubular_radius() const {
    switch (kind_) {
        case TargetKind::Sphere: return a_;
        case TargetKind::Torus: return b_;
        case TargetKind::FlatPlane: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

double EmbeddedTarget::distance(const Vec3& p) const {
    switch (kind_) {
        case TargetKind::Sphere:
            return std::abs(p.norm() - a_);
        case TargetKind::Torus: {
            const double s = std::hypot(p.x(), p.y());
            const double d = std::hypot(s - a_, p.z());
            return std::abs(d - b_);
        }
        case TargetKind::FlatPlane:
            return std::abs(p.z());
    }
    return 0.0;
}

Vec3 EmbeddedTarget::closest_point(const Vec3& p) const {
    // Requests beyond 0.9x the tubular radius are refused: the extension of
    // the target data to the ambient space is only defined on the tube.
    const double max_dist = 0.9 * tubular_radius();
    switch (kind_) {
        case TargetKind::Sphere: {
            const double norm = p.norm();
            if (norm < 0.1 * a_ || std::abs(norm - a_) > max_dist) {
                throw OutsideTubularNeighborhood(
                    "sphere projection undefined at " + fmt_point(p));
            }
            return (a_ / norm) * p;
        }
        case TargetKind::Torus: {
            const double s = std::hypot(p.x(), p.y());
            if (s < 0.1 * b_) {
                throw OutsideTubularNeighborhood(
                    "torus projection ambiguous on the axis, at " + fmt_point(p));
            }
            const Vec3 ring(a_ * p.x() / s, a_ * p.y() / s, 0.0);
            const Vec3 offset = p - ring;
            const double d = offset.norm();
            if (d < 0.1 * b_ || std::abs(d - b_) > max_dist) {
                throw OutsideTubularNeighborhood(
                    "torus projection undefined at " + fmt_point(p));
            }
            return ring + (b_ / d) * offset;
        }
        case TargetKind::FlatPlane:
            return {p.x(), p.y(), 0.0};
    }
    return p;
}

Vec3 EmbeddedTarget::unit_normal(const Vec3& p) const {
    switch (kind_) {
        case TargetKind::Sphere:
            return p.normalized();
        case TargetKind::Torus: {
            const double s = std::hypot(p.x(), p.y());
            const Vec3 ring(a_ * p.x() / s, a_ * p.y() / s, 0.0);
            return (p - ring).normalized();
        }
        case TargetKind::FlatPlane:
            return Vec3::UnitZ();
    }
    return Vec3::UnitZ();
}

void EmbeddedTarget::require_on_manifold(const Vec3& p, const char* op) const {
    const double d = distance(p);
    if (d > proj_tol_) {
        std::ostringstream os;
        os << op << ": point " << fmt_point(p) << " is off the target by " << d
           << " (tolerance " << proj_tol_ << ")";
        throw PointOffManifold(os.str());
    }
}

Vec3 EmbeddedTarget::tangent_project_unchecked(const Vec3& p, const Vec3& v) const {
    const Vec3 q = (distance(p) == 0.0) ? p : closest_point(p);
    const Vec3 n = unit_normal(q);
    return v - n.dot(v) * n;
}

Vec3 EmbeddedTarget::tangent_project(const Vec3& p, const Vec3& v) const {
    require_on_manifold(p, "tangent_project");
    const Vec3 n = unit_normal(p);
    return v - n.dot(v) * n;
}

Vec3 EmbeddedTarget::second_fundamental_form(const Vec3& p, const Vec3& X,
                                             const Vec3& Y) const {
    require_on_manifold(p, "second_fundamental_form");
    // II(X, Y) = normal part of D_X (P(.) Y~), with Y~ the constant ambient
    // extension of Y and P the tangent projector field on the tube.
    const double h = kSffStep;
    const Vec3 plus = tangent_project_unchecked(closest_point(p + h * X), Y);
    const Vec3 minus = tangent_project_unchecked(closest_point(p - h * X), Y);
    const Vec3 deriv = (plus - minus) / (2.0 * h);
    const Vec3 n = unit_normal(p);
    return n.dot(deriv) * n;
}

double EmbeddedTarget::sectional_curvature(const Vec3& p, const Vec3& X,
                                           const Vec3& Y) const {
    require_on_manifold(p, "sectional_curvature");
    const double gram = X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2);
    const double scale = X.squaredNorm() * Y.squaredNorm();
    if (gram <= kPlaneTol * std::max(scale, 1e-300)) {
        throw DegeneratePlane("sectional_curvature: vectors span no 2-plane");
    }
    const Vec3 ii_xx = second_fundamental_form(p, X, X);
    const Vec3 ii_yy = second_fundamental_form(p, Y, Y);
    const Vec3 ii_xy = second_fundamental_form(p, X, Y);
    return (ii_xx.dot(ii_yy) - ii_xy.squaredNorm()) / gram;
}

Vec2 EmbeddedTarget::chart(const Vec3& p) const {
    switch (kind_) {
        case TargetKind::Sphere: {
            const double norm = p.norm();
            const double c = std::clamp(p.z() / norm, -1.0, 1.0);
            return {std::acos(c), std::atan2(p.y(), p.x())};
        }
        case TargetKind::Torus: {
            const double s = std::hypot(p.x(), p.y());
            return {std::atan2(p.z(), s - a_), std::atan2(p.y(), p.x())};
        }
        case TargetKind::FlatPlane:
            return {p.x(), p.y()};
    }
    return {0.0, 0.0};
}

Vec3 EmbeddedTarget::chart_point(double theta, double phi) const {
    switch (kind_) {
        case TargetKind::Sphere:
            return {a_ * std::sin(theta) * std::cos(phi),
                    a_ * std::sin(theta) * std::sin(phi), a_ * std::cos(theta)};
        case TargetKind::Torus: {
            const double ring = a_ + b_ * std::cos(theta);
            return {ring * std::cos(phi), ring * std::sin(phi), b_ * std::sin(theta)};
        }
        case TargetKind::FlatPlane:
            return {theta, phi, 0.0};
    }
    return Vec3::Zero();
}

void EmbeddedTarget::chart_gradients(const Vec3& p, Vec3& grad_theta,
                                     Vec3& grad_phi) const {
    switch (kind_) {
        case TargetKind::Sphere: {
            const Vec2 tp = chart(p);
            const double st = std::sin(tp[0]), ct = std::cos(tp[0]);
            const double sp = std::sin(tp[1]), cp = std::cos(tp[1]);
            grad_theta = Vec3(ct * cp, ct * sp, -st) / a_;
            // phi is degenerate at the poles; tables are phi-constant there.
            grad_phi = (st < 1e-8) ? Vec3::Zero()
                                   : Vec3(-sp, cp, 0.0) / (a_ * st);
            return;
        }
        case TargetKind::Torus: {
            const Vec2 tp = chart(p);
            const double st = std::sin(tp[0]), ct = std::cos(tp[0]);
            const double sp = std::sin(tp[1]), cp = std::cos(tp[1]);
            grad_theta = Vec3(-st * cp, -st * sp, ct) / b_;
            grad_phi = Vec3(-sp, cp, 0.0) / (a_ + b_ * ct);
            return;
        }
        case TargetKind::FlatPlane:
            grad_theta = Vec3::UnitX();
            grad_phi = Vec3::UnitY();
            return;
    }
}

void EmbeddedTarget::tangent_basis(const Vec3& p, Vec3& e1, Vec3& e2) const {
    const Vec3 n = unit_normal(p);
    Vec3 h = (std::abs(n.z()) < 0.9) ? Vec3::UnitZ() : Vec3::UnitX();
    e1 = (h - n.dot(h) * n).normalized();
    e2 = n.cross(e1);
}

}  // namespace vtflow
