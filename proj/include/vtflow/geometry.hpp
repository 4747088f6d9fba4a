#pragma once

#include <limits>
#include <string>

#include <Eigen/Dense>

#include "vtflow/errors.hpp"

namespace vtflow {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2d;

enum class TargetKind { Sphere, Torus, FlatPlane };

std::string to_string(TargetKind kind);

// Embedded target manifold N ⊂ ℝ³ with the extrinsic primitives the flow
// needs: closest-point projection, tangent projector, second fundamental
// form, and curvature probes. Projections are closed-form; the second
// fundamental form is the normal part of the derivative of the tangent
// projector field, differenced at step kSffStep.
//
// All member functions are pure with respect to the target; instances are
// immutable after construction and safe to share across threads.
class EmbeddedTarget {
  public:
    static EmbeddedTarget sphere(double radius);
    static EmbeddedTarget torus(double major_radius, double minor_radius);
    static EmbeddedTarget flat_plane();

    static constexpr double kSffStep = 1e-5;

    TargetKind kind() const { return kind_; }
    int ambient_dim() const { return 3; }
    int dim() const { return 2; }

    double projection_tolerance() const { return proj_tol_; }
    void set_projection_tolerance(double tol) { proj_tol_ = tol; }

    double radius() const { return a_; }        // sphere
    double major_radius() const { return a_; }  // torus R
    double minor_radius() const { return b_; }  // torus r

    // Radius of the tubular neighborhood where the projection is well
    // defined (sphere: radius, torus: minor radius, plane: unbounded).
    double tubular_radius() const;

    // Ambient distance from p to N (closed form).
    double distance(const Vec3& p) const;

    bool on_manifold(const Vec3& p) const { return distance(p) <= proj_tol_; }

    // Nearest point of N. Throws OutsideTubularNeighborhood if the request
    // is ambiguous or farther than 0.9x the tubular radius.
    Vec3 closest_point(const Vec3& p) const;

    // Unit normal at an on-manifold point.
    Vec3 unit_normal(const Vec3& p) const;

    // Orthogonal projection of v onto T_p N. Throws PointOffManifold when p
    // violates the projection tolerance.
    Vec3 tangent_project(const Vec3& p, const Vec3& v) const;

    // II(X, Y): normal-valued second fundamental form at p for tangent X, Y.
    Vec3 second_fundamental_form(const Vec3& p, const Vec3& X, const Vec3& Y) const;

    // Gauss-equation sectional curvature of span(X, Y). Throws
    // DegeneratePlane when |X ∧ Y|² falls below kPlaneTol relative.
    double sectional_curvature(const Vec3& p, const Vec3& X, const Vec3& Y) const;

    static constexpr double kPlaneTol = 1e-10;

    // Chart parameters (theta, phi) used by sampled coefficient tables.
    //   sphere: theta = polar angle in [0, pi], phi = azimuth in (-pi, pi]
    //   torus:  theta = tube angle, phi = axis angle, both in (-pi, pi]
    //   plane:  (x, y)
    Vec2 chart(const Vec3& p) const;
    Vec3 chart_point(double theta, double phi) const;
    bool chart_theta_periodic() const { return kind_ == TargetKind::Torus; }
    bool chart_phi_periodic() const { return kind_ != TargetKind::FlatPlane; }

    // Tangential ambient gradients of the chart functions at an on-manifold
    // point. Near chart degeneracies (sphere poles) the phi gradient is
    // zeroed; tables must be phi-constant there.
    void chart_gradients(const Vec3& p, Vec3& grad_theta, Vec3& grad_phi) const;

    // Deterministic orthonormal tangent basis at an on-manifold point.
    void tangent_basis(const Vec3& p, Vec3& e1, Vec3& e2) const;

    // Internal variant without the on-manifold precondition check: projects
    // p to N first. Used by finite-difference probes.
    Vec3 tangent_project_unchecked(const Vec3& p, const Vec3& v) const;

  private:
    EmbeddedTarget(TargetKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

    void require_on_manifold(const Vec3& p, const char* op) const;

    TargetKind kind_;
    double a_ = 1.0;  // sphere radius / torus major radius
    double b_ = 0.0;  // torus minor radius
    double proj_tol_ = 1e-8;
};

}  // namespace vtflow
