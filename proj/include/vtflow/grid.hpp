#pragma once

#include <array>
#include <vector>

#include "vtflow/geometry.hpp"

namespace vtflow {

enum class GridKind { Circle, Torus2, Interval };

std::string to_string(GridKind kind);

// Uniform discretization of the source manifold M. Circle and torus2 wrap
// periodically; the interval carries the Neumann ghost reflection
// u[-1] = u[1], which makes the discrete normal derivative vanish
// identically at the endpoints.
class DomainGrid {
  public:
    static DomainGrid circle(int n);                  // s_k = k h, h = 2pi/n
    static DomainGrid torus2(int n, int m);           // periodic in both axes
    static DomainGrid interval(int n, double length); // s_k = k h, h = L/(n-1)

    GridKind kind() const { return kind_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int dim() const { return kind_ == GridKind::Torus2 ? 2 : 1; }
    int node_count() const { return kind_ == GridKind::Torus2 ? n_ * m_ : n_; }
    double length() const { return length_; }

    double hx() const;
    double hy() const;
    double min_h() const { return dim() == 2 ? std::min(hx(), hy()) : hx(); }

    // 1-D coordinate of node k (circle/interval).
    double coord(int k) const { return k * hx(); }
    // torus2 node index, row-major over (i, j) with wraparound.
    int at(int i, int j) const;

    bool periodic() const { return kind_ != GridKind::Interval; }

  private:
    DomainGrid(GridKind kind, int n, int m, double length)
        : kind_(kind), n_(n), m_(m), length_(length) {}

    GridKind kind_;
    int n_, m_;
    double length_;
};

enum class WeightKind { One, ExpCos };

// Positive weight f on M and the drift V = grad log f. For exp_cos the
// weight is f = exp(a cos s) on periodic axes and f = exp(a cos(pi s / L))
// on the interval (so V vanishes at the endpoints); on torus2 the weight
// depends on the first coordinate only.
class WeightField {
  public:
    static WeightField one(const DomainGrid& grid);
    static WeightField exp_cos(const DomainGrid& grid, double amplitude);

    WeightKind kind() const { return kind_; }
    double amplitude() const { return amplitude_; }
    bool is_one() const { return kind_ == WeightKind::One; }

    const std::vector<double>& f() const { return f_; }
    // V components per node; second component used on torus2 only.
    const std::vector<std::array<double, 2>>& v() const { return v_; }

    // Weight at the midpoint of the link leaving node k along axis
    // (0 = x/s, 1 = y); evaluated analytically.
    double f_mid(const DomainGrid& grid, int k, int axis) const;

  private:
    WeightField(WeightKind kind, double amplitude)
        : kind_(kind), amplitude_(amplitude) {}

    double eval(const DomainGrid& grid, double s) const;

    WeightKind kind_;
    double amplitude_;
    const DomainGrid* grid_ = nullptr;
    std::vector<double> f_;
    std::vector<std::array<double, 2>> v_;
};

// Grid-indexed family of ambient points representing u : M -> N.
struct MapField {
    std::vector<Vec3> nodes;

    MapField() = default;
    explicit MapField(std::vector<Vec3> values) : nodes(std::move(values)) {}

    int size() const { return static_cast<int>(nodes.size()); }
    // Max distance of any node from the target.
    double constraint_err(const EmbeddedTarget& target) const;
    // Node-wise closest-point projection.
    void project(const EmbeddedTarget& target);
};

void require_shape(const DomainGrid& grid, const MapField& u, const char* op);

// Second-order central differences (ghost reflection on the interval).
// Result: one derivative field per grid axis.
std::vector<std::vector<Vec3>> first_derivative(const DomainGrid& grid, const MapField& u);

// 3-point / 5-point Laplacian.
std::vector<Vec3> laplacian(const DomainGrid& grid, const MapField& u);

// Delta_V u = Delta u + du(V), with the central derivative in the V term.
std::vector<Vec3> v_laplacian(const DomainGrid& grid, const WeightField& weight,
                              const MapField& u);

// Divergence-form weighted Laplacian D-(f_mid D+ u) / f: the exact negative
// gradient of the discrete Dirichlet energy in the f-weighted metric.
// Coincides bitwise with laplacian() when f is identically one.
std::vector<Vec3> weighted_laplacian(const DomainGrid& grid, const WeightField& weight,
                                     const MapField& u);

// Node quadrature weights (midpoint on periodic grids, trapezoid on the
// interval).
std::vector<double> quadrature_weights(const DomainGrid& grid);

// integral of density * f over M.
double integrate(const DomainGrid& grid, const WeightField& weight,
                 const std::vector<double>& density);

}  // namespace vtflow
