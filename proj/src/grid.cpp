#include "vtflow/grid.hpp"

#include <cmath>

namespace vtflow {

std::string to_string(GridKind kind) {
    switch (kind) {
        case GridKind::Circle: return "circle";
        case GridKind::Torus2: return "torus2";
        case GridKind::Interval: return "interval";
    }
    return "?";
}

DomainGrid DomainGrid::circle(int n) {
    if (n < 8) throw Error("circle grid needs n >= 8");
    return DomainGrid(GridKind::Circle, n, 1, 2.0 * M_PI);
}

DomainGrid DomainGrid::torus2(int n, int m) {
    if (n < 8 || m < 8) throw Error("torus2 grid needs n, m >= 8");
    return DomainGrid(GridKind::Torus2, n, m, 2.0 * M_PI);
}

DomainGrid DomainGrid::interval(int n, double length) {
    if (n < 8) throw Error("interval grid needs n >= 8");
    if (!(length > 0.0)) throw Error("interval length must be positive");
    return DomainGrid(GridKind::Interval, n, 1, length);
}

double DomainGrid::hx() const {
    switch (kind_) {
        case GridKind::Circle: return 2.0 * M_PI / n_;
        case GridKind::Torus2: return 2.0 * M_PI / n_;
        case GridKind::Interval: return length_ / (n_ - 1);
    }
    return 0.0;
}

double DomainGrid::hy() const {
    return kind_ == GridKind::Torus2 ? 2.0 * M_PI / m_ : 0.0;
}

int DomainGrid::at(int i, int j) const {
    const int ii = ((i % n_) + n_) % n_;
    const int jj = ((j % m_) + m_) % m_;
    return ii * m_ + jj;
}

WeightField WeightField::one(const DomainGrid& grid) {
    WeightField w(WeightKind::One, 0.0);
    w.grid_ = nullptr;
    w.f_.assign(grid.node_count(), 1.0);
    w.v_.assign(grid.node_count(), {0.0, 0.0});
    return w;
}

double WeightField::eval(const DomainGrid& grid, double s) const {
    if (kind_ == WeightKind::One) return 1.0;
    const double arg = (grid.kind() == GridKind::Interval)
                           ? M_PI * s / grid.length()
                           : s;
    return std::exp(amplitude_ * std::cos(arg));
}

WeightField WeightField::exp_cos(const DomainGrid& grid, double amplitude) {
    WeightField w(WeightKind::ExpCos, amplitude);
    const int count = grid.node_count();
    w.f_.resize(count);
    w.v_.resize(count);
    if (grid.kind() == GridKind::Torus2) {
        for (int i = 0; i < grid.n(); ++i) {
            const double x = i * grid.hx();
            const double f = std::exp(amplitude * std::cos(x));
            const double v = -amplitude * std::sin(x);
            for (int j = 0; j < grid.m(); ++j) {
                w.f_[grid.at(i, j)] = f;
                w.v_[grid.at(i, j)] = {v, 0.0};
            }
        }
    } else {
        const double freq = (grid.kind() == GridKind::Interval)
                                ? M_PI / grid.length()
                                : 1.0;
        for (int k = 0; k < count; ++k) {
            const double s = grid.coord(k);
            w.f_[k] = std::exp(amplitude * std::cos(freq * s));
            w.v_[k] = {-amplitude * freq * std::sin(freq * s), 0.0};
        }
    }
    return w;
}

double WeightField::f_mid(const DomainGrid& grid, int k, int axis) const {
    if (kind_ == WeightKind::One) return 1.0;
    if (grid.kind() == GridKind::Torus2) {
        const int i = k / grid.m();
        const double x = i * grid.hx();
        // weight depends on x only; a y-link midpoint sees the node value
        const double xm = (axis == 0) ? x + 0.5 * grid.hx() : x;
        return std::exp(amplitude_ * std::cos(xm));
    }
    return eval(grid, grid.coord(k) + 0.5 * grid.hx());
}

double MapField::constraint_err(const EmbeddedTarget& target) const {
    double worst = 0.0;
    for (const Vec3& p : nodes) worst = std::max(worst, target.distance(p));
    return worst;
}

void MapField::project(const EmbeddedTarget& target) {
    for (Vec3& p : nodes) p = target.closest_point(p);
}

void require_shape(const DomainGrid& grid, const MapField& u, const char* op) {
    if (u.size() != grid.node_count()) {
        throw ShapeMismatch(std::string(op) + ": field has " +
                            std::to_string(u.size()) + " nodes, grid expects " +
                            std::to_string(grid.node_count()));
    }
}

namespace {

// Neighbor values on the interval with ghost reflection u[-1] = u[1],
// u[n] = u[n-2].
inline const Vec3& reflect(const std::vector<Vec3>& u, int k) {
    const int n = static_cast<int>(u.size());
    if (k < 0) return u[-k];
    if (k >= n) return u[2 * n - 2 - k];
    return u[k];
}

}  // namespace

std::vector<std::vector<Vec3>> first_derivative(const DomainGrid& grid, const MapField& u) {
    require_shape(grid, u, "first_derivative");
    const auto& nodes = u.nodes;
    std::vector<std::vector<Vec3>> out;
    switch (grid.kind()) {
        case GridKind::Circle: {
            const int n = grid.n();
            const double inv = 1.0 / (2.0 * grid.hx());
            std::vector<Vec3> d(n);
            for (int k = 0; k < n; ++k) {
                d[k] = (nodes[(k + 1) % n] - nodes[(k + n - 1) % n]) * inv;
            }
            out.push_back(std::move(d));
            return out;
        }
        case GridKind::Interval: {
            const int n = grid.n();
            const double inv = 1.0 / (2.0 * grid.hx());
            std::vector<Vec3> d(n);
            for (int k = 0; k < n; ++k) {
                d[k] = (reflect(nodes, k + 1) - reflect(nodes, k - 1)) * inv;
            }
            out.push_back(std::move(d));
            return out;
        }
        case GridKind::Torus2: {
            const int n = grid.n(), m = grid.m();
            const double invx = 1.0 / (2.0 * grid.hx());
            const double invy = 1.0 / (2.0 * grid.hy());
            std::vector<Vec3> dx(n * m), dy(n * m);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < m; ++j) {
                    const int k = grid.at(i, j);
                    dx[k] = (nodes[grid.at(i + 1, j)] - nodes[grid.at(i - 1, j)]) * invx;
                    dy[k] = (nodes[grid.at(i, j + 1)] - nodes[grid.at(i, j - 1)]) * invy;
                }
            }
            out.push_back(std::move(dx));
            out.push_back(std::move(dy));
            return out;
        }
    }
    return out;
}

std::vector<Vec3> laplacian(const DomainGrid& grid, const MapField& u) {
    require_shape(grid, u, "laplacian");
    const auto& nodes = u.nodes;
    std::vector<Vec3> out(grid.node_count());
    switch (grid.kind()) {
        case GridKind::Circle: {
            const int n = grid.n();
            const double inv = 1.0 / (grid.hx() * grid.hx());
            for (int k = 0; k < n; ++k) {
                out[k] = (nodes[(k + 1) % n] - 2.0 * nodes[k] + nodes[(k + n - 1) % n]) * inv;
            }
            return out;
        }
        case GridKind::Interval: {
            const int n = grid.n();
            const double inv = 1.0 / (grid.hx() * grid.hx());
            for (int k = 0; k < n; ++k) {
                out[k] = (reflect(nodes, k + 1) - 2.0 * nodes[k] + reflect(nodes, k - 1)) * inv;
            }
            return out;
        }
        case GridKind::Torus2: {
            const int n = grid.n(), m = grid.m();
            const double invx = 1.0 / (grid.hx() * grid.hx());
            const double invy = 1.0 / (grid.hy() * grid.hy());
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < m; ++j) {
                    const int k = grid.at(i, j);
                    out[k] = (nodes[grid.at(i + 1, j)] - 2.0 * nodes[k] +
                              nodes[grid.at(i - 1, j)]) * invx +
                             (nodes[grid.at(i, j + 1)] - 2.0 * nodes[k] +
                              nodes[grid.at(i, j - 1)]) * invy;
                }
            }
            return out;
        }
    }
    return out;
}

std::vector<Vec3> v_laplacian(const DomainGrid& grid, const WeightField& weight,
                              const MapField& u) {
    require_shape(grid, u, "v_laplacian");
    if (static_cast<int>(weight.f().size()) != grid.node_count()) {
        throw ShapeMismatch("v_laplacian: weight does not conform to grid");
    }
    std::vector<Vec3> out = laplacian(grid, u);
    if (weight.is_one()) return out;  // V = 0: bitwise equal to laplacian
    const auto du = first_derivative(grid, u);
    for (int k = 0; k < grid.node_count(); ++k) {
        out[k] += weight.v()[k][0] * du[0][k];
        if (grid.dim() == 2) out[k] += weight.v()[k][1] * du[1][k];
    }
    return out;
}

std::vector<Vec3> weighted_laplacian(const DomainGrid& grid, const WeightField& weight,
                                     const MapField& u) {
    require_shape(grid, u, "weighted_laplacian");
    if (weight.is_one()) return laplacian(grid, u);
    const auto& nodes = u.nodes;
    const auto& f = weight.f();
    std::vector<Vec3> out(grid.node_count(), Vec3::Zero());
    switch (grid.kind()) {
        case GridKind::Circle: {
            const int n = grid.n();
            const double inv = 1.0 / (grid.hx() * grid.hx());
            for (int k = 0; k < n; ++k) {
                const int prev = (k + n - 1) % n;
                const Vec3 flux_out = weight.f_mid(grid, k, 0) * (nodes[(k + 1) % n] - nodes[k]);
                const Vec3 flux_in = weight.f_mid(grid, prev, 0) * (nodes[k] - nodes[prev]);
                out[k] = (flux_out - flux_in) * inv / f[k];
            }
            return out;
        }
        case GridKind::Interval: {
            const int n = grid.n();
            const double inv = 1.0 / (grid.hx() * grid.hx());
            for (int k = 0; k < n; ++k) {
                Vec3 acc = Vec3::Zero();
                if (k + 1 < n) acc += weight.f_mid(grid, k, 0) * (nodes[k + 1] - nodes[k]);
                if (k > 0) acc -= weight.f_mid(grid, k - 1, 0) * (nodes[k] - nodes[k - 1]);
                // trapezoid node weight: h/2 at the endpoints
                const double node_w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
                out[k] = acc * inv / (f[k] * node_w);
            }
            return out;
        }
        case GridKind::Torus2: {
            const int n = grid.n(), m = grid.m();
            const double invx = 1.0 / (grid.hx() * grid.hx());
            const double invy = 1.0 / (grid.hy() * grid.hy());
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < m; ++j) {
                    const int k = grid.at(i, j);
                    const int left = grid.at(i - 1, j);
                    const int down = grid.at(i, j - 1);
                    Vec3 acc =
                        (weight.f_mid(grid, k, 0) * (nodes[grid.at(i + 1, j)] - nodes[k]) -
                         weight.f_mid(grid, left, 0) * (nodes[k] - nodes[left])) * invx;
                    acc += (weight.f_mid(grid, k, 1) * (nodes[grid.at(i, j + 1)] - nodes[k]) -
                            weight.f_mid(grid, down, 1) * (nodes[k] - nodes[down])) * invy;
                    out[k] = acc / f[k];
                }
            }
            return out;
        }
    }
    return out;
}

std::vector<double> quadrature_weights(const DomainGrid& grid) {
    std::vector<double> w(grid.node_count());
    switch (grid.kind()) {
        case GridKind::Circle:
            std::fill(w.begin(), w.end(), grid.hx());
            return w;
        case GridKind::Torus2:
            std::fill(w.begin(), w.end(), grid.hx() * grid.hy());
            return w;
        case GridKind::Interval: {
            std::fill(w.begin(), w.end(), grid.hx());
            w.front() = 0.5 * grid.hx();
            w.back() = 0.5 * grid.hx();
            return w;
        }
    }
    return w;
}

double integrate(const DomainGrid& grid, const WeightField& weight,
                 const std::vector<double>& density) {
    if (static_cast<int>(density.size()) != grid.node_count()) {
        throw ShapeMismatch("integrate: density does not conform to grid");
    }
    const auto w = quadrature_weights(grid);
    const auto& f = weight.f();
    double acc = 0.0;
    for (int k = 0; k < grid.node_count(); ++k) acc += density[k] * f[k] * w[k];
    return acc;
}

}  // namespace vtflow
