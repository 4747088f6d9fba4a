#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vtflow/geometry.hpp"

namespace vtflow {

enum class PhiKind { Zero, MetricMultiple, AmbientBilinear, Sampled };

std::string to_string(PhiKind kind);

// Coefficient table over the target's chart rectangle. Structured tables
// (a complete tensor-product grid) are interpolated bilinearly inside each
// cell, with periodic wrap on periodic chart axes and clamping otherwise;
// anything else falls back to nearest-neighbor lookup.
struct SampledTable {
    std::vector<double> thetas;  // sorted axis values
    std::vector<double> phis;
    std::vector<Mat3> coeffs;  // [i_theta * phis.size() + j_phi]
    bool structured = false;
    std::vector<Vec2> raw_points;  // nearest-neighbor fallback data
    std::vector<Mat3> raw_coeffs;

    // Builds the table from flat (theta, phi) points + 3x3 row-major blocks,
    // detecting tensor-product structure.
    static SampledTable build(const std::vector<Vec2>& points,
                              const std::vector<Mat3>& values);

    // Interpolated coefficients; periods <= 0 mean clamped axes.
    Mat3 value(double theta, double phi, double theta_period, double phi_period) const;
    // In-cell partial derivatives of the interpolant.
    void partials(double theta, double phi, double theta_period, double phi_period,
                  Mat3& d_theta, Mat3& d_phi) const;
};

// The tensor Phi as an ambient (0,2) coefficient field restricted to N.
class PhiSpec {
  public:
    static PhiSpec zero();
    static PhiSpec metric_multiple(double lambda);
    static PhiSpec ambient_bilinear(const Mat3& B);
    static PhiSpec sampled(SampledTable table);
    // External interface: {"grid": [[theta, phi], ...], "coeffs": [[9 reals], ...]}.
    static PhiSpec sampled_from_json_file(const std::string& path);
    static PhiSpec sampled_from_json_text(const std::string& text);

    PhiKind kind() const { return kind_; }
    double lambda() const { return lambda_; }
    const Mat3& bilinear() const { return bilinear_; }
    const SampledTable& table() const { return *table_; }

    // T vanishes identically for coefficient fields with zero derivative.
    bool constant_coefficients() const { return kind_ != PhiKind::Sampled; }

    // Coefficient matrix at p. The chart functions are constant along
    // normal directions, so p may sit anywhere in the tube.
    Mat3 coeff(const EmbeddedTarget& target, const Vec3& p) const;

    // Tangential ambient gradient of the coefficients: out[m] = dC/dx_m.
    std::array<Mat3, 3> coeff_gradient(const EmbeddedTarget& target, const Vec3& p) const;

  private:
    explicit PhiSpec(PhiKind kind) : kind_(kind) {}

    PhiKind kind_;
    double lambda_ = 0.0;
    Mat3 bilinear_ = Mat3::Zero();
    std::shared_ptr<const SampledTable> table_;
};

// Phi(Y, Z) at p. Throws PointOffManifold beyond the projection tolerance.
double phi_eval(const PhiSpec& phi, const EmbeddedTarget& target, const Vec3& p,
                const Vec3& Y, const Vec3& Z);

struct SupNormResult {
    double value = 0.0;
    int samples = 0;
};

inline constexpr std::uint64_t kGateSeed = 0xC0FFEE;
inline constexpr int kGateSamples = 4096;

// max |Phi(Y, Z)| over sampled points and unit tangent pairs. The sample
// stream interleaves a low-discrepancy chart walk with canonical frame
// pairs (which attain the sup exactly for metric multiples) and seeded
// random pairs; prefixes are stable in `samples`.
SupNormResult phi_sup_norm(const PhiSpec& phi, const EmbeddedTarget& target,
                           int samples, std::uint64_t seed = kGateSeed);

// The strict coefficient gate used by config validation.
bool phi_gate_passes(double sup_norm);

// T(Y, Z): tangent vector with <T(Y,Z), X> = (D_X Phi)(Y, Z) for every
// tangent X, the ambient directional derivative taken with the constant
// extension of X.
Vec3 t_pointwise(const PhiSpec& phi, const EmbeddedTarget& target, const Vec3& p,
                 const Vec3& Y, const Vec3& Z);

inline constexpr double kNablaTStep = 1e-4;

// (nabla T)(X, Y, Z): tangential finite difference of t_pointwise along a
// projected step in direction X, transporting Y, Z by projection.
Vec3 nabla_t(const PhiSpec& phi, const EmbeddedTarget& target, const Vec3& p,
             const Vec3& X, const Vec3& Y, const Vec3& Z);

struct ConditionParams {
    double c0 = 2.0;      // must be > 1
    double kappa = 0.0;   // reported curvature bound (informational)
    int sample_count = 10000;
    std::uint64_t seed = 0;
    int threads = 1;

    void validate() const;
};

struct ConditionWitness {
    Vec3 point = Vec3::Zero();
    Vec3 x = Vec3::Zero(), y = Vec3::Zero(), z = Vec3::Zero();
};

struct ConditionReport {
    bool satisfied = false;
    double worst_margin = 0.0;
    ConditionWitness witness;
    int samples = 0;
    double max_sectional_curvature = 0.0;  // over the sampled probes
};

// <R(X,Y)X,Y> + C0 |T(X,Y)|^2 - 1/2 <(nabla T)(X,Y,Z), X> <= 0 over sampled
// points and unit tangent frames; satisfied iff the worst margin is <= 0.
ConditionReport check_curvature_condition(const PhiSpec& phi, const EmbeddedTarget& target,
                                          const ConditionParams& params);

// 4 C0 |T(X,Y)|^2 + <(nabla T)(X,Y,Z), X> <= 0, same sampling.
ConditionReport check_tensor_condition(const PhiSpec& phi, const EmbeddedTarget& target,
                                       const ConditionParams& params);

}  // namespace vtflow
