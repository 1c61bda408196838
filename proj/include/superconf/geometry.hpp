#pragma once

#include <span>

#include <Eigen/Dense>

#include "superconf/jets.hpp"

namespace superconf {

enum class AmbientKind { euclidean, sphere, hyperbolic };

// R⁴, or a space form of radius R inside R⁵ (sphere) / L⁵ (hyperbolic, last slot timelike).
struct Ambient {
    AmbientKind kind = AmbientKind::euclidean;
    double radius = 1.0;
    Eigen::VectorXd center;  // space forms only

    static Ambient euclidean();
    static Ambient sphere(double radius, const Eigen::VectorXd& center);
    static Ambient hyperbolic(double radius, const Eigen::VectorXd& center);

    int dimension() const { return kind == AmbientKind::euclidean ? 4 : 5; }
    bool lorentzian() const { return kind == AmbientKind::hyperbolic; }
    double curvature() const;
};

double ambient_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b, bool lorentzian);

// EG − F² must exceed this times scale⁴.
inline constexpr double kRegularityFloor = 1e-12;
// Ellipses smaller than this fraction of the curvature scale are read as points.
inline constexpr double kEllipseFloor = 1e-6;

struct FundamentalData {
    Ambient ambient;
    Eigen::VectorXd position;
    Eigen::VectorXd X_u, X_v;
    Eigen::VectorXd X_uu, X_uv, X_vv;
    double E = 0, F = 0, G = 0;
    // Oriented orthonormal tangent basis Ŷ1 = c(0,0)∂u, Ŷ2 = c(1,0)∂u + c(1,1)∂v.
    Eigen::Matrix2d tangent_coeffs;
    Eigen::VectorXd Y1, Y2;
    Eigen::VectorXd n1, n2;
    // Second form on (Ŷ1, Ŷ2): ambient vectors and their (n1, n2) components.
    Eigen::VectorXd a11, a12, a22;
    Eigen::Vector2d c11, c12, c22;
    Eigen::VectorXd H;
    Eigen::Vector2d Hc;
    double K = 0;
    double KN = 0;
    double lambda = 0;
    double scale = 0;  // max coordinate of X_u, X_v

    // Shape operator of the normal with (n1, n2) components `nu`, on (Ŷ1, Ŷ2).
    Eigen::Matrix2d shape(const Eigen::Vector2d& nu) const;
    // Largest second-form entry norm.
    double curvature_scale() const;
};

FundamentalData fundamental_data(std::span<const Jet2> sample, const Ambient& ambient = Ambient::euclidean());

struct EllipseDescriptor {
    Eigen::VectorXd center;
    double semi_major = 0;
    double semi_minor = 0;
    double res_orth = 0;
    double res_len = 0;
    double mu = 0;
};

EllipseDescriptor ellipse_descriptor(const FundamentalData& fd);

struct SuperconformalityReport {
    double res_orth = 0;
    double res_len = 0;
    double wintgen_defect = 0;
    double wintgen_relative = 0;  // |defect| / ‖H‖² (0 when H = 0)
    bool is_superconformal = false;
};

SuperconformalityReport superconformality_test(const FundamentalData& fd, double tol = 1e-8);

struct AdaptedFrame {
    Eigen::VectorXd Y1, Y2, eta, zeta;
    double lambda = 0;
    double mu = 0;
    double sffa_residual = 0;  // max-entry deviation from the (λ, μ) pattern over max(λ, μ)
    double KN = 0;             // normal curvature in this frame
    bool tangent_orientation_flipped = false;
};

AdaptedFrame adapted_frame(const FundamentalData& fd, double tol = 1e-6);

}  // namespace superconf
