#pragma once

#include <span>

#include <Eigen/Dense>

#include "superconf/geometry.hpp"
#include "superconf/jets.hpp"
#include "superconf/minimal.hpp"

namespace superconf {

enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
const char* to_string(Sign s);

// Below this, ξ = −h^N/(a r) is not formed and the geometry normal frame is used.
inline constexpr double kAFloor = 1e-6;
inline constexpr double kASmall = 0.05;

// 4D triple cross product: ⟨C(a, b, c), d⟩ = det[a, b, c, d].
Eigen::Vector4d cross3(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c);
Jet2Vec4 cross3(const Jet2Vec4& a, const Jet2Vec4& b, const Jet2Vec4& c);

// Tangent quantities are stored both as ambient vectors (pushed forward by g)
// and as components on the orthonormal basis (∂u, ∂v)/√E.
struct ConstructionFrame {
    Jet2 r;
    Jet2 r_u, r_v;  // coordinate partials of r, each with its own jet
    Eigen::Vector2d grad_r;  // orthonormal components of ∇r
    double grad_norm = 0;
    Jet2 a;                  // full jet only where a > kAFloor
    bool a_defined = false;  // ξ taken from h^N
    Eigen::Vector2d Z;
    Eigen::Vector2d Tvec;
    Eigen::Vector4d g_Z, g_T, g_grad;  // pushed forward by g
    Eigen::Vector4d xi, delta, delta_plus, delta_minus;
    Eigen::Matrix2d hess_r;
    Eigen::Matrix2d S;
    Eigen::Matrix2d B_xi;
    double bxi_residual = 0;          // max-entry of a r B_ξ − (r Hess r − S)∘J
    double bxi_scale = 0;             // max-entry of (r Hess r − S)
    double decomposition_residual = 0;  // ‖h + r(g_*Z + aξ)‖ / r
    double g_area = 0;                  // area element √(EG − F²) of g
};

ConstructionFrame construction_frame(const MinimalPair& pair, cplx z);
ConstructionFrame construction_frame(const PairSample& s);

struct RegularityFlags {
    bool a_small = false;
    bool g_holomorphic_point = false;
    bool rank_deficient = false;

    bool any() const { return a_small || g_holomorphic_point || rank_deficient; }
    unsigned bits() const {
        return (a_small ? 1u : 0u) | (g_holomorphic_point ? 2u : 0u) | (rank_deficient ? 4u : 0u);
    }
};

struct PhiSample {
    Sign sign = Sign::plus;
    Jet2Vec4 phi;
    ConstructionFrame frame;
    RegularityFlags flags;
    double route_difference = 0;  // ‖(g + 𝒥h) − (g − r g_*∇r ± a r δ)‖ where a > kAFloor
    double holomorphic_residual = 0;  // ‖B_{Ĵβ} + B_β∘J‖ relative, for the flag
};

PhiSample build_phi(const MinimalPair& pair, Sign sign, cplx z);
PhiSample build_phi(const PairSample& s, Sign sign);

RegularityFlags regularity_flags(const PhiSample& sample);

struct DualPairReport {
    double center_residual[2] = {0, 0};   // ‖φ± + H±/‖H±‖² − g‖·‖H±‖
    double conformal_residual[2] = {0, 0};
    double metric_relation = 0;
    double tangency_residual[2] = {0, 0};
    double mu[2] = {0, 0};
};

DualPairReport dual_pair_report(const MinimalPair& pair, cplx z);

// |‖φ^{h+v}(z) − φ^h(z)‖ − ‖v‖| over both signs.
double translation_residual(const MinimalPair& pair, const Eigen::Vector4d& v, cplx z);

struct ExtractedPair {
    Eigen::Vector4d g;
    Eigen::Vector4d h;
    double lambda = 0;
    double mu = 0;
    bool tangent_orientation_flipped = false;
};

// g = φ + η/‖H‖, h = −ζ/‖H‖ with ζ from the oriented adapted frame.
ExtractedPair extract_minimal_pair(std::span<const Jet2> sample, double tol = 1e-6);

// φ± as a point-evaluable surface (for fd_crosscheck and exports).
SurfaceMap phi_map(const MinimalPair& pair, Sign sign);

}  // namespace superconf
