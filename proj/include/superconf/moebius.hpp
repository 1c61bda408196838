#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "superconf/construct.hpp"
#include "superconf/geometry.hpp"
#include "superconf/jets.hpp"
#include "superconf/minimal.hpp"

namespace superconf {

enum class Signature { euclidean, lorentzian };

// Lorentzian products use ⟨x, y⟩ = x₁y₁ + … + x₄y₄ − x₅y₅.
struct Inversion {
    Eigen::VectorXd center;
    double radius = 1.0;
    Signature signature = Signature::euclidean;
};

Eigen::VectorXd invert(const Eigen::VectorXd& x, const Inversion& inv);
SurfaceJet invert(std::span<const Jet2> x, const Inversion& inv);

struct NormalTransformResidual {
    double norm_defect = 0;       // |‖Pξ‖ − 1|
    double normality_defect = 0;  // max |⟨Pξ, (I∘f)_*∂⟩| / ‖(I∘f)_*∂‖
    double shape_defect = 0;      // max-entry of Ã_{Pξ} − RHS, relative to max(1, RHS)
    double residual = 0;
};

// ξ must be a unit normal of f at the sample point.
NormalTransformResidual normal_transform_check(std::span<const Jet2> f, const Eigen::VectorXd& xi,
                                               const Inversion& inv);

using C4 = std::array<cplx, 4>;

// R² Z / ⟨⟨Z, Z⟩⟩.
C4 holomorphic_inversion(const C4& Z, double R);

// Holomorphic representative G + i v_offset at z.
C4 representative(const MinimalPair& pair, cplx z);

struct QuadricValue {
    std::vector<cplx> values;
    cplx mean = 0.0;
    double max_deviation = 0;
    double max_hermitian = 0;  // max ‖G‖² over the grid
};

QuadricValue quadric_values(const MinimalPair& pair, const Grid& grid);
bool is_constant(const QuadricValue& q);

struct PairTransformReport {
    bool hypothesis_violated = false;  // representative lies in Q₀
    // [sign][convention]: convention 0 is h̃ = −Im T_R(G − P0), convention 1 is h̃ = +Im T_R(G − P0).
    double sup_error[2][2] = {{0, 0}, {0, 0}};
    int matched[2] = {0, 0};
    std::size_t points = 0;
    std::size_t skipped = 0;  // flagged samples or failed extractions

    double best(int sign) const { return sup_error[sign][matched[sign]]; }
};

PairTransformReport pair_transform_check(const MinimalPair& pair, const Inversion& inv, const Grid& grid);

// The transformed curve P0 + T_R(G − P0) as a new holomorphic curve.
HolomorphicCurve transformed_curve(const MinimalPair& pair, const Eigen::Vector4d& center, double R);

struct DualityResult {
    Eigen::Vector4d f_star;
    Jet2Vec4 jet;
    double anti_holomorphic = 0;
    double involution = 0;
    double conformality = 0;
};

// f is a C² curve (components 0 and 1), viewed in R⁴ as (Re f1, Im f1, Re f2, Im f2).
DualityResult duality(const HolomorphicCurve& f, cplx z);

// Multiplication by i on C² ≅ R⁴.
Eigen::Vector4d complex_j(const Eigen::Vector4d& x);

struct InvertedPair {
    Eigen::Vector4d g;
    Eigen::Vector4d h;
    Eigen::Vector4d image;            // I∘f(z)
    double cross_check = 0;           // distance to extract_minimal_pair(I∘f), best h sign
    int extracted_h_sign = 1;         // +1 if the extracted h matches h, −1 if −h
};

InvertedPair inversion_pair_of_holomorphic(const HolomorphicCurve& f, const Inversion& inv, cplx z);

struct ComplexStructureFit {
    Eigen::Matrix4d J;
    int data_rank = 0;
    double square_residual = 0;         // ‖𝒥² + I‖
    double orthogonality_residual = 0;  // ‖𝒥ᵀ𝒥 − I‖
    double fit_residual = 0;
    double constancy_residual = 0;
};

ComplexStructureFit recover_complex_structure(const MinimalPair& pair, const Grid& grid);

struct CollapseReport {
    ComplexStructureFit fit;
    Sign constant_sign = Sign::minus;
    Eigen::Vector4d constant_value = Eigen::Vector4d::Zero();
    double constant_variation = 0;
    double other_variation = 0;
    double other_vs_2gN = 0;  // max ‖φ_other − 2 g^N‖
};

// For pairs whose representative lies in Q₀: one sign collapses, the other is 2g^N.
CollapseReport holomorphic_collapse_check(const MinimalPair& pair, const Grid& grid);

enum class SpaceForm { sphere, hyperbolic };
enum class StereoDirection { to_r4, from_r4 };

// Sphere S⁴(Re₅; R) via the R⁵ inversion about 2Re₅ with radius 2R; hyperbolic
// H⁴(−Re₅; R) via the line through −2Re₅, onto the ball B(0; 2R).
Eigen::VectorXd stereo(const Eigen::VectorXd& P, double R, SpaceForm space, StereoDirection dir);
SurfaceJet stereo(std::span<const Jet2> P, double R, SpaceForm space, StereoDirection dir);

Ambient space_form_ambient(double R, SpaceForm space);

struct SuperminimalReport {
    double max_H = 0;
    double max_res_orth = 0;
    double max_res_len = 0;
    double max_wintgen = 0;  // |defect| with c = ±1/R²
    bool minimal = false;
    bool superconformal = false;
    bool degenerate = false;  // umbilic everywhere (e.g. totally geodesic)
    std::size_t points = 0;
};

SuperminimalReport superminimal_test(const std::vector<SurfaceJet>& samples, double R, SpaceForm space,
                                     double tol_H = 1e-9, double tol_circ = 1e-8);

enum class QuadricKind { non_constant, null_quadric, real_constant, nonreal_constant };
const char* to_string(QuadricKind k);

struct QuadricClassification {
    QuadricKind kind = QuadricKind::non_constant;
    QuadricValue stats;
    double k = 0;           // real constant when kind == real_constant
    double inferred_R = 0;  // √|k| / 2
    // Cross-validation: superminimal test of the stereographic lift of φ±.
    bool sphere_passes = false;
    bool hyperbolic_passes = false;
    double sphere_H = 0;
    double hyperbolic_H = 0;
};

QuadricClassification quadric_criterion(const MinimalPair& pair, const Grid& grid);

}  // namespace superconf
