#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "superconf/expression.hpp"
#include "superconf/jets.hpp"

namespace superconf {

struct Domain {
    Rect rect;
    std::vector<std::pair<cplx, double>> excluded;  // (center, radius) discs around poles

    bool contains(cplx z) const;
};

// Rectangular grid including both endpoints; points are ordered row-major, u outer.
struct Grid {
    Rect rect;
    int nu = 2;
    int nv = 2;

    std::size_t size() const { return static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv); }
    double u(int i) const;
    double v(int j) const;
    cplx point(std::size_t index) const;
};

struct HolomorphicCurve {
    expr::CurveAst ast;
    Domain domain;
    std::string name;

    static HolomorphicCurve from_text(const std::string& text, const Domain& domain, const std::string& name = "");
    std::string text() const { return expr::print(ast); }
};

// Exact jets of the four components at z; z must lie in the curve's domain.
std::array<ComplexJet, 4> holo_eval(const HolomorphicCurve& curve, cplx z);

// Conjugate pair (Re G, Im G + v_offset) with J∂u = −∂v, J∂v = ∂u.
struct MinimalPair {
    HolomorphicCurve source;
    Eigen::Vector4d v_offset = Eigen::Vector4d::Zero();
};

struct PairSample {
    Jet2Vec4 g;
    Jet2Vec4 h;
    Jet2Vec4 g_u;
    Jet2Vec4 g_v;
};

PairSample split(const MinimalPair& pair, cplx z);

struct CertifyThresholds {
    double isotropy = 1e-9;
    double minimality = 1e-9;
    double regularity = 1e-12;
};

struct Certificate {
    double isotropy_max = 0;
    double regularity_min = 0;  // min Hermitian norm² of G′
    double minimality_max = 0;  // max ‖H_g‖ over the grid's max curvature scale
    double conjugacy_max = 0;   // exact zero by construction
    bool passed = false;
    std::size_t points = 0;
};

Certificate certify(const HolomorphicCurve& curve, const Grid& grid, const CertifyThresholds& th = {});

// Multiplies the representative (including i·v_offset) by e^{−iθ}.
MinimalPair associated_family(const MinimalPair& pair, double theta);

struct ReflectionReport {
    double max_residual = 0;
    std::size_t points = 0;
    std::size_t skipped = 0;  // samples where the construction failed
};

// For pairs with g inside R³ = span{e1, e2, e3}: max ‖reflect₄(φ+) − φ−‖.
ReflectionReport reflection_pair_check(const MinimalPair& pair, const Grid& grid);

// ⟨⟨Z, W⟩⟩ = Σ Z_k W_k (bilinear, not Hermitian).
cplx bilinear(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b);

}  // namespace superconf
