#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace superconf {

using cplx = std::complex<double>;

// Denominators (and sqrt arguments) below this magnitude fail loudly.
inline constexpr double kDivisionFloor = 1e-13;

// Value and first three complex derivatives of a holomorphic function at a point.
struct ComplexJet {
    std::array<cplx, 4> c{};

    static ComplexJet constant(cplx value) { return {{value, 0.0, 0.0, 0.0}}; }
    static ComplexJet variable(cplx z) { return {{z, 1.0, 0.0, 0.0}}; }

    cplx value() const { return c[0]; }
    // Jet of the derivative; the third-order slot is unknown and left at zero.
    ComplexJet derivative() const { return {{c[1], c[2], c[3], 0.0}}; }
};

ComplexJet operator+(const ComplexJet& a, const ComplexJet& b);
ComplexJet operator-(const ComplexJet& a, const ComplexJet& b);
ComplexJet operator*(const ComplexJet& a, const ComplexJet& b);
ComplexJet operator/(const ComplexJet& a, const ComplexJet& b);
ComplexJet operator-(const ComplexJet& a);
ComplexJet operator*(cplx s, const ComplexJet& a);

// F∘a given F and its first three derivatives at a.value().
ComplexJet compose(const ComplexJet& a, cplx f0, cplx f1, cplx f2, cplx f3);

// Elementary functions on the principal branch. Poles and branch points throw
// Error(domain) with a short reason ("pole", "log-branch", "sqrt-branch").
ComplexJet recip(const ComplexJet& a);
ComplexJet exp(const ComplexJet& a);
ComplexJet log(const ComplexJet& a);
ComplexJet sin(const ComplexJet& a);
ComplexJet cos(const ComplexJet& a);
ComplexJet sinh(const ComplexJet& a);
ComplexJet cosh(const ComplexJet& a);
ComplexJet sqrt(const ComplexJet& a);
ComplexJet pow(const ComplexJet& a, int n);

// Real bivariate second-order jet.
struct Jet2 {
    double v = 0.0;
    double du = 0.0;
    double dv = 0.0;
    double duu = 0.0;
    double duv = 0.0;
    double dvv = 0.0;

    static Jet2 constant(double value) { return {value, 0, 0, 0, 0, 0}; }
    static Jet2 param_u(double u) { return {u, 1, 0, 0, 0, 0}; }
    static Jet2 param_v(double v) { return {v, 0, 1, 0, 0, 0}; }
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator+(const Jet2& a, double s);
Jet2 operator+(double s, const Jet2& a);
Jet2 operator-(const Jet2& a, double s);
Jet2 operator-(double s, const Jet2& a);
Jet2 operator*(const Jet2& a, double s);
Jet2 operator*(double s, const Jet2& a);
Jet2 operator/(const Jet2& a, double s);
Jet2 operator/(double s, const Jet2& a);

// F∘a given F, F', F'' at a.v.
Jet2 compose(const Jet2& a, double f0, double f1, double f2);

Jet2 recip(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 tan(const Jet2& a);
Jet2 pow(const Jet2& a, int n);

using Jet2Vec4 = std::array<Jet2, 4>;
using Jet2Vec5 = std::array<Jet2, 5>;
// Dynamic-dimension surface sample (4 for R⁴, 5 for space-form work).
using SurfaceJet = std::vector<Jet2>;

// Inner product of jet vectors; lorentzian flips the sign of the last slot.
Jet2 dot(std::span<const Jet2> a, std::span<const Jet2> b, bool lorentzian = false);
SurfaceJet add(std::span<const Jet2> a, std::span<const Jet2> b);
SurfaceJet sub(std::span<const Jet2> a, std::span<const Jet2> b);
SurfaceJet scale(const Jet2& s, std::span<const Jet2> a);
SurfaceJet constant_vector(const Eigen::VectorXd& x);

// Slices of a jet vector as ambient vectors.
Eigen::VectorXd value_of(std::span<const Jet2> x);
Eigen::VectorXd du_of(std::span<const Jet2> x);
Eigen::VectorXd dv_of(std::span<const Jet2> x);
Eigen::VectorXd duu_of(std::span<const Jet2> x);
Eigen::VectorXd duv_of(std::span<const Jet2> x);
Eigen::VectorXd dvv_of(std::span<const Jet2> x);

Jet2Vec4 to_vec4(std::span<const Jet2> x);

// Real and imaginary parts of a holomorphic jet as Jet2 in (u, v), z = u + iv.
Jet2 re_jet(const ComplexJet& f);
Jet2 im_jet(const ComplexJet& f);

struct SeededSurface {
    Jet2Vec4 g;
    Jet2Vec4 h;
    Jet2Vec4 g_u;  // uses third derivatives of G
    Jet2Vec4 g_v;
};

// Cauchy–Riemann seeding of (Re G, Im G) and the first-derivative fields of Re G.
SeededSurface seed_surface(const std::array<ComplexJet, 4>& jets);

struct Rect {
    double u0 = 0.0;
    double u1 = 1.0;
    double v0 = 0.0;
    double v1 = 1.0;

    bool contains(double u, double v) const { return u >= u0 && u <= u1 && v >= v0 && v <= v1; }
};

using SurfaceMap = std::function<SurfaceJet(double u, double v)>;

struct FdReport {
    double max_first = 0.0;   // max |jet - FD| over first partials
    double max_second = 0.0;  // same for second partials
    double residual = 0.0;    // max of the two
    double scale = 0.0;       // max |second partial| from the jets, for relative reading
};

// Compares jet partials with Richardson-extrapolated central differences on the
// 5×5 stencil of spacing `step` around (u, v).
FdReport fd_crosscheck(const SurfaceMap& surface, double u, double v, double step,
                       const std::optional<Rect>& domain = std::nullopt);

}  // namespace superconf
