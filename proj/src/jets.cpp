#include "superconf/jets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "superconf/error.hpp"

namespace superconf {

namespace {

void require_nonzero(cplx x, const char* reason) {
    if (std::abs(x) <= kDivisionFloor) {
        std::ostringstream msg;
        msg << reason << " (|argument| = " << std::abs(x) << ")";
        throw Error(ErrorKind::domain, msg.str(), std::abs(x));
    }
}

// The principal branch is discontinuous on the non-positive real axis.
void require_off_cut(cplx x, const char* reason) {
    require_nonzero(x, reason);
    if (x.imag() == 0.0 && x.real() < 0.0) {
        throw Error(ErrorKind::domain, std::string(reason) + " (argument on the negative real axis)",
                    std::abs(x));
    }
}

void require_above_floor(double x, const char* what) {
    if (std::abs(x) <= kDivisionFloor) {
        std::ostringstream msg;
        msg << what << ": magnitude " << std::abs(x) << " below division floor";
        throw Error(ErrorKind::degenerate, msg.str(), std::abs(x));
    }
}

}  // namespace

ComplexJet operator+(const ComplexJet& a, const ComplexJet& b) {
    ComplexJet r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

ComplexJet operator-(const ComplexJet& a, const ComplexJet& b) {
    ComplexJet r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

ComplexJet operator-(const ComplexJet& a) {
    ComplexJet r;
    for (int k = 0; k < 4; ++k) r.c[k] = -a.c[k];
    return r;
}

ComplexJet operator*(cplx s, const ComplexJet& a) {
    ComplexJet r;
    for (int k = 0; k < 4; ++k) r.c[k] = s * a.c[k];
    return r;
}

ComplexJet operator*(const ComplexJet& a, const ComplexJet& b) {
    const auto& f = a.c;
    const auto& g = b.c;
    return {{f[0] * g[0], f[1] * g[0] + f[0] * g[1], f[2] * g[0] + 2.0 * f[1] * g[1] + f[0] * g[2],
             f[3] * g[0] + 3.0 * f[2] * g[1] + 3.0 * f[1] * g[2] + f[0] * g[3]}};
}

ComplexJet operator/(const ComplexJet& a, const ComplexJet& b) { return a * recip(b); }

ComplexJet compose(const ComplexJet& a, cplx f0, cplx f1, cplx f2, cplx f3) {
    const cplx a1 = a.c[1], a2 = a.c[2], a3 = a.c[3];
    return {{f0, f1 * a1, f2 * a1 * a1 + f1 * a2, f3 * a1 * a1 * a1 + 3.0 * f2 * a1 * a2 + f1 * a3}};
}

ComplexJet recip(const ComplexJet& a) {
    const cplx x = a.c[0];
    require_nonzero(x, "pole");
    const cplx r = 1.0 / x;
    return compose(a, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
}

ComplexJet exp(const ComplexJet& a) {
    const cplx e = std::exp(a.c[0]);
    return compose(a, e, e, e, e);
}

ComplexJet log(const ComplexJet& a) {
    const cplx x = a.c[0];
    require_off_cut(x, "log-branch");
    const cplx r = 1.0 / x;
    return compose(a, std::log(x), r, -r * r, 2.0 * r * r * r);
}

ComplexJet sin(const ComplexJet& a) {
    const cplx s = std::sin(a.c[0]), c = std::cos(a.c[0]);
    return compose(a, s, c, -s, -c);
}

ComplexJet cos(const ComplexJet& a) {
    const cplx s = std::sin(a.c[0]), c = std::cos(a.c[0]);
    return compose(a, c, -s, -c, s);
}

ComplexJet sinh(const ComplexJet& a) {
    const cplx s = std::sinh(a.c[0]), c = std::cosh(a.c[0]);
    return compose(a, s, c, s, c);
}

ComplexJet cosh(const ComplexJet& a) {
    const cplx s = std::sinh(a.c[0]), c = std::cosh(a.c[0]);
    return compose(a, c, s, c, s);
}

ComplexJet sqrt(const ComplexJet& a) {
    const cplx x = a.c[0];
    require_off_cut(x, "sqrt-branch");
    const cplx s = std::sqrt(x);
    const cplx r = 1.0 / x;
    return compose(a, s, 0.5 * s * r, -0.25 * s * r * r, 0.375 * s * r * r * r);
}

ComplexJet pow(const ComplexJet& a, int n) {
    if (n < 0) return recip(pow(a, -n));
    ComplexJet result = ComplexJet::constant(1.0);
    ComplexJet base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}

Jet2 operator-(const Jet2& a) { return {-a.v, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.du * b.v + a.v * b.du,
            a.dv * b.v + a.v * b.dv,
            a.duu * b.v + 2.0 * a.du * b.du + a.v * b.duu,
            a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv,
            a.dvv * b.v + 2.0 * a.dv * b.dv + a.v * b.dvv};
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

Jet2 operator+(const Jet2& a, double s) {
    Jet2 r = a;
    r.v += s;
    return r;
}
Jet2 operator+(double s, const Jet2& a) { return a + s; }
Jet2 operator-(const Jet2& a, double s) { return a + (-s); }
Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }
Jet2 operator*(const Jet2& a, double s) {
    return {a.v * s, a.du * s, a.dv * s, a.duu * s, a.duv * s, a.dvv * s};
}
Jet2 operator*(double s, const Jet2& a) { return a * s; }
Jet2 operator/(const Jet2& a, double s) {
    require_above_floor(s, "scalar division");
    return a * (1.0 / s);
}
Jet2 operator/(double s, const Jet2& a) { return s * recip(a); }

Jet2 compose(const Jet2& a, double f0, double f1, double f2) {
    return {f0,
            f1 * a.du,
            f1 * a.dv,
            f2 * a.du * a.du + f1 * a.duu,
            f2 * a.du * a.dv + f1 * a.duv,
            f2 * a.dv * a.dv + f1 * a.dvv};
}

Jet2 recip(const Jet2& a) {
    require_above_floor(a.v, "recip");
    const double r = 1.0 / a.v;
    return compose(a, r, -r * r, 2.0 * r * r * r);
}

Jet2 sqrt(const Jet2& a) {
    if (a.v <= kDivisionFloor) {
        std::ostringstream msg;
        msg << "sqrt: argument " << a.v << " below division floor";
        throw Error(ErrorKind::degenerate, msg.str(), a.v);
    }
    const double s = std::sqrt(a.v);
    return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}

Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(a, e, e, e);
}

Jet2 log(const Jet2& a) {
    if (a.v <= kDivisionFloor) {
        throw Error(ErrorKind::degenerate, "log: argument below division floor", a.v);
    }
    const double r = 1.0 / a.v;
    return compose(a, std::log(a.v), r, -r * r);
}

Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, s, c, -s);
}

Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, c, -s, -c);
}

Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, s, c, s);
}

Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(a, c, s, c);
}

Jet2 tan(const Jet2& a) {
    const double t = std::tan(a.v);
    const double sec2 = 1.0 + t * t;
    return compose(a, t, sec2, 2.0 * t * sec2);
}

Jet2 pow(const Jet2& a, int n) {
    if (n < 0) return recip(pow(a, -n));
    Jet2 result = Jet2::constant(1.0);
    Jet2 base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

Jet2 dot(std::span<const Jet2> a, std::span<const Jet2> b, bool lorentzian) {
    Jet2 s;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (lorentzian && k + 1 == n) {
            s = s - a[k] * b[k];
        } else {
            s = s + a[k] * b[k];
        }
    }
    return s;
}

SurfaceJet add(std::span<const Jet2> a, std::span<const Jet2> b) {
    SurfaceJet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

SurfaceJet sub(std::span<const Jet2> a, std::span<const Jet2> b) {
    SurfaceJet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

SurfaceJet scale(const Jet2& s, std::span<const Jet2> a) {
    SurfaceJet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = s * a[k];
    return r;
}

SurfaceJet constant_vector(const Eigen::VectorXd& x) {
    SurfaceJet r(static_cast<std::size_t>(x.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = Jet2::constant(x(static_cast<Eigen::Index>(k)));
    return r;
}

namespace {

template <typename Getter>
Eigen::VectorXd slice(std::span<const Jet2> x, Getter get) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(x.size()));
    for (std::size_t k = 0; k < x.size(); ++k) out(static_cast<Eigen::Index>(k)) = get(x[k]);
    return out;
}

}  // namespace

Eigen::VectorXd value_of(std::span<const Jet2> x) { return slice(x, [](const Jet2& j) { return j.v; }); }
Eigen::VectorXd du_of(std::span<const Jet2> x) { return slice(x, [](const Jet2& j) { return j.du; }); }
Eigen::VectorXd dv_of(std::span<const Jet2> x) { return slice(x, [](const Jet2& j) { return j.dv; }); }
Eigen::VectorXd duu_of(std::span<const Jet2> x) { return slice(x, [](const Jet2& j) { return j.duu; }); }
Eigen::VectorXd duv_of(std::span<const Jet2> x) { return slice(x, [](const Jet2& j) { return j.duv; }); }
Eigen::VectorXd dvv_of(std::span<const Jet2> x) { return slice(x, [](const Jet2& j) { return j.dvv; }); }

Jet2Vec4 to_vec4(std::span<const Jet2> x) {
    if (x.size() != 4) throw Error(ErrorKind::precondition, "expected a 4-component jet vector");
    return {x[0], x[1], x[2], x[3]};
}

// z = u + iv: ∂u = d/dz, ∂v = i d/dz.
Jet2 re_jet(const ComplexJet& f) {
    return {f.c[0].real(), f.c[1].real(), -f.c[1].imag(), f.c[2].real(), -f.c[2].imag(), -f.c[2].real()};
}

Jet2 im_jet(const ComplexJet& f) {
    return {f.c[0].imag(), f.c[1].imag(), f.c[1].real(), f.c[2].imag(), f.c[2].real(), -f.c[2].imag()};
}

SeededSurface seed_surface(const std::array<ComplexJet, 4>& jets) {
    SeededSurface s;
    for (int k = 0; k < 4; ++k) {
        const ComplexJet d = jets[k].derivative();
        s.g[k] = re_jet(jets[k]);
        s.h[k] = im_jet(jets[k]);
        s.g_u[k] = re_jet(d);
        s.g_v[k] = -im_jet(d);
    }
    return s;
}

FdReport fd_crosscheck(const SurfaceMap& surface, double u, double v, double step,
                       const std::optional<Rect>& domain) {
    if (!(step > 0.0)) throw Error(ErrorKind::precondition, "fd_crosscheck: step must be positive");
    if (domain) {
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                if (!domain->contains(u + i * step, v + j * step)) {
                    throw Error(ErrorKind::domain, "fd_crosscheck: stencil leaves the domain");
                }
            }
        }
    }

    std::array<std::array<Eigen::VectorXd, 5>, 5> f;
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
            f[i + 2][j + 2] = value_of(surface(u + i * step, v + j * step));
        }
    }
    auto at = [&](int i, int j) -> const Eigen::VectorXd& { return f[i + 2][j + 2]; };

    // Central differences at spacing k·step, then Richardson (4 D(h) − D(2h)) / 3.
    auto diffs = [&](int k) {
        const double hh = k * step;
        std::array<Eigen::VectorXd, 5> d;
        d[0] = (at(k, 0) - at(-k, 0)) / (2 * hh);
        d[1] = (at(0, k) - at(0, -k)) / (2 * hh);
        d[2] = (at(k, 0) - 2 * at(0, 0) + at(-k, 0)) / (hh * hh);
        d[3] = (at(k, k) - at(k, -k) - at(-k, k) + at(-k, -k)) / (4 * hh * hh);
        d[4] = (at(0, k) - 2 * at(0, 0) + at(0, -k)) / (hh * hh);
        return d;
    };
    const auto d1 = diffs(1);
    const auto d2 = diffs(2);

    const SurfaceJet jet = surface(u, v);
    const std::array<Eigen::VectorXd, 5> exact = {du_of(jet), dv_of(jet), duu_of(jet), duv_of(jet), dvv_of(jet)};

    FdReport report;
    for (int k = 0; k < 5; ++k) {
        const Eigen::VectorXd rich = (4.0 * d1[k] - d2[k]) / 3.0;
        const double err = (rich - exact[k]).cwiseAbs().maxCoeff();
        if (k < 2) {
            report.max_first = std::max(report.max_first, err);
        } else {
            report.max_second = std::max(report.max_second, err);
            report.scale = std::max(report.scale, exact[k].cwiseAbs().maxCoeff());
        }
    }
    report.residual = std::max(report.max_first, report.max_second);
    return report;
}

}  // namespace superconf
