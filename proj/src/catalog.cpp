#include "superconf/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "superconf/error.hpp"

namespace superconf::catalog {

namespace {

constexpr double kPi = std::numbers::pi;

Jet2 c(double x) { return Jet2::constant(x); }

SurfaceJet vec(std::initializer_list<Jet2> xs) { return SurfaceJet(xs); }

Domain rect_domain(Rect r, std::vector<std::pair<cplx, double>> holes = {}) { return Domain{r, std::move(holes)}; }

CatalogEntry pair_entry(const std::string& name, const std::string& description, const std::string& text,
                        Domain domain, Rect grid, std::vector<std::string> oracles = {}) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.kind = EntryKind::minimal_pair;
    e.pair = MinimalPair{HolomorphicCurve::from_text(text, domain, name), Eigen::Vector4d::Zero()};
    e.grid = grid;
    e.oracles = std::move(oracles);
    return e;
}

CatalogEntry curve_entry(const std::string& name, const std::string& description, const std::string& text,
                         Domain domain, Rect grid) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.kind = EntryKind::c2_curve;
    e.curve = HolomorphicCurve::from_text(text, domain, name);
    e.grid = grid;
    return e;
}

CatalogEntry surface_entry(const std::string& name, const std::string& description, EntryKind kind,
                           SurfaceMap map, Ambient ambient, Rect grid) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.kind = kind;
    e.surface = std::move(map);
    e.ambient = std::move(ambient);
    e.grid = grid;
    return e;
}

Eigen::VectorXd e5(double s) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(5);
    x(4) = s;
    return x;
}

// Printed Veronese immersion into the unit sphere of R⁵, in (φ, θ).
SurfaceJet veronese_f(double phi, double theta) {
    const Jet2 p = Jet2::param_u(phi), t = Jet2::param_v(theta);
    const double s3 = std::sqrt(3.0);
    const Jet2 x = s3 * sin(p) * cos(t), y = s3 * sin(p) * sin(t), z = s3 * cos(p);
    const double k = 1.0 / (2.0 * s3);
    return vec({k * (2.0 * x * y), k * (2.0 * x * z), k * (2.0 * y * z), k * (x * x - y * y),
                k / s3 * (x * x + y * y - 2.0 * z * z)});
}

// X₁..X₄ of the Veronese chart as R⁴ jet vectors.
struct VeroneseFrame {
    Jet2Vec4 X1, X2, X3, X4;
};

VeroneseFrame veronese_frame(const Jet2& t) {
    const Jet2 zero = c(0.0);
    return {{sin(2.0 * t), zero, zero, cos(2.0 * t)},
            {zero, cos(t), sin(t), zero},
            {cos(2.0 * t), zero, zero, -sin(2.0 * t)},
            {zero, -sin(t), cos(t), zero}};
}

// Whitney sphere W(x, y, z) = (x(1 + iz), y(1 + iz)) / (1 + z²) viewed in R⁴.
Eigen::Vector4d whitney_sphere(double x, double y, double z) {
    const double d = 1.0 + z * z;
    return Eigen::Vector4d(x, x * z, y, y * z) / d;
}

}  // namespace

const char* to_string(EntryKind k) {
    switch (k) {
        case EntryKind::minimal_pair: return "minimal-pair";
        case EntryKind::space_form_immersion: return "space-form-immersion";
        case EntryKind::superconformal_closed_form: return "superconformal-closed-form";
        case EntryKind::surface: return "surface";
        case EntryKind::c2_curve: return "c2-curve";
    }
    return "?";
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {
        "catenoid-helicoid", "whitney",      "veronese",   "enneper-r3",      "q0-line",
        "q0-trig",           "q0-trig-perturbed", "torus", "round-sphere",    "great-sphere-s4",
        "torus-s4",          "hyperbolic-catenoid", "veronese-s4", "whitney-curve", "c2-square",
        "c2-exp",
    };
    return n;
}

cplx veronese_w(double phi, double theta) { return std::polar(std::tan(phi / 2.0), theta); }

Eigen::Matrix4d whitney_congruence() {
    Eigen::Matrix4d O;
    O << 1, 1, 0, 0, 0, 0, 1, 1, 1, -1, 0, 0, 0, 0, -1, 1;
    return O / std::sqrt(2.0);
}

namespace {

CatalogEntry build(const std::string& name) {
    if (name == "catenoid-helicoid") {
        return pair_entry(name, "catenoid (g) and helicoid (h) in R^3 inside R^4", "(cos(z), sin(z), -i*z, 0)",
                          rect_domain({0.2, 2 * kPi - 0.2, -1.5, 1.5}), {0.2, 2 * kPi - 0.2, -1.5, 1.5},
                          {"phi+", "phi-", "phi+corrected", "phi-corrected", "g", "h"});
    }
    if (name == "whitney") {
        return pair_entry(name, "pair g = (1/conj z, conj z)/4, h = i g whose phi+ is the inverted Whitney curve",
                          "(1/(4*z), i/(4*z), z/4, i*z/4)", rect_domain({-1.6, 1.6, -1.6, 1.6}, {{0.0, 0.4}}),
                          {0.4, 1.6, -1.0, 1.0}, {"g", "h", "f", "whitney-sphere"});
    }
    if (name == "veronese") {
        return pair_entry(name, "minimal pair generating the Veronese surface, in w = tan(phi/2) e^{i theta}",
                          "(i/sqrt(3)*(1/z^2 - z^2), 2/sqrt(3)*(z - 1/z), -2*i/sqrt(3)*(z + 1/z), "
                          "1/sqrt(3)*(z^2 + 1/z^2))",
                          rect_domain({-7.0, 7.0, -7.0, 7.0}, {{0.0, 0.15}}), {0.3, 1.5, 0.2, 1.4},
                          {"g", "h", "metric", "f"});
    }
    if (name == "enneper-r3") {
        return pair_entry(name, "Enneper surface in R^3 inside R^4", "(z - z^3/3, i*(z + z^3/3), z^2, 0)",
                          rect_domain({-1.0, 1.0, -1.0, 1.0}), {-1.0, 1.0, -1.0, 1.0});
    }
    if (name == "q0-line") {
        return pair_entry(name, "plane (z, iz, 0, 0); holomorphic, in the null quadric", "(z, i*z, 0, 0)",
                          rect_domain({-2.0, 2.0, -2.0, 2.0}), {0.2, 1.2, 0.2, 1.2});
    }
    if (name == "q0-trig") {
        return pair_entry(name, "(sin z, i sin z, cos z, i cos z); holomorphic, in the null quadric",
                          "(sin(z), i*sin(z), cos(z), i*cos(z))", rect_domain({-2.0, 2.0, -2.0, 2.0}),
                          {0.2, 1.2, 0.2, 1.2});
    }
    if (name == "q0-trig-perturbed") {
        return pair_entry(name, "q0-trig perturbed off the null quadric (eps = 0.25)",
                          "(sin(z) + 0.125*exp(z)*(sin(z) - cos(z)), i*sin(z) - 0.125*i*exp(z)*(sin(z) - cos(z)), "
                          "cos(z) + 0.125*exp(z)*(sin(z) + cos(z)), i*cos(z) - 0.125*i*exp(z)*(sin(z) + cos(z)))",
                          rect_domain({-2.0, 2.0, -2.0, 2.0}), {0.2, 1.2, 0.2, 1.2});
    }
    if (name == "torus") {
        return surface_entry(name, "product torus (cos u, sin u, 2 cos v, 2 sin v); not superconformal",
                             EntryKind::surface,
                             [](double u, double v) {
                                 const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                                 return vec({cos(a), sin(a), 2.0 * cos(b), 2.0 * sin(b)});
                             },
                             Ambient::euclidean(), {0.0, 2 * kPi, 0.0, 2 * kPi});
    }
    if (name == "round-sphere") {
        return surface_entry(name, "round sphere of radius 2 in R^3 inside R^4, (phi, theta) chart",
                             EntryKind::surface,
                             [](double u, double v) {
                                 const Jet2 p = Jet2::param_u(u), t = Jet2::param_v(v);
                                 return vec({2.0 * sin(p) * cos(t), 2.0 * sin(p) * sin(t), 2.0 * cos(p), c(0.0)});
                             },
                             Ambient::euclidean(), {0.3, kPi - 0.3, 0.0, 2 * kPi});
    }
    if (name == "great-sphere-s4") {
        return surface_entry(name, "totally geodesic 2-sphere of S^4(e5; 1)", EntryKind::space_form_immersion,
                             [](double u, double v) {
                                 const Jet2 p = Jet2::param_u(u), t = Jet2::param_v(v);
                                 return vec({sin(p) * cos(t), sin(p) * sin(t), cos(p), c(0.0), c(1.0)});
                             },
                             Ambient::sphere(1.0, e5(1.0)), {0.3, kPi - 0.3, 0.0, 2 * kPi});
    }
    if (name == "torus-s4") {
        return surface_entry(name, "flat torus (0.6 e^{iu}, 0.8 e^{iv}) in S^4(e5; 1)", EntryKind::space_form_immersion,
                             [](double u, double v) {
                                 const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                                 return vec({0.6 * cos(a), 0.6 * sin(a), 0.8 * cos(b), 0.8 * sin(b), c(1.0)});
                             },
                             Ambient::sphere(1.0, e5(1.0)), {0.0, 2 * kPi, 0.0, 2 * kPi});
    }
    if (name == "hyperbolic-catenoid") {
        return surface_entry(name, "0.2 x catenoid lifted to H^4(-e5; 1) as a graph over R^4",
                             EntryKind::space_form_immersion,
                             [](double u, double v) {
                                 const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                                 const Jet2 x0 = 0.2 * cos(a) * cosh(b), x1 = 0.2 * sin(a) * cosh(b), x2 = 0.2 * b;
                                 const Jet2 t = -1.0 + sqrt(1.0 + x0 * x0 + x1 * x1 + x2 * x2);
                                 return vec({x0, x1, x2, c(0.0), t});
                             },
                             Ambient::hyperbolic(1.0, e5(-1.0)), {0.2, 2 * kPi - 0.2, -1.5, 1.5});
    }
    if (name == "veronese-s4") {
        return surface_entry(name, "Veronese surface e5 + f in S^4(e5; 1), (phi, theta) chart",
                                       EntryKind::superconformal_closed_form,
                                       [](double u, double v) {
                                           SurfaceJet f = veronese_f(u, v);
                                           f[4] = f[4] + 1.0;
                                           return f;
                                       },
                                       Ambient::sphere(1.0, e5(1.0)), {0.3, kPi - 0.3, 0.3, 2 * kPi - 0.3});
    }
    if (name == "whitney-curve") {
        return curve_entry(name, "f(z) = (z, 1/z) in C^2", "(z, 1/z)", rect_domain({-2.0, 2.0, -2.0, 2.0}, {{0.0, 0.3}}),
                           {0.4, 1.6, -1.0, 1.0});
    }
    if (name == "c2-square") {
        return curve_entry(name, "f(z) = (z, z^2) in C^2", "(z, z^2)", rect_domain({0.3, 1.3, 0.2, 1.2}),
                           {0.3, 1.3, 0.2, 1.2});
    }
    if (name == "c2-exp") {
        return curve_entry(name, "f(z) = (z, exp z) in C^2", "(z, exp(z))", rect_domain({-1.5, 0.5, 0.3, 1.5}),
                           {-1.5, 0.5, 0.3, 1.5});
    }
    throw Error(ErrorKind::not_found, "unknown catalog entry '" + name + "'");
}

}  // namespace

CatalogEntry get(const std::string& name) {
    CatalogEntry e = build(name);
    if (e.pair) {
        const Certificate cert = certify(e.pair->source, Grid{e.grid, 9, 9});
        if (!cert.passed) {
            std::ostringstream msg;
            msg << "catalog entry '" << name << "' fails certification (isotropy " << cert.isotropy_max
                << ", minimality " << cert.minimality_max << ")";
            throw Error(ErrorKind::numerical, msg.str());
        }
    }
    return e;
}

SurfaceMap oracle(const CatalogEntry& entry, const std::string& which) {
    const std::string& n = entry.name;
    if (n == "catenoid-helicoid") {
        if (which == "phi+" || which == "phi-" || which == "phi+corrected" || which == "phi-corrected") {
            const double s = which[3] == '+' ? 1.0 : -1.0;
            const double t = which.size() > 4 ? -1.0 : 1.0;  // corrected form flips the u sin u terms
            return [s, t](double u, double v) {
                const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                const Jet2 w = recip(cosh(b));
                return vec({w * (cos(a) - t * a * sin(a)), w * (sin(a) + t * a * cos(a)), w * (b * cosh(b) - sinh(b)),
                            s * w * a * sinh(b)});
            };
        }
        if (which == "g") {
            return [](double u, double v) {
                const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                return vec({cos(a) * cosh(b), sin(a) * cosh(b), b, c(0.0)});
            };
        }
        if (which == "h") {
            return [](double u, double v) {
                const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                return vec({-sin(a) * sinh(b), cos(a) * sinh(b), -a, c(0.0)});
            };
        }
    }
    if (n == "whitney") {
        if (which == "g" || which == "h") {
            const bool h = which == "h";
            return [h](double u, double v) {
                const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                const Jet2 r = recip(a * a + b * b);
                // g = (1/conj z, conj z)/4 and h = i g, in (Re, Im, Re, Im) coordinates.
                if (!h) return vec({0.25 * a * r, 0.25 * b * r, 0.25 * a, -0.25 * b});
                return vec({-0.25 * b * r, 0.25 * a * r, 0.25 * b, 0.25 * a});
            };
        }
        if (which == "f") {
            return [](double u, double v) {
                const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
                const Jet2 r = recip(a * a + b * b);
                return vec({a, b, a * r, -b * r});
            };
        }
        if (which == "whitney-sphere") {
            return [](double u, double v) {
                const double m = u * u + v * v;
                const double x = 2 * u / (1 + m), y = 2 * v / (1 + m), z = (m - 1) / (1 + m);
                const Eigen::Vector4d p = whitney_congruence() * whitney_sphere(x, y, z) / std::sqrt(2.0);
                return constant_vector(p);
            };
        }
    }
    if (n == "veronese") {
        if (which == "g" || which == "h") {
            const bool h = which == "h";
            return [h](double phi, double theta) {
                const Jet2 p = Jet2::param_u(phi), t = Jet2::param_v(theta);
                const VeroneseFrame X = veronese_frame(t);
                const Jet2 s = sin(p), co = cos(p);
                SurfaceJet out(4);
                if (!h) {
                    const Jet2 k = 2.0 / std::sqrt(3.0) * recip(s * s);
                    for (int i = 0; i < 4; ++i) out[i] = k * ((1.0 + co * co) * X.X1[i] - 2.0 * s * co * X.X2[i]);
                } else {
                    const Jet2 k = 4.0 / std::sqrt(3.0) * recip(s * s);
                    for (int i = 0; i < 4; ++i) out[i] = k * (co * X.X3[i] - s * X.X4[i]);
                }
                return out;
            };
        }
        if (which == "metric") {
            // (E, F, G) in (φ, θ): 4(1 + 3cos²φ)/sin⁶φ · (dφ², 0, sin²φ dθ²).
            return [](double phi, double theta) {
                (void)theta;
                const Jet2 p = Jet2::param_u(phi);
                const Jet2 s = sin(p), co = cos(p);
                const Jet2 w = 4.0 * (1.0 + 3.0 * co * co) * recip(pow(s, 6));
                return vec({w, c(0.0), w * s * s});
            };
        }
        if (which == "f") return veronese_f;
    }
    throw Error(ErrorKind::precondition, "unsupported: entry '" + n + "' has no oracle '" + which + "'");
}

Eigen::VectorXd expected_eval(const CatalogEntry& entry, const std::string& which, double u, double v) {
    return value_of(oracle(entry, which)(u, v));
}

}  // namespace superconf::catalog
