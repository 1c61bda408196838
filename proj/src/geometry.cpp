#include "superconf/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "superconf/error.hpp"

namespace superconf {

Ambient Ambient::euclidean() { return Ambient{}; }

Ambient Ambient::sphere(double radius, const Eigen::VectorXd& center) {
    return Ambient{AmbientKind::sphere, radius, center};
}

Ambient Ambient::hyperbolic(double radius, const Eigen::VectorXd& center) {
    return Ambient{AmbientKind::hyperbolic, radius, center};
}

double Ambient::curvature() const {
    switch (kind) {
        case AmbientKind::sphere: return 1.0 / (radius * radius);
        case AmbientKind::hyperbolic: return -1.0 / (radius * radius);
        default: return 0.0;
    }
}

double ambient_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b, bool lorentzian) {
    double s = a.dot(b);
    if (lorentzian) {
        const Eigen::Index last = a.size() - 1;
        s -= 2.0 * a(last) * b(last);
    }
    return s;
}

Eigen::Matrix2d FundamentalData::shape(const Eigen::Vector2d& nu) const {
    Eigen::Matrix2d A;
    A(0, 0) = c11.dot(nu);
    A(0, 1) = A(1, 0) = c12.dot(nu);
    A(1, 1) = c22.dot(nu);
    return A;
}

double FundamentalData::curvature_scale() const {
    return std::max({c11.norm(), c12.norm(), c22.norm()});
}

FundamentalData fundamental_data(std::span<const Jet2> sample, const Ambient& ambient) {
    const int n = ambient.dimension();
    if (static_cast<int>(sample.size()) != n) {
        throw Error(ErrorKind::precondition, "fundamental_data: sample dimension does not match the ambient");
    }
    const bool lor = ambient.lorentzian();
    auto dot = [lor](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return ambient_dot(a, b, lor); };

    FundamentalData fd;
    fd.ambient = ambient;
    fd.position = value_of(sample);
    fd.X_u = du_of(sample);
    fd.X_v = dv_of(sample);
    fd.X_uu = duu_of(sample);
    fd.X_uv = duv_of(sample);
    fd.X_vv = dvv_of(sample);
    fd.E = dot(fd.X_u, fd.X_u);
    fd.F = dot(fd.X_u, fd.X_v);
    fd.G = dot(fd.X_v, fd.X_v);
    fd.scale = std::max(fd.X_u.cwiseAbs().maxCoeff(), fd.X_v.cwiseAbs().maxCoeff());

    const double det = fd.E * fd.G - fd.F * fd.F;
    const double s2 = fd.scale * fd.scale;
    if (!(fd.scale > 0.0) || !(det > kRegularityFloor * s2 * s2)) {
        std::ostringstream msg;
        msg << "singular sample: EG-F^2 = " << det;
        throw Error(ErrorKind::singular, msg.str(), det);
    }

    const double sqE = std::sqrt(fd.E);
    const double sqD = std::sqrt(det);
    fd.tangent_coeffs << 1.0 / sqE, 0.0, -fd.F / (sqE * sqD), sqE / sqD;
    fd.Y1 = fd.tangent_coeffs(0, 0) * fd.X_u;
    fd.Y2 = fd.tangent_coeffs(1, 0) * fd.X_u + fd.tangent_coeffs(1, 1) * fd.X_v;

    Eigen::VectorXd radial;
    double radial_norm2 = 0.0;
    if (ambient.kind != AmbientKind::euclidean) {
        radial = (fd.position - ambient.center) / ambient.radius;
        radial_norm2 = dot(radial, radial);
    }
    auto to_normal = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd p = x - dot(x, fd.Y1) * fd.Y1 - dot(x, fd.Y2) * fd.Y2;
        if (radial.size() > 0) p -= dot(x, radial) / radial_norm2 * radial;
        return p;
    };

    // Project the coordinate basis, keep the two largest (lower index on ties), orthonormalize in index order.
    std::vector<std::pair<double, int>> ranked;
    std::vector<Eigen::VectorXd> projected;
    for (int k = 0; k < n; ++k) {
        projected.push_back(to_normal(Eigen::VectorXd::Unit(n, k)));
        ranked.emplace_back(dot(projected.back(), projected.back()), k);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    // Skip candidates parallel to the leader (two coordinate axes can project onto the same line).
    const int lead = ranked[0].second;
    const Eigen::VectorXd lead_unit = projected[lead] / std::sqrt(ranked[0].first);
    int second = ranked[1].second;
    for (std::size_t r = 1; r < ranked.size(); ++r) {
        const Eigen::VectorXd& p = projected[ranked[r].second];
        const Eigen::VectorXd rest = p - dot(p, lead_unit) * lead_unit;
        if (dot(rest, rest) > 1e-6 * ranked[r].first) {
            second = ranked[r].second;
            break;
        }
    }
    const int i1 = std::min(lead, second);
    const int i2 = std::max(lead, second);
    Eigen::VectorXd n1 = projected[i1];
    n1 /= std::sqrt(dot(n1, n1));
    Eigen::VectorXd n2 = projected[i2] - dot(projected[i2], n1) * n1;
    n2 /= std::sqrt(dot(n2, n2));

    Eigen::MatrixXd frame(n, n);
    frame.col(0) = fd.Y1;
    frame.col(1) = fd.Y2;
    frame.col(2) = n1;
    frame.col(3) = n2;
    if (n == 5) frame.col(4) = radial;
    if (frame.determinant() < 0.0) n2 = -n2;
    fd.n1 = n1;
    fd.n2 = n2;

    auto comps = [&](const Eigen::VectorXd& x) { return Eigen::Vector2d(dot(x, n1), dot(x, n2)); };
    const Eigen::Vector2d b_uu = comps(fd.X_uu), b_uv = comps(fd.X_uv), b_vv = comps(fd.X_vv);
    const Eigen::Matrix2d& c = fd.tangent_coeffs;
    // α(Ŷi, Ŷj) = Σ c_ia c_jb α(∂a, ∂b).
    auto alpha = [&](int i, int j) {
        return Eigen::Vector2d(c(i, 0) * c(j, 0) * b_uu + (c(i, 0) * c(j, 1) + c(i, 1) * c(j, 0)) * b_uv +
                               c(i, 1) * c(j, 1) * b_vv);
    };
    fd.c11 = alpha(0, 0);
    fd.c12 = alpha(0, 1);
    fd.c22 = alpha(1, 1);
    auto amb = [&](const Eigen::Vector2d& x) -> Eigen::VectorXd { return x(0) * n1 + x(1) * n2; };
    fd.a11 = amb(fd.c11);
    fd.a12 = amb(fd.c12);
    fd.a22 = amb(fd.c22);
    fd.Hc = 0.5 * (fd.c11 + fd.c22);
    fd.H = amb(fd.Hc);
    fd.lambda = fd.Hc.norm();
    fd.K = ambient.curvature() + fd.c11.dot(fd.c22) - fd.c12.squaredNorm();
    const Eigen::Matrix2d A1 = fd.shape(Eigen::Vector2d(1, 0));
    const Eigen::Matrix2d A2 = fd.shape(Eigen::Vector2d(0, 1));
    fd.KN = (A1 * A2 - A2 * A1)(1, 0);
    return fd;
}

EllipseDescriptor ellipse_descriptor(const FundamentalData& fd) {
    EllipseDescriptor e;
    e.center = fd.H;
    const Eigen::Vector2d d = fd.c11 - fd.c22;
    Eigen::Matrix2d M;
    M.col(0) = 0.5 * d;
    M.col(1) = fd.c12;
    const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2d>(M).singularValues();
    e.semi_major = sv(0);
    e.semi_minor = sv(1);
    e.mu = 0.5 * (sv(0) + sv(1));
    const double floor = std::max(kEllipseFloor * fd.curvature_scale(), 1e-300);
    const double norm = std::max({d.norm(), 2.0 * fd.c12.norm(), floor});
    e.res_orth = fd.c12.dot(d) / (norm * norm);
    e.res_len = (d.norm() - 2.0 * fd.c12.norm()) / norm;
    return e;
}

SuperconformalityReport superconformality_test(const FundamentalData& fd, double tol) {
    const EllipseDescriptor e = ellipse_descriptor(fd);
    SuperconformalityReport r;
    r.res_orth = std::abs(e.res_orth);
    r.res_len = std::abs(e.res_len);
    const double h2 = fd.lambda * fd.lambda;
    r.wintgen_defect = h2 + fd.ambient.curvature() - fd.K - std::abs(fd.KN);
    r.wintgen_relative = h2 > 0.0 ? std::abs(r.wintgen_defect) / h2 : 0.0;
    r.is_superconformal = r.res_orth < tol && r.res_len < tol;
    return r;
}

AdaptedFrame adapted_frame(const FundamentalData& fd, double tol) {
    const double kappa = std::max(fd.curvature_scale(), fd.lambda);
    const double floor = kEllipseFloor * kappa;
    if (!(fd.lambda > floor)) {
        throw Error(ErrorKind::degenerate, "adapted frame undefined: minimal point", fd.lambda);
    }
    const SuperconformalityReport sc = superconformality_test(fd, tol);
    if (!sc.is_superconformal) {
        throw Error(ErrorKind::precondition, "adapted frame requires a superconformal sample",
                    std::max(sc.res_orth, sc.res_len));
    }

    const Eigen::Vector2d eta_c = fd.Hc / fd.lambda;
    const Eigen::Vector2d zeta_c(-eta_c(1), eta_c(0));
    const Eigen::Matrix2d A_eta = fd.shape(eta_c);
    const Eigen::Matrix2d A_zeta = fd.shape(zeta_c);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(A_zeta);
    const double mu = 0.5 * (eig.eigenvalues()(1) - eig.eigenvalues()(0));
    if (!(mu > floor)) {
        throw Error(ErrorKind::degenerate, "adapted frame undefined: umbilic point", mu);
    }
    const Eigen::Vector2d y1 = eig.eigenvectors().col(1);
    Eigen::Vector2d y2(-y1(1), y1(0));
    bool flipped = false;
    if (y2.dot(A_eta * y1) < 0.0) {
        y2 = -y2;
        flipped = true;
    }

    Eigen::Matrix2d Q;
    Q.col(0) = y1;
    Q.col(1) = y2;
    const Eigen::Matrix2d Ae = Q.transpose() * A_eta * Q;
    const Eigen::Matrix2d Az = Q.transpose() * A_zeta * Q;
    Eigen::Matrix2d pe, pz;
    pe << fd.lambda, mu, mu, fd.lambda;
    pz << mu, 0.0, 0.0, -mu;

    AdaptedFrame f;
    f.Y1 = y1(0) * fd.Y1 + y1(1) * fd.Y2;
    f.Y2 = y2(0) * fd.Y1 + y2(1) * fd.Y2;
    f.eta = eta_c(0) * fd.n1 + eta_c(1) * fd.n2;
    f.zeta = zeta_c(0) * fd.n1 + zeta_c(1) * fd.n2;
    f.lambda = fd.lambda;
    f.mu = mu;
    f.sffa_residual =
        std::max((Ae - pe).cwiseAbs().maxCoeff(), (Az - pz).cwiseAbs().maxCoeff()) / std::max(fd.lambda, mu);
    f.KN = (Ae * Az - Az * Ae)(1, 0);
    f.tangent_orientation_flipped = flipped;
    return f;
}

}  // namespace superconf
