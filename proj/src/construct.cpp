#include "superconf/construct.hpp"

#include <algorithm>
#include <cmath>

#include "superconf/error.hpp"

namespace superconf {

namespace {

// J on orthonormal components: J e1 = −e2, J e2 = e1.
const Eigen::Matrix2d kJ = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();

template <typename T>
T det3(const T& a00, const T& a01, const T& a02, const T& a10, const T& a11, const T& a12, const T& a20,
       const T& a21, const T& a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

// Cofactor expansion of det[a, b, c, e_i] along the last column.
template <typename T, typename V>
std::array<T, 4> cross3_impl(const V& a, const V& b, const V& c) {
    std::array<T, 4> out;
    for (int i = 0; i < 4; ++i) {
        int rows[3];
        int m = 0;
        for (int k = 0; k < 4; ++k) {
            if (k != i) rows[m++] = k;
        }
        const T d = det3<T>(a[rows[0]], b[rows[0]], c[rows[0]], a[rows[1]], b[rows[1]], c[rows[1]], a[rows[2]],
                            b[rows[2]], c[rows[2]]);
        // Sign (−1)^{(i+1)+4} for the 1-based row index i+1.
        out[i] = (i % 2 == 0) ? T(-d) : d;
    }
    return out;
}

double max_entry(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Matrix2d first_form(std::span<const Jet2> x) {
    const Eigen::VectorXd xu = du_of(x), xv = dv_of(x);
    Eigen::Matrix2d I;
    I << xu.dot(xu), xu.dot(xv), xu.dot(xv), xv.dot(xv);
    return I;
}

}  // namespace

const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

Eigen::Vector4d cross3(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c) {
    const auto r = cross3_impl<double>(a, b, c);
    return {r[0], r[1], r[2], r[3]};
}

Jet2Vec4 cross3(const Jet2Vec4& a, const Jet2Vec4& b, const Jet2Vec4& c) { return cross3_impl<Jet2>(a, b, c); }

ConstructionFrame construction_frame(const MinimalPair& pair, cplx z) { return construction_frame(split(pair, z)); }

ConstructionFrame construction_frame(const PairSample& s) {
    const FundamentalData fd = fundamental_data(s.g);
    ConstructionFrame f;
    f.g_area = std::sqrt(fd.E * fd.G - fd.F * fd.F);

    const Jet2 hh = dot(s.h, s.h);
    if (hh.v <= 1e-20) throw Error(ErrorKind::degenerate, "frame-degenerate: h vanishes", std::sqrt(hh.v));
    f.r = sqrt(hh);
    const double r = f.r.v;
    // h_u = −g_v and h_v = g_u.
    f.r_u = -dot(s.h, s.g_v) / f.r;
    f.r_v = dot(s.h, s.g_u) / f.r;

    const Eigen::Matrix2d& c = fd.tangent_coeffs;
    const Eigen::Vector2d dr(f.r_u.v, f.r_v.v);
    f.grad_r = c * dr;
    f.grad_norm = f.grad_r.norm();

    const Jet2 E = dot(s.g_u, s.g_u);
    const Jet2 a2 = 1.0 - (f.r_u * f.r_u + f.r_v * f.r_v) / E;
    f.a_defined = a2.v > kAFloor * kAFloor;
    f.a = f.a_defined ? sqrt(a2) : Jet2::constant(std::sqrt(std::max(0.0, a2.v)));
    const double a = f.a.v;

    auto push = [&](const Eigen::Vector2d& w) -> Eigen::Vector4d { return w(0) * fd.Y1 + w(1) * fd.Y2; };
    const Eigen::Vector2d Jgrad = kJ * f.grad_r;
    f.Z = -Jgrad;
    f.Tvec = r * Jgrad;
    f.g_Z = push(f.Z);
    f.g_T = push(f.Tvec);
    f.g_grad = push(f.grad_r);

    const Eigen::Vector4d h = value_of(s.h);
    const Eigen::Vector4d hN = h - f.g_T;
    if (f.a_defined) {
        f.xi = -hN / (a * r);
        f.decomposition_residual = (h + r * (f.g_Z + a * f.xi)).norm() / r;
    } else {
        f.xi = fd.n1;
    }
    const Eigen::Vector4d gu = value_of(s.g_u), gv = value_of(s.g_v);
    f.delta = -cross3(gu, gv, f.xi) / E.v;
    f.delta_plus = -f.delta;
    f.delta_minus = f.delta;

    // Hessian in the g-metric: r_ab − Γ^k_ab r_k, then onto the orthonormal basis.
    Eigen::Matrix2d I;
    I << fd.E, fd.F, fd.F, fd.G;
    const Eigen::Matrix2d Iinv = I.inverse();
    const Eigen::VectorXd g_ab[3] = {fd.X_uu, fd.X_uv, fd.X_vv};
    const double r_ab[3] = {f.r.duu, f.r.duv, f.r.dvv};
    Eigen::Matrix2d hess;
    for (int k = 0; k < 3; ++k) {
        const Eigen::Vector2d proj(g_ab[k].dot(fd.X_u), g_ab[k].dot(fd.X_v));
        const Eigen::Vector2d gamma = Iinv * proj;
        const double val = r_ab[k] - gamma.dot(dr);
        if (k == 0) hess(0, 0) = val;
        if (k == 1) hess(0, 1) = hess(1, 0) = val;
        if (k == 2) hess(1, 1) = val;
    }
    f.hess_r = c * hess * c.transpose();
    f.S = Eigen::Matrix2d::Identity() - f.grad_r * f.grad_r.transpose();
    f.B_xi = fd.shape(Eigen::Vector2d(f.xi.dot(fd.n1), f.xi.dot(fd.n2)));
    const Eigen::Matrix2d rhs = (r * f.hess_r - f.S) * kJ;
    f.bxi_scale = max_entry(r * f.hess_r - f.S);
    f.bxi_residual = f.a_defined ? max_entry(a * r * f.B_xi - rhs) : 0.0;
    return f;
}

PhiSample build_phi(const MinimalPair& pair, Sign sign, cplx z) { return build_phi(split(pair, z), sign); }

PhiSample build_phi(const PairSample& s, Sign sign) {
    const double sg = sign_value(sign);
    PhiSample out;
    out.sign = sign;
    out.frame = construction_frame(s);

    // g + g_*(J h^T) + Ĵ± h^N with Ĵ± x = ±C(g_u, g_v, x)/E; C ignores the tangential part of h.
    const Jet2 E = dot(s.g_u, s.g_u);
    const Jet2 invE = recip(E);
    const Jet2 hgu = dot(s.h, s.g_u);
    const Jet2 hgv = dot(s.h, s.g_v);
    const Jet2Vec4 C = cross3(s.g_u, s.g_v, s.h);
    for (int k = 0; k < 4; ++k) {
        out.phi[k] = s.g[k] + (hgv * s.g_u[k] - hgu * s.g_v[k] + sg * C[k]) * invE;
    }

    const ConstructionFrame& f = out.frame;
    if (f.a_defined) {
        const Eigen::Vector4d route =
            value_of(s.g) - f.r.v * f.g_grad + sg * f.a.v * f.r.v * f.delta;
        out.route_difference = (value_of(out.phi) - route).norm();
    }

    // B_{Ĵβ} against −B_β∘J for β the first normal of g.
    const FundamentalData fd = fundamental_data(s.g);
    const Eigen::Vector4d gu = value_of(s.g_u), gv = value_of(s.g_v);
    const Eigen::Vector4d beta = fd.n1;
    const Eigen::Vector4d jbeta = sg * cross3(gu, gv, beta) / E.v;
    const Eigen::Matrix2d Bb = fd.shape(Eigen::Vector2d(beta.dot(fd.n1), beta.dot(fd.n2)));
    const Eigen::Matrix2d Bj = fd.shape(Eigen::Vector2d(jbeta.dot(fd.n1), jbeta.dot(fd.n2)));
    const double denom = std::max(max_entry(Bb), max_entry(Bj));
    out.holomorphic_residual = denom > 0.0 ? max_entry(Bj + kJ.transpose() * Bb) / denom : 0.0;

    out.flags = regularity_flags(out);
    return out;
}

RegularityFlags regularity_flags(const PhiSample& sample) {
    RegularityFlags fl;
    fl.a_small = sample.frame.a.v < kASmall;
    fl.g_holomorphic_point = sample.holomorphic_residual < 1e-6;
    const Eigen::Matrix2d I = first_form(sample.phi);
    const double det = I.determinant();
    const double sc = std::max(du_of(sample.phi).cwiseAbs().maxCoeff(), dv_of(sample.phi).cwiseAbs().maxCoeff());
    // The second test catches collapsed maps whose roundoff derivatives pass a self-relative floor.
    fl.rank_deficient = !(det > kRegularityFloor * sc * sc * sc * sc) ||
                        !(std::sqrt(std::max(det, 0.0)) > 1e-12 * sample.frame.g_area);
    return fl;
}

DualPairReport dual_pair_report(const MinimalPair& pair, cplx z) {
    const PairSample s = split(pair, z);
    const PhiSample ph[2] = {build_phi(s, Sign::plus), build_phi(s, Sign::minus)};
    for (const PhiSample& p : ph) {
        if (p.flags.rank_deficient || !p.frame.a_defined) {
            throw Error(ErrorKind::precondition, "dual_pair_report: both signs must be regular at z");
        }
    }
    const FundamentalData fg = fundamental_data(s.g);
    Eigen::Matrix2d Ig;
    Ig << fg.E, fg.F, fg.F, fg.G;
    const Eigen::Vector4d g = value_of(s.g);
    const ConstructionFrame& f = ph[0].frame;
    const Eigen::Vector4d zeta = f.g_Z + f.a.v * f.xi;

    DualPairReport rep;
    Eigen::Matrix2d scaled[2];
    for (int k = 0; k < 2; ++k) {
        const FundamentalData fp = fundamental_data(ph[k].phi);
        const EllipseDescriptor el = ellipse_descriptor(fp);
        const double lam = fp.lambda;
        rep.mu[k] = el.mu;
        rep.center_residual[k] = (fp.position + fp.H / (lam * lam) - g).norm() * lam;
        Eigen::Matrix2d Ip;
        Ip << fp.E, fp.F, fp.F, fp.G;
        const double factor = f.r.v * f.r.v * el.mu * el.mu / (f.a.v * f.a.v);
        rep.conformal_residual[k] = max_entry(Ig - factor * Ip) / fg.E;
        scaled[k] = el.mu * el.mu * Ip;
        rep.tangency_residual[k] = std::max({std::abs(zeta.dot(fp.X_u)) / fp.X_u.norm(),
                                             std::abs(zeta.dot(fp.X_v)) / fp.X_v.norm(),
                                             std::abs(zeta.dot(fp.H)) / lam});
    }
    rep.metric_relation = max_entry(scaled[0] - scaled[1]) / max_entry(scaled[0]);
    return rep;
}

double translation_residual(const MinimalPair& pair, const Eigen::Vector4d& v, cplx z) {
    MinimalPair moved = pair;
    moved.v_offset += v;
    double worst = 0.0;
    for (Sign sg : {Sign::plus, Sign::minus}) {
        const Eigen::Vector4d a = value_of(build_phi(pair, sg, z).phi);
        const Eigen::Vector4d b = value_of(build_phi(moved, sg, z).phi);
        worst = std::max(worst, std::abs((b - a).norm() - v.norm()));
    }
    return worst;
}

ExtractedPair extract_minimal_pair(std::span<const Jet2> sample, double tol) {
    const FundamentalData fd = fundamental_data(sample);
    const AdaptedFrame fr = adapted_frame(fd, tol);
    ExtractedPair out;
    out.g = fd.position + fr.eta / fr.lambda;
    out.h = -fr.zeta / fr.lambda;
    out.lambda = fr.lambda;
    out.mu = fr.mu;
    out.tangent_orientation_flipped = fr.tangent_orientation_flipped;
    return out;
}

SurfaceMap phi_map(const MinimalPair& pair, Sign sign) {
    return [pair, sign](double u, double v) {
        const Jet2Vec4 phi = build_phi(pair, sign, cplx(u, v)).phi;
        return SurfaceJet(phi.begin(), phi.end());
    };
}

}  // namespace superconf
