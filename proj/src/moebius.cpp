#include "superconf/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "superconf/error.hpp"
#include "superconf/parallel.hpp"

namespace superconf {

namespace {

bool is_lorentz(const Inversion& inv) { return inv.signature == Signature::lorentzian; }

double max_entry(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

// Coordinate first form and second form along ν, with the given ambient product.
void forms(std::span<const Jet2> x, const Eigen::VectorXd& nu, bool lor, Eigen::Matrix2d& I, Eigen::Matrix2d& B) {
    const Eigen::VectorXd xu = du_of(x), xv = dv_of(x);
    I << ambient_dot(xu, xu, lor), ambient_dot(xu, xv, lor), ambient_dot(xu, xv, lor), ambient_dot(xv, xv, lor);
    const double b12 = ambient_dot(duv_of(x), nu, lor);
    B << ambient_dot(duu_of(x), nu, lor), b12, b12, ambient_dot(dvv_of(x), nu, lor);
}

// Component of x orthogonal to span{a, b} (Euclidean).
Eigen::Vector4d normal_part(const Eigen::Vector4d& x, const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
    Eigen::Matrix2d G;
    G << a.dot(a), a.dot(b), a.dot(b), b.dot(b);
    const Eigen::Vector2d c = G.ldlt().solve(Eigen::Vector2d(x.dot(a), x.dot(b)));
    return x - c(0) * a - c(1) * b;
}

double hermitian_norm2(const C4& z) {
    double s = 0.0;
    for (const cplx& c : z) s += std::norm(c);
    return s;
}

bool in_null_quadric(const QuadricValue& q) {
    return is_constant(q) && std::abs(q.mean) < 1e-8 * (1.0 + q.max_hermitian);
}

}  // namespace

Eigen::VectorXd invert(const Eigen::VectorXd& x, const Inversion& inv) {
    const Eigen::VectorXd d = x - inv.center;
    const double q = ambient_dot(d, d, is_lorentz(inv));
    const double scale = std::max(d.squaredNorm(), inv.radius * inv.radius);
    if (std::abs(q) <= 1e-14 * scale) {
        throw Error(ErrorKind::singular, "inversion-singular: point on the center (or its light cone)", q);
    }
    const double r2 = is_lorentz(inv) ? -inv.radius * inv.radius : inv.radius * inv.radius;
    return inv.center + (r2 / q) * d;
}

SurfaceJet invert(std::span<const Jet2> x, const Inversion& inv) {
    const SurfaceJet d = sub(x, constant_vector(inv.center));
    const Jet2 q = dot(d, d, is_lorentz(inv));
    const double sq = std::max(value_of(d).squaredNorm(), inv.radius * inv.radius);
    if (std::abs(q.v) <= 1e-14 * sq) {
        throw Error(ErrorKind::singular, "inversion-singular: point on the center (or its light cone)", q.v);
    }
    const double r2 = is_lorentz(inv) ? -inv.radius * inv.radius : inv.radius * inv.radius;
    return add(constant_vector(inv.center), scale(r2 * recip(q), d));
}

NormalTransformResidual normal_transform_check(std::span<const Jet2> f, const Eigen::VectorXd& xi,
                                               const Inversion& inv) {
    const bool lor = is_lorentz(inv);
    const Eigen::VectorXd fu = du_of(f), fv = dv_of(f);
    const double unit = ambient_dot(xi, xi, lor);
    const double tang = std::max(std::abs(ambient_dot(xi, fu, lor)) / fu.norm(),
                                 std::abs(ambient_dot(xi, fv, lor)) / fv.norm());
    if (std::abs(unit - 1.0) > 1e-8 || tang > 1e-8) {
        throw Error(ErrorKind::precondition, "normal_transform_check: xi must be a unit normal of f",
                    std::max(std::abs(unit - 1.0), tang));
    }

    const Eigen::VectorXd d = value_of(f) - inv.center;
    const double dd = ambient_dot(d, d, lor);
    const double dxi = ambient_dot(d, xi, lor);
    const Eigen::VectorXd Pxi = xi - 2.0 * dxi / dd * d;

    Eigen::Matrix2d I, B;
    forms(f, xi, lor, I, B);
    const Eigen::Matrix2d A = I.inverse() * B;

    const SurfaceJet g = invert(f, inv);
    Eigen::Matrix2d It, Bt;
    forms(g, Pxi, lor, It, Bt);
    const Eigen::Matrix2d At = It.inverse() * Bt;

    const double r2 = lor ? -inv.radius * inv.radius : inv.radius * inv.radius;
    const Eigen::Matrix2d rhs = (dd * A + 2.0 * dxi * Eigen::Matrix2d::Identity()) / r2;

    NormalTransformResidual res;
    res.norm_defect = std::abs(std::sqrt(ambient_dot(Pxi, Pxi, lor)) - 1.0);
    const Eigen::VectorXd gu = du_of(g), gv = dv_of(g);
    res.normality_defect = std::max(std::abs(ambient_dot(Pxi, gu, lor)) / gu.norm(),
                                    std::abs(ambient_dot(Pxi, gv, lor)) / gv.norm());
    res.shape_defect = max_entry(At - rhs) / std::max(1.0, max_entry(rhs));
    res.residual = std::max({res.norm_defect, res.normality_defect, res.shape_defect});
    return res;
}

C4 holomorphic_inversion(const C4& Z, double R) {
    cplx q = 0.0;
    for (const cplx& c : Z) q += c * c;
    const double herm = hermitian_norm2(Z);
    if (std::abs(q) <= 1e-12 * std::max(herm, 1e-300)) {
        throw Error(ErrorKind::singular, "quadric-singular: Z lies on the null quadric", std::abs(q));
    }
    C4 out;
    for (int k = 0; k < 4; ++k) out[k] = R * R * Z[k] / q;
    return out;
}

C4 representative(const MinimalPair& pair, cplx z) {
    const auto jets = holo_eval(pair.source, z);
    C4 out;
    for (int k = 0; k < 4; ++k) out[k] = jets[k].value() + cplx(0.0, pair.v_offset(k));
    return out;
}

QuadricValue quadric_values(const MinimalPair& pair, const Grid& grid) {
    QuadricValue q;
    q.values.resize(grid.size());
    std::vector<double> herm(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const C4 Z = representative(pair, grid.point(i));
        q.values[i] = bilinear(Z, Z);
        herm[i] = hermitian_norm2(Z);
    });
    cplx sum = 0.0;
    for (const cplx& v : q.values) sum += v;
    q.mean = sum / static_cast<double>(q.values.size());
    for (std::size_t i = 0; i < q.values.size(); ++i) {
        q.max_deviation = std::max(q.max_deviation, std::abs(q.values[i] - q.mean));
        q.max_hermitian = std::max(q.max_hermitian, herm[i]);
    }
    return q;
}

bool is_constant(const QuadricValue& q) { return q.max_deviation < 1e-8 * (1.0 + std::abs(q.mean)); }

PairTransformReport pair_transform_check(const MinimalPair& pair, const Inversion& inv, const Grid& grid) {
    PairTransformReport rep;
    if (inv.signature != Signature::euclidean || inv.center.size() != 4) {
        throw Error(ErrorKind::precondition, "pair_transform_check: needs a Euclidean inversion in R^4");
    }
    if (in_null_quadric(quadric_values(pair, grid))) {
        rep.hypothesis_violated = true;
        return rep;
    }
    const Eigen::Vector4d P0 = inv.center;

    struct Point {
        bool ok[2] = {false, false};
        double err[2][2] = {{0, 0}, {0, 0}};
    };
    std::vector<Point> pts(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const cplx z = grid.point(idx);
        const PairSample s = split(pair, z);
        C4 Z;
        const Eigen::Vector4d g = value_of(s.g), h = value_of(s.h);
        for (int k = 0; k < 4; ++k) Z[k] = cplx(g(k) - P0(k), h(k));
        const C4 T = holomorphic_inversion(Z, inv.radius);
        Eigen::Vector4d gB, imT;
        for (int k = 0; k < 4; ++k) {
            gB(k) = P0(k) + T[k].real();
            imT(k) = T[k].imag();
        }
        for (int si = 0; si < 2; ++si) {
            try {
                const PhiSample ph = build_phi(s, si == 0 ? Sign::plus : Sign::minus);
                if (ph.flags.any()) continue;
                const ExtractedPair ex = extract_minimal_pair(invert(ph.phi, inv));
                const double eg = (ex.g - gB).norm();
                pts[idx].err[si][0] = std::max(eg, (ex.h + imT).norm());
                pts[idx].err[si][1] = std::max(eg, (ex.h - imT).norm());
                pts[idx].ok[si] = true;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::domain) throw;
            }
        }
    });

    for (const Point& p : pts) {
        ++rep.points;
        if (!p.ok[0] || !p.ok[1]) ++rep.skipped;
        for (int si = 0; si < 2; ++si) {
            if (!p.ok[si]) continue;
            for (int c = 0; c < 2; ++c) rep.sup_error[si][c] = std::max(rep.sup_error[si][c], p.err[si][c]);
        }
    }
    for (int si = 0; si < 2; ++si) rep.matched[si] = rep.sup_error[si][0] <= rep.sup_error[si][1] ? 0 : 1;
    return rep;
}

HolomorphicCurve transformed_curve(const MinimalPair& pair, const Eigen::Vector4d& center, double R) {
    using namespace expr;
    std::array<NodePtr, 4> Z;
    for (int k = 0; k < 4; ++k) {
        const cplx shift(-center(k), pair.v_offset(k));
        Z[k] = shift == cplx(0.0, 0.0) ? pair.source.ast.components[k]
                                       : make_binary(NodeKind::add, pair.source.ast.components[k], make_literal(shift));
    }
    NodePtr q = make_pow(Z[0], 2);
    for (int k = 1; k < 4; ++k) q = make_binary(NodeKind::add, q, make_pow(Z[k], 2));
    HolomorphicCurve out = pair.source;
    out.name = pair.source.name.empty() ? "" : pair.source.name + "-inverted";
    out.ast.declared = 4;
    for (int k = 0; k < 4; ++k) {
        NodePtr t = make_binary(NodeKind::div, make_binary(NodeKind::mul, make_literal(R * R), Z[k]), q);
        out.ast.components[k] = center(k) == 0.0 ? t : make_binary(NodeKind::add, make_literal(center(k)), t);
    }
    return out;
}

Eigen::Vector4d complex_j(const Eigen::Vector4d& x) { return {-x(1), x(0), -x(3), x(2)}; }

namespace {

struct C2Jets {
    Jet2Vec4 f, f_u, f_v;
};

C2Jets c2_jets(const HolomorphicCurve& curve, cplx z) {
    const auto jets = holo_eval(curve, z);
    C2Jets out;
    for (int k = 0; k < 2; ++k) {
        const ComplexJet d = jets[k].derivative();
        out.f[2 * k] = re_jet(jets[k]);
        out.f[2 * k + 1] = im_jet(jets[k]);
        out.f_u[2 * k] = re_jet(d);
        out.f_u[2 * k + 1] = im_jet(d);
        // ∂v = i d/dz, i.e. multiplication by i on C².
        out.f_v[2 * k] = -im_jet(d);
        out.f_v[2 * k + 1] = re_jet(d);
    }
    return out;
}

}  // namespace

DualityResult duality(const HolomorphicCurve& curve, cplx z) {
    const C2Jets c = c2_jets(curve, z);
    const Jet2 E = dot(c.f_u, c.f_u);
    const Jet2 pu = dot(c.f, c.f_u) / E;
    const Jet2 pv = dot(c.f, c.f_v) / E;
    Jet2Vec4 fN;
    for (int k = 0; k < 4; ++k) fN[k] = c.f[k] - pu * c.f_u[k] - pv * c.f_v[k];
    const Jet2 nn = dot(fN, fN);
    const Eigen::Vector4d fval = value_of(c.f);
    if (nn.v <= 1e-20 * std::max(1.0, fval.squaredNorm())) {
        throw Error(ErrorKind::singular, "duality-singular: normal component of the position vector vanishes",
                    std::sqrt(std::max(nn.v, 0.0)));
    }
    const Jet2 w = recip(2.0 * nn);

    DualityResult r;
    for (int k = 0; k < 4; ++k) r.jet[k] = w * fN[k];
    r.f_star = value_of(r.jet);
    const Eigen::Vector4d Fu = du_of(r.jet), Fv = dv_of(r.jet);
    r.anti_holomorphic = (Fv + complex_j(Fu)).norm() / Fu.norm();
    const Eigen::Vector4d FN = normal_part(r.f_star, Fu, Fv);
    const Eigen::Vector4d back = FN / (2.0 * FN.squaredNorm());
    r.involution = (back - fval).norm() / std::max(1.0, fval.norm());
    const double e = Fu.squaredNorm();
    r.conformality = std::max(std::abs(Fu.dot(Fv)), std::abs(e - Fv.squaredNorm())) / e;
    return r;
}

InvertedPair inversion_pair_of_holomorphic(const HolomorphicCurve& curve, const Inversion& inv, cplx z) {
    if (inv.signature != Signature::euclidean || inv.center.size() != 4) {
        throw Error(ErrorKind::precondition, "inversion_pair_of_holomorphic: needs a Euclidean inversion in R^4");
    }
    const C2Jets c = c2_jets(curve, z);
    const Eigen::Vector4d P0 = inv.center;
    const Eigen::Vector4d d = value_of(c.f) - P0;
    const Eigen::Vector4d dN = normal_part(d, du_of(c.f), dv_of(c.f));
    const double nn = dN.squaredNorm();
    if (nn <= 1e-20 * std::max(1.0, d.squaredNorm())) {
        throw Error(ErrorKind::singular, "inversion pair singular: normal component of f - P0 vanishes",
                    std::sqrt(nn));
    }
    const double R2 = inv.radius * inv.radius;
    InvertedPair out;
    out.g = P0 + R2 * dN / (2.0 * nn);
    out.h = R2 * complex_j(dN) / (2.0 * nn);
    out.image = invert(Eigen::VectorXd(value_of(c.f)), inv);

    const ExtractedPair ex = extract_minimal_pair(invert(c.f, inv));
    const double eg = (ex.g - out.g).norm();
    const double ep = (ex.h - out.h).norm(), em = (ex.h + out.h).norm();
    out.extracted_h_sign = ep <= em ? 1 : -1;
    out.cross_check = std::max(eg, std::min(ep, em));
    return out;
}

ComplexStructureFit recover_complex_structure(const MinimalPair& pair, const Grid& grid) {
    const QuadricValue q = quadric_values(pair, grid);
    double worst = 0.0;
    for (const cplx& v : q.values) worst = std::max(worst, std::abs(v));
    if (!(worst < 1e-9 * std::max(q.max_hermitian, 1e-300))) {
        throw Error(ErrorKind::precondition, "not-Q0: representative does not lie in the null quadric", worst);
    }

    const std::size_t n = grid.size();
    Eigen::MatrixXd X(4, 3 * n), Y(4, 3 * n);
    parallel_for(n, [&](std::size_t i) {
        const PairSample s = split(pair, grid.point(i));
        const Eigen::Index c = static_cast<Eigen::Index>(3 * i);
        X.col(c) = value_of(s.g);
        X.col(c + 1) = value_of(s.g_u);
        X.col(c + 2) = value_of(s.g_v);
        Y.col(c) = value_of(s.h);
        Y.col(c + 1) = -value_of(s.g_v);
        Y.col(c + 2) = value_of(s.g_u);
    });

    // 𝒥 X = Y in least squares via the SVD of X; complete on the unused complement by a rotation.
    auto fit = [](const Eigen::MatrixXd& Xs, const Eigen::MatrixXd& Ys, int& rank, Eigen::Matrix4d& U) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(Xs, Eigen::ComputeFullU | Eigen::ComputeThinV);
        const Eigen::VectorXd sv = svd.singularValues();
        rank = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k) {
            if (sv(k) > 1e-10 * sv(0)) ++rank;
        }
        U = svd.matrixU();
        Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
        for (int k = 0; k < rank; ++k) {
            J += (Ys * svd.matrixV().col(k) / sv(k)) * U.col(k).transpose();
        }
        return J;
    };

    ComplexStructureFit out;
    Eigen::Matrix4d U;
    out.J = fit(X, Y, out.data_rank, U);
    if (out.data_rank == 2) {
        const Eigen::Vector4d w1 = U.col(2), w2 = U.col(3);
        out.J += w2 * w1.transpose() - w1 * w2.transpose();
    }
    const Eigen::Matrix4d Id = Eigen::Matrix4d::Identity();
    out.square_residual = (out.J * out.J + Id).cwiseAbs().maxCoeff();
    out.orthogonality_residual = (out.J.transpose() * out.J - Id).cwiseAbs().maxCoeff();
    const double yscale = std::max(1.0, Y.cwiseAbs().maxCoeff());
    out.fit_residual = (out.J * X - Y).cwiseAbs().maxCoeff() / yscale;

    // Constancy: fits on the four quadrant blocks agree with the global 𝒥 on their own data span.
    const int hu = grid.nu / 2, hv = grid.nv / 2;
    for (int qu = 0; qu < 2; ++qu) {
        for (int qv = 0; qv < 2; ++qv) {
            std::vector<Eigen::Index> cols;
            for (int i = qu * hu; i < (qu ? grid.nu : hu); ++i) {
                for (int j = qv * hv; j < (qv ? grid.nv : hv); ++j) {
                    const Eigen::Index base = 3 * (static_cast<Eigen::Index>(i) * grid.nv + j);
                    for (int c = 0; c < 3; ++c) cols.push_back(base + c);
                }
            }
            if (cols.empty()) continue;
            Eigen::MatrixXd Xq(4, cols.size()), Yq(4, cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                Xq.col(static_cast<Eigen::Index>(c)) = X.col(cols[c]);
                Yq.col(static_cast<Eigen::Index>(c)) = Y.col(cols[c]);
            }
            int rank = 0;
            Eigen::Matrix4d Uq;
            const Eigen::Matrix4d Jq = fit(Xq, Yq, rank, Uq);
            Eigen::Matrix4d P = Eigen::Matrix4d::Zero();
            for (int k = 0; k < rank; ++k) P += Uq.col(k) * Uq.col(k).transpose();
            out.constancy_residual = std::max(out.constancy_residual, ((Jq - out.J) * P).cwiseAbs().maxCoeff());
        }
    }
    return out;
}

CollapseReport holomorphic_collapse_check(const MinimalPair& pair, const Grid& grid) {
    CollapseReport rep;
    rep.fit = recover_complex_structure(pair, grid);

    struct Point {
        bool ok = false;
        Eigen::Vector4d phi[2];
        Eigen::Vector4d twice_gN;
    };
    std::vector<Point> pts(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        try {
            const PairSample s = split(pair, grid.point(i));
            Point& p = pts[i];
            p.phi[0] = value_of(build_phi(s, Sign::plus).phi);
            p.phi[1] = value_of(build_phi(s, Sign::minus).phi);
            p.twice_gN = 2.0 * normal_part(value_of(s.g), value_of(s.g_u), value_of(s.g_v));
            p.ok = true;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::domain) throw;
        }
    });

    const Point* first = nullptr;
    for (const Point& p : pts) {
        if (p.ok) {
            first = &p;
            break;
        }
    }
    if (!first) throw Error(ErrorKind::numerical, "holomorphic_collapse_check: no evaluable grid point");
    double variation[2] = {0, 0};
    for (const Point& p : pts) {
        if (!p.ok) continue;
        for (int k = 0; k < 2; ++k) variation[k] = std::max(variation[k], (p.phi[k] - first->phi[k]).norm());
    }
    const int c = variation[1] <= variation[0] ? 1 : 0;
    const int o = 1 - c;
    rep.constant_sign = c == 0 ? Sign::plus : Sign::minus;
    rep.constant_value = first->phi[c];
    rep.constant_variation = variation[c];
    rep.other_variation = variation[o];
    for (const Point& p : pts) {
        if (p.ok) rep.other_vs_2gN = std::max(rep.other_vs_2gN, (p.phi[o] - p.twice_gN).norm());
    }
    return rep;
}

Ambient space_form_ambient(double R, SpaceForm space) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
    if (space == SpaceForm::sphere) {
        c(4) = R;
        return Ambient::sphere(R, c);
    }
    c(4) = -R;
    return Ambient::hyperbolic(R, c);
}

namespace {

void check_on_space_form(const Eigen::VectorXd& P, double R, SpaceForm space) {
    if (P.size() != 5) throw Error(ErrorKind::precondition, "stereo: expected a point of R^5");
    Eigen::VectorXd d = P;
    if (space == SpaceForm::sphere) {
        d(4) -= R;
        if (std::abs(d.norm() - R) > 1e-9 * R) {
            throw Error(ErrorKind::precondition, "stereo: point is off the sphere", std::abs(d.norm() - R));
        }
    } else {
        d(4) += R;
        const double q = ambient_dot(d, d, true);
        if (std::abs(q + R * R) > 1e-9 * (R * R + d.squaredNorm())) {
            throw Error(ErrorKind::precondition, "stereo: point is off the hyperbolic space", std::abs(q + R * R));
        }
    }
}

}  // namespace

Eigen::VectorXd stereo(const Eigen::VectorXd& P, double R, SpaceForm space, StereoDirection dir) {
    if (dir == StereoDirection::to_r4) {
        check_on_space_form(P, R, space);
        if (space == SpaceForm::sphere) {
            Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
            c(4) = 2 * R;
            return invert(P, Inversion{c, 2 * R}).head(4);
        }
        if (!(P(4) + R > 0.0)) {
            throw Error(ErrorKind::precondition, "stereo: point is on the lower sheet of the hyperboloid");
        }
        return 2 * R * P.head(4) / (P(4) + 2 * R);
    }
    if (P.size() != 4) throw Error(ErrorKind::precondition, "stereo: expected a point of R^4");
    if (space == SpaceForm::sphere) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(5);
        x.head(4) = P;
        Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
        c(4) = 2 * R;
        return invert(x, Inversion{c, 2 * R});
    }
    const double den = 4 * R * R - P.squaredNorm();
    if (!(den > 0.0)) throw Error(ErrorKind::precondition, "stereo: point outside the ball B(0;2R)", P.norm());
    Eigen::VectorXd X(5);
    X.head(4) = 4 * R * R * P / den;
    X(4) = -2 * R + 8 * R * R * R / den;
    return X;
}

SurfaceJet stereo(std::span<const Jet2> P, double R, SpaceForm space, StereoDirection dir) {
    const Eigen::VectorXd val = value_of(P);
    if (dir == StereoDirection::to_r4) {
        check_on_space_form(val, R, space);
        if (space == SpaceForm::sphere) {
            Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
            c(4) = 2 * R;
            SurfaceJet q = invert(P, Inversion{c, 2 * R});
            q.pop_back();
            return q;
        }
        if (!(val(4) + R > 0.0)) {
            throw Error(ErrorKind::precondition, "stereo: point is on the lower sheet of the hyperboloid");
        }
        const Jet2 s = (2 * R) * recip(P[4] + 2 * R);
        return scale(s, P.subspan(0, 4));
    }
    if (P.size() != 4) throw Error(ErrorKind::precondition, "stereo: expected a point of R^4");
    if (space == SpaceForm::sphere) {
        SurfaceJet x(P.begin(), P.end());
        x.push_back(Jet2::constant(0.0));
        Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
        c(4) = 2 * R;
        return invert(x, Inversion{c, 2 * R});
    }
    const Jet2 den = 4 * R * R - dot(P, P);
    if (!(den.v > 0.0)) throw Error(ErrorKind::precondition, "stereo: point outside the ball B(0;2R)");
    const Jet2 w = recip(den);
    SurfaceJet X = scale(4 * R * R * w, P);
    X.push_back(-2 * R + 8 * R * R * R * w);
    return X;
}

SuperminimalReport superminimal_test(const std::vector<SurfaceJet>& samples, double R, SpaceForm space,
                                     double tol_H, double tol_circ) {
    const Ambient amb = space_form_ambient(R, space);
    SuperminimalReport rep;
    bool all_points = true;
    for (const SurfaceJet& s : samples) {
        check_on_space_form(value_of(s), R, space);
        const FundamentalData fd = fundamental_data(s, amb);
        const SuperconformalityReport sc = superconformality_test(fd, tol_circ);
        const EllipseDescriptor el = ellipse_descriptor(fd);
        rep.max_H = std::max(rep.max_H, fd.lambda);
        rep.max_res_orth = std::max(rep.max_res_orth, sc.res_orth);
        rep.max_res_len = std::max(rep.max_res_len, sc.res_len);
        rep.max_wintgen = std::max(rep.max_wintgen, std::abs(sc.wintgen_defect));
        all_points = all_points && el.semi_major <= 1e-9 * (1.0 + fd.curvature_scale());
        ++rep.points;
    }
    rep.minimal = rep.max_H < tol_H;
    rep.superconformal = rep.max_res_orth < tol_circ && rep.max_res_len < tol_circ;
    rep.degenerate = rep.points > 0 && all_points;
    return rep;
}

const char* to_string(QuadricKind k) {
    switch (k) {
        case QuadricKind::non_constant: return "non-constant";
        case QuadricKind::null_quadric: return "Q0";
        case QuadricKind::real_constant: return "real-constant";
        case QuadricKind::nonreal_constant: return "nonreal-constant";
    }
    return "?";
}

QuadricClassification quadric_criterion(const MinimalPair& pair, const Grid& grid) {
    QuadricClassification out;
    out.stats = quadric_values(pair, grid);
    const cplx m = out.stats.mean;
    if (!is_constant(out.stats)) {
        out.kind = QuadricKind::non_constant;
        return out;
    }
    if (in_null_quadric(out.stats)) {
        out.kind = QuadricKind::null_quadric;
        return out;
    }
    if (std::abs(m.imag()) > 1e-8 * (1.0 + std::abs(m))) {
        out.kind = QuadricKind::nonreal_constant;
        return out;
    }
    out.kind = QuadricKind::real_constant;
    out.k = m.real();
    out.inferred_R = std::sqrt(std::abs(out.k)) / 2.0;

    // Lift φ± into each space form and test superminimality; a lift that fails anywhere fails.
    for (SpaceForm space : {SpaceForm::sphere, SpaceForm::hyperbolic}) {
        double best = std::numeric_limits<double>::infinity();
        bool pass = false;
        for (Sign sg : {Sign::plus, Sign::minus}) {
            std::vector<SurfaceJet> lifted(grid.size());
            std::vector<char> ok(grid.size(), 0);
            parallel_for(grid.size(), [&](std::size_t i) {
                try {
                    const PhiSample ph = build_phi(pair, sg, grid.point(i));
                    if (ph.flags.any()) return;
                    lifted[i] = stereo(ph.phi, out.inferred_R, space, StereoDirection::from_r4);
                    ok[i] = 1;
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::domain) throw;
                }
            });
            std::vector<SurfaceJet> samples;
            bool complete = true;
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                if (ok[i]) {
                    samples.push_back(std::move(lifted[i]));
                } else {
                    complete = false;
                }
            }
            if (samples.empty()) continue;
            try {
                const SuperminimalReport r = superminimal_test(samples, out.inferred_R, space, 1e-7, 1e-6);
                best = std::min(best, r.max_H);
                pass = pass || (complete && r.minimal && r.superconformal);
            } catch (const Error&) {
            }
        }
        if (space == SpaceForm::sphere) {
            out.sphere_passes = pass;
            out.sphere_H = best;
        } else {
            out.hyperbolic_passes = pass;
            out.hyperbolic_H = best;
        }
    }
    return out;
}

}  // namespace superconf
