#include "superconf/minimal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "superconf/construct.hpp"
#include "superconf/error.hpp"
#include "superconf/geometry.hpp"
#include "superconf/parallel.hpp"

namespace superconf {

bool Domain::contains(cplx z) const {
    if (!rect.contains(z.real(), z.imag())) return false;
    for (const auto& [c, rad] : excluded) {
        if (std::abs(z - c) < rad) return false;
    }
    return true;
}

// The last index returns the endpoint itself; u0 + (u1 - u0) can overshoot by an ulp.
double Grid::u(int i) const { return i == nu - 1 ? rect.u1 : rect.u0 + (rect.u1 - rect.u0) * i / (nu - 1); }
double Grid::v(int j) const { return j == nv - 1 ? rect.v1 : rect.v0 + (rect.v1 - rect.v0) * j / (nv - 1); }

cplx Grid::point(std::size_t index) const {
    const int i = static_cast<int>(index / static_cast<std::size_t>(nv));
    const int j = static_cast<int>(index % static_cast<std::size_t>(nv));
    return {u(i), v(j)};
}

HolomorphicCurve HolomorphicCurve::from_text(const std::string& text, const Domain& domain, const std::string& name) {
    return HolomorphicCurve{expr::parse_curve(text), domain, name};
}

std::array<ComplexJet, 4> holo_eval(const HolomorphicCurve& curve, cplx z) {
    if (!curve.domain.contains(z)) {
        std::ostringstream msg;
        msg << "z = (" << z.real() << ", " << z.imag() << ") outside the declared domain";
        throw Error(ErrorKind::domain, msg.str());
    }
    return expr::evaluate(curve.ast, z);
}

PairSample split(const MinimalPair& pair, cplx z) {
    const SeededSurface s = seed_surface(holo_eval(pair.source, z));
    PairSample out{s.g, s.h, s.g_u, s.g_v};
    for (int k = 0; k < 4; ++k) out.h[k].v += pair.v_offset(k);
    return out;
}

cplx bilinear(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
    cplx s = 0.0;
    for (int k = 0; k < 4; ++k) s += a[k] * b[k];
    return s;
}

Certificate certify(const HolomorphicCurve& curve, const Grid& grid, const CertifyThresholds& th) {
    struct Point {
        double iso = 0, herm = 0, conj = 0, lambda = 0, kappa = 0;
        bool regular = true;
    };
    std::vector<Point> pts(grid.size());
    const MinimalPair pair{curve, Eigen::Vector4d::Zero()};
    parallel_for(grid.size(), [&](std::size_t idx) {
        const cplx z = grid.point(idx);
        const auto jets = holo_eval(curve, z);
        std::array<cplx, 4> d;
        double herm = 0.0;
        for (int k = 0; k < 4; ++k) {
            d[k] = jets[k].c[1];
            herm += std::norm(d[k]);
        }
        Point& p = pts[idx];
        p.herm = herm;
        p.iso = herm > 0.0 ? std::abs(bilinear(d, d)) / herm : 1.0;
        const PairSample s = split(pair, z);
        for (int k = 0; k < 4; ++k) {
            p.conj = std::max({p.conj, std::abs(s.h[k].du + s.g[k].dv), std::abs(s.h[k].dv - s.g[k].du)});
        }
        try {
            const FundamentalData fd = fundamental_data(s.g);
            p.lambda = fd.lambda;
            p.kappa = fd.curvature_scale();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::singular) throw;
            p.regular = false;
        }
    });

    Certificate c;
    c.points = grid.size();
    c.regularity_min = pts.empty() ? 0.0 : pts.front().herm;
    double lambda_max = 0.0, kappa_max = 0.0;
    bool regular = true;
    for (const Point& p : pts) {
        c.isotropy_max = std::max(c.isotropy_max, p.iso);
        c.regularity_min = std::min(c.regularity_min, p.herm);
        c.conjugacy_max = std::max(c.conjugacy_max, p.conj);
        lambda_max = std::max(lambda_max, p.lambda);
        kappa_max = std::max(kappa_max, p.kappa);
        regular = regular && p.regular;
    }
    c.minimality_max = kappa_max > 0.0 ? lambda_max / kappa_max : 0.0;
    c.passed = regular && c.isotropy_max < th.isotropy && c.minimality_max < th.minimality &&
               c.regularity_min > th.regularity && c.conjugacy_max == 0.0;
    return c;
}

MinimalPair associated_family(const MinimalPair& pair, double theta) {
    if (theta == 0.0) return pair;
    const expr::NodePtr factor = expr::make_literal(std::polar(1.0, -theta));
    MinimalPair out = pair;
    out.v_offset.setZero();
    for (int k = 0; k < 4; ++k) {
        expr::NodePtr comp = pair.source.ast.components[k];
        if (pair.v_offset(k) != 0.0) {
            comp = expr::make_binary(expr::NodeKind::add, comp, expr::make_literal(cplx(0.0, pair.v_offset(k))));
        }
        out.source.ast.components[k] = expr::make_binary(expr::NodeKind::mul, factor, comp);
    }
    out.source.ast.declared = 4;
    return out;
}

ReflectionReport reflection_pair_check(const MinimalPair& pair, const Grid& grid) {
    struct Point {
        double residual = 0;
        double g4 = 0;
        double gscale = 0;
        bool ok = false;
    };
    std::vector<Point> pts(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const cplx z = grid.point(idx);
        const PairSample s = split(pair, z);
        Point& p = pts[idx];
        p.g4 = std::max({std::abs(s.g[3].v), std::abs(s.g[3].du), std::abs(s.g[3].dv)});
        p.gscale = std::max(1.0, value_of(s.g).cwiseAbs().maxCoeff());
        try {
            const Eigen::VectorXd plus = value_of(build_phi(pair, Sign::plus, z).phi);
            Eigen::VectorXd minus = value_of(build_phi(pair, Sign::minus, z).phi);
            minus(3) = -minus(3);
            p.residual = (plus - minus).norm();
            p.ok = true;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::domain) throw;
        }
    });

    ReflectionReport r;
    for (const Point& p : pts) {
        if (p.g4 > 1e-12 * p.gscale) {
            throw Error(ErrorKind::precondition, "reflection_pair_check: g is not contained in R^3", p.g4);
        }
    }
    for (const Point& p : pts) {
        if (!p.ok) {
            ++r.skipped;
            continue;
        }
        ++r.points;
        r.max_residual = std::max(r.max_residual, p.residual);
    }
    return r;
}

}  // namespace superconf
