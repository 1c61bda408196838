#include <cmath>
#include <random>

#include "superconf/catalog.hpp"
#include "superconf/moebius.hpp"
#include "test_util.hpp"

using namespace superconf;

TEST(Inversion, IsAnInvolution) {
    const Inversion inv{(Eigen::VectorXd(4) << 0.3, -1, 2, 0.5).finished(), 1.7};
    const Eigen::VectorXd x = (Eigen::VectorXd(4) << 1, 2, 3, 4).finished();
    EXPECT_LT(vec_dist(invert(invert(x, inv), inv), x), 1e-13);
    const Inversion lor{(Eigen::VectorXd(5) << 0, 0, 0, 0, -3).finished(), 2.0, Signature::lorentzian};
    const Eigen::VectorXd y = (Eigen::VectorXd(5) << 0.5, 0.1, 0.2, 0.3, 0.4).finished();
    EXPECT_LT(vec_dist(invert(invert(y, lor), lor), y), 1e-13);
}

TEST(Inversion, CenterIsSingular) {
    const Inversion inv{Eigen::VectorXd::Zero(4), 1.0};
    EXPECT_ERROR_KIND(invert(Eigen::VectorXd(Eigen::VectorXd::Zero(4)), inv), ErrorKind::singular);
}

TEST(NormalTransform, EuclideanAndLorentzian) {
    const catalog::CatalogEntry cat = catalog::get("catenoid-helicoid");
    const SurfaceJet f = catalog::oracle(cat, "g")(1.2, 0.3);
    const FundamentalData fd = fundamental_data(f);
    const Inversion inv{(Eigen::VectorXd(4) << 0.1, 0.2, 0.3, 1.0).finished(), 0.8};
    EXPECT_LT(normal_transform_check(f, fd.n1, inv).residual, 1e-7);
    EXPECT_LT(normal_transform_check(f, fd.n2, inv).residual, 1e-7);

    const catalog::CatalogEntry hyp = catalog::get("hyperbolic-catenoid");
    const SurfaceJet fh = hyp.surface(2.0, -0.7);
    const FundamentalData fdh = fundamental_data(fh, hyp.ambient);
    const Inversion lor{(Eigen::VectorXd(5) << 0.1, 0.2, -0.3, 0.4, 2.0).finished(), 1.3, Signature::lorentzian};
    EXPECT_LT(normal_transform_check(fh, fdh.n1, lor).residual, 1e-7);
    EXPECT_LT(normal_transform_check(fh, fdh.n2, lor).residual, 1e-7);
}

TEST(NormalTransform, RequiresAUnitNormal) {
    const catalog::CatalogEntry cat = catalog::get("catenoid-helicoid");
    const SurfaceJet f = catalog::oracle(cat, "g")(1.2, 0.3);
    const FundamentalData fd = fundamental_data(f);
    const Inversion inv{Eigen::VectorXd::Zero(4), 1.0};
    EXPECT_ERROR_KIND(normal_transform_check(f, fd.X_u.normalized(), inv), ErrorKind::precondition);
    EXPECT_ERROR_KIND(normal_transform_check(f, 2.0 * fd.n1, inv), ErrorKind::precondition);
}

TEST(HolomorphicInversion, SingularOnTheNullQuadric) {
    EXPECT_ERROR_KIND(holomorphic_inversion(C4{1.0, cplx(0, 1), 0.0, 0.0}, 1.0), ErrorKind::singular);
    const C4 t = holomorphic_inversion(C4{2.0, 0.0, 0.0, 0.0}, 1.0);
    EXPECT_LT(std::abs(t[0] - 0.5), 1e-15);
}

TEST(PairTransform, CatenoidBothRoutesAgree) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    const PairTransformReport r =
        pair_transform_check(*e.pair, Inversion{Eigen::Vector4d(0, 0, 0, 5), 1.0}, Grid{e.grid, 10, 10});
    EXPECT_FALSE(r.hypothesis_violated);
    EXPECT_LT(r.best(0), 1e-5);
    EXPECT_LT(r.best(1), 1e-5);
    EXPECT_NE(r.matched[0], r.matched[1]);
}

TEST(PairTransform, NullQuadricViolatesTheHypothesis) {
    const catalog::CatalogEntry e = catalog::get("q0-trig");
    const PairTransformReport r =
        pair_transform_check(*e.pair, Inversion{Eigen::Vector4d::Zero(), 1.0}, Grid{e.grid, 5, 5});
    EXPECT_TRUE(r.hypothesis_violated);
}

TEST(TransformedCurve, RecertifiesAsAMinimalPair) {
    const catalog::CatalogEntry e = catalog::get("enneper-r3");
    const HolomorphicCurve t = transformed_curve(*e.pair, Eigen::Vector4d(0, 0, 0, 3), 1.0);
    EXPECT_TRUE(certify(t, Grid{e.grid, 10, 10}).passed);
    // Re-parses from its printed form.
    const HolomorphicCurve back = HolomorphicCurve::from_text(t.text(), t.domain);
    EXPECT_TRUE(expr::equal(back.ast, t.ast));
}

TEST(Duality, WhitneyValueAndInvolution) {
    const catalog::CatalogEntry w = catalog::get("whitney-curve");
    const DualityResult d = duality(*w.curve, 1.0);
    EXPECT_LT(vec_dist(d.f_star, Eigen::Vector4d(0.25, 0, 0.25, 0)), 1e-15);
    EXPECT_LT(d.anti_holomorphic, 1e-12);
    EXPECT_LT(d.involution, 1e-12);
    EXPECT_LT(d.conformality, 1e-12);
}

TEST(Duality, NormalComponentVanishingIsSingular) {
    // f(z) = (z, 0): the position vector is tangent everywhere.
    const HolomorphicCurve f = HolomorphicCurve::from_text("(z, 0)", Domain{Rect{0.2, 1, 0.2, 1}, {}});
    EXPECT_ERROR_KIND(duality(f, cplx(0.5, 0.5)), ErrorKind::singular);
}

TEST(InversionPair, WhitneyMatchesCatalog) {
    const catalog::CatalogEntry w = catalog::get("whitney-curve"), pair = catalog::get("whitney");
    const InvertedPair ip = inversion_pair_of_holomorphic(*w.curve, Inversion{Eigen::Vector4d::Zero(), 1.0}, {0.8, 0.3});
    EXPECT_LT(vec_dist(ip.g, catalog::expected_eval(pair, "g", 0.8, 0.3)), 1e-13);
    EXPECT_LT(vec_dist(ip.h, catalog::expected_eval(pair, "h", 0.8, 0.3)), 1e-13);
    EXPECT_LT(ip.cross_check, 1e-10);
    const cplx z(0.8, 0.3), zi = 1.0 / z;
    const Eigen::Vector4d f(z.real(), z.imag(), zi.real(), zi.imag());
    EXPECT_LT(vec_dist(ip.image, f / f.squaredNorm()), 1e-15);
}

TEST(ComplexStructure, NotQ0IsAPrecondition) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    EXPECT_ERROR_KIND(recover_complex_structure(*e.pair, Grid{e.grid, 4, 4}), ErrorKind::precondition);
}

TEST(ComplexStructure, CollapseOnQ0Curves) {
    for (const char* name : {"q0-line", "q0-trig"}) {
        const catalog::CatalogEntry e = catalog::get(name);
        const CollapseReport r = holomorphic_collapse_check(*e.pair, Grid{e.grid, 8, 8});
        EXPECT_LT(r.fit.square_residual, 1e-9) << name;
        EXPECT_LT(r.fit.orthogonality_residual, 1e-9) << name;
        EXPECT_LT(r.constant_variation, 1e-9) << name;
        EXPECT_LT(r.other_vs_2gN, 1e-9) << name;
    }
}

TEST(Stereo, RoundTripsAndPreconditions) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-0.9, 0.9);
    for (SpaceForm sf : {SpaceForm::sphere, SpaceForm::hyperbolic}) {
        for (int k = 0; k < 20; ++k) {
            Eigen::VectorXd y(4);
            for (int m = 0; m < 4; ++m) y(m) = U(rng);
            const Eigen::VectorXd P = stereo(y, 1.0, sf, StereoDirection::from_r4);
            EXPECT_LT(vec_dist(stereo(P, 1.0, sf, StereoDirection::to_r4), y), 1e-11);
        }
    }
    Eigen::VectorXd off = Eigen::VectorXd::Zero(5);
    off(0) = 3.0;
    EXPECT_ERROR_KIND(stereo(off, 1.0, SpaceForm::sphere, StereoDirection::to_r4), ErrorKind::precondition);
    EXPECT_ERROR_KIND(stereo(Eigen::VectorXd(Eigen::VectorXd::Constant(4, 1.5)), 1.0, SpaceForm::hyperbolic,
                             StereoDirection::from_r4),
                      ErrorKind::precondition);
}

TEST(Stereo, SphereOriginAndPole) {
    // The origin of R⁴ is the point of S⁴(e5; R) opposite to the pole 2Re5.
    const Eigen::VectorXd P = stereo(Eigen::VectorXd(Eigen::VectorXd::Zero(4)), 2.0, SpaceForm::sphere,
                                     StereoDirection::from_r4);
    EXPECT_LT(P.norm(), 1e-15);
}

TEST(Superminimal, GreatSphereIsDegenerate) {
    const catalog::CatalogEntry e = catalog::get("great-sphere-s4");
    std::vector<SurfaceJet> s = {e.surface(1.0, 0.5), e.surface(2.0, 1.5)};
    const SuperminimalReport r = superminimal_test(s, 1.0, SpaceForm::sphere);
    EXPECT_TRUE(r.minimal);
    EXPECT_TRUE(r.degenerate);
}

TEST(Superminimal, TorusInS4IsNotMinimal) {
    const catalog::CatalogEntry e = catalog::get("torus-s4");
    const SuperminimalReport r = superminimal_test({e.surface(1.0, 0.5)}, 1.0, SpaceForm::sphere);
    EXPECT_FALSE(r.minimal);
}

TEST(Quadric, Classifications) {
    auto classify = [](const char* name) {
        const catalog::CatalogEntry e = catalog::get(name);
        return quadric_criterion(*e.pair, Grid{e.grid, 8, 8});
    };
    EXPECT_EQ(classify("q0-line").kind, QuadricKind::null_quadric);
    EXPECT_EQ(classify("q0-trig").kind, QuadricKind::null_quadric);
    EXPECT_EQ(classify("catenoid-helicoid").kind, QuadricKind::non_constant);
    const QuadricClassification v = classify("veronese");
    EXPECT_EQ(v.kind, QuadricKind::real_constant);
    EXPECT_NEAR(std::abs(v.k), 4.0, 1e-8);
    EXPECT_NEAR(v.inferred_R, 1.0, 1e-9);
    EXPECT_TRUE(v.sphere_passes);
    EXPECT_FALSE(v.hyperbolic_passes);
}

TEST(Quadric, VeronesePhiIsTheStereographicVeronese) {
    const catalog::CatalogEntry ver = catalog::get("veronese"), s4 = catalog::get("veronese-s4");
    for (double phi : {0.6, 1.3}) {
        for (double theta : {0.4, 1.1}) {
            const Eigen::VectorXd lifted = value_of(stereo(s4.surface(phi, theta), 1.0, SpaceForm::sphere, StereoDirection::to_r4));
            const Eigen::VectorXd built = value_of(build_phi(*ver.pair, Sign::plus, catalog::veronese_w(phi, theta)).phi);
            EXPECT_LT(vec_dist(lifted, built), 1e-12);
        }
    }
}
