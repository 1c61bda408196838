#include <cmath>
#include <numbers>

#include "superconf/catalog.hpp"
#include "superconf/geometry.hpp"
#include "test_util.hpp"

using namespace superconf;

namespace {

FundamentalData at(const catalog::CatalogEntry& e, double u, double v) {
    return fundamental_data(e.surface(u, v), e.ambient);
}

}  // namespace

TEST(FundamentalData, RoundSphere) {
    const catalog::CatalogEntry e = catalog::get("round-sphere");
    const FundamentalData fd = at(e, 1.1, 0.4);
    EXPECT_NEAR(fd.K, 0.25, 1e-12);
    EXPECT_NEAR(fd.KN, 0.0, 1e-12);
    EXPECT_NEAR(fd.lambda, 0.5, 1e-12);
    const SuperconformalityReport sc = superconformality_test(fd);
    EXPECT_TRUE(sc.is_superconformal);
    EXPECT_NEAR(sc.wintgen_defect, 0.0, 1e-12);
}

TEST(FundamentalData, ProductTorusIsNotSuperconformal) {
    const catalog::CatalogEntry e = catalog::get("torus");
    const FundamentalData fd = at(e, 0.3, 2.0);
    EXPECT_NEAR(fd.K, 0.0, 1e-12);
    EXPECT_NEAR(fd.KN, 0.0, 1e-12);
    EXPECT_NEAR(fd.lambda * fd.lambda, 5.0 / 16.0, 1e-12);
    const SuperconformalityReport sc = superconformality_test(fd);
    EXPECT_FALSE(sc.is_superconformal);
    EXPECT_NEAR(sc.wintgen_defect, 5.0 / 16.0, 1e-12);
}

TEST(FundamentalData, VeroneseIsSuperminimalInTheSphere) {
    const catalog::CatalogEntry e = catalog::get("veronese-s4");
    for (double phi : {0.5, 1.2, 2.4}) {
        const FundamentalData fd = at(e, phi, 0.9);
        EXPECT_LT(fd.lambda, 1e-9);
        const SuperconformalityReport sc = superconformality_test(fd);
        EXPECT_LT(sc.res_orth, 1e-8);
        EXPECT_LT(sc.res_len, 1e-8);
        EXPECT_NEAR(sc.wintgen_defect, 0.0, 1e-9);
    }
}

TEST(FundamentalData, GreatSphereIsTotallyGeodesic) {
    const catalog::CatalogEntry e = catalog::get("great-sphere-s4");
    const FundamentalData fd = at(e, 1.0, 1.0);
    EXPECT_LT(fd.lambda, 1e-12);
    EXPECT_LT(fd.curvature_scale(), 1e-12);
    EXPECT_NEAR(fd.K, 1.0, 1e-12);
}

TEST(FundamentalData, HyperbolicFixtureLiesOnTheHyperboloid) {
    const catalog::CatalogEntry e = catalog::get("hyperbolic-catenoid");
    const FundamentalData fd = at(e, 1.0, 0.5);
    Eigen::VectorXd d = fd.position - e.ambient.center;
    EXPECT_NEAR(ambient_dot(d, d, true), -1.0, 1e-12);
    EXPECT_NEAR(ambient_dot(fd.n1, fd.n1, true), 1.0, 1e-12);
    EXPECT_NEAR(ambient_dot(fd.n1, fd.X_u, true), 0.0, 1e-12);
    EXPECT_NEAR(ambient_dot(fd.n2, d, true), 0.0, 1e-12);
}

TEST(FundamentalData, WintgenInequalityOnCatalogSurfaces) {
    for (const char* name : {"torus", "round-sphere", "great-sphere-s4", "torus-s4", "hyperbolic-catenoid", "veronese-s4"}) {
        const catalog::CatalogEntry e = catalog::get(name);
        const Grid g{e.grid, 7, 7};
        for (std::size_t i = 0; i < g.size(); ++i) {
            const FundamentalData fd = at(e, g.point(i).real(), g.point(i).imag());
            EXPECT_GE(superconformality_test(fd).wintgen_defect, -1e-9) << name;
        }
    }
}

TEST(FundamentalData, DegenerateImmersionIsSingular) {
    const SurfaceJet line = {Jet2::param_u(0.3), Jet2::param_u(0.3), Jet2::constant(0), Jet2::constant(0)};
    EXPECT_ERROR_KIND(fundamental_data(line), ErrorKind::singular);
}

TEST(FundamentalData, FrameIsOrthonormal) {
    const catalog::CatalogEntry e = catalog::get("torus-s4");
    const FundamentalData fd = at(e, 0.7, 1.9);
    Eigen::MatrixXd M(5, 4);
    M << fd.Y1, fd.Y2, fd.n1, fd.n2;
    EXPECT_LT((M.transpose() * M - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(AdaptedFrame, RejectsNonSuperconformalAndUmbilic) {
    const catalog::CatalogEntry torus = catalog::get("torus");
    EXPECT_ERROR_KIND(adapted_frame(at(torus, 0.3, 0.4)), ErrorKind::precondition);
    const catalog::CatalogEntry sphere = catalog::get("round-sphere");
    EXPECT_ERROR_KIND(adapted_frame(at(sphere, 1.0, 0.4)), ErrorKind::degenerate);
}

TEST(Ellipse, TorusEllipseIsASegment) {
    const catalog::CatalogEntry e = catalog::get("torus");
    const EllipseDescriptor el = ellipse_descriptor(at(e, 0.3, 0.4));
    EXPECT_GT(el.semi_major, 0.1);
    EXPECT_NEAR(el.semi_minor, 0.0, 1e-12);
}
