#include <cmath>
#include <numbers>

#include "superconf/catalog.hpp"
#include "superconf/construct.hpp"
#include "test_util.hpp"

using namespace superconf;

namespace {

const catalog::CatalogEntry& catenoid() {
    static const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    return e;
}

Eigen::VectorXd phi(const MinimalPair& p, Sign s, cplx z) { return value_of(build_phi(p, s, z).phi); }

}  // namespace

TEST(BuildPhi, CatenoidMatchesCorrectedClosedForm) {
    const MinimalPair& p = *catenoid().pair;
    const Grid g{catenoid().grid, 17, 17};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const cplx z = g.point(i);
        EXPECT_LT(vec_dist(phi(p, Sign::plus, z), catalog::expected_eval(catenoid(), "phi+corrected", z.real(), z.imag())),
                  1e-12);
        EXPECT_LT(vec_dist(phi(p, Sign::minus, z), catalog::expected_eval(catenoid(), "phi-corrected", z.real(), z.imag())),
                  1e-12);
    }
}

TEST(BuildPhi, CatenoidSampleValues) {
    // Evaluated on a domain that contains u = 0.
    MinimalPair p = *catenoid().pair;
    p.source.domain = Domain{Rect{-1, 7, -2, 2}, {}};
    EXPECT_LT(vec_dist(phi(p, Sign::plus, {std::numbers::pi / 2, 0.0}), Eigen::Vector4d(std::numbers::pi / 2, 1, 0, 0)),
              1e-12);
    EXPECT_LT(vec_dist(phi(p, Sign::plus, {0.0, 1.0}), Eigen::Vector4d(0.648054, 0, 0.238406, 0)), 1e-6);
    // h vanishes at the origin, so the frame is undefined there.
    EXPECT_ERROR_KIND(phi(p, Sign::plus, {0.0, 0.0}), ErrorKind::degenerate);
}

TEST(BuildPhi, PrintedCatenoidFormIsNotSuperconformal) {
    const SurfaceJet printed = catalog::oracle(catenoid(), "phi+")(1.0, 0.5);
    const SuperconformalityReport sc = superconformality_test(fundamental_data(printed));
    EXPECT_FALSE(sc.is_superconformal);
    EXPECT_GT(sc.wintgen_defect, 0.05);
}

TEST(BuildPhi, PhiIsSuperconformalOnBothSigns) {
    for (const char* name : {"catenoid-helicoid", "whitney", "q0-trig-perturbed", "veronese"}) {
        const catalog::CatalogEntry e = catalog::get(name);
        const Grid g{e.grid, 9, 9};
        for (Sign s : {Sign::plus, Sign::minus}) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                const PhiSample ph = build_phi(*e.pair, s, g.point(i));
                if (ph.flags.any()) continue;
                const SuperconformalityReport sc = superconformality_test(fundamental_data(ph.phi));
                EXPECT_LT(sc.res_orth, 1e-8) << name;
                EXPECT_LT(sc.res_len, 1e-8) << name;
                EXPECT_LT(sc.wintgen_relative, 1e-8) << name;
            }
        }
    }
}

TEST(ConstructionFrame, IdentitiesHold) {
    const Grid g{catenoid().grid, 9, 9};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const ConstructionFrame f = construction_frame(*catenoid().pair, g.point(i));
        EXPECT_LT(f.decomposition_residual, 1e-12);
        if (!f.a_defined) continue;
        EXPECT_LT(f.bxi_residual, 1e-10 * std::max(1.0, f.bxi_scale));
        EXPECT_NEAR(f.xi.norm(), 1.0, 1e-12);
        EXPECT_NEAR(f.delta_plus.dot(f.delta_minus), -1.0, 1e-12);
    }
}

TEST(BuildPhi, RoutesAgree) {
    const Grid g{catenoid().grid, 9, 9};
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            EXPECT_LT(build_phi(*catenoid().pair, s, g.point(i)).route_difference, 1e-10);
        }
    }
}

TEST(BuildPhi, HolomorphicPairFlagsTheConstantSign) {
    const catalog::CatalogEntry e = catalog::get("q0-trig");
    const cplx z(0.7, 0.5);
    const PhiSample m = build_phi(*e.pair, Sign::minus, z);
    const PhiSample p = build_phi(*e.pair, Sign::plus, z);
    // The collapsed sign carries both marks; the other sign is regular.
    EXPECT_TRUE(m.flags.rank_deficient);
    EXPECT_TRUE(m.flags.g_holomorphic_point);
    EXPECT_FALSE(p.flags.any());
}

TEST(BuildPhi, VanishingHIsDegenerate) {
    const catalog::CatalogEntry e = catalog::get("q0-line");
    MinimalPair p = *e.pair;
    p.source.domain = Domain{Rect{-1, 1, -1, 1}, {}};
    EXPECT_ERROR_KIND(build_phi(p, Sign::plus, 0.0), ErrorKind::degenerate);
}

TEST(DualPair, CatenoidClaims) {
    const DualPairReport r = dual_pair_report(*catenoid().pair, {1.0, 0.5});
    for (int k = 0; k < 2; ++k) {
        EXPECT_LT(r.center_residual[k], 1e-7);
        EXPECT_LT(r.conformal_residual[k], 1e-7);
        EXPECT_LT(r.tangency_residual[k], 1e-7);
    }
    EXPECT_LT(r.metric_relation, 1e-7);
}

TEST(DualPair, TranslationInvariant) {
    for (const Eigen::Vector4d& v : {Eigen::Vector4d(1, 0, 0, 0), Eigen::Vector4d(-0.3, 2.0, 0.1, 0.7)}) {
        EXPECT_LT(translation_residual(*catenoid().pair, v, {2.0, -0.4}), 1e-9);
    }
}

TEST(Extract, RecoversTheCatenoidPair) {
    const cplx z(1.0, 0.5);
    const PhiSample ph = build_phi(*catenoid().pair, Sign::plus, z);
    const ExtractedPair ex = extract_minimal_pair(ph.phi);
    EXPECT_LT(vec_dist(ex.g, catalog::expected_eval(catenoid(), "g", 1.0, 0.5)), 1e-8);
    const Eigen::VectorXd h = catalog::expected_eval(catenoid(), "h", 1.0, 0.5);
    EXPECT_LT(std::min(vec_dist(ex.h, h), vec_dist(ex.h, -h)), 1e-8);
    EXPECT_LT(vec_dist(ex.h, h), 1e-8);  // the + label recovers +h
}

TEST(Extract, RejectsNonSuperconformalSurfaces) {
    const catalog::CatalogEntry e = catalog::get("torus");
    EXPECT_ERROR_KIND(extract_minimal_pair(e.surface(0.3, 0.4)), ErrorKind::precondition);
}

TEST(PhiMap, JetsAgreeWithFiniteDifferences) {
    for (Sign s : {Sign::plus, Sign::minus}) {
        EXPECT_LT(fd_crosscheck(phi_map(*catenoid().pair, s), 1.3, 0.4, 1e-3).residual, 1e-6);
    }
}
