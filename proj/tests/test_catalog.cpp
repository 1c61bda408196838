#include <cmath>
#include <numbers>

#include "superconf/catalog.hpp"
#include "test_util.hpp"

using namespace superconf;

TEST(Catalog, EveryEntryLoads) {
    for (const std::string& n : catalog::names()) {
        const catalog::CatalogEntry e = catalog::get(n);
        EXPECT_EQ(e.name, n);
        EXPECT_TRUE(e.pair || e.curve || e.surface) << n;
    }
}

TEST(Catalog, UnknownNameIsNotFound) { EXPECT_ERROR_KIND(catalog::get("nonsense"), ErrorKind::not_found); }

TEST(Catalog, CatenoidPrintedOracle) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "phi+", 0, 0), Eigen::Vector4d(1, 0, 0, 0)), 1e-15);
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "phi+", std::numbers::pi / 2, 0),
                       Eigen::Vector4d(-std::numbers::pi / 2, 1, 0, 0)),
              1e-15);
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "phi+corrected", std::numbers::pi / 2, 0),
                       Eigen::Vector4d(std::numbers::pi / 2, 1, 0, 0)),
              1e-15);
}

TEST(Catalog, VeroneseOracles) {
    const catalog::CatalogEntry e = catalog::get("veronese");
    const double k = 2 / std::sqrt(3.0);
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "g", std::numbers::pi / 2, 0), Eigen::Vector4d(0, 0, 0, k)), 1e-15);
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "metric", std::numbers::pi / 2, 0.3), Eigen::Vector3d(4, 0, 4)),
              1e-14);
    // The printed immersion lies on the unit sphere.
    EXPECT_NEAR(catalog::expected_eval(e, "f", 0.7, 2.0).norm(), 1.0, 1e-15);
}

TEST(Catalog, WhitneyOracles) {
    const catalog::CatalogEntry e = catalog::get("whitney");
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "g", 1, 0), Eigen::Vector4d(0.25, 0, 0.25, 0)), 1e-15);
    EXPECT_LT(vec_dist(catalog::expected_eval(e, "h", 1, 0), Eigen::Vector4d(0, 0.25, 0, 0.25)), 1e-15);
    const Eigen::Matrix4d O = catalog::whitney_congruence();
    EXPECT_LT((O.transpose() * O - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Catalog, PairOraclesMatchTheCurves) {
    const catalog::CatalogEntry cat = catalog::get("catenoid-helicoid");
    const PairSample s = split(*cat.pair, {1.3, -0.6});
    EXPECT_LT(vec_dist(value_of(s.g), catalog::expected_eval(cat, "g", 1.3, -0.6)), 1e-15);
    EXPECT_LT(vec_dist(value_of(s.h), catalog::expected_eval(cat, "h", 1.3, -0.6)), 1e-15);
    const catalog::CatalogEntry w = catalog::get("whitney");
    const PairSample t = split(*w.pair, {0.9, 0.4});
    EXPECT_LT(vec_dist(value_of(t.g), catalog::expected_eval(w, "g", 0.9, 0.4)), 1e-15);
    EXPECT_LT(vec_dist(value_of(t.h), catalog::expected_eval(w, "h", 0.9, 0.4)), 1e-15);
}

TEST(Catalog, MissingOracleIsUnsupported) {
    const catalog::CatalogEntry e = catalog::get("enneper-r3");
    EXPECT_ERROR_KIND(catalog::oracle(e, "phi+"), ErrorKind::precondition);
}

TEST(Catalog, ExpressionsExportAndReparse) {
    for (const std::string& n : catalog::names()) {
        const catalog::CatalogEntry e = catalog::get(n);
        const HolomorphicCurve* c = e.pair ? &e.pair->source : (e.curve ? &*e.curve : nullptr);
        if (!c) continue;
        EXPECT_TRUE(expr::equal(expr::parse_curve(c->text()), c->ast)) << n;
    }
}
