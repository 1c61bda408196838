#include <cmath>
#include <random>

#include "superconf/catalog.hpp"
#include "superconf/jets.hpp"
#include "test_util.hpp"

using namespace superconf;

namespace {

void expect_jet(const Jet2& j, std::array<double, 6> want, double tol = 1e-14) {
    const std::array<double, 6> got = {j.v, j.du, j.dv, j.duu, j.duv, j.dvv};
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(got[k], want[k], tol) << "slot " << k;
}

Jet2 random_jet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    return {U(rng), U(rng), U(rng), U(rng), U(rng), U(rng)};
}

double jet_dist(const Jet2& a, const Jet2& b) {
    return std::max({std::abs(a.v - b.v), std::abs(a.du - b.du), std::abs(a.dv - b.dv), std::abs(a.duu - b.duu),
                     std::abs(a.duv - b.duv), std::abs(a.dvv - b.dvv)});
}

}  // namespace

TEST(Jet2, LeibnizProduct) {
    expect_jet(Jet2{2, 1, 0, 0, 0, 0} * Jet2{3, 0, 1, 0, 0, 0}, {6, 3, 2, 0, 1, 0});
}

TEST(Jet2, SqrtMatchesChainRuleOracle) {
    // f = (2 + u)²: √f = 2 + u, so the second derivative vanishes.
    const Jet2 f{4, 4, 0, 2, 0, 0};
    const double d2 = f.duu / (2 * std::sqrt(f.v)) - f.du * f.du / (4 * std::pow(f.v, 1.5));
    expect_jet(sqrt(f), {2, 1, 0, d2, 0, 0});
    expect_jet(sqrt(f), {2, 1, 0, 0, 0, 0});
}

TEST(Jet2, RecipOfOne) { expect_jet(recip(Jet2::constant(1.0)), {1, 0, 0, 0, 0, 0}); }

TEST(Jet2, DivisionFloorFailsLoudly) {
    EXPECT_ERROR_KIND(recip(Jet2::constant(1e-14)), ErrorKind::degenerate);
    EXPECT_ERROR_KIND(sqrt(Jet2::constant(-1.0)), ErrorKind::degenerate);
}

TEST(Jet2, RingAxiomsOnRandomJets) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const Jet2 a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
        EXPECT_LT(jet_dist((a * b) * c, a * (b * c)), 1e-12);
        EXPECT_LT(jet_dist(a * (b + c), a * b + a * c), 1e-12);
        EXPECT_LT(jet_dist(a * b, b * a), 1e-12);
        EXPECT_LT(jet_dist((a + b) + c, a + (b + c)), 1e-12);
    }
}

TEST(Jet2, ElementaryFunctionsAgreeWithFiniteDifferences) {
    const SurfaceMap m = [](double u, double v) {
        const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
        return SurfaceJet{exp(a * b), log(1.0 + a * a + b * b), tan(0.3 * a - b), pow(a + 2.0 * b, 3) / (2.0 + cosh(b))};
    };
    EXPECT_LT(fd_crosscheck(m, 0.4, -0.3, 1e-3).residual, 1e-7);
}

TEST(ComplexJet, RingAxioms) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto rnd = [&] {
        ComplexJet j;
        for (auto& c : j.c) c = {U(rng), U(rng)};
        return j;
    };
    for (int k = 0; k < 100; ++k) {
        const ComplexJet a = rnd(), b = rnd(), c = rnd();
        const ComplexJet l = (a * b) * c, r = a * (b * c);
        const ComplexJet dl = a * (b + c), dr = a * b + a * c;
        for (int i = 0; i < 4; ++i) {
            EXPECT_LT(std::abs(l.c[i] - r.c[i]), 1e-12);
            EXPECT_LT(std::abs(dl.c[i] - dr.c[i]), 1e-12);
        }
    }
}

TEST(ComplexJet, DerivativesOfExpAndSin) {
    const cplx z(0.3, -0.7);
    const ComplexJet e = exp(ComplexJet::variable(z));
    for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(e.c[i] - std::exp(z)), 1e-14);
    const ComplexJet s = sin(ComplexJet::variable(z));
    EXPECT_LT(std::abs(s.c[1] - std::cos(z)), 1e-14);
    EXPECT_LT(std::abs(s.c[2] + std::sin(z)), 1e-14);
    EXPECT_LT(std::abs(s.c[3] + std::cos(z)), 1e-14);
}

TEST(ComplexJet, BranchAndPoleErrors) {
    EXPECT_ERROR_KIND(recip(ComplexJet::variable(0.0)), ErrorKind::domain);
    EXPECT_ERROR_KIND(log(ComplexJet::variable(0.0)), ErrorKind::domain);
    EXPECT_ERROR_KIND(log(ComplexJet::variable(-1.0)), ErrorKind::domain);
    EXPECT_ERROR_KIND(sqrt(ComplexJet::variable(-4.0)), ErrorKind::domain);
}

TEST(SeedSurface, CauchyRiemannHoldsExactly) {
    const catalog::CatalogEntry e = catalog::get("q0-trig-perturbed");
    const Grid g{e.grid, 7, 7};
    for (std::size_t i = 0; i < g.size(); ++i) {
        const SeededSurface s = seed_surface(holo_eval(e.pair->source, g.point(i)));
        for (int k = 0; k < 4; ++k) {
            EXPECT_EQ(s.g[k].du, s.h[k].dv);
            EXPECT_EQ(s.g[k].dv, -s.h[k].du);
        }
    }
}

// Quadratic: no truncation error, only second-difference roundoff of order eps/h^2.
TEST(FdCrosscheck, QuadraticHasOnlyRoundoff) {
    const SurfaceMap m = [](double u, double v) {
        const Jet2 a = Jet2::param_u(u), b = Jet2::param_v(v);
        return SurfaceJet{a * a + 3.0 * a * b, b * b - a, 2.0 * a * b + 1.0};
    };
    EXPECT_LT(fd_crosscheck(m, 0.3, -1.2, 1e-3).residual, 1e-8);
}

TEST(FdCrosscheck, CatenoidG) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    EXPECT_LT(fd_crosscheck(catalog::oracle(e, "g"), 0.7, 0.3, 1e-4).residual, 1e-6);
}

TEST(FdCrosscheck, StencilLeavingDomainIsAnError) {
    const catalog::CatalogEntry e = catalog::get("catenoid-helicoid");
    EXPECT_ERROR_KIND(fd_crosscheck(catalog::oracle(e, "g"), 0.2, 0.0, 1e-3, Rect{0.2, 1.0, -1.0, 1.0}),
                      ErrorKind::domain);
    EXPECT_ERROR_KIND(fd_crosscheck(catalog::oracle(e, "g"), 0.5, 0.0, 0.0), ErrorKind::precondition);
}
