#include <string>

#include "superconf/acceptance.hpp"
#include "superconf/expression.hpp"
#include "test_util.hpp"

using namespace superconf;

TEST(Parser, CatenoidCurveEvaluatesAtOrigin) {
    const expr::CurveAst c = expr::parse_curve("(cos(z), sin(z), -i*z, 0)");
    EXPECT_EQ(c.declared, 4);
    const auto j = expr::evaluate(c, 0.0);
    EXPECT_EQ(j[0].value(), cplx(1, 0));
    EXPECT_EQ(j[1].value(), cplx(0, 0));
    EXPECT_EQ(j[2].value(), cplx(0, 0));
    EXPECT_EQ(j[3].value(), cplx(0, 0));
    EXPECT_EQ(j[2].c[1], cplx(0, -1));
}

TEST(Parser, TwoTupleIsZeroPadded) {
    const expr::CurveAst c = expr::parse_curve("(z, 1/z)");
    EXPECT_EQ(c.declared, 2);
    const auto j = expr::evaluate(c, cplx(2, 0));
    EXPECT_EQ(j[1].value(), cplx(0.5, 0));
    EXPECT_EQ(j[2].value(), cplx(0, 0));
    EXPECT_EQ(j[3].value(), cplx(0, 0));
}

TEST(Parser, PrecedenceAndAssociativity) {
    auto val = [](const char* s) { return expr::evaluate(expr::parse_expression(s), ComplexJet::variable(2.0)).value(); };
    EXPECT_EQ(val("-z^2"), cplx(-4, 0));
    EXPECT_EQ(val("(-z)^2"), cplx(4, 0));
    EXPECT_EQ(val("1 - 2 - 3"), cplx(-4, 0));
    EXPECT_EQ(val("8/4/2"), cplx(1, 0));
    EXPECT_EQ(val("2*z^3"), cplx(16, 0));
    EXPECT_EQ(val("z^-1"), cplx(0.5, 0));
    EXPECT_EQ(val("i*i"), cplx(-1, 0));
}

TEST(Parser, IncompleteTupleReportsPosition) {
    try {
        expr::parse_curve("(z, ");
        FAIL() << "expected a parse error";
    } catch (const expr::ParseError& e) {
        EXPECT_EQ(e.position().line, 1);
        EXPECT_EQ(e.position().column, 5);
        EXPECT_EQ(e.kind(), ErrorKind::parse);
        EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
    }
}

TEST(ParserGolden, ExpressionsRoundTrip) {
    const auto& g = acceptance::golden_expressions();
    ASSERT_EQ(g.size(), 20u);
    for (const std::string& text : g) {
        const expr::CurveAst a = expr::parse_curve(text);
        const std::string p = expr::print(a);
        const expr::CurveAst b = expr::parse_curve(p);
        EXPECT_TRUE(expr::equal(a, b)) << text;
        EXPECT_EQ(expr::print(b), p) << text;
        // Printed form evaluates identically.
        const cplx z(0.7, 0.4);
        const auto ja = expr::evaluate(a, z), jb = expr::evaluate(b, z);
        for (int k = 0; k < 4; ++k) {
            for (int d = 0; d < 4; ++d) EXPECT_EQ(ja[k].c[d], jb[k].c[d]) << text;
        }
    }
}

TEST(ParserGolden, MalformedInputsArePositioned) {
    const auto& m = acceptance::malformed_inputs();
    ASSERT_EQ(m.size(), 10u);
    for (const auto& c : m) {
        try {
            expr::parse_curve(c.text);
            ADD_FAILURE() << "no error for " << c.text;
        } catch (const expr::ParseError& e) {
            EXPECT_EQ(e.position().line, c.line) << c.text;
            EXPECT_EQ(e.position().column, c.column) << c.text;
            EXPECT_FALSE(e.expected().empty()) << c.text;
        }
    }
}

TEST(Evaluate, DomainErrorNamesSubexpression) {
    const expr::CurveAst c = expr::parse_curve("(z, log(z - 1), 0, 0)");
    try {
        expr::evaluate(c, cplx(1, 0));
        FAIL() << "expected a domain error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::domain);
        EXPECT_NE(std::string(e.what()).find("log(z - 1)"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
}

TEST(Print, LiteralsRoundTripBitExactly) {
    for (double x : {0.1, 1.0 / 3.0, 6.02e23, 1e-300, 123456789.125}) {
        const expr::NodePtr n = expr::make_literal(x);
        const expr::NodePtr back = expr::parse_expression(expr::print(n));
        EXPECT_TRUE(expr::equal(n, back)) << expr::print(n);
    }
    for (cplx c : {cplx(-0.5, 0.25), cplx(-3.0, 0.0), cplx(0.0, -2.0), cplx(1.5, -1e-5), cplx(-0.0, 0.0)}) {
        const expr::NodePtr n = expr::make_literal(c);
        EXPECT_TRUE(expr::equal(n, expr::parse_expression(expr::print(n)))) << expr::print(n);
        EXPECT_EQ(expr::evaluate(n, ComplexJet::constant(0.0)).value(), c);
    }
}
