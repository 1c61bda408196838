#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superconf/error.hpp"
#include "superconf/jets.hpp"

namespace superconf::expr {

struct Position {
    int line = 1;
    int column = 1;
};

enum class NodeKind { literal, variable, neg, add, sub, mul, div, pow, call };
enum class Func { exp, log, sin, cos, sinh, cosh, sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::literal;
    Position pos;
    cplx value{};      // literal
    int exponent = 0;  // pow
    Func func = Func::exp;
    NodePtr lhs;  // operand of neg/call/pow, left operand of binaries
    NodePtr rhs;
};

// Components are always padded to four; `declared` is 2 or 4.
struct CurveAst {
    std::array<NodePtr, 4> components;
    int declared = 4;
};

class ParseError : public Error {
public:
    ParseError(Position pos, std::vector<std::string> expected, const std::string& found);

    Position position() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    Position pos_;
    std::vector<std::string> expected_;
};

CurveAst parse_curve(std::string_view text);
NodePtr parse_expression(std::string_view text);

std::string print(const NodePtr& node);
std::string print(const CurveAst& curve);

// Structural equality; literals compare bitwise, positions are ignored.
bool equal(const NodePtr& a, const NodePtr& b);
bool equal(const CurveAst& a, const CurveAst& b);

// Domain failures are rethrown as Error(domain) naming the offending subexpression.
ComplexJet evaluate(const NodePtr& node, const ComplexJet& z);
std::array<ComplexJet, 4> evaluate(const CurveAst& curve, cplx z);

NodePtr make_literal(cplx value);
NodePtr make_variable();
NodePtr make_neg(NodePtr operand);
NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs);
NodePtr make_pow(NodePtr base, int exponent);
NodePtr make_call(Func func, NodePtr arg);

const char* func_name(Func f);

}  // namespace superconf::expr
