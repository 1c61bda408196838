#include "superconf/expression.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <numbers>
#include <sstream>

namespace superconf::expr {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (k > 0) out += k + 1 == expected.size() ? " or " : ", ";
        out += expected[k];
    }
    return out;
}

std::string parse_message(Position pos, const std::vector<std::string>& expected, const std::string& found) {
    std::ostringstream msg;
    msg << "syntax error at line " << pos.line << ", column " << pos.column << ": expected "
        << join_expected(expected) << ", found " << found;
    return msg.str();
}

enum class Tok { number, ident, lparen, rparen, comma, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    Position pos;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.pos = pos_;
        if (i_ >= text_.size()) {
            t.kind = Tok::end;
            return t;
        }
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i_ + 1 < text_.size() &&
                                                            std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
            return number(t);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i_;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
                advance();
            }
            t.kind = Tok::ident;
            t.text = std::string(text_.substr(start, i_ - start));
            return t;
        }
        advance();
        t.text = std::string(1, c);
        switch (c) {
            case '(': t.kind = Tok::lparen; break;
            case ')': t.kind = Tok::rparen; break;
            case ',': t.kind = Tok::comma; break;
            case '+': t.kind = Tok::plus; break;
            case '-': t.kind = Tok::minus; break;
            case '*': t.kind = Tok::star; break;
            case '/': t.kind = Tok::slash; break;
            case '^': t.kind = Tok::caret; break;
            default:
                throw ParseError(t.pos, {"expression"}, "unexpected character '" + t.text + "'");
        }
        return t;
    }

private:
    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void skip_space() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
    }

    Token number(Token t) {
        const std::size_t start = i_;
        auto digits = [&] {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) advance();
        };
        digits();
        if (i_ < text_.size() && text_[i_] == '.') {
            advance();
            digits();
        }
        if (i_ < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E')) {
            std::size_t look = i_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                while (i_ < look) advance();
                digits();
            }
        }
        t.kind = Tok::number;
        t.text = std::string(text_.substr(start, i_ - start));
        const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
        if (res.ec != std::errc() || !std::isfinite(t.number)) {
            throw ParseError(t.pos, {"finite number"}, "'" + t.text + "'");
        }
        return t;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Position pos_;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + t.text + "'";
}

bool lookup_func(const std::string& name, Func& f) {
    static const std::pair<const char*, Func> table[] = {
        {"exp", Func::exp},   {"log", Func::log},   {"sin", Func::sin},   {"cos", Func::cos},
        {"sinh", Func::sinh}, {"cosh", Func::cosh}, {"sqrt", Func::sqrt},
    };
    for (const auto& [n, fn] : table) {
        if (name == n) {
            f = fn;
            return true;
        }
    }
    return false;
}

NodePtr node_at(Node n, Position pos) {
    n.pos = pos;
    return std::make_shared<const Node>(std::move(n));
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

    CurveAst curve() {
        expect(Tok::lparen, {"'('"});
        std::vector<NodePtr> parts;
        parts.push_back(expression());
        while (tok_.kind == Tok::comma) {
            shift();
            parts.push_back(expression());
        }
        if (tok_.kind != Tok::rparen) fail({"','", "')'"});
        const Position close = tok_.pos;
        shift();
        if (tok_.kind != Tok::end) fail({"end of input"});
        if (parts.size() != 2 && parts.size() != 4) {
            std::ostringstream found;
            found << parts.size() << " components";
            throw ParseError(close, {"2 or 4 components"}, found.str());
        }
        CurveAst out;
        out.declared = static_cast<int>(parts.size());
        for (std::size_t k = 0; k < 4; ++k) {
            out.components[k] = k < parts.size() ? parts[k] : make_literal(0.0);
        }
        return out;
    }

    NodePtr single() {
        NodePtr e = expression();
        if (tok_.kind != Tok::end) fail({"operator", "end of input"});
        return e;
    }

private:
    void shift() { tok_ = lex_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw ParseError(tok_.pos, std::move(expected), describe(tok_));
    }

    void expect(Tok kind, std::vector<std::string> expected) {
        if (tok_.kind != kind) fail(std::move(expected));
        shift();
    }

    NodePtr expression() {
        NodePtr lhs = term();
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            const Position pos = tok_.pos;
            const NodeKind kind = tok_.kind == Tok::plus ? NodeKind::add : NodeKind::sub;
            shift();
            Node n;
            n.kind = kind;
            n.lhs = lhs;
            n.rhs = term();
            lhs = node_at(std::move(n), pos);
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (tok_.kind == Tok::star || tok_.kind == Tok::slash) {
            const Position pos = tok_.pos;
            const NodeKind kind = tok_.kind == Tok::star ? NodeKind::mul : NodeKind::div;
            shift();
            Node n;
            n.kind = kind;
            n.lhs = lhs;
            n.rhs = unary();
            lhs = node_at(std::move(n), pos);
        }
        return lhs;
    }

    // Unary plus is accepted and dropped.
    NodePtr unary() {
        if (tok_.kind == Tok::minus) {
            const Position pos = tok_.pos;
            shift();
            Node n;
            n.kind = NodeKind::neg;
            n.lhs = unary();
            return node_at(std::move(n), pos);
        }
        if (tok_.kind == Tok::plus) {
            shift();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (tok_.kind != Tok::caret) return base;
        const Position pos = tok_.pos;
        shift();
        bool negative = false;
        if (tok_.kind == Tok::minus || tok_.kind == Tok::plus) {
            negative = tok_.kind == Tok::minus;
            shift();
        }
        if (tok_.kind != Tok::number || tok_.text.find_first_not_of("0123456789") != std::string::npos) {
            fail({"integer exponent"});
        }
        int exponent = 0;
        const auto res = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), exponent);
        if (res.ec != std::errc() || exponent > 64) fail({"integer exponent up to 64"});
        shift();
        Node n;
        n.kind = NodeKind::pow;
        n.lhs = base;
        n.exponent = negative ? -exponent : exponent;
        return node_at(std::move(n), pos);
    }

    NodePtr primary() {
        const Position pos = tok_.pos;
        switch (tok_.kind) {
            case Tok::number: {
                Node n;
                n.kind = NodeKind::literal;
                n.value = tok_.number;
                shift();
                return node_at(std::move(n), pos);
            }
            case Tok::lparen: {
                shift();
                NodePtr inner = expression();
                if (tok_.kind != Tok::rparen) fail({"operator", "')'"});
                shift();
                return inner;
            }
            case Tok::ident: {
                const std::string name = tok_.text;
                Node n;
                if (name == "z") {
                    n.kind = NodeKind::variable;
                    shift();
                    return node_at(std::move(n), pos);
                }
                if (name == "i") {
                    n.kind = NodeKind::literal;
                    n.value = cplx(0.0, 1.0);
                    shift();
                    return node_at(std::move(n), pos);
                }
                if (name == "pi") {
                    n.kind = NodeKind::literal;
                    n.value = std::numbers::pi;
                    shift();
                    return node_at(std::move(n), pos);
                }
                Func f;
                if (lookup_func(name, f)) {
                    shift();
                    expect(Tok::lparen, {"'('"});
                    n.kind = NodeKind::call;
                    n.func = f;
                    n.lhs = expression();
                    if (tok_.kind != Tok::rparen) fail({"operator", "')'"});
                    shift();
                    return node_at(std::move(n), pos);
                }
                throw ParseError(pos, {"z", "i", "pi", "function name"}, "unknown identifier '" + name + "'");
            }
            default:
                fail({"expression"});
        }
    }

    Lexer lex_;
    Token tok_;
};

// Binding strength used by the printer.
int precedence(const NodePtr& n) {
    switch (n->kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul:
        case NodeKind::div: return 2;
        case NodeKind::neg: return 3;
        case NodeKind::pow: return 4;
        default: return 5;
    }
}

std::string number_text(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string literal_text(cplx v) {
    const double re = v.real(), im = v.imag();
    if (im == 0.0) {
        if (std::signbit(re)) return "(" + number_text(re) + ")";
        return number_text(re);
    }
    if (re == 0.0 && im == 1.0 && !std::signbit(re)) return "i";
    std::string out = "(";
    if (re != 0.0) out += number_text(re);
    if (re != 0.0 && !std::signbit(im)) out += "+";
    out += number_text(im) + "*i)";
    return out;
}

std::string wrap(const NodePtr& n, bool paren) {
    const std::string s = print(n);
    return paren ? "(" + s + ")" : s;
}

}  // namespace

ParseError::ParseError(Position pos, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::parse, parse_message(pos, expected, found)), pos_(pos), expected_(std::move(expected)) {}

CurveAst parse_curve(std::string_view text) { return Parser(text).curve(); }

NodePtr parse_expression(std::string_view text) { return Parser(text).single(); }

const char* func_name(Func f) {
    switch (f) {
        case Func::exp: return "exp";
        case Func::log: return "log";
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::sinh: return "sinh";
        case Func::cosh: return "cosh";
        case Func::sqrt: return "sqrt";
    }
    return "?";
}

std::string print(const NodePtr& n) {
    switch (n->kind) {
        case NodeKind::literal: return literal_text(n->value);
        case NodeKind::variable: return "z";
        case NodeKind::neg: return "-" + wrap(n->lhs, precedence(n->lhs) < 3);
        case NodeKind::pow: return wrap(n->lhs, precedence(n->lhs) < 5) + "^" + std::to_string(n->exponent);
        case NodeKind::call: return std::string(func_name(n->func)) + "(" + print(n->lhs) + ")";
        default: break;
    }
    const int p = precedence(n);
    const char* op = n->kind == NodeKind::add ? " + " : n->kind == NodeKind::sub ? " - "
                                                    : n->kind == NodeKind::mul ? "*"
                                                                               : "/";
    // Right operands of equal strength keep their parentheses to preserve the tree shape.
    return wrap(n->lhs, precedence(n->lhs) < p) + op + wrap(n->rhs, precedence(n->rhs) <= p);
}

std::string print(const CurveAst& curve) {
    std::string out = "(";
    for (int k = 0; k < curve.declared; ++k) {
        if (k > 0) out += ", ";
        out += print(curve.components[k]);
    }
    return out + ")";
}

bool equal(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::literal:
            return std::bit_cast<std::uint64_t>(a->value.real()) == std::bit_cast<std::uint64_t>(b->value.real()) &&
                   std::bit_cast<std::uint64_t>(a->value.imag()) == std::bit_cast<std::uint64_t>(b->value.imag());
        case NodeKind::variable: return true;
        case NodeKind::neg: return equal(a->lhs, b->lhs);
        case NodeKind::pow: return a->exponent == b->exponent && equal(a->lhs, b->lhs);
        case NodeKind::call: return a->func == b->func && equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

bool equal(const CurveAst& a, const CurveAst& b) {
    if (a.declared != b.declared) return false;
    for (int k = 0; k < 4; ++k) {
        if (!equal(a.components[k], b.components[k])) return false;
    }
    return true;
}

namespace {

template <typename Op>
ComplexJet guarded(const NodePtr& n, Op op) {
    try {
        return op();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::domain) throw;
        std::ostringstream msg;
        msg << "evaluation error in '" << print(n) << "' at line " << n->pos.line << ", column " << n->pos.column
            << ": " << e.what();
        throw Error(ErrorKind::domain, msg.str(), e.magnitude());
    }
}

}  // namespace

ComplexJet evaluate(const NodePtr& n, const ComplexJet& z) {
    switch (n->kind) {
        case NodeKind::literal: return ComplexJet::constant(n->value);
        case NodeKind::variable: return z;
        case NodeKind::neg: return -evaluate(n->lhs, z);
        case NodeKind::add: return evaluate(n->lhs, z) + evaluate(n->rhs, z);
        case NodeKind::sub: return evaluate(n->lhs, z) - evaluate(n->rhs, z);
        case NodeKind::mul: return evaluate(n->lhs, z) * evaluate(n->rhs, z);
        case NodeKind::div: {
            const ComplexJet a = evaluate(n->lhs, z);
            const ComplexJet b = evaluate(n->rhs, z);
            return guarded(n, [&] { return a / b; });
        }
        case NodeKind::pow: {
            const ComplexJet a = evaluate(n->lhs, z);
            return guarded(n, [&] { return pow(a, n->exponent); });
        }
        case NodeKind::call: {
            const ComplexJet a = evaluate(n->lhs, z);
            return guarded(n, [&] {
                switch (n->func) {
                    case Func::exp: return exp(a);
                    case Func::log: return log(a);
                    case Func::sin: return sin(a);
                    case Func::cos: return cos(a);
                    case Func::sinh: return sinh(a);
                    case Func::cosh: return cosh(a);
                    case Func::sqrt: return sqrt(a);
                }
                return a;
            });
        }
    }
    return ComplexJet{};
}

std::array<ComplexJet, 4> evaluate(const CurveAst& curve, cplx z) {
    const ComplexJet seed = ComplexJet::variable(z);
    std::array<ComplexJet, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = evaluate(curve.components[k], seed);
    return out;
}

NodePtr make_literal(cplx value) {
    // The parser only produces non-negative real literals and i; anything else is built
    // as the tree its printed text parses to, so print/parse reproduces the AST.
    const bool plain = (value.imag() == 0.0 && !std::signbit(value.real())) || value == cplx(0.0, 1.0);
    if (!plain) return parse_expression(literal_text(value));
    Node n;
    n.kind = NodeKind::literal;
    n.value = value;
    return std::make_shared<const Node>(std::move(n));
}

NodePtr make_variable() {
    Node n;
    n.kind = NodeKind::variable;
    return std::make_shared<const Node>(std::move(n));
}

NodePtr make_neg(NodePtr operand) {
    Node n;
    n.kind = NodeKind::neg;
    n.lhs = std::move(operand);
    return std::make_shared<const Node>(std::move(n));
}

NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs) {
    Node n;
    n.kind = kind;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    return std::make_shared<const Node>(std::move(n));
}

NodePtr make_pow(NodePtr base, int exponent) {
    Node n;
    n.kind = NodeKind::pow;
    n.lhs = std::move(base);
    n.exponent = exponent;
    return std::make_shared<const Node>(std::move(n));
}

NodePtr make_call(Func func, NodePtr arg) {
    Node n;
    n.kind = NodeKind::call;
    n.func = func;
    n.lhs = std::move(arg);
    return std::make_shared<const Node>(std::move(n));
}

}  // namespace superconf::expr
