#include "hypkin/timefun.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <utility>
#include <vector>

namespace hypkin {

struct TimeExpr::Node {
    enum class Kind {
        Constant,
        Time,
        Add,
        Sub,
        Mul,
        Div,
        Neg,
        Pow,
        Sin,
        Cos,
        Sinh,
        Cosh,
        Exp,
    };

    Kind kind;
    double value = 0.0; // Constant
    int exponent = 0;   // Pow
    NodePtr a, b;
};

namespace {

using Node = TimeExpr::Node;
using Kind = Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Kind kind, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_const(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = v;
    return n;
}

bool is_const(const NodePtr& n) { return n->kind == Kind::Constant; }
bool is_const(const NodePtr& n, double v) {
    return n->kind == Kind::Constant && n->value == v;
}

// Smart constructors fold constants and strip arithmetic identities; anything
// beyond that (no algebraic simplification) is out of scope.

NodePtr make_add(NodePtr a, NodePtr b) {
    if (is_const(a) && is_const(b))
        return make_const(a->value + b->value);
    if (is_const(a, 0.0))
        return b;
    if (is_const(b, 0.0))
        return a;
    return make_node(Kind::Add, std::move(a), std::move(b));
}

NodePtr make_neg(NodePtr a) {
    if (is_const(a))
        return make_const(-a->value);
    if (a->kind == Kind::Neg)
        return a->a;
    return make_node(Kind::Neg, std::move(a));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (is_const(a) && is_const(b))
        return make_const(a->value - b->value);
    if (is_const(b, 0.0))
        return a;
    if (is_const(a, 0.0))
        return make_neg(std::move(b));
    return make_node(Kind::Sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (is_const(a) && is_const(b))
        return make_const(a->value * b->value);
    if (is_const(a, 0.0) || is_const(b, 0.0))
        return make_const(0.0);
    if (is_const(a, 1.0))
        return b;
    if (is_const(b, 1.0))
        return a;
    return make_node(Kind::Mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_const(a) && is_const(b) && b->value != 0.0)
        return make_const(a->value / b->value);
    if (is_const(b, 1.0))
        return a;
    return make_node(Kind::Div, std::move(a), std::move(b));
}

double int_pow(double x, int n) {
    if (n < 0)
        return 1.0 / int_pow(x, -n);
    double r = 1.0;
    while (n > 0) {
        if (n & 1)
            r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

NodePtr make_pow(NodePtr a, int exponent) {
    if (exponent == 0)
        return make_const(1.0);
    if (exponent == 1)
        return a;
    if (is_const(a) && !(a->value == 0.0 && exponent < 0))
        return make_const(int_pow(a->value, exponent));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = exponent;
    n->a = std::move(a);
    return n;
}

NodePtr make_func(Kind kind, NodePtr a) {
    if (is_const(a)) {
        switch (kind) {
        case Kind::Sin: return make_const(std::sin(a->value));
        case Kind::Cos: return make_const(std::cos(a->value));
        case Kind::Sinh: return make_const(std::sinh(a->value));
        case Kind::Cosh: return make_const(std::cosh(a->value));
        case Kind::Exp: return make_const(std::exp(a->value));
        default: break;
        }
    }
    return make_node(kind, std::move(a));
}

double eval_node(const Node& n, double t) {
    switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Time: return t;
    case Kind::Add: return eval_node(*n.a, t) + eval_node(*n.b, t);
    case Kind::Sub: return eval_node(*n.a, t) - eval_node(*n.b, t);
    case Kind::Mul: return eval_node(*n.a, t) * eval_node(*n.b, t);
    case Kind::Div: {
        const double d = eval_node(*n.b, t);
        if (d == 0.0)
            throw Error(ErrorKind::Eval, "division by zero at t = " +
                                             std::to_string(t));
        return eval_node(*n.a, t) / d;
    }
    case Kind::Neg: return -eval_node(*n.a, t);
    case Kind::Pow: {
        const double base = eval_node(*n.a, t);
        if (base == 0.0 && n.exponent < 0)
            throw Error(ErrorKind::Eval, "zero raised to a negative power");
        return int_pow(base, n.exponent);
    }
    case Kind::Sin: return std::sin(eval_node(*n.a, t));
    case Kind::Cos: return std::cos(eval_node(*n.a, t));
    case Kind::Sinh: return std::sinh(eval_node(*n.a, t));
    case Kind::Cosh: return std::cosh(eval_node(*n.a, t));
    case Kind::Exp: return std::exp(eval_node(*n.a, t));
    }
    throw Error(ErrorKind::Eval, "corrupt expression node");
}

NodePtr diff_node(const NodePtr& n) {
    switch (n->kind) {
    case Kind::Constant: return make_const(0.0);
    case Kind::Time: return make_const(1.0);
    case Kind::Add: return make_add(diff_node(n->a), diff_node(n->b));
    case Kind::Sub: return make_sub(diff_node(n->a), diff_node(n->b));
    case Kind::Mul:
        return make_add(make_mul(diff_node(n->a), n->b),
                        make_mul(n->a, diff_node(n->b)));
    case Kind::Div:
        // (a'b - ab') / b^2
        return make_div(make_sub(make_mul(diff_node(n->a), n->b),
                                 make_mul(n->a, diff_node(n->b))),
                        make_pow(n->b, 2));
    case Kind::Neg: return make_neg(diff_node(n->a));
    case Kind::Pow:
        return make_mul(
            make_mul(make_const(n->exponent), make_pow(n->a, n->exponent - 1)),
            diff_node(n->a));
    case Kind::Sin:
        return make_mul(make_func(Kind::Cos, n->a), diff_node(n->a));
    case Kind::Cos:
        return make_mul(make_neg(make_func(Kind::Sin, n->a)), diff_node(n->a));
    case Kind::Sinh:
        return make_mul(make_func(Kind::Cosh, n->a), diff_node(n->a));
    case Kind::Cosh:
        return make_mul(make_func(Kind::Sinh, n->a), diff_node(n->a));
    case Kind::Exp:
        return make_mul(make_func(Kind::Exp, n->a), diff_node(n->a));
    }
    throw Error(ErrorKind::Eval, "corrupt expression node");
}

bool equal_nodes(const Node& a, const Node& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Kind::Constant: return a.value == b.value;
    case Kind::Time: return true;
    case Kind::Pow:
        return a.exponent == b.exponent && equal_nodes(*a.a, *b.a);
    case Kind::Neg:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Sinh:
    case Kind::Cosh:
    case Kind::Exp: return equal_nodes(*a.a, *b.a);
    default: return equal_nodes(*a.a, *b.a) && equal_nodes(*a.b, *b.b);
    }
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    char buf[40];
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int node_prec(const Node& n) {
    switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return kPrecAdd;
    case Kind::Mul:
    case Kind::Div: return kPrecMul;
    case Kind::Neg: return kPrecNeg;
    case Kind::Pow: return kPrecPow;
    case Kind::Constant:
        // Negative literals reparse as a unary minus; give them its binding.
        return n.value < 0.0 ? kPrecNeg : kPrecAtom;
    default: return kPrecAtom;
    }
}

void print_node(const Node& n, int context, std::string& out) {
    const int prec = node_prec(n);
    const bool parens = prec < context;
    if (parens)
        out += '(';
    switch (n.kind) {
    case Kind::Constant: out += format_double(n.value); break;
    case Kind::Time: out += 't'; break;
    case Kind::Add:
        print_node(*n.a, kPrecAdd, out);
        out += " + ";
        print_node(*n.b, kPrecAdd + 1, out);
        break;
    case Kind::Sub:
        print_node(*n.a, kPrecAdd, out);
        out += " - ";
        print_node(*n.b, kPrecAdd + 1, out);
        break;
    case Kind::Mul:
        print_node(*n.a, kPrecMul, out);
        out += "*";
        print_node(*n.b, kPrecMul + 1, out);
        break;
    case Kind::Div:
        print_node(*n.a, kPrecMul, out);
        out += "/";
        print_node(*n.b, kPrecMul + 1, out);
        break;
    case Kind::Neg:
        out += '-';
        print_node(*n.a, kPrecNeg, out);
        break;
    case Kind::Pow:
        print_node(*n.a, kPrecAtom, out);
        out += '^';
        out += std::to_string(n.exponent);
        break;
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Sinh:
    case Kind::Cosh:
    case Kind::Exp: {
        switch (n.kind) {
        case Kind::Sin: out += "sin"; break;
        case Kind::Cos: out += "cos"; break;
        case Kind::Sinh: out += "sinh"; break;
        case Kind::Cosh: out += "cosh"; break;
        default: out += "exp"; break;
        }
        out += '(';
        print_node(*n.a, 0, out);
        out += ')';
        break;
    }
    }
    if (parens)
        out += ')';
}

// ---- parser ----------------------------------------------------------

struct Token {
    enum class Kind {
        Number,
        Ident,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        End,
    };
    Kind kind;
    std::size_t offset;
    std::string text;
    double value = 0.0;
    bool integral = false; // Number tokens: plain digit run, no '.'/'e'
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            bool integral = true;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i < text.size() && text[i] == '.') {
                integral = false;
                ++i;
                if (i >= text.size() ||
                    !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError(i, "digit expected after decimal point");
                while (i < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                integral = false;
                ++i;
                if (i < text.size() && (text[i] == '+' || text[i] == '-'))
                    ++i;
                if (i >= text.size() ||
                    !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError(i, "digit expected in exponent");
                while (i < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
            }
            Token tok{Token::Kind::Number, start,
                      std::string(text.substr(start, i - start))};
            tok.value = std::strtod(tok.text.c_str(), nullptr);
            tok.integral = integral;
            tokens.push_back(std::move(tok));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) ||
                    text[i] == '_'))
                ++i;
            tokens.push_back({Token::Kind::Ident, start,
                              std::string(text.substr(start, i - start))});
            continue;
        }
        Token::Kind kind;
        switch (c) {
        case '+': kind = Token::Kind::Plus; break;
        case '-': kind = Token::Kind::Minus; break;
        case '*': kind = Token::Kind::Star; break;
        case '/': kind = Token::Kind::Slash; break;
        case '^': kind = Token::Kind::Caret; break;
        case '(': kind = Token::Kind::LParen; break;
        case ')': kind = Token::Kind::RParen; break;
        default:
            throw ParseError(start, std::string("unexpected character '") +
                                        c + "'");
        }
        tokens.push_back({kind, start, std::string(1, c)});
        ++i;
    }
    tokens.push_back({Token::Kind::End, text.size(), ""});
    return tokens;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        if (peek().kind != Token::Kind::End)
            throw ParseError(peek().offset, "unexpected trailing input");
        return e;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    NodePtr parse_sum() {
        NodePtr e = parse_product();
        while (peek().kind == Token::Kind::Plus ||
               peek().kind == Token::Kind::Minus) {
            const bool add = advance().kind == Token::Kind::Plus;
            NodePtr rhs = parse_product();
            e = add ? make_add(std::move(e), std::move(rhs))
                    : make_sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    NodePtr parse_product() {
        NodePtr e = parse_unary();
        while (peek().kind == Token::Kind::Star ||
               peek().kind == Token::Kind::Slash) {
            const bool mul = advance().kind == Token::Kind::Star;
            NodePtr rhs = parse_unary();
            e = mul ? make_mul(std::move(e), std::move(rhs))
                    : make_div(std::move(e), std::move(rhs));
        }
        return e;
    }

    NodePtr parse_unary() {
        if (peek().kind == Token::Kind::Minus) {
            advance();
            return make_neg(parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr e = parse_atom();
        while (peek().kind == Token::Kind::Caret) {
            advance();
            int sign = 1;
            if (peek().kind == Token::Kind::Minus) {
                advance();
                sign = -1;
            }
            const Token& tok = peek();
            if (tok.kind != Token::Kind::Number || !tok.integral)
                throw ParseError(tok.offset,
                                 "exponent must be an integer literal");
            if (tok.value > 64)
                throw ParseError(tok.offset, "exponent out of range");
            advance();
            e = make_pow(std::move(e), sign * static_cast<int>(tok.value));
        }
        return e;
    }

    NodePtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case Token::Kind::Number:
            advance();
            return make_const(tok.value);
        case Token::Kind::LParen: {
            advance();
            NodePtr e = parse_sum();
            if (peek().kind != Token::Kind::RParen)
                throw ParseError(peek().offset, "expected ')'");
            advance();
            return e;
        }
        case Token::Kind::Ident: {
            advance();
            if (tok.text == "t")
                return make_node(Kind::Time);
            Kind kind;
            if (tok.text == "sin")
                kind = Kind::Sin;
            else if (tok.text == "cos")
                kind = Kind::Cos;
            else if (tok.text == "sinh")
                kind = Kind::Sinh;
            else if (tok.text == "cosh")
                kind = Kind::Cosh;
            else if (tok.text == "exp")
                kind = Kind::Exp;
            else
                throw ParseError(tok.offset,
                                 "unknown identifier '" + tok.text + "'");
            if (peek().kind != Token::Kind::LParen)
                throw ParseError(peek().offset,
                                 "expected '(' after '" + tok.text + "'");
            advance();
            NodePtr arg = parse_sum();
            if (peek().kind != Token::Kind::RParen)
                throw ParseError(peek().offset, "expected ')'");
            advance();
            return make_func(kind, std::move(arg));
        }
        default:
            throw ParseError(tok.offset, "expected a value");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

TimeExpr::TimeExpr() : node_(make_const(0.0)) {}

TimeExpr TimeExpr::parse(std::string_view text) {
    return TimeExpr(Parser(text).run());
}

TimeExpr TimeExpr::constant(double value) { return TimeExpr(make_const(value)); }

TimeExpr TimeExpr::time() { return TimeExpr(make_node(Kind::Time)); }

double TimeExpr::eval(double t) const { return eval_node(*node_, t); }

TimeExpr TimeExpr::differentiate() const { return TimeExpr(diff_node(node_)); }

std::string TimeExpr::str() const {
    std::string out;
    print_node(*node_, 0, out);
    return out;
}

bool operator==(const TimeExpr& a, const TimeExpr& b) {
    return equal_nodes(*a.node_, *b.node_);
}

TimeExpr operator+(const TimeExpr& a, const TimeExpr& b) {
    return TimeExpr(make_add(a.node_, b.node_));
}
TimeExpr operator-(const TimeExpr& a, const TimeExpr& b) {
    return TimeExpr(make_sub(a.node_, b.node_));
}
TimeExpr operator*(const TimeExpr& a, const TimeExpr& b) {
    return TimeExpr(make_mul(a.node_, b.node_));
}
TimeExpr operator/(const TimeExpr& a, const TimeExpr& b) {
    return TimeExpr(make_div(a.node_, b.node_));
}
TimeExpr operator-(const TimeExpr& a) { return TimeExpr(make_neg(a.node_)); }
TimeExpr pow_i(const TimeExpr& base, int exponent) {
    return TimeExpr(make_pow(base.node_, exponent));
}
TimeExpr sin(const TimeExpr& e) {
    return TimeExpr(make_func(Kind::Sin, e.node_));
}
TimeExpr cos(const TimeExpr& e) {
    return TimeExpr(make_func(Kind::Cos, e.node_));
}
TimeExpr sinh(const TimeExpr& e) {
    return TimeExpr(make_func(Kind::Sinh, e.node_));
}
TimeExpr cosh(const TimeExpr& e) {
    return TimeExpr(make_func(Kind::Cosh, e.node_));
}
TimeExpr exp(const TimeExpr& e) {
    return TimeExpr(make_func(Kind::Exp, e.node_));
}

} // namespace hypkin
