#include "uqp/expr.hpp"

#include <cctype>
#include <sstream>

#include "uqp/builtins.hpp"

namespace uqp {

namespace {

struct Token {
    enum class Kind { Int, Ident, Q, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= s_.size()) return {Token::Kind::End, "", start};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Kind::Int, s_.substr(start, pos_ - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string t = s_.substr(start, pos_ - start);
            if (t == "q") return {Token::Kind::Q, t, start};
            return {Token::Kind::Ident, t, start};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", start};
            case '-': return {Token::Kind::Minus, "-", start};
            case '*': return {Token::Kind::Star, "*", start};
            case '^': return {Token::Kind::Caret, "^", start};
            case '/': return {Token::Kind::Slash, "/", start};
            case '(': return {Token::Kind::LParen, "(", start};
            case ')': return {Token::Kind::RParen, ")", start};
            default:
                throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " +
                                      std::to_string(start),
                                  start, "number, identifier, 'q', '+', '-', '*', '^', '(' or ')'");
        }
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { advance(); }

    ExprAst parse() {
        ExprAst e = sum();
        expect(Token::Kind::End, "end of input or an operator");
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = cur_.kind == Token::Kind::End ? "end of input" : "'" + cur_.text + "'";
        throw SyntaxError("syntax error at offset " + std::to_string(cur_.offset) + ": expected " +
                              expected + ", got " + got,
                          cur_.offset, expected);
    }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) fail(what);
    }

    ExprAst sum() {
        ExprAst e = cur_.kind == Token::Kind::Minus ? negated() : product();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool plus = cur_.kind == Token::Kind::Plus;
            advance();
            ExprAst rhs = product();
            ExprAst node;
            node.kind = plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub;
            node.sub = {std::move(e), std::move(rhs)};
            e = std::move(node);
        }
        return e;
    }

    ExprAst negated() {
        advance(); // consume '-'
        ExprAst inner = product();
        ExprAst node;
        node.kind = ExprAst::Kind::Neg;
        node.sub = {std::move(inner)};
        return node;
    }

    ExprAst product() {
        ExprAst e = factor();
        while (cur_.kind == Token::Kind::Star) {
            advance();
            ExprAst rhs = factor();
            ExprAst node;
            node.kind = ExprAst::Kind::Mul;
            node.sub = {std::move(e), std::move(rhs)};
            e = std::move(node);
        }
        return e;
    }

    ExprAst factor() {
        ExprAst base = primary();
        if (cur_.kind == Token::Kind::Caret) {
            advance();
            bool neg = false;
            if (cur_.kind == Token::Kind::Minus) {
                neg = true;
                advance();
            }
            expect(Token::Kind::Int, "an integer exponent");
            long e = std::stol(cur_.text);
            advance();
            ExprAst node;
            node.kind = ExprAst::Kind::Pow;
            node.exponent = neg ? -e : e;
            node.sub = {std::move(base)};
            return node;
        }
        return base;
    }

    ExprAst primary() {
        switch (cur_.kind) {
            case Token::Kind::Int: {
                ExprAst node;
                node.kind = ExprAst::Kind::Number;
                node.number = BigRat(cur_.text);
                advance();
                // rational literal a/b; '/' is not a general operator
                if (cur_.kind == Token::Kind::Slash) {
                    advance();
                    expect(Token::Kind::Int, "a denominator integer");
                    BigRat den(cur_.text);
                    if (den == 0)
                        throw SyntaxError("zero denominator at offset " + std::to_string(cur_.offset),
                                          cur_.offset, "a nonzero integer");
                    node.number /= den;
                    advance();
                }
                return node;
            }
            case Token::Kind::Q: {
                ExprAst node;
                node.kind = ExprAst::Kind::Q;
                advance();
                return node;
            }
            case Token::Kind::Ident: {
                ExprAst node;
                node.kind = ExprAst::Kind::Ident;
                node.ident = cur_.text;
                advance();
                return node;
            }
            case Token::Kind::LParen: {
                advance();
                ExprAst inner = sum();
                expect(Token::Kind::RParen, "')'");
                advance();
                return inner;
            }
            default:
                fail("a number, 'q', an identifier or '('");
        }
    }

    Lexer lex_;
    Token cur_;
};

int precedence(ExprAst::Kind k) {
    switch (k) {
        case ExprAst::Kind::Add:
        case ExprAst::Kind::Sub: return 0;
        case ExprAst::Kind::Neg: return 1;
        case ExprAst::Kind::Mul: return 2;
        case ExprAst::Kind::Pow: return 3;
        default: return 4;
    }
}

void print_expr(std::ostringstream& os, const ExprAst& e, int parent_prec) {
    int prec = precedence(e.kind);
    bool parens = prec < parent_prec;
    if (parens) os << "(";
    switch (e.kind) {
        case ExprAst::Kind::Number: os << rat_str(e.number); break;
        case ExprAst::Kind::Q: os << "q"; break;
        case ExprAst::Kind::Ident: os << e.ident; break;
        case ExprAst::Kind::Neg:
            os << "-";
            print_expr(os, e.sub[0], 2);
            break;
        case ExprAst::Kind::Add:
            print_expr(os, e.sub[0], 0);
            os << " + ";
            print_expr(os, e.sub[1], 1);
            break;
        case ExprAst::Kind::Sub:
            print_expr(os, e.sub[0], 0);
            os << " - ";
            print_expr(os, e.sub[1], 1);
            break;
        case ExprAst::Kind::Mul:
            print_expr(os, e.sub[0], 2);
            os << "*";
            print_expr(os, e.sub[1], 2);
            break;
        case ExprAst::Kind::Pow:
            print_expr(os, e.sub[0], 4);
            os << "^" << e.exponent;
            break;
    }
    if (parens) os << ")";
}

} // namespace

std::string ExprAst::str() const {
    std::ostringstream os;
    print_expr(os, *this, 0);
    return os.str();
}

ExprAst parse_expr(const std::string& text) { return Parser(text).parse(); }

RatFunc eval_scalar(const ExprAst& e) {
    switch (e.kind) {
        case ExprAst::Kind::Number: return RatFunc(e.number);
        case ExprAst::Kind::Q: return RatFunc::q_power(1);
        case ExprAst::Kind::Ident:
            throw std::invalid_argument("identifier '" + e.ident + "' in a scalar expression");
        case ExprAst::Kind::Neg: return -eval_scalar(e.sub[0]);
        case ExprAst::Kind::Add: return eval_scalar(e.sub[0]) + eval_scalar(e.sub[1]);
        case ExprAst::Kind::Sub: return eval_scalar(e.sub[0]) - eval_scalar(e.sub[1]);
        case ExprAst::Kind::Mul: return eval_scalar(e.sub[0]) * eval_scalar(e.sub[1]);
        case ExprAst::Kind::Pow: {
            RatFunc base = eval_scalar(e.sub[0]);
            long k = e.exponent;
            if (k < 0) {
                base = base.inverse();
                k = -k;
            }
            RatFunc acc(1);
            for (long i = 0; i < k; ++i) acc *= base;
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

bool is_scalar_expr(const ExprAst& e) {
    switch (e.kind) {
        case ExprAst::Kind::Number:
        case ExprAst::Kind::Q: return true;
        case ExprAst::Kind::Ident: return false;
        default:
            for (const auto& s : e.sub)
                if (!is_scalar_expr(s)) return false;
            return true;
    }
}

} // namespace

AlgebraElement eval_element(const ExprAst& e, const Presentation& p) {
    switch (e.kind) {
        case ExprAst::Kind::Number: return AlgebraElement::scalar(p, RatFunc(e.number));
        case ExprAst::Kind::Q: return AlgebraElement::scalar(p, RatFunc::q_power(1));
        case ExprAst::Kind::Ident: {
            for (int g = 0; g < p.arity(); ++g)
                if (p.gens[static_cast<std::size_t>(g)] == e.ident)
                    return AlgebraElement::generator(p, g);
            return named_element(p, e.ident);
        }
        case ExprAst::Kind::Neg: return eval_element(e.sub[0], p).scaled(RatFunc(-1));
        case ExprAst::Kind::Add: return eval_element(e.sub[0], p) + eval_element(e.sub[1], p);
        case ExprAst::Kind::Sub: return eval_element(e.sub[0], p) - eval_element(e.sub[1], p);
        case ExprAst::Kind::Mul: return eval_element(e.sub[0], p) * eval_element(e.sub[1], p);
        case ExprAst::Kind::Pow: {
            if (is_scalar_expr(e.sub[0]))
                return AlgebraElement::scalar(p, eval_scalar(e));
            return eval_element(e.sub[0], p).pow(e.exponent);
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace uqp
