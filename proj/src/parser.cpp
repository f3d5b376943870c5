#include "weyl/parser.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace weyl {

namespace {

enum class Tok {
    Number,
    SymX,
    SymP,
    SymHbar,
    SymI,
    DerivX,
    DerivP,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    End,
};

struct Token {
    Tok type;
    std::size_t pos;
    std::string text;
};

std::string error_prefix(ParseError::Kind kind) {
    switch (kind) {
        case ParseError::Kind::NonIntegerExponent: return "NonIntegerExponent";
        case ParseError::Kind::UnbalancedDelimiter: return "UnbalancedDelimiter";
        default: return "SyntaxError";
    }
}

std::string build_message(ParseError::Kind kind, std::size_t pos, const std::string& message,
                          const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << error_prefix(kind) << " at position " << pos << ": " << message;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
        }
        os << ")";
    }
    return os.str();
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Number, start, std::string(text.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            std::string word(text.substr(start, i - start));
            Tok t;
            if (word == "X")
                t = Tok::SymX;
            else if (word == "P")
                t = Tok::SymP;
            else if (word == "hbar")
                t = Tok::SymHbar;
            else if (word == "i")
                t = Tok::SymI;
            else if (word == "Dx")
                t = Tok::DerivX;
            else if (word == "Dp")
                t = Tok::DerivP;
            else
                throw ParseError(ParseError::Kind::Syntax, start, "unknown symbol '" + word + "'",
                                 {"X", "P", "hbar", "i", "Dx", "Dp"});
            out.push_back({t, start, std::move(word)});
            continue;
        }
        Tok t;
        switch (c) {
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '^': t = Tok::Caret; break;
            case '/': t = Tok::Slash; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case '[': t = Tok::LBracket; break;
            case ']': t = Tok::RBracket; break;
            case '{': t = Tok::LBrace; break;
            case '}': t = Tok::RBrace; break;
            case ',': t = Tok::Comma; break;
            default:
                throw ParseError(ParseError::Kind::Syntax, start,
                                 std::string("unexpected character '") + c + "'");
        }
        out.push_back({t, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, text.size(), ""});
    return out;
}

constexpr long kMaxExponent = 1000000;
constexpr int kMaxDepth = 5000;

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        const Token& t = peek();
        if (t.type != Tok::End) {
            if (t.type == Tok::RParen || t.type == Tok::RBracket || t.type == Tok::RBrace)
                throw ParseError(ParseError::Kind::UnbalancedDelimiter, t.pos,
                                 "unmatched '" + t.text + "'");
            throw ParseError(ParseError::Kind::Syntax, t.pos, "unexpected trailing input",
                             {"+", "-", "*", "^", "end of input"});
        }
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    int depth_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = cursor_ + ahead;
        if (j >= tokens_.size()) j = tokens_.size() - 1;
        return tokens_[j];
    }

    const Token& advance() { return tokens_[cursor_++]; }

    bool accept(Tok t) {
        if (peek().type == t) {
            ++cursor_;
            return true;
        }
        return false;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth)
                throw ParseError(ParseError::Kind::Syntax, p.peek().pos,
                                 "expression nested too deeply");
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    static ExprPtr node(ExprNode::Kind k, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
        auto n = std::make_unique<ExprNode>(k);
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    ExprPtr parse_expr() {
        DepthGuard guard(*this);
        ExprPtr e = parse_term();
        for (;;) {
            if (accept(Tok::Plus))
                e = node(ExprNode::Kind::Add, std::move(e), parse_term());
            else if (accept(Tok::Minus))
                e = node(ExprNode::Kind::Sub, std::move(e), parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term() {
        DepthGuard guard(*this);
        ExprPtr e = parse_factor();
        while (accept(Tok::Star)) e = node(ExprNode::Kind::Mul, std::move(e), parse_factor());
        return e;
    }

    ExprPtr parse_factor() {
        DepthGuard guard(*this);
        ExprPtr base = parse_base();
        if (!accept(Tok::Caret)) return base;

        long sign = 1;
        // Only hbar may carry a negative exponent; that keeps Laurent
        // coefficients printable while X^-1 stays an error.
        if (peek().type == Tok::Minus && base->kind == ExprNode::Kind::SymHbar &&
            peek(1).type == Tok::Number) {
            advance();
            sign = -1;
        }
        const Token& t = peek();
        if (t.type != Tok::Number)
            throw ParseError(ParseError::Kind::NonIntegerExponent, t.pos,
                             "exponent must be a non-negative integer literal");
        advance();
        if (t.text.size() > 7)
            throw ParseError(ParseError::Kind::Syntax, t.pos, "exponent too large");
        long value = std::stol(t.text);
        if (value > kMaxExponent)
            throw ParseError(ParseError::Kind::Syntax, t.pos, "exponent too large");
        ExprPtr p = node(ExprNode::Kind::Pow, std::move(base));
        p->exponent = sign * value;
        return p;
    }

    ExprPtr parse_base() {
        DepthGuard guard(*this);
        const Token& t = peek();
        switch (t.type) {
            case Tok::Number: {
                advance();
                mpz_class num(t.text);
                mpz_class den(1);
                if (accept(Tok::Slash)) {
                    const Token& d = peek();
                    if (d.type != Tok::Number)
                        throw ParseError(ParseError::Kind::Syntax, d.pos,
                                         "expected denominator after '/'", {"unsigned integer"});
                    advance();
                    den = mpz_class(d.text);
                    if (den == 0)
                        throw ParseError(ParseError::Kind::Syntax, d.pos,
                                         "zero denominator in rational literal");
                }
                Rational q(num, den);
                q.canonicalize();
                ExprPtr n = node(ExprNode::Kind::Literal);
                n->literal = GaussianRational(std::move(q));
                return n;
            }
            case Tok::SymX: advance(); return node(ExprNode::Kind::SymX);
            case Tok::SymP: advance(); return node(ExprNode::Kind::SymP);
            case Tok::SymHbar: advance(); return node(ExprNode::Kind::SymHbar);
            case Tok::SymI: advance(); return node(ExprNode::Kind::ImagUnit);
            case Tok::Minus: advance(); return node(ExprNode::Kind::Neg, parse_factor());
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                if (!accept(Tok::RParen))
                    throw ParseError(ParseError::Kind::UnbalancedDelimiter, peek().pos,
                                     "expected ')'", {")"});
                return e;
            }
            case Tok::LBracket:
            case Tok::LBrace: {
                bool bracket = t.type == Tok::LBracket;
                advance();
                ExprPtr l = parse_expr();
                if (!accept(Tok::Comma))
                    throw ParseError(ParseError::Kind::Syntax, peek().pos,
                                     bracket ? "expected ',' in commutator"
                                             : "expected ',' in anticommutator",
                                     {","});
                ExprPtr r = parse_expr();
                if (bracket) {
                    if (!accept(Tok::RBracket))
                        throw ParseError(ParseError::Kind::UnbalancedDelimiter, peek().pos,
                                         "expected ']'", {"]"});
                    return node(ExprNode::Kind::Comm, std::move(l), std::move(r));
                }
                if (!accept(Tok::RBrace))
                    throw ParseError(ParseError::Kind::UnbalancedDelimiter, peek().pos,
                                     "expected '}'", {"}"});
                return node(ExprNode::Kind::AntiComm, std::move(l), std::move(r));
            }
            case Tok::DerivX:
            case Tok::DerivP: {
                bool dx = t.type == Tok::DerivX;
                advance();
                if (!accept(Tok::LParen))
                    throw ParseError(ParseError::Kind::Syntax, peek().pos,
                                     dx ? "expected '(' after Dx" : "expected '(' after Dp", {"("});
                ExprPtr e = parse_expr();
                if (!accept(Tok::RParen))
                    throw ParseError(ParseError::Kind::UnbalancedDelimiter, peek().pos,
                                     "expected ')'", {")"});
                return node(dx ? ExprNode::Kind::DerivX : ExprNode::Kind::DerivP, std::move(e));
            }
            default:
                throw ParseError(ParseError::Kind::Syntax, t.pos, "expected expression",
                                 {"X", "P", "hbar", "i", "number", "(", "[", "{", "Dx", "Dp", "-"});
        }
    }
};

}  // namespace

ParseError::ParseError(Kind k, std::size_t pos, const std::string& message,
                       std::vector<std::string> expected_tokens)
    : Error(build_message(k, pos, message, expected_tokens)),
      kind(k),
      position(pos),
      expected(std::move(expected_tokens)) {}

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

WeylPolynomial eval(const ExprNode& ast) {
    switch (ast.kind) {
        case ExprNode::Kind::Literal: return WeylPolynomial::constant(ast.literal);
        case ExprNode::Kind::SymX: return WeylPolynomial::sym_x();
        case ExprNode::Kind::SymP: return WeylPolynomial::sym_p();
        case ExprNode::Kind::SymHbar: return WeylPolynomial::sym_hbar();
        case ExprNode::Kind::ImagUnit: return WeylPolynomial::imaginary_unit();
        case ExprNode::Kind::Neg: return -eval(*ast.lhs);
        case ExprNode::Kind::Add: return eval(*ast.lhs) + eval(*ast.rhs);
        case ExprNode::Kind::Sub: return eval(*ast.lhs) - eval(*ast.rhs);
        case ExprNode::Kind::Mul: return eval(*ast.lhs) * eval(*ast.rhs);
        case ExprNode::Kind::Pow:
            if (ast.lhs->kind == ExprNode::Kind::SymHbar)
                return WeylPolynomial::scalar(
                    HbarLaurent::single(static_cast<int>(ast.exponent), GaussianRational(1)));
            if (ast.exponent < 0) throw Error("eval: negative exponent on non-hbar base");
            return poly_pow(eval(*ast.lhs), static_cast<unsigned long>(ast.exponent));
        case ExprNode::Kind::Comm: return commutator(eval(*ast.lhs), eval(*ast.rhs));
        case ExprNode::Kind::AntiComm: return anticommutator(eval(*ast.lhs), eval(*ast.rhs));
        case ExprNode::Kind::DerivX: return deriv(eval(*ast.lhs), Axis::X);
        case ExprNode::Kind::DerivP: return deriv(eval(*ast.lhs), Axis::P);
    }
    throw Error("eval: malformed AST");
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

// One printed term: sign split off, remaining factors joined with '*'.
struct Piece {
    int sign = 1;
    std::string body;
};

Piece render_piece(const GaussianRational& c, int hpow, const WeylMonomial& mono) {
    Piece piece;
    std::vector<std::string> factors;

    if (c.is_real()) {
        piece.sign = sgn(c.re) < 0 ? -1 : 1;
        Rational mag = abs(c.re);
        if (mag != 1) factors.push_back(rational_str(mag));
    } else if (c.is_imaginary()) {
        piece.sign = sgn(c.im) < 0 ? -1 : 1;
        Rational mag = abs(c.im);
        if (mag != 1) factors.push_back(rational_str(mag));
        factors.push_back("i");
    } else {
        std::string inner = rational_str(c.re);
        inner += sgn(c.im) < 0 ? " - " : " + ";
        Rational mag = abs(c.im);
        if (mag != 1) inner += rational_str(mag) + "*";
        inner += "i";
        factors.push_back("(" + inner + ")");
    }

    if (hpow == 1)
        factors.push_back("hbar");
    else if (hpow != 0)
        factors.push_back("hbar^" + std::to_string(hpow));

    if (mono.xpow == 1)
        factors.push_back("X");
    else if (mono.xpow > 1)
        factors.push_back("X^" + std::to_string(mono.xpow));
    if (mono.ppow == 1)
        factors.push_back("P");
    else if (mono.ppow > 1)
        factors.push_back("P^" + std::to_string(mono.ppow));

    if (factors.empty()) {
        piece.body = "1";
        return piece;
    }
    piece.body = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) piece.body += "*" + factors[i];
    return piece;
}

}  // namespace

std::string format(const WeylPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& terms = p.terms();
    for (auto t = terms.rbegin(); t != terms.rend(); ++t) {
        const auto& coeffs = t->second.coeffs();
        for (auto c = coeffs.rbegin(); c != coeffs.rend(); ++c) {
            Piece piece = render_piece(c->second, c->first, t->first);
            if (first) {
                if (piece.sign < 0) out += "-";
                first = false;
            } else {
                out += piece.sign < 0 ? " - " : " + ";
            }
            out += piece.body;
        }
    }
    return out;
}

WeylPolynomial parse_polynomial(std::string_view text) { return eval(*parse(text)); }

}  // namespace weyl
