#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "oracle.hpp"
#include "weyl/parser.hpp"

using weyl::ExprNode;
using weyl::GaussianRational;
using weyl::HbarLaurent;
using weyl::ParseError;
using weyl::WeylPolynomial;

namespace {

GaussianRational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 9);
    return GaussianRational(weyl::make_rational(num, den));
}

GaussianRational random_gaussian(std::mt19937_64& rng) {
    GaussianRational c = random_rational(rng);
    if (rng() % 2 == 0) c += GaussianRational(weyl::Rational(0), random_rational(rng).re);
    return c;
}

WeylPolynomial random_poly(std::mt19937_64& rng) {
    WeylPolynomial f;
    const unsigned terms = 1 + rng() % 5;
    for (unsigned t = 0; t < terms; ++t) {
        const unsigned xp = rng() % 4;
        const unsigned pp = rng() % 4;
        const int hp = static_cast<int>(rng() % 7) - 3;  // negative hbar powers included
        f += WeylPolynomial::monomial({xp, pp}, HbarLaurent::single(hp, random_gaussian(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("parse builds the expected tree shapes") {
    const weyl::ExprPtr comm = weyl::parse("[X,P]");
    REQUIRE(comm->kind == ExprNode::Kind::Comm);
    CHECK(comm->lhs->kind == ExprNode::Kind::SymX);
    CHECK(comm->rhs->kind == ExprNode::Kind::SymP);

    const weyl::ExprPtr tree = weyl::parse("X^2*P - i*hbar");
    REQUIRE(tree->kind == ExprNode::Kind::Sub);
    REQUIRE(tree->lhs->kind == ExprNode::Kind::Mul);
    REQUIRE(tree->lhs->lhs->kind == ExprNode::Kind::Pow);
    CHECK(tree->lhs->lhs->lhs->kind == ExprNode::Kind::SymX);
    CHECK(tree->lhs->lhs->exponent == 2);
    CHECK(tree->lhs->rhs->kind == ExprNode::Kind::SymP);
    REQUIRE(tree->rhs->kind == ExprNode::Kind::Mul);
    CHECK(tree->rhs->lhs->kind == ExprNode::Kind::ImagUnit);
    CHECK(tree->rhs->rhs->kind == ExprNode::Kind::SymHbar);
}

TEST_CASE("grammar restrictions are reported with kinds and positions") {
    try {
        weyl::parse("X^P");
        FAIL("expected NonIntegerExponent");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::NonIntegerExponent);
        CHECK(e.position == 2);
    }
    try {
        weyl::parse("X^-1");
        FAIL("expected NonIntegerExponent");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::NonIntegerExponent);
    }
    try {
        weyl::parse("(X + P");
        FAIL("expected UnbalancedDelimiter");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::UnbalancedDelimiter);
    }
    try {
        weyl::parse("[X P]");
        FAIL("expected SyntaxError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::Syntax);
        CHECK(!e.expected.empty());
    }
    CHECK_THROWS_AS(weyl::parse("3/0"), ParseError);
    CHECK_THROWS_AS(weyl::parse("X P"), ParseError);  // juxtaposition is not multiplication
    CHECK_THROWS_AS(weyl::parse("foo"), ParseError);
    CHECK_THROWS_AS(weyl::parse(""), ParseError);
}

TEST_CASE("eval reduces to canonical polynomials") {
    CHECK(weyl::parse_polynomial("[X,P] - i*hbar").is_zero());
    CHECK(weyl::parse_polynomial("{X,P}") ==
          oracle::normal_order({{GaussianRational(1), 0, "XP"}, {GaussianRational(1), 0, "PX"}}));
    CHECK(weyl::parse_polynomial("Dx(X^3)") ==
          WeylPolynomial::monomial({2, 0}, HbarLaurent::constant(GaussianRational(3))));
    CHECK(weyl::parse_polynomial("Dp(X*P^2)") ==
          WeylPolynomial::monomial({1, 1}, HbarLaurent::constant(GaussianRational(2))));
    CHECK(weyl::parse_polynomial("X^0") == WeylPolynomial::one());
    CHECK(weyl::parse_polynomial("hbar^-1 * hbar") == WeylPolynomial::one());
    CHECK(weyl::parse_polynomial("-3/4 * X") ==
          WeylPolynomial::monomial({1, 0}, HbarLaurent::constant(GaussianRational(weyl::make_rational(-3, 4)))));

    // literals are arbitrary precision
    const std::string big(40, '9');
    const WeylPolynomial huge = weyl::parse_polynomial(big + "/" + big);
    CHECK(huge == WeylPolynomial::one());
    CHECK(weyl::parse_polynomial(big) - weyl::parse_polynomial(big) == WeylPolynomial::zero());
}

TEST_CASE("precedence matches ^ > unary minus > * > additive") {
    CHECK(weyl::parse_polynomial("-X^2") == -weyl::parse_polynomial("X^2"));
    CHECK(weyl::parse_polynomial("2*X+P") ==
          weyl::parse_polynomial("(2*X)+P"));
    CHECK(weyl::parse_polynomial("-2^2") == WeylPolynomial::constant(GaussianRational(-4)));
    CHECK(weyl::parse_polynomial(" [ X , P ] ") == weyl::parse_polynomial("[X,P]"));
}

TEST_CASE("format canonical examples") {
    CHECK(weyl::format(WeylPolynomial::zero()) == "0");
    CHECK(weyl::format(weyl::parse_polynomial("[X,P]")) == "i*hbar");
    CHECK(weyl::format(weyl::parse_polynomial("P*X")) == "X*P - i*hbar");
    CHECK(weyl::format(WeylPolynomial::one()) == "1");
    CHECK(weyl::format(weyl::parse_polynomial("-X")) == "-X");
    CHECK(weyl::format(weyl::parse_polynomial("X^2 + X*P + 1")) == "X^2 + X*P + 1");
}

TEST_CASE("round trip: eval(parse(format(p))) is the identity") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 500; ++t) {
        const WeylPolynomial p = random_poly(rng);
        const std::string text = weyl::format(p);
        CAPTURE(text);
        CHECK(weyl::parse_polynomial(text) == p);
    }
}

TEST_CASE("normal-order canonicality survives formatting") {
    std::mt19937_64 rng(101);
    const WeylPolynomial x = WeylPolynomial::sym_x();
    const WeylPolynomial p = WeylPolynomial::sym_p();
    for (int t = 0; t < 100; ++t) {
        const WeylPolynomial f = random_poly(rng) * p * x;  // force rewrites
        CHECK(weyl::parse_polynomial(weyl::format(f)) == f);
    }
}

TEST_CASE("parser never crashes on arbitrary bytes") {
    std::mt19937_64 rng(103);
    const std::string alphabet = "XPhbari()[]{},*+-^/0123456789 \t.;&%$#@!\\\"'<>=~`";
    for (int t = 0; t < 400; ++t) {
        const std::size_t len = rng() % 1024;
        std::string s;
        s.reserve(len);
        const bool printable = t % 2 == 0;
        for (std::size_t k = 0; k < len; ++k) {
            s += printable ? alphabet[rng() % alphabet.size()]
                           : static_cast<char>(rng() % 256);
        }
        try {
            const weyl::ExprPtr e = weyl::parse(s);
            weyl::eval(*e);  // evaluation must stay total on accepted input
        } catch (const ParseError&) {
            // structured rejection is the expected outcome
        } catch (const weyl::Error&) {
            // eval-side domain errors are structured too
        }
    }
    CHECK(true);
}
