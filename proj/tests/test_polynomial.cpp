#include "support.hpp"

#include <geoprove/polynomial.hpp>

#include <doctest.h>

#include <random>

using namespace geoprove;

namespace {

const Polynomial x = Polynomial::variable(0, 2);
const Polynomial y = Polynomial::variable(1, 2);

Polynomial c(long n, long d = 1) { return Polynomial::constant(Rational(n, d), 2); }

} // namespace

TEST_CASE("basic arithmetic") {
    CHECK((x + y) + (x - y) == c(2) * x);
    CHECK((x - c(3)) * (x + c(3)) == x * x - c(9));
    CHECK((x + y) * (x + y) == x * x + c(2) * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK(x * Polynomial::zero(2) == Polynomial::zero(2));
    CHECK((x + y).pow(3) ==
          x.pow(3) + c(3) * x * x * y + c(3) * x * y * y + y.pow(3));
    CHECK(-(x - y) == y - x);
}

TEST_CASE("degrees and term access") {
    Polynomial p = x * x * y + x * y - c(7);
    CHECK(p.total_degree() == 3);
    CHECK(p.degree(0) == 2);
    CHECK(p.degree(1) == 1);
    CHECK(p.term_count() == 3);
    CHECK(Polynomial::zero(2).total_degree() == 0);
    CHECK(c(5).is_constant());
    CHECK(Polynomial::zero(2).is_constant());
    CHECK_FALSE(x.is_constant());
}

TEST_CASE("leading terms depend on the order") {
    Polynomial p = x * x + x * y * y;
    CHECK(p.leading(MonomialOrder::grevlex(2)).mono == (x * y * y).terms()[0].mono);
    CHECK(p.leading(MonomialOrder::lex(2)).mono == (x * x).terms()[0].mono);
    CHECK_THROWS(Polynomial::zero(2).leading(MonomialOrder::lex(2)));
}

TEST_CASE("evaluation") {
    Polynomial p = x - c(2) * y;
    CHECK(p.eval({Rational(8), Rational(4)}) == Rational(0));
    Polynomial q = x * x + y * y - c(25);
    CHECK(q.eval({Rational(3), Rational(4)}) == Rational(0));
    CHECK(q.eval({Rational(1), Rational(1)}) == Rational(-23));
    CHECK(q.eval({Rational(1, 2), Rational(0)}) == Rational(-99, 4));
}

TEST_CASE("substitution") {
    Polynomial p = x * x + y;
    CHECK(p.substitute(0, y + c(1)) == y * y + c(3) * y + c(1));
    CHECK(p.substitute(1, Polynomial::zero(2)) == x * x);
    Polynomial q = x * y;
    CHECK(q.substitute(0, c(2) * y) == c(2) * y * y);
}

TEST_CASE("derivative") {
    Polynomial p = x.pow(3) * y + c(5) * x - c(2);
    CHECK(p.derivative(0) == c(3) * x * x * y + c(5));
    CHECK(p.derivative(1) == x.pow(3));
    CHECK(c(9).derivative(0).is_zero());
}

TEST_CASE("content and normalization") {
    Polynomial p = c(4) * x - c(6) * y;
    CHECK(p.content() == Rational(2));
    Polynomial q = c(1, 2) * x + c(1, 3) * y;
    CHECK(q.content() == Rational(1, 6));

    MonomialOrder ord = MonomialOrder::grevlex(2);
    CHECK(p.normalized(ord) == c(2) * x - c(3) * y);
    CHECK((-p).normalized(ord) == c(2) * x - c(3) * y);
    CHECK(q.normalized(ord) == c(3) * x + c(2) * y);
    CHECK(Polynomial::zero(2).normalized(ord).is_zero());
    CHECK(Polynomial::zero(2).content() == Rational(0));
}

TEST_CASE("ring extension") {
    Polynomial p = x * y + c(1);
    Polynomial q = p.extended(4);
    CHECK(q.nvars() == 4);
    CHECK(q.degree(0) == 1);
    CHECK(q.degree(3) == 0);
    CHECK(q.eval({Rational(2), Rational(3), Rational(9), Rational(9)}) == Rational(7));
}

TEST_CASE("printing") {
    std::vector<std::string> names = {"x", "y"};
    CHECK((x * x + y * y - c(25)).str(names) == "x^2 + y^2 - 25");
    CHECK((x * y - c(1)).str(names) == "x*y - 1");
    CHECK((c(-1) * x).str(names) == "-x");
    CHECK((c(5, 2) * x - y).str(names) == "5/2*x - y");
    CHECK(Polynomial::zero(2).str(names) == "0");
    CHECK(c(-7).str(names) == "-7");
    CHECK((c(2) * x * x * y).str(names) == "2*x^2*y");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7711);
    for (int i = 0; i < 250; ++i) {
        Polynomial a = testing::random_polynomial(rng, 3);
        Polynomial b = testing::random_polynomial(rng, 3);
        Polynomial cc = testing::random_polynomial(rng, 3);

        CHECK((a + b) + cc == a + (b + cc));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
        CHECK((a - a).is_zero());

        auto pt = testing::random_point(rng, 3);
        CHECK((a * b + cc).eval(pt) == a.eval(pt) * b.eval(pt) + cc.eval(pt));

        if (!a.is_zero()) {
            MonomialOrder ord = MonomialOrder::grevlex(3);
            Polynomial n = a.normalized(ord);
            CHECK(n.content() == Rational(1));
            CHECK(n.leading(ord).coef.sign() > 0);
            CHECK(n.normalized(ord) == n);
        }
    }
}
