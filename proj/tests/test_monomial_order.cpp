#include "support.hpp"

#include <geoprove/monomial.hpp>
#include <geoprove/monomial_order.hpp>

#include <doctest.h>

#include <random>

using namespace geoprove;

namespace {

Monomial mono(std::vector<unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i]) m = m * Monomial::unit(exps.size(), static_cast<int>(i), exps[i]);
    return m;
}

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({2, 1, 0});
    Monomial b = mono({1, 0, 3});
    CHECK((a * b) == mono({3, 1, 3}));
    CHECK(a.total_degree() == 3);
    CHECK(Monomial::lcm(a, b) == mono({2, 1, 3}));
    CHECK(Monomial::gcd(a, b) == mono({1, 0, 0}));
    CHECK(mono({1, 0, 0}).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(a.divided_by(mono({1, 1, 0})) == mono({1, 0, 0}));
    CHECK(mono({0, 2, 0}).coprime(mono({3, 0, 1})));
    CHECK_FALSE(a.coprime(b));
    CHECK(Monomial(3).is_one());
}

TEST_CASE("lex order") {
    MonomialOrder lex = MonomialOrder::lex(2);
    CHECK(lex.greater(mono({2, 1}), mono({1, 2})));
    CHECK(lex.greater(mono({1, 0}), mono({0, 9})));
    CHECK(lex.compare(mono({1, 1}), mono({1, 1})) == 0);
}

TEST_CASE("grevlex order") {
    MonomialOrder grevlex = MonomialOrder::grevlex(2);
    CHECK(grevlex.greater(mono({1, 2}), mono({2, 0})));
    CHECK(grevlex.greater(mono({2, 1}), mono({1, 2})));
    CHECK(grevlex.greater(mono({0, 3}), mono({2, 0})));
}

TEST_CASE("elimination order dominates on the front block") {
    MonomialOrder ord = MonomialOrder::elimination(3, {1});
    CHECK(ord.greater(mono({0, 1, 0}), mono({9, 0, 9})));
    CHECK(ord.greater(mono({0, 2, 0}), mono({5, 1, 5})));
    CHECK(ord.greater(mono({1, 1, 0}), mono({0, 1, 1})));

    MonomialOrder two = MonomialOrder::elimination(4, {0, 2});
    CHECK(two.greater(mono({1, 0, 0, 0}), mono({0, 7, 0, 7})));
    CHECK(two.greater(mono({0, 0, 1, 0}), mono({0, 7, 0, 7})));
    CHECK(two.compare(mono({1, 2, 0, 1}), mono({1, 2, 0, 1})) == 0);
}

TEST_CASE("order keys") {
    CHECK(MonomialOrder::lex(3).key() == "lex");
    CHECK(MonomialOrder::grevlex(3).key() == "grevlex");
    CHECK(MonomialOrder::elimination(3, {1}).key() == "block:1:0,2");
    CHECK(MonomialOrder::lex(3) != MonomialOrder::grevlex(3));
    CHECK(MonomialOrder::elimination(3, {1}) == MonomialOrder::elimination(3, {1}));
}

TEST_CASE("order axioms on random monomials") {
    std::mt19937 rng(991);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(4),
        MonomialOrder::grevlex(4),
        MonomialOrder::elimination(4, {1, 3}),
    };
    Monomial one(4);
    for (int i = 0; i < 300; ++i) {
        Monomial a = testing::random_monomial(rng, 4);
        Monomial b = testing::random_monomial(rng, 4);
        Monomial c = testing::random_monomial(rng, 4);
        for (const auto& ord : orders) {
            int ab = ord.compare(a, b);
            CHECK(ord.compare(b, a) == -ab);
            CHECK((ab == 0) == (a == b));
            CHECK(ord.compare(a * c, b * c) == ab);
            if (!a.is_one()) CHECK(ord.greater(a, one));
            if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
        }
    }
}
