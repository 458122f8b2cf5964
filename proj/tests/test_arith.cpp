#include <doctest.h>

#include "cubeprog/arith.hpp"
#include "test_util.hpp"

using namespace cubeprog;

TEST_CASE("squarefree decomposition") {
    auto s = squarefree_decompose(Integer(12));
    CHECK(s.core == 3);
    CHECK(s.cofactor == 2);

    s = squarefree_decompose(Integer(1));
    CHECK(s.core == 1);
    CHECK(s.cofactor == 1);

    s = squarefree_decompose(Integer(-27));
    CHECK(s.core == -3);
    CHECK(s.cofactor == 3);

    CHECK_THROWS_AS(squarefree_decompose(Integer(0)), std::invalid_argument);

    testutil::RationalGen gen;
    for (int i = 0; i < 200; ++i) {
        Integer n(gen.next_long(-100000, 100000));
        if (n == 0) continue;
        auto d = squarefree_decompose(n);
        CHECK(d.core * d.cofactor * d.cofactor == n);
        CHECK(d.cofactor > 0);
        CHECK(is_squarefree(d.core));
    }
}

TEST_CASE("primality") {
    CHECK(is_prime(Integer(7)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK(is_prime(Integer(37)));
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(-13)));
    CHECK_FALSE(is_prime(Integer(0)));
    CHECK_FALSE(is_prime(Integer(1000001)));   // 101 * 9901

    Integer m61 = (Integer(1) << 61) - 1;
    CHECK(is_prime(m61));
    Integer m67 = (Integer(1) << 67) - 1;      // 193707721 * 761838257287
    CHECK_FALSE(is_prime(m67));
}

TEST_CASE("factorization") {
    auto f = factorize(Integer(30));
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Integer, int>{Integer(2), 1});
    CHECK(f.factors[1] == std::pair<Integer, int>{Integer(3), 1});
    CHECK(f.factors[2] == std::pair<Integer, int>{Integer(5), 1});

    f = factorize(Integer(-26));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 2);
    CHECK(f.factors[1].first == 13);

    f = factorize(Integer(49));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<Integer, int>{Integer(7), 2});

    CHECK_THROWS_AS(factorize(Integer(0)), std::invalid_argument);

    Integer m67 = (Integer(1) << 67) - 1;
    f = factorize(m67);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == Integer("193707721"));
    CHECK(f.factors[1].first == Integer("761838257287"));
    CHECK(f.value() == m67);

    testutil::RationalGen gen(7);
    for (int i = 0; i < 100; ++i) {
        Integer n = Integer(gen.next_long(2, 1u << 30)) * Integer(gen.next_long(2, 1u << 15));
        auto fact = factorize(n);
        CHECK(fact.value() == n);
        int prev_ok = true;
        for (std::size_t j = 0; j < fact.factors.size(); ++j) {
            CHECK(is_prime(fact.factors[j].first));
            if (j > 0) prev_ok = prev_ok && fact.factors[j - 1].first < fact.factors[j].first;
        }
        CHECK(prev_ok);
    }
}

TEST_CASE("divisors and exact roots") {
    auto divs = positive_divisors(Integer(28));
    CHECK(divs == std::vector<Integer>{1, 2, 4, 7, 14, 28});

    CHECK(integer_sqrt_exact(Integer(49)).value() == 7);
    CHECK_FALSE(integer_sqrt_exact(Integer(50)).has_value());
    CHECK_FALSE(integer_sqrt_exact(Integer(-4)).has_value());
    CHECK(integer_cbrt_exact(Integer(-27)).value() == -3);
    CHECK_FALSE(integer_cbrt_exact(Integer(9)).has_value());

    CHECK(rational_sqrt_exact(make_rational(4, 9)).value() == make_rational(2, 3));
    CHECK_FALSE(rational_sqrt_exact(make_rational(2, 3)).has_value());
    CHECK_FALSE(rational_sqrt_exact(make_rational(-4, 9)).has_value());
}

TEST_CASE("parsing and rendering") {
    CHECK(parse_integer("-30").value() == -30);
    CHECK_FALSE(parse_integer("12/5").has_value());
    CHECK_FALSE(parse_integer("").has_value());
    CHECK_FALSE(parse_integer("3.5").has_value());

    CHECK(parse_rational("987505/24336").value() == make_rational(987505, 24336));
    CHECK(parse_rational("10/4").value() == make_rational(5, 2));
    CHECK(parse_rational("7").value() == 7);
    CHECK(parse_rational("-6/-4").value() == make_rational(3, 2));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("x").has_value());

    CHECK(to_string(make_rational(-10, 4)) == "-5/2");
    CHECK(to_string(make_rational(8, 4)) == "2");

    CHECK(mod_floor(Integer(-13), Integer(12)) == 11);
    CHECK(mod_floor(Integer(-2), Integer(3)) == 1);
}
