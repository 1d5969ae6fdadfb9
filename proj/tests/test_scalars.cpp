#include "generators.hpp"

#include <doctest.h>

using namespace superchevalley;

namespace {

long factorial_binomial(long n, long k)
{
    long num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

ScalarA one_plus_a() { return ScalarA(PolyA::one_plus_a()); }

}  // namespace

TEST_CASE("binom_poly examples")
{
    CHECK(binom_poly(2) == PolyA(std::vector<Rational>{0, make_rational(-1, 2), make_rational(1, 2)}));
    CHECK(binom_poly(0) == PolyA(1));
    CHECK(binom_poly(3)(4) == factorial_binomial(4, 3));
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 6; ++k) CHECK(binom_poly(static_cast<int>(k))(n) == factorial_binomial(n, k));
}

TEST_CASE("to_binomial_basis examples")
{
    auto a2 = to_binomial_basis(PolyA::a() * PolyA::a());
    CHECK(a2.coeffs == std::vector<Rational>{0, 1, 2});
    for (long x = 0; x <= 5; ++x) CHECK(a2.expand()(x) == x * x);
    CHECK(to_binomial_basis(PolyA(1)).coeffs == std::vector<Rational>{1});
    CHECK(to_binomial_basis(PolyA(std::vector<Rational>{0, make_rational(1, 2)})).coeffs ==
          std::vector<Rational>{0, make_rational(1, 2)});
}

TEST_CASE("in_Za and in_Z_bracket_a examples")
{
    ScalarA a = ScalarA::a();
    CHECK(in_Za(a * a));
    CHECK_FALSE(in_Za(ScalarA(PolyA(std::vector<Rational>{0, make_rational(1, 2)}))));
    CHECK(in_Za(ScalarA(binom_poly(5))));
    CHECK_FALSE(in_Z_bracket_a(ScalarA(binom_poly(2))));
    CHECK(in_Z_bracket_a(one_plus_a()));
    CHECK_FALSE(in_Z_bracket_a(one_plus_a().inverse()));
    CHECK(in_Z_bracket_a(ScalarA(3) * a * a - a));
}

TEST_CASE("specialize examples")
{
    ScalarA a = ScalarA::a();
    CHECK(specialize(one_plus_a().inverse() * ScalarA(2) * a, 1) == 1);
    CHECK_THROWS(specialize(a, 0));
    CHECK_THROWS(specialize(a, -1));
    CHECK(specialize(ScalarA(binom_poly(2)), 5) == factorial_binomial(5, 2));
}

TEST_CASE("ScalarA canonical form and rendering")
{
    ScalarA x(PolyA::one_plus_a() * PolyA::a(), 2);
    CHECK(x.denom_power() == 1);
    CHECK(x.numerator() == PolyA::a());
    CHECK(render(ScalarA(PolyA(std::vector<Rational>{-1, 2}), 2)) == "(2*a - 1)/(1+a)^2");
    CHECK(render(ScalarA(PolyA::a(), 1)) == "a/(1+a)");
    CHECK(render(ScalarA(make_rational(-3, 2))) == "-3/2");
    CHECK(one_plus_a().invertible());
    CHECK_FALSE(ScalarA::a().invertible());
    CHECK(one_plus_a() * one_plus_a().inverse() == 1);
}

TEST_CASE("truncated power series examples")
{
    auto s1 = truncated_power_series_power(PolyA(1), 3);
    CHECK(s1.coeffs == std::vector<ScalarA>{1, 1, 0, 0});
    auto sa = truncated_power_series_power(PolyA::a(), 2);
    CHECK(sa.coeffs == std::vector<ScalarA>{1, ScalarA::a(), ScalarA(binom_poly(2))});
    auto sm = truncated_power_series_power(PolyA(-1), 2);
    CHECK(sm.coeffs == std::vector<ScalarA>{1, -1, 1});
}

TEST_CASE("check_grouplike examples")
{
    CHECK(check_grouplike(PolyA::a(), 6));
    CHECK(check_grouplike(PolyA::a() * PolyA::a(), 6));
    CHECK(check_grouplike(PolyA(2), 4));
    for (int k = 0; k <= 2; ++k) {
        PolyA e(1);
        for (int i = 0; i < k; ++i) e = e * PolyA::a();
        CHECK(check_grouplike(e, 8));
    }
}

TEST_CASE("property: ring laws for ScalarA")
{
    gen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        ScalarA x = gen::scalar(rng), y = gen::scalar(rng), z = gen::scalar(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x - x == 0);
    }
}

TEST_CASE("property: binomial basis round trip up to degree 12")
{
    gen::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> c;
        for (int k = 0, d = gen::uniform(rng, 0, 12); k <= d; ++k) c.push_back(make_rational(gen::uniform(rng, -9, 9), gen::uniform(rng, 1, 5)));
        PolyA p(c);
        CHECK(to_binomial_basis(p).expand() == p);
    }
}

TEST_CASE("property: Z_a is closed under products")
{
    gen::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        ScalarA s = gen::za_element(rng), t = gen::za_element(rng);
        REQUIRE(in_Za(s));
        REQUIRE(in_Za(t));
        CHECK(in_Za(s * t));
    }
}

TEST_CASE("property: integer exponents agree with repeated multiplication")
{
    for (int n = 0; n <= 6; ++n) {
        TruncatedSeries base{{1, 1}, n};
        base.coeffs.resize(n + 1);
        for (int e = -3; e <= 3; ++e) {
            TruncatedSeries expected{{1}, n};
            expected.coeffs.resize(n + 1);
            if (e >= 0) {
                for (int k = 0; k < e; ++k) expected = expected * base;
            } else {
                TruncatedSeries inv{{}, n};
                for (int k = 0; k <= n; ++k) inv.coeffs.push_back(k % 2 ? -1 : 1);
                for (int k = 0; k < -e; ++k) expected = expected * inv;
            }
            CHECK(truncated_power_series_power(PolyA(e), n) == expected);
        }
    }
}

TEST_CASE("mutation: a corrupted series is not group-like")
{
    auto s = truncated_power_series_power(PolyA::a(), 6);
    auto coeffs = s.coeffs;
    CHECK(check_grouplike_series(coeffs, 6));
    coeffs[3] += 1;
    CHECK_FALSE(check_grouplike_series(coeffs, 6));
}
