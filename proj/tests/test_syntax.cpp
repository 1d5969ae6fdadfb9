#include "generators.hpp"

#include "superchevalley/syntax.hpp"

#include <doctest.h>

using namespace superchevalley;

namespace {

Root R(int x, int y, int z) { return Root{{x, y, z}}; }

}  // namespace

TEST_CASE("parse examples")
{
    CHECK(parse_basis_vector("E(a1+a2)") == BasisVector::root_vector(to_root(simple_root(1).eps + simple_root(2).eps)));
    auto w = parse_kostant_word("binom(H1,2)");
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == GeneratorAtom::Kind::CartanBinomial);
    CHECK(w[0].n == 2);
    CHECK(w[0].h == CartanElement::basis(1));
    CHECK_THROWS_AS(parse_basis_vector("E(a1+a1)"), ParseError);
    try {
        parse_root("a1+a1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("not a root") != std::string::npos);
    }
}

TEST_CASE("root literals")
{
    CHECK(parse_root("a1") == R(1, -1, -1));
    CHECK(parse_root("2e1") == R(2, 0, 0));
    CHECK(parse_root("e1+e2-e3") == R(1, 1, -1));
    CHECK(parse_root("2a1+a2+a3") == R(2, 0, 0));
    CHECK(parse_root("-a1") == R(-1, 1, 1));
    CHECK_THROWS_AS(parse_root("e1"), ParseError);
    CHECK_THROWS_AS(parse_root("a4"), ParseError);
}

TEST_CASE("scalars and vectors")
{
    CHECK(parse_scalar("(2*a - 1)/(1+a)^2") == ScalarA(PolyA(std::vector<Rational>{-1, 2}), 2));
    CHECK(parse_scalar("binom(a,2)") == ScalarA(binom_poly(2)));
    CHECK(parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(parse_super_vector("-H1 + (1+a)*H2") == bracket(presentation_vector("e123"), presentation_vector("f321")));
    CHECK(parse_cartan("H[2e2]") == coroot(R(0, 2, 0)));
    CHECK(parse_cartan("2*H1 - (1+a)*H2 - a*H3") == coroot(R(0, 2, 0)));
    Carrier c = Carrier::grassmann(4);
    CarrierElement x = parse_carrier_element("1 - x1*x2 + a*th3", c);
    CHECK(x == CarrierElement(c, 1) - CarrierElement::odd_generator(c, 1) * CarrierElement::odd_generator(c, 2) +
                   ScalarA::a() * CarrierElement::odd_generator(c, 3));
    CHECK_THROWS_AS(parse_carrier_element("x5", c), ParseError);
}

TEST_CASE("group words")
{
    Carrier c = Carrier::grassmann(4);
    GroupWord w = parse_group_word("xE(2e2; 3); xO(e1-e2-e3; th1); hC(H[2e2]; 2); hA(H1; 1 - th1*th2)", c);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == GeneratorRecord::additive_even(R(0, 2, 0), CarrierElement(c, 3)));
    CHECK(w[1] == GeneratorRecord::additive_odd(R(1, -1, -1), CarrierElement::odd_generator(c, 1)));
    CHECK(w[2].kind == GeneratorRecord::Kind::TorusClassical);
    CHECK(w[3].kind == GeneratorRecord::Kind::TorusAType);
    CHECK(parse_group_word("xE(2e2; 3) * xO(a1; x1)", c).size() == 2);
    CHECK_THROWS(parse_group_word("xO(2e2; x1)", c));
}

TEST_CASE("errors are annotated with a column")
{
    try {
        parse_expression("E(a1) + * H1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
        std::string s = e.annotate("E(a1) + * H1");
        CHECK(s.find("E(a1) + * H1") != std::string::npos);
        CHECK(s.find("        ^") != std::string::npos);
    }
}

TEST_CASE("property: parse of render is the identity")
{
    for (const auto& b : BasisVector::all()) CHECK(parse_basis_vector(basis_name(b)) == b);
    for (const auto& r : all_roots()) CHECK(parse_root(root_name(r.eps)) == r);
    gen::Rng rng(51);
    for (int i = 0; i < 50; ++i) {
        PBWElement e = straighten(gen::kostant_word(rng, 4));
        for (const auto& [m, c] : e.terms()) CHECK(straighten(parse_kostant_word(render(m))) == PBWElement::monomial(m));
        SuperVector v;
        for (const auto& b : BasisVector::all())
            if (gen::uniform(rng, 0, 3) == 0) v[b] = gen::scalar(rng);
        CHECK(parse_super_vector(render(v)) == v);
    }
    Carrier c = Carrier::grassmann(4);
    for (int i = 0; i < 30; ++i) {
        GroupWord w = gen::group_word(rng, c, 4);
        CHECK(parse_group_word(render(w), c) == w);
        CarrierElement x = gen::even_element(rng, c) + gen::odd_element(rng, c);
        CHECK(parse_carrier_element(render(x), c) == x);
    }
}

TEST_CASE("JSON output carries the schema version")
{
    auto t = table_json(structure_table());
    CHECK(t["schema"] == 1);
    auto r = roots_json();
    CHECK(r["schema"] == 1);
    CHECK(r["roots"].size() == 14);
}
