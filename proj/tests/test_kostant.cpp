#include "generators.hpp"

#include <doctest.h>

#include <set>

using namespace superchevalley;

namespace {

Root R(int x, int y, int z) { return Root{{x, y, z}}; }
const Root a1 = R(1, -1, -1), a2 = R(0, 2, 0);

PBWMonomial mono(std::vector<PBWAtom> atoms) { return PBWMonomial{std::move(atoms)}; }
PBWAtom cartan(int n1, int n2, int n3) { return PBWAtom::cartan_product({n1, n2, n3}); }
PBWAtom rp(const Root& r, int n = 1) { return PBWAtom::root_power(r, n); }

Matrix<ScalarA> product_of_atoms(const GeneratorWord& w)
{
    Matrix<ScalarA> m = Matrix<ScalarA>::identity(kDim);
    for (const auto& a : w) m = m * act_on_adjoint(a);
    return m;
}

// Value of sum c_d prod binom(h_i, d_i) at integer h and a = a0.
Rational evaluate_cartan(const PBWElement& e, const std::array<long, 3>& h, const Rational& a0)
{
    Rational total = 0;
    for (const auto& [m, c] : e.terms()) {
        Rational v = specialize(c, a0);
        for (const auto& at : m.atoms) {
            REQUIRE(at.kind == PBWAtom::Kind::CartanProduct);
            for (int i = 0; i < 3; ++i) v *= binomial(Rational(h[i]), at.degrees[i]);
        }
        total += v;
    }
    return total;
}

}  // namespace

TEST_CASE("straighten examples")
{
    GeneratorWord w{GeneratorAtom::odd_vector(a1), GeneratorAtom::odd_vector(-a1)};
    PBWElement want = ScalarA(-1) * PBWElement::monomial(mono({rp(-a1), rp(a1)})) + PBWElement::monomial(mono({cartan(1, 0, 0)}));
    CHECK(straighten(w) == want);

    GeneratorWord w2{GeneratorAtom::odd_vector(-a1), GeneratorAtom::odd_vector(a1)};
    CHECK(straighten(w2) == PBWElement::monomial(mono({rp(-a1), rp(a1)})));

    GeneratorWord d{GeneratorAtom::divided_power(a2, 2), GeneratorAtom::divided_power(a2, 3)};
    CHECK(straighten(d) == PBWElement::monomial(mono({rp(a2, 5)}), 10));

    GeneratorWord sq{GeneratorAtom::odd_vector(a1), GeneratorAtom::odd_vector(a1)};
    CHECK(straighten(sq).is_zero());
}

TEST_CASE("expand_shifted_binomial examples")
{
    PBWElement h1 = PBWElement::monomial(mono({cartan(1, 0, 0)}));
    PBWElement h2 = PBWElement::monomial(mono({cartan(0, 1, 0)}));
    CHECK(expand_shifted_binomial(CartanElement::basis(1), 1, 1) == h1 - PBWElement::one());
    CHECK(expand_shifted_binomial(CartanElement::basis(1) + CartanElement::basis(2), 0, 1) == h1 + h2);

    PBWElement e = expand_shifted_binomial(CartanElement::basis(1), ScalarA::a(), 2);
    CHECK(is_Za_certified(e));
    for (long a0 : {2, 3, 5})
        for (long h = 0; h <= 4; ++h)
            CHECK(evaluate_cartan(e, {h, 0, 0}, a0) == binomial(Rational(h - a0), 2));
}

TEST_CASE("property: shifted binomials agree with evaluation")
{
    gen::Rng rng(21);
    for (int i = 0; i < 40; ++i) {
        CartanElement h;
        for (auto& c : h.coords) c = gen::z_bracket_a_element(rng);
        ScalarA shift = gen::z_bracket_a_element(rng);
        int n = gen::uniform(rng, 0, 3);
        PBWElement e = expand_shifted_binomial(h, shift, n);
        CHECK(is_Za_certified(e));
        for (long a0 : {2, 3, 5})
            for (long x = -1; x <= 2; ++x)
                for (long y = 0; y <= 2; ++y) {
                    long z = x - y;
                    Rational arg = -specialize(shift, a0);
                    arg += specialize(h.coords[0], a0) * x + specialize(h.coords[1], a0) * y + specialize(h.coords[2], a0) * z;
                    CHECK(evaluate_cartan(e, {x, y, z}, a0) == binomial(arg, n));
                }
    }
}

TEST_CASE("multiply examples")
{
    PBWElement m = PBWElement::monomial(mono({rp(-a1), cartan(0, 2, 0)}));
    CHECK(multiply(PBWElement::one(), m) == m);
    CHECK(multiply(m, PBWElement::one()) == m);
    PBWElement x = PBWElement::monomial(mono({rp(a1)})), y = PBWElement::monomial(mono({rp(-a1)}));
    CHECK(multiply(x, y) + multiply(y, x) == PBWElement::monomial(mono({cartan(1, 0, 0)})));

    PBWElement e = PBWElement::monomial(mono({rp(a2)})), f = PBWElement::monomial(mono({rp(-a2)}));
    CHECK(multiply(multiply(e, f), e) == multiply(e, multiply(f, e)));
}

TEST_CASE("property: associativity of multiply")
{
    gen::Rng rng(22);
    for (int i = 0; i < 30; ++i) {
        PBWElement x = straighten(gen::kostant_word(rng, 3));
        PBWElement y = straighten(gen::kostant_word(rng, 3));
        PBWElement z = straighten(gen::kostant_word(rng, 3));
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("tensor_shape examples")
{
    Root g = R(-1, 1, 1), gp = R(1, 1, 1);
    PBWElement e = PBWElement::monomial(mono({rp(g), cartan(2, 0, 0), rp(a2, 3), rp(gp)}));
    auto shape = tensor_shape(e);
    REQUIRE(shape.size() == 1);
    CHECK(shape[0].splits);
    CHECK(shape[0].even_part == std::vector<PBWAtom>{cartan(2, 0, 0), rp(a2, 3)});
    CHECK(shape[0].odd_part == std::vector<Root>{g, gp});

    auto unit = tensor_shape(PBWElement::one());
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].even_part.empty());
    CHECK(unit[0].odd_part.empty());

    GeneratorWord all;
    for (const auto& r : all_roots())
        if (r.is_odd()) all.push_back(GeneratorAtom::odd_vector(r));
    REQUIRE(all.size() == 8);
    PBWElement p = straighten(all);
    std::set<std::vector<Root>> odd_parts;
    for (const auto& f : tensor_shape(p)) {
        CHECK(f.splits);
        odd_parts.insert(f.odd_part);
    }
    CHECK(odd_parts.size() >= 1);
    CHECK(odd_parts.size() <= 256);
}

TEST_CASE("act_on_adjoint examples")
{
    auto e2 = adjoint_matrix(BasisVector::root_vector(a2));
    CHECK(act_on_adjoint(rp(a2, 2)) == (e2 * e2).scaled(ScalarA(make_rational(1, 2))));
    auto h = act_on_adjoint(cartan(1, 0, 0));
    for (const auto& b : BasisVector::all())
        for (const auto& c : BasisVector::all())
            CHECK(h(b.index(), c.index()) == (b == c ? pairing(b.weight(), CartanElement::basis(1)) : ScalarA()));
    CHECK(act_on_adjoint(PBWElement::one()) == Matrix<ScalarA>::identity(kDim));
}

TEST_CASE("property: representation soundness and integrality")
{
    gen::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        GeneratorWord w = gen::kostant_word(rng, 5);
        PBWElement e = straighten(w);
        CHECK(is_Za_certified(e));
        CHECK(act_on_adjoint(e) == product_of_atoms(w));
        for (const auto& f : tensor_shape(e)) CHECK(f.splits);
        for (const auto& [m, c] : e.terms()) CHECK(m.is_normal());
    }
}

TEST_CASE("property: confluence of rewriting strategies")
{
    gen::Rng rng(24);
    for (int i = 0; i < 60; ++i) {
        GeneratorWord w = gen::kostant_word(rng, 6);
        CHECK(straighten(w, Strategy::LeftmostFirst) == straighten(w, Strategy::RightmostFirst));
    }
}

TEST_CASE("property: nilpotency of repeated odd atoms")
{
    gen::Rng rng(25);
    for (int i = 0; i < 30; ++i) {
        GeneratorWord w = gen::kostant_word(rng, 2);
        Root g = gen::pick(rng, gen::odd_roots());
        GeneratorWord doubled = w;
        doubled.push_back(GeneratorAtom::odd_vector(g));
        doubled.push_back(GeneratorAtom::odd_vector(g));
        GeneratorWord tail = gen::kostant_word(rng, 2);
        doubled.insert(doubled.end(), tail.begin(), tail.end());
        for (const auto& [m, c] : straighten(doubled).terms()) {
            int count = 0;
            for (const auto& a : m.atoms) count += a == rp(g);
            CHECK(count <= 1);
        }
    }
}

TEST_CASE("string signs reproduce the structure table")
{
    for (const auto& alpha : all_roots()) {
        if (!alpha.is_even()) continue;
        for (const auto& gamma : all_roots()) {
            if (!gamma.is_odd()) continue;
            RootString s = root_string(gamma, alpha);
            auto eps = string_signs(alpha, gamma);
            REQUIRE(static_cast<int>(eps.size()) == s.q);
            for (int k = 1; k <= s.q; ++k) {
                Root prev = to_root(gamma.eps + (k - 1) * alpha.eps), next = to_root(gamma.eps + k * alpha.eps);
                SuperVector b = bracket(SuperVector::unit(BasisVector::root_vector(alpha)), SuperVector::unit(BasisVector::root_vector(prev)));
                CHECK(b == ScalarA(eps[k - 1] * (s.r + k)) * SuperVector::unit(BasisVector::root_vector(next)));
            }
        }
    }
}

TEST_CASE("Cartan binomials commute")
{
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int n = 0; n <= 2; ++n)
                for (int m = 0; m <= 2; ++m) {
                    GeneratorWord x{GeneratorAtom::cartan_binomial(CartanElement::basis(i), n),
                                    GeneratorAtom::cartan_binomial(CartanElement::basis(j), m)};
                    GeneratorWord y{x[1], x[0]};
                    CHECK(straighten(x) == straighten(y));
                }
}

TEST_CASE("rendering of normal forms")
{
    GeneratorWord w{GeneratorAtom::odd_vector(a1), GeneratorAtom::odd_vector(-a1)};
    CHECK(render(straighten(w)) == "-F(a1)*E(a1) + binom(H1,1)");
    GeneratorWord d{GeneratorAtom::divided_power(a2, 2), GeneratorAtom::divided_power(a2, 3)};
    CHECK(render(straighten(d)) == "10*E(a2)^(5)");
}
