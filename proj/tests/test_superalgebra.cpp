#include "superchevalley/superalgebra.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

using namespace superchevalley;

namespace {

struct ModelEntry {
    const char* x;
    const char* y;
    const char* z;
    std::vector<long> coeffs;
};

// Independent oracle: brackets computed in a concrete sl2 + sl2 + sl2 + (V x V x V) realization.
const std::vector<ModelEntry> kModel = {
#include "model_table.inc"
};

SuperVector model_vector(const std::string& name)
{
    static const std::map<std::string, Root> roots{
        {"e1", Root{{1, -1, -1}}},   {"e2", Root{{0, 2, 0}}},    {"e3", Root{{0, 0, 2}}},     {"e12", Root{{1, 1, -1}}},
        {"e13", Root{{1, -1, 1}}},   {"e123", Root{{1, 1, 1}}},  {"e1123", Root{{2, 0, 0}}},  {"f1", Root{{-1, 1, 1}}},
        {"f2", Root{{0, -2, 0}}},    {"f3", Root{{0, 0, -2}}},   {"f21", Root{{-1, -1, 1}}},  {"f31", Root{{-1, 1, -1}}},
        {"f321", Root{{-1, -1, -1}}}, {"f3211", Root{{-2, 0, 0}}}};
    if (name == "H1" || name == "H2" || name == "H3") return SuperVector::unit(BasisVector::cartan(name[1] - '0'));
    return SuperVector::unit(BasisVector::root_vector(roots.at(name)));
}

std::vector<std::string> model_names()
{
    return {"H1", "H2", "H3", "e1", "e2", "e3", "e12", "e13", "e123", "e1123",
            "f1", "f2", "f3", "f21", "f31", "f321", "f3211"};
}

BasisVector X(int x, int y, int z) { return BasisVector::root_vector(Root{{x, y, z}}); }
SuperVector V(const BasisVector& b) { return SuperVector::unit(b); }
ScalarA A() { return ScalarA::a(); }
ScalarA one_plus_a() { return ScalarA(PolyA::one_plus_a()); }

}  // namespace

TEST_CASE("structure table agrees with the independent model on all 289 pairs")
{
    std::map<std::pair<std::string, std::string>, SuperVector> expected;
    for (const auto& e : kModel) {
        std::vector<Rational> c(e.coeffs.begin(), e.coeffs.end());
        expected[{e.x, e.y}] += ScalarA(PolyA(c)) * model_vector(e.z);
    }
    int compared = 0;
    for (const auto& x : model_names())
        for (const auto& y : model_names()) {
            ++compared;
            SuperVector want = expected.count({x, y}) ? expected[{x, y}] : SuperVector();
            INFO(x << ", " << y);
            CHECK(bracket(model_vector(x), model_vector(y)) == want);
        }
    CHECK(compared == 289);
}

TEST_CASE("negating [f321, e1123'] breaks super-Jacobi")
{
    auto relations = presentation_brackets();
    bool flipped = false;
    for (auto& r : relations)
        if (r.x == "f321" && r.y == "e1123'") {
            for (auto& [c, name] : r.value) c = -c;
            flipped = true;
        }
    REQUIRE(flipped);
    StructureTable negated = build_structure_table(relations);
    auto rep = check_super_jacobi(negated);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures.size() > 0);
    CHECK(check_super_jacobi(structure_table()).ok());
}

TEST_CASE("build_structure_table examples")
{
    CHECK(bracket(presentation_vector("e1"), presentation_vector("e2")) == presentation_vector("e12"));
    CHECK(bracket(presentation_vector("f1"), presentation_vector("e13")) == A() * presentation_vector("e3"));
    SuperVector h = bracket(presentation_vector("e123"), presentation_vector("f321"));
    CHECK(h == -V(BasisVector::cartan(1)) + one_plus_a() * V(BasisVector::cartan(2)));
    CHECK(h == presentation_vector("h1") - presentation_vector("h2") - A() * presentation_vector("h3"));
}

TEST_CASE("bracket examples")
{
    CHECK(bracket(V(BasisVector::cartan(1)), V(BasisVector::cartan(2))).is_zero());
    CHECK(bracket(V(X(1, -1, -1)), V(X(-1, 1, 1))) == V(BasisVector::cartan(1)));
    CHECK(bracket(V(X(1, -1, -1)), V(X(1, -1, -1))).is_zero());
    // odd-odd symmetry: [f1, e1] = +H1 = sigma_{-a1} H_{-a1}
    CHECK(bracket(V(X(-1, 1, 1)), V(X(1, -1, -1))) == V(BasisVector::cartan(1)));
    CHECK(cartan_vector(ScalarA(-1) * coroot(Root{{-1, 1, 1}})) == V(BasisVector::cartan(1)));
}

TEST_CASE("axiom verifier examples")
{
    const auto& t = structure_table();
    Root a1{{1, -1, -1}}, g{{1, 1, 1}};
    CHECK(t.entry(BasisVector::root_vector(a1), BasisVector::root_vector(g))[X(2, 0, 0)] == one_plus_a());
    CHECK(pairing(g.eps, coroot(a1)) == one_plus_a());
    CHECK(t.entry(X(0, 2, 0), X(1, -1, 1))[X(1, 1, 1)] == -1);
    auto rep = verify_chevalley_axioms(t);
    CHECK(rep.ok());
    CHECK(rep.entries_checked == 289);
}

TEST_CASE("super-antisymmetry, Jacobi, grading and integrality")
{
    const auto& t = structure_table();
    for (const auto& x : BasisVector::all())
        for (const auto& y : BasisVector::all()) {
            int sign = (parity_bit(x) && parity_bit(y)) ? -1 : 1;
            CHECK((t.entry(x, y) + ScalarA(sign) * t.entry(y, x)).is_zero());
            for (const auto& c : t.entry(x, y).c) CHECK(in_Z_bracket_a(c));
            Weight w = x.weight() + y.weight();
            for (const auto& z : t.entry(x, y).support()) CHECK(z.weight() == w);
        }
    auto j = check_super_jacobi(t);
    CHECK(j.triples_checked == 4913);
    CHECK(j.ok());
}

TEST_CASE("adjoint matrices")
{
    auto h1 = adjoint_matrix(BasisVector::cartan(1));
    for (const auto& b : BasisVector::all())
        for (const auto& c : BasisVector::all())
            CHECK(h1(b.index(), c.index()) == (b == c ? pairing(b.weight(), CartanElement::basis(1)) : ScalarA()));
    CHECK(h1(X(0, 2, 0).index(), X(0, 2, 0).index()) == 1);
    for (const auto& r : all_roots()) {
        auto m = adjoint_matrix(BasisVector::root_vector(r));
        auto p = m * m * m * m;
        CHECK(p.is_zero_matrix());
        for (const auto& e : m.entries()) CHECK(in_Z_bracket_a(e));
    }
}

TEST_CASE("weight decomposition")
{
    auto w = weight_decomposition();
    CHECK(w.size() == 15);
    CHECK(w[Weight{0, 0, 0}].size() == 3);
    CHECK(w[Weight{0, 2, 0}] == std::vector<BasisVector>{X(0, 2, 0)});
    for (const auto& [mu, vs] : w) {
        ScalarA p = pairing(mu, coroot(Root{{0, 2, 0}}));
        CHECK(p.is_constant());
        CHECK(abs(p.constant_value()) <= 2);
        for (int i = 1; i <= 3; ++i) CHECK(in_Z_bracket_a(pairing(mu, CartanElement::basis(i))));
    }
}

TEST_CASE("sl2 triples and the even part")
{
    CHECK(check_sl2_triples().ok());
    CHECK(bracket(presentation_vector("h2"), presentation_vector("e2")) == ScalarA(2) * presentation_vector("e2"));
    CHECK(bracket(presentation_vector("e3"), presentation_vector("f3")) == presentation_vector("h3"));
    SuperVector e = one_plus_a().inverse() * presentation_vector("e1123'");
    SuperVector f = ScalarA(-1) * one_plus_a().inverse() * presentation_vector("f3211'");
    CHECK(bracket(e, f) == V(BasisVector::cartan(2)));
    std::vector<BasisVector> even;
    for (const auto& b : BasisVector::all())
        if (b.parity() == Parity::Even) even.push_back(b);
    CHECK(even.size() == kEvenDim);
    for (const auto& x : even)
        for (const auto& y : even)
            for (const auto& z : bracket(V(x), V(y)).support()) CHECK(z.parity() == Parity::Even);
    std::vector<Root> ev = {Root{{2, 0, 0}}, Root{{0, 2, 0}}, Root{{0, 0, 2}}};
    for (const auto& r : ev)
        for (const auto& s : ev) {
            if (r == s) continue;
            for (int sr : {1, -1})
                for (int ss : {1, -1})
                    CHECK(bracket(V(BasisVector::root_vector(Root{sr * r.eps})), V(BasisVector::root_vector(Root{ss * s.eps}))).is_zero());
        }
}

TEST_CASE("rendering of vectors")
{
    CHECK(render(V(BasisVector::cartan(1))) == "H1");
    CHECK(render(-V(BasisVector::cartan(1)) + one_plus_a() * V(BasisVector::cartan(2))) == "-H1 + (a + 1)*H2");
    CHECK(basis_name(X(-1, 1, 1)) == "F(a1)");
    CHECK(basis_name(X(1, 1, 1)) == "E(a1+a2+a3)");
}
