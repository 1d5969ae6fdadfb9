#include "superchevalley/roots.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace superchevalley;

namespace {

Root R(int x, int y, int z) { return Root{{x, y, z}}; }
ScalarA A() { return ScalarA::a(); }
ScalarA one_plus_a() { return ScalarA(PolyA::one_plus_a()); }
CartanElement H(ScalarA x, ScalarA y, ScalarA z) { return CartanElement{{x, y, z}}; }

const Root a1 = R(1, -1, -1), a2 = R(0, 2, 0), a3 = R(0, 0, 2);

}  // namespace

TEST_CASE("all_roots partition")
{
    const auto& roots = all_roots();
    CHECK(roots.size() == 14);
    CHECK(odd_positive_roots().size() == 4);
    CHECK(odd_negative_roots().size() == 4);
    CHECK(std::count(odd_positive_roots().begin(), odd_positive_roots().end(), R(1, 1, 1)) == 1);
    std::set<Root> even(even_positive_roots().begin(), even_positive_roots().end());
    CHECK(even == std::set<Root>{R(2, 0, 0), R(0, 2, 0), R(0, 0, 2)});
    for (const auto& r : roots) {
        CHECK(is_root((-r).eps));
        CHECK(r.is_even() == (std::abs(r.eps[0]) == 2 || std::abs(r.eps[1]) == 2 || std::abs(r.eps[2]) == 2));
    }
    std::vector<Root> positive;
    for (const auto& r : roots)
        if (r.is_positive()) positive.push_back(r);
    CHECK(positive.size() == 7);
    for (const auto& r : positive) {
        auto m = simple_root_coordinates(r.eps);
        for (const auto& c : m) CHECK(c >= 0);
    }
}

TEST_CASE("bilinear form examples")
{
    CHECK(bilinear_form(a1.eps, a1.eps) == 0);
    CHECK(bilinear_form(a2.eps, a2.eps) == 2);
    CHECK(bilinear_form(a2.eps, a3.eps) == 0);
    for (const auto& g : odd_positive_roots()) CHECK(bilinear_form(g.eps, g.eps) == 0);
    for (const auto& x : even_positive_roots())
        for (const auto& y : even_positive_roots())
            if (!(x == y)) CHECK(bilinear_form(x.eps, y.eps) == 0);
}

TEST_CASE("coroot examples")
{
    CHECK(coroot(R(2, 0, 0)) == H(0, 1, 0));
    CHECK(coroot(R(0, 2, 0)) == H(2, -one_plus_a(), -A()));
    CHECK(coroot(a1) == H(1, 0, 0));
    CHECK(coroot(R(0, 0, 2)) == H(0, 0, 1));
    CHECK_THROWS(coroot(R(1, 0, 0)));
    for (const auto& r : all_roots()) CHECK(coroot(-r) == -coroot(r));
}

TEST_CASE("pairing examples")
{
    CHECK(pairing(a2.eps, h_generator(1)) == 1);
    CHECK(pairing((a1.eps + a2.eps + a3.eps), CartanElement::basis(1)) == one_plus_a());
    CHECK(pairing(a2.eps, coroot(a2)) == 2);
    for (const auto& r : all_roots())
        if (r.is_even()) CHECK(pairing(r.eps, coroot(r)) == 2);
        else CHECK(pairing(r.eps, coroot(r)) == 0);
}

TEST_CASE("root string examples")
{
    auto s = root_string(to_root(a1.eps + a3.eps), a2);
    CHECK(s.r == 0);
    CHECK(s.q == 1);
    s = root_string(a2, a2);
    CHECK(s.r == 2);
    CHECK(s.q == 0);
    s = root_string(a2, a3);
    CHECK(s.r == 0);
    CHECK(s.q == 0);
}

TEST_CASE("property: rationality and integrality of coroots")
{
    for (const auto& b : all_roots())
        for (const auto& a : all_roots()) {
            if (!a.is_even()) continue;
            ScalarA p = pairing(b.eps, coroot(a));
            CHECK(p.is_constant());
            CHECK(is_integer(p.constant_value()));
        }
    for (const auto& a : all_roots()) {
        CHECK(coroot(a).in_h_Z_bracket_a());
        if (a.is_even()) CHECK(coroot(a).in_h0_Z());
        if (!is_zero(bilinear_form(a.eps, a.eps))) CHECK(pairing(a.eps, coroot(a)) == 2);
    }
}

TEST_CASE("root names")
{
    CHECK(root_name(a1.eps) == "a1");
    CHECK(root_name(R(1, 1, 1).eps) == "a1+a2+a3");
    CHECK(root_name(R(2, 0, 0).eps) == "2a1+a2+a3");
    CHECK(root_name((-a1).eps) == "-a1");
}
