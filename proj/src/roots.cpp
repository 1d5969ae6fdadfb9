#include "superchevalley/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace superchevalley {

Weight operator+(const Weight& x, const Weight& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Weight operator-(const Weight& x, const Weight& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
Weight operator-(const Weight& x) { return {-x[0], -x[1], -x[2]}; }
Weight operator*(int k, const Weight& x) { return {k * x[0], k * x[1], k * x[2]}; }

bool is_root(const Weight& w)
{
    int twos = 0, zeros = 0, ones = 0;
    for (int c : w) {
        if (std::abs(c) == 2) ++twos;
        else if (c == 0) ++zeros;
        else if (std::abs(c) == 1) ++ones;
    }
    return (twos == 1 && zeros == 2) || ones == 3;
}

Root to_root(const Weight& w)
{
    if (!is_root(w)) throw std::invalid_argument("not a root: " + root_name(w));
    return Root{w};
}

Parity Root::parity() const
{
    for (int c : eps)
        if (std::abs(c) == 2) return Parity::Even;
    return Parity::Odd;
}

std::array<Rational, 3> simple_root_coordinates(const Weight& w)
{
    Rational m1 = w[0];
    Rational m2 = Rational(w[0] + w[1], 2);
    Rational m3 = Rational(w[0] + w[2], 2);
    m2.canonicalize();
    m3.canonicalize();
    return {m1, m2, m3};
}

bool Root::is_positive() const
{
    auto m = simple_root_coordinates(eps);
    return m[0] >= 0 && m[1] >= 0 && m[2] >= 0;
}

namespace {

struct RootTables {
    std::vector<Root> all, even_pos, even_neg, odd_pos, odd_neg;

    RootTables()
    {
        std::vector<Root> roots;
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y)
                for (int z = -2; z <= 2; ++z)
                    if (is_root({x, y, z})) roots.push_back(Root{{x, y, z}});
        std::sort(roots.begin(), roots.end());
        for (const auto& r : roots) {
            if (r.is_even()) (r.is_positive() ? even_pos : even_neg).push_back(r);
            else (r.is_positive() ? odd_pos : odd_neg).push_back(r);
        }
        for (auto* block : {&even_pos, &even_neg, &odd_pos, &odd_neg})
            all.insert(all.end(), block->begin(), block->end());
    }
};

const RootTables& tables()
{
    static const RootTables t;
    return t;
}

}  // namespace

const std::vector<Root>& all_roots() { return tables().all; }
const std::vector<Root>& odd_positive_roots() { return tables().odd_pos; }
const std::vector<Root>& odd_negative_roots() { return tables().odd_neg; }
const std::vector<Root>& even_positive_roots() { return tables().even_pos; }
const std::vector<Root>& even_negative_roots() { return tables().even_neg; }

int root_index(const Root& r)
{
    const auto& all = all_roots();
    auto it = std::find(all.begin(), all.end(), r);
    if (it == all.end()) throw std::invalid_argument("not a root: " + root_name(r.eps));
    return static_cast<int>(it - all.begin());
}

const Root& simple_root(int i)
{
    static const Root simple[3] = {Root{{1, -1, -1}}, Root{{0, 2, 0}}, Root{{0, 0, 2}}};
    if (i < 1 || i > 3) throw std::out_of_range("simple root index");
    return simple[i - 1];
}

// ---------------------------------------------------------------- Cartan

CartanElement CartanElement::basis(int i)
{
    if (i < 1 || i > 3) throw std::out_of_range("Cartan basis index");
    CartanElement h;
    h.coords[i - 1] = 1;
    return h;
}

CartanElement CartanElement::operator-() const
{
    CartanElement r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

CartanElement& CartanElement::operator+=(const CartanElement& o)
{
    for (int i = 0; i < 3; ++i) coords[i] += o.coords[i];
    return *this;
}

CartanElement& CartanElement::operator-=(const CartanElement& o)
{
    for (int i = 0; i < 3; ++i) coords[i] -= o.coords[i];
    return *this;
}

bool CartanElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const ScalarA& c) { return c.is_zero(); });
}

bool CartanElement::in_h_Z_bracket_a() const
{
    return std::all_of(coords.begin(), coords.end(), in_Z_bracket_a);
}

namespace {

bool try_even_coroot_coordinates(const CartanElement& h, std::array<long, 3>& out)
{
    // H = z1 H[2e1] + z2 H[2e2] + z3 H[2e3] with H[2e1] = H2, H[2e2] = 2H1 - (1+a)H2 - aH3, H[2e3] = H3
    const auto& c = h.coords;
    ScalarA z2 = c[0] * ScalarA(make_rational(1, 2));
    ScalarA z1 = c[1] + ScalarA(PolyA::one_plus_a()) * z2;
    ScalarA z3 = c[2] + ScalarA::a() * z2;
    std::array<ScalarA, 3> z{z1, z2, z3};
    for (int i = 0; i < 3; ++i) {
        if (!z[i].is_constant()) return false;
        Rational q = z[i].constant_value();
        if (!is_integer(q)) return false;
        out[i] = q.get_num().get_si();
    }
    return true;
}

}  // namespace

bool CartanElement::in_h0_Z() const
{
    std::array<long, 3> z{};
    return try_even_coroot_coordinates(*this, z);
}

std::array<long, 3> CartanElement::even_coroot_coordinates() const
{
    std::array<long, 3> z{};
    if (!try_even_coroot_coordinates(*this, z))
        throw std::invalid_argument("Cartan element is not an integer combination of even coroots");
    return z;
}

CartanElement h_generator(int i)
{
    if (i == 1) return CartanElement::basis(1);
    if (i == 3) return CartanElement::basis(3);
    if (i == 2) {
        CartanElement h;
        h.coords = {ScalarA(2), -ScalarA(PolyA::one_plus_a()), -ScalarA::a()};
        return h;
    }
    throw std::out_of_range("generator index");
}

ScalarA epsilon_norm(int i)
{
    switch (i) {
    case 1: return ScalarA(-PolyA::one_plus_a()) * ScalarA(make_rational(1, 2));
    case 2: return ScalarA(make_rational(1, 2));
    case 3: return ScalarA::a() * ScalarA(make_rational(1, 2));
    }
    throw std::out_of_range("epsilon index");
}

ScalarA bilinear_form(const Weight& x, const Weight& y)
{
    ScalarA r;
    for (int i = 0; i < 3; ++i)
        if (x[i] != 0 && y[i] != 0) r += ScalarA(static_cast<long>(x[i] * y[i])) * epsilon_norm(i + 1);
    return r;
}

namespace {

// Values e_j(H_i) for the Chevalley Cartan basis.
ScalarA eps_on_basis(int i, int j)
{
    static const ScalarA half = ScalarA(make_rational(1, 2));
    if (i == 1) {
        if (j == 1) return ScalarA(PolyA::one_plus_a()) * half;
        if (j == 2) return half;
        return ScalarA::a() * half;
    }
    if (i == 2) return j == 1 ? ScalarA(1) : ScalarA(0);
    return j == 3 ? ScalarA(1) : ScalarA(0);
}

CartanElement cartan_of(long z1, const PolyA& z2, const PolyA& z3)
{
    CartanElement h;
    h.coords = {ScalarA(z1), ScalarA(z2), ScalarA(z3)};
    return h;
}

}  // namespace

CartanElement coroot(const Root& r)
{
    if (!is_root(r.eps)) throw std::invalid_argument("coroot of a non-root");
    if (!r.is_positive()) return -coroot(-r);
    const PolyA a = PolyA::a(), one_a = PolyA::one_plus_a();
    const Weight& e = r.eps;
    if (e == Weight{2, 0, 0}) return cartan_of(0, 1, 0);
    if (e == Weight{0, 2, 0}) return cartan_of(2, -one_a, -a);
    if (e == Weight{0, 0, 2}) return cartan_of(0, 0, 1);
    if (e == Weight{1, -1, -1}) return cartan_of(1, 0, 0);
    if (e == Weight{1, 1, -1}) return cartan_of(-1, one_a, a);
    if (e == Weight{1, -1, 1}) return cartan_of(1, 0, -a);
    if (e == Weight{1, 1, 1}) return cartan_of(-1, one_a, 0);
    throw std::logic_error("unhandled positive root");
}

ScalarA pairing(const Weight& w, const CartanElement& h)
{
    ScalarA r;
    for (int i = 1; i <= 3; ++i) {
        if (h.coords[i - 1].is_zero()) continue;
        ScalarA v;
        for (int j = 1; j <= 3; ++j)
            if (w[j - 1] != 0) v += ScalarA(static_cast<long>(w[j - 1])) * eps_on_basis(i, j);
        r += h.coords[i - 1] * v;
    }
    return r;
}

RootString root_string(const Root& base, const Root& direction)
{
    auto on_string = [](const Weight& w) { return w == Weight{0, 0, 0} || is_root(w); };
    RootString s{base, direction, 0, 0};
    while (on_string(base.eps - (s.r + 1) * direction.eps)) ++s.r;
    while (on_string(base.eps + (s.q + 1) * direction.eps)) ++s.q;
    return s;
}

std::string root_name(const Weight& w)
{
    auto m = simple_root_coordinates(w);
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (m[i] == 0) continue;
        Rational c = m[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (neg) out += "-";
        else if (!out.empty()) out += "+";
        if (c != 1) out += c.get_str();
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace superchevalley
