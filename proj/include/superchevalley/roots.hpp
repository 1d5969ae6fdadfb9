#pragma once

#include "superchevalley/scalars.hpp"

#include <array>
#include <string>
#include <vector>

namespace superchevalley {

enum class Parity { Even = 0, Odd = 1 };

inline int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

// Integer combination c1 e1 + c2 e2 + c3 e3 of the orthogonal basis.
using Weight = std::array<int, 3>;

Weight operator+(const Weight& x, const Weight& y);
Weight operator-(const Weight& x, const Weight& y);
Weight operator-(const Weight& x);
Weight operator*(int k, const Weight& x);

struct Root {
    Weight eps{};

    Parity parity() const;
    bool is_even() const { return parity() == Parity::Even; }
    bool is_odd() const { return parity() == Parity::Odd; }
    bool is_positive() const;
    Root operator-() const { return Root{-eps}; }
    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
};

bool is_root(const Weight& w);
Root to_root(const Weight& w);

const std::vector<Root>& all_roots();
const std::vector<Root>& odd_positive_roots();
const std::vector<Root>& odd_negative_roots();
const std::vector<Root>& even_positive_roots();
const std::vector<Root>& even_negative_roots();
int root_index(const Root& r);
const Root& simple_root(int i);  // i in {1,2,3}

// Coefficients m with w = m1 alpha1 + m2 alpha2 + m3 alpha3.
std::array<Rational, 3> simple_root_coordinates(const Weight& w);

struct CartanElement {
    std::array<ScalarA, 3> coords{};

    static CartanElement basis(int i);  // i in {1,2,3}

    CartanElement operator-() const;
    CartanElement& operator+=(const CartanElement& o);
    CartanElement& operator-=(const CartanElement& o);
    friend CartanElement operator+(CartanElement x, const CartanElement& y) { return x += y; }
    friend CartanElement operator-(CartanElement x, const CartanElement& y) { return x -= y; }
    friend CartanElement operator*(const ScalarA& s, CartanElement x)
    {
        for (auto& c : x.coords) c *= s;
        return x;
    }
    bool operator==(const CartanElement& o) const { return coords == o.coords; }

    bool is_zero() const;
    bool in_h_Z_bracket_a() const;
    bool in_h0_Z() const;
    // Integer coordinates over the coroots of 2e1, 2e2, 2e3; requires in_h0_Z.
    std::array<long, 3> even_coroot_coordinates() const;
};

// Change of basis from the generators h1, h2, h3 of the presentation.
CartanElement h_generator(int i);

ScalarA epsilon_norm(int i);
ScalarA bilinear_form(const Weight& x, const Weight& y);
CartanElement coroot(const Root& r);
ScalarA pairing(const Weight& w, const CartanElement& h);

struct RootString {
    Root base;
    Root direction;
    int r = 0;
    int q = 0;
};

RootString root_string(const Root& base, const Root& direction);

std::string root_name(const Weight& w);

}  // namespace superchevalley
