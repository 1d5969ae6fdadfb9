#pragma once

#include "superchevalley/scalars.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace superchevalley {

constexpr int kDefaultOddCap = 8;
constexpr int kMaxDuals = 4;

// Finite supercommutative algebra: Grassmann algebra on n odd generators, optionally with
// all odd products set to zero, and with square-zero even generators (duals) adjoined.
struct Carrier {
    enum class Structure { Full, SquareZeroOdd };

    int odd = 0;
    int duals = 0;
    Structure structure = Structure::Full;

    static Carrier scalars() { return {}; }
    static Carrier grassmann(int n, int cap = kDefaultOddCap);
    static Carrier square_zero_odd(int n, int cap = kDefaultOddCap);
    static Carrier dual_number() { return {0, 1, Structure::Full}; }
    static Carrier dual_odd(int n, int duals, int cap = kDefaultOddCap);

    bool operator==(const Carrier&) const = default;
    std::string describe() const;
};

// Monomial bitmask: bits 0..15 odd generators, bits 16.. duals.
using CarrierMonomial = std::uint32_t;
constexpr int kDualShift = 16;

class CarrierElement {
public:
    CarrierElement() = default;
    explicit CarrierElement(const Carrier& c) : carrier_(c) {}
    CarrierElement(const Carrier& c, const ScalarA& s);

    static CarrierElement odd_generator(const Carrier& c, int i);   // i in 1..odd
    static CarrierElement dual_generator(const Carrier& c, int i);  // i in 1..duals

    const Carrier& carrier() const { return carrier_; }
    const std::vector<std::pair<CarrierMonomial, ScalarA>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_even() const;
    bool is_odd() const;
    bool is_scalar() const;
    ScalarA constant_term() const;
    CarrierElement nilpotent_part() const;

    CarrierElement operator-() const;
    CarrierElement& operator+=(const CarrierElement& o);
    CarrierElement& operator-=(const CarrierElement& o);
    friend CarrierElement operator+(CarrierElement x, const CarrierElement& y) { return x += y; }
    friend CarrierElement operator-(CarrierElement x, const CarrierElement& y) { return x -= y; }
    friend CarrierElement operator*(const CarrierElement& x, const CarrierElement& y);
    friend CarrierElement operator*(const ScalarA& s, const CarrierElement& x);
    CarrierElement& operator*=(const CarrierElement& o) { return *this = *this * o; }
    bool operator==(const CarrierElement& o) const;

    CarrierElement pow(int n) const;

private:
    void add_term(CarrierMonomial m, const ScalarA& c);
    Carrier carrier_;
    std::vector<std::pair<CarrierMonomial, ScalarA>> terms_;  // sorted by monomial
};

inline bool is_zero(const CarrierElement& x) { return x.is_zero(); }

int monomial_odd_degree(CarrierMonomial m);
CarrierElement mul(const CarrierElement& x, const CarrierElement& y);
CarrierElement invert_unit(const CarrierElement& t);
bool in_Pa(const CarrierElement& t);
CarrierElement power_za(const CarrierElement& t, const ScalarA& z);
CarrierElement integer_power(const CarrierElement& t, long n);

// Split along the last dual generator e: x = base + e * tail.
struct DualSplit {
    CarrierElement base;
    CarrierElement tail;
};
Carrier drop_last_dual(const Carrier& c);
DualSplit dual_number_split(const CarrierElement& x);
CarrierElement dual_embed(const CarrierElement& y, const Carrier& extended);
CarrierElement dual_project(const CarrierElement& x);

std::string render(const CarrierElement& x, bool theta_names = false);

}  // namespace superchevalley
