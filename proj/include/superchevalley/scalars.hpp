#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superchevalley {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
bool is_integer(const Rational& q);
Integer binomial_integer(long n, long k);

// Polynomial in the parameter a with rational coefficients; coeffs[n] multiplies a^n.
class PolyA {
public:
    PolyA() = default;
    PolyA(long c);
    PolyA(const Rational& c);
    explicit PolyA(std::vector<Rational> coeffs);

    static PolyA a();
    static PolyA one_plus_a();

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int n) const;
    Rational constant_term() const { return coeff(0); }

    Rational operator()(const Rational& x) const;
    PolyA compose(const PolyA& inner) const;

    PolyA operator-() const;
    PolyA& operator+=(const PolyA& o);
    PolyA& operator-=(const PolyA& o);
    PolyA& operator*=(const PolyA& o);
    PolyA& operator*=(const Rational& c);

    friend PolyA operator+(PolyA x, const PolyA& y) { return x += y; }
    friend PolyA operator-(PolyA x, const PolyA& y) { return x -= y; }
    friend PolyA operator*(PolyA x, const PolyA& y) { return x *= y; }
    friend bool operator==(const PolyA& x, const PolyA& y) { return x.coeffs_ == y.coeffs_; }

    // Exact division by (1+a); requires p(-1) = 0.
    PolyA divide_one_plus_a() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Element numerator / (1+a)^k of Q[a][(1+a)^-1], kept with (1+a) not dividing the numerator.
class ScalarA {
public:
    ScalarA() = default;
    ScalarA(long c) : num_(c) {}
    ScalarA(const Rational& c) : num_(c) {}
    ScalarA(const PolyA& p) : num_(p) {}
    ScalarA(PolyA numerator, int denom_power);

    static ScalarA a();

    const PolyA& numerator() const { return num_; }
    int denom_power() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return den_ == 0 && num_.is_constant(); }
    bool is_one() const;
    Rational constant_value() const;

    // Units are c (1+a)^k with c a nonzero rational and k any integer.
    bool invertible() const;
    ScalarA inverse() const;
    ScalarA pow(int e) const;

    ScalarA operator-() const;
    ScalarA& operator+=(const ScalarA& o);
    ScalarA& operator-=(const ScalarA& o);
    ScalarA& operator*=(const ScalarA& o);

    friend ScalarA operator+(ScalarA x, const ScalarA& y) { return x += y; }
    friend ScalarA operator-(ScalarA x, const ScalarA& y) { return x -= y; }
    friend ScalarA operator*(ScalarA x, const ScalarA& y) { return x *= y; }
    friend bool operator==(const ScalarA& x, const ScalarA& y)
    {
        return x.den_ == y.den_ && x.num_ == y.num_;
    }

    std::string str() const;

private:
    void canonicalize();
    PolyA num_;
    int den_ = 0;
};

// Coefficients c_n of p = sum c_n binom(a, n).
struct BinomialBasisExpansion {
    std::vector<Rational> coeffs;
    PolyA expand() const;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ScalarA& s) { return s.is_zero(); }

PolyA binom_poly(int n);
Rational binomial(const Rational& y, int n);
PolyA binomial(const PolyA& y, int n);
ScalarA binomial(const ScalarA& y, int n);

BinomialBasisExpansion to_binomial_basis(const PolyA& p);
bool in_Za(const ScalarA& s);
bool in_Z_bracket_a(const ScalarA& s);
Rational specialize(const ScalarA& s, const Rational& a0);

std::string render(const PolyA& p);
std::string render(const ScalarA& s);

// Truncated power series in one variable u over Q(a).
struct TruncatedSeries {
    std::vector<ScalarA> coeffs;
    int truncation = 0;

    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const = default;
};

TruncatedSeries truncated_power_series_power(const PolyA& exponent, int truncation);
bool check_grouplike_series(const std::vector<ScalarA>& coeffs, int truncation);
bool check_grouplike(const PolyA& exponent, int truncation);

}  // namespace superchevalley
