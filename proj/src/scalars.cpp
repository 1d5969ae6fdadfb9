#include "superchevalley/scalars.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superchevalley {

Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial_integer(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// ---------------------------------------------------------------- PolyA

PolyA::PolyA(long c) : coeffs_{Rational(c)} { trim(); }
PolyA::PolyA(const Rational& c) : coeffs_{c} { trim(); }
PolyA::PolyA(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyA PolyA::a() { return PolyA(std::vector<Rational>{0, 1}); }
PolyA PolyA::one_plus_a() { return PolyA(std::vector<Rational>{1, 1}); }

void PolyA::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyA::coeff(int n) const
{
    if (n < 0 || n >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[n];
}

Rational PolyA::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

PolyA PolyA::compose(const PolyA& inner) const
{
    PolyA r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= inner;
        r += PolyA(*it);
    }
    return r;
}

PolyA PolyA::operator-() const
{
    PolyA r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyA& PolyA::operator+=(const PolyA& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyA& PolyA::operator-=(const PolyA& o)
{
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyA& PolyA::operator*=(const PolyA& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

PolyA& PolyA::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolyA PolyA::divide_one_plus_a() const
{
    if (is_zero()) return {};
    // synthetic division by (a - (-1))
    int n = degree();
    std::vector<Rational> q(n);
    Rational carry = 0;
    for (int i = n; i >= 1; --i) {
        carry = coeffs_[i] - carry;
        q[i - 1] = carry;
    }
    if (coeffs_[0] != carry) throw std::logic_error("polynomial not divisible by (1+a)");
    return PolyA(std::move(q));
}

// ---------------------------------------------------------------- ScalarA

ScalarA::ScalarA(PolyA numerator, int denom_power) : num_(std::move(numerator)), den_(denom_power)
{
    if (den_ < 0) {
        PolyA m = 1;
        for (int i = 0; i < -den_; ++i) m *= PolyA::one_plus_a();
        num_ *= m;
        den_ = 0;
    }
    canonicalize();
}

ScalarA ScalarA::a() { return ScalarA(PolyA::a()); }

void ScalarA::canonicalize()
{
    if (num_.is_zero()) {
        den_ = 0;
        return;
    }
    while (den_ > 0 && num_(Rational(-1)) == 0) {
        num_ = num_.divide_one_plus_a();
        --den_;
    }
}

bool ScalarA::is_one() const { return den_ == 0 && num_.degree() == 0 && num_.coeff(0) == 1; }

Rational ScalarA::constant_value() const
{
    if (!is_constant()) throw std::invalid_argument("scalar is not a rational constant: " + str());
    return num_.coeff(0);
}

namespace {

// Splits p = (1+a)^m r with r(-1) != 0.
int strip_one_plus_a(PolyA& p)
{
    int m = 0;
    while (!p.is_zero() && p(Rational(-1)) == 0) {
        p = p.divide_one_plus_a();
        ++m;
    }
    return m;
}

}  // namespace

bool ScalarA::invertible() const
{
    if (num_.is_zero()) return false;
    PolyA r = num_;
    strip_one_plus_a(r);
    return r.is_constant();
}

ScalarA ScalarA::inverse() const
{
    PolyA r = num_;
    int m = r.is_zero() ? 0 : strip_one_plus_a(r);
    if (r.is_zero() || !r.is_constant()) throw std::domain_error("not invertible over ScalarA: " + str());
    PolyA n = PolyA(Rational(1) / r.coeff(0));
    for (int i = 0; i < den_; ++i) n *= PolyA::one_plus_a();
    return ScalarA(n, m);
}

ScalarA ScalarA::pow(int e) const
{
    if (e < 0) return inverse().pow(-e);
    ScalarA r = 1, b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

ScalarA ScalarA::operator-() const
{
    ScalarA r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarA& ScalarA::operator+=(const ScalarA& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_ > o.den_) {
        PolyA t = o.num_;
        for (int i = o.den_; i < den_; ++i) t *= PolyA::one_plus_a();
        num_ += t;
    } else {
        for (int i = den_; i < o.den_; ++i) num_ *= PolyA::one_plus_a();
        num_ += o.num_;
        den_ = o.den_;
    }
    canonicalize();
    return *this;
}

ScalarA& ScalarA::operator-=(const ScalarA& o) { return *this += -o; }

ScalarA& ScalarA::operator*=(const ScalarA& o)
{
    num_ *= o.num_;
    den_ += o.den_;
    canonicalize();
    return *this;
}

std::string ScalarA::str() const { return render(*this); }

// ---------------------------------------------------------------- binomials

PolyA BinomialBasisExpansion::expand() const
{
    PolyA r;
    for (size_t n = 0; n < coeffs.size(); ++n) {
        PolyA t = binom_poly(static_cast<int>(n));
        t *= coeffs[n];
        r += t;
    }
    return r;
}

PolyA binom_poly(int n)
{
    if (n < 0) throw std::invalid_argument("binom_poly: negative degree");
    PolyA r = 1;
    for (int j = 0; j < n; ++j) r *= PolyA(std::vector<Rational>{Rational(-j), 1});
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    r *= Rational(Integer(1), f);
    return r;
}

Rational binomial(const Rational& y, int n)
{
    if (n < 0) return 0;
    Rational r = 1;
    for (int j = 0; j < n; ++j) r = r * (y - j) / (j + 1);
    return r;
}

PolyA binomial(const PolyA& y, int n)
{
    if (n < 0) return {};
    PolyA r = 1;
    for (int j = 0; j < n; ++j) {
        r *= y - PolyA(j);
        r *= Rational(1, j + 1);
    }
    return r;
}

ScalarA binomial(const ScalarA& y, int n)
{
    if (n < 0) return 0;
    if (y.is_constant()) return ScalarA(binomial(y.constant_value(), n));
    ScalarA r = 1;
    for (int j = 0; j < n; ++j) r = r * (y - ScalarA(j)) * ScalarA(make_rational(1, j + 1));
    return r;
}

BinomialBasisExpansion to_binomial_basis(const PolyA& p)
{
    BinomialBasisExpansion e;
    if (p.is_zero()) return e;
    int d = p.degree();
    std::vector<Rational> vals(d + 1);
    for (int i = 0; i <= d; ++i) vals[i] = p(Rational(i));
    for (int n = 0; n <= d; ++n) {
        e.coeffs.push_back(vals[0]);
        for (int i = 0; i + 1 < static_cast<int>(vals.size()); ++i) vals[i] = vals[i + 1] - vals[i];
        vals.pop_back();
    }
    while (!e.coeffs.empty() && e.coeffs.back() == 0) e.coeffs.pop_back();
    return e;
}

bool in_Za(const ScalarA& s)
{
    if (s.denom_power() != 0) return false;
    auto e = to_binomial_basis(s.numerator());
    return std::all_of(e.coeffs.begin(), e.coeffs.end(), is_integer);
}

bool in_Z_bracket_a(const ScalarA& s)
{
    if (s.denom_power() != 0) return false;
    const auto& c = s.numerator().coeffs();
    return std::all_of(c.begin(), c.end(), is_integer);
}

Rational specialize(const ScalarA& s, const Rational& a0)
{
    if (a0 == 0 || a0 == -1) throw std::domain_error("specialize: a must avoid 0 and -1");
    Rational d = 1;
    for (int i = 0; i < s.denom_power(); ++i) d *= (1 + a0);
    return s.numerator()(a0) / d;
}

// ---------------------------------------------------------------- rendering

std::string render(const PolyA& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int n = p.degree(); n >= 0; --n) {
        Rational c = p.coeff(n);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational m = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (n == 0) {
            os << m.get_str();
            continue;
        }
        if (m != 1) os << m.get_str() << "*";
        os << "a";
        if (n > 1) os << "^" << n;
    }
    return os.str();
}

std::string render(const ScalarA& s)
{
    if (s.denom_power() == 0) return render(s.numerator());
    std::string num = render(s.numerator());
    int terms = 0;
    for (const auto& c : s.numerator().coeffs())
        if (c != 0) ++terms;
    if (terms > 1) num = "(" + num + ")";
    std::string den = "(1+a)";
    if (s.denom_power() > 1) den += "^" + std::to_string(s.denom_power());
    return num + "/" + den;
}

// ---------------------------------------------------------------- series

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    TruncatedSeries r;
    r.truncation = std::min(truncation, o.truncation);
    r.coeffs.assign(r.truncation + 1, ScalarA());
    for (int i = 0; i <= r.truncation && i < static_cast<int>(coeffs.size()); ++i)
        for (int j = 0; i + j <= r.truncation && j < static_cast<int>(o.coeffs.size()); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    return r;
}

TruncatedSeries truncated_power_series_power(const PolyA& exponent, int truncation)
{
    if (truncation < 0) throw std::invalid_argument("truncation must be nonnegative");
    TruncatedSeries s;
    s.truncation = truncation;
    for (int n = 0; n <= truncation; ++n) s.coeffs.push_back(ScalarA(binomial(exponent, n)));
    return s;
}

namespace {

using Bivariate = std::vector<std::vector<ScalarA>>;

Bivariate bivariate_zero(int N) { return Bivariate(N + 1, std::vector<ScalarA>(N + 1)); }

Bivariate bivariate_mul(const Bivariate& x, const Bivariate& y, int N)
{
    Bivariate r = bivariate_zero(N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            if (x[i][j].is_zero()) continue;
            for (int k = 0; i + j + k <= N; ++k)
                for (int l = 0; i + j + k + l <= N; ++l)
                    if (!y[k][l].is_zero()) r[i + k][j + l] += x[i][j] * y[k][l];
        }
    return r;
}

}  // namespace

bool check_grouplike_series(const std::vector<ScalarA>& coeffs, int N)
{
    if (N < 1) throw std::invalid_argument("group-like check needs truncation >= 1");
    auto c = [&](int n) { return n < static_cast<int>(coeffs.size()) ? coeffs[n] : ScalarA(); };

    // w = u + v + uv
    Bivariate w = bivariate_zero(N);
    w[1][0] = 1;
    w[0][1] = 1;
    if (N >= 2) w[1][1] = 1;

    Bivariate lhs = bivariate_zero(N), wn = bivariate_zero(N);
    wn[0][0] = 1;
    for (int n = 0; n <= N; ++n) {
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j)
                if (!wn[i][j].is_zero()) lhs[i][j] += c(n) * wn[i][j];
        wn = bivariate_mul(wn, w, N);
    }

    Bivariate rhs = bivariate_zero(N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) rhs[i][j] = c(i) * c(j);
    return lhs == rhs;
}

bool check_grouplike(const PolyA& exponent, int N)
{
    return check_grouplike_series(truncated_power_series_power(exponent, N).coeffs, N);
}

}  // namespace superchevalley
