#include "superchevalley/carriers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superchevalley {

namespace {

constexpr CarrierMonomial kOddMask = (1u << kDualShift) - 1;

void check_odd_count(int n, int cap)
{
    if (n < 0) throw std::invalid_argument("negative number of odd generators");
    if (n > cap) throw std::invalid_argument("carrier exceeds the odd generator cap of " + std::to_string(cap));
    if (n > kDualShift) throw std::invalid_argument("too many odd generators");
}

}  // namespace

Carrier Carrier::grassmann(int n, int cap)
{
    check_odd_count(n, cap);
    return {n, 0, Structure::Full};
}

Carrier Carrier::square_zero_odd(int n, int cap)
{
    check_odd_count(n, cap);
    return {n, 0, Structure::SquareZeroOdd};
}

Carrier Carrier::dual_odd(int n, int duals, int cap)
{
    check_odd_count(n, cap);
    if (duals < 0 || duals > kMaxDuals) throw std::invalid_argument("unsupported number of dual generators");
    return {n, duals, Structure::Full};
}

std::string Carrier::describe() const
{
    std::ostringstream os;
    os << (structure == Structure::SquareZeroOdd ? "square-zero odd" : "grassmann") << "(" << odd << ")";
    if (duals) os << " with " << duals << " dual" << (duals > 1 ? "s" : "");
    return os.str();
}

int monomial_odd_degree(CarrierMonomial m) { return std::popcount(m & kOddMask); }

// ---------------------------------------------------------------- elements

CarrierElement::CarrierElement(const Carrier& c, const ScalarA& s) : carrier_(c)
{
    if (!s.is_zero()) terms_.push_back({0, s});
}

CarrierElement CarrierElement::odd_generator(const Carrier& c, int i)
{
    if (i < 1 || i > c.odd) throw std::out_of_range("odd generator index " + std::to_string(i));
    CarrierElement x(c);
    x.terms_.push_back({1u << (i - 1), ScalarA(1)});
    return x;
}

CarrierElement CarrierElement::dual_generator(const Carrier& c, int i)
{
    if (i < 1 || i > c.duals) throw std::out_of_range("dual generator index " + std::to_string(i));
    CarrierElement x(c);
    x.terms_.push_back({1u << (kDualShift + i - 1), ScalarA(1)});
    return x;
}

bool CarrierElement::is_even() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return monomial_odd_degree(t.first) % 2 == 0; });
}

bool CarrierElement::is_odd() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return monomial_odd_degree(t.first) % 2 == 1; });
}

bool CarrierElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

ScalarA CarrierElement::constant_term() const
{
    if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
    return ScalarA();
}

CarrierElement CarrierElement::nilpotent_part() const
{
    CarrierElement r = *this;
    if (!r.terms_.empty() && r.terms_[0].first == 0) r.terms_.erase(r.terms_.begin());
    return r;
}

void CarrierElement::add_term(CarrierMonomial m, const ScalarA& c)
{
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const auto& t, CarrierMonomial k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

namespace {

const Carrier& common_carrier(const CarrierElement& x, const CarrierElement& y)
{
    if (x.is_zero()) return y.carrier();
    if (y.is_zero()) return x.carrier();
    if (!(x.carrier() == y.carrier()))
        throw std::invalid_argument("carrier mismatch: " + x.carrier().describe() + " vs " + y.carrier().describe());
    return x.carrier();
}

}  // namespace

CarrierElement CarrierElement::operator-() const
{
    CarrierElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

CarrierElement& CarrierElement::operator+=(const CarrierElement& o)
{
    carrier_ = common_carrier(*this, o);
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CarrierElement& CarrierElement::operator-=(const CarrierElement& o) { return *this += -o; }

CarrierElement operator*(const CarrierElement& x, const CarrierElement& y)
{
    const Carrier& c = common_carrier(x, y);
    CarrierElement r(c);
    if (x.is_zero() || y.is_zero()) return r;
    bool square_zero = c.structure == Carrier::Structure::SquareZeroOdd;
    std::map<CarrierMonomial, ScalarA> acc;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            if (mx & my) continue;
            CarrierMonomial ox = mx & kOddMask, oy = my & kOddMask;
            if (square_zero && std::popcount(ox | oy) >= 2) continue;
            int inversions = 0;
            for (CarrierMonomial rest = oy; rest; rest &= rest - 1) {
                int j = std::countr_zero(rest);
                inversions += std::popcount(ox >> (j + 1));
            }
            ScalarA v = cx * cy;
            acc[mx | my] += (inversions % 2) ? -v : v;
        }
    for (auto& [m, v] : acc)
        if (!v.is_zero()) r.terms_.push_back({m, std::move(v)});
    return r;
}

CarrierElement operator*(const ScalarA& s, const CarrierElement& x)
{
    CarrierElement r(x.carrier_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : x.terms_) r.terms_.push_back({m, s * c});
    return r;
}

bool CarrierElement::operator==(const CarrierElement& o) const
{
    if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
    return carrier_ == o.carrier_ && terms_ == o.terms_;
}

CarrierElement CarrierElement::pow(int n) const
{
    if (n < 0) throw std::invalid_argument("negative power; use integer_power");
    CarrierElement r(carrier_, 1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

CarrierElement mul(const CarrierElement& x, const CarrierElement& y) { return x * y; }

CarrierElement invert_unit(const CarrierElement& t)
{
    if (!t.is_even()) throw std::invalid_argument("only even elements can be units");
    ScalarA c = t.constant_term();
    if (c.is_zero()) throw std::domain_error("not a unit: zero constant term");
    if (!c.invertible()) throw std::domain_error("not invertible over ScalarA: constant term " + render(c));
    ScalarA ci = c.inverse();
    CarrierElement q = -(ci * t.nilpotent_part());
    CarrierElement sum(t.carrier(), 1), term(t.carrier(), 1);
    while (true) {
        term = term * q;
        if (term.is_zero()) break;
        sum += term;
    }
    return ci * sum;
}

bool in_Pa(const CarrierElement& t) { return t.is_even() && t.constant_term().is_one(); }

CarrierElement power_za(const CarrierElement& t, const ScalarA& z)
{
    if (!in_Pa(t)) throw std::domain_error("power_za needs t in 1 + N(A0)");
    CarrierElement u = t.nilpotent_part();
    CarrierElement sum(t.carrier(), 1), un(t.carrier(), 1);
    for (int n = 1;; ++n) {
        un = un * u;
        if (un.is_zero()) break;
        sum += binomial(z, n) * un;
    }
    return sum;
}

CarrierElement integer_power(const CarrierElement& t, long n)
{
    if (n < 0) return invert_unit(t).pow(static_cast<int>(-n));
    return t.pow(static_cast<int>(n));
}

// ---------------------------------------------------------------- dual numbers

Carrier drop_last_dual(const Carrier& c)
{
    if (c.duals == 0) throw std::invalid_argument("carrier has no dual generator");
    Carrier r = c;
    --r.duals;
    return r;
}

DualSplit dual_number_split(const CarrierElement& x)
{
    const Carrier& c = x.carrier();
    Carrier base = drop_last_dual(c);
    CarrierMonomial bit = 1u << (kDualShift + c.duals - 1);
    DualSplit s{CarrierElement(base), CarrierElement(base)};
    for (const auto& [m, v] : x.terms()) {
        CarrierMonomial rest = m & ~bit;
        CarrierElement acc(base, 1);
        for (int i = 0; i < base.odd; ++i)
            if (rest & (1u << i)) acc = acc * CarrierElement::odd_generator(base, i + 1);
        for (int i = 0; i < base.duals; ++i)
            if (rest & (1u << (kDualShift + i))) acc = acc * CarrierElement::dual_generator(base, i + 1);
        (m & bit ? s.tail : s.base) += v * acc;
    }
    return s;
}

CarrierElement dual_embed(const CarrierElement& y, const Carrier& extended)
{
    if (!(drop_last_dual(extended) == y.carrier()) && !y.is_zero())
        throw std::invalid_argument("carrier mismatch in dual embedding");
    CarrierElement r(extended);
    for (const auto& [m, v] : y.terms()) {
        CarrierElement acc(extended, v);
        for (int i = 0; i < extended.odd; ++i)
            if (m & (1u << i)) acc = acc * CarrierElement::odd_generator(extended, i + 1);
        for (int i = 0; i + 1 < extended.duals; ++i)
            if (m & (1u << (kDualShift + i))) acc = acc * CarrierElement::dual_generator(extended, i + 1);
        r += acc;
    }
    return r;
}

CarrierElement dual_project(const CarrierElement& x) { return dual_number_split(x).base; }

// ---------------------------------------------------------------- rendering

std::string render(const CarrierElement& x, bool theta_names)
{
    if (x.is_zero()) return "0";
    const Carrier& c = x.carrier();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : x.terms()) {
        std::string mono;
        for (int i = 0; i < c.odd; ++i)
            if (m & (1u << i)) mono += (mono.empty() ? "" : "*") + std::string(theta_names ? "th" : "x") + std::to_string(i + 1);
        for (int i = 0; i < c.duals; ++i)
            if (m & (1u << (kDualShift + i)))
                mono += (mono.empty() ? "" : "*") + std::string("eps") + (c.duals > 1 ? std::to_string(i + 1) : "");
        bool simple = v.is_constant();
        bool neg = simple && v.constant_value() < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (simple) {
            Rational q = abs(v.constant_value());
            if (mono.empty()) os << q.get_str();
            else if (q == 1) os << mono;
            else os << q.get_str() << "*" << mono;
        } else {
            os << "(" << render(v) << ")" << (mono.empty() ? "" : "*" + mono);
        }
    }
    return os.str();
}

}  // namespace superchevalley
