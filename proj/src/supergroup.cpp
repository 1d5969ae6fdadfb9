#include "superchevalley/supergroup.hpp"

#include "superchevalley/kostant.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace superchevalley {

namespace {

BasisVector vec(const Root& r) { return BasisVector::root_vector(r); }

CarrierElement one(const Carrier& c) { return CarrierElement(c, 1); }

// Nonzero divided powers ad(X_alpha)^(n), n >= 1, of an even root vector.
const std::vector<Matrix<ScalarA>>& divided_powers(const Root& alpha)
{
    static std::mutex mu;
    static std::map<Root, std::vector<Matrix<ScalarA>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
    std::vector<Matrix<ScalarA>> powers;
    for (int n = 1;; ++n) {
        Matrix<ScalarA> m = act_on_adjoint(PBWAtom::root_power(alpha, n));
        if (m.is_zero_matrix()) break;
        powers.push_back(std::move(m));
    }
    return cache.emplace(alpha, std::move(powers)).first->second;
}

const Matrix<ScalarA>& ad_of(const BasisVector& b)
{
    static const std::vector<Matrix<ScalarA>> mats = [] {
        std::vector<Matrix<ScalarA>> v;
        for (const auto& x : BasisVector::all()) v.push_back(adjoint_matrix(x));
        return v;
    }();
    return mats[b.index()];
}

long integer_exponent(const ScalarA& s, const std::string& what)
{
    if (!s.is_constant() || !is_integer(s.constant_value()))
        throw std::domain_error(what + ": exponent " + render(s) + " is not an integer");
    return s.constant_value().get_num().get_si();
}

void require_even(const CarrierElement& t, const std::string& what)
{
    if (!t.is_even()) throw std::invalid_argument(what + ": parameter must be even");
}

void require_odd(const CarrierElement& t, const std::string& what)
{
    if (!t.is_odd()) throw std::invalid_argument(what + ": parameter must be odd");
}

void require_carrier(const Carrier& c, const CarrierElement& x)
{
    if (!x.is_zero() && !(x.carrier() == c))
        throw std::invalid_argument("carrier mismatch: " + c.describe() + " vs " + x.carrier().describe());
}

CarrierMatrix diagonal(const Carrier& c, const std::vector<CarrierElement>& d)
{
    CarrierMatrix m(kDim, CarrierElement(c));
    for (int i = 0; i < kDim; ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

CarrierMatrix identity_matrix(const Carrier& c) { return CarrierMatrix::identity(kDim, one(c)); }

CarrierMatrix lift(const Matrix<ScalarA>& x, const CarrierElement& c)
{
    bool odd = c.is_odd() && !c.is_zero();
    if (!odd && !c.is_even()) throw std::invalid_argument("lift: parameter is not homogeneous");
    CarrierMatrix m(x.size(), CarrierElement(c.carrier()));
    CarrierElement neg = -c;
    for (int i = 0; i < x.size(); ++i) {
        bool flip = odd && BasisVector::from_index(i).parity() == Parity::Odd;
        for (int j = 0; j < x.size(); ++j)
            if (!x(i, j).is_zero()) m(i, j) = x(i, j) * (flip ? neg : c);
    }
    return m;
}

bool is_even_supermatrix(const CarrierMatrix& m)
{
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            bool same = BasisVector::from_index(i).parity() == BasisVector::from_index(j).parity();
            if (!(same ? m(i, j).is_even() : m(i, j).is_odd())) return false;
        }
    return true;
}

bool is_identity(const CarrierMatrix& m)
{
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            const CarrierElement& e = m(i, j);
            if (i == j ? !(e.is_scalar() && e.constant_term().is_one()) : !e.is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------- records

GeneratorRecord GeneratorRecord::additive_even(const Root& r, const CarrierElement& t)
{
    if (!r.is_even()) throw std::invalid_argument("xE needs an even root, got " + root_name(r.eps));
    require_even(t, "xE");
    return {Kind::AdditiveEven, r, {}, t};
}

GeneratorRecord GeneratorRecord::additive_odd(const Root& r, const CarrierElement& theta)
{
    if (!r.is_odd()) throw std::invalid_argument("xO needs an odd root, got " + root_name(r.eps));
    require_odd(theta, "xO");
    return {Kind::AdditiveOdd, r, {}, theta};
}

GeneratorRecord GeneratorRecord::torus_classical(const CartanElement& h, const CarrierElement& t)
{
    if (!h.in_h0_Z()) throw std::invalid_argument("hC needs an integer combination of even coroots");
    require_even(t, "hC");
    return {Kind::TorusClassical, {}, h, t};
}

GeneratorRecord GeneratorRecord::torus_a_type(const CartanElement& h, const CarrierElement& t)
{
    if (!h.in_h_Z_bracket_a()) throw std::invalid_argument("hA needs a Cartan element with Z[a] coordinates");
    if (!in_Pa(t)) throw std::domain_error("hA needs a parameter in 1 + N(A0)");
    return {Kind::TorusAType, {}, h, t};
}

bool GeneratorRecord::is_trivial() const
{
    switch (kind) {
    case Kind::AdditiveEven:
    case Kind::AdditiveOdd: return param.is_zero();
    case Kind::TorusClassical:
    case Kind::TorusAType: return h.is_zero() || (param.is_scalar() && param.constant_term().is_one());
    }
    return false;
}

GeneratorRecord GeneratorRecord::inverse() const
{
    GeneratorRecord r = *this;
    switch (kind) {
    case Kind::AdditiveEven:
    case Kind::AdditiveOdd: r.param = -param; break;
    case Kind::TorusClassical:
    case Kind::TorusAType: r.h = -h; break;
    }
    return r;
}

// ---------------------------------------------------------------- group elements

GroupElement::GroupElement(const Carrier& c) : carrier_(c), matrix_(identity_matrix(c)), inverse_(identity_matrix(c)) {}

GroupElement::GroupElement(const Carrier& c, CarrierMatrix m, CarrierMatrix inv, GroupWord word)
    : carrier_(c), matrix_(std::move(m)), inverse_(std::move(inv)), word_(std::move(word))
{
}

GroupElement GroupElement::from_record(const Carrier& c, const GeneratorRecord& r)
{
    require_carrier(c, r.param);
    GroupElement g(c);
    switch (r.kind) {
    case GeneratorRecord::Kind::AdditiveEven: g = x_even(c, r.root, r.param); break;
    case GeneratorRecord::Kind::AdditiveOdd: g = x_odd(c, r.root, r.param); break;
    case GeneratorRecord::Kind::TorusClassical: g = h_classical(c, r.h, r.param); break;
    case GeneratorRecord::Kind::TorusAType: g = h_atype(c, r.h, r.param); break;
    }
    return g;
}

GroupElement GroupElement::from_word(const Carrier& c, const GroupWord& w)
{
    GroupElement g(c);
    for (const auto& r : w) g = g * from_record(c, r);
    return g;
}

GroupElement GroupElement::inverse() const
{
    GroupWord w;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(it->inverse());
    return GroupElement(carrier_, inverse_, matrix_, std::move(w));
}

GroupElement operator*(const GroupElement& g, const GroupElement& h)
{
    if (!(g.carrier_ == h.carrier_))
        throw std::invalid_argument("carrier mismatch: " + g.carrier_.describe() + " vs " + h.carrier_.describe());
    GroupWord w = g.word_;
    w.insert(w.end(), h.word_.begin(), h.word_.end());
    return GroupElement(g.carrier_, g.matrix_ * h.matrix_, h.inverse_ * g.inverse_, std::move(w));
}

GroupElement x_even(const Carrier& c, const Root& alpha, const CarrierElement& t)
{
    auto rec = GeneratorRecord::additive_even(alpha, t);
    require_carrier(c, t);
    CarrierMatrix m = identity_matrix(c), inv = identity_matrix(c);
    CarrierElement tn = one(c), mtn = one(c);
    for (const auto& p : divided_powers(alpha)) {
        tn = tn * t;
        mtn = mtn * (-t);
        if (tn.is_zero()) break;
        m += lift(p, tn);
        inv += lift(p, mtn);
    }
    return GroupElement(c, std::move(m), std::move(inv), {rec});
}

GroupElement x_odd(const Carrier& c, const Root& gamma, const CarrierElement& theta)
{
    auto rec = GeneratorRecord::additive_odd(gamma, theta);
    require_carrier(c, theta);
    const auto& ad = ad_of(vec(gamma));
    return GroupElement(c, identity_matrix(c) + lift(ad, theta), identity_matrix(c) + lift(ad, -theta), {rec});
}

GroupElement h_classical(const Carrier& c, const CartanElement& h, const CarrierElement& t)
{
    auto rec = GeneratorRecord::torus_classical(h, t);
    require_carrier(c, t);
    const CarrierElement& tc = t;
    CarrierElement ti = invert_unit(t);
    std::vector<CarrierElement> d, di;
    for (const auto& b : BasisVector::all()) {
        long k = integer_exponent(pairing(b.weight(), h), "hC");
        d.push_back(k >= 0 ? tc.pow(static_cast<int>(k)) : ti.pow(static_cast<int>(-k)));
        di.push_back(k >= 0 ? ti.pow(static_cast<int>(k)) : tc.pow(static_cast<int>(-k)));
    }
    return GroupElement(c, diagonal(c, d), diagonal(c, di), {rec});
}

GroupElement h_atype(const Carrier& c, const CartanElement& h, const CarrierElement& t)
{
    auto rec = GeneratorRecord::torus_a_type(h, t);
    require_carrier(c, t);
    std::vector<CarrierElement> d, di;
    for (const auto& b : BasisVector::all()) {
        ScalarA z = pairing(b.weight(), h);
        d.push_back(power_za(t, z));
        di.push_back(power_za(t, -z));
    }
    return GroupElement(c, diagonal(c, d), diagonal(c, di), {rec});
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) { return g * h * g.inverse() * h.inverse(); }

GroupElement conjugate_by_torus(const GroupElement& h, const GroupElement& x) { return h * x * h.inverse(); }

// ---------------------------------------------------------------- structure data

ScalarA odd_bracket_constant(const Root& gamma, const Root& delta)
{
    Weight s = gamma.eps + delta.eps;
    if (!is_root(s)) return ScalarA();
    return structure_table().entry(vec(gamma), vec(delta))[vec(to_root(s))];
}

CartanElement odd_bracket_cartan(const Root& gamma)
{
    return cartan_part(structure_table().entry(vec(gamma), vec(-gamma)));
}

ScalarA divided_ad_coefficient(const Root& alpha, const Root& gamma, int s)
{
    if (s == 0) return 1;
    Weight target = gamma.eps + s * alpha.eps;
    if (!is_root(target)) return ScalarA();
    const auto& powers = divided_powers(alpha);
    if (s > static_cast<int>(powers.size())) return ScalarA();
    return powers[s - 1](vec(to_root(target)).index(), vec(gamma).index());
}

std::vector<ScalarA> commutator_constants(const Root& gamma, const Root& alpha)
{
    RootString rs = root_string(gamma, alpha);
    std::vector<int> eps = string_signs(alpha, gamma);
    std::vector<ScalarA> out;
    int sign = 1;
    for (int s = 1; s <= rs.q; ++s) {
        sign *= eps[s - 1];
        out.push_back(ScalarA(Rational(-sign) * Rational(binomial_integer(rs.r + s, s))));
    }
    return out;
}

// ---------------------------------------------------------------- big cell

int odd_root_rank(const Root& r)
{
    const auto& neg = odd_negative_roots();
    const auto& pos = odd_positive_roots();
    if (auto it = std::find(neg.begin(), neg.end(), r); it != neg.end()) return static_cast<int>(it - neg.begin());
    if (auto it = std::find(pos.begin(), pos.end(), r); it != pos.end())
        return static_cast<int>(neg.size() + (it - pos.begin()));
    throw std::invalid_argument("not an odd root: " + root_name(r.eps));
}

GroupWord BigCellFactorization::as_word() const
{
    GroupWord w = g0;
    for (const auto& [r, p] : odd_negative) w.push_back(GeneratorRecord::additive_odd(r, p));
    for (const auto& [r, p] : odd_positive) w.push_back(GeneratorRecord::additive_odd(r, p));
    return w;
}

CarrierMatrix BigCellFactorization::product_matrix() const
{
    CarrierMatrix m = g0_matrix;
    for (const auto& [r, p] : odd_negative) m = m * x_odd(carrier, r, p).matrix();
    for (const auto& [r, p] : odd_positive) m = m * x_odd(carrier, r, p).matrix();
    return m;
}

namespace {

// Moves an odd factor to the right of an even or torus factor: o e = e o'.
GroupWord move_odd_past_even(const GeneratorRecord& o, const GeneratorRecord& e)
{
    const Root& gamma = o.root;
    GroupWord out{e};
    switch (e.kind) {
    case GeneratorRecord::Kind::AdditiveEven: {
        CarrierElement mt = -e.param;
        CarrierElement power = one(o.param.carrier());
        for (int s = 0; s <= 4; ++s) {
            if (s > 0) power = power * mt;
            ScalarA n = divided_ad_coefficient(e.root, gamma, s);
            if (n.is_zero()) continue;
            CarrierElement p = n * (power * o.param);
            if (!p.is_zero()) out.push_back(GeneratorRecord::additive_odd(to_root(gamma.eps + s * e.root.eps), p));
        }
        break;
    }
    case GeneratorRecord::Kind::TorusClassical: {
        long k = integer_exponent(pairing(gamma.eps, e.h), "hC");
        out.push_back(GeneratorRecord::additive_odd(gamma, integer_power(e.param, -k) * o.param));
        break;
    }
    case GeneratorRecord::Kind::TorusAType:
        out.push_back(GeneratorRecord::additive_odd(gamma, power_za(e.param, -pairing(gamma.eps, e.h)) * o.param));
        break;
    case GeneratorRecord::Kind::AdditiveOdd: throw std::logic_error("move_odd_past_even on an odd factor");
    }
    return out;
}

// Puts an out-of-order odd pair in order: x_g(k) x_d(l) = (x_g(k), x_d(l)) x_d(l) x_g(k).
GroupWord swap_odd_pair(const GeneratorRecord& x, const GeneratorRecord& y)
{
    const Root &gamma = x.root, &delta = y.root;
    if (gamma == delta) return {GeneratorRecord::additive_odd(gamma, x.param + y.param)};
    GroupWord out;
    CarrierElement kl = x.param * y.param;
    Weight sum = gamma.eps + delta.eps;
    if (!kl.is_zero()) {
        if (sum == Weight{0, 0, 0}) {
            CarrierElement t = CarrierElement(kl.carrier(), 1) - kl;
            out.push_back(GeneratorRecord::torus_a_type(odd_bracket_cartan(gamma), t));
        } else if (is_root(sum)) {
            ScalarA c = odd_bracket_constant(gamma, delta);
            if (!c.is_zero()) out.push_back(GeneratorRecord::additive_even(to_root(sum), -(c * kl)));
        }
    }
    out.push_back(y);
    out.push_back(x);
    return out;
}

constexpr long kFactorizeStepLimit = 2'000'000;

}  // namespace

BigCellFactorization factorize_big_cell(const Carrier& c, const GroupWord& w, RewriteOrder order)
{
    GroupWord word;
    for (const auto& r : w) {
        require_carrier(c, r.param);
        if (!r.is_trivial()) word.push_back(r);
    }
    auto odd_even = [&](size_t i) { return word[i].is_odd() && !word[i + 1].is_odd(); };
    auto odd_odd = [&](size_t i) {
        return word[i].is_odd() && word[i + 1].is_odd() && odd_root_rank(word[i].root) >= odd_root_rank(word[i + 1].root);
    };
    for (long step = 0;; ++step) {
        if (step > kFactorizeStepLimit) throw std::runtime_error("factorization did not terminate");
        std::optional<size_t> at;
        size_t n = word.size();
        for (size_t k = 0; k + 1 < n; ++k) {
            size_t i = order == RewriteOrder::LeftmostFirst ? k : n - 2 - k;
            if (odd_even(i) || odd_odd(i)) {
                at = i;
                break;
            }
        }
        if (!at) break;
        size_t i = *at;
        GroupWord rep = odd_even(i) ? move_odd_past_even(word[i], word[i + 1]) : swap_odd_pair(word[i], word[i + 1]);
        std::erase_if(rep, [](const GeneratorRecord& r) { return r.is_trivial(); });
        word.erase(word.begin() + i, word.begin() + i + 2);
        word.insert(word.begin() + i, rep.begin(), rep.end());
    }

    BigCellFactorization f{c, {}, {}, {}, {}};
    for (const auto& r : word) {
        if (!r.is_odd()) {
            f.g0.push_back(r);
            continue;
        }
        (r.root.is_positive() ? f.odd_positive : f.odd_negative).push_back({r.root, r.param});
    }
    f.g0_matrix = GroupElement::from_word(c, f.g0).matrix();
    if (!(f.product_matrix() == GroupElement::from_word(c, w).matrix()))
        throw std::logic_error("big-cell factorization failed its matrix check");
    return f;
}

// ---------------------------------------------------------------- suites

SampleParameters sample_parameters(const Carrier& c)
{
    auto xi = [&](int i) { return i <= c.odd ? CarrierElement::odd_generator(c, i) : CarrierElement(c); };
    auto s = [&](long v) { return CarrierElement(c, v); };
    SampleParameters p;
    p.unit = s(2) + xi(1) * xi(3);
    p.pa_unit = s(1) + xi(1) * xi(2) - ScalarA(PolyA::one_plus_a()) * (xi(3) * xi(4));
    p.even = s(3) + xi(2) * xi(4);
    p.odd1 = xi(1) + ScalarA(2) * xi(3) + xi(1) * xi(2) * xi(4);
    p.odd2 = xi(2) - xi(4) + ScalarA::a() * (xi(1) * xi(3) * xi(4));
    return p;
}

SuiteReport check_lemma_a(const Carrier& c)
{
    SuiteReport rep{"lemma (a): odd/even commutators", 0, {}};
    auto p = sample_parameters(c);
    std::vector<Root> odd = odd_positive_roots(), even = even_positive_roots();
    odd.insert(odd.end(), odd_negative_roots().begin(), odd_negative_roots().end());
    even.insert(even.end(), even_negative_roots().begin(), even_negative_roots().end());
    for (const auto& gamma : odd)
        for (const auto& alpha : even) {
            ++rep.checks;
            std::string tag = root_name(gamma.eps) + ", " + root_name(alpha.eps);
            auto cs = commutator_constants(gamma, alpha);
            GroupElement rhs(c);
            CarrierElement tp = one(c);
            for (size_t s = 1; s <= cs.size(); ++s) {
                const ScalarA& k = cs[s - 1];
                if (!in_Z_bracket_a(k) || !k.is_constant()) rep.failures.push_back(tag + ": non-integral c_s");
                if (!(k == -divided_ad_coefficient(alpha, gamma, static_cast<int>(s))))
                    rep.failures.push_back(tag + ": c_s disagrees with the adjoint action");
                tp = tp * p.even;
                rhs = rhs * x_odd(c, to_root(gamma.eps + static_cast<int>(s) * alpha.eps), k * (tp * p.odd1));
            }
            GroupElement lhs = commutator(x_odd(c, gamma, p.odd1), x_even(c, alpha, p.even));
            if (!(lhs == rhs)) rep.failures.push_back(tag + ": matrix identity fails");
        }
    return rep;
}

SuiteReport check_lemma_b(const Carrier& c)
{
    SuiteReport rep{"lemma (b): odd/odd commutators", 0, {}};
    auto p = sample_parameters(c);
    std::vector<Root> odd = odd_negative_roots();
    odd.insert(odd.end(), odd_positive_roots().begin(), odd_positive_roots().end());
    CarrierElement kl = p.odd1 * p.odd2;
    for (const auto& gamma : odd)
        for (const auto& delta : odd) {
            ++rep.checks;
            std::string tag = root_name(gamma.eps) + ", " + root_name(delta.eps);
            GroupElement lhs = commutator(x_odd(c, gamma, p.odd1), x_odd(c, delta, p.odd2));
            GroupElement rhs(c);
            Weight sum = gamma.eps + delta.eps;
            if (delta == -gamma) {
                CartanElement h = odd_bracket_cartan(gamma);
                int sigma = gamma.is_positive() ? 1 : -1;
                if (!(h == ScalarA(sigma) * coroot(gamma))) rep.failures.push_back(tag + ": [X_g, X_-g] is not sigma H_g");
                rhs = h_atype(c, h, one(c) - kl);
            } else if (is_root(sum)) {
                ScalarA k = odd_bracket_constant(gamma, delta);
                if (!in_Z_bracket_a(k) || k.is_zero())
                    rep.failures.push_back(tag + ": bracket constant is not a nonzero element of Z[a]");
                rhs = x_even(c, to_root(sum), -(k * kl));
            }
            if (!(lhs == rhs)) rep.failures.push_back(tag + ": matrix identity fails");
        }
    return rep;
}

SuiteReport check_lemma_c(const Carrier& c)
{
    SuiteReport rep{"lemma (c): torus conjugation", 0, {}};
    auto p = sample_parameters(c);
    auto one_param = [&](const Root& b, const CarrierElement& u) { return b.is_even() ? x_even(c, b, u) : x_odd(c, b, u); };
    for (const auto& beta : all_roots()) {
        const CarrierElement& u = beta.is_even() ? p.even : p.odd1;
        for (const auto& alpha : even_positive_roots()) {
            ++rep.checks;
            CartanElement h = coroot(alpha);
            long k = integer_exponent(pairing(beta.eps, h), "hC");
            GroupElement lhs = conjugate_by_torus(h_classical(c, h, p.unit), one_param(beta, u));
            GroupElement rhs = one_param(beta, integer_power(p.unit, k) * u);
            if (!(lhs == rhs))
                rep.failures.push_back(root_name(beta.eps) + " under hC(H[" + root_name(alpha.eps) + "])");
        }
        for (int i = 1; i <= 3; ++i) {
            ++rep.checks;
            CartanElement h = CartanElement::basis(i);
            GroupElement lhs = conjugate_by_torus(h_atype(c, h, p.pa_unit), one_param(beta, u));
            GroupElement rhs = one_param(beta, power_za(p.pa_unit, pairing(beta.eps, h)) * u);
            if (!(lhs == rhs)) rep.failures.push_back(root_name(beta.eps) + " under hA(H" + std::to_string(i) + ")");
        }
    }
    return rep;
}

std::vector<SuiteReport> check_lemmas(int odd_vars)
{
    Carrier c = Carrier::grassmann(odd_vars, std::max(odd_vars, kDefaultOddCap));
    return {check_lemma_a(c), check_lemma_b(c), check_lemma_c(c)};
}

SuiteReport check_torus_identities(const Carrier& c)
{
    SuiteReport rep{"torus/coroot identities", 0, {}};
    auto p = sample_parameters(c);
    CarrierElement t = p.pa_unit;
    CarrierElement s = one(c) + p.odd1 * p.odd2;
    for (const auto& alpha : even_positive_roots()) {
        std::string tag = root_name(alpha.eps);
        CartanElement h = coroot(alpha);
        ++rep.checks;
        GroupElement rhs(c);
        for (int i = 1; i <= 3; ++i)
            if (!h.coords[i - 1].is_zero()) rhs = rhs * h_atype(c, h.coords[i - 1] * CartanElement::basis(i), t);
        if (!(h_classical(c, h, t) == rhs)) rep.failures.push_back(tag + ": coroot expansion");
        ++rep.checks;
        if (!(h_classical(c, h, t) == h_atype(c, h, t))) rep.failures.push_back(tag + ": hC and hA disagree");
        ++rep.checks;
        if (!(h_classical(c, h, t * s) == h_classical(c, h, t) * h_classical(c, h, s)))
            rep.failures.push_back(tag + ": hC is not multiplicative");
        ++rep.checks;
        if (!(h_classical(c, h, p.unit * p.unit) == h_classical(c, h, p.unit) * h_classical(c, h, p.unit)))
            rep.failures.push_back(tag + ": hC is not multiplicative on units");
        ++rep.checks;
        if (!(x_even(c, alpha, p.even + t) == x_even(c, alpha, p.even) * x_even(c, alpha, t)))
            rep.failures.push_back(tag + ": xE is not additive");
    }
    for (int i = 1; i <= 3; ++i) {
        ++rep.checks;
        CartanElement h = CartanElement::basis(i);
        if (!(h_atype(c, h, t * s) == h_atype(c, h, t) * h_atype(c, h, s)))
            rep.failures.push_back("H" + std::to_string(i) + ": hA is not multiplicative");
    }
    return rep;
}

namespace {

CarrierElement random_odd(const Carrier& c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    CarrierElement x(c);
    for (int i = 1; i <= c.odd; ++i) {
        ScalarA k(PolyA(std::vector<Rational>{coeff(rng), coeff(rng)}));
        x += k * CarrierElement::odd_generator(c, i);
    }
    if (x.is_zero()) x = CarrierElement::odd_generator(c, 1);
    return x;
}

}  // namespace

SuiteReport check_semidirect(const Carrier& c, unsigned long seed, int samples)
{
    SuiteReport rep{"semidirect structure for A1^2 = 0", 0, {}};
    std::mt19937_64 rng(seed);
    std::vector<Root> odd = odd_negative_roots();
    odd.insert(odd.end(), odd_positive_roots().begin(), odd_positive_roots().end());

    for (const auto& gamma : odd)
        for (const auto& delta : odd) {
            ++rep.checks;
            CarrierElement k = random_odd(c, rng), l = random_odd(c, rng);
            if (!(x_odd(c, gamma, k) * x_odd(c, delta, l) == x_odd(c, delta, l) * x_odd(c, gamma, k)))
                rep.failures.push_back("odd factors " + root_name(gamma.eps) + ", " + root_name(delta.eps) + " do not commute");
        }

    std::vector<Root> even = even_positive_roots();
    even.insert(even.end(), even_negative_roots().begin(), even_negative_roots().end());
    const std::vector<CarrierElement> scalars{CarrierElement(c, 2), CarrierElement(c, ScalarA(make_rational(-1, 3))),
                                              CarrierElement(c, ScalarA(PolyA::one_plus_a()))};
    for (const auto& gamma : odd) {
        CarrierElement k = random_odd(c, rng);
        for (const auto& alpha : even)
            for (const auto& t : scalars) {
                ++rep.checks;
                GroupElement conj = x_even(c, alpha, t) * x_odd(c, gamma, k) * x_even(c, alpha, -t);
                GroupElement expected(c);
                CarrierElement tp = one(c);
                for (int s = 0; s <= 4; ++s) {
                    if (s > 0) tp = tp * t;
                    ScalarA n = divided_ad_coefficient(alpha, gamma, s);
                    if (!n.is_zero()) expected = expected * x_odd(c, to_root(gamma.eps + s * alpha.eps), n * (tp * k));
                }
                if (!(conj == expected))
                    rep.failures.push_back("conjugate of " + root_name(gamma.eps) + " by xE(" + root_name(alpha.eps) + ")");
            }
        for (const auto& alpha : even_positive_roots())
            for (const auto& t : scalars) {
                ++rep.checks;
                CartanElement h = coroot(alpha);
                long e = integer_exponent(pairing(gamma.eps, h), "hC");
                GroupElement conj = conjugate_by_torus(h_classical(c, h, t), x_odd(c, gamma, k));
                if (!(conj == x_odd(c, gamma, integer_power(t, e) * k)))
                    rep.failures.push_back("conjugate of " + root_name(gamma.eps) + " by hC(H[" + root_name(alpha.eps) + "])");
            }
    }

    for (int n = 0; n < samples; ++n) {
        ++rep.checks;
        std::vector<CarrierElement> coords;
        GroupElement g(c);
        for (const auto& gamma : odd) {
            coords.push_back(random_odd(c, rng));
            g = g * x_odd(c, gamma, coords.back());
        }
        std::vector<CarrierElement> recovered;
        GroupElement rebuilt(c);
        int h2 = BasisVector::cartan(2).index();
        for (const auto& gamma : odd) {
            ScalarA pair = pairing(gamma.eps, CartanElement::basis(2));
            CarrierElement th = pair.inverse() * g.matrix()(vec(gamma).index(), h2);
            recovered.push_back(th);
            rebuilt = rebuilt * x_odd(c, gamma, th);
        }
        if (recovered != coords || !(rebuilt == g)) rep.failures.push_back("coordinate recovery, sample " + std::to_string(n));
    }
    return rep;
}

SuiteReport lie_functor_check()
{
    SuiteReport rep{"Lie functor over dual numbers", 0, {}};
    const auto& basis = BasisVector::all();

    Carrier one_dual = Carrier::dual_odd(1, 1);
    CarrierElement e = CarrierElement::dual_generator(one_dual, 1);
    CarrierElement th = CarrierElement::odd_generator(one_dual, 1);
    for (const auto& x : basis) {
        ++rep.checks;
        CarrierElement coeff = parity_bit(x) ? e * th : e;
        CarrierMatrix m = identity_matrix(one_dual) + lift(ad_of(x), coeff);
        bool kernel = is_even_supermatrix(m);
        for (int i = 0; i < kDim && kernel; ++i)
            for (int j = 0; j < kDim && kernel; ++j) {
                CarrierElement pij = dual_project(m(i, j));
                if (!(pij == (i == j ? CarrierElement(pij.carrier(), 1) : CarrierElement(pij.carrier())))) kernel = false;
            }
        if (!kernel) rep.failures.push_back("1 + eps ad(" + basis_name(x) + ") is not in the kernel of p");
    }
    for (const auto& alpha : all_roots()) {
        if (!alpha.is_even()) continue;
        ++rep.checks;
        GroupElement g = x_even(one_dual, alpha, ScalarA(3) * e);
        bool kernel = true;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                CarrierElement pij = dual_project(g.matrix()(i, j));
                if (!(pij == (i == j ? CarrierElement(pij.carrier(), 1) : CarrierElement(pij.carrier())))) kernel = false;
            }
        if (!kernel) rep.failures.push_back("p(xE(" + root_name(alpha.eps) + "; 3 eps)) is not the identity");
    }

    Carrier two_duals = Carrier::dual_odd(2, 2);
    CarrierElement e1 = CarrierElement::dual_generator(two_duals, 1), e2 = CarrierElement::dual_generator(two_duals, 2);
    CarrierElement t1 = CarrierElement::odd_generator(two_duals, 1), t2 = CarrierElement::odd_generator(two_duals, 2);
    CarrierMatrix id = identity_matrix(two_duals);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            ++rep.checks;
            CarrierElement cx = parity_bit(x) ? e1 * t1 : e1;
            CarrierElement cy = parity_bit(y) ? e2 * t2 : e2;
            GroupElement g(two_duals, id + lift(ad_of(x), cx), id - lift(ad_of(x), cx));
            GroupElement h(two_duals, id + lift(ad_of(y), cy), id - lift(ad_of(y), cy));
            CarrierElement k = cx * cy;
            if (parity_bit(x) && parity_bit(y)) k = -k;
            CarrierMatrix expected = id + lift(adjoint_matrix(structure_table().entry(x, y)), k);
            if (!(commutator(g, h).matrix() == expected))
                rep.failures.push_back("commutator for " + basis_name(x) + ", " + basis_name(y));
        }
    return rep;
}

// ---------------------------------------------------------------- rendering

std::string render(const GeneratorRecord& r, bool theta_names)
{
    std::string p = render(r.param, theta_names);
    switch (r.kind) {
    case GeneratorRecord::Kind::AdditiveEven: return "xE(" + root_name(r.root.eps) + "; " + p + ")";
    case GeneratorRecord::Kind::AdditiveOdd: return "xO(" + root_name(r.root.eps) + "; " + p + ")";
    case GeneratorRecord::Kind::TorusClassical: return "hC(" + render(cartan_vector(r.h)) + "; " + p + ")";
    case GeneratorRecord::Kind::TorusAType: return "hA(" + render(cartan_vector(r.h)) + "; " + p + ")";
    }
    return {};
}

std::string render(const GroupWord& w, bool theta_names)
{
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " * " : "") + render(w[i], theta_names);
    return s;
}

}  // namespace superchevalley
