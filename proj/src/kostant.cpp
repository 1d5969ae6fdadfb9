#include "superchevalley/kostant.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace superchevalley {

// ---------------------------------------------------------------- atoms

PBWAtom PBWAtom::root_power(const Root& r, int n)
{
    if (n < 0) throw std::invalid_argument("negative divided power");
    if (r.is_odd() && n > 1) throw std::invalid_argument("odd root vector with power > 1");
    PBWAtom a;
    a.kind = Kind::RootPower;
    a.root = root_index(r);
    a.power = n;
    return a;
}

PBWAtom PBWAtom::cartan_product(const CartanDegrees& d)
{
    for (int x : d)
        if (x < 0) throw std::invalid_argument("negative binomial degree");
    PBWAtom a;
    a.kind = Kind::CartanProduct;
    a.degrees = d;
    return a;
}

bool PBWAtom::is_identity() const
{
    if (kind == Kind::RootPower) return power == 0;
    return degrees == CartanDegrees{0, 0, 0};
}

int PBWAtom::block() const
{
    if (kind == Kind::CartanProduct) return 2;
    Root r = root_value();
    if (r.is_odd()) return r.is_positive() ? 4 : 0;
    return r.is_positive() ? 3 : 1;
}

std::strong_ordering PBWAtom::operator<=>(const PBWAtom& o) const
{
    if (auto c = block() <=> o.block(); c != 0) return c;
    if (auto c = root <=> o.root; c != 0) return c;
    if (auto c = power <=> o.power; c != 0) return c;
    return degrees <=> o.degrees;
}

bool PBWMonomial::is_normal() const
{
    for (size_t i = 0; i + 1 < atoms.size(); ++i) {
        const auto& x = atoms[i];
        const auto& y = atoms[i + 1];
        if (x.block() > y.block()) return false;
        if (x.block() == y.block() && (x.kind == PBWAtom::Kind::CartanProduct || x.root >= y.root)) return false;
    }
    for (const auto& a : atoms)
        if (a.is_identity()) return false;
    return true;
}

// ---------------------------------------------------------------- elements

PBWElement PBWElement::one() { return monomial(PBWMonomial{}); }

PBWElement PBWElement::monomial(const PBWMonomial& m, const ScalarA& c)
{
    PBWElement e;
    e.add(m, c);
    return e;
}

void PBWElement::add(const PBWMonomial& m, const ScalarA& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarA PBWElement::coefficient(const PBWMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarA() : it->second;
}

PBWElement& PBWElement::operator+=(const PBWElement& o)
{
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o)
{
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

PBWElement operator*(const ScalarA& s, const PBWElement& x)
{
    PBWElement r;
    for (const auto& [m, c] : x.terms_) r.add(m, s * c);
    return r;
}

GeneratorAtom GeneratorAtom::divided_power(const Root& r, int n)
{
    if (!r.is_even()) throw std::invalid_argument("divided powers need an even root");
    if (n < 0) throw std::invalid_argument("negative divided power");
    GeneratorAtom a;
    a.kind = Kind::DividedPower;
    a.root = r;
    a.n = n;
    return a;
}

GeneratorAtom GeneratorAtom::odd_vector(const Root& r)
{
    if (!r.is_odd()) throw std::invalid_argument("odd vector needs an odd root");
    GeneratorAtom a;
    a.kind = Kind::OddVector;
    a.root = r;
    return a;
}

GeneratorAtom GeneratorAtom::cartan_binomial(const CartanElement& h, int n, const ScalarA& shift)
{
    if (n < 0) throw std::invalid_argument("negative binomial degree");
    GeneratorAtom a;
    a.kind = Kind::CartanBinomial;
    a.h = h;
    a.n = n;
    a.shift = shift;
    return a;
}

// ---------------------------------------------------------------- Cartan binomial algebra

namespace {

using CartanTerms = std::map<CartanDegrees, ScalarA>;

// Newton coefficients of a polynomial of degree <= d from its values f(0..d).
std::vector<ScalarA> newton_coefficients(const std::function<ScalarA(int)>& f, int d)
{
    std::vector<ScalarA> vals(d + 1), out;
    for (int i = 0; i <= d; ++i) vals[i] = f(i);
    for (int n = 0; n <= d; ++n) {
        out.push_back(vals[0]);
        for (int i = 0; i + 1 < static_cast<int>(vals.size()); ++i) vals[i] = vals[i + 1] - vals[i];
        vals.pop_back();
    }
    return out;
}

// binom(x + c, m) = sum_j coeffs[j] binom(x, j)
std::vector<ScalarA> shifted_univariate(const ScalarA& c, int m)
{
    return newton_coefficients([&](int x) { return binomial(ScalarA(x) + c, m); }, m);
}

// binom(x, n) binom(x, m) = sum_k coeffs[k] binom(x, k)
std::vector<ScalarA> product_univariate(int n, int m)
{
    return newton_coefficients(
        [&](int x) { return ScalarA(binomial(Rational(x), n) * binomial(Rational(x), m)); }, n + m);
}

CartanTerms tensor_combine(const std::array<std::vector<ScalarA>, 3>& per_variable)
{
    CartanTerms out;
    for (size_t i = 0; i < per_variable[0].size(); ++i) {
        if (per_variable[0][i].is_zero()) continue;
        for (size_t j = 0; j < per_variable[1].size(); ++j) {
            if (per_variable[1][j].is_zero()) continue;
            ScalarA cij = per_variable[0][i] * per_variable[1][j];
            for (size_t k = 0; k < per_variable[2].size(); ++k) {
                if (per_variable[2][k].is_zero()) continue;
                out[{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}] += cij * per_variable[2][k];
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// f(H) with H_i -> H_i + s b(H_i)
CartanTerms shift_cartan(const CartanDegrees& d, const Weight& beta, int s)
{
    std::array<std::vector<ScalarA>, 3> per;
    for (int i = 0; i < 3; ++i) {
        ScalarA c = ScalarA(static_cast<long>(s)) * pairing(beta, CartanElement::basis(i + 1));
        per[i] = shifted_univariate(c, d[i]);
    }
    return tensor_combine(per);
}

CartanTerms multiply_cartan(const CartanDegrees& x, const CartanDegrees& y)
{
    std::array<std::vector<ScalarA>, 3> per;
    for (int i = 0; i < 3; ++i) per[i] = product_univariate(x[i], y[i]);
    return tensor_combine(per);
}

CartanTerms expand_binomial_terms(const CartanElement& h, const ScalarA& shift, int n)
{
    if (!h.in_h_Z_bracket_a()) throw std::invalid_argument("binomial atom needs Z[a] Cartan coordinates");
    if (!in_Z_bracket_a(shift)) throw std::invalid_argument("binomial shift must lie in Z[a]");
    std::array<int, 3> bound{};
    for (int i = 0; i < 3; ++i) bound[i] = h.coords[i].is_zero() ? 0 : n;
    // values on the grid, then mixed forward differences
    auto idx = [&](int i, int j, int k) { return (i * (bound[1] + 1) + j) * (bound[2] + 1) + k; };
    std::vector<ScalarA> grid((bound[0] + 1) * (bound[1] + 1) * (bound[2] + 1));
    for (int i = 0; i <= bound[0]; ++i)
        for (int j = 0; j <= bound[1]; ++j)
            for (int k = 0; k <= bound[2]; ++k) {
                ScalarA v = ScalarA(i) * h.coords[0] + ScalarA(j) * h.coords[1] + ScalarA(k) * h.coords[2] - shift;
                grid[idx(i, j, k)] = binomial(v, n);
            }
    for (int axis = 0; axis < 3; ++axis) {
        int len = bound[axis];
        for (int step = 1; step <= len; ++step)
            for (int i = 0; i <= bound[0]; ++i)
                for (int j = 0; j <= bound[1]; ++j)
                    for (int k = 0; k <= bound[2]; ++k) {
                        // in place, from the top of the axis downwards
                        std::array<int, 3> q{i, j, k};
                        q[axis] = len - q[axis];
                        if (q[axis] < step) continue;
                        std::array<int, 3> qm = q;
                        qm[axis] -= 1;
                        grid[idx(q[0], q[1], q[2])] -= grid[idx(qm[0], qm[1], qm[2])];
                    }
    }
    CartanTerms out;
    for (int i = 0; i <= bound[0]; ++i)
        for (int j = 0; j <= bound[1]; ++j)
            for (int k = 0; k <= bound[2]; ++k) {
                const ScalarA& c = grid[idx(i, j, k)];
                if (c.is_zero()) continue;
                if (!in_Za(c)) throw std::logic_error("binomial expansion coefficient outside Z_a: " + render(c));
                out[{i, j, k}] = c;
            }
    return out;
}

}  // namespace

PBWElement expand_shifted_binomial(const CartanElement& h, const ScalarA& shift, int n)
{
    PBWElement e;
    for (const auto& [d, c] : expand_binomial_terms(h, shift, n)) {
        PBWMonomial m;
        if (d != CartanDegrees{0, 0, 0}) m.atoms.push_back(PBWAtom::cartan_product(d));
        e.add(m, c);
    }
    return e;
}

// ---------------------------------------------------------------- straightening

namespace {

using Word = std::vector<PBWAtom>;
using Replacement = std::vector<std::pair<Word, ScalarA>>;

Word clean(Word w)
{
    std::erase_if(w, [](const PBWAtom& a) { return a.is_identity(); });
    return w;
}

PBWAtom root_atom(const Weight& w, int n) { return PBWAtom::root_power(Root{w}, n); }

// Coefficient c with (ad X_alpha)^k / k! X_gamma = c X_(gamma + k alpha).
ScalarA ad_divided_coefficient(const Root& alpha, const Root& gamma, int k)
{
    const auto& t = structure_table();
    SuperVector v = SuperVector::unit(BasisVector::root_vector(gamma));
    SuperVector x = SuperVector::unit(BasisVector::root_vector(alpha));
    for (int j = 1; j <= k; ++j) v = ScalarA(make_rational(1, j)) * t.bracket(x, v);
    Weight target = gamma.eps + k * alpha.eps;
    if (!is_root(target)) {
        if (!v.is_zero()) throw std::logic_error("bracket leaves the root lattice");
        return ScalarA();
    }
    return v[BasisVector::root_vector(Root{target})];
}

void append_bracket_terms(const SuperVector& v, Replacement& out, const ScalarA& scale)
{
    for (const auto& b : v.support()) {
        if (b.is_cartan()) {
            CartanDegrees d{0, 0, 0};
            d[b.cartan_index() - 1] = 1;
            out.push_back({{PBWAtom::cartan_product(d)}, scale * v[b]});
        } else {
            out.push_back({{PBWAtom::root_power(b.root(), 1)}, scale * v[b]});
        }
    }
}

Replacement rewrite_pair(const PBWAtom& x, const PBWAtom& y)
{
    using K = PBWAtom::Kind;
    Replacement out;
    if (x.kind == K::CartanProduct && y.kind == K::CartanProduct) {
        for (const auto& [d, c] : multiply_cartan(x.degrees, y.degrees))
            out.push_back({{PBWAtom::cartan_product(d)}, c});
        return out;
    }
    if (x.kind == K::CartanProduct) {
        // f(H) X^(n) = X^(n) f(H + n b(H))
        for (const auto& [d, c] : shift_cartan(x.degrees, y.root_value().eps, y.power))
            out.push_back({{y, PBWAtom::cartan_product(d)}, c});
        return out;
    }
    if (y.kind == K::CartanProduct) {
        // X^(n) f(H) = f(H - n b(H)) X^(n)
        for (const auto& [d, c] : shift_cartan(y.degrees, x.root_value().eps, -x.power))
            out.push_back({{PBWAtom::cartan_product(d), x}, c});
        return out;
    }

    Root rx = x.root_value(), ry = y.root_value();
    if (x.root == y.root) {
        if (rx.is_odd()) return out;
        out.push_back({{PBWAtom::root_power(rx, x.power + y.power)},
                       ScalarA(Rational(binomial_integer(x.power + y.power, y.power)))});
        return out;
    }

    const auto& t = structure_table();
    BasisVector bx = BasisVector::root_vector(rx), by = BasisVector::root_vector(ry);

    if (rx.is_even() && ry.is_even()) {
        if (ry == -rx) {
            int n = x.power, m = y.power;
            CartanElement h = coroot(rx);
            for (int k = 0; k <= std::min(n, m); ++k)
                for (const auto& [d, c] : expand_binomial_terms(h, ScalarA(m + n - 2 * k), k))
                    out.push_back({{root_atom(ry.eps, m - k), PBWAtom::cartan_product(d), root_atom(rx.eps, n - k)}, c});
            return out;
        }
        if (!t.entry(bx, by).is_zero())
            throw std::logic_error("even root vectors expected to commute: " + basis_name(bx) + ", " + basis_name(by));
        out.push_back({{y, x}, 1});
        return out;
    }

    if (rx.is_odd() && ry.is_odd()) {
        out.push_back({{y, x}, -1});
        append_bracket_terms(t.entry(bx, by), out, 1);
        return out;
    }

    if (rx.is_even()) {
        // X_a^(n) X_g = sum_k (ad X_a)^(k)(X_g) X_a^(n-k)
        for (int k = 0; k <= x.power; ++k) {
            ScalarA c = k == 0 ? ScalarA(1) : ad_divided_coefficient(rx, ry, k);
            if (c.is_zero()) continue;
            out.push_back({{root_atom(ry.eps + k * rx.eps, 1), root_atom(rx.eps, x.power - k)}, c});
        }
        return out;
    }

    // X_g X_a^(n) = sum_k X_a^(n-k) (-ad X_a)^(k)(X_g)
    for (int k = 0; k <= y.power; ++k) {
        ScalarA c = k == 0 ? ScalarA(1) : ad_divided_coefficient(ry, rx, k);
        if (c.is_zero()) continue;
        if (k % 2) c = -c;
        out.push_back({{root_atom(ry.eps, y.power - k), root_atom(rx.eps + k * ry.eps, 1)}, c});
    }
    return out;
}

bool out_of_order(const PBWAtom& x, const PBWAtom& y)
{
    if (x.block() != y.block()) return x.block() > y.block();
    if (x.kind == PBWAtom::Kind::CartanProduct) return true;
    return x.root >= y.root;
}

int find_redex(const Word& w, Strategy s)
{
    int n = static_cast<int>(w.size());
    if (s == Strategy::LeftmostFirst) {
        for (int i = 0; i + 1 < n; ++i)
            if (out_of_order(w[i], w[i + 1])) return i;
    } else {
        for (int i = n - 2; i >= 0; --i)
            if (out_of_order(w[i], w[i + 1])) return i;
    }
    return -1;
}

constexpr long kStepLimit = 50'000'000;

}  // namespace

PBWElement straighten_atoms(const std::vector<PBWAtom>& start, Strategy s)
{
    std::map<Word, ScalarA> work;
    work[clean(start)] = 1;
    PBWElement result;
    long steps = 0;
    while (!work.empty()) {
        if (++steps > kStepLimit) throw std::runtime_error("straightening did not terminate");
        auto node = work.extract(s == Strategy::LeftmostFirst ? work.begin() : std::prev(work.end()));
        const Word& w = node.key();
        const ScalarA& coeff = node.mapped();
        int i = find_redex(w, s);
        if (i < 0) {
            result.add(PBWMonomial{w}, coeff);
            continue;
        }
        for (auto& [mid, c] : rewrite_pair(w[i], w[i + 1])) {
            Word next(w.begin(), w.begin() + i);
            next.insert(next.end(), mid.begin(), mid.end());
            next.insert(next.end(), w.begin() + i + 2, w.end());
            next = clean(std::move(next));
            ScalarA v = coeff * c;
            auto [it, inserted] = work.try_emplace(std::move(next), v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return result;
}

PBWElement straighten(const GeneratorWord& w, Strategy s)
{
    // expand binomial atoms into sums of basis products first
    std::vector<std::pair<Word, ScalarA>> words{{Word{}, ScalarA(1)}};
    for (const auto& g : w) {
        std::vector<std::pair<Word, ScalarA>> next;
        switch (g.kind) {
        case GeneratorAtom::Kind::DividedPower:
            for (auto& [word, c] : words) {
                word.push_back(PBWAtom::root_power(g.root, g.n));
                next.push_back({word, c});
            }
            break;
        case GeneratorAtom::Kind::OddVector:
            for (auto& [word, c] : words) {
                word.push_back(PBWAtom::root_power(g.root, 1));
                next.push_back({word, c});
            }
            break;
        case GeneratorAtom::Kind::CartanBinomial: {
            auto terms = expand_binomial_terms(g.h, g.shift, g.n);
            for (const auto& [word, c] : words)
                for (const auto& [d, tc] : terms) {
                    Word w2 = word;
                    w2.push_back(PBWAtom::cartan_product(d));
                    next.push_back({w2, c * tc});
                }
            break;
        }
        }
        words = std::move(next);
    }
    PBWElement result;
    for (const auto& [word, c] : words) result += c * straighten_atoms(word, s);
    return result;
}

PBWElement multiply(const PBWElement& x, const PBWElement& y, Strategy s)
{
    PBWElement r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            Word w = mx.atoms;
            w.insert(w.end(), my.atoms.begin(), my.atoms.end());
            r += (cx * cy) * straighten_atoms(w, s);
        }
    return r;
}

bool is_Za_certified(const PBWElement& e)
{
    for (const auto& [m, c] : e.terms())
        if (!in_Za(c)) return false;
    return true;
}

std::vector<TensorFactor> tensor_shape(const PBWElement& e)
{
    std::vector<TensorFactor> out;
    for (const auto& [m, c] : e.terms()) {
        TensorFactor f;
        f.monomial = m;
        // shape: odd negatives, then even atoms, then odd positives
        int stage = 0;
        bool ok = m.is_normal() || m.atoms.empty();
        for (const auto& a : m.atoms) {
            int st = a.block() == 0 ? 0 : (a.block() == 4 ? 2 : 1);
            if (st < stage) ok = false;
            stage = st;
            if (a.is_odd()) f.odd_part.push_back(a.root_value());
            else f.even_part.push_back(a);
        }
        f.splits = ok;
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------- adjoint action

namespace {

const Matrix<ScalarA>& ad_root(int root)
{
    static const std::vector<Matrix<ScalarA>> mats = [] {
        std::vector<Matrix<ScalarA>> m;
        for (const auto& r : all_roots()) m.push_back(adjoint_matrix(BasisVector::root_vector(r)));
        return m;
    }();
    return mats.at(root);
}

Matrix<ScalarA> divided_power_matrix(int root, int n)
{
    Matrix<ScalarA> m = Matrix<ScalarA>::identity(kDim);
    for (int j = 1; j <= n; ++j) m = (m * ad_root(root)).scaled(ScalarA(make_rational(1, j)));
    return m;
}

void require_Za(const Matrix<ScalarA>& m, const std::string& what)
{
    for (const auto& x : m.entries())
        if (!in_Za(x)) throw std::logic_error(what + ": adjoint entry outside Z_a: " + render(x));
}

}  // namespace

Matrix<ScalarA> act_on_adjoint(const PBWAtom& a)
{
    if (a.kind == PBWAtom::Kind::RootPower) return divided_power_matrix(a.root, a.power);
    Matrix<ScalarA> m(kDim);
    for (const auto& b : BasisVector::all()) {
        ScalarA v = 1;
        for (int i = 0; i < 3; ++i) v *= binomial(pairing(b.weight(), CartanElement::basis(i + 1)), a.degrees[i]);
        m(b.index(), b.index()) = v;
    }
    return m;
}

Matrix<ScalarA> act_on_adjoint(const GeneratorAtom& a)
{
    Matrix<ScalarA> m;
    switch (a.kind) {
    case GeneratorAtom::Kind::DividedPower: m = divided_power_matrix(root_index(a.root), a.n); break;
    case GeneratorAtom::Kind::OddVector: m = ad_root(root_index(a.root)); break;
    case GeneratorAtom::Kind::CartanBinomial:
        m = Matrix<ScalarA>(kDim);
        for (const auto& b : BasisVector::all())
            m(b.index(), b.index()) = binomial(pairing(b.weight(), a.h) - a.shift, a.n);
        break;
    }
    require_Za(m, "generator " + render(a));
    return m;
}

Matrix<ScalarA> act_on_adjoint(const PBWElement& e)
{
    Matrix<ScalarA> total(kDim);
    for (const auto& [m, c] : e.terms()) {
        Matrix<ScalarA> p = Matrix<ScalarA>::identity(kDim);
        for (const auto& a : m.atoms) p = p * act_on_adjoint(a);
        total += p.scaled(c);
    }
    require_Za(total, "element");
    return total;
}

// ---------------------------------------------------------------- rendering

std::string render(const PBWAtom& a)
{
    if (a.kind == PBWAtom::Kind::RootPower) {
        std::string s = basis_name(BasisVector::root_vector(a.root_value()));
        if (a.power != 1) s += "^(" + std::to_string(a.power) + ")";
        return s;
    }
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (a.degrees[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "binom(H" + std::to_string(i + 1) + "," + std::to_string(a.degrees[i]) + ")";
    }
    return s.empty() ? "1" : s;
}

std::string render(const PBWMonomial& m)
{
    if (m.atoms.empty()) return "1";
    std::string s;
    for (const auto& a : m.atoms) {
        if (!s.empty()) s += "*";
        s += render(a);
    }
    return s;
}

std::string render(const PBWElement& e)
{
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        bool simple = c.is_constant();
        bool neg = simple && c.constant_value() < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        std::string mono = render(m);
        if (simple) {
            Rational v = abs(c.constant_value());
            if (v != 1) os << v.get_str() << (m.atoms.empty() ? "" : "*" + mono);
            else os << mono;
        } else {
            os << "(" << render(c) << ")" << (m.atoms.empty() ? "" : "*" + mono);
        }
    }
    return os.str();
}

std::string render(const GeneratorAtom& a)
{
    switch (a.kind) {
    case GeneratorAtom::Kind::DividedPower:
        return basis_name(BasisVector::root_vector(a.root)) + (a.n != 1 ? "^(" + std::to_string(a.n) + ")" : "");
    case GeneratorAtom::Kind::OddVector: return basis_name(BasisVector::root_vector(a.root));
    case GeneratorAtom::Kind::CartanBinomial: {
        std::string h;
        for (int i = 0; i < 3; ++i) {
            if (a.h.coords[i].is_zero()) continue;
            if (!h.empty()) h += " + ";
            h += "(" + render(a.h.coords[i]) + ")*H" + std::to_string(i + 1);
        }
        if (h.empty()) h = "0";
        if (!a.shift.is_zero()) h += " - (" + render(a.shift) + ")";
        return "binom(" + h + "," + std::to_string(a.n) + ")";
    }
    }
    return {};
}

}  // namespace superchevalley
