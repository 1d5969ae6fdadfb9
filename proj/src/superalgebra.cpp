#include "superchevalley/superalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace superchevalley {

// ---------------------------------------------------------------- basis

BasisVector BasisVector::cartan(int i)
{
    if (i < 1 || i > 3) throw std::out_of_range("Cartan index");
    return BasisVector(i - 1);
}

BasisVector BasisVector::root_vector(const Root& r) { return BasisVector(3 + root_index(r)); }

BasisVector BasisVector::from_index(int index)
{
    if (index < 0 || index >= kDim) throw std::out_of_range("basis index");
    return BasisVector(index);
}

const std::vector<BasisVector>& BasisVector::all()
{
    static const std::vector<BasisVector> basis = [] {
        std::vector<BasisVector> b;
        for (int i = 0; i < kDim; ++i) b.push_back(BasisVector(i));
        return b;
    }();
    return basis;
}

int BasisVector::cartan_index() const
{
    if (!is_cartan()) throw std::logic_error("not a Cartan basis vector");
    return index_ + 1;
}

Root BasisVector::root() const
{
    if (is_cartan()) throw std::logic_error("Cartan basis vector has no root");
    return all_roots()[index_ - 3];
}

Parity BasisVector::parity() const { return is_cartan() ? Parity::Even : root().parity(); }

Weight BasisVector::weight() const { return is_cartan() ? Weight{0, 0, 0} : root().eps; }

SuperVector cartan_vector(const CartanElement& h)
{
    SuperVector v;
    for (int i = 0; i < 3; ++i) v.c[i] = h.coords[i];
    return v;
}

CartanElement cartan_part(const SuperVector& v)
{
    CartanElement h;
    for (int i = 0; i < 3; ++i) h.coords[i] = v.c[i];
    return h;
}

std::string basis_name(const BasisVector& b)
{
    if (b.is_cartan()) return "H" + std::to_string(b.cartan_index());
    Root r = b.root();
    if (r.is_positive()) return "E(" + root_name(r.eps) + ")";
    return "F(" + root_name((-r).eps) + ")";
}

std::string render(const SuperVector& v)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kDim; ++i) {
        const ScalarA& c = v.c[i];
        if (c.is_zero()) continue;
        std::string name = basis_name(BasisVector::from_index(i));
        std::string cs = render(c);
        bool neg = cs[0] == '-';
        bool simple = c.denom_power() == 0 && c.numerator().is_constant();
        if (!first) os << (neg && simple ? " - " : " + ");
        else if (neg && simple) os << "-";
        first = false;
        if (simple) {
            Rational m = abs(c.constant_value());
            if (m != 1) os << m.get_str() << "*";
        } else {
            os << "(" << cs << ")*";
        }
        os << name;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- presentation

SuperVector presentation_vector(const std::string& name)
{
    auto root = [](int x, int y, int z, const ScalarA& s = 1) {
        return s * SuperVector::unit(BasisVector::root_vector(Root{{x, y, z}}));
    };
    const ScalarA one_a = ScalarA(PolyA::one_plus_a());
    if (name == "h1") return cartan_vector(h_generator(1));
    if (name == "h2") return cartan_vector(h_generator(2));
    if (name == "h3") return cartan_vector(h_generator(3));
    if (name == "e1") return root(1, -1, -1);
    if (name == "e2") return root(0, 2, 0);
    if (name == "e3") return root(0, 0, 2);
    if (name == "e12") return root(1, 1, -1);
    if (name == "e13") return root(1, -1, 1);
    if (name == "e123") return root(1, 1, 1);
    if (name == "e1123'") return root(2, 0, 0, one_a);
    if (name == "f1") return root(-1, 1, 1);
    if (name == "f2") return root(0, -2, 0);
    if (name == "f3") return root(0, 0, -2);
    if (name == "f21") return root(-1, -1, 1);
    if (name == "f31") return root(-1, 1, -1);
    if (name == "f321") return root(-1, -1, -1);
    if (name == "f3211'") return root(-2, 0, 0, -one_a);
    throw std::invalid_argument("unknown generator name: " + name);
}

std::vector<BracketRelation> presentation_brackets()
{
    const ScalarA a = ScalarA::a();
    const ScalarA one_a = ScalarA(PolyA::one_plus_a());
    std::vector<BracketRelation> rel = {
        {"e1", "e2", {{1, "e12"}}},
        {"e1", "e3", {{1, "e13"}}},
        {"e1", "e123", {{1, "e1123'"}}},
        {"e1", "f21", {{1, "f2"}}},
        {"e1", "f31", {{a, "f3"}}},
        {"e1", "f3211'", {{-one_a, "f321"}}},
        {"e2", "e13", {{-1, "e123"}}},
        {"e2", "f21", {{1, "f1"}}},
        {"e2", "f321", {{1, "f31"}}},
        {"e3", "e12", {{-1, "e123"}}},
        {"e3", "f31", {{1, "f1"}}},
        {"e3", "f321", {{1, "f21"}}},
        {"f1", "f2", {{-1, "f21"}}},
        {"f1", "f3", {{-1, "f31"}}},
        {"f1", "f321", {{1, "f3211'"}}},
        {"f1", "e12", {{1, "e2"}}},
        {"f1", "e13", {{a, "e3"}}},
        {"f1", "e1123'", {{one_a, "e123"}}},
        {"f2", "f31", {{1, "f321"}}},
        {"f2", "e12", {{-1, "e1"}}},
        {"f2", "e123", {{-1, "e13"}}},
        {"f3", "f21", {{1, "f321"}}},
        {"f3", "e13", {{-1, "e1"}}},
        {"f3", "e123", {{-1, "e12"}}},
        {"e12", "e13", {{-1, "e1123'"}}},
        {"e12", "f21", {{1, "h1"}, {-1, "h2"}}},
        {"e12", "f321", {{a, "f3"}}},
        {"e12", "f3211'", {{one_a, "f31"}}},
        {"e13", "f31", {{1, "h1"}, {-a, "h3"}}},
        {"e13", "f321", {{1, "f2"}}},
        {"e13", "f3211'", {{one_a, "f21"}}},
        {"f21", "f31", {{-1, "f3211'"}}},
        {"f21", "e123", {{a, "e3"}}},
        {"f21", "e1123'", {{-one_a, "e13"}}},
        {"f31", "e123", {{1, "e2"}}},
        {"f31", "e1123'", {{-one_a, "e12"}}},
        {"e123", "f321", {{1, "h1"}, {-1, "h2"}, {-a, "h3"}}},
        {"e123", "f3211'", {{-one_a, "f1"}}},
        // sign corrected: the opposite sign breaks the Jacobi identity
        {"f321", "e1123'", {{one_a, "e1"}}},
        {"e1123'", "f3211'", {{ScalarA(-2) * one_a, "h1"}, {one_a, "h2"}, {one_a * a, "h3"}}},
        {"e1", "f1", {{1, "h1"}}},
        {"e2", "f2", {{1, "h2"}}},
        {"e3", "f3", {{1, "h3"}}},
        {"e1", "e1", {}},
        {"f1", "f1", {}},
    };
    const ScalarA cartan_matrix[3][3] = {{0, 1, a}, {-1, 2, 0}, {-1, 0, 2}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::string h = "h" + std::to_string(i);
            const ScalarA& c = cartan_matrix[i - 1][j - 1];
            rel.push_back({h, "e" + std::to_string(j), {{c, "e" + std::to_string(j)}}});
            rel.push_back({h, "f" + std::to_string(j), {{-c, "f" + std::to_string(j)}}});
            for (int k = 1; k <= 3; ++k) rel.push_back({h, "h" + std::to_string(k), {}});
        }
    return rel;
}

namespace {

// Returns true with (b, s) when v = s * b for a single basis vector b.
bool as_scaled_basis(const SuperVector& v, BasisVector& b, ScalarA& s)
{
    auto sup = v.support();
    if (sup.size() != 1) return false;
    b = sup[0];
    s = v[b];
    return true;
}

SuperVector relation_value(const BracketRelation& r)
{
    SuperVector v;
    for (const auto& [c, name] : r.value) v += c * presentation_vector(name);
    return v;
}

std::string relation_text(const BracketRelation& r) { return "[" + r.x + ", " + r.y + "]"; }

}  // namespace

StructureTable build_structure_table(const std::vector<BracketRelation>& relations)
{
    StructureTable t;
    std::array<bool, kDim * kDim> known{};
    auto put = [&](const BasisVector& x, const BasisVector& y, const SuperVector& v, const std::string& why) {
        int sign = (parity_bit(x) && parity_bit(y)) ? 1 : -1;
        SuperVector w = ScalarA(sign) * v;
        for (auto [p, q, val] : {std::tuple{x, y, v}, std::tuple{y, x, w}}) {
            int k = p.index() * kDim + q.index();
            if (known[k]) {
                if (!(t.entry(p, q) == val))
                    throw std::logic_error("inconsistent bracket " + basis_name(p) + ", " + basis_name(q) +
                                           " forced by " + why);
            } else {
                t.entry(p, q) = val;
                known[k] = true;
            }
        }
    };

    std::vector<const BracketRelation*> deferred;
    for (const auto& r : relations) {
        BasisVector bx, by;
        ScalarA sx, sy;
        if (!as_scaled_basis(presentation_vector(r.x), bx, sx) || !as_scaled_basis(presentation_vector(r.y), by, sy)) {
            deferred.push_back(&r);
            continue;
        }
        put(bx, by, (sx * sy).inverse() * relation_value(r), relation_text(r));
    }

    // Cartan rows: [H_i, X_b] = b(H_i) X_b
    for (int i = 1; i <= 3; ++i) {
        BasisVector h = BasisVector::cartan(i);
        for (const auto& b : BasisVector::all()) {
            SuperVector v;
            if (!b.is_cartan()) v[b] = pairing(b.weight(), CartanElement::basis(i));
            put(h, b, v, "Cartan eigenvalues");
        }
    }

    for (const auto& x : BasisVector::all())
        for (const auto& y : BasisVector::all()) {
            if (known[x.index() * kDim + y.index()]) continue;
            Weight s = x.weight() + y.weight();
            if (s == Weight{0, 0, 0} || is_root(s))
                throw std::logic_error("bracket " + basis_name(x) + ", " + basis_name(y) + " is undetermined");
            put(x, y, SuperVector(), "grading");
        }

    for (const auto* r : deferred) {
        SuperVector got = t.bracket(presentation_vector(r->x), presentation_vector(r->y));
        if (!(got == relation_value(*r))) throw std::logic_error("relation " + relation_text(*r) + " fails");
    }
    return t;
}

StructureTable build_structure_table() { return build_structure_table(presentation_brackets()); }

const StructureTable& structure_table()
{
    static const StructureTable t = build_structure_table();
    return t;
}

BasicStructureTable<Rational> specialize_table(const StructureTable& t, const Rational& a0)
{
    BasicStructureTable<Rational> r;
    for (const auto& x : BasisVector::all())
        for (const auto& y : BasisVector::all())
            for (int k = 0; k < kDim; ++k) r.entry(x, y).c[k] = specialize(t.entry(x, y).c[k], a0);
    return r;
}

SuperVector bracket(const SuperVector& x, const SuperVector& y) { return structure_table().bracket(x, y); }

// ---------------------------------------------------------------- axioms

namespace {

template <class S, class Map>
AxiomReport verify_axioms(const BasicStructureTable<S>& t, Map to_field, bool symbolic)
{
    using V = BasicSuperVector<S>;
    AxiomReport rep;
    auto fail = [&](const std::string& what) { rep.violations.push_back(what); };
    auto field_cartan = [&](const CartanElement& h) {
        V v;
        for (int i = 0; i < 3; ++i) v.c[i] = to_field(h.coords[i]);
        return v;
    };

    for (const auto& x : BasisVector::all())
        for (const auto& y : BasisVector::all()) {
            ++rep.entries_checked;
            const V& e = t.entry(x, y);
            const V& f = t.entry(y, x);
            V anti = (parity_bit(x) && parity_bit(y)) ? -f : f;
            if (!(e + anti).is_zero()) fail("super-antisymmetry at " + basis_name(x) + ", " + basis_name(y));
            if (symbolic) {
                for (int k = 0; k < kDim; ++k)
                    if constexpr (std::is_same_v<S, ScalarA>)
                        if (!in_Z_bracket_a(e.c[k]))
                            fail("(a) non-integral constant at " + basis_name(x) + ", " + basis_name(y));
            }
        }

    // (a) coroots span the Cartan lattice with Z[a] coordinates
    for (const auto& r : all_roots())
        if (!coroot(r).in_h_Z_bracket_a()) fail("(a) coroot of " + root_name(r.eps) + " not in h_Z[a]");

    // (b) Cartan is abelian and acts diagonally through the pairing
    for (int i = 1; i <= 3; ++i) {
        BasisVector h = BasisVector::cartan(i);
        for (const auto& b : BasisVector::all()) {
            V expect;
            if (!b.is_cartan()) expect[b] = to_field(pairing(b.weight(), CartanElement::basis(i)));
            if (!(t.entry(h, b) == expect)) fail("(b) [H" + std::to_string(i) + ", " + basis_name(b) + "]");
        }
    }

    for (const auto& alpha : all_roots()) {
        BasisVector xa = BasisVector::root_vector(alpha);
        // (c) [X_a, X_-a] = sigma_a H_a
        int sigma = (alpha.is_odd() && !alpha.is_positive()) ? -1 : 1;
        V expect = field_cartan(ScalarA(sigma) * coroot(alpha));
        if (!(t.entry(xa, BasisVector::root_vector(-alpha)) == expect))
            fail("(c) [X_a, X_-a] for a = " + root_name(alpha.eps));

        // (d) structure constants on root pairs
        for (const auto& beta : all_roots()) {
            if (beta == -alpha) continue;
            BasisVector xb = BasisVector::root_vector(beta);
            const V& e = t.entry(xa, xb);
            Weight s = alpha.eps + beta.eps;
            std::string pair = root_name(alpha.eps) + ", " + root_name(beta.eps);
            if (!is_root(s)) {
                if (!e.is_zero()) fail("(d.1) nonzero bracket " + pair);
                continue;
            }
            BasisVector xs = BasisVector::root_vector(Root{s});
            V rest = e;
            rest[xs] = S(0);
            if (!rest.is_zero()) fail("(d) grading " + pair);
            S c = e[xs];
            bool alpha_iso = bilinear_form(alpha.eps, alpha.eps).is_zero();
            bool beta_iso = bilinear_form(beta.eps, beta.eps).is_zero();
            if (!alpha_iso || !beta_iso) {
                int r = root_string(beta, alpha).r;
                S bound = to_field(ScalarA(r + 1));
                if (!(c * c == bound * bound)) fail("(d.2) |c| != r+1 for " + pair);
            } else {
                S v = to_field(pairing(beta.eps, coroot(alpha)));
                if (!(c * c == v * v)) fail("(d.3) c != +-b(H_a) for " + pair);
            }
        }
    }
    return rep;
}

}  // namespace

AxiomReport verify_chevalley_axioms(const StructureTable& t)
{
    return verify_axioms(t, [](const ScalarA& s) { return s; }, true);
}

AxiomReport verify_chevalley_axioms(const BasicStructureTable<Rational>& t, const Rational& a0)
{
    return verify_axioms(t, [&](const ScalarA& s) { return specialize(s, a0); }, false);
}

// ---------------------------------------------------------------- adjoint

Matrix<ScalarA> adjoint_matrix(const SuperVector& x)
{
    const auto& t = structure_table();
    Matrix<ScalarA> m(kDim);
    for (const auto& b : BasisVector::all()) {
        SuperVector col = t.bracket(x, SuperVector::unit(b));
        for (int i = 0; i < kDim; ++i) m(i, b.index()) = col.c[i];
    }
    return m;
}

Matrix<ScalarA> adjoint_matrix(const BasisVector& x) { return adjoint_matrix(SuperVector::unit(x)); }

std::map<Weight, std::vector<BasisVector>> weight_decomposition()
{
    std::map<Weight, std::vector<BasisVector>> w;
    for (const auto& b : BasisVector::all()) w[b.weight()].push_back(b);
    return w;
}

Sl2Report check_sl2_triples()
{
    const auto& t = structure_table();
    Sl2Report rep;
    auto check = [&](const std::string& name, const SuperVector& e, const SuperVector& f, const SuperVector& h) {
        ++rep.triples_checked;
        if (!(t.bracket(e, f) == h)) rep.violations.push_back(name + ": [e,f] != h");
        if (!(t.bracket(h, e) == ScalarA(2) * e)) rep.violations.push_back(name + ": [h,e] != 2e");
        if (!(t.bracket(h, f) == ScalarA(-2) * f)) rep.violations.push_back(name + ": [h,f] != -2f");
    };
    SuperVector e_long = presentation_vector("e1123'"), f_long = presentation_vector("f3211'");
    ScalarA inv = ScalarA(PolyA::one_plus_a()).inverse();
    SuperVector h_long = inv * (ScalarA(2) * presentation_vector("h1") - presentation_vector("h2") -
                                ScalarA::a() * presentation_vector("h3"));
    check("long", inv * e_long, ScalarA(-1) * inv * f_long, h_long);
    check("second", presentation_vector("e2"), presentation_vector("f2"), presentation_vector("h2"));
    check("third", presentation_vector("e3"), presentation_vector("f3"), presentation_vector("h3"));
    return rep;
}

std::vector<int> string_signs(const Root& alpha, const Root& gamma)
{
    if (!alpha.is_even() || !gamma.is_odd()) throw std::invalid_argument("string_signs needs even alpha, odd gamma");
    const auto& t = structure_table();
    RootString s = root_string(gamma, alpha);
    std::vector<int> signs;
    for (int k = 1; k <= s.q; ++k) {
        Root from{gamma.eps + (k - 1) * alpha.eps};
        Root to{gamma.eps + k * alpha.eps};
        ScalarA c = t.entry(BasisVector::root_vector(alpha), BasisVector::root_vector(from))[BasisVector::root_vector(to)];
        ScalarA e = c * ScalarA(make_rational(1, s.r + k));
        if (e == ScalarA(1)) signs.push_back(1);
        else if (e == ScalarA(-1)) signs.push_back(-1);
        else throw std::logic_error("string sign is not +-1 for " + root_name(alpha.eps) + ", " + root_name(gamma.eps));
    }
    return signs;
}

}  // namespace superchevalley
