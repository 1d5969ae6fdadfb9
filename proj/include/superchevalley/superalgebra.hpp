#pragma once

#include "superchevalley/matrix.hpp"
#include "superchevalley/roots.hpp"
#include "superchevalley/scalars.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superchevalley {

constexpr int kDim = 17;
constexpr int kEvenDim = 9;
constexpr int kOddDim = 8;

// Chevalley basis: H1, H2, H3 followed by root vectors in all_roots() order.
class BasisVector {
public:
    BasisVector() = default;
    static BasisVector cartan(int i);
    static BasisVector root_vector(const Root& r);
    static BasisVector from_index(int index);
    static const std::vector<BasisVector>& all();

    int index() const { return index_; }
    bool is_cartan() const { return index_ < 3; }
    int cartan_index() const;
    Root root() const;
    Parity parity() const;
    Weight weight() const;

    bool operator==(const BasisVector&) const = default;
    auto operator<=>(const BasisVector&) const = default;

private:
    explicit BasisVector(int index) : index_(index) {}
    int index_ = 0;
};

inline int parity_bit(const BasisVector& b) { return parity_bit(b.parity()); }

template <class S>
struct BasicSuperVector {
    std::array<S, kDim> c{};

    static BasicSuperVector unit(const BasisVector& b)
    {
        BasicSuperVector v;
        v.c[b.index()] = S(1);
        return v;
    }

    S& operator[](const BasisVector& b) { return c[b.index()]; }
    const S& operator[](const BasisVector& b) const { return c[b.index()]; }

    BasicSuperVector& operator+=(const BasicSuperVector& o)
    {
        for (int i = 0; i < kDim; ++i) c[i] += o.c[i];
        return *this;
    }
    BasicSuperVector& operator-=(const BasicSuperVector& o)
    {
        for (int i = 0; i < kDim; ++i) c[i] -= o.c[i];
        return *this;
    }
    BasicSuperVector operator-() const
    {
        BasicSuperVector r;
        for (int i = 0; i < kDim; ++i) r.c[i] = -c[i];
        return r;
    }
    friend BasicSuperVector operator+(BasicSuperVector x, const BasicSuperVector& y) { return x += y; }
    friend BasicSuperVector operator-(BasicSuperVector x, const BasicSuperVector& y) { return x -= y; }
    friend BasicSuperVector operator*(const S& s, BasicSuperVector x)
    {
        for (auto& v : x.c) v = s * v;
        return x;
    }
    bool operator==(const BasicSuperVector& o) const { return c == o.c; }

    bool is_zero() const
    {
        for (const auto& v : c)
            if (!superchevalley::is_zero(v)) return false;
        return true;
    }

    std::vector<BasisVector> support() const
    {
        std::vector<BasisVector> s;
        for (int i = 0; i < kDim; ++i)
            if (!superchevalley::is_zero(c[i])) s.push_back(BasisVector::from_index(i));
        return s;
    }

    BasicSuperVector part(Parity p) const
    {
        BasicSuperVector r;
        for (int i = 0; i < kDim; ++i)
            if (BasisVector::from_index(i).parity() == p) r.c[i] = c[i];
        return r;
    }
};

using SuperVector = BasicSuperVector<ScalarA>;

SuperVector cartan_vector(const CartanElement& h);
CartanElement cartan_part(const SuperVector& v);

template <class S>
class BasicStructureTable {
public:
    using Vector = BasicSuperVector<S>;

    const Vector& entry(const BasisVector& x, const BasisVector& y) const
    {
        return entries_[x.index() * kDim + y.index()];
    }
    Vector& entry(const BasisVector& x, const BasisVector& y) { return entries_[x.index() * kDim + y.index()]; }

    Vector bracket(const Vector& x, const Vector& y) const
    {
        Vector r;
        for (int i = 0; i < kDim; ++i) {
            if (superchevalley::is_zero(x.c[i])) continue;
            for (int j = 0; j < kDim; ++j) {
                if (superchevalley::is_zero(y.c[j])) continue;
                const Vector& e = entries_[i * kDim + j];
                S xy = x.c[i] * y.c[j];
                for (int k = 0; k < kDim; ++k)
                    if (!superchevalley::is_zero(e.c[k])) r.c[k] += xy * e.c[k];
            }
        }
        return r;
    }

    Vector bracket(const BasisVector& x, const BasisVector& y) const { return entry(x, y); }

private:
    std::array<Vector, kDim * kDim> entries_{};
};

using StructureTable = BasicStructureTable<ScalarA>;

// A bracket of two generators of the presentation, with value in the same names.
// Names: h1 h2 h3, e1 e2 e3 e12 e13 e123 e1123', f1 f2 f3 f21 f31 f321 f3211'.
struct BracketRelation {
    std::string x, y;
    std::vector<std::pair<ScalarA, std::string>> value;
};

SuperVector presentation_vector(const std::string& name);
std::vector<BracketRelation> presentation_brackets();
StructureTable build_structure_table(const std::vector<BracketRelation>& relations);
StructureTable build_structure_table();
const StructureTable& structure_table();

BasicStructureTable<Rational> specialize_table(const StructureTable& t, const Rational& a0);

SuperVector bracket(const SuperVector& x, const SuperVector& y);

struct AxiomReport {
    int entries_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

AxiomReport verify_chevalley_axioms(const StructureTable& t);
AxiomReport verify_chevalley_axioms(const BasicStructureTable<Rational>& t, const Rational& a0);

struct JacobiReport {
    int triples_checked = 0;
    std::vector<std::array<BasisVector, 3>> failures;
    bool ok() const { return failures.empty(); }
};

template <class S>
JacobiReport check_super_jacobi(const BasicStructureTable<S>& t)
{
    JacobiReport rep;
    const auto& basis = BasisVector::all();
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis) {
                int px = parity_bit(x), py = parity_bit(y), pz = parity_bit(z);
                using V = BasicSuperVector<S>;
                V t1 = t.bracket(V::unit(x), t.entry(y, z));
                V t2 = t.bracket(V::unit(y), t.entry(z, x));
                V t3 = t.bracket(V::unit(z), t.entry(x, y));
                V sum = ((px && pz) ? -t1 : t1);
                sum += ((py && px) ? -t2 : t2);
                sum += ((pz && py) ? -t3 : t3);
                ++rep.triples_checked;
                if (!sum.is_zero()) rep.failures.push_back({x, y, z});
            }
    return rep;
}

Matrix<ScalarA> adjoint_matrix(const BasisVector& x);
Matrix<ScalarA> adjoint_matrix(const SuperVector& x);

std::map<Weight, std::vector<BasisVector>> weight_decomposition();

struct Sl2Report {
    int triples_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
Sl2Report check_sl2_triples();

// Signs e_s with [X_alpha, X_(gamma+(s-1)alpha)] = e_s (r+s) X_(gamma+s alpha), s = 1..q.
std::vector<int> string_signs(const Root& alpha, const Root& gamma);

std::string basis_name(const BasisVector& b);
std::string render(const SuperVector& v);

}  // namespace superchevalley
