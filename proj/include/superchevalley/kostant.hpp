#pragma once

#include "superchevalley/matrix.hpp"
#include "superchevalley/roots.hpp"
#include "superchevalley/scalars.hpp"
#include "superchevalley/superalgebra.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace superchevalley {

using CartanDegrees = std::array<int, 3>;

// One factor of a PBW monomial: a divided power of a root vector (power 1 for odd roots)
// or a product binom(H1,n1) binom(H2,n2) binom(H3,n3).
struct PBWAtom {
    enum class Kind { RootPower, CartanProduct };

    Kind kind = Kind::CartanProduct;
    int root = -1;
    int power = 0;
    CartanDegrees degrees{};

    static PBWAtom root_power(const Root& r, int n);
    static PBWAtom cartan_product(const CartanDegrees& d);

    Root root_value() const { return all_roots()[root]; }
    bool is_identity() const;
    bool is_odd() const { return kind == Kind::RootPower && root_value().is_odd(); }
    // Position in the order odd- < even- < Cartan < even+ < odd+.
    int block() const;

    bool operator==(const PBWAtom&) const = default;
    std::strong_ordering operator<=>(const PBWAtom& o) const;
};

struct PBWMonomial {
    std::vector<PBWAtom> atoms;

    bool is_normal() const;
    bool operator==(const PBWMonomial&) const = default;
    auto operator<=>(const PBWMonomial&) const = default;
};

class PBWElement {
public:
    PBWElement() = default;
    static PBWElement one();
    static PBWElement monomial(const PBWMonomial& m, const ScalarA& c = 1);

    const std::map<PBWMonomial, ScalarA>& terms() const { return terms_; }
    void add(const PBWMonomial& m, const ScalarA& c);
    bool is_zero() const { return terms_.empty(); }
    ScalarA coefficient(const PBWMonomial& m) const;

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement x, const PBWElement& y) { return x += y; }
    friend PBWElement operator-(PBWElement x, const PBWElement& y) { return x -= y; }
    friend PBWElement operator*(const ScalarA& s, const PBWElement& x);
    bool operator==(const PBWElement&) const = default;

private:
    std::map<PBWMonomial, ScalarA> terms_;
};

// Input factor of a word: X_a^(n) for even a, X_g for odd g, or binom(H - shift, n).
struct GeneratorAtom {
    enum class Kind { DividedPower, OddVector, CartanBinomial };

    Kind kind = Kind::DividedPower;
    Root root{};
    int n = 1;
    CartanElement h{};
    ScalarA shift{};

    static GeneratorAtom divided_power(const Root& r, int n);
    static GeneratorAtom odd_vector(const Root& r);
    static GeneratorAtom cartan_binomial(const CartanElement& h, int n, const ScalarA& shift = ScalarA());
};

using GeneratorWord = std::vector<GeneratorAtom>;

enum class Strategy { LeftmostFirst, RightmostFirst };

PBWElement straighten(const GeneratorWord& w, Strategy s = Strategy::LeftmostFirst);
// Straightens an arbitrary (not necessarily ordered) product of PBW atoms.
PBWElement straighten_atoms(const std::vector<PBWAtom>& w, Strategy s = Strategy::LeftmostFirst);
PBWElement multiply(const PBWElement& x, const PBWElement& y, Strategy s = Strategy::LeftmostFirst);

// binom(H - shift, n) in the basis of products binom(H1,n1) binom(H2,n2) binom(H3,n3).
PBWElement expand_shifted_binomial(const CartanElement& h, const ScalarA& shift, int n);

bool is_Za_certified(const PBWElement& e);

struct TensorFactor {
    PBWMonomial monomial;
    std::vector<PBWAtom> even_part;
    std::vector<Root> odd_part;
    bool splits = false;
};
std::vector<TensorFactor> tensor_shape(const PBWElement& e);

Matrix<ScalarA> act_on_adjoint(const PBWAtom& a);
Matrix<ScalarA> act_on_adjoint(const GeneratorAtom& a);
Matrix<ScalarA> act_on_adjoint(const PBWElement& e);

std::string render(const PBWAtom& a);
std::string render(const PBWMonomial& m);
std::string render(const PBWElement& e);
std::string render(const GeneratorAtom& a);

}  // namespace superchevalley
