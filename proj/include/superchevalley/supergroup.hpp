#pragma once

#include "superchevalley/carriers.hpp"
#include "superchevalley/matrix.hpp"
#include "superchevalley/roots.hpp"
#include "superchevalley/superalgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superchevalley {

using CarrierMatrix = Matrix<CarrierElement>;

CarrierMatrix identity_matrix(const Carrier& c);
// Matrix of c (x) X acting on the adjoint module: entry (i,j) is (-1)^(p(c) p(i)) c X_ij.
CarrierMatrix lift(const Matrix<ScalarA>& x, const CarrierElement& c);
bool is_even_supermatrix(const CarrierMatrix& m);
bool is_identity(const CarrierMatrix& m);

struct GeneratorRecord {
    enum class Kind { AdditiveEven, AdditiveOdd, TorusClassical, TorusAType };

    Kind kind = Kind::AdditiveEven;
    Root root{};
    CartanElement h{};
    CarrierElement param;

    static GeneratorRecord additive_even(const Root& r, const CarrierElement& t);
    static GeneratorRecord additive_odd(const Root& r, const CarrierElement& theta);
    static GeneratorRecord torus_classical(const CartanElement& h, const CarrierElement& t);
    static GeneratorRecord torus_a_type(const CartanElement& h, const CarrierElement& t);

    bool is_odd() const { return kind == Kind::AdditiveOdd; }
    bool is_trivial() const;
    GeneratorRecord inverse() const;
    bool operator==(const GeneratorRecord&) const = default;
};

using GroupWord = std::vector<GeneratorRecord>;

class GroupElement {
public:
    explicit GroupElement(const Carrier& c);
    GroupElement(const Carrier& c, CarrierMatrix m, CarrierMatrix inv, GroupWord word = {});
    static GroupElement from_record(const Carrier& c, const GeneratorRecord& r);
    static GroupElement from_word(const Carrier& c, const GroupWord& w);

    const Carrier& carrier() const { return carrier_; }
    const CarrierMatrix& matrix() const { return matrix_; }
    const CarrierMatrix& inverse_matrix() const { return inverse_; }
    const GroupWord& word() const { return word_; }

    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
    bool operator==(const GroupElement& o) const { return matrix_ == o.matrix_; }

private:
    Carrier carrier_;
    CarrierMatrix matrix_;
    CarrierMatrix inverse_;
    GroupWord word_;
};

GroupElement x_even(const Carrier& c, const Root& alpha, const CarrierElement& t);
GroupElement x_odd(const Carrier& c, const Root& gamma, const CarrierElement& theta);
GroupElement h_classical(const Carrier& c, const CartanElement& h, const CarrierElement& t);
GroupElement h_atype(const Carrier& c, const CartanElement& h, const CarrierElement& t);
GroupElement commutator(const GroupElement& g, const GroupElement& h);
GroupElement conjugate_by_torus(const GroupElement& h, const GroupElement& x);

// Structure data used by the commutator formulas.
// [X_gamma, X_delta] = constant * X_(gamma+delta) for gamma+delta a root.
ScalarA odd_bracket_constant(const Root& gamma, const Root& delta);
// [X_gamma, X_-gamma] as a Cartan element.
CartanElement odd_bracket_cartan(const Root& gamma);
// ad(X_alpha)^(s) X_gamma = coefficient * X_(gamma+s alpha); zero if gamma+s alpha is not a root.
ScalarA divided_ad_coefficient(const Root& alpha, const Root& gamma, int s);
// Constants with (x_gamma(th), x_alpha(t)) = prod_s x_(gamma+s alpha)(c_s t^s th), s = 1..q.
std::vector<ScalarA> commutator_constants(const Root& gamma, const Root& alpha);

struct BigCellFactorization {
    Carrier carrier;
    GroupWord g0;
    CarrierMatrix g0_matrix;
    std::vector<std::pair<Root, CarrierElement>> odd_negative;
    std::vector<std::pair<Root, CarrierElement>> odd_positive;

    GroupWord as_word() const;
    CarrierMatrix product_matrix() const;
};

enum class RewriteOrder { LeftmostFirst, RightmostFirst };

// Position of an odd root in the fixed order: negative odd roots, then positive odd roots.
int odd_root_rank(const Root& r);
BigCellFactorization factorize_big_cell(const Carrier& c, const GroupWord& w,
                                        RewriteOrder order = RewriteOrder::LeftmostFirst);

struct SuiteReport {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

SuiteReport check_lemma_a(const Carrier& c);
SuiteReport check_lemma_b(const Carrier& c);
SuiteReport check_lemma_c(const Carrier& c);
std::vector<SuiteReport> check_lemmas(int odd_vars);
SuiteReport check_torus_identities(const Carrier& c);
SuiteReport check_semidirect(const Carrier& c, unsigned long seed = 1, int samples = 20);
SuiteReport lie_functor_check();

// Parameters used by the suites: an even unit, an element of 1 + N(A0), odd elements.
struct SampleParameters {
    CarrierElement unit;
    CarrierElement pa_unit;
    CarrierElement even;
    CarrierElement odd1;
    CarrierElement odd2;
};
SampleParameters sample_parameters(const Carrier& c);

std::string render(const GeneratorRecord& r, bool theta_names = false);
std::string render(const GroupWord& w, bool theta_names = false);

}  // namespace superchevalley
