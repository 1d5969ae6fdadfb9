#pragma once

#include "superchevalley/carriers.hpp"
#include "superchevalley/kostant.hpp"
#include "superchevalley/roots.hpp"
#include "superchevalley/superalgebra.hpp"
#include "superchevalley/supergroup.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superchevalley {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position);
    size_t position() const { return position_; }
    // Message followed by the input with a caret under the offending column.
    std::string annotate(std::string_view input) const;

private:
    size_t position_;
};

// An expression: a carrier-valued constant plus a linear combination of basis vectors.
struct ExprValue {
    CarrierElement constant;
    SuperVector linear;
};

ExprValue parse_expression(std::string_view text, const Carrier& carrier = Carrier::scalars());
Root parse_root(std::string_view text);
ScalarA parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);
CarrierElement parse_carrier_element(std::string_view text, const Carrier& carrier);
SuperVector parse_super_vector(std::string_view text);
BasisVector parse_basis_vector(std::string_view text);
CartanElement parse_cartan(std::string_view text);
GeneratorWord parse_kostant_word(std::string_view text);
GroupWord parse_group_word(std::string_view text, const Carrier& carrier);

nlohmann::json table_json(const StructureTable& t);
nlohmann::json table_json(const BasicStructureTable<Rational>& t, const Rational& a0);
nlohmann::json roots_json();
nlohmann::json factorization_json(const BigCellFactorization& f);
nlohmann::json report_json(const SuiteReport& r);

}  // namespace superchevalley
