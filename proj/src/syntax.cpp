#include "superchevalley/syntax.hpp"

#include <cctype>
#include <optional>

namespace superchevalley {

ParseError::ParseError(const std::string& message, size_t position)
    : std::runtime_error(message + " at column " + std::to_string(position + 1)), position_(position)
{
}

std::string ParseError::annotate(std::string_view input) const
{
    return std::string(what()) + "\n  " + std::string(input) + "\n  " + std::string(position_, ' ') + "^";
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Carrier& carrier) : s_(text), c_(carrier) {}

    [[noreturn]] void fail(const std::string& msg, std::optional<size_t> at = {}) const
    {
        throw ParseError(msg, at.value_or(p_));
    }

    void skip_ws()
    {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool at_end()
    {
        skip_ws();
        return p_ >= s_.size();
    }
    char peek()
    {
        skip_ws();
        return p_ < s_.size() ? s_[p_] : '\0';
    }
    bool accept(char ch)
    {
        if (peek() != ch) return false;
        ++p_;
        return true;
    }
    void expect(char ch)
    {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'" + found());
    }
    std::string found()
    {
        if (at_end()) return ", found end of input";
        return std::string(", found '") + s_[p_] + "'";
    }
    void finish()
    {
        if (!at_end()) fail("unexpected input" + found());
    }
    size_t pos() const { return p_; }

    std::string identifier()
    {
        skip_ws();
        size_t start = p_;
        if (p_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) {
            ++p_;
            while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
        }
        return std::string(s_.substr(start, p_ - start));
    }

    long integer()
    {
        skip_ws();
        size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (start == p_) fail("expected an integer" + found());
        if (p_ - start > 9) fail("integer too large", start);
        return std::stol(std::string(s_.substr(start, p_ - start)));
    }

    long signed_integer()
    {
        bool neg = accept('-');
        if (!neg) accept('+');
        long v = integer();
        return neg ? -v : v;
    }

    Rational number()
    {
        skip_ws();
        size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        return Rational(std::string(s_.substr(start, p_ - start)));
    }

    // root := [sign] term {sign term}; term := [int] ("a" | "e") digit
    Root root()
    {
        skip_ws();
        size_t start = p_;
        std::array<Rational, 3> simple{};
        bool any_simple = false;
        Weight eps{0, 0, 0};
        bool first = true;
        while (true) {
            int sign = 1;
            if (accept('-')) sign = -1;
            else if (!accept('+') && !first) break;
            first = false;
            skip_ws();
            long k = 1;
            if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) k = integer();
            skip_ws();
            size_t tpos = p_;
            if (p_ >= s_.size() || (s_[p_] != 'a' && s_[p_] != 'e')) fail("expected a1..a3 or e1..e3" + found());
            char kind = s_[p_++];
            if (p_ >= s_.size() || s_[p_] < '1' || s_[p_] > '3') fail("expected index 1..3 after '" + std::string(1, kind) + "'", tpos);
            int i = s_[p_++] - '1';
            if (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) fail("malformed root term", tpos);
            if (kind == 'a') {
                simple[i] += sign * k;
                any_simple = true;
            } else {
                eps[i] += static_cast<int>(sign * k);
            }
            char nx = peek();
            if (nx != '+' && nx != '-') break;
        }
        Weight w = eps;
        if (any_simple)
            for (int i = 0; i < 3; ++i) {
                if (!is_integer(simple[i])) fail("bad coefficient", start);
                w = w + static_cast<int>(simple[i].get_num().get_si()) * simple_root(i + 1).eps;
            }
        if (!is_root(w))
            fail("not a root: (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")", start);
        return to_root(w);
    }

    // ---------------------------------------------------------------- expressions

    ExprValue constant(const ScalarA& s) { return {CarrierElement(c_, s), SuperVector()}; }

    ExprValue expr()
    {
        ExprValue v;
        if (accept('-')) v = neg(term());
        else {
            accept('+');
            v = term();
        }
        while (true) {
            if (accept('+')) v = add(v, term());
            else if (accept('-')) v = add(v, neg(term()));
            else break;
        }
        return v;
    }

    ExprValue term()
    {
        ExprValue v = factor();
        while (true) {
            size_t at = pos();
            if (accept('*')) v = mul(v, factor(), at);
            else if (accept('/')) v = div(v, factor(), at);
            else break;
        }
        return v;
    }

    ExprValue factor()
    {
        if (accept('-')) return neg(factor());
        ExprValue b = primary();
        size_t at = pos();
        if (accept('^')) {
            bool paren = accept('(');
            long k = signed_integer();
            if (paren) expect(')');
            return power(b, k, at);
        }
        return b;
    }

    ExprValue primary()
    {
        skip_ws();
        size_t start = p_;
        if (accept('(')) {
            ExprValue v = expr();
            expect(')');
            return v;
        }
        if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) return constant(ScalarA(number()));
        std::string id = identifier();
        if (id.empty()) fail("expected an expression" + found());
        if (id == "a") return constant(ScalarA::a());
        if (id == "H" && accept('[')) {
            Root r = root();
            expect(']');
            return {CarrierElement(c_), cartan_vector(coroot(r))};
        }
        if (id == "H1" || id == "H2" || id == "H3")
            return {CarrierElement(c_), SuperVector::unit(BasisVector::cartan(id[1] - '0'))};
        if ((id == "E" || id == "F" || id == "X") && peek() == '(') {
            expect('(');
            Root r = root();
            expect(')');
            if (id == "F") r = -r;
            return {CarrierElement(c_), SuperVector::unit(BasisVector::root_vector(r))};
        }
        if (id == "binom") {
            expect('(');
            ExprValue v = expr();
            expect(',');
            long n = integer();
            expect(')');
            if (!v.linear.is_zero() || !v.constant.is_scalar()) fail("binom of a non-scalar outside a Kostant word", start);
            return constant(binomial(v.constant.constant_term(), static_cast<int>(n)));
        }
        if (auto idx = generator_index(id, "th"); idx) return odd_generator(*idx, start, id);
        if (auto idx = generator_index(id, "x"); idx) return odd_generator(*idx, start, id);
        if (id == "eps") return dual_generator(1, start, id);
        if (auto idx = generator_index(id, "eps"); idx) return dual_generator(*idx, start, id);
        fail("unknown identifier '" + id + "'", start);
    }

    static std::optional<int> generator_index(const std::string& id, const std::string& prefix)
    {
        if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return {};
        for (size_t i = prefix.size(); i < id.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(id[i]))) return {};
        if (id.size() - prefix.size() > 4) return {};
        return std::stoi(id.substr(prefix.size()));
    }

    ExprValue odd_generator(int i, size_t at, const std::string& id)
    {
        if (i < 1 || i > c_.odd)
            fail("unknown odd generator '" + id + "' (carrier has " + std::to_string(c_.odd) + ")", at);
        return {CarrierElement::odd_generator(c_, i), SuperVector()};
    }

    ExprValue dual_generator(int i, size_t at, const std::string& id)
    {
        if (i < 1 || i > c_.duals)
            fail("unknown dual generator '" + id + "' (carrier has " + std::to_string(c_.duals) + ")", at);
        return {CarrierElement::dual_generator(c_, i), SuperVector()};
    }

    static ExprValue neg(const ExprValue& x) { return {-x.constant, -x.linear}; }
    static ExprValue add(const ExprValue& x, const ExprValue& y) { return {x.constant + y.constant, x.linear + y.linear}; }

    ExprValue mul(const ExprValue& x, const ExprValue& y, size_t at)
    {
        bool xl = !x.linear.is_zero(), yl = !y.linear.is_zero();
        if (xl && yl) fail("cannot multiply two Lie superalgebra elements", at);
        ExprValue r{x.constant * y.constant, SuperVector()};
        if (xl) {
            if (!y.constant.is_scalar()) fail("Lie superalgebra elements take scalar coefficients only", at);
            r.linear = y.constant.constant_term() * x.linear;
        }
        if (yl) {
            if (!x.constant.is_scalar()) fail("Lie superalgebra elements take scalar coefficients only", at);
            r.linear = x.constant.constant_term() * y.linear;
        }
        return r;
    }

    ExprValue div(const ExprValue& x, const ExprValue& y, size_t at)
    {
        if (!y.linear.is_zero()) fail("cannot divide by a Lie superalgebra element", at);
        if (y.constant.is_zero()) fail("division by zero", at);
        if (y.constant.is_scalar()) {
            ScalarA s = y.constant.constant_term();
            if (!s.invertible()) fail("division by " + render(s) + ", which is not a unit", at);
            ScalarA inv = s.inverse();
            return {inv * x.constant, inv * x.linear};
        }
        if (!x.linear.is_zero()) fail("Lie superalgebra elements take scalar coefficients only", at);
        try {
            return {x.constant * invert_unit(y.constant), SuperVector()};
        } catch (const std::exception& e) {
            fail(e.what(), at);
        }
    }

    ExprValue power(const ExprValue& b, long k, size_t at)
    {
        if (k == 1) return b;
        if (!b.linear.is_zero()) fail("powers of Lie superalgebra elements are not expressions", at);
        try {
            return {integer_power(b.constant, k), SuperVector()};
        } catch (const std::exception& e) {
            fail(e.what(), at);
        }
    }

    // ---------------------------------------------------------------- words

    GeneratorAtom kostant_atom()
    {
        skip_ws();
        size_t start = p_;
        std::string id = identifier();
        if (id == "E" || id == "F" || id == "X") {
            expect('(');
            Root r = root();
            expect(')');
            if (id == "F") r = -r;
            long n = 1;
            if (accept('^')) {
                bool paren = accept('(');
                n = integer();
                if (paren) expect(')');
            }
            if (r.is_odd()) {
                if (n != 1) fail("odd root vectors take no divided powers", start);
                return GeneratorAtom::odd_vector(r);
            }
            return GeneratorAtom::divided_power(r, static_cast<int>(n));
        }
        if (id == "binom") {
            expect('(');
            size_t at = pos();
            ExprValue v = expr();
            expect(',');
            long n = integer();
            expect(')');
            for (int i = 3; i < kDim; ++i)
                if (!v.linear.c[i].is_zero()) fail("binom needs a Cartan element", at);
            if (!v.constant.is_scalar()) fail("binom shift must be a scalar", at);
            return GeneratorAtom::cartan_binomial(cartan_part(v.linear), static_cast<int>(n), -v.constant.constant_term());
        }
        if (id.empty()) fail("expected a Kostant generator" + found());
        fail("unknown Kostant generator '" + id + "'", start);
    }

    GeneratorWord kostant_word()
    {
        GeneratorWord w;
        if (peek() == '1') {
            ++p_;
            finish();
            return w;
        }
        while (true) {
            w.push_back(kostant_atom());
            if (at_end()) break;
            if (!accept('*') && !accept(';')) fail("expected '*' or ';' between generators" + found());
        }
        return w;
    }

    CartanElement cartan_argument()
    {
        size_t at = pos();
        ExprValue v = expr();
        for (int i = 3; i < kDim; ++i)
            if (!v.linear.c[i].is_zero()) fail("expected a Cartan element", at);
        if (!v.constant.is_zero()) fail("expected a Cartan element without constant term", at);
        return cartan_part(v.linear);
    }

    CarrierElement carrier_argument()
    {
        size_t at = pos();
        ExprValue v = expr();
        if (!v.linear.is_zero()) fail("expected a carrier element", at);
        return v.constant;
    }

    GeneratorRecord group_call()
    {
        skip_ws();
        size_t start = p_;
        std::string id = identifier();
        if (id != "xE" && id != "xO" && id != "hC" && id != "hA")
            fail(id.empty() ? "expected a group generator" + found() : "unknown group generator '" + id + "'", start);
        expect('(');
        Root r;
        CartanElement h;
        if (id[0] == 'x') r = root();
        else h = cartan_argument();
        expect(';');
        CarrierElement t = carrier_argument();
        expect(')');
        try {
            if (id == "xE") return GeneratorRecord::additive_even(r, t);
            if (id == "xO") return GeneratorRecord::additive_odd(r, t);
            if (id == "hC") return GeneratorRecord::torus_classical(h, t);
            return GeneratorRecord::torus_a_type(h, t);
        } catch (const std::exception& e) {
            fail(e.what(), start);
        }
    }

    GroupWord group_word()
    {
        GroupWord w;
        if (peek() == '1') {
            ++p_;
            finish();
            return w;
        }
        while (true) {
            w.push_back(group_call());
            if (at_end()) break;
            if (!accept('*') && !accept(';')) fail("expected '*' or ';' between generators" + found());
        }
        return w;
    }

private:
    std::string_view s_;
    size_t p_ = 0;
    Carrier c_;
};

}  // namespace

ExprValue parse_expression(std::string_view text, const Carrier& carrier)
{
    Parser p(text, carrier);
    ExprValue v = p.expr();
    p.finish();
    return v;
}

Root parse_root(std::string_view text)
{
    Parser p(text, Carrier::scalars());
    Root r = p.root();
    p.finish();
    return r;
}

ScalarA parse_scalar(std::string_view text)
{
    ExprValue v = parse_expression(text);
    if (!v.linear.is_zero()) throw ParseError("expected a scalar", 0);
    return v.constant.constant_term();
}

Rational parse_rational(std::string_view text)
{
    ScalarA s = parse_scalar(text);
    if (!s.is_constant()) throw ParseError("expected a rational number", 0);
    return s.constant_value();
}

CarrierElement parse_carrier_element(std::string_view text, const Carrier& carrier)
{
    ExprValue v = parse_expression(text, carrier);
    if (!v.linear.is_zero()) throw ParseError("expected a carrier element", 0);
    if (v.constant.is_zero()) return CarrierElement(carrier);
    return v.constant;
}

SuperVector parse_super_vector(std::string_view text)
{
    ExprValue v = parse_expression(text);
    if (!v.constant.is_zero()) throw ParseError("expected a Lie superalgebra element, found a scalar term", 0);
    return v.linear;
}

BasisVector parse_basis_vector(std::string_view text)
{
    SuperVector v = parse_super_vector(text);
    auto s = v.support();
    if (s.size() != 1 || !v[s[0]].is_one()) throw ParseError("expected a basis vector", 0);
    return s[0];
}

CartanElement parse_cartan(std::string_view text)
{
    Parser p(text, Carrier::scalars());
    CartanElement h = p.cartan_argument();
    p.finish();
    return h;
}

GeneratorWord parse_kostant_word(std::string_view text)
{
    Parser p(text, Carrier::scalars());
    return p.kostant_word();
}

GroupWord parse_group_word(std::string_view text, const Carrier& carrier)
{
    Parser p(text, carrier);
    return p.group_word();
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json basis_names()
{
    nlohmann::json names = nlohmann::json::array();
    for (const auto& b : BasisVector::all()) names.push_back(basis_name(b));
    return names;
}

template <class S, class ToScalar>
nlohmann::json brackets_json(const BasicStructureTable<S>& t, ToScalar to_scalar)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& x : BasisVector::all()) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto& y : BasisVector::all()) {
            const auto& e = t.entry(x, y);
            if (e.is_zero()) continue;
            SuperVector v;
            for (int k = 0; k < kDim; ++k) v.c[k] = to_scalar(e.c[k]);
            row[basis_name(y)] = render(v);
        }
        out[basis_name(x)] = row;
    }
    return out;
}

}  // namespace

nlohmann::json table_json(const StructureTable& t)
{
    return {{"schema", 1},
            {"parameter", "a"},
            {"dimension", {{"even", kEvenDim}, {"odd", kOddDim}}},
            {"basis", basis_names()},
            {"brackets", brackets_json(t, [](const ScalarA& s) { return s; })}};
}

nlohmann::json table_json(const BasicStructureTable<Rational>& t, const Rational& a0)
{
    return {{"schema", 1},
            {"parameter", a0.get_str()},
            {"dimension", {{"even", kEvenDim}, {"odd", kOddDim}}},
            {"basis", basis_names()},
            {"brackets", brackets_json(t, [](const Rational& s) { return ScalarA(s); })}};
}

nlohmann::json roots_json()
{
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : all_roots()) {
        roots.push_back({{"name", root_name(r.eps)},
                         {"eps", r.eps},
                         {"parity", r.is_even() ? "even" : "odd"},
                         {"positive", r.is_positive()},
                         {"vector", basis_name(BasisVector::root_vector(r))},
                         {"coroot", render(cartan_vector(coroot(r)))}});
    }
    return {{"schema", 1}, {"roots", roots}};
}

nlohmann::json factorization_json(const BigCellFactorization& f)
{
    auto odd_list = [](const std::vector<std::pair<Root, CarrierElement>>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& [r, p] : v) a.push_back({{"root", root_name(r.eps)}, {"param", render(p)}});
        return a;
    };
    nlohmann::json g0 = nlohmann::json::array();
    for (const auto& r : f.g0) g0.push_back(render(r));
    return {{"schema", 1},
            {"carrier", {{"odd", f.carrier.odd}, {"duals", f.carrier.duals}, {"description", f.carrier.describe()}}},
            {"g0", g0},
            {"odd_negative", odd_list(f.odd_negative)},
            {"odd_positive", odd_list(f.odd_positive)}};
}

nlohmann::json report_json(const SuiteReport& r)
{
    return {{"schema", 1}, {"suite", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}};
}

}  // namespace superchevalley
