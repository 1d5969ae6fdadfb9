#include "superchevalley/carriers.hpp"
#include "superchevalley/kostant.hpp"
#include "superchevalley/scalars.hpp"
#include "superchevalley/superalgebra.hpp"
#include "superchevalley/supergroup.hpp"
#include "superchevalley/syntax.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

using namespace superchevalley;

namespace {

int odd_cap()
{
    const char* env = std::getenv("SUPERCHEVALLEY_ODD_CAP");
    if (!env || !*env) return kDefaultOddCap;
    try {
        int v = std::stoi(env);
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("SUPERCHEVALLEY_ODD_CAP must be a nonnegative integer, got '") + env + "'");
    }
}

Carrier grassmann_carrier(int odd_vars) { return Carrier::grassmann(odd_vars, odd_cap()); }

int print_report(const SuiteReport& r, bool json)
{
    if (json) {
        std::cout << report_json(r).dump(2) << "\n";
    } else {
        std::cout << r.name << ": " << r.failures.size() << " failures / " << r.checks << " checks\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
    return r.ok() ? 0 : 1;
}

int print_axioms(const AxiomReport& r, bool json)
{
    if (json) {
        nlohmann::json j{{"schema", 1},
                         {"suite", "chevalley axioms"},
                         {"entries", r.entries_checked},
                         {"violations", r.violations},
                         {"ok", r.ok()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.violations.size() << " violations / " << r.entries_checked << " entries\n";
        for (const auto& v : r.violations) std::cout << "  " << v << "\n";
    }
    return r.ok() ? 0 : 1;
}

int print_jacobi(const JacobiReport& r, bool json)
{
    if (json) {
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& t : r.failures) fails.push_back({basis_name(t[0]), basis_name(t[1]), basis_name(t[2])});
        nlohmann::json j{{"schema", 1}, {"suite", "super-jacobi"}, {"triples", r.triples_checked}, {"failures", fails}, {"ok", r.ok()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.failures.size() << " failures / " << r.triples_checked << " triples\n";
        for (const auto& t : r.failures)
            std::cout << "  " << basis_name(t[0]) << ", " << basis_name(t[1]) << ", " << basis_name(t[2]) << "\n";
    }
    return r.ok() ? 0 : 1;
}

template <class S, class ToScalar>
void print_table_text(const BasicStructureTable<S>& t, ToScalar to_scalar)
{
    for (const auto& x : BasisVector::all())
        for (const auto& y : BasisVector::all()) {
            if (y.index() < x.index()) continue;
            const auto& e = t.entry(x, y);
            if (e.is_zero()) continue;
            SuperVector v;
            for (int k = 0; k < kDim; ++k) v.c[k] = to_scalar(e.c[k]);
            std::cout << "[" << basis_name(x) << ", " << basis_name(y) << "] = " << render(v) << "\n";
        }
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "leftmost") return Strategy::LeftmostFirst;
    if (s == "rightmost") return Strategy::RightmostFirst;
    throw std::invalid_argument("unknown strategy '" + s + "' (use leftmost or rightmost)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chevalley bases, Kostant forms and Chevalley supergroups for D(2,1;a)"};
    app.require_subcommand(1);
    std::function<int()> action;
    std::string input;

    bool json = false;
    auto* verify = app.add_subcommand("verify-axioms", "Check the Chevalley basis axioms symbolically in a");
    verify->add_flag("--json", json, "Emit JSON");
    verify->callback([&] { action = [&] { return print_axioms(verify_chevalley_axioms(structure_table()), json); }; });

    auto* jacobi = app.add_subcommand("jacobi", "Check the super-Jacobi identity on all basis triples");
    jacobi->add_flag("--json", json, "Emit JSON");
    jacobi->callback([&] { action = [&] { return print_jacobi(check_super_jacobi(structure_table()), json); }; });

    auto* table = app.add_subcommand("table", "Print the structure constants");
    table->add_flag("--json", json, "Emit JSON");
    table->callback([&] {
        action = [&] {
            if (json) std::cout << table_json(structure_table()).dump(2) << "\n";
            else print_table_text(structure_table(), [](const ScalarA& s) { return s; });
            return 0;
        };
    });

    auto* roots = app.add_subcommand("roots", "List the roots with parities and coroots");
    roots->add_flag("--json", json, "Emit JSON");
    roots->callback([&] {
        action = [&] {
            if (json) {
                std::cout << roots_json().dump(2) << "\n";
                return 0;
            }
            for (const auto& r : all_roots())
                std::cout << root_name(r.eps) << "  (" << r.eps[0] << "," << r.eps[1] << "," << r.eps[2] << ")  "
                          << (r.is_even() ? "even" : "odd") << "  coroot " << render(cartan_vector(coroot(r))) << "\n";
            return 0;
        };
    });

    std::string bx, by;
    auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two elements");
    bracket_cmd->add_option("X", bx)->required();
    bracket_cmd->add_option("Y", by)->required();
    bracket_cmd->callback([&] {
        action = [&] {
            input = bx;
            SuperVector x = parse_super_vector(bx);
            input = by;
            SuperVector y = parse_super_vector(by);
            std::cout << render(bracket(x, y)) << "\n";
            return 0;
        };
    });

    std::string word, strategy = "leftmost";
    auto* straighten_cmd = app.add_subcommand("straighten", "Straighten a Kostant word into PBW normal form");
    straighten_cmd->add_option("WORD", word)->required();
    straighten_cmd->add_option("--strategy", strategy, "leftmost or rightmost")->capture_default_str();
    straighten_cmd->callback([&] {
        action = [&] {
            input = word;
            PBWElement e = straighten(parse_kostant_word(word), parse_strategy(strategy));
            std::cout << render(e) << "\n";
            return 0;
        };
    });

    int odd_vars = 4;
    auto* factorize = app.add_subcommand("factorize", "Big-cell factorization of a group word");
    factorize->add_option("WORD", word)->required();
    factorize->add_option("--odd-vars", odd_vars, "Number of odd generators of the Grassmann carrier")->capture_default_str();
    factorize->add_option("--strategy", strategy, "leftmost or rightmost")->capture_default_str();
    factorize->add_flag("--json", json, "Emit JSON");
    factorize->callback([&] {
        action = [&] {
            Carrier c = grassmann_carrier(odd_vars);
            input = word;
            GroupWord w = parse_group_word(word, c);
            RewriteOrder order = parse_strategy(strategy) == Strategy::LeftmostFirst ? RewriteOrder::LeftmostFirst
                                                                                     : RewriteOrder::RightmostFirst;
            BigCellFactorization f = factorize_big_cell(c, w, order);
            if (json) {
                nlohmann::json j = factorization_json(f);
                j["verified"] = true;
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            std::cout << "g0: " << render(f.g0) << "\n";
            GroupWord neg, pos;
            for (const auto& [r, p] : f.odd_negative) neg.push_back(GeneratorRecord::additive_odd(r, p));
            for (const auto& [r, p] : f.odd_positive) pos.push_back(GeneratorRecord::additive_odd(r, p));
            std::cout << "odd-: " << render(neg) << "\n";
            std::cout << "odd+: " << render(pos) << "\n";
            std::cout << "verified: true\n";
            return 0;
        };
    });

    auto* lemmas = app.add_subcommand("check-lemmas", "Commutator lemma suites over a Grassmann carrier");
    lemmas->add_option("--odd-vars", odd_vars, "Number of odd generators")->capture_default_str();
    lemmas->add_flag("--json", json, "Emit JSON");
    lemmas->callback([&] {
        action = [&] {
            Carrier c = grassmann_carrier(odd_vars);
            std::vector<SuiteReport> reps{check_lemma_a(c), check_lemma_b(c), check_lemma_c(c), check_torus_identities(c)};
            int code = 0;
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reps) {
                    arr.push_back(report_json(r));
                    code |= r.ok() ? 0 : 1;
                }
                std::cout << nlohmann::json{{"schema", 1}, {"suites", arr}}.dump(2) << "\n";
                return code;
            }
            for (const auto& r : reps) code |= print_report(r, false);
            return code;
        };
    });

    int k = 1, trunc = 8;
    auto* grouplike = app.add_subcommand("grouplike", "Check that (1+x)^(a^k) is group-like up to a truncation degree");
    grouplike->add_option("--k", k, "Exponent of a")->capture_default_str();
    grouplike->add_option("--trunc", trunc, "Truncation degree")->capture_default_str();
    grouplike->callback([&] {
        action = [&] {
            if (k < 0) throw std::invalid_argument("--k must be nonnegative");
            PolyA exponent = PolyA(1);
            for (int i = 0; i < k; ++i) exponent = exponent * PolyA::a();
            bool ok = check_grouplike(exponent, trunc);
            std::cout << "group-like: " << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        };
    });

    auto* lie = app.add_subcommand("lie-check", "Lie functor check over dual numbers");
    lie->add_flag("--json", json, "Emit JSON");
    lie->callback([&] {
        action = [&] {
            int even = 0, odd = 0;
            for (const auto& b : BasisVector::all()) (b.parity() == Parity::Even ? even : odd)++;
            SuiteReport r = lie_functor_check();
            if (!json) std::cout << "dimension " << even << "|" << odd << "\n";
            return print_report(r, json);
        };
    });

    std::string a_value;
    auto* special = app.add_subcommand("specialize", "Run a command with a specialized to a rational number");
    special->add_option("--a", a_value, "Value P/Q of the parameter")->required();
    special->require_subcommand(1);
    auto specialized = [&]() -> std::pair<Rational, BasicStructureTable<Rational>> {
        input = a_value;
        Rational a0 = parse_rational(a_value);
        if (a0 == 0 || a0 == -1) throw std::domain_error("a = " + a0.get_str() + " is excluded (a must not be 0 or -1)");
        return {a0, specialize_table(structure_table(), a0)};
    };
    auto* s_verify = special->add_subcommand("verify-axioms", "Axioms at the specialized value");
    s_verify->add_flag("--json", json, "Emit JSON");
    s_verify->callback([&] {
        action = [&] {
            auto [a0, t] = specialized();
            return print_axioms(verify_chevalley_axioms(t, a0), json);
        };
    });
    auto* s_jacobi = special->add_subcommand("jacobi", "Super-Jacobi at the specialized value");
    s_jacobi->add_flag("--json", json, "Emit JSON");
    s_jacobi->callback([&] {
        action = [&] {
            auto [a0, t] = specialized();
            return print_jacobi(check_super_jacobi(t), json);
        };
    });
    auto* s_table = special->add_subcommand("table", "Structure constants at the specialized value");
    s_table->add_flag("--json", json, "Emit JSON");
    s_table->callback([&] {
        action = [&] {
            auto [a0, t] = specialized();
            if (json) std::cout << table_json(t, a0).dump(2) << "\n";
            else print_table_text(t, [](const Rational& s) { return ScalarA(s); });
            return 0;
        };
    });
    auto* s_bracket = special->add_subcommand("bracket", "Bracket at the specialized value");
    s_bracket->add_option("X", bx)->required();
    s_bracket->add_option("Y", by)->required();
    s_bracket->callback([&] {
        action = [&] {
            auto [a0, t] = specialized();
            input = bx;
            SuperVector x = parse_super_vector(bx);
            input = by;
            SuperVector y = parse_super_vector(by);
            BasicSuperVector<Rational> xs, ys;
            for (int i = 0; i < kDim; ++i) {
                xs.c[i] = specialize(x.c[i], a0);
                ys.c[i] = specialize(y.c[i], a0);
            }
            auto v = t.bracket(xs, ys);
            SuperVector out;
            for (int i = 0; i < kDim; ++i) out.c[i] = ScalarA(v.c[i]);
            std::cout << render(out) << "\n";
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return action ? action() : 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.annotate(input) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
