#include "generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace superchevalley;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, const std::function<Outcome()>& body)
{
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %s (%s) [%.2fs]\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string count(int bad, int total, const char* what)
{
    return std::to_string(bad) + " failures / " + std::to_string(total) + " " + what;
}

Matrix<ScalarA> product_of_atoms(const GeneratorWord& w)
{
    Matrix<ScalarA> m = Matrix<ScalarA>::identity(kDim);
    for (const auto& a : w) m = m * act_on_adjoint(a);
    return m;
}

bool matrix_in_Za(const Matrix<ScalarA>& m)
{
    for (const auto& e : m.entries())
        if (!in_Za(e)) return false;
    return true;
}

}  // namespace

int main()
{
    run(1, "Chevalley axioms", [] {
        auto rep = verify_chevalley_axioms(build_structure_table());
        return Outcome{rep.ok() && rep.entries_checked == 289,
                       std::to_string(rep.violations.size()) + " violations / " + std::to_string(rep.entries_checked) + " entries"};
    });

    run(2, "super-Jacobi", [] {
        auto rep = check_super_jacobi(structure_table());
        return Outcome{rep.ok() && rep.triples_checked == 4913, count(static_cast<int>(rep.failures.size()), rep.triples_checked, "triples")};
    });

    run(3, "integrality", [] {
        int bad_constants = 0;
        for (const auto& x : BasisVector::all())
            for (const auto& y : BasisVector::all())
                for (const auto& c : structure_table().entry(x, y).c) bad_constants += !in_Z_bracket_a(c);
        gen::Rng rng(1003);
        int bad_words = 0;
        for (int i = 0; i < 500; ++i) bad_words += !is_Za_certified(straighten(gen::kostant_word(rng, 6)));
        return Outcome{bad_constants == 0 && bad_words == 0,
                       std::to_string(bad_constants) + " constants outside Z[a], " + count(bad_words, 500, "words")};
    });

    run(4, "straightening confluence", [] {
        gen::Rng rng(1004);
        int bad = 0;
        for (int i = 0; i < 500; ++i) {
            GeneratorWord w = gen::kostant_word(rng, 6);
            bad += !(straighten(w, Strategy::LeftmostFirst) == straighten(w, Strategy::RightmostFirst));
        }
        return Outcome{bad == 0, count(bad, 500, "words")};
    });

    run(5, "representation soundness", [] {
        gen::Rng rng(1005);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            GeneratorWord w = gen::kostant_word(rng, 6);
            bad += !(act_on_adjoint(straighten(w)) == product_of_atoms(w));
        }
        int generators = 0, bad_generators = 0;
        for (const auto& r : all_roots()) {
            if (r.is_odd()) {
                ++generators;
                bad_generators += !matrix_in_Za(act_on_adjoint(GeneratorAtom::odd_vector(r)));
                continue;
            }
            for (int n = 0; n <= 4; ++n) {
                ++generators;
                bad_generators += !matrix_in_Za(act_on_adjoint(GeneratorAtom::divided_power(r, n)));
            }
        }
        for (int i = 1; i <= 3; ++i)
            for (int n = 0; n <= 4; ++n)
                for (long shift = -2; shift <= 2; ++shift) {
                    ++generators;
                    bad_generators += !matrix_in_Za(act_on_adjoint(GeneratorAtom::cartan_binomial(CartanElement::basis(i), n, shift)));
                }
        return Outcome{bad == 0 && bad_generators == 0,
                       count(bad, 200, "words") + ", " + count(bad_generators, generators, "generators")};
    });

    run(6, "commutator lemmas over 4 odd generators", [] {
        int checks = 0, bad = 0;
        std::string names;
        for (const auto& r : check_lemmas(4)) {
            checks += r.checks;
            bad += static_cast<int>(r.failures.size());
            names += (names.empty() ? "" : ",") + r.name;
        }
        return Outcome{bad == 0 && checks > 0, count(bad, checks, "identities") + " in " + names};
    });

    run(7, "big cell factorization", [] {
        Carrier c = Carrier::grassmann(6);
        gen::Rng rng(1007);
        int bad = 0;
        for (int i = 0; i < 100; ++i) {
            GroupWord w = gen::group_word(rng, c, 8);
            auto f = factorize_big_cell(c, w);
            bool ok = f.product_matrix() == GroupElement::from_word(c, w).matrix();
            ok = ok && f.odd_negative.size() <= 4 && f.odd_positive.size() <= 4;
            for (size_t j = 1; j < f.odd_negative.size(); ++j) ok = ok && odd_root_rank(f.odd_negative[j - 1].first) < odd_root_rank(f.odd_negative[j].first);
            for (size_t j = 1; j < f.odd_positive.size(); ++j) ok = ok && odd_root_rank(f.odd_positive[j - 1].first) < odd_root_rank(f.odd_positive[j].first);
            for (const auto& [r, t] : f.odd_negative) ok = ok && !r.is_positive();
            for (const auto& [r, t] : f.odd_positive) ok = ok && r.is_positive();
            auto again = factorize_big_cell(c, f.as_word());
            ok = ok && again.odd_negative == f.odd_negative && again.odd_positive == f.odd_positive && again.g0_matrix == f.g0_matrix;
            auto other = factorize_big_cell(c, w, RewriteOrder::RightmostFirst);
            ok = ok && other.odd_negative == f.odd_negative && other.odd_positive == f.odd_positive && other.g0_matrix == f.g0_matrix;
            bad += !ok;
        }
        return Outcome{bad == 0, count(bad, 100, "words")};
    });

    run(8, "torus-coroot identities", [] {
        auto r = check_torus_identities(Carrier::grassmann(4));
        return Outcome{r.ok() && r.checks > 0, count(static_cast<int>(r.failures.size()), r.checks, "identities")};
    });

    run(9, "group-like lemma", [] {
        bool ok = true;
        PolyA e(1);
        for (int k = 0; k <= 2; ++k) {
            ok = ok && check_grouplike(e, 8);
            e = e * PolyA::a();
        }
        auto coeffs = truncated_power_series_power(PolyA::a(), 8).coeffs;
        coeffs[4] += 1;
        bool mutant_rejected = !check_grouplike_series(coeffs, 8);
        return Outcome{ok && mutant_rejected, std::string("a^0, a^1, a^2 group-like: ") + (ok ? "true" : "false") +
                                                  ", corrupted series rejected: " + (mutant_rejected ? "true" : "false")};
    });

    run(10, "semidirect checks with square-zero odd part", [] {
        auto r = check_semidirect(Carrier::square_zero_odd(8), 1010);
        return Outcome{r.ok() && r.checks > 0, count(static_cast<int>(r.failures.size()), r.checks, "checks")};
    });

    run(11, "Lie functor", [] {
        auto r = lie_functor_check();
        int even = 0, odd = 0;
        for (const auto& b : BasisVector::all()) (b.parity() == Parity::Even ? even : odd)++;
        return Outcome{r.ok() && even == 9 && odd == 8,
                       count(static_cast<int>(r.failures.size()), r.checks, "checks") + ", dimension " + std::to_string(even) + "|" + std::to_string(odd)};
    });

    run(12, "specialization", [] {
        bool ok = true;
        std::string detail;
        for (const Rational& a0 : {Rational(2), Rational(3), Rational(-3), make_rational(1, 2)}) {
            auto t = specialize_table(structure_table(), a0);
            auto ax = verify_chevalley_axioms(t, a0);
            auto j = check_super_jacobi(t);
            ok = ok && ax.ok() && j.ok() && j.triples_checked == 4913;
            detail += "a=" + a0.get_str() + ": " + std::to_string(ax.violations.size()) + "+" + std::to_string(j.failures.size()) + " failures; ";
        }
        for (const Rational& bad : {Rational(0), Rational(-1)}) {
            bool rejected = false;
            try {
                specialize_table(structure_table(), bad);
            } catch (const std::exception&) {
                rejected = true;
            }
            ok = ok && rejected;
            detail += "a=" + bad.get_str() + (rejected ? " rejected; " : " accepted; ");
        }
        return Outcome{ok, detail.substr(0, detail.size() - 2)};
    });

    std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
