// Acceptance suite: every criterion is exact (tolerance zero) and prints one
// PASS/FAIL line.  The process exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "cellfrob/fixtures.hpp"
#include "cellfrob/projectivity.hpp"
#include "cellfrob/report.hpp"

using namespace cellfrob;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << note << "\n";
    if (!ok) ++failures;
}

template <FieldScalar K>
bool koenig_xi_reproduction(const K& lam) {
    auto fx = koenig_xi(lam);
    if (!validate_algebra(fx.alg).ok()) return false;
    if (!validate_cellular(fx.alg, fx.cd).ok()) return false;
    auto db = dual_bases(fx.alg);

    // left dual basis (1; d, c/lam, b, a; bc) against basis (bc; a,b,c,d; 1)
    K zero = lam.zero(), one = lam.one();
    std::vector<Vec<K>> expected(6, Vec<K>(6, zero));
    expected[0][5] = one;              // dual of bc is 1
    expected[1][4] = one;              // dual of a is d
    expected[2][3] = one / lam;        // dual of b is c/lam
    expected[3][2] = one;              // dual of c is b
    expected[4][1] = one;              // dual of d is a
    expected[5][0] = one;              // dual of 1 is bc
    for (std::size_t j = 0; j < 6; ++j)
        if (db.left_dual.column(j) != expected[j]) return false;

    if (!phi_gram(fx.alg, fx.cd, 0).is_zero()) return false;  // Phi_1 = 0
    if (!phi_gram(fx.alg, fx.cd, 1).is_zero()) return false;  // Phi_2 = 0
    if (simplicity_status(fx.alg, fx.cd, 2).status != Simplicity::Simple) return false;
    if (!psi_gram(fx.alg, fx.cd, db, 2).is_zero()) return false; // G'(3) = 0

    auto s4 = check_section4(fx.alg, fx.cd, db);
    for (std::size_t c = 0; c < 3; ++c) {
        auto v = decide(fx.alg, fx.cd, db, s4, c, CellFlavor::C);
        if (v.criterion_c.verdict != Verdict::NotProjective) return false;
        if (v.oracle_gaschutz || v.oracle_splitting) return false;
    }
    // and the report agrees with the headline claim
    ParsedInput input = ParsedInputT<K>{fx.alg, fx.cd};
    auto res = run_report(input);
    return res.exit_code == 0 &&
           res.doc["headline"].get<std::string>() == "none of the cell modules is projective";
}

template <FieldScalar K>
bool lemma31_all_pass(const Fixture<K>& fx) {
    auto db = dual_bases(fx.alg);
    for (const auto& item : lemma31_suite(fx.alg, fx.cd, db))
        if (!item.passed) return false;
    return true;
}

template <FieldScalar K>
bool section4_constants(const Fixture<K>& fx, const char* expected_k) {
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    if (!s4.hypotheses_ok()) return false;
    for (std::size_t c = 0; c < fx.cd.cell_count(); ++c) {
        auto k = k_lambda(fx.alg, fx.cd, db, s4, c);
        if (!k.defined) return false;
        if (expected_k && k.value.str() != expected_k) return false;
        Matrix<K> ke = k.value * Matrix<K>::identity(fx.cd.cell_size(c), fx.alg.one());
        if (phi_gram(fx.alg, fx.cd, c) * psi_gram(fx.alg, fx.cd, db, c) != ke) return false;
        if (c_matrix(fx.alg, fx.cd, db, c) != ke) return false;
    }
    return true;
}

template <FieldScalar K>
bool oracles_agree_everywhere(const Fixture<K>& fx) {
    auto db = dual_bases(fx.alg);
    for (std::size_t c = 0; c < fx.cd.cell_count(); ++c)
        for (CellFlavor f : {CellFlavor::C, CellFlavor::d}) {
            auto mod = cell_module(fx.alg, fx.cd, c, f);
            if (gaschutz_oracle(fx.alg, db, mod) != splitting_oracle(fx.alg, mod)) return false;
        }
    auto reg = regular_module(fx.alg);
    return gaschutz_oracle(fx.alg, db, reg) && splitting_oracle(fx.alg, reg);
}

bool averaging_properties(const Fixture<Rational>& fx) {
    auto db = dual_bases(fx.alg);
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (std::size_t c = 0; c < fx.cd.cell_count(); ++c) {
        auto mod = cell_module(fx.alg, fx.cd, c, CellFlavor::C);
        auto comm = endomorphism_algebra_basis(fx.alg, mod);
        for (int round = 0; round < 50; ++round) {
            Matrix<Rational> theta(mod.dim, mod.dim, Rational());
            for (std::size_t x = 0; x < mod.dim; ++x)
                for (std::size_t y = 0; y < mod.dim; ++y) theta.at(x, y) = Rational(dist(rng));
            // averaging() itself asserts basis-independence and that the
            // image is an endomorphism; a throw fails the criterion
            Matrix<Rational> img = averaging(fx.alg, db, mod, theta);
            (void)img;
            Matrix<Rational> endo(mod.dim, mod.dim, Rational());
            for (const auto& b : comm) endo = endo + Rational(dist(rng)) * b;
            Matrix<Rational> phi(mod.dim, mod.dim, Rational());
            for (std::size_t x = 0; x < mod.dim; ++x)
                for (std::size_t y = 0; y < mod.dim; ++y) phi.at(x, y) = Rational(dist(rng));
            if (averaging(fx.alg, db, mod, phi * endo) !=
                averaging(fx.alg, db, mod, phi) * endo)
                return false;
            if (averaging(fx.alg, db, mod, endo * phi) !=
                endo * averaging(fx.alg, db, mod, phi))
                return false;
        }
    }
    return true;
}

bool literal_test_boundary_case() {
    auto fx = dual_numbers(Rational(1));
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    auto v = decide(fx.alg, fx.cd, db, s4, 0, CellFlavor::C); // bottom cell, the cell of x
    if (v.simplicity != Simplicity::Simple) return false;
    if (psi_gram(fx.alg, fx.cd, db, 0).is_zero()) return false; // Psi != 0
    if (v.criterion_c.verdict != Verdict::NotProjective) return false;
    if (v.oracle_gaschutz || v.oracle_splitting) return false;
    if (!v.boundary_case) return false;
    // the report must carry the flag, not bury the disagreement
    ParsedInput input = ParsedInputT<Rational>{fx.alg, fx.cd};
    auto res = run_report(input);
    bool flagged = false;
    for (const auto& b : res.doc["status"]["boundary_cases"])
        if (b.get<std::string>() == "x/C") flagged = true;
    return flagged && res.doc["status"]["disagreements"].empty() && res.exit_code == 0;
}

template <FieldScalar K>
bool wc_wd_equivalence(const Fixture<K>& fx) {
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    for (std::size_t c = 0; c < fx.cd.cell_count(); ++c) {
        bool wc = splitting_oracle(fx.alg, cell_module(fx.alg, fx.cd, c, CellFlavor::C));
        bool wd = splitting_oracle(fx.alg, cell_module(fx.alg, fx.cd, c, CellFlavor::d));
        if (wc != wd) return false;
        // where the Lambda_0 criterion validly applies (simple W_d and
        // nondegenerate Psi-form), it must match the oracle verdict
        auto v = decide(fx.alg, fx.cd, db, s4, c, CellFlavor::d);
        bool gp_invertible = inverse(psi_gram(fx.alg, fx.cd, db, c)).has_value();
        if (v.criterion_psi.verdict != Verdict::NotApplicable && gp_invertible) {
            Verdict oracle = wd ? Verdict::Projective : Verdict::NotProjective;
            if (v.criterion_psi.verdict != oracle) return false;
        }
    }
    return true;
}

bool negative_inputs() {
    Json doc = Json::parse(serialize_spec(builtin_fixture("koenig-xi", {})));
    // broken associativity
    {
        Json bad = doc;
        bad["structure_constants"].push_back(Json::array({3, 2, 1, "1"}));
        auto res = run_report(parse_spec(bad.dump()));
        if (res.exit_code != 1 || res.doc.contains("cells")) return false;
        bool hit = false;
        for (const auto& chk : res.doc["validation"]["algebra"]["checks"])
            if (chk["name"] == "associativity" && !chk["passed"].get<bool>() &&
                chk.contains("witness"))
                hit = true;
        if (!hit) return false;
    }
    // wrong poset order
    {
        Json bad = doc;
        bad["poset"] = Json::array({Json::array({"3", "2"}), Json::array({"2", "1"})});
        auto res = run_report(parse_spec(bad.dump()));
        if (res.exit_code != 1 || res.doc.contains("cells")) return false;
        bool hit = false;
        for (const auto& chk : res.doc["validation"]["cellular"]["checks"])
            if (chk["name"] == "c3_cell_expansion" && !chk["passed"].get<bool>() &&
                chk.contains("witness"))
                hit = true;
        if (!hit) return false;
    }
    // non-bijective index map: a parse-level error
    {
        Json bad = doc;
        bad["index_map"][0][3] = bad["index_map"][1][3];
        try {
            parse_spec(bad.dump());
            return false;
        } catch (const ParseError&) {
        }
    }
    // degenerate tau
    {
        Json bad = doc;
        for (auto& t : bad["trace"]) t = "0";
        auto res = run_report(parse_spec(bad.dump()));
        if (res.exit_code != 1 || res.doc.contains("cells")) return false;
        bool hit = false;
        for (const auto& chk : res.doc["validation"]["algebra"]["checks"])
            if (chk["name"] == "trace_form_nondegenerate" && !chk["passed"].get<bool>()) hit = true;
        if (!hit) return false;
    }
    return true;
}

} // namespace

int main() {
    std::cout << "cellfrob acceptance suite (exact checks, tolerance zero)\n";
    std::cout << "---------------------------------------------------------\n";

    criterion("1. koenig-xi reproduction over Q (lambda = 2)",
              [] { return koenig_xi_reproduction(Rational(2)); });
    criterion("1. koenig-xi reproduction over Q (lambda = -3)",
              [] { return koenig_xi_reproduction(Rational(-3)); });
    criterion("1. koenig-xi reproduction over F_5 (lambda = 3)",
              [] { return koenig_xi_reproduction(Fp(5, 3)); });

    criterion("2. lemma31 identity suite on koenig-xi(2)",
              [] { return lemma31_all_pass(koenig_xi(Rational(2))); });
    criterion("2. lemma31 identity suite on dual-numbers",
              [] { return lemma31_all_pass(dual_numbers(Rational(1))); });
    criterion("2. lemma31 identity suite on matrix(2)",
              [] { return lemma31_all_pass(matrix_algebra(2, Rational(1))); });

    criterion("3. k-constants (G G' = kE, c-matrix = kE) with k = 1 on matrix(2)",
              [] { return section4_constants(matrix_algebra(2, Rational(1)), "1"); });
    criterion("3. k-constants (G G' = kE, c-matrix = kE) with k = 0 on dual-numbers",
              [] { return section4_constants(dual_numbers(Rational(1)), "0"); });

    criterion("4. oracle equivalence on koenig-xi(2)",
              [] { return oracles_agree_everywhere(koenig_xi(Rational(2))); });
    criterion("4. oracle equivalence on dual-numbers",
              [] { return oracles_agree_everywhere(dual_numbers(Rational(1))); });
    criterion("4. oracle equivalence on matrix(2)",
              [] { return oracles_agree_everywhere(matrix_algebra(2, Rational(1))); });
    criterion("4. oracle equivalence on koenig-xi over F_5",
              [] { return oracles_agree_everywhere(koenig_xi(Fp(5, 3))); });

    criterion("5. averaging properties, 50 random endomorphisms per koenig-xi cell",
              [] { return averaging_properties(koenig_xi(Rational(2))); });
    criterion("5. averaging properties, 50 random endomorphisms per dual-numbers cell",
              [] { return averaging_properties(dual_numbers(Rational(1))); });
    criterion("5. averaging properties, 50 random endomorphisms per matrix(2) cell",
              [] { return averaging_properties(matrix_algebra(2, Rational(1))); });

    criterion("6. literal simple-test boundary case flagged on the dual-numbers bottom cell",
              [] { return literal_test_boundary_case(); });

    criterion("7. W_C / W_d projectivity equivalence on matrix(2)",
              [] { return wc_wd_equivalence(matrix_algebra(2, Rational(1))); });
    criterion("7. W_C / W_d projectivity equivalence on dual-numbers",
              [] { return wc_wd_equivalence(dual_numbers(Rational(1))); });

    criterion("8. negative-input coverage (four corrupted fixtures)",
              [] { return negative_inputs(); });

    std::cout << "---------------------------------------------------------\n";
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
