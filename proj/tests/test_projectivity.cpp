#include <doctest.h>

#include <random>

#include "cellfrob/fixtures.hpp"
#include "cellfrob/projectivity.hpp"

using namespace cellfrob;

namespace {

Matrix<Rational> random_endo(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix<Rational> t(m, m, Rational());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t.at(i, j) = Rational(dist(rng));
    return t;
}

} // namespace

TEST_CASE("averaging the identity on the matrix algebra gives 2 id") {
    auto fx = matrix_algebra(2, Rational(1));
    auto db = dual_bases(fx.alg);
    auto mod = cell_module(fx.alg, fx.cd, 0, CellFlavor::C);
    auto img = averaging(fx.alg, db, mod, Matrix<Rational>::identity(2, Rational(1)));
    CHECK(img == Rational(2) * Matrix<Rational>::identity(2, Rational(1)));
    SUBCASE("theta = 0 maps to 0") {
        CHECK(averaging(fx.alg, db, mod, Matrix<Rational>(2, 2, Rational())).is_zero());
    }
}

TEST_CASE("averaging vanishes on the trivial module of the dual numbers") {
    auto fx = dual_numbers(Rational(1));
    auto db = dual_bases(fx.alg);
    auto mod = cell_module(fx.alg, fx.cd, 1, CellFlavor::C); // 1-dim trivial module
    Matrix<Rational> theta(1, 1, Rational(3));
    CHECK(averaging(fx.alg, db, mod, theta).is_zero());
}

TEST_CASE("averaging properties on randomized endomorphisms") {
    std::mt19937 rng(777);
    auto run = [&](const auto& fx, std::size_t cell) {
        auto db = dual_bases(fx.alg);
        auto mod = cell_module(fx.alg, fx.cd, cell, CellFlavor::C);
        for (int round = 0; round < 50; ++round) {
            Matrix<Rational> theta = random_endo(rng, mod.dim);
            // averaging() itself asserts basis independence and that the
            // image commutes with the action
            Matrix<Rational> img = averaging(fx.alg, db, mod, theta);
            // I(phi o theta) = I(phi) o theta for theta in End_A(M):
            // scalar multiples of the identity always qualify
            Matrix<Rational> sc = Rational(round % 5 - 2) * Matrix<Rational>::identity(mod.dim, Rational(1));
            Matrix<Rational> lhs = averaging(fx.alg, db, mod, theta * sc);
            CHECK(lhs == img * sc);
            Matrix<Rational> rhs = averaging(fx.alg, db, mod, sc * theta);
            CHECK(rhs == sc * img);
        }
    };
    run(matrix_algebra(2, Rational(1)), 0);
    run(koenig_xi(Rational(2)), 1);
    run(dual_numbers(Rational(1)), 1);
}

TEST_CASE("averaging composition identities with genuine module endomorphisms") {
    // I(phi o theta) = I(phi) o theta and I(theta o pi) = theta o I(pi) for
    // theta in End_A(M); random combinations of a commutant basis supply theta
    std::mt19937 rng(90125);
    std::uniform_int_distribution<long> dist(-3, 3);
    auto run = [&](const auto& fx, const CellModule<Rational>& mod) {
        auto db = dual_bases(fx.alg);
        auto comm = endomorphism_algebra_basis(fx.alg, mod);
        REQUIRE(!comm.empty());
        for (int round = 0; round < 50; ++round) {
            Matrix<Rational> theta(mod.dim, mod.dim, Rational());
            for (const auto& b : comm) theta = theta + Rational(dist(rng)) * b;
            Matrix<Rational> phi = random_endo(rng, mod.dim);
            CHECK(averaging(fx.alg, db, mod, phi * theta) ==
                  averaging(fx.alg, db, mod, phi) * theta);
            CHECK(averaging(fx.alg, db, mod, theta * phi) ==
                  theta * averaging(fx.alg, db, mod, phi));
        }
    };
    auto kx = koenig_xi(Rational(2));
    run(kx, cell_module(kx.alg, kx.cd, 1, CellFlavor::C));
    auto dn = dual_numbers(Rational(1));
    run(dn, regular_module(dn.alg));
    auto mx = matrix_algebra(2, Rational(1));
    run(mx, cell_module(mx.alg, mx.cd, 0, CellFlavor::C));
}

TEST_CASE("gaschutz oracle on the stated examples") {
    auto mx = matrix_algebra(2, Rational(1));
    auto mdb = dual_bases(mx.alg);
    CHECK(gaschutz_oracle(mx.alg, mdb, cell_module(mx.alg, mx.cd, 0, CellFlavor::C)));

    auto dn = dual_numbers(Rational(1));
    auto ddb = dual_bases(dn.alg);
    CHECK(!gaschutz_oracle(dn.alg, ddb, cell_module(dn.alg, dn.cd, 1, CellFlavor::C)));

    CellModule<Rational> zero_mod;
    zero_mod.dim = 0;
    zero_mod.action.assign(dn.alg.dim, Matrix<Rational>());
    CHECK(gaschutz_oracle(dn.alg, ddb, zero_mod));
}

TEST_CASE("splitting oracle on the stated examples") {
    auto mx = matrix_algebra(2, Rational(1));
    CHECK(splitting_oracle(mx.alg, cell_module(mx.alg, mx.cd, 0, CellFlavor::C)));

    auto dn = dual_numbers(Rational(1));
    CHECK(!splitting_oracle(dn.alg, cell_module(dn.alg, dn.cd, 1, CellFlavor::C)));

    // the regular module is free, hence projective
    CHECK(splitting_oracle(dn.alg, regular_module(dn.alg)));
    auto kx = koenig_xi(Rational(2));
    CHECK(splitting_oracle(kx.alg, regular_module(kx.alg)));
}

TEST_CASE("oracles agree on every cell module of every fixture, both flavors") {
    auto run = [](const auto& fx) {
        auto db = dual_bases(fx.alg);
        for (std::size_t c = 0; c < fx.cd.cell_count(); ++c)
            for (CellFlavor f : {CellFlavor::C, CellFlavor::d}) {
                auto mod = cell_module(fx.alg, fx.cd, c, f);
                CHECK(gaschutz_oracle(fx.alg, db, mod) == splitting_oracle(fx.alg, mod));
            }
        auto reg = regular_module(fx.alg);
        CHECK(gaschutz_oracle(fx.alg, db, reg));
        CHECK(splitting_oracle(fx.alg, reg));
    };
    run(koenig_xi(Rational(2)));
    run(dual_numbers(Rational(1)));
    run(matrix_algebra(2, Rational(1)));
    run(koenig_xi(Fp(5, 3)));
}

TEST_CASE("c-matrix on the stated examples") {
    auto kx = koenig_xi(Rational(2));
    auto kdb = dual_bases(kx.alg);
    CHECK(c_matrix(kx.alg, kx.cd, kdb, 2).is_zero()); // I_3 = [0]
    CHECK(c_matrix(kx.alg, kx.cd, kdb, 1).is_zero()); // G(2) = 0 annihilates
    auto mx = matrix_algebra(2, Rational(1));
    auto mdb = dual_bases(mx.alg);
    CHECK(c_matrix(mx.alg, mx.cd, mdb, 0) == Matrix<Rational>::identity(2, Rational(1)));
}

TEST_CASE("decide: koenig-xi has no projective cell module") {
    auto fx = koenig_xi(Rational(2));
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    for (std::size_t c = 0; c < 3; ++c) {
        auto v = decide(fx.alg, fx.cd, db, s4, c, CellFlavor::C);
        CHECK(v.criterion_c.verdict == Verdict::NotProjective);
        CHECK(!v.oracle_gaschutz);
        CHECK(!v.oracle_splitting);
        CHECK(v.criterion_k.verdict == Verdict::NotApplicable);
        CHECK(v.agreement);
    }
    // cell "3" is simple with G invertible: psi criterion applies and agrees
    auto top = decide(fx.alg, fx.cd, db, s4, 2, CellFlavor::C);
    CHECK(top.simplicity == Simplicity::Simple);
    CHECK(top.criterion_psi.verdict == Verdict::NotProjective);
    CHECK(!top.boundary_case);
    // cell "1" is simple with G = 0 but Psi != 0: the literal test misfires
    auto bottom = decide(fx.alg, fx.cd, db, s4, 0, CellFlavor::C);
    CHECK(bottom.simplicity == Simplicity::Simple);
    CHECK(bottom.criterion_psi.verdict == Verdict::Projective);
    CHECK(bottom.boundary_case);
    CHECK(bottom.agreement);
}

TEST_CASE("decide: the matrix algebra cell is projective by every route") {
    auto fx = matrix_algebra(2, Rational(1));
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    for (CellFlavor f : {CellFlavor::C, CellFlavor::d}) {
        auto v = decide(fx.alg, fx.cd, db, s4, 0, f);
        CHECK(v.simplicity == Simplicity::Simple);
        CHECK(v.criterion_c.verdict == Verdict::Projective);
        CHECK(v.criterion_psi.verdict == Verdict::Projective);
        CHECK(v.criterion_k.verdict == Verdict::Projective);
        CHECK(v.oracle_gaschutz);
        CHECK(v.oracle_splitting);
        CHECK(v.agreement);
        CHECK(!v.boundary_case);
    }
}

TEST_CASE("decide: dual numbers, both cells not projective, boundary flag raised") {
    auto fx = dual_numbers(Rational(1));
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    // top cell (of 1): Simple, G = [1], G' = [0], k = 0
    auto top = decide(fx.alg, fx.cd, db, s4, 1, CellFlavor::C);
    CHECK(top.simplicity == Simplicity::Simple);
    CHECK(top.criterion_c.verdict == Verdict::NotProjective);
    CHECK(top.criterion_psi.verdict == Verdict::NotProjective);
    CHECK(top.criterion_k.verdict == Verdict::NotProjective);
    CHECK(!top.oracle_gaschutz);
    CHECK(top.agreement);
    CHECK(!top.boundary_case);
    // bottom cell (of x): Simple with Psi = [1] but G = [0]: theorem boundary
    auto bottom = decide(fx.alg, fx.cd, db, s4, 0, CellFlavor::C);
    CHECK(bottom.simplicity == Simplicity::Simple);
    CHECK(bottom.criterion_psi.verdict == Verdict::Projective);
    CHECK(bottom.criterion_c.verdict == Verdict::NotProjective);
    CHECK(!bottom.oracle_gaschutz);
    CHECK(!bottom.oracle_splitting);
    CHECK(bottom.boundary_case);
    CHECK(bottom.agreement);
    // d flavor: the Lambda_0 test misfires on the top cell instead
    auto dtop = decide(fx.alg, fx.cd, db, s4, 1, CellFlavor::d);
    CHECK(dtop.simplicity == Simplicity::Simple);
    CHECK(dtop.criterion_psi.verdict == Verdict::Projective);
    CHECK(dtop.criterion_c.verdict == Verdict::NotProjective);
    CHECK(dtop.boundary_case);
    CHECK(dtop.agreement);
    auto dbottom = decide(fx.alg, fx.cd, db, s4, 0, CellFlavor::d);
    CHECK(dbottom.criterion_psi.verdict == Verdict::NotProjective);
    CHECK(dbottom.criterion_c.verdict == Verdict::NotProjective);
    CHECK(!dbottom.boundary_case);
    CHECK(dbottom.agreement);
}

TEST_CASE("W_C and W_d projectivity coincide on the section 4 fixtures") {
    auto run = [](const auto& fx) {
        auto db = dual_bases(fx.alg);
        for (std::size_t c = 0; c < fx.cd.cell_count(); ++c) {
            bool wc = splitting_oracle(fx.alg, cell_module(fx.alg, fx.cd, c, CellFlavor::C));
            bool wd = splitting_oracle(fx.alg, cell_module(fx.alg, fx.cd, c, CellFlavor::d));
            CHECK(wc == wd);
        }
    };
    run(matrix_algebra(2, Rational(1)));
    run(dual_numbers(Rational(1)));
}

TEST_CASE("simple invertible-Gram cells: criteria and oracles all agree") {
    auto fx = matrix_algebra(2, Rational(1));
    auto db = dual_bases(fx.alg);
    auto s4 = check_section4(fx.alg, fx.cd, db);
    auto v = decide(fx.alg, fx.cd, db, s4, 0, CellFlavor::C);
    Verdict oracle = v.oracle_gaschutz ? Verdict::Projective : Verdict::NotProjective;
    CHECK(v.criterion_c.verdict == oracle);
    CHECK(v.criterion_psi.verdict == oracle);
    CHECK(v.oracle_gaschutz == v.oracle_splitting);
}

TEST_CASE("schur extraction fails loudly when the image is not scalar") {
    // on the regular module of the dual numbers, I(E_00) = L_x E_00 + E_00 L_x
    // is strictly upper triangular and nonzero
    auto fx = dual_numbers(Rational(1));
    auto db = dual_bases(fx.alg);
    auto reg = regular_module(fx.alg);
    CHECK_THROWS_AS(schur_c_matrix(fx.alg, db, reg), SchurExtractionFailure);
}
