#ifndef CELLFROB_PROJECTIVITY_HPP
#define CELLFROB_PROJECTIVITY_HPP

#include <string>
#include <vector>

#include "cellfrob/dual_cellular.hpp"

namespace cellfrob {

/// I(theta) = sum_i rho(a_i) theta rho(D_i).  The alternate expansion over
/// the right dual basis must agree (basis independence), and the result must
/// commute with the action; both are asserted on every call.
template <FieldScalar K>
Matrix<K> averaging(const AlgebraSpec<K>& alg, const DualBases<K>& db, const CellModule<K>& mod,
                    const Matrix<K>& theta) {
    if (theta.rows() != mod.dim || theta.cols() != mod.dim)
        throw std::invalid_argument("averaging: endomorphism has wrong dimensions");
    Matrix<K> left(mod.dim, mod.dim, alg.zero());
    Matrix<K> right(mod.dim, mod.dim, alg.zero());
    for (std::size_t i = 0; i < alg.dim; ++i) {
        left = left + mod.action[i] * theta * mod.act(db.left_dual.column(i), alg.zero());
        right = right + mod.act(db.right_dual.column(i), alg.zero()) * theta * mod.action[i];
    }
    if (left != right)
        throw ConsistencyError("averaging operator is not basis independent");
    for (std::size_t i = 0; i < alg.dim; ++i)
        if (left * mod.action[i] != mod.action[i] * left)
            throw ConsistencyError("I(theta) fails to commute with the action of " +
                                   alg.basis_labels[i]);
    return left;
}

/// Gaschuetz-Ikeda criterion, decided exactly: the module is projective iff
/// id lies in the image of theta -> I(theta) on the full endomorphism space.
/// Works for any module, simple or not.
template <FieldScalar K>
bool gaschutz_oracle(const AlgebraSpec<K>& alg, const DualBases<K>& db, const CellModule<K>& mod) {
    std::size_t m = mod.dim;
    if (m == 0) return true; // identity of the zero module is vacuously attained
    Matrix<K> big(m * m, m * m, alg.zero());
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Matrix<K> theta(m, m, alg.zero());
            theta.at(p, q) = alg.one();
            Matrix<K> img = averaging(alg, db, mod, theta);
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y)
                    big.at(x * m + y, p * m + q) = img.at(x, y);
        }
    Vec<K> rhs(m * m, alg.zero());
    for (std::size_t x = 0; x < m; ++x) rhs[x * m + x] = alg.one();
    return solve_affine(big, rhs).has_value();
}

/// Frobenius-free ground truth: the module is projective iff the canonical
/// surjection pi : A^m -> M, e_j -> v_j, admits an A-equivariant section.
/// Equivariance and pi sigma = id are encoded as one exact linear system in
/// the entries of sigma.
template <FieldScalar K>
bool splitting_oracle(const AlgebraSpec<K>& alg, const CellModule<K>& mod) {
    std::size_t m = mod.dim;
    if (m == 0) return true;
    std::size_t n = alg.dim;
    std::size_t unknowns = n * m * m; // sigma is an (n m) x m matrix
    std::vector<Matrix<K>> lmat;
    lmat.reserve(n);
    for (std::size_t i = 0; i < n; ++i) lmat.push_back(alg.left_mult_matrix(i));

    std::vector<Vec<K>> rows;
    std::vector<K> rhs_entries;
    Vec<K> row(unknowns, alg.zero());
    auto flush = [&](const K& rhs) {
        bool zero = rhs.is_zero();
        for (const K& x : row)
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) {
            rows.push_back(row);
            rhs_entries.push_back(rhs);
        }
        for (K& x : row) x = alg.zero();
    };

    // rho_free(a_i) sigma = sigma rho(a_i), free-module index f = k*m + j'
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t kp = 0; kp < n; ++kp)
            for (std::size_t jp = 0; jp < m; ++jp)
                for (std::size_t j = 0; j < m; ++j) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const K& g = lmat[i].at(kp, k);
                        if (!g.is_zero()) row[(k * m + jp) * m + j] += g;
                    }
                    for (std::size_t q = 0; q < m; ++q) {
                        const K& g = mod.action[i].at(q, j);
                        if (!g.is_zero()) row[(kp * m + jp) * m + q] -= g;
                    }
                    flush(alg.zero());
                }
    // pi sigma = id, with pi(a_k e_j') = rho(a_k) v_j'
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t jp = 0; jp < m; ++jp) {
                    const K& g = mod.action[k].at(x, jp);
                    if (!g.is_zero()) row[(k * m + jp) * m + j] += g;
                }
            flush(x == j ? alg.one() : alg.zero());
        }

    Matrix<K> sys(rows.size(), unknowns, alg.zero());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
    return solve_affine(sys, rhs_entries).has_value();
}

/// Basis of End_A(M), the commutant of the action, computed as the kernel of
/// theta -> (theta rho(a_i) - rho(a_i) theta)_i.
template <FieldScalar K>
std::vector<Matrix<K>> endomorphism_algebra_basis(const AlgebraSpec<K>& alg,
                                                  const CellModule<K>& mod) {
    std::size_t m = mod.dim;
    if (m == 0) return {};
    Matrix<K> sys(alg.dim * m * m, m * m, alg.zero());
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) {
                std::size_t r = (i * m + x) * m + y;
                for (std::size_t k = 0; k < m; ++k) {
                    sys.at(r, x * m + k) += mod.action[i].at(k, y); // (theta rho)_xy
                    sys.at(r, k * m + y) -= mod.action[i].at(x, k); // (rho theta)_xy
                }
            }
    std::vector<Matrix<K>> basis;
    for (const auto& v : nullspace(sys)) {
        Matrix<K> t(m, m, alg.zero());
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) t.at(x, y) = v[x * m + y];
        basis.push_back(std::move(t));
    }
    return basis;
}

/// Schur scalars of I(phi_ST) on a simple module: entry (S,T) is the scalar
/// with I(phi_ST) = c_ST id.  A non-scalar I(phi_ST) contradicts Schur's
/// lemma and raises SchurExtractionFailure.
template <FieldScalar K>
Matrix<K> schur_c_matrix(const AlgebraSpec<K>& alg, const DualBases<K>& db,
                         const CellModule<K>& mod) {
    std::size_t m = mod.dim;
    Matrix<K> out(m, m, alg.zero());
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            Matrix<K> theta(m, m, alg.zero());
            theta.at(t, s) = alg.one(); // phi_ST : C_X -> delta_{SX} C_T
            Matrix<K> img = averaging(alg, db, mod, theta);
            Matrix<K> scaled = img.at(0, 0) * Matrix<K>::identity(m, alg.one());
            if (img != scaled)
                throw SchurExtractionFailure("I(phi_ST) is not scalar on a simple module");
            out.at(s, t) = img.at(0, 0);
        }
    return out;
}

/// The c-matrix I_lam = G'(lam) G(lam); when the cell module is simple it is
/// recomputed through the averaging operator and the two must agree.
template <FieldScalar K>
Matrix<K> c_matrix(const AlgebraSpec<K>& alg, const CellDatum& cd, const DualBases<K>& db,
                   std::size_t lam) {
    Matrix<K> i_lam = psi_gram(alg, cd, db, lam) * phi_gram(alg, cd, lam);
    if (simplicity_status(alg, cd, lam).status == Simplicity::Simple) {
        CellModule<K> mod = cell_module(alg, cd, lam, CellFlavor::C);
        if (schur_c_matrix(alg, db, mod) != i_lam)
            throw ConsistencyError("c-matrix from averaging disagrees with G'(lam) G(lam)");
    }
    return i_lam;
}

enum class Verdict { Projective, NotProjective, NotApplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Projective: return "Projective";
        case Verdict::NotProjective: return "NotProjective";
        default: return "NotApplicable";
    }
}

struct CriterionResult {
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
};

/// Per-(cell, flavor) verdict: the derived criteria next to both oracles,
/// never merged.  boundary_case marks a simple module with singular cell form
/// where the literal simple-module test contradicts the c-matrix criterion
/// (the regime where the literal test's invertibility assumption breaks).
struct ProjectivityVerdict {
    std::string cell_label;
    CellFlavor flavor = CellFlavor::C;
    Simplicity simplicity = Simplicity::Undetermined;
    std::size_t simplicity_witness_dim = 0;
    std::string simplicity_how;
    CriterionResult criterion_c;
    CriterionResult criterion_psi;
    CriterionResult criterion_k;
    bool oracle_gaschutz = false;
    bool oracle_splitting = false;
    bool boundary_case = false;
    bool agreement = false;
};

/// Assembles the verdict for one cell and flavor.  criterion_c is the
/// authoritative criterion (averaging / c-matrix, plus the G' = 0
/// necessary condition); criterion_psi is the literal simple-module test
/// (Psi != 0 for W_C, membership in Lambda_0 for W_d); criterion_k is the
/// k_lam != 0 test under the section-4 hypotheses.
template <FieldScalar K>
ProjectivityVerdict decide(const AlgebraSpec<K>& alg, const CellDatum& cd, const DualBases<K>& db,
                           const Section4Report& s4, std::size_t lam, CellFlavor flavor) {
    ProjectivityVerdict v;
    v.cell_label = cd.cell_labels[lam];
    v.flavor = flavor;

    Matrix<K> g = phi_gram(alg, cd, lam);
    Matrix<K> gp = psi_gram(alg, cd, db, lam);
    CellModule<K> mod = cell_module(alg, cd, lam, flavor);

    // For W_C the cell form is Phi.  For W_d it is Psi, but only once the
    // right dual basis is known to be cellular (section 4); otherwise the
    // generic semi-decision runs without a Gram shortcut.
    std::optional<Matrix<K>> gram_for_simplicity;
    if (flavor == CellFlavor::C)
        gram_for_simplicity = g;
    else if (s4.section4_ok)
        gram_for_simplicity = gp;
    SimplicityResult simp = module_simplicity(alg, mod, gram_for_simplicity);
    v.simplicity = simp.status;
    v.simplicity_witness_dim = simp.witness_dim;
    v.simplicity_how = simp.how;

    const Matrix<K>& form = flavor == CellFlavor::C ? g : gp;       // cell form of this flavor
    const Matrix<K>& dual_form = flavor == CellFlavor::C ? gp : g;  // the literal test reads this
    bool form_invertible = form.is_square() && inverse(form).has_value();

    if (simp.status == Simplicity::Simple) {
        Matrix<K> i_lam = flavor == CellFlavor::C ? c_matrix(alg, cd, db, lam)
                                                  : schur_c_matrix(alg, db, mod);
        v.criterion_c.verdict = i_lam.is_zero() ? Verdict::NotProjective : Verdict::Projective;
        v.criterion_c.detail = "c-matrix of averaged coordinate endomorphisms";
    } else if (flavor == CellFlavor::C && gp.is_zero()) {
        v.criterion_c.verdict = Verdict::NotProjective;
        v.criterion_c.detail = "G'(lam) = 0 rules projectivity out for any cell module";
    } else {
        v.criterion_c.verdict = Verdict::NotApplicable;
        v.criterion_c.detail = "module not known to be simple";
    }

    if (flavor == CellFlavor::C) {
        if (simp.status == Simplicity::Simple) {
            v.criterion_psi.verdict = dual_form.is_zero() ? Verdict::NotProjective : Verdict::Projective;
            v.criterion_psi.detail = "simple cell module is projective iff some Psi(S,T) != 0";
        } else {
            v.criterion_psi.verdict = Verdict::NotApplicable;
            v.criterion_psi.detail = "module not known to be simple";
        }
    } else {
        if (simp.status == Simplicity::Simple && s4.section4_ok) {
            v.criterion_psi.verdict = dual_form.is_zero() ? Verdict::NotProjective : Verdict::Projective;
            v.criterion_psi.detail = "simple dual cell module is projective iff lam lies in Lambda_0";
        } else {
            v.criterion_psi.verdict = Verdict::NotApplicable;
            v.criterion_psi.detail = simp.status == Simplicity::Simple
                                         ? "section-4 hypotheses fail"
                                         : "module not known to be simple";
        }
    }

    if (s4.hypotheses_ok()) {
        KLambdaResult<K> k = k_lambda(alg, cd, db, s4, lam);
        v.criterion_k.verdict = k.value.is_zero() ? Verdict::NotProjective : Verdict::Projective;
        v.criterion_k.detail = "k = " + k.value.str();
    } else {
        v.criterion_k.verdict = Verdict::NotApplicable;
        v.criterion_k.detail = "section-4 hypotheses fail";
    }

    v.oracle_gaschutz = gaschutz_oracle(alg, db, mod);
    v.oracle_splitting = splitting_oracle(alg, mod);

    v.boundary_case = simp.status == Simplicity::Simple && !form_invertible &&
                      v.criterion_psi.verdict != Verdict::NotApplicable &&
                      v.criterion_c.verdict != Verdict::NotApplicable &&
                      v.criterion_psi.verdict != v.criterion_c.verdict;

    Verdict oracle_verdict = v.oracle_gaschutz ? Verdict::Projective : Verdict::NotProjective;
    bool agree = v.oracle_gaschutz == v.oracle_splitting;
    auto check_against = [&](const CriterionResult& c, bool excused) {
        if (excused || c.verdict == Verdict::NotApplicable) return;
        agree = agree && c.verdict == oracle_verdict;
    };
    check_against(v.criterion_c, false);
    check_against(v.criterion_psi, v.boundary_case);
    check_against(v.criterion_k, false);
    v.agreement = agree;
    return v;
}

} // namespace cellfrob

#endif
