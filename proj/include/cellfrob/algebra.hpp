#ifndef CELLFROB_ALGEBRA_HPP
#define CELLFROB_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cellfrob/errors.hpp"
#include "cellfrob/matrix.hpp"
#include "cellfrob/scalar.hpp"

namespace cellfrob {

/// Outcome of one axiom check, with a witness when it failed.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness; // empty when passed
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> f;
        for (const auto& c : checks)
            if (!c.passed) f.push_back(c);
        return f;
    }
    void add(std::string name, bool passed, std::string witness = "") {
        checks.push_back({std::move(name), passed, std::move(witness)});
    }
};

/// A finite-dimensional algebra given by a multiplication table on a basis,
/// together with the trace functional tau and the candidate involution.
/// The bilinear form is always f(a,b) = tau(ab); tau is the single source
/// of truth.
template <FieldScalar K>
struct AlgebraSpec {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    /// table[i * dim + j] = sparse expansion of a_i * a_j as (k, coeff) pairs.
    std::vector<std::vector<std::pair<std::size_t, K>>> table;
    Vec<K> unit;          // coordinates of 1
    Matrix<K> involution; // coordinate matrix of i
    Vec<K> trace;         // tau on the basis

    K zero() const { return field_zero_; }
    K one() const { return field_zero_.one(); }
    void set_field_zero(const K& z) { field_zero_ = z; }

    const std::vector<std::pair<std::size_t, K>>& product_of_basis(std::size_t i, std::size_t j) const {
        return table[i * dim + j];
    }

    Vec<K> basis_vector(std::size_t i) const {
        Vec<K> v(dim, zero());
        v[i] = one();
        return v;
    }

    K trace_of(const Vec<K>& x) const {
        K s = zero();
        for (std::size_t i = 0; i < dim; ++i)
            if (!x[i].is_zero()) s += trace[i] * x[i];
        return s;
    }

    Vec<K> apply_involution(const Vec<K>& x) const { return involution * x; }

    /// Matrix of left multiplication by a_i on basis coordinates.
    Matrix<K> left_mult_matrix(std::size_t i) const {
        Matrix<K> m(dim, dim, zero());
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, c] : product_of_basis(i, j)) m.at(k, j) += c;
        return m;
    }

    /// Gram matrix of the trace form, F_ij = tau(a_i a_j).
    Matrix<K> tau_gram() const {
        Matrix<K> f(dim, dim, zero());
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                K s = zero();
                for (const auto& [k, c] : product_of_basis(i, j))
                    if (!trace[k].is_zero()) s += c * trace[k];
                f.at(i, j) = s;
            }
        return f;
    }

  private:
    K field_zero_{};
};

/// Exact product of two elements in basis coordinates.
template <FieldScalar K>
Vec<K> multiply(const Vec<K>& x, const Vec<K>& y, const AlgebraSpec<K>& alg) {
    if (x.size() != alg.dim || y.size() != alg.dim)
        throw std::invalid_argument("multiply: coordinate length mismatch");
    Vec<K> r(alg.dim, alg.zero());
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (y[j].is_zero()) continue;
            K xy = x[i] * y[j];
            for (const auto& [k, c] : alg.product_of_basis(i, j)) r[k] += xy * c;
        }
    }
    return r;
}

/// Right dual d_j, left dual D_j and the Nakayama automorphism, all as
/// coordinate matrices (column j = coordinates of the j-th dual element).
template <FieldScalar K>
struct DualBases {
    Matrix<K> right_dual;
    Matrix<K> left_dual;
    Matrix<K> nakayama;
};

namespace detail {

template <FieldScalar K>
std::string coords_str(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

} // namespace detail

/// Checks every Frobenius-algebra axiom on the multiplication table:
/// associativity on all basis triples, two-sided unit, the involution being
/// an involutive anti-automorphism, and non-degeneracy of f(a,b) = tau(ab).
/// Failures become report entries with witnesses, never exceptions.
template <FieldScalar K>
ValidationReport validate_algebra(const AlgebraSpec<K>& alg) {
    ValidationReport rep;
    const std::size_t n = alg.dim;

    bool assoc = true;
    std::string assoc_witness;
    for (std::size_t i = 0; i < n && assoc; ++i)
        for (std::size_t j = 0; j < n && assoc; ++j)
            for (std::size_t k = 0; k < n && assoc; ++k) {
                Vec<K> left = multiply(multiply(alg.basis_vector(i), alg.basis_vector(j), alg),
                                       alg.basis_vector(k), alg);
                Vec<K> right = multiply(alg.basis_vector(i),
                                        multiply(alg.basis_vector(j), alg.basis_vector(k), alg), alg);
                if (left != right) {
                    assoc = false;
                    assoc_witness = "(" + alg.basis_labels[i] + "*" + alg.basis_labels[j] + ")*" +
                                    alg.basis_labels[k] + " != " + alg.basis_labels[i] + "*(" +
                                    alg.basis_labels[j] + "*" + alg.basis_labels[k] + ")";
                }
            }
    rep.add("associativity", assoc, assoc_witness);

    bool unit_ok = true;
    std::string unit_witness;
    for (std::size_t i = 0; i < n && unit_ok; ++i) {
        Vec<K> b = alg.basis_vector(i);
        if (multiply(alg.unit, b, alg) != b || multiply(b, alg.unit, alg) != b) {
            unit_ok = false;
            unit_witness = "unit fails on " + alg.basis_labels[i];
        }
    }
    rep.add("two_sided_unit", unit_ok, unit_witness);

    Matrix<K> inv_sq = alg.involution * alg.involution;
    rep.add("involution_squares_to_identity", inv_sq.is_identity(),
            inv_sq.is_identity() ? "" : "i^2 != id");

    bool anti = true;
    std::string anti_witness;
    for (std::size_t i = 0; i < n && anti; ++i)
        for (std::size_t j = 0; j < n && anti; ++j) {
            Vec<K> lhs = alg.apply_involution(multiply(alg.basis_vector(i), alg.basis_vector(j), alg));
            Vec<K> rhs = multiply(alg.apply_involution(alg.basis_vector(j)),
                                  alg.apply_involution(alg.basis_vector(i)), alg);
            if (lhs != rhs) {
                anti = false;
                anti_witness = "i(" + alg.basis_labels[i] + "*" + alg.basis_labels[j] + ") != i(" +
                               alg.basis_labels[j] + ")*i(" + alg.basis_labels[i] + ")";
            }
        }
    rep.add("involution_anti_automorphism", anti, anti_witness);

    bool nondeg = inverse(alg.tau_gram()).has_value();
    rep.add("trace_form_nondegenerate", nondeg, nondeg ? "" : "tau-Gram matrix is singular");

    // Opportunistic: when tau is i-invariant on the basis, f(i(x),i(y)) = f(y,x)
    // must follow; report it, never assume it.
    bool tau_inv = true;
    for (std::size_t i = 0; i < n && tau_inv; ++i)
        tau_inv = alg.trace_of(alg.apply_involution(alg.basis_vector(i))) == alg.trace[i];
    if (tau_inv) {
        bool sym = true;
        std::string sym_witness;
        for (std::size_t i = 0; i < n && sym; ++i)
            for (std::size_t j = 0; j < n && sym; ++j) {
                K lhs = alg.trace_of(multiply(alg.apply_involution(alg.basis_vector(i)),
                                              alg.apply_involution(alg.basis_vector(j)), alg));
                K rhs = alg.trace_of(multiply(alg.basis_vector(j), alg.basis_vector(i), alg));
                if (lhs != rhs) {
                    sym = false;
                    sym_witness = "pair (" + alg.basis_labels[i] + "," + alg.basis_labels[j] + ")";
                }
            }
        rep.add("tau_i_invariant_implies_f_i_symmetry", sym, sym_witness);
    }

    return rep;
}

/// Solves tau(a_i d_j) = delta_ij and tau(D_j a_i) = delta_ij.  With
/// F = tau-Gram matrix this is right_dual = F^{-1} and left_dual = F^{-T};
/// both are re-verified by direct substitution.  The Nakayama map sends
/// d_i to D_i, i.e. nakayama = left_dual * right_dual^{-1}.
template <FieldScalar K>
DualBases<K> dual_bases(const AlgebraSpec<K>& alg) {
    Matrix<K> f = alg.tau_gram();
    auto finv = inverse(f);
    if (!finv) throw NonDegeneracyError("trace form is degenerate: dual bases do not exist");
    DualBases<K> db;
    db.right_dual = *finv;
    db.left_dual = inverse(f.transpose()).value();
    db.nakayama = db.left_dual * f; // left_dual * right_dual^{-1}

    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            K rd = alg.trace_of(multiply(alg.basis_vector(i), db.right_dual.column(j), alg));
            K ld = alg.trace_of(multiply(db.left_dual.column(j), alg.basis_vector(i), alg));
            K want = i == j ? alg.one() : alg.zero();
            if (rd != want || ld != want)
                throw ConsistencyError("dual-basis defining relations failed after solve");
        }
    return db;
}

/// True iff nakayama is a unital algebra automorphism twisting the trace
/// form the way the d -> D map must: tau(x y) = tau(alpha(y) x) on all basis
/// pairs.  (Equivalently tau(x y) = tau(y alpha^{-1}(x)); the inverse map
/// fails this and is rejected.)
template <FieldScalar K>
bool nakayama_check(const AlgebraSpec<K>& alg, const DualBases<K>& db) {
    const Matrix<K>& a = db.nakayama;
    if (!inverse(a).has_value()) return false;
    if (a * alg.unit != alg.unit) return false;
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec<K> lhs = a * multiply(alg.basis_vector(i), alg.basis_vector(j), alg);
            Vec<K> rhs = multiply(a * alg.basis_vector(i), a * alg.basis_vector(j), alg);
            if (lhs != rhs) return false;
            K t1 = alg.trace_of(multiply(alg.basis_vector(i), alg.basis_vector(j), alg));
            K t2 = alg.trace_of(multiply(a * alg.basis_vector(j), alg.basis_vector(i), alg));
            if (t1 != t2) return false;
        }
    return true;
}

} // namespace cellfrob

#endif
