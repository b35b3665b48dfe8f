#ifndef CELLFROB_CELLULAR_HPP
#define CELLFROB_CELLULAR_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellfrob/algebra.hpp"

namespace cellfrob {

/// Placement of a basis element inside the cell structure:
/// basis index  <->  C^lam_{S,T} with S = members[cell][row], T = members[cell][col].
struct CellPosition {
    std::size_t cell = 0;
    std::size_t row = 0;
    std::size_t col = 0;
};

/// The combinatorial half of a cell datum: the poset Lambda, the ordered
/// member lists M(lam), and the bijection between cell triples and basis
/// indices.  The order relation is stored transitively closed.
struct CellDatum {
    std::vector<std::string> cell_labels;
    std::vector<std::vector<std::string>> members;
    /// index_grid[c][s * n_c + t] = basis index of C^c_{s,t}
    std::vector<std::vector<std::size_t>> index_grid;
    std::set<std::pair<std::size_t, std::size_t>> less; // strict order, closed

    std::size_t cell_count() const { return cell_labels.size(); }
    std::size_t cell_size(std::size_t c) const { return members[c].size(); }

    bool less_than(std::size_t a, std::size_t b) const { return less.count({a, b}) > 0; }
    bool leq(std::size_t a, std::size_t b) const { return a == b || less_than(a, b); }

    std::size_t index_of(std::size_t c, std::size_t s, std::size_t t) const {
        return index_grid[c][s * cell_size(c) + t];
    }

    const CellPosition& position_of(std::size_t basis_index) const { return positions_[basis_index]; }

    std::optional<std::size_t> find_cell(const std::string& label) const {
        for (std::size_t c = 0; c < cell_labels.size(); ++c)
            if (cell_labels[c] == label) return c;
        return std::nullopt;
    }

    /// Reversed-order view of the same datum with a permuted index map;
    /// used to test dual bases for cellularity w.r.t. the opposite order.
    CellDatum opposite_with_swapped_indices() const;

    /// Validates the bijection and the basis count, builds the reverse
    /// lookup.  Throws ParseError on violation.
    void finalize(std::size_t dim);

  private:
    std::vector<CellPosition> positions_;
};

/// Transitive closure of a strict relation on {0..count-1}; throws
/// ParseError when the closure contains a cycle (x < x).
std::set<std::pair<std::size_t, std::size_t>>
transitive_closure(std::set<std::pair<std::size_t, std::size_t>> rel, std::size_t count);

inline void CellDatum::finalize(std::size_t dim) {
    std::size_t total = 0;
    for (std::size_t c = 0; c < cell_count(); ++c) {
        if (members[c].empty()) throw ParseError("cell '" + cell_labels[c] + "' has no members");
        total += cell_size(c) * cell_size(c);
    }
    if (total != dim)
        throw ParseError("cell sizes are inconsistent with the algebra dimension: sum n^2 = " +
                         std::to_string(total) + ", dim = " + std::to_string(dim));
    positions_.assign(dim, CellPosition{});
    std::vector<bool> seen(dim, false);
    for (std::size_t c = 0; c < cell_count(); ++c) {
        std::size_t n = cell_size(c);
        if (index_grid[c].size() != n * n)
            throw ParseError("index map of cell '" + cell_labels[c] + "' is incomplete");
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                std::size_t b = index_grid[c][s * n + t];
                if (b >= dim)
                    throw ParseError("index map entry out of range in cell '" + cell_labels[c] + "'");
                if (seen[b])
                    throw ParseError("index map is not a bijection: basis index " +
                                     std::to_string(b) + " appears twice");
                seen[b] = true;
                positions_[b] = CellPosition{c, s, t};
            }
    }
    for (const auto& [a, b] : less)
        if (a >= cell_count() || b >= cell_count()) throw ParseError("poset pair out of range");
}

inline std::set<std::pair<std::size_t, std::size_t>>
transitive_closure(std::set<std::pair<std::size_t, std::size_t>> rel, std::size_t count) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<std::size_t, std::size_t>> add;
        for (const auto& [a, b] : rel)
            for (const auto& [c, d] : rel)
                if (b == c && !rel.count({a, d})) add.push_back({a, d});
        for (const auto& p : add) grew |= rel.insert(p).second;
    }
    for (std::size_t i = 0; i < count; ++i)
        if (rel.count({i, i})) throw ParseError("poset relation has a cycle");
    return rel;
}

inline CellDatum CellDatum::opposite_with_swapped_indices() const {
    CellDatum op;
    op.cell_labels = cell_labels;
    op.members = members;
    op.index_grid.resize(cell_count());
    for (std::size_t c = 0; c < cell_count(); ++c) {
        std::size_t n = cell_size(c);
        op.index_grid[c].resize(n * n);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
                op.index_grid[c][s * n + t] = index_of(c, t, s);
    }
    for (const auto& [a, b] : less) op.less.insert({b, a});
    op.positions_ = positions_;
    for (std::size_t b = 0; b < positions_.size(); ++b) {
        std::swap(op.positions_[b].row, op.positions_[b].col);
    }
    return op;
}

namespace detail {

inline std::string cell_triple(const CellDatum& cd, std::size_t c, std::size_t s, std::size_t t) {
    return "C[" + cd.cell_labels[c] + ";" + cd.members[c][s] + "," + cd.members[c][t] + "]";
}

} // namespace detail

/// The (C3) coefficients of a cell: matrices rho_lam(a_i) with
/// rho(a_i)[s'][s] = r_{a_i}(S', S), extracted from the multiplication
/// table and checked to be independent of the probe column T.
/// Throws InconsistentCellStructure if extraction is ambiguous.
template <FieldScalar K>
std::vector<Matrix<K>> cell_rep_matrices(const AlgebraSpec<K>& alg, const CellDatum& cd,
                                         std::size_t lam) {
    std::size_t n = cd.cell_size(lam);
    std::vector<Matrix<K>> rep(alg.dim, Matrix<K>(n, n, alg.zero()));
    for (std::size_t i = 0; i < alg.dim; ++i) {
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = 0; t < n; ++t) {
                Vec<K> p = multiply(alg.basis_vector(i), alg.basis_vector(cd.index_of(lam, s, t)), alg);
                for (std::size_t sp = 0; sp < n; ++sp) {
                    const K& coeff = p[cd.index_of(lam, sp, t)];
                    if (t == 0) {
                        rep[i].at(sp, s) = coeff;
                    } else if (rep[i].at(sp, s) != coeff) {
                        throw InconsistentCellStructure(
                            "(C3) coefficient of a_" + alg.basis_labels[i] + " at cell " +
                            cd.cell_labels[lam] + " depends on the probe column");
                    }
                }
            }
        }
    }
    return rep;
}

/// Checks the cellular axioms (C1)-(C3) against the algebra, reporting every
/// failure with a witness.  (C3') follows by applying the involution and is
/// re-checked explicitly.
template <FieldScalar K>
ValidationReport validate_cellular(const AlgebraSpec<K>& alg, const CellDatum& cd) {
    ValidationReport rep;

    // (C1) basis count, bijection and poset sanity.
    std::size_t total = 0;
    for (std::size_t c = 0; c < cd.cell_count(); ++c) total += cd.cell_size(c) * cd.cell_size(c);
    rep.add("c1_basis_count", total == alg.dim,
            total == alg.dim ? "" : "sum of n_lam^2 != dim");
    bool poset_ok = true;
    std::string poset_witness;
    for (const auto& [a, b] : cd.less) {
        if (a == b) {
            poset_ok = false;
            poset_witness = "reflexive pair " + cd.cell_labels[a];
            break;
        }
        for (const auto& [c, d] : cd.less)
            if (b == c && !cd.less.count({a, d})) {
                poset_ok = false;
                poset_witness = "missing transitive pair (" + cd.cell_labels[a] + "," + cd.cell_labels[d] + ")";
            }
    }
    rep.add("c1_strict_partial_order", poset_ok, poset_witness);

    // (C2) the involution sends C^lam_{S,T} to C^lam_{T,S}.
    bool c2 = true;
    std::string c2_witness;
    for (std::size_t c = 0; c < cd.cell_count() && c2; ++c) {
        std::size_t n = cd.cell_size(c);
        for (std::size_t s = 0; s < n && c2; ++s)
            for (std::size_t t = 0; t < n && c2; ++t) {
                Vec<K> img = alg.apply_involution(alg.basis_vector(cd.index_of(c, s, t)));
                if (img != alg.basis_vector(cd.index_of(c, t, s))) {
                    c2 = false;
                    c2_witness = "i(" + detail::cell_triple(cd, c, s, t) + ") != " +
                                 detail::cell_triple(cd, c, t, s);
                }
            }
    }
    rep.add("c2_involution_transposes_cells", c2, c2_witness);

    // (C3) expansion of a_i * C^lam_{S,T}: inside cell lam only column T is
    // populated, the coefficients are T-independent, everything else lies
    // strictly below lam.
    bool c3 = true;
    std::string c3_witness;
    for (std::size_t i = 0; i < alg.dim && c3; ++i) {
        for (std::size_t lam = 0; lam < cd.cell_count() && c3; ++lam) {
            std::size_t n = cd.cell_size(lam);
            // reference coefficients from probe column t = 0
            std::vector<Vec<K>> ref(n, Vec<K>(n, alg.zero())); // ref[s][s']
            for (std::size_t s = 0; s < n && c3; ++s) {
                for (std::size_t t = 0; t < n && c3; ++t) {
                    Vec<K> p = multiply(alg.basis_vector(i),
                                        alg.basis_vector(cd.index_of(lam, s, t)), alg);
                    for (std::size_t m = 0; m < alg.dim && c3; ++m) {
                        if (p[m].is_zero()) continue;
                        const CellPosition& pos = cd.position_of(m);
                        if (pos.cell == lam) {
                            if (pos.col != t) {
                                c3 = false;
                                c3_witness = alg.basis_labels[i] + " * " +
                                             detail::cell_triple(cd, lam, s, t) +
                                             " has a cell-" + cd.cell_labels[lam] +
                                             " component outside column " + cd.members[lam][t];
                            }
                        } else if (!cd.less_than(pos.cell, lam)) {
                            c3 = false;
                            c3_witness = alg.basis_labels[i] + " * " +
                                         detail::cell_triple(cd, lam, s, t) +
                                         " has a component in cell " + cd.cell_labels[pos.cell] +
                                         " which is not below " + cd.cell_labels[lam];
                        }
                    }
                    if (!c3) break;
                    for (std::size_t sp = 0; sp < n; ++sp) {
                        const K& coeff = p[cd.index_of(lam, sp, t)];
                        if (t == 0) {
                            ref[s][sp] = coeff;
                        } else if (ref[s][sp] != coeff) {
                            c3 = false;
                            c3_witness = "r_" + alg.basis_labels[i] + "(" + cd.members[lam][sp] +
                                         "," + cd.members[lam][s] + ") depends on the column index";
                            break;
                        }
                    }
                }
            }
        }
    }
    rep.add("c3_cell_expansion", c3, c3_witness);

    // (C3') right multiplication against the involution reproduces r.
    if (c3 && c2) {
        bool c3p = true;
        std::string c3p_witness;
        for (std::size_t lam = 0; lam < cd.cell_count() && c3p; ++lam) {
            auto rr = cell_rep_matrices(alg, cd, lam);
            std::size_t n = cd.cell_size(lam);
            for (std::size_t i = 0; i < alg.dim && c3p; ++i) {
                Vec<K> ia = alg.apply_involution(alg.basis_vector(i));
                for (std::size_t s = 0; s < n && c3p; ++s)
                    for (std::size_t t = 0; t < n && c3p; ++t) {
                        // C^lam_{T,S} i(a) == sum_{S'} r_a(S',S) C^lam_{T,S'} mod A(<lam)
                        Vec<K> p = multiply(alg.basis_vector(cd.index_of(lam, t, s)), ia, alg);
                        for (std::size_t sp = 0; sp < n && c3p; ++sp) {
                            if (p[cd.index_of(lam, t, sp)] != rr[i].at(sp, s)) {
                                c3p = false;
                                c3p_witness = "right-multiplication coefficients of " +
                                              alg.basis_labels[i] + " differ at cell " +
                                              cd.cell_labels[lam];
                            }
                        }
                    }
            }
        }
        rep.add("c3_prime_right_expansion", c3p, c3p_witness);
    }

    return rep;
}

enum class CellFlavor { C, d };

inline const char* flavor_name(CellFlavor f) { return f == CellFlavor::C ? "C" : "d"; }

/// A cell module as explicit action matrices of every algebra basis element.
template <FieldScalar K>
struct CellModule {
    std::size_t cell = 0;
    CellFlavor flavor = CellFlavor::C;
    std::size_t dim = 0;
    std::vector<Matrix<K>> action; // one n_lam x n_lam matrix per basis element

    Matrix<K> act(const Vec<K>& element_coords, const K& zero) const {
        Matrix<K> m(dim, dim, zero);
        for (std::size_t i = 0; i < element_coords.size(); ++i)
            if (!element_coords[i].is_zero()) m = m + element_coords[i] * action[i];
        return m;
    }
};

/// Builds W_C(lam) from the stored (C3) coefficients, or W_d(lam) via
/// a . d_S = sum r_{i(a)}(S,S') d_{S'}, i.e. rho_d(a) = rho_C(i(a))^T.
/// The representation property is re-verified on all basis pairs.
template <FieldScalar K>
CellModule<K> cell_module(const AlgebraSpec<K>& alg, const CellDatum& cd, std::size_t lam,
                          CellFlavor flavor) {
    if (lam >= cd.cell_count()) throw ParseError("unknown cell");
    CellModule<K> mod;
    mod.cell = lam;
    mod.flavor = flavor;
    mod.dim = cd.cell_size(lam);
    auto rep = cell_rep_matrices(alg, cd, lam);
    if (flavor == CellFlavor::C) {
        mod.action = std::move(rep);
    } else {
        mod.action.assign(alg.dim, Matrix<K>(mod.dim, mod.dim, alg.zero()));
        for (std::size_t i = 0; i < alg.dim; ++i) {
            Vec<K> ia = alg.apply_involution(alg.basis_vector(i));
            Matrix<K> m(mod.dim, mod.dim, alg.zero());
            for (std::size_t k = 0; k < alg.dim; ++k)
                if (!ia[k].is_zero()) m = m + ia[k] * rep[k];
            mod.action[i] = m.transpose();
        }
    }

    Matrix<K> rho_unit = mod.act(alg.unit, alg.zero());
    if (!rho_unit.is_identity())
        throw ConsistencyError("cell module action of the unit is not the identity");
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec<K> prod = multiply(alg.basis_vector(i), alg.basis_vector(j), alg);
            if (mod.action[i] * mod.action[j] != mod.act(prod, alg.zero()))
                throw ConsistencyError("cell module violates the representation property at (" +
                                       alg.basis_labels[i] + "," + alg.basis_labels[j] + ")");
        }
    return mod;
}

/// G(lam): the coefficient of C^lam_{S,V} in C^lam_{S,T} C^lam_{U,V},
/// probed over every pair (S,V) and required to be probe-independent.
template <FieldScalar K>
Matrix<K> phi_gram(const AlgebraSpec<K>& alg, const CellDatum& cd, std::size_t lam) {
    if (lam >= cd.cell_count()) throw ParseError("unknown cell");
    std::size_t n = cd.cell_size(lam);
    Matrix<K> g(n, n, alg.zero());
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u) {
            bool have = false;
            K value = alg.zero();
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t v = 0; v < n; ++v) {
                    Vec<K> p = multiply(alg.basis_vector(cd.index_of(lam, s, t)),
                                        alg.basis_vector(cd.index_of(lam, u, v)), alg);
                    for (std::size_t m = 0; m < alg.dim; ++m) {
                        if (p[m].is_zero()) continue;
                        const CellPosition& pos = cd.position_of(m);
                        if (pos.cell == lam) {
                            if (pos.row != s || pos.col != v)
                                throw InconsistentCellStructure(
                                    "product " + detail::cell_triple(cd, lam, s, t) + " * " +
                                    detail::cell_triple(cd, lam, u, v) +
                                    " has a cell component off position (S,V)");
                        } else if (!cd.less_than(pos.cell, lam)) {
                            throw InconsistentCellStructure(
                                "product " + detail::cell_triple(cd, lam, s, t) + " * " +
                                detail::cell_triple(cd, lam, u, v) + " escapes A(<lam)");
                        }
                    }
                    const K& coeff = p[cd.index_of(lam, s, v)];
                    if (!have) {
                        value = coeff;
                        have = true;
                    } else if (value != coeff) {
                        throw InconsistentCellStructure(
                            "Phi(" + cd.members[lam][t] + "," + cd.members[lam][u] +
                            ") depends on the probe pair (S,V)");
                    }
                }
            g.at(t, u) = value;
        }
    return g;
}

struct SimpleData {
    std::size_t rank_g = 0;
    std::size_t dim_simple = 0; // dim L(lam) = rank G(lam)
    bool in_lambda0 = false;    // G(lam) != 0
};

template <FieldScalar K>
SimpleData simple_data(const AlgebraSpec<K>& alg, const CellDatum& cd, std::size_t lam) {
    Matrix<K> g = phi_gram(alg, cd, lam);
    SimpleData sd;
    sd.rank_g = rank(g);
    sd.dim_simple = sd.rank_g;
    sd.in_lambda0 = !g.is_zero();
    return sd;
}

enum class Simplicity { Simple, NotSimple, Undetermined };

inline const char* simplicity_name(Simplicity s) {
    switch (s) {
        case Simplicity::Simple: return "Simple";
        case Simplicity::NotSimple: return "NotSimple";
        default: return "Undetermined";
    }
}

struct SimplicityResult {
    Simplicity status = Simplicity::Undetermined;
    std::size_t witness_dim = 0; // dimension of a proper nonzero submodule
    std::string how;
};

/// Semi-decision for simplicity of a module with action matrices:
///   - one-dimensional modules are simple;
///   - if a cell-form Gram matrix is supplied: invertible => simple,
///     0 < rank < n => the radical is a proper nonzero submodule;
///   - spinning standard basis vectors and action-nullspace vectors can
///     exhibit a proper nonzero submodule;
///   - otherwise Undetermined.
template <FieldScalar K>
SimplicityResult module_simplicity(const AlgebraSpec<K>& alg, const CellModule<K>& mod,
                                   const std::optional<Matrix<K>>& gram) {
    SimplicityResult res;
    std::size_t n = mod.dim;
    if (n == 1) {
        res.status = Simplicity::Simple;
        res.how = "one-dimensional";
        return res;
    }
    if (gram) {
        std::size_t r = rank(*gram);
        if (r == n) {
            res.status = Simplicity::Simple;
            res.how = "cell form nondegenerate";
            return res;
        }
        if (r > 0) {
            res.status = Simplicity::NotSimple;
            res.witness_dim = n - r;
            res.how = "radical of the cell form";
            return res;
        }
    }
    auto spin_dim = [&](const Vec<K>& v) {
        Matrix<K> span(alg.dim, n, alg.zero());
        for (std::size_t i = 0; i < alg.dim; ++i) {
            Vec<K> w = mod.action[i] * v;
            for (std::size_t c = 0; c < n; ++c) span.at(i, c) = w[c];
        }
        return rank(span);
    };
    std::vector<Vec<K>> candidates;
    for (std::size_t j = 0; j < n; ++j) {
        Vec<K> e(n, alg.zero());
        e[j] = alg.one();
        candidates.push_back(e);
    }
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (const auto& v : nullspace(mod.action[i])) candidates.push_back(v);
    for (const auto& v : candidates) {
        bool zero = true;
        for (const K& x : v) zero = zero && x.is_zero();
        if (zero) continue;
        std::size_t d = spin_dim(v);
        if (d > 0 && d < n) {
            res.status = Simplicity::NotSimple;
            res.witness_dim = d;
            res.how = "cyclic submodule of dimension " + std::to_string(d);
            return res;
        }
    }
    res.status = Simplicity::Undetermined;
    res.how = "no decision procedure applied";
    return res;
}

/// Simplicity of the cell module W_C(lam), Gram-assisted.
template <FieldScalar K>
SimplicityResult simplicity_status(const AlgebraSpec<K>& alg, const CellDatum& cd, std::size_t lam) {
    CellModule<K> mod = cell_module(alg, cd, lam, CellFlavor::C);
    return module_simplicity(alg, mod, std::optional<Matrix<K>>(phi_gram(alg, cd, lam)));
}

} // namespace cellfrob

#endif
