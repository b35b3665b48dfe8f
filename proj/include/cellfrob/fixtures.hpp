#ifndef CELLFROB_FIXTURES_HPP
#define CELLFROB_FIXTURES_HPP

#include <string>
#include <utility>

#include "cellfrob/cellular.hpp"

namespace cellfrob {

template <FieldScalar K>
struct Fixture {
    AlgebraSpec<K> alg;
    CellDatum cd;
};

namespace detail {

template <FieldScalar K>
void add_product(AlgebraSpec<K>& alg, std::size_t i, std::size_t j, std::size_t k, const K& c) {
    alg.table[i * alg.dim + j].push_back({k, c});
}

} // namespace detail

/// The 6-dimensional Koenig-Xi algebra K<a,b,c,d>/I with parameter lam
/// (lam != 0, 1), basis ordered cellwise (bc; a, b, c, d; 1), trace
/// tau(bc) = 1, involution fixing a, d and swapping b, c.  Cells:
/// {bc} < {a,b,c,d as 2x2} < {1}.
template <FieldScalar K>
Fixture<K> koenig_xi(const K& lam) {
    if (lam.is_zero() || lam.is_one())
        throw ParseError("koenig-xi requires lambda distinct from 0 and 1");
    K zero = lam.zero(), one = lam.one();
    Fixture<K> fx;
    AlgebraSpec<K>& alg = fx.alg;
    alg.dim = 6;
    alg.set_field_zero(zero);
    alg.basis_labels = {"bc", "a", "b", "c", "d", "1"};
    alg.table.assign(36, {});
    enum { BC = 0, A = 1, B = 2, C = 3, D = 4, ONE = 5 };
    for (std::size_t x = 0; x < 6; ++x) {
        detail::add_product(alg, ONE, x, x, one);
        if (x != ONE) detail::add_product(alg, x, ONE, x, one);
    }
    detail::add_product(alg, A, D, BC, one);  // ad = bc
    detail::add_product(alg, D, A, BC, one);  // da = bc
    detail::add_product(alg, B, C, BC, one);  // bc itself
    detail::add_product(alg, C, B, BC, lam);  // cb = lam bc
    alg.unit = Vec<K>(6, zero);
    alg.unit[ONE] = one;
    alg.trace = Vec<K>(6, zero);
    alg.trace[BC] = one;
    alg.involution = Matrix<K>::identity(6, one);
    alg.involution.at(B, B) = zero;
    alg.involution.at(C, C) = zero;
    alg.involution.at(B, C) = one;
    alg.involution.at(C, B) = one;

    CellDatum& cd = fx.cd;
    cd.cell_labels = {"1", "2", "3"};
    cd.members = {{"1"}, {"1", "2"}, {"1"}};
    cd.index_grid = {{BC}, {A, B, C, D}, {ONE}};
    cd.less = transitive_closure({{0, 1}, {1, 2}}, 3);
    cd.finalize(alg.dim);
    return fx;
}

/// K[x]/(x^2) with basis (x, 1), tau(1) = 0, tau(x) = 1, identity involution,
/// and two singleton cells with the cell of x below the cell of 1.
template <FieldScalar K>
Fixture<K> dual_numbers(const K& one) {
    K zero = one.zero();
    Fixture<K> fx;
    AlgebraSpec<K>& alg = fx.alg;
    alg.dim = 2;
    alg.set_field_zero(zero);
    alg.basis_labels = {"x", "1"};
    alg.table.assign(4, {});
    detail::add_product(alg, 0, 1, 0, one); // x * 1 = x
    detail::add_product(alg, 1, 0, 0, one); // 1 * x = x
    detail::add_product(alg, 1, 1, 1, one); // 1 * 1 = 1
    alg.unit = {zero, one};
    alg.trace = {one, zero};
    alg.involution = Matrix<K>::identity(2, one);

    CellDatum& cd = fx.cd;
    cd.cell_labels = {"x", "1"};
    cd.members = {{"1"}, {"1"}};
    cd.index_grid = {{0}, {1}};
    cd.less = transitive_closure({{0, 1}}, 2);
    cd.finalize(alg.dim);
    return fx;
}

/// The full matrix algebra M_n(K) with basis E_{ST}, tau = matrix trace,
/// involution = transpose, and a single cell with C_{S,T} = E_{ST}.
template <FieldScalar K>
Fixture<K> matrix_algebra(std::size_t n, const K& one) {
    if (n == 0) throw ParseError("matrix algebra needs size >= 1");
    K zero = one.zero();
    Fixture<K> fx;
    AlgebraSpec<K>& alg = fx.alg;
    alg.dim = n * n;
    alg.set_field_zero(zero);
    auto idx = [n](std::size_t s, std::size_t t) { return s * n + t; };
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            alg.basis_labels.push_back("E" + std::to_string(s + 1) + std::to_string(t + 1));
    alg.table.assign(alg.dim * alg.dim, {});
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = 0; w < n; ++w)
                    if (t == u) detail::add_product(alg, idx(s, t), idx(u, w), idx(s, w), one);
    alg.unit = Vec<K>(alg.dim, zero);
    for (std::size_t s = 0; s < n; ++s) alg.unit[idx(s, s)] = one;
    alg.trace = Vec<K>(alg.dim, zero);
    for (std::size_t s = 0; s < n; ++s) alg.trace[idx(s, s)] = one;
    alg.involution = Matrix<K>(alg.dim, alg.dim, zero);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) alg.involution.at(idx(t, s), idx(s, t)) = one;

    CellDatum& cd = fx.cd;
    cd.cell_labels = {"1"};
    cd.members.resize(1);
    for (std::size_t s = 0; s < n; ++s) cd.members[0].push_back(std::to_string(s + 1));
    cd.index_grid.resize(1);
    cd.index_grid[0].resize(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) cd.index_grid[0][s * n + t] = idx(s, t);
    cd.finalize(alg.dim);
    return fx;
}

/// The regular module: every basis element acting by left multiplication.
/// Used by the oracles as a guaranteed-projective control.
template <FieldScalar K>
CellModule<K> regular_module(const AlgebraSpec<K>& alg) {
    CellModule<K> mod;
    mod.cell = 0;
    mod.flavor = CellFlavor::C;
    mod.dim = alg.dim;
    mod.action.reserve(alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) mod.action.push_back(alg.left_mult_matrix(i));
    return mod;
}

} // namespace cellfrob

#endif
