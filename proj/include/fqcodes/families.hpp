/*
   Copyright 2026 The fqcodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FQCODES_FAMILIES_HPP
#define FQCODES_FAMILIES_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "rng.hpp"
#include "unipoly.hpp"

namespace fqcodes {

/// Hamming code of redundancy r over GF(q): the parity-check columns are
/// one representative per projective point (first nonzero entry 1). The
/// unit vectors come first so H is systematic, followed by the remaining
/// representatives in decreasing base-q value with the first coordinate
/// least significant; the stored H is the n x r transpose of that matrix.
inline LinearCode hamming_code(std::uint64_t q, unsigned r) {
    if (r < 2) throw std::invalid_argument("Hamming redundancy must be at least 2");
    Field f = field_from_order(q);

    std::vector<std::vector<rep_t>> units, rest;
    std::vector<rep_t> v(r, 0);
    auto value_of = [&](const std::vector<rep_t>& w) {
        std::uint64_t val = 0, mult = 1;
        for (unsigned i = 0; i < r; ++i) {
            val += w[i] * mult;
            mult *= q;
        }
        return val;
    };
    const std::uint64_t total = value_of(std::vector<rep_t>(r, static_cast<rep_t>(q - 1))) + 1;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rest_val = idx;
        for (unsigned i = 0; i < r; ++i) {
            v[i] = static_cast<rep_t>(rest_val % q);
            rest_val /= q;
        }
        rep_t first = 0;
        for (unsigned i = 0; i < r; ++i)
            if (v[i] != 0) {
                first = v[i];
                break;
            }
        if (first != 1) continue;
        std::size_t weight = 0;
        for (unsigned i = 0; i < r; ++i)
            if (v[i] != 0) ++weight;
        std::size_t support = r;
        for (unsigned i = 0; i < r; ++i)
            if (v[i] != 0) {
                support = i;
                break;
            }
        if (weight == 1 && v[support] == 1)
            units.push_back(v);
        else
            rest.push_back(v);
    }
    std::sort(units.begin(), units.end(),
              [&](const auto& a, const auto& b) { return value_of(a) < value_of(b); });
    std::sort(rest.begin(), rest.end(),
              [&](const auto& a, const auto& b) { return value_of(a) > value_of(b); });

    std::vector<std::vector<rep_t>> columns = units;
    columns.insert(columns.end(), rest.begin(), rest.end());
    const std::size_t n = columns.size();

    Matrix check_rows(f, r, n);  // textbook orientation: r x n, columns = projective points
    for (std::size_t j = 0; j < n; ++j)
        for (unsigned i = 0; i < r; ++i) check_rows.set_rep(i, j, columns[j][i]);

    Matrix g = nullspace_basis(check_rows);
    return LinearCode::from_parts(std::move(g), transpose(check_rows));
}

/// Cyclic code of length n generated by g (reduced mod x^n - 1 first).
/// When g divides x^n - 1 the generator rows are its n - deg(g) cyclic
/// shifts, constant term first; otherwise the code spanned by all n shifts.
inline LinearCode cyclic_code(const Field& f, const UniPoly& g, std::size_t n) {
    f.require_same(g.field());
    if (n < 1) throw std::invalid_argument("code length must be at least 1");
    if (g.is_zero()) throw std::invalid_argument("generator polynomial must be nonzero");

    const UniPoly xn1 = UniPoly::xn_minus_one(f, n);
    const UniPoly gr = g.mod(xn1);
    if (gr.is_zero()) return zero_code(f, n);

    const std::vector<rep_t> base = gr.padded(n);
    auto shift_right = [&](const std::vector<rep_t>& row) {
        std::vector<rep_t> out(n);
        for (std::size_t j = 0; j < n; ++j) out[(j + 1) % n] = row[j];
        return out;
    };

    const bool divides = xn1.mod(gr).is_zero();
    const std::size_t nrows = divides ? n - static_cast<std::size_t>(gr.degree()) : n;
    std::vector<std::vector<rep_t>> rows;
    rows.reserve(nrows);
    std::vector<rep_t> cur = base;
    for (std::size_t i = 0; i < nrows; ++i) {
        rows.push_back(cur);
        cur = shift_right(cur);
    }
    return LinearCode::from_span_matrix(Matrix::from_rep_rows(f, rows, n));
}

inline LinearCode cyclic_code(const Field& f, const MultiPoly& g, std::size_t n) {
    if (g.nvars() != 1) throw std::invalid_argument("cyclic generator must be univariate");
    std::vector<rep_t> coeffs;
    for (const auto& [e, c] : g.terms()) {
        if (e[0] >= coeffs.size()) coeffs.resize(e[0] + 1, 0);
        coeffs[e[0]] = c;
    }
    return cyclic_code(f, UniPoly(f, std::move(coeffs)), n);
}

/// Generator presentation stacks all n cyclic shifts of every input vector
/// in input order, unreduced; the code's dimension is the rank of that
/// stack.
inline LinearCode quasi_cyclic_code(const Field& f,
                                    const std::vector<std::vector<long long>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("quasi-cyclic code needs at least one vector");
    const std::size_t n = vectors.front().size();
    if (n < 1) throw std::invalid_argument("code length must be at least 1");
    std::vector<std::vector<rep_t>> rows;
    rows.reserve(vectors.size() * n);
    for (const auto& vec : vectors) {
        if (vec.size() != n) throw std::invalid_argument("ragged input vectors");
        std::vector<rep_t> cur(n);
        for (std::size_t j = 0; j < n; ++j) cur[j] = f.coerce(vec[j]);
        for (std::size_t s = 0; s < n; ++s) {
            rows.push_back(cur);
            std::vector<rep_t> next(n);
            for (std::size_t j = 0; j < n; ++j) next[(j + 1) % n] = cur[j];
            cur = std::move(next);
        }
    }
    Matrix shift_matrix = Matrix::from_rep_rows(f, rows, n);
    return LinearCode::from_span_matrix(shift_matrix, shift_matrix);
}

/// Random binary LDPC-style code: an (n-k) x n parity-check matrix with
/// exactly row_weight ones per row at seeded positions, redrawn until it
/// reaches rank n-k. The generated check rows are kept verbatim in H.
inline LinearCode rand_ldpc(std::size_t n, std::size_t k, std::size_t row_weight,
                            std::uint64_t seed) {
    if (k < 1 || k >= n) throw std::invalid_argument("need 0 < k < n");
    if (row_weight < 1 || row_weight > n) throw std::invalid_argument("row weight out of range");
    Field f = field_build(2, 1);
    SplitMix64 rng(seed);

    for (int attempt = 0; attempt < 500; ++attempt) {
        Matrix check_rows(f, n - k, n);
        std::vector<std::size_t> positions(n);
        for (std::size_t i = 0; i < n - k; ++i) {
            for (std::size_t j = 0; j < n; ++j) positions[j] = j;
            for (std::size_t j = 0; j < row_weight; ++j) {
                const std::size_t pick = j + static_cast<std::size_t>(rng.below(n - j));
                std::swap(positions[j], positions[pick]);
                check_rows.set_rep(i, positions[j], 1);
            }
        }
        if (rank(check_rows) == n - k)
            return LinearCode::from_parts(nullspace_basis(check_rows), transpose(check_rows));
    }
    throw std::invalid_argument("parity checks of the requested row weight cannot reach rank n-k");
}

}  // namespace fqcodes

#endif  // FQCODES_FAMILIES_HPP
