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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <fqcodes/matrix.hpp>
#include <fqcodes/rng.hpp>

#include "test_util.hpp"

using namespace fqcodes;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, SplitMix64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set_rep(i, j, static_cast<rep_t>(rng.below(f.order())));
    return m;
}

}  // namespace

TEST_CASE("rref of dependent rows") {
    Field f2 = field_build(2, 1);
    auto res = rref(Matrix::from_rows(f2, {{1, 1}, {1, 1}}));
    CHECK(res.rank == 1);
    CHECK(res.pivots == std::vector<std::size_t>{0});
    CHECK(res.reduced == Matrix::from_rows(f2, {{1, 1}, {0, 0}}));
}

TEST_CASE("rref of an invertible diagonal") {
    Field f5 = field_build(5, 1);
    auto res = rref(Matrix::from_rows(f5, {{2, 0}, {0, 3}}));
    CHECK(res.rank == 2);
    CHECK(res.reduced == Matrix::identity(f5, 2));
}

TEST_CASE("rref rank agrees with the span-size oracle") {
    Field f2 = field_build(2, 1);
    Matrix m = Matrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
    const std::size_t span = test_util::oracle_span_size(m);  // q^rank
    CHECK(span == 4);
    CHECK(rank(m) == 2);
}

TEST_CASE("nullspace basis") {
    Field f2 = field_build(2, 1);
    Matrix m = Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    Matrix ns = nullspace_basis(m);
    CHECK(ns.rows() == 2);
    CHECK(row_space_equal(ns, Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}})));
    for (std::size_t i = 0; i < ns.rows(); ++i)
        CHECK(vec_mat(ns.row(i), transpose(m)).is_zero());

    CHECK(nullspace_basis(Matrix::identity(f2, 3)).rows() == 0);
    Matrix zero_row(f2, 1, 3);
    CHECK(nullspace_basis(zero_row).rows() == 3);
}

TEST_CASE("products") {
    Field f2 = field_build(2, 1);
    Field f5 = field_build(5, 1);

    Vector v = Vector::from_ints(f5, {1, 1});
    Matrix m = Matrix::from_rows(f5, {{1, 2}, {3, 4}});
    CHECK(vec_mat(v, m) == Vector::from_ints(f5, {4, 1}));

    SplitMix64 rng(7);
    Matrix a = random_matrix(f2, 3, 4, rng);
    CHECK(matmul(a, Matrix::identity(f2, 4)) == a);

    CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
    CHECK_THROWS_AS(vec_mat(Vector::from_ints(f5, {1, 2, 3}), m), std::invalid_argument);
    CHECK_THROWS_AS(matmul(Matrix::identity(f2, 2), Matrix::identity(f5, 2)),
                    std::invalid_argument);
}

TEST_CASE("row space comparison") {
    Field f2 = field_build(2, 1);
    Matrix a = Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    Matrix permuted = Matrix::from_rows(f2, {{0, 0, 1, 1}, {1, 1, 0, 0}});
    CHECK(row_space_equal(a, permuted));
    Matrix b = Matrix::from_rows(f2, {{1, 1, 1, 1}, {0, 0, 1, 1}});
    CHECK(row_space_equal(a, b));  // 1111 = 1100 + 0011
    CHECK_FALSE(row_space_equal(Matrix::from_rows(f2, {{1, 1, 0, 0}}),
                                Matrix::from_rows(f2, {{0, 0, 1, 1}})));
    CHECK_THROWS_AS(row_space_equal(a, Matrix::identity(f2, 3)), std::invalid_argument);
}

TEST_CASE("zero-row and zero-column shapes are usable") {
    Field f3 = field_build(3, 1);
    Matrix empty_rows(f3, 0, 4);
    CHECK(rref(empty_rows).rank == 0);
    CHECK(nullspace_basis(empty_rows).rows() == 4);
    Matrix empty_cols(f3, 4, 0);
    CHECK(rref(empty_cols).rank == 0);
    CHECK(transpose(empty_cols).rows() == 0);
    CHECK(vec_mat(Vector::from_ints(f3, {1, 2, 0, 1}), empty_cols).size() == 0);
}

TEST_CASE("structural properties on random matrices") {
    SplitMix64 rng(12345);
    const std::uint64_t orders[] = {2, 3, 4, 5, 9};
    for (int trial = 0; trial < 60; ++trial) {
        Field f = field_from_order(orders[rng.below(5)]);
        const std::size_t rows = 1 + rng.below(6);
        const std::size_t cols = 1 + rng.below(6);
        Matrix m = random_matrix(f, rows, cols, rng);

        auto res = rref(m);
        CHECK(rref(res.reduced).reduced == res.reduced);        // idempotent
        CHECK(rank(m) == rank(transpose(m)));                    // row rank = column rank
        CHECK(res.rank + nullspace_basis(m).rows() == cols);     // rank-nullity

        Matrix a = random_matrix(f, 1 + rng.below(4), 1 + rng.below(4), rng);
        Matrix b = random_matrix(f, a.cols(), 1 + rng.below(4), rng);
        Matrix c = random_matrix(f, b.cols(), 1 + rng.below(4), rng);
        CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    }
}
