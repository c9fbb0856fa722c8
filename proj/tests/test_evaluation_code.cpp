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

#include <set>

#include <fqcodes/evaluation_code.hpp>
#include <fqcodes/rng.hpp>

#include "test_util.hpp"

using namespace fqcodes;

namespace {

// the six points and four spanning polynomials used across several cases
EvaluationCode sample_code() {
    Field f4 = field_build(2, 2);
    std::vector<std::vector<long long>> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                            {0, 0, 1}, {1, 1, 1}, {2, 2, 2}};
    MultiPoly x = MultiPoly::variable(f4, 3, 0);
    MultiPoly y = MultiPoly::variable(f4, 3, 1);
    MultiPoly z = MultiPoly::variable(f4, 3, 2);
    MultiPoly a = MultiPoly::constant(f4, 3, 2);
    return EvaluationCode::build(f4, pts, {x + y + z, a + y * z * z, z * z, x + y + z + z * z});
}

}  // namespace

TEST_CASE("evaluation code over GF(4) on six points") {
    auto c = sample_code();
    CHECK(c.length() == 6);
    CHECK(c.dim() == 3);

    const Field& f = c.field();
    const Matrix& raw = c.raw_evaluation();
    REQUIRE(raw.rows() == 4);
    CHECK(raw.row(0) == Vector::from_ints(f, {0, 1, 1, 1, 1, 2}));
    CHECK(raw.row(1) == Vector::from_ints(f, {2, 2, 2, 2, 3, 3}));
    CHECK(raw.row(2) == Vector::from_ints(f, {0, 0, 0, 1, 1, 3}));
    CHECK(raw.row(3) == Vector::from_ints(f, {0, 1, 1, 0, 0, 1}));

    // point accessor mirrors the input order
    CHECK(c.points().size() == 6);
    CHECK(c.points().point(0) == std::vector<rep_t>{0, 0, 0});
    CHECK(c.points().point(5) == std::vector<rep_t>{2, 2, 2});

    // lazy vanishing ideal: every generator vanishes on every point
    const auto& vi = c.vanishing_ideal();
    CHECK(vi.standard_monomials.size() == 6);
    for (const auto& g : vi.basis)
        for (std::size_t j = 0; j < c.points().size(); ++j)
            CHECK(g.eval(c.points().point(j)) == 0);
    CHECK(&c.vanishing_ideal() == &vi);  // memoized
}

TEST_CASE("constant span gives a repetition code") {
    Field f5 = field_build(5, 1);
    auto c = EvaluationCode::build(f5, {{0}, {1}, {4}}, {MultiPoly::constant(f5, 1, 1)});
    CHECK(c.linear_code() == repetition_code(f5, 3));
}

TEST_CASE("duplicate points are dropped, first occurrence kept") {
    Field f2 = field_build(2, 1);
    auto c = EvaluationCode::build(f2, {{0, 1}, {0, 1}, {1, 0}},
                                   {MultiPoly::variable(f2, 2, 0)});
    CHECK(c.length() == 2);
    CHECK(c.points().point(0) == std::vector<rep_t>{0, 1});
    CHECK(c.points().point(1) == std::vector<rep_t>{1, 0});
}

TEST_CASE("constructor rejects bad input") {
    Field f2 = field_build(2, 1);
    CHECK_THROWS_AS(EvaluationCode::build(f2, {}, {MultiPoly::constant(f2, 1, 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(EvaluationCode::build(f2, {{0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(EvaluationCode::build(f2, {{0}}, {MultiPoly::constant(f2, 2, 1)}),
                    std::invalid_argument);
}

TEST_CASE("monomial matrix variant") {
    Field f3 = field_build(3, 1);
    auto a = EvaluationCode::from_monomial_matrix(f3, {{0, 0}, {1, 2}}, {{0, 0}, {1, 1}});
    auto b = EvaluationCode::build(
        f3, {{0, 0}, {1, 2}},
        {MultiPoly::constant(f3, 2, 1),
         MultiPoly::variable(f3, 2, 0) * MultiPoly::variable(f3, 2, 1)});
    CHECK(a.raw_evaluation() == b.raw_evaluation());
}

TEST_CASE("cartesian codes") {
    Field f3 = field_build(3, 1);
    auto c = cartesian_code(f3, {{0, 1}, {0, 1}}, 1);
    CHECK(c.length() == 4);
    CHECK(c.dim() == 3);
    // grid order is row-major, last coordinate fastest
    CHECK(c.points().point(0) == std::vector<rep_t>{0, 0});
    CHECK(c.points().point(1) == std::vector<rep_t>{0, 1});
    CHECK(c.points().point(2) == std::vector<rep_t>{1, 0});
    // exhaustive over 27 words: no degree-1 polynomial vanishes on 3 of the
    // 4 grid points, so the minimum weight is 2
    CHECK(test_util::oracle_min_weight(c.linear_code()) == 2);
    CHECK(c.linear_code().minimum_weight() == 2);

    auto rep = cartesian_code(f3, {{0, 1}, {0, 2}}, 0);
    CHECK(rep.linear_code() == repetition_code(f3, 4));

    CHECK_THROWS_AS(cartesian_code(f3, {{0, 0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(cartesian_code(f3, {std::vector<long long>{}}, 1), std::invalid_argument);
}

TEST_CASE("cartesian code on the full grid equals Reed-Muller") {
    for (std::uint64_t q : {2, 3}) {
        Field f = field_from_order(q);
        std::vector<long long> full;
        for (std::uint64_t v = 0; v < q; ++v) full.push_back(static_cast<long long>(v));
        for (std::size_t d = 0; d <= 2; ++d) {
            auto cart = cartesian_code(f, {full, full}, d);
            auto rm = rm_code(q, 2, d);
            CHECK(cart.linear_code() == rm.linear_code());
        }
    }
}

TEST_CASE("Reed-Muller codes") {
    auto c = rm_code(2, 3, 1);
    CHECK(c.length() == 8);
    CHECK(c.dim() == 4);
    CHECK(test_util::oracle_min_weight(c.linear_code()) == 4);
    CHECK(c.linear_code().minimum_weight() == 4);

    for (std::uint64_t q : {2, 3})
        for (std::size_t m = 1; m <= 2; ++m) {
            auto rm0 = rm_code(q, m, 0);
            std::size_t n = 1;
            for (std::size_t i = 0; i < m; ++i) n *= q;
            CHECK(rm0.linear_code() == repetition_code(field_from_order(q), n));
        }

    auto rs_like = rm_code(3, 1, 1);
    CHECK(rs_like.length() == 3);
    CHECK(rs_like.dim() == 2);
    CHECK(rs_like.linear_code().minimum_weight() == 2);
}

TEST_CASE("Reed-Solomon codes") {
    Field f5 = field_build(5, 1);
    auto c = rs_code(f5, {1, 2, 3}, 3);
    REQUIRE(c.raw_evaluation().rows() == 3);
    CHECK(c.raw_evaluation().row(0) == Vector::from_ints(f5, {1, 1, 1}));
    CHECK(c.raw_evaluation().row(1) == Vector::from_ints(f5, {1, 2, 3}));
    CHECK(c.raw_evaluation().row(2) == Vector::from_ints(f5, {1, 4, 4}));
    // the Vandermonde rows are independent, so the generator keeps them
    CHECK(c.linear_code().generator_matrix() == c.raw_evaluation());

    CHECK(rs_code(f5, {0, 1, 2, 3}, 1).linear_code() == repetition_code(f5, 4));

    Field f7 = field_build(7, 1);
    auto mds = rs_code(f7, {1, 2, 3, 4, 5, 6}, 3);
    CHECK(test_util::oracle_min_weight(mds.linear_code()) == 4);  // n-k+1
    CHECK(mds.linear_code().minimum_weight() == 4);

    CHECK_THROWS_AS(rs_code(f5, {1, 1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(rs_code(f5, {1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rs_code(f5, {1, 2}, 0), std::invalid_argument);
}

TEST_CASE("Reed-Solomon codes are MDS") {
    for (std::uint64_t q : {3, 4, 5, 7}) {
        Field f = field_from_order(q);
        for (std::size_t n = 1; n <= q - 1; ++n) {
            std::vector<long long> pts;
            for (std::size_t i = 1; i <= n; ++i) pts.push_back(static_cast<long long>(i));
            for (std::size_t k = 1; k <= n; ++k)
                CHECK(rs_code(f, pts, k).linear_code().minimum_weight() == n - k + 1);
        }
    }
}

TEST_CASE("toric codes") {
    Field f3 = field_build(3, 1);
    auto rep = toric_code(f3, {{0}});
    CHECK(rep.linear_code() == repetition_code(f3, 2));

    auto universe = toric_code(f3, {{0}, {1}});
    CHECK(universe.length() == 2);
    CHECK(universe.dim() == 2);
    CHECK(universe.linear_code() == universe_code(f3, 2));

    Field f5 = field_build(5, 1);
    auto c = toric_code(f5, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(c.length() == 16);
    CHECK(c.dim() == 3);
    // torus points in lexicographic rep order
    CHECK(c.points().point(0) == std::vector<rep_t>{1, 1});
    CHECK(c.points().point(1) == std::vector<rep_t>{1, 2});
    CHECK(c.points().point(4) == std::vector<rep_t>{2, 1});
    CHECK(test_util::oracle_min_weight(c.linear_code()) == 12);
    CHECK(c.linear_code().minimum_weight() == 12);

    // exponents are reduced mod q-1, so shifting a row changes nothing
    auto shifted = toric_code(f5, {{4, 0}, {5, 4}, {0, -3}});
    CHECK(shifted.linear_code() == c.linear_code());

    // negative exponents allowed
    CHECK(toric_code(f5, {{-1, 0}}).length() == 16);
}

TEST_CASE("graph evaluation codes") {
    Field f2 = field_build(2, 1);
    // path on two vertices: both rows are (1), deduplicated to one point
    auto path = ev_code_graph(f2, {{1}, {1}}, 1);
    CHECK(path.length() == 1);
    CHECK(path.dim() == 1);

    // triangle: three distinct weight-2 rows; over GF(2) the all-ones vector
    // annihilates the incidence columns, so the rank is 2, not 3
    auto tri = ev_code_graph(f2, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 1);
    CHECK(tri.length() == 3);
    CHECK(tri.raw_evaluation().rows() == 3);  // monomials x, y, z
    CHECK(tri.dim() == 2);
    CHECK(test_util::oracle_span_size(tri.linear_code().generator_matrix()) == 4);

    CHECK_THROWS_AS(ev_code_graph(f2, {{1, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ev_code_graph(f2, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ev_code_graph(f2, {{1, 0}}, 0), std::invalid_argument);
}

TEST_CASE("kernel of the evaluation map is the vanishing-ideal intersection") {
    SplitMix64 rng(31337);
    const std::uint64_t orders[] = {2, 3, 4};
    for (int trial = 0; trial < 30; ++trial) {
        Field f = field_from_order(orders[rng.below(3)]);
        const std::size_t m = 1 + rng.below(3);
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < m; ++i) space *= f.order();
        const std::size_t npoints = 1 + rng.below(std::min<std::uint64_t>(space, 10));

        std::set<std::vector<rep_t>> seen;
        while (seen.size() < npoints) {
            std::vector<rep_t> p(m);
            for (auto& x : p) x = static_cast<rep_t>(rng.below(f.order()));
            seen.insert(std::move(p));
        }
        std::vector<std::vector<long long>> pts;
        for (const auto& p : seen) {
            std::vector<long long> row(p.begin(), p.end());
            pts.push_back(std::move(row));
        }

        std::vector<MultiPoly> span;
        const std::size_t nspan = 1 + rng.below(4);
        for (std::size_t s = 0; s < nspan; ++s) {
            MultiPoly p = MultiPoly::zero(f, m);
            const std::size_t nterms = 1 + rng.below(3);
            for (std::size_t t = 0; t < nterms; ++t) {
                Monomial mono{std::vector<std::uint32_t>(m, 0)};
                std::size_t budget = 3;
                for (std::size_t i = 0; i < m; ++i) {
                    mono.exps[i] = static_cast<std::uint32_t>(rng.below(budget + 1));
                    budget -= mono.exps[i];
                }
                p.add_term(mono, static_cast<rep_t>(rng.below(f.order())));
            }
            span.push_back(std::move(p));
        }
        bool all_zero = true;
        for (const auto& p : span)
            if (!p.is_zero()) all_zero = false;
        if (all_zero) span[0] = MultiPoly::constant(f, m, 1);

        auto code = EvaluationCode::build(f, pts, span);
        const auto& vi = code.vanishing_ideal();
        CHECK(vi.standard_monomials.size() == code.length());

        auto check_combination = [&](const std::vector<rep_t>& coeffs) {
            Vector combo = vec_mat(Vector(f, coeffs), code.raw_evaluation());
            MultiPoly poly = MultiPoly::zero(f, m);
            for (std::size_t i = 0; i < span.size(); ++i)
                poly = poly + span[i].scaled(coeffs[i]);
            const bool zero_vector = combo.is_zero();
            const bool in_ideal = normal_form(poly, vi.basis, vi.order).is_zero();
            CHECK(zero_vector == in_ideal);
        };

        for (int inner = 0; inner < 3; ++inner) {
            std::vector<rep_t> coeffs(span.size());
            for (auto& c : coeffs) c = static_cast<rep_t>(rng.below(f.order()));
            check_combination(coeffs);
        }
        // exercise the zero side through actual left-kernel vectors
        Matrix kernel = nullspace_basis(transpose(code.raw_evaluation()));
        for (std::size_t i = 0; i < kernel.rows(); ++i) check_combination(kernel.row(i).reps());
    }
}

TEST_CASE("evaluation code dimension equals the raw matrix rank") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        Field f = field_from_order(trial % 2 ? 2 : 3);
        const std::size_t m = 1 + rng.below(2);
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < m; ++i) space *= f.order();
        std::vector<std::vector<long long>> pts;
        std::set<std::vector<rep_t>> seen;
        const std::size_t npoints = 1 + rng.below(std::min<std::uint64_t>(space, 6));
        while (seen.size() < npoints) {
            std::vector<rep_t> p(m);
            for (auto& x : p) x = static_cast<rep_t>(rng.below(f.order()));
            if (seen.insert(p).second) pts.push_back({p.begin(), p.end()});
        }
        std::vector<MultiPoly> span;
        for (std::size_t s = 0; s < 1 + rng.below(3); ++s) {
            Monomial mono{std::vector<std::uint32_t>(m, 0)};
            for (auto& e : mono.exps) e = static_cast<std::uint32_t>(rng.below(3));
            span.push_back(MultiPoly::monomial(f, mono, 1));
        }
        auto c = EvaluationCode::build(f, pts, span);
        CHECK(c.dim() == rank(c.raw_evaluation()));
        CHECK(c.dim() <= c.length());
        CHECK(c.dim() <= span.size());
    }
}
