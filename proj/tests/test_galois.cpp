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

#include <cstdint>
#include <vector>

#include <fqcodes/galois.hpp>

using namespace fqcodes;

namespace {

// independent irreducibility oracle: a monic quadratic or cubic over GF(p)
// is reducible iff it has a root
bool oracle_has_root(const std::vector<std::uint64_t>& coeffs, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// first irreducible monic quadratic over GF(p) in (c0, c1) order
std::vector<rep_t> oracle_smallest_irreducible_quadratic(std::uint64_t p) {
    for (std::uint64_t c0 = 0; c0 < p; ++c0)
        for (std::uint64_t c1 = 0; c1 < p; ++c1)
            if (!oracle_has_root({c0, c1, 1}, p))
                return {static_cast<rep_t>(c0), static_cast<rep_t>(c1), 1};
    return {};
}

const std::uint64_t kSmallOrders[] = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("field construction picks the smallest irreducible modulus") {
    CHECK(field_build(2, 1).modulus().empty());

    Field f4 = field_build(2, 2);
    CHECK(f4.order() == 4);
    CHECK(f4.modulus() == oracle_smallest_irreducible_quadratic(2));
    CHECK(f4.modulus() == std::vector<rep_t>{1, 1, 1});  // x^2+x+1

    Field f9 = field_build(3, 2);
    CHECK(f9.order() == 9);
    CHECK(f9.modulus() == oracle_smallest_irreducible_quadratic(3));
    CHECK(f9.modulus() == std::vector<rep_t>{1, 0, 1});  // x^2+1
}

TEST_CASE("field construction is deterministic") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        Field a = field_build(p, r);
        Field b = field_build(p, r);
        CHECK(a == b);
        CHECK(a.modulus() == b.modulus());
    }
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(field_build(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_build(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_build(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(field_from_order(6), std::invalid_argument);
    CHECK_THROWS_AS(field_from_order(12), std::invalid_argument);
    CHECK(field_from_order(8).characteristic() == 2);
    CHECK(field_from_order(8).degree() == 3);
    CHECK(field_from_order(9).characteristic() == 3);
}

TEST_CASE("addition and negation") {
    Field f4 = field_build(2, 2);
    const rep_t a = 2;
    CHECK(f4.add(a, a) == 0);          // characteristic 2
    CHECK(f4.add(a, 1) == 3);          // a + 1
    Field f5 = field_build(5, 1);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.neg(2) == 3);
    CHECK(f5.sub(1, 3) == 3);
}

TEST_CASE("multiplication and inversion") {
    Field f4 = field_build(2, 2);
    CHECK(f4.mul(2, 2) == 3);  // a*a = a+1 mod x^2+x+1
    Field f5 = field_build(5, 1);
    CHECK(f5.inv(2) == 3);
    Field f9 = field_build(3, 2);
    CHECK(f9.mul(3, 3) == 2);  // a*a = -1 mod x^2+1
    CHECK_THROWS_AS(f5.inv(0), std::invalid_argument);
    CHECK_THROWS_AS(f5.div(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(f5.pow(0, -1), std::invalid_argument);
    CHECK(f5.pow(0, 0) == 1);
    CHECK(f5.pow(2, -1) == 3);
}

TEST_CASE("elements from distinct fields never mix") {
    Field f4 = field_build(2, 2);
    Field f5 = field_build(5, 1);
    CHECK_THROWS_AS(f4.one() + f5.one(), std::invalid_argument);
    CHECK_THROWS_AS(f4.one() * f5.one(), std::invalid_argument);
    CHECK(f4.one() != f5.one());
    // separately built equal fields do interoperate
    CHECK((field_build(2, 2).one() + f4.one()).is_zero());
}

TEST_CASE("element enumeration order") {
    auto reps = [](const Field& f) {
        std::vector<rep_t> out;
        for (const auto& e : f.elements()) out.push_back(e.rep());
        return out;
    };
    CHECK(reps(field_build(2, 1)) == std::vector<rep_t>{0, 1});
    CHECK(reps(field_build(2, 2)) == std::vector<rep_t>{0, 2, 3, 1});
    CHECK(reps(field_build(5, 1)) == std::vector<rep_t>{0, 1, 2, 3, 4});

    std::vector<std::string> rendered;
    for (const auto& e : field_build(2, 2).elements()) rendered.push_back(to_string(e));
    CHECK(rendered == std::vector<std::string>{"0", "a", "a+1", "1"});
}

TEST_CASE("rendering") {
    Field f4 = field_build(2, 2);
    CHECK(to_string(f4.element(3)) == "a+1");
    CHECK(to_string(f4.element(2)) == "a");
    CHECK(to_string(f4.element(0)) == "0");
    Field f5 = field_build(5, 1);
    CHECK(to_string(f5.element(3)) == "3");
    Field f9 = field_build(3, 2);
    CHECK(to_string(f9.element(8)) == "2a+2");
    Field f8 = field_build(2, 3);
    CHECK(to_string(f8.element(5)) == "a^2+1");
}

TEST_CASE("parsing") {
    Field f4 = field_build(2, 2);
    CHECK(parse_element(f4, "a+1").rep() == 3);
    CHECK(parse_element(f4, "3").rep() == 3);
    CHECK(parse_element(f4, "-1").rep() == 1);  // -1 = 1 in characteristic 2
    Field f5 = field_build(5, 1);
    CHECK(parse_element(f5, "-1").rep() == 4);
    CHECK(parse_element(f5, "-2").rep() == 3);
    CHECK(parse_element(f5, " 4 ").rep() == 4);
    CHECK_THROWS_AS(parse_element(f5, "a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(f5, "x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(f5, ""), std::invalid_argument);
}

TEST_CASE("render/parse round-trip") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        Field f = field_build(p, r);
        for (std::uint64_t v = 0; v < f.order(); ++v) {
            FieldElement e = f.element(v);
            CHECK(parse_element(f, to_string(e)) == e);
        }
    }
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (std::uint64_t q : kSmallOrders) {
        Field f = field_from_order(q);
        for (rep_t x = 0; x < q; ++x) {
            CHECK(f.add(x, 0) == x);
            CHECK(f.mul(x, 1) == x);
            CHECK(f.add(x, f.neg(x)) == 0);
            if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
            for (rep_t y = 0; y < q; ++y) {
                CHECK(f.add(x, y) == f.add(y, x));
                CHECK(f.mul(x, y) == f.mul(y, x));
                for (rep_t z = 0; z < q; ++z) {
                    CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }
}

TEST_CASE("pow(x, q-1) = 1 for every nonzero x, q <= 64") {
    const std::uint64_t prime_powers[] = {2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17, 19, 23,
                                          25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64};
    for (std::uint64_t q : prime_powers) {
        Field f = field_from_order(q);
        for (rep_t x = 1; x < q; ++x)
            CHECK(f.pow(x, static_cast<long long>(q) - 1) == 1);
    }
}

TEST_CASE("coercion maps integers to reps with field negation") {
    Field f5 = field_build(5, 1);
    CHECK(f5.coerce(-1) == 4);
    CHECK(f5.coerce(7) == 2);
    Field f4 = field_build(2, 2);
    CHECK(f4.coerce(3) == 3);
    CHECK(f4.coerce(-1) == 1);
}
