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

// Independent brute-force oracles used by the tests. These deliberately
// avoid the library's enumeration helpers: everything is a plain loop over
// messages or words so a bug in the optimized paths cannot hide here.

#ifndef FQCODES_TEST_UTIL_HPP
#define FQCODES_TEST_UTIL_HPP

#include <cstdint>
#include <set>
#include <vector>

#include <fqcodes/linear_code.hpp>
#include <fqcodes/matrix.hpp>

namespace test_util {

inline std::vector<fqcodes::rep_t> oracle_encode(const fqcodes::Matrix& g,
                                                 const std::vector<fqcodes::rep_t>& msg) {
    const auto& f = g.field();
    std::vector<fqcodes::rep_t> word(g.cols(), 0);
    for (std::size_t j = 0; j < g.cols(); ++j)
        for (std::size_t i = 0; i < g.rows(); ++i)
            word[j] = f.add(word[j], f.mul(msg[i], g.rep(i, j)));
    return word;
}

inline std::vector<std::vector<fqcodes::rep_t>> oracle_all_words(const fqcodes::Matrix& g) {
    const auto q = g.field().order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.rows(); ++i) total *= q;
    std::vector<std::vector<fqcodes::rep_t>> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<fqcodes::rep_t> msg(g.rows());
        std::uint64_t rest = idx;
        for (std::size_t i = g.rows(); i-- > 0;) {
            msg[i] = static_cast<fqcodes::rep_t>(rest % q);
            rest /= q;
        }
        out.push_back(oracle_encode(g, msg));
    }
    return out;
}

inline std::size_t oracle_weight(const std::vector<fqcodes::rep_t>& w) {
    std::size_t count = 0;
    for (auto r : w)
        if (r != 0) ++count;
    return count;
}

/// Exhaustive minimum weight straight off the generator matrix.
inline std::size_t oracle_min_weight(const fqcodes::Matrix& g) {
    std::size_t best = g.cols() + 1;
    for (const auto& w : oracle_all_words(g)) {
        const std::size_t wt = oracle_weight(w);
        if (wt != 0 && wt < best) best = wt;
    }
    return best;
}

inline std::size_t oracle_min_weight(const fqcodes::LinearCode& c) {
    return oracle_min_weight(c.generator_matrix());
}

/// Number of distinct vectors in the span; equals q^rank.
inline std::size_t oracle_span_size(const fqcodes::Matrix& g) {
    std::set<std::vector<fqcodes::rep_t>> seen;
    for (const auto& w : oracle_all_words(g)) seen.insert(w);
    return seen.size();
}

inline std::size_t oracle_distance(const std::vector<fqcodes::rep_t>& a,
                                   const std::vector<fqcodes::rep_t>& b) {
    std::size_t dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++dist;
    return dist;
}

/// All codewords at minimum distance from the given word.
inline std::vector<std::vector<fqcodes::rep_t>> oracle_nearest(const fqcodes::LinearCode& c,
                                                               const std::vector<fqcodes::rep_t>& v) {
    std::size_t best = c.length() + 1;
    std::vector<std::vector<fqcodes::rep_t>> out;
    for (const auto& w : oracle_all_words(c.generator_matrix())) {
        const std::size_t dist = oracle_distance(w, v);
        if (dist < best) {
            best = dist;
            out.clear();
        }
        if (dist == best) out.push_back(w);
    }
    return out;
}

}  // namespace test_util

#endif  // FQCODES_TEST_UTIL_HPP
