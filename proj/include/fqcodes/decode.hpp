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

#ifndef FQCODES_DECODE_HPP
#define FQCODES_DECODE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linear_code.hpp"
#include "matrix.hpp"

namespace fqcodes {

/// Raised when a received word's syndrome has no coset leader of weight
/// <= t: more errors occurred than the table can correct. This is a
/// distinct failure, never a silently wrong answer.
class decoding_failure : public std::runtime_error {
   public:
    explicit decoding_failure(const std::string& what) : std::runtime_error(what) {}
};

/// Coset-leader table for bounded-distance decoding up to
/// t = floor((d-1)/2) errors. Leaders are enumerated by increasing weight,
/// then lexicographically, and the first insertion wins, so every stored
/// leader is the lexicographically smallest of minimal weight.
class SyndromeTable {
   public:
    SyndromeTable(LinearCode code, std::size_t known_distance,
                  std::uint64_t bound = kDefaultEnumerationBound)
        : code_(std::move(code)), t_((known_distance - 1) / 2) {
        if (code_.dim() < 1) throw std::invalid_argument("cannot decode the zero code");
        if (known_distance < 1) throw std::invalid_argument("distance must be at least 1");

        const Field& f = code_.field();
        const std::size_t n = code_.length();
        const std::uint64_t q = f.order();

        {
            std::uint64_t count = 1, binom = 1, qpow = 1;
            const std::uint64_t cap = std::uint64_t(1) << 31;
            for (std::size_t w = 1; w <= t_ && w <= n; ++w) {
                binom = binom * (n - w + 1) / w;
                qpow *= q - 1;
                if (binom > cap || qpow > cap || (count += binom * qpow) > bound)
                    throw std::invalid_argument("coset leader table exceeds the enumeration bound");
            }
        }

        const Vector zero = Vector::zero(f, n);
        table_.emplace(code_.syndrome(zero).reps(), zero);

        for (std::size_t w = 1; w <= t_ && w <= n; ++w) {
            std::vector<Vector> errors;
            std::vector<std::size_t> support(w);
            for (std::size_t i = 0; i < w; ++i) support[i] = i;
            bool more_supports = true;
            while (more_supports) {
                std::vector<rep_t> vals(w, 1);
                bool more_vals = true;
                while (more_vals) {
                    std::vector<rep_t> e(n, 0);
                    for (std::size_t i = 0; i < w; ++i) e[support[i]] = vals[i];
                    errors.emplace_back(f, std::move(e));
                    more_vals = false;
                    for (std::size_t i = w; i-- > 0;) {
                        if (++vals[i] < q) {
                            more_vals = true;
                            break;
                        }
                        vals[i] = 1;
                    }
                }
                more_supports = false;
                for (std::size_t i = w; i-- > 0;) {
                    if (support[i] + (w - i) <= n - 1) {
                        ++support[i];
                        for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
                        more_supports = true;
                        break;
                    }
                }
            }
            std::sort(errors.begin(), errors.end(),
                      [](const Vector& a, const Vector& b) { return a.reps() < b.reps(); });
            for (const Vector& e : errors) table_.emplace(code_.syndrome(e).reps(), e);
        }
    }

    const LinearCode& code() const noexcept { return code_; }
    std::size_t max_corrected_weight() const noexcept { return t_; }
    std::size_t size() const noexcept { return table_.size(); }

    const Vector* leader(const Vector& syndrome) const {
        auto it = table_.find(syndrome.reps());
        return it == table_.end() ? nullptr : &it->second;
    }

    /// Returns received - leader(syndrome), always a codeword; throws
    /// decoding_failure when the syndrome is not in the table.
    Vector decode(const Vector& received) const {
        code_.field().require_same(received.field());
        if (received.size() != code_.length())
            throw std::invalid_argument("received word length must equal n");
        auto it = table_.find(code_.syndrome(received).reps());
        if (it == table_.end())
            throw decoding_failure("more than " + std::to_string(t_) +
                                   " errors detected, word is uncorrectable");
        return received - it->second;
    }

   private:
    LinearCode code_;
    std::size_t t_;
    std::map<std::vector<rep_t>, Vector> table_;
};

inline SyndromeTable build_syndrome_table(const LinearCode& code, std::size_t known_distance,
                                          std::uint64_t bound = kDefaultEnumerationBound) {
    return SyndromeTable(code, known_distance, bound);
}

inline Vector syndrome_decode(const LinearCode& code, const Vector& received,
                              std::size_t known_distance) {
    return SyndromeTable(code, known_distance).decode(received);
}

}  // namespace fqcodes

#endif  // FQCODES_DECODE_HPP
