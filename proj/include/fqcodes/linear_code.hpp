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

#ifndef FQCODES_LINEAR_CODE_HPP
#define FQCODES_LINEAR_CODE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace fqcodes {

/// Exact rational, always stored reduced with positive denominator.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
};

inline std::string to_string(const Fraction& f) {
    if (f.den == 1) return std::to_string(f.num);
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

struct CodeParameters {
    std::size_t length;
    std::size_t dimension;
    Fraction rate;
};

/// Guard for the exhaustive enumerations (codewords, minimum weight,
/// coset-leader tables): q^k or the table size may not exceed it.
constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t(1) << 22;

/// A k-dimensional subspace of F^n. G is a k x n generator matrix of rank
/// k (rows a basis); H is n x (n-k) and its COLUMNS are a basis of the
/// dual code, so membership reads v * H == 0. Note that many textbooks
/// store the transpose of this H.
class LinearCode {
   public:
    /// Assembles a code from validated parts. `presentation` is an optional
    /// spanning matrix kept for display and serialization (e.g. the full
    /// shift matrix of a quasi-cyclic code); it never affects G or H.
    static LinearCode from_parts(Matrix generator, Matrix check,
                                 std::optional<Matrix> presentation = std::nullopt) {
        generator.field().require_same(check.field());
        const std::size_t n = generator.cols();
        const std::size_t k = generator.rows();
        if (n < 1) throw std::invalid_argument("code length must be at least 1");
        if (check.rows() != n || check.cols() != n - k)
            throw std::invalid_argument("parity check shape must be n x (n-k)");
        if (rank(generator) != k) throw std::invalid_argument("generator rows are dependent");
        if (rank(check) != n - k) throw std::invalid_argument("parity check columns are dependent");
        if (!matmul(generator, check).is_zero())
            throw std::invalid_argument("generator and parity check are not orthogonal");
        if (presentation) {
            presentation->field().require_same(generator.field());
            if (presentation->cols() != n) throw std::invalid_argument("presentation width mismatch");
        }
        return LinearCode(std::move(generator), std::move(check), std::move(presentation));
    }

    /// Code spanned by the given rows. Independent rows are kept verbatim
    /// as the generator; dependent rows fall back to the nonzero rref rows.
    static LinearCode from_span_matrix(const Matrix& rows,
                                       std::optional<Matrix> presentation = std::nullopt) {
        if (rows.cols() < 1) throw std::invalid_argument("code length must be at least 1");
        auto rr = rref(rows);
        Matrix g = rr.rank == rows.rows() ? rows : nonzero_rows(rr.reduced);
        Matrix h = transpose(nullspace_basis(g));
        return from_parts(std::move(g), std::move(h), std::move(presentation));
    }

    static LinearCode from_span(const Field& f, const std::vector<std::vector<long long>>& rows) {
        if (rows.empty()) throw std::invalid_argument("empty span with no length given");
        return from_span_matrix(Matrix::from_rows(f, rows));
    }

    static LinearCode from_span(const Field& f, std::size_t n,
                                const std::vector<std::vector<long long>>& rows) {
        return from_span_matrix(Matrix::from_rows(f, rows, n));
    }

    static LinearCode from_span(std::uint64_t p, unsigned r, std::size_t n,
                                const std::vector<std::vector<long long>>& rows) {
        return from_span(field_build(p, r), n, rows);
    }

    static LinearCode from_generator(const Matrix& g) { return from_span_matrix(g); }

    /// Code orthogonal to every given row: G spans the kernel, H's columns
    /// are a reduced basis of the span of the rows.
    static LinearCode from_parity_check_matrix(const Matrix& rows) {
        if (rows.cols() < 1) throw std::invalid_argument("code length must be at least 1");
        Matrix g = nullspace_basis(rows);
        Matrix h = transpose(nonzero_rows(rref(rows).reduced));
        return from_parts(std::move(g), std::move(h));
    }

    static LinearCode from_parity_check_span(const Field& f,
                                             const std::vector<std::vector<long long>>& rows) {
        if (rows.empty()) throw std::invalid_argument("empty span with no length given");
        return from_parity_check_matrix(Matrix::from_rows(f, rows));
    }

    static LinearCode from_parity_check_span(const Field& f, std::size_t n,
                                             const std::vector<std::vector<long long>>& rows) {
        return from_parity_check_matrix(Matrix::from_rows(f, rows, n));
    }

    static LinearCode from_parity_check_span(std::uint64_t p, unsigned r, std::size_t n,
                                             const std::vector<std::vector<long long>>& rows) {
        return from_parity_check_span(field_build(p, r), n, rows);
    }

    const Field& field() const noexcept { return g_.field(); }
    std::size_t length() const noexcept { return g_.cols(); }
    std::size_t dim() const noexcept { return g_.rows(); }
    const Matrix& generator_matrix() const noexcept { return g_; }
    const Matrix& parity_check_matrix() const noexcept { return h_; }
    const Matrix& presentation_rows() const noexcept { return pres_ ? *pres_ : g_; }
    bool has_presentation() const noexcept { return pres_.has_value(); }

    CodeParameters parameters() const {
        return CodeParameters{length(), dim(),
                              Fraction(static_cast<long long>(dim()), static_cast<long long>(length()))};
    }

    /// v * H, the syndrome; zero exactly on codewords.
    Vector syndrome(const Vector& v) const { return vec_mat(v, h_); }

    bool contains(const Vector& v) const {
        field().require_same(v.field());
        if (v.size() != length()) return false;
        return syndrome(v).is_zero();
    }

    Vector encode(const Vector& message) const {
        field().require_same(message.field());
        if (message.size() != dim()) throw std::invalid_argument("message length must equal k");
        return vec_mat(message, g_);
    }

    /// All q^k codewords, enumerated as m*G over messages in lexicographic
    /// rep order (first message symbol most significant).
    std::vector<Vector> codewords(std::uint64_t bound = kDefaultEnumerationBound) const {
        const std::uint64_t total = enumeration_size(bound);
        std::vector<Vector> out;
        out.reserve(static_cast<std::size_t>(total));
        const std::uint64_t q = field().order();
        const std::size_t k = dim();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<rep_t> msg(k, 0);
            std::uint64_t rest = idx;
            for (std::size_t i = k; i-- > 0;) {
                msg[i] = static_cast<rep_t>(rest % q);
                rest /= q;
            }
            out.push_back(vec_mat(Vector(field(), std::move(msg)), g_));
        }
        return out;
    }

    /// Exact minimum Hamming weight by exhaustive message enumeration.
    /// This enumeration is the reference for every distance claim in the
    /// library; no probabilistic shortcut is taken.
    std::size_t minimum_weight(std::uint64_t bound = kDefaultEnumerationBound) const {
        if (dim() == 0) throw std::invalid_argument("zero code has no nonzero codeword");
        enumeration_size(bound);
        const Field& f = field();
        const std::uint64_t q = f.order();
        const std::size_t k = dim();
        const std::size_t n = length();

        // depth-first over all q^k messages, accumulating partial sums of
        // scaled generator rows so each message costs O(n), not O(k n)
        std::size_t best = n + 1;
        std::vector<rep_t> acc(n, 0);
        auto dfs = [&](auto&& self, std::size_t level, bool any_nonzero) -> void {
            if (level == k) {
                if (!any_nonzero) return;
                std::size_t w = 0;
                for (rep_t x : acc)
                    if (x != 0) ++w;
                if (w < best) best = w;
                return;
            }
            for (std::uint64_t c = 0; c < q; ++c) {
                std::vector<rep_t> saved;
                if (c != 0) {
                    saved = acc;
                    for (std::size_t j = 0; j < n; ++j)
                        acc[j] = f.add(acc[j], f.mul(static_cast<rep_t>(c), g_.rep(level, j)));
                }
                self(self, level + 1, any_nonzero || c != 0);
                if (c != 0) acc = std::move(saved);
            }
        };
        dfs(dfs, 0, false);
        return best;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        if (a.field() != b.field() || a.length() != b.length()) return false;
        return row_space_equal(a.g_, b.g_);
    }
    friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

   private:
    LinearCode(Matrix g, Matrix h, std::optional<Matrix> pres)
        : g_(std::move(g)), h_(std::move(h)), pres_(std::move(pres)) {}

    std::uint64_t enumeration_size(std::uint64_t bound) const {
        const std::uint64_t q = field().order();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (total > bound / q)
                throw std::invalid_argument("q^k exceeds the enumeration bound of " +
                                            std::to_string(bound));
            total *= q;
        }
        if (total > bound)
            throw std::invalid_argument("q^k exceeds the enumeration bound of " + std::to_string(bound));
        return total;
    }

    Matrix g_;
    Matrix h_;
    std::optional<Matrix> pres_;
};

/// Code equality: same field, same length, same row space. Mismatched
/// field or length compares false rather than throwing.
inline bool equal_codes(const LinearCode& a, const LinearCode& b) { return a == b; }

/// Dual code: generator = H^T, parity check = G^T. Applying it twice
/// restores the original matrices exactly.
inline LinearCode dual_code(const LinearCode& c) {
    return LinearCode::from_parts(transpose(c.parity_check_matrix()),
                                  transpose(c.generator_matrix()));
}

/// Keeps the codewords vanishing on `positions`, then deletes those
/// coordinates. Length drops by |positions|; dimension never grows.
inline LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& positions) {
    const Field& f = c.field();
    std::set<std::size_t> pos(positions.begin(), positions.end());
    for (std::size_t p : pos)
        if (p >= c.length()) throw std::invalid_argument("shorten position out of range");
    if (pos.size() >= c.length())
        throw std::invalid_argument("cannot shorten away every coordinate");

    // dual span of the restricted code = dual span of C plus unit checks
    Matrix constraints(f, pos.size(), c.length());
    {
        std::size_t i = 0;
        for (std::size_t p : pos) constraints.set_rep(i++, p, 1);
    }
    Matrix dual_span = stack_rows(transpose(c.parity_check_matrix()), constraints);
    Matrix restricted = nullspace_basis(dual_span);
    Matrix short_rows = restricted.without_columns({pos.begin(), pos.end()});
    return LinearCode::from_span_matrix(short_rows);
}

inline LinearCode zero_code(const Field& f, std::size_t n) {
    if (n < 1) throw std::invalid_argument("code length must be at least 1");
    return LinearCode::from_parts(Matrix(f, 0, n), Matrix::identity(f, n));
}

inline LinearCode universe_code(const Field& f, std::size_t n) {
    if (n < 1) throw std::invalid_argument("code length must be at least 1");
    return LinearCode::from_parts(Matrix::identity(f, n), Matrix(f, n, 0));
}

inline LinearCode repetition_code(const Field& f, std::size_t n) {
    if (n < 1) throw std::invalid_argument("code length must be at least 1");
    Matrix g(f, 1, n);
    for (std::size_t j = 0; j < n; ++j) g.set_rep(0, j, 1);
    return LinearCode::from_span_matrix(g);
}

inline LinearCode zero_sum_code(const Field& f, std::size_t n) {
    return dual_code(repetition_code(f, n));
}

/// Deterministic per seed: entries drawn from splitmix64, redrawn until
/// the generator has full rank k.
inline LinearCode random_code(const Field& f, std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > n) throw std::invalid_argument("need 0 < k <= n");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix g(f, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g.set_rep(i, j, static_cast<rep_t>(rng.below(f.order())));
        if (rank(g) == k) return LinearCode::from_span_matrix(g);
    }
    throw std::invalid_argument("could not draw a full-rank generator");
}

}  // namespace fqcodes

#endif  // FQCODES_LINEAR_CODE_HPP
