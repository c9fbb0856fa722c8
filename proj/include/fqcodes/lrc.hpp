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

#ifndef FQCODES_LRC_HPP
#define FQCODES_LRC_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "unipoly.hpp"

namespace fqcodes {

struct LRCParams {
    std::uint64_t q;
    std::size_t n;
    std::size_t k;
    std::size_t locality;  // number of symbols read during a local repair
};

/// Locally recoverable code in the multiplicative-coset style: n distinct
/// evaluation points partitioned into blocks of size locality+1, and a
/// good polynomial g of degree locality+1 that is constant on every block.
/// The generator rows evaluate x^i * g(x)^j for i < locality, j < k/locality
/// (j-major), so each codeword restricts to a polynomial of degree
/// < locality on every block; that is what makes one-symbol repair local.
class LRCode {
   public:
    /// True iff g has degree equal to the block size and is constant on
    /// every block.
    static bool is_good_polynomial(const UniPoly& g, const std::vector<std::vector<rep_t>>& blocks,
                                   const Field& f) {
        f.require_same(g.field());
        if (blocks.empty()) return false;
        const std::size_t block_size = blocks.front().size();
        if (block_size < 1) return false;
        if (g.degree() != static_cast<int>(block_size)) return false;
        for (const auto& block : blocks) {
            if (block.size() != block_size) return false;
            const rep_t v = g.eval(block.front());
            for (rep_t p : block)
                if (g.eval(p) != v) return false;
        }
        return true;
    }

    static LRCode build(const LRCParams& params, const std::vector<std::vector<long long>>& blocks,
                        const UniPoly& g) {
        Field f = field_from_order(params.q);
        f.require_same(g.field());
        std::vector<std::vector<rep_t>> block_reps;
        block_reps.reserve(blocks.size());
        for (const auto& b : blocks) {
            std::vector<rep_t> row;
            row.reserve(b.size());
            for (long long v : b) row.push_back(f.coerce(v));
            block_reps.push_back(std::move(row));
        }
        return build_reps(f, params, std::move(block_reps), g);
    }

    static LRCode build_reps(const Field& f, const LRCParams& params,
                             std::vector<std::vector<rep_t>> blocks, const UniPoly& g) {
        const std::size_t ell = params.locality;
        if (ell < 1) throw std::invalid_argument("locality must be at least 1");
        if (params.k < 1) throw std::invalid_argument("dimension must be at least 1");
        if (params.k % ell != 0)
            throw std::invalid_argument("locality must divide the dimension");

        std::size_t total = 0;
        std::set<rep_t> seen;
        for (const auto& block : blocks) {
            if (block.size() != ell + 1)
                throw std::invalid_argument("every block must have locality+1 points");
            for (rep_t p : block) {
                if (!seen.insert(p).second)
                    throw std::invalid_argument("evaluation points must be distinct across blocks");
                ++total;
            }
        }
        if (blocks.empty() || total != params.n)
            throw std::invalid_argument("blocks must partition n distinct evaluation points");

        if (!is_good_polynomial(g, blocks, f))
            throw std::invalid_argument(
                "polynomial is not good: it must have degree locality+1 and be constant on every block");

        const std::size_t groups = params.k / ell;
        const std::size_t max_degree = (groups - 1) * (ell + 1) + (ell - 1);
        if (max_degree > params.n - 1)
            throw std::invalid_argument("encoded degree exceeds n-1: shrink k or enlarge n");

        // coordinate order: blocks concatenated, points in given order
        std::vector<rep_t> points;
        points.reserve(params.n);
        for (const auto& block : blocks)
            for (rep_t p : block) points.push_back(p);

        Matrix gen(f, params.k, params.n);
        for (std::size_t j = 0; j < groups; ++j)
            for (std::size_t i = 0; i < ell; ++i)
                for (std::size_t col = 0; col < params.n; ++col) {
                    const rep_t p = points[col];
                    rep_t v = f.pow(p, static_cast<long long>(i));
                    v = f.mul(v, f.pow(g.eval(p), static_cast<long long>(j)));
                    gen.set_rep(j * ell + i, col, v);
                }

        LinearCode code = LinearCode::from_parts(gen, transpose(nullspace_basis(gen)));
        return LRCode(params, std::move(blocks), g, std::move(code));
    }

    const Field& field() const noexcept { return code_.field(); }
    const LRCParams& params() const noexcept { return params_; }
    std::size_t locality() const noexcept { return params_.locality; }
    const std::vector<std::vector<rep_t>>& blocks() const noexcept { return blocks_; }
    const UniPoly& good_polynomial() const noexcept { return g_; }
    const LinearCode& linear_code() const noexcept { return code_; }

    /// Interpolates the degree < locality restriction of the encoding
    /// polynomial through the other points of a single block and evaluates
    /// it at the erased point. Sees nothing but block-local data.
    static FieldElement recover_from_block(const Field& f, const std::vector<rep_t>& points,
                                           const std::vector<rep_t>& values, rep_t erased_point) {
        if (points.size() != values.size())
            throw std::invalid_argument("point/value count mismatch");
        if (points.empty()) throw std::invalid_argument("cannot recover from an empty block");
        rep_t acc = 0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            rep_t term = values[j];
            for (std::size_t t = 0; t < points.size(); ++t) {
                if (t == j) continue;
                if (points[j] == points[t])
                    throw std::invalid_argument("repeated points within a block");
                term = f.mul(term, f.div(f.sub(erased_point, points[t]),
                                         f.sub(points[j], points[t])));
            }
            acc = f.add(acc, term);
        }
        return FieldElement(f, acc);
    }

    /// Recovers the symbol at `erased_pos` of a codeword from the other
    /// locality symbols of its block; word[erased_pos] itself is ignored.
    FieldElement local_recover(const Vector& word, std::size_t erased_pos) const {
        field().require_same(word.field());
        if (word.size() != params_.n) throw std::invalid_argument("word length must equal n");
        if (erased_pos >= params_.n) throw std::invalid_argument("erased position out of range");

        const std::size_t block_size = params_.locality + 1;
        const std::size_t b = erased_pos / block_size;
        const std::size_t offset = b * block_size;

        std::vector<rep_t> pts, vals;
        pts.reserve(params_.locality);
        vals.reserve(params_.locality);
        for (std::size_t i = 0; i < block_size; ++i) {
            if (offset + i == erased_pos) continue;
            pts.push_back(blocks_[b][i]);
            vals.push_back(word.rep(offset + i));
        }
        return recover_from_block(field(), pts, vals, blocks_[b][erased_pos - offset]);
    }

   private:
    LRCode(LRCParams params, std::vector<std::vector<rep_t>> blocks, UniPoly g, LinearCode code)
        : params_(params), blocks_(std::move(blocks)), g_(std::move(g)), code_(std::move(code)) {}

    LRCParams params_;
    std::vector<std::vector<rep_t>> blocks_;
    UniPoly g_;
    LinearCode code_;
};

}  // namespace fqcodes

#endif  // FQCODES_LRC_HPP
