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

#ifndef FQCODES_IO_HPP
#define FQCODES_IO_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evaluation_code.hpp"
#include "galois.hpp"
#include "linear_code.hpp"
#include "lrc.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "unipoly.hpp"

namespace fqcodes {

class parse_error : public std::runtime_error {
   public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed form of the code file format:
///
///   field p r
///   modulus c0 c1 ... cr          (iff r > 1)
///   generator rows n
///   <rows lines of decimal reps>
///   points count m                (evaluation codes)
///   <count point lines>
///   polys count nvars             (evaluation codes)
///   poly nterms                   (terms: coeff e1 ... em)
///   ...
///   blocks count size             (locally recoverable codes)
///   <count block lines of point reps>
///   goodpoly c0 c1 ... cd         (locally recoverable codes)
struct CodeFile {
    Field field;
    Matrix generator_rows;
    std::optional<std::vector<std::vector<rep_t>>> points;  // rows in F^m
    std::optional<std::vector<MultiPoly>> polys;
    std::optional<std::vector<std::vector<rep_t>>> blocks;
    std::optional<UniPoly> good_poly;

    LinearCode to_linear_code() const { return LinearCode::from_span_matrix(generator_rows); }

    /// Rebuilds the LRC from its serialized blocks and good polynomial;
    /// k is the rank of the stored generator rows.
    LRCode to_lrc() const {
        if (!blocks || !good_poly)
            throw parse_error("file lacks the blocks/goodpoly sections of a locally recoverable code");
        const std::size_t k = rank(generator_rows);
        std::size_t n = 0;
        for (const auto& b : *blocks) n += b.size();
        if (blocks->empty()) throw parse_error("empty blocks section");
        LRCParams params{field.order(), n, k, blocks->front().size() - 1};
        return LRCode::build_reps(field, params, *blocks, *good_poly);
    }
};

namespace detail {

inline void write_field_header(std::string& out, const Field& f) {
    out += "field " + std::to_string(f.characteristic()) + " " + std::to_string(f.degree()) + "\n";
    if (f.degree() > 1) {
        out += "modulus";
        for (rep_t c : f.modulus()) out += " " + std::to_string(c);
        out += "\n";
    }
}

inline void write_generator(std::string& out, const Matrix& rows) {
    out += "generator " + std::to_string(rows.rows()) + " " + std::to_string(rows.cols()) + "\n";
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            if (j) out += " ";
            out += std::to_string(rows.rep(i, j));
        }
        out += "\n";
    }
}

}  // namespace detail

inline std::string serialize(const LinearCode& code) {
    std::string out;
    detail::write_field_header(out, code.field());
    detail::write_generator(out, code.presentation_rows());
    return out;
}

inline std::string serialize(const EvaluationCode& code) {
    std::string out;
    detail::write_field_header(out, code.field());
    detail::write_generator(out, code.linear_code().presentation_rows());
    const PointSet& pts = code.points();
    out += "points " + std::to_string(pts.size()) + " " + std::to_string(pts.dimension()) + "\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts.point(i);
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(p[j]);
        }
        out += "\n";
    }
    out += "polys " + std::to_string(code.polynomials().size()) + " " +
           std::to_string(pts.dimension()) + "\n";
    for (const MultiPoly& poly : code.polynomials()) {
        out += "poly " + std::to_string(poly.terms().size()) + "\n";
        for (const auto& [exps, coeff] : poly.terms()) {
            out += std::to_string(coeff);
            for (auto e : exps) out += " " + std::to_string(e);
            out += "\n";
        }
    }
    return out;
}

inline std::string serialize(const LRCode& code) {
    std::string out;
    detail::write_field_header(out, code.field());
    detail::write_generator(out, code.linear_code().presentation_rows());
    const auto& blocks = code.blocks();
    out += "blocks " + std::to_string(blocks.size()) + " " +
           std::to_string(blocks.front().size()) + "\n";
    for (const auto& block : blocks) {
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(block[j]);
        }
        out += "\n";
    }
    out += "goodpoly";
    for (rep_t c : code.good_polynomial().coeffs()) out += " " + std::to_string(c);
    out += "\n";
    return out;
}

namespace detail {

class TokenReader {
   public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        std::string tok;
        if (in_ >> tok) return tok;
        return std::nullopt;
    }

    std::string expect_word() {
        auto t = next();
        if (!t) throw parse_error("unexpected end of input");
        return *t;
    }

    std::uint64_t expect_uint(const char* what) {
        const std::string t = expect_word();
        if (t.empty()) throw parse_error(std::string("expected ") + what);
        std::uint64_t v = 0;
        for (char c : t) {
            if (c < '0' || c > '9')
                throw parse_error(std::string("expected ") + what + ", got '" + t + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    }

    rep_t expect_rep(const Field& f) {
        const std::uint64_t v = expect_uint("element rep");
        if (v >= f.order())
            throw parse_error("element rep " + std::to_string(v) + " out of range for " + f.label());
        return static_cast<rep_t>(v);
    }

   private:
    std::istream& in_;
};

}  // namespace detail

inline CodeFile parse_code_file(std::istream& in) {
    detail::TokenReader r(in);

    if (r.expect_word() != "field") throw parse_error("file must start with a field header");
    const std::uint64_t p = r.expect_uint("characteristic");
    const std::uint64_t deg = r.expect_uint("extension degree");
    if (deg < 1 || deg > 64) throw parse_error("extension degree out of range");
    Field field = field_build(p, static_cast<unsigned>(deg));

    auto tok = r.next();
    if (deg > 1) {
        if (!tok || *tok != "modulus") throw parse_error("extension field requires a modulus line");
        std::vector<rep_t> coeffs;
        for (std::size_t i = 0; i <= deg; ++i)
            coeffs.push_back(static_cast<rep_t>(r.expect_uint("modulus coefficient")));
        if (coeffs != field.modulus())
            throw parse_error("modulus does not match the canonical modulus of GF(" +
                              std::to_string(field.order()) + ")");
        tok = r.next();
    }

    if (!tok || *tok != "generator") throw parse_error("missing generator section");
    const std::uint64_t rows = r.expect_uint("generator row count");
    const std::uint64_t cols = r.expect_uint("generator column count");
    if (cols < 1) throw parse_error("code length must be at least 1");
    Matrix gen(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) gen.set_rep(i, j, r.expect_rep(field));

    CodeFile file{field, std::move(gen), std::nullopt, std::nullopt, std::nullopt, std::nullopt};

    for (tok = r.next(); tok; tok = r.next()) {
        if (*tok == "points") {
            const std::uint64_t count = r.expect_uint("point count");
            const std::uint64_t m = r.expect_uint("point dimension");
            std::vector<std::vector<rep_t>> pts;
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<rep_t> row;
                for (std::size_t j = 0; j < m; ++j) row.push_back(r.expect_rep(field));
                pts.push_back(std::move(row));
            }
            file.points = std::move(pts);
        } else if (*tok == "polys") {
            const std::uint64_t count = r.expect_uint("polynomial count");
            const std::uint64_t nvars = r.expect_uint("variable count");
            std::vector<MultiPoly> polys;
            for (std::size_t i = 0; i < count; ++i) {
                if (r.expect_word() != "poly") throw parse_error("expected poly header");
                const std::uint64_t nterms = r.expect_uint("term count");
                MultiPoly poly = MultiPoly::zero(field, static_cast<std::size_t>(nvars));
                for (std::size_t t = 0; t < nterms; ++t) {
                    const rep_t coeff = r.expect_rep(field);
                    Monomial mono{std::vector<std::uint32_t>(nvars, 0)};
                    for (std::size_t v = 0; v < nvars; ++v)
                        mono.exps[v] = static_cast<std::uint32_t>(r.expect_uint("exponent"));
                    poly.add_term(mono, coeff);
                }
                polys.push_back(std::move(poly));
            }
            file.polys = std::move(polys);
        } else if (*tok == "blocks") {
            const std::uint64_t count = r.expect_uint("block count");
            const std::uint64_t size = r.expect_uint("block size");
            std::vector<std::vector<rep_t>> blocks;
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<rep_t> row;
                for (std::size_t j = 0; j < size; ++j) row.push_back(r.expect_rep(field));
                blocks.push_back(std::move(row));
            }
            file.blocks = std::move(blocks);
        } else if (*tok == "goodpoly") {
            // always the final section
            std::vector<rep_t> coeffs;
            for (auto t = r.next(); t; t = r.next()) {
                std::uint64_t v = 0;
                for (char c : *t) {
                    if (c < '0' || c > '9')
                        throw parse_error("goodpoly coefficients must be numeric");
                    v = v * 10 + static_cast<std::uint64_t>(c - '0');
                }
                if (v >= field.order()) throw parse_error("goodpoly coefficient out of range");
                coeffs.push_back(static_cast<rep_t>(v));
            }
            file.good_poly = UniPoly(field, std::move(coeffs));
            break;
        } else {
            throw parse_error("unknown section '" + *tok + "'");
        }
    }

    return file;
}

inline CodeFile parse_code_file(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

}  // namespace fqcodes

#endif  // FQCODES_IO_HPP
