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

#ifndef FQCODES_EVALUATION_CODE_HPP
#define FQCODES_EVALUATION_CODE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"

namespace fqcodes {

namespace detail {

/// Monomials with total degree in [min_deg, max_deg] and per-variable caps,
/// listed ascending under grlex so every construction is deterministic.
inline std::vector<Monomial> enumerate_monomials(std::size_t m, std::size_t min_deg,
                                                 std::size_t max_deg,
                                                 const std::vector<std::size_t>& caps) {
    std::vector<Monomial> out;
    Monomial cur{std::vector<std::uint32_t>(m, 0)};
    auto rec = [&](auto&& self, std::size_t var, std::size_t used) -> void {
        if (var == m) {
            if (used >= min_deg) out.push_back(cur);
            return;
        }
        const std::size_t cap = std::min(caps.empty() ? max_deg : caps[var], max_deg - used);
        for (std::size_t e = 0; e <= cap; ++e) {
            cur.exps[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, used + e);
        }
        cur.exps[var] = 0;
    };
    rec(rec, 0, 0);
    MonomialOrder ord = MonomialOrder::grlex(m);
    std::sort(out.begin(), out.end(),
              [&ord](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return out;
}

/// Cartesian product of per-coordinate value lists, row-major with the
/// last coordinate varying fastest.
inline std::vector<std::vector<rep_t>> grid_points(const std::vector<std::vector<rep_t>>& subsets) {
    std::size_t total = 1;
    for (const auto& s : subsets) total *= s.size();
    std::vector<std::vector<rep_t>> pts;
    pts.reserve(total);
    std::vector<std::size_t> idx(subsets.size(), 0);
    for (std::size_t c = 0; c < total; ++c) {
        std::vector<rep_t> p(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) p[i] = subsets[i][idx[i]];
        pts.push_back(std::move(p));
        for (std::size_t i = subsets.size(); i-- > 0;) {
            if (++idx[i] < subsets[i].size()) break;
            idx[i] = 0;
        }
    }
    return pts;
}

}  // namespace detail

/// Image of the evaluation map sending a polynomial in the span S to its
/// values at a point set X. Keeps the raw |S| x |X| evaluation matrix (the
/// rows may be dependent), the underlying LinearCode, and a lazily computed
/// vanishing ideal of X.
class EvaluationCode {
   public:
    static EvaluationCode build(const Field& f, const std::vector<std::vector<long long>>& points,
                                const std::vector<MultiPoly>& polys) {
        if (points.empty()) throw std::invalid_argument("evaluation code needs at least one point");
        std::vector<std::vector<rep_t>> reps;
        reps.reserve(points.size());
        for (const auto& p : points) {
            std::vector<rep_t> row;
            row.reserve(p.size());
            for (long long v : p) row.push_back(f.coerce(v));
            reps.push_back(std::move(row));
        }
        return build_reps(f, std::move(reps), polys);
    }

    /// Duplicate points are dropped (first occurrence kept, order preserved).
    static EvaluationCode build_reps(const Field& f, std::vector<std::vector<rep_t>> points,
                                     const std::vector<MultiPoly>& polys) {
        if (points.empty()) throw std::invalid_argument("evaluation code needs at least one point");
        if (polys.empty()) throw std::invalid_argument("evaluation code needs at least one polynomial");
        const std::size_t m = points.front().size();
        std::set<std::vector<rep_t>> seen;
        std::vector<std::vector<rep_t>> unique;
        for (auto& p : points) {
            if (p.size() != m) throw std::invalid_argument("point arity mismatch");
            if (seen.insert(p).second) unique.push_back(std::move(p));
        }
        for (const auto& s : polys) {
            f.require_same(s.field());
            if (s.nvars() != m) throw std::invalid_argument("polynomial arity does not match points");
        }
        return EvaluationCode(PointSet(f, m, std::move(unique)), polys);
    }

    /// Monomial span given as a matrix of exponent vectors, one per row.
    static EvaluationCode from_monomial_matrix(const Field& f,
                                               const std::vector<std::vector<long long>>& points,
                                               const std::vector<std::vector<std::uint32_t>>& exps) {
        if (exps.empty()) throw std::invalid_argument("evaluation code needs at least one polynomial");
        const std::size_t m = exps.front().size();
        std::vector<MultiPoly> polys;
        polys.reserve(exps.size());
        for (const auto& e : exps) {
            if (e.size() != m) throw std::invalid_argument("ragged exponent matrix");
            polys.push_back(MultiPoly::monomial(f, Monomial{e}, 1));
        }
        return build(f, points, polys);
    }

    const Field& field() const noexcept { return pts_.field(); }
    const PointSet& points() const noexcept { return pts_; }
    const std::vector<MultiPoly>& polynomials() const noexcept { return polys_; }
    const Matrix& raw_evaluation() const noexcept { return raw_; }
    const LinearCode& linear_code() const noexcept { return *code_; }
    std::size_t length() const noexcept { return pts_.size(); }
    std::size_t dim() const noexcept { return code_->dim(); }

    /// Vanishing ideal of the point set under grlex, computed at most once
    /// even under concurrent access.
    const VanishingIdeal& vanishing_ideal() const {
        std::call_once(cache_->flag, [&] {
            cache_->value.emplace(
                bm_vanishing_ideal(pts_, MonomialOrder::grlex(pts_.dimension())));
        });
        return *cache_->value;
    }

   private:
    EvaluationCode(PointSet pts, std::vector<MultiPoly> polys)
        : pts_(std::move(pts)),
          polys_(std::move(polys)),
          raw_(build_raw(pts_, polys_)),
          code_(std::make_shared<LinearCode>(LinearCode::from_span_matrix(raw_, raw_))),
          cache_(std::make_shared<Cache>()) {}

    static Matrix build_raw(const PointSet& pts, const std::vector<MultiPoly>& polys) {
        Matrix raw(pts.field(), polys.size(), pts.size());
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j)
                raw.set_rep(i, j, polys[i].eval(pts.point(j)));
        return raw;
    }

    struct Cache {
        std::once_flag flag;
        std::optional<VanishingIdeal> value;
    };

    PointSet pts_;
    std::vector<MultiPoly> polys_;
    Matrix raw_;
    std::shared_ptr<LinearCode> code_;
    std::shared_ptr<Cache> cache_;
};

/// Evaluation of all monomials of total degree <= d (per-variable exponent
/// capped at |subset|-1) on the Cartesian product of the subsets.
inline EvaluationCode cartesian_code(const Field& f,
                                     const std::vector<std::vector<long long>>& subsets,
                                     std::size_t d) {
    if (subsets.empty()) throw std::invalid_argument("cartesian code needs at least one subset");
    std::vector<std::vector<rep_t>> reps;
    std::vector<std::size_t> caps;
    for (const auto& s : subsets) {
        if (s.empty()) throw std::invalid_argument("empty subset in cartesian code");
        std::vector<rep_t> row;
        std::set<rep_t> seen;
        for (long long v : s) {
            rep_t r = f.coerce(v);
            if (!seen.insert(r).second) throw std::invalid_argument("duplicate entries within a subset");
            row.push_back(r);
        }
        caps.push_back(row.size() - 1);
        reps.push_back(std::move(row));
    }
    const std::size_t m = subsets.size();
    auto monos = detail::enumerate_monomials(m, 0, d, caps);
    std::vector<MultiPoly> polys;
    polys.reserve(monos.size());
    for (const auto& t : monos) polys.push_back(MultiPoly::monomial(f, t, 1));
    return EvaluationCode::build_reps(f, detail::grid_points(reps), polys);
}

/// Explicit-span variant on the same grid.
inline EvaluationCode cartesian_code(const Field& f,
                                     const std::vector<std::vector<long long>>& subsets,
                                     const std::vector<MultiPoly>& polys) {
    if (subsets.empty()) throw std::invalid_argument("cartesian code needs at least one subset");
    std::vector<std::vector<rep_t>> reps;
    for (const auto& s : subsets) {
        if (s.empty()) throw std::invalid_argument("empty subset in cartesian code");
        std::vector<rep_t> row;
        std::set<rep_t> seen;
        for (long long v : s) {
            rep_t r = f.coerce(v);
            if (!seen.insert(r).second) throw std::invalid_argument("duplicate entries within a subset");
            row.push_back(r);
        }
        reps.push_back(std::move(row));
    }
    return EvaluationCode::build_reps(f, detail::grid_points(reps), polys);
}

/// Generalized Reed-Muller: degree <= d evaluations on all of GF(q)^m,
/// subsets in ascending rep order, exponents capped at q-1 per variable.
inline EvaluationCode rm_code(std::uint64_t q, std::size_t m, std::size_t d) {
    if (m < 1) throw std::invalid_argument("Reed-Muller needs at least one variable");
    Field f = field_from_order(q);
    std::vector<std::vector<long long>> subsets(m);
    for (auto& s : subsets)
        for (std::uint64_t v = 0; v < q; ++v) s.push_back(static_cast<long long>(v));
    return cartesian_code(f, subsets, d);
}

/// Reed-Solomon: rows of the raw matrix are the 0th..(k-1)th powers of the
/// evaluation points, so the generator is the classic Vandermonde matrix.
inline EvaluationCode rs_code(const Field& f, const std::vector<long long>& points, std::size_t k) {
    if (k < 1 || k > points.size()) throw std::invalid_argument("need 1 <= k <= number of points");
    std::set<rep_t> seen;
    std::vector<std::vector<rep_t>> pts;
    for (long long v : points) {
        rep_t r = f.coerce(v);
        if (!seen.insert(r).second) throw std::invalid_argument("duplicate evaluation points");
        pts.push_back({r});
    }
    std::vector<MultiPoly> polys;
    for (std::size_t i = 0; i < k; ++i)
        polys.push_back(MultiPoly::monomial(f, Monomial{{static_cast<std::uint32_t>(i)}}, 1));
    return EvaluationCode::build_reps(f, std::move(pts), polys);
}

/// Monomial evaluations on the torus (F \ {0})^m, points in lexicographic
/// rep order. Rows of E are the exponent vectors; entries may be negative
/// and are reduced mod q-1, which is harmless on the torus.
inline EvaluationCode toric_code(const Field& f, const std::vector<std::vector<long long>>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("toric code needs at least one exponent row");
    const std::size_t m = exponents.front().size();
    if (m < 1) throw std::invalid_argument("toric code needs at least one variable");
    const long long qm1 = static_cast<long long>(f.order()) - 1;

    std::vector<MultiPoly> polys;
    for (const auto& row : exponents) {
        if (row.size() != m) throw std::invalid_argument("ragged exponent matrix");
        Monomial t{std::vector<std::uint32_t>(m, 0)};
        for (std::size_t i = 0; i < m; ++i)
            t.exps[i] = static_cast<std::uint32_t>(((row[i] % qm1) + qm1) % qm1);
        polys.push_back(MultiPoly::monomial(f, t, 1));
    }

    std::vector<std::vector<rep_t>> nonzero(m);
    for (auto& s : nonzero)
        for (std::uint64_t v = 1; v < f.order(); ++v) s.push_back(static_cast<rep_t>(v));
    return EvaluationCode::build_reps(f, detail::grid_points(nonzero), polys);
}

/// Rows of the 0/1 incidence matrix become points in F^(#edges)
/// (deduplicated, row order kept); the span is every monomial of total
/// degree exactly d.
inline EvaluationCode ev_code_graph(const Field& f,
                                    const std::vector<std::vector<long long>>& incidence,
                                    std::size_t d) {
    if (incidence.empty() || incidence.front().empty())
        throw std::invalid_argument("incidence matrix must be nonempty");
    if (d < 1) throw std::invalid_argument("degree must be at least 1");
    const std::size_t m = incidence.front().size();
    for (const auto& row : incidence) {
        if (row.size() != m) throw std::invalid_argument("ragged incidence matrix");
        for (long long v : row)
            if (v != 0 && v != 1) throw std::invalid_argument("incidence entries must be 0 or 1");
    }
    auto monos = detail::enumerate_monomials(m, d, d, {});
    std::vector<MultiPoly> polys;
    polys.reserve(monos.size());
    for (const auto& t : monos) polys.push_back(MultiPoly::monomial(f, t, 1));
    return EvaluationCode::build(f, incidence, polys);
}

}  // namespace fqcodes

#endif  // FQCODES_EVALUATION_CODE_HPP
