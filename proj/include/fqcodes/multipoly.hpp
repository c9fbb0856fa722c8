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

#ifndef FQCODES_MULTIPOLY_HPP
#define FQCODES_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"

namespace fqcodes {

/// Exponent vector of a monomial; the number of variables is its length.
struct Monomial {
    std::vector<std::uint32_t> exps;

    std::size_t nvars() const noexcept { return exps.size(); }

    std::size_t total_degree() const noexcept {
        std::size_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool divides(const Monomial& other) const {
        if (exps.size() != other.exps.size()) return false;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Monomial times(const Monomial& other) const {
        if (exps.size() != other.exps.size()) throw std::invalid_argument("monomial arity mismatch");
        Monomial out = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += other.exps[i];
        return out;
    }

    /// Quotient monomial; requires *this to divide other.
    Monomial quotient_into(const Monomial& other) const {
        Monomial out = other;
        for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] -= exps[i];
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Total order on monomials: lex or graded lex, x1 heaviest in ties.
class MonomialOrder {
   public:
    enum class Kind { lex, grlex };

    MonomialOrder(Kind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

    static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(Kind::lex, nvars); }
    static MonomialOrder grlex(std::size_t nvars) { return MonomialOrder(Kind::grlex, nvars); }

    Kind kind() const noexcept { return kind_; }
    std::size_t nvars() const noexcept { return nvars_; }

    bool less(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != nvars_ || b.nvars() != nvars_)
            throw std::invalid_argument("monomial arity does not match order");
        if (kind_ == Kind::grlex) {
            const std::size_t da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db;
        }
        for (std::size_t i = 0; i < nvars_; ++i)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        return false;
    }

   private:
    Kind kind_;
    std::size_t nvars_;
};

/// Sparse multivariate polynomial over a Field. The term map never stores
/// zero coefficients; the zero polynomial is the empty map.
class MultiPoly {
   public:
    using TermMap = std::map<std::vector<std::uint32_t>, rep_t>;

    static MultiPoly zero(const Field& f, std::size_t nvars) { return MultiPoly(f, nvars); }

    static MultiPoly constant(const Field& f, std::size_t nvars, rep_t c) {
        MultiPoly p(f, nvars);
        if (c != 0) p.terms_[std::vector<std::uint32_t>(nvars, 0)] = c;
        return p;
    }

    static MultiPoly monomial(const Field& f, const Monomial& m, rep_t c) {
        MultiPoly p(f, m.nvars());
        if (c >= f.order()) throw std::invalid_argument("coefficient out of range");
        if (c != 0) p.terms_[m.exps] = c;
        return p;
    }

    /// x_i (zero-based index) as a polynomial.
    static MultiPoly variable(const Field& f, std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw std::invalid_argument("variable index out of range");
        Monomial m{std::vector<std::uint32_t>(nvars, 0)};
        m.exps[i] = 1;
        return monomial(f, m, 1);
    }

    const Field& field() const noexcept { return f_; }
    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }

    std::size_t degree() const noexcept {
        std::size_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::size_t t = 0;
            for (auto x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    rep_t coeff(const Monomial& m) const {
        auto it = terms_.find(m.exps);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Monomial& m, rep_t c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
        auto it = terms_.find(m.exps);
        rep_t sum = f_.add(it == terms_.end() ? 0 : it->second, c);
        if (sum == 0) {
            if (it != terms_.end()) terms_.erase(it);
        } else if (it != terms_.end()) {
            it->second = sum;
        } else {
            terms_[m.exps] = sum;
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(Monomial{e}, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(Monomial{e}, a.f_.neg(c));
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly out(a.f_, a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(Monomial{ea}.times(Monomial{eb}), a.f_.mul(ca, cb));
        return out;
    }

    MultiPoly scaled(rep_t c) const {
        MultiPoly out(f_, nvars_);
        if (c == 0) return out;
        for (const auto& [e, v] : terms_) out.terms_[e] = f_.mul(c, v);
        return out;
    }
    MultiPoly negated() const { return scaled(f_.neg(1)); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.f_ == b.f_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Exact evaluation; 0^0 = 1.
    rep_t eval(const std::vector<rep_t>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("point arity mismatch");
        rep_t acc = 0;
        for (const auto& [e, c] : terms_) {
            rep_t t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0) t = f_.mul(t, f_.pow(point[i], static_cast<long long>(e[i])));
            acc = f_.add(acc, t);
        }
        return acc;
    }

    FieldElement eval(const std::vector<FieldElement>& point) const {
        std::vector<rep_t> reps;
        reps.reserve(point.size());
        for (const auto& e : point) {
            f_.require_same(e.field());
            reps.push_back(e.rep());
        }
        return FieldElement(f_, eval(reps));
    }

    Monomial leading_monomial(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading monomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(Monomial{best->first}, Monomial{it->first})) best = it;
        return Monomial{best->first};
    }

    rep_t leading_coeff(const MonomialOrder& ord) const { return coeff(leading_monomial(ord)); }

   private:
    MultiPoly(Field f, std::size_t nvars) : f_(std::move(f)), nvars_(nvars) {}

    void check_compatible(const MultiPoly& o) const {
        f_.require_same(o.f_);
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }

    Field f_;
    std::size_t nvars_;
    TermMap terms_;
};

/// Ordered list of pairwise distinct points in F^m; the order fixes the
/// codeword coordinate order of every evaluation code built on it.
class PointSet {
   public:
    PointSet(Field field, std::size_t m, std::vector<std::vector<rep_t>> points)
        : f_(std::move(field)), m_(m), pts_(std::move(points)) {
        if (m_ < 1) throw std::invalid_argument("ambient dimension must be at least 1");
        if (pts_.empty()) throw std::invalid_argument("point set must be nonempty");
        std::set<std::vector<rep_t>> seen;
        for (const auto& p : pts_) {
            if (p.size() != m_) throw std::invalid_argument("point arity mismatch");
            for (rep_t r : p)
                if (r >= f_.order()) throw std::invalid_argument("point coordinate out of range");
            if (!seen.insert(p).second) throw std::invalid_argument("duplicate points in point set");
        }
    }

    static PointSet from_ints(const Field& f, std::size_t m,
                              const std::vector<std::vector<long long>>& points) {
        std::vector<std::vector<rep_t>> reps;
        reps.reserve(points.size());
        for (const auto& p : points) {
            std::vector<rep_t> row;
            row.reserve(p.size());
            for (long long v : p) row.push_back(f.coerce(v));
            reps.push_back(std::move(row));
        }
        return PointSet(f, m, std::move(reps));
    }

    const Field& field() const noexcept { return f_; }
    std::size_t dimension() const noexcept { return m_; }
    std::size_t size() const noexcept { return pts_.size(); }
    const std::vector<rep_t>& point(std::size_t i) const { return pts_.at(i); }
    const std::vector<std::vector<rep_t>>& points() const noexcept { return pts_; }

   private:
    Field f_;
    std::size_t m_;
    std::vector<std::vector<rep_t>> pts_;
};

/// Reduced Groebner basis of the vanishing ideal of a finite point set,
/// plus the standard monomials (quotient basis).
struct VanishingIdeal {
    std::vector<MultiPoly> basis;             // monic, ascending leading terms
    std::vector<Monomial> standard_monomials;  // ascending under the order
    MonomialOrder order;
};

/// Buchberger-Moller: interpolation over the points drives the Groebner
/// basis computation, so the cost is controlled by |X| rather than by
/// general ideal machinery. |standard_monomials| always equals |X|.
inline VanishingIdeal bm_vanishing_ideal(const PointSet& X, const MonomialOrder& ord) {
    if (ord.nvars() != X.dimension()) throw std::invalid_argument("order arity mismatch");
    const Field& f = X.field();
    const std::size_t n = X.size();
    const std::size_t m = X.dimension();

    auto eval_monomial = [&](const Monomial& t) {
        std::vector<rep_t> v(n);
        for (std::size_t j = 0; j < n; ++j) {
            rep_t acc = 1;
            const auto& p = X.point(j);
            for (std::size_t i = 0; i < m; ++i)
                if (t.exps[i] != 0) acc = f.mul(acc, f.pow(p[i], static_cast<long long>(t.exps[i])));
            v[j] = acc;
        }
        return v;
    };

    struct Row {
        std::size_t pivot;
        std::vector<rep_t> vec;  // normalized: vec[pivot] == 1
        MultiPoly combo;         // eval(combo) == vec
    };

    auto cmp = [&ord](const Monomial& a, const Monomial& b) { return ord.less(a, b); };
    std::set<Monomial, decltype(cmp)> candidates(cmp);
    candidates.insert(Monomial{std::vector<std::uint32_t>(m, 0)});

    std::vector<Row> rows;
    std::vector<Monomial> leading_terms;
    std::vector<MultiPoly> basis;
    std::vector<Monomial> standard;

    while (!candidates.empty()) {
        Monomial t = *candidates.begin();
        candidates.erase(candidates.begin());

        bool redundant = false;
        for (const auto& lt : leading_terms)
            if (lt.divides(t)) {
                redundant = true;
                break;
            }
        if (redundant) continue;

        std::vector<rep_t> v = eval_monomial(t);
        MultiPoly combo = MultiPoly::monomial(f, t, 1);
        for (const Row& row : rows) {
            const rep_t c = v[row.pivot];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(c, row.vec[j]));
            combo = combo - row.combo.scaled(c);
        }

        std::size_t pivot = n;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }

        if (pivot == n) {
            // t - (combination of standard monomials) vanishes on X
            basis.push_back(combo);
            leading_terms.push_back(t);
        } else {
            const rep_t inv = f.inv(v[pivot]);
            for (auto& x : v) x = f.mul(inv, x);
            combo = combo.scaled(inv);
            rows.push_back(Row{pivot, std::move(v), std::move(combo)});
            standard.push_back(t);
            for (std::size_t i = 0; i < m; ++i) {
                Monomial u = t;
                ++u.exps[i];
                bool skip = false;
                for (const auto& lt : leading_terms)
                    if (lt.divides(u)) {
                        skip = true;
                        break;
                    }
                if (!skip) candidates.insert(u);
            }
        }
    }

    if (standard.size() != n) throw std::logic_error("standard monomial count mismatch");
    return VanishingIdeal{std::move(basis), std::move(standard), ord};
}

/// Normal form of f modulo a list of polynomials monic in their leading
/// term: no term of the result is divisible by any basis leading term.
inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                             const MonomialOrder& ord) {
    const Field& field = f.field();
    MultiPoly rem = MultiPoly::zero(field, f.nvars());
    MultiPoly work = f;
    while (!work.is_zero()) {
        const Monomial lt = work.leading_monomial(ord);
        const rep_t lc = work.coeff(lt);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Monomial glt = g.leading_monomial(ord);
            if (!glt.divides(lt)) continue;
            const Monomial shift = glt.quotient_into(lt);
            work = work - (g * MultiPoly::monomial(field, shift, 1)).scaled(lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt, lc);
            work.add_term(lt, field.neg(lc));
        }
    }
    return rem;
}

inline std::string to_string(const MultiPoly& p, const std::vector<std::string>& var_names = {}) {
    if (p.is_zero()) return "0";
    auto var = [&](std::size_t i) {
        if (i < var_names.size()) return var_names[i];
        return "x" + std::to_string(i + 1);
    };
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!s.empty()) s += "+";
        const auto& [e, c] = *it;
        std::string coeff = to_string(FieldElement(p.field(), c));
        bool any_var = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono += "*";
            any_var = true;
            mono += var(i);
            if (e[i] >= 2) mono += "^" + std::to_string(e[i]);
        }
        if (!any_var) {
            s += coeff;
        } else if (coeff == "1") {
            s += mono;
        } else {
            s += (coeff.find('+') != std::string::npos ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
    }
    return s;
}

}  // namespace fqcodes

#endif  // FQCODES_MULTIPOLY_HPP
