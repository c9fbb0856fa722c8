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

#ifndef FQCODES_UNIPOLY_HPP
#define FQCODES_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"

namespace fqcodes {

/// Dense univariate polynomial over a Field; coefficients ascending,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class UniPoly {
   public:
    UniPoly(Field field, std::vector<rep_t> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
        for (rep_t r : c_)
            if (r >= f_.order()) throw std::invalid_argument("coefficient out of range for " + f_.label());
        trim();
    }

    static UniPoly zero(const Field& f) { return UniPoly(f, {}); }
    static UniPoly one(const Field& f) { return UniPoly(f, {1}); }

    static UniPoly from_ints(const Field& f, const std::vector<long long>& coeffs) {
        std::vector<rep_t> reps;
        reps.reserve(coeffs.size());
        for (long long v : coeffs) reps.push_back(f.coerce(v));
        return UniPoly(f, std::move(reps));
    }

    /// x^n - 1
    static UniPoly xn_minus_one(const Field& f, std::size_t n) {
        std::vector<rep_t> c(n + 1, 0);
        c[0] = f.neg(1);
        c[n] = 1;
        return UniPoly(f, std::move(c));
    }

    const Field& field() const noexcept { return f_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    rep_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    rep_t leading_coeff() const {
        if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<rep_t>& coeffs() const noexcept { return c_; }

    /// Coefficient vector padded with zeros to length n; requires deg < n.
    std::vector<rep_t> padded(std::size_t n) const {
        if (c_.size() > n) throw std::invalid_argument("polynomial degree too large for padding");
        std::vector<rep_t> out = c_;
        out.resize(n, 0);
        return out;
    }

    rep_t eval(rep_t x) const {
        rep_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
        return acc;
    }
    FieldElement eval(const FieldElement& x) const {
        f_.require_same(x.field());
        return FieldElement(f_, eval(x.rep()));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.f_.require_same(b.f_);
        std::vector<rep_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
        return UniPoly(a.f_, std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        a.f_.require_same(b.f_);
        std::vector<rep_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
        return UniPoly(a.f_, std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.f_.require_same(b.f_);
        if (a.is_zero() || b.is_zero()) return zero(a.f_);
        std::vector<rep_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.f_.add(c[i + j], a.f_.mul(a.c_[i], b.c_[j]));
        }
        return UniPoly(a.f_, std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.f_ == b.f_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
        f_.require_same(divisor.f_);
        if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
        UniPoly rem = *this;
        std::vector<rep_t> quot(c_.size() > divisor.c_.size() ? c_.size() - divisor.c_.size() + 1 : 1, 0);
        const rep_t lead_inv = f_.inv(divisor.leading_coeff());
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
            const rep_t c = f_.mul(rem.leading_coeff(), lead_inv);
            quot[shift] = c;
            for (std::size_t j = 0; j < divisor.c_.size(); ++j)
                rem.c_[shift + j] = f_.sub(rem.c_[shift + j], f_.mul(c, divisor.c_[j]));
            rem.trim();
        }
        return {UniPoly(f_, std::move(quot)), std::move(rem)};
    }

    UniPoly mod(const UniPoly& divisor) const { return divmod(divisor).second; }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Field f_;
    std::vector<rep_t> c_;
};

inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = static_cast<std::size_t>(p.degree()) + 1; i-- > 0;) {
        if (p.coeff(i) == 0) continue;
        if (!s.empty()) s += "+";
        std::string c = to_string(FieldElement(p.field(), p.coeff(i)));
        if (i == 0) {
            s += c;
        } else {
            if (c != "1") s += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*";
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace fqcodes

#endif  // FQCODES_UNIPOLY_HPP
