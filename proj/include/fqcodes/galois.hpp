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

#ifndef FQCODES_GALOIS_HPP
#define FQCODES_GALOIS_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fqcodes {

/// Element representation: an integer in [0, q) whose base-p digits
/// (little-endian) are the coefficients of the element as a polynomial
/// in the generator `a`.
using rep_t = std::uint32_t;

class Field;
class FieldElement;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense univariate polynomials over GF(p) with plain integer coefficients
// (ascending degree). Only used for modulus search and validation.
using PPoly = std::vector<std::uint64_t>;

inline void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t scalar_pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t res = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) res = res * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return res;
}

inline std::uint64_t scalar_inv_mod(std::uint64_t a, std::uint64_t p) {
    return scalar_pow_mod(a, p - 2, p);
}

inline PPoly pmul(const PPoly& f, const PPoly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    PPoly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = (out[i + j] + f[i] * g[j]) % p;
    }
    ptrim(out);
    return out;
}

inline PPoly pmod(PPoly f, const PPoly& g, std::uint64_t p) {
    ptrim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = scalar_inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t j = 0; j <= dg; ++j) {
            std::uint64_t sub = c * g[j] % p;
            f[shift + j] = (f[shift + j] + p - sub) % p;
        }
        ptrim(f);
        if (f.empty()) break;
    }
    return f;
}

inline PPoly pgcd(PPoly f, PPoly g, std::uint64_t p) {
    ptrim(f);
    ptrim(g);
    while (!g.empty()) {
        PPoly r = pmod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

inline PPoly ppow_mod(PPoly base, std::uint64_t e, const PPoly& m, std::uint64_t p) {
    PPoly res{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) res = pmod(pmul(res, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return res;
}

// Monic f of degree >= 1 over GF(p). Degrees 2 and 3 are settled by a root
// scan; larger degrees by gcd(f, x^(p^i) - x) for i <= deg/2.
inline bool is_irreducible(const PPoly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    if (deg <= 3) {
        for (std::uint64_t x = 0; x < p; ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    PPoly t{0, 1};  // x
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        t = ppow_mod(std::move(t), p, f, p);
        PPoly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Full element arithmetic is table-driven for orders up to this limit.
constexpr std::uint64_t kFieldTableLimit = 64;

struct FieldData {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t q = 0;
    std::vector<rep_t> modulus;   // r+1 coefficients ascending; empty when r == 1
    std::vector<std::uint64_t> ppow;  // p^0 .. p^r
    std::vector<rep_t> mul_tab, add_tab, inv_tab;
    bool tables = false;

    rep_t add_slow(rep_t a, rep_t b) const {
        if (r == 1) return static_cast<rep_t>((std::uint64_t(a) + b) % p);
        std::uint64_t out = 0;
        for (unsigned i = 0; i < r; ++i) {
            std::uint64_t da = (a / ppow[i]) % p;
            std::uint64_t db = (b / ppow[i]) % p;
            out += ((da + db) % p) * ppow[i];
        }
        return static_cast<rep_t>(out);
    }

    rep_t neg_slow(rep_t a) const {
        if (r == 1) return a == 0 ? 0 : static_cast<rep_t>(p - a);
        std::uint64_t out = 0;
        for (unsigned i = 0; i < r; ++i) {
            std::uint64_t da = (a / ppow[i]) % p;
            out += ((p - da) % p) * ppow[i];
        }
        return static_cast<rep_t>(out);
    }

    rep_t mul_slow(rep_t a, rep_t b) const {
        if (r == 1) return static_cast<rep_t>(std::uint64_t(a) * b % p);
        std::vector<std::uint64_t> da(r), db(r), conv(2 * r - 1, 0);
        for (unsigned i = 0; i < r; ++i) {
            da[i] = (a / ppow[i]) % p;
            db[i] = (b / ppow[i]) % p;
        }
        for (unsigned i = 0; i < r; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < r; ++j)
                conv[i + j] = (conv[i + j] + da[i] * db[j]) % p;
        }
        // reduce by the monic modulus: x^r = -(c_{r-1} x^{r-1} + ... + c_0)
        for (std::size_t i = conv.size(); i-- > r;) {
            const std::uint64_t c = conv[i];
            if (c == 0) continue;
            conv[i] = 0;
            for (unsigned j = 0; j < r; ++j) {
                std::uint64_t sub = c * modulus[j] % p;
                conv[i - r + j] = (conv[i - r + j] + p - sub) % p;
            }
        }
        std::uint64_t out = 0;
        for (unsigned i = 0; i < r; ++i) out += conv[i] * ppow[i];
        return static_cast<rep_t>(out);
    }
};

}  // namespace detail

/// GF(p^r) with modulus fixed at construction. Immutable and cheap to copy;
/// two Field values interoperate iff (p, r, modulus) coincide.
class Field {
   public:
    std::uint64_t characteristic() const noexcept { return d_->p; }
    unsigned degree() const noexcept { return d_->r; }
    std::uint64_t order() const noexcept { return d_->q; }

    /// Modulus coefficients, ascending degree; empty for prime fields.
    const std::vector<rep_t>& modulus() const noexcept { return d_->modulus; }

    bool operator==(const Field& o) const noexcept {
        if (d_ == o.d_) return true;
        return d_->p == o.d_->p && d_->r == o.d_->r && d_->modulus == o.d_->modulus;
    }
    bool operator!=(const Field& o) const noexcept { return !(*this == o); }

    // rep-level arithmetic (hot path, no element wrappers)
    rep_t add(rep_t a, rep_t b) const {
        return d_->tables ? d_->add_tab[a * d_->q + b] : d_->add_slow(a, b);
    }
    rep_t neg(rep_t a) const { return d_->neg_slow(a); }
    rep_t sub(rep_t a, rep_t b) const { return add(a, neg(b)); }
    rep_t mul(rep_t a, rep_t b) const {
        return d_->tables ? d_->mul_tab[a * d_->q + b] : d_->mul_slow(a, b);
    }
    rep_t inv(rep_t a) const {
        if (a == 0) throw std::invalid_argument("division by zero in " + label());
        if (d_->tables) return d_->inv_tab[a];
        return pow(a, static_cast<long long>(d_->q) - 2);
    }
    rep_t div(rep_t a, rep_t b) const { return mul(a, inv(b)); }

    rep_t pow(rep_t a, long long e) const {
        if (a == 0) {
            if (e < 0) throw std::invalid_argument("division by zero in " + label());
            return e == 0 ? 1 : 0;
        }
        std::uint64_t m = d_->q - 1;
        std::uint64_t ee = static_cast<std::uint64_t>(((e % static_cast<long long>(m)) + static_cast<long long>(m)) % static_cast<long long>(m));
        rep_t res = 1, base = a;
        while (ee) {
            if (ee & 1) res = mul(res, base);
            base = mul(base, base);
            ee >>= 1;
        }
        return res;
    }

    FieldElement element(std::uint64_t rep) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;

    /// Maps an integer to an element: the magnitude is taken mod q as a rep,
    /// and a leading minus sign means field negation.
    rep_t coerce(long long v) const {
        std::uint64_t mag = static_cast<std::uint64_t>(v < 0 ? -v : v) % d_->q;
        rep_t rep = static_cast<rep_t>(mag);
        return v < 0 ? neg(rep) : rep;
    }

    /// All q elements in display order: 0 first, then reps p..q-1 ascending,
    /// then the nonzero constants 1..p-1. For GF(4) this is {0, a, a+1, 1};
    /// for prime fields it is 0, 1, ..., p-1.
    std::vector<FieldElement> elements() const;

    std::string label() const { return "GF(" + std::to_string(d_->q) + ")"; }

    std::string modulus_string() const {
        if (d_->r == 1) return "";
        std::string s;
        for (unsigned i = d_->r + 1; i-- > 0;) {
            rep_t c = d_->modulus[i];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(c);
            } else {
                if (c != 1) s += std::to_string(c);
                s += "x";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    void require_same(const Field& o) const {
        if (*this != o)
            throw std::invalid_argument("field mismatch: " + label() + " vs " + o.label());
    }

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    friend Field field_build(std::uint64_t, unsigned);
    std::shared_ptr<const detail::FieldData> d_;
};

/// Immutable value: a field element tied to its Field.
class FieldElement {
   public:
    FieldElement(Field field, rep_t rep) : f_(std::move(field)), rep_(rep) {
        if (rep_ >= f_.order())
            throw std::invalid_argument("element rep " + std::to_string(rep_) +
                                        " out of range for " + f_.label());
    }

    const Field& field() const noexcept { return f_; }
    rep_t rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_ == 0; }

    FieldElement operator-() const { return FieldElement(f_, f_.neg(rep_)); }
    FieldElement inverse() const { return FieldElement(f_, f_.inv(rep_)); }
    FieldElement pow(long long e) const { return FieldElement(f_, f_.pow(rep_, e)); }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        x.f_.require_same(y.f_);
        return FieldElement(x.f_, x.f_.add(x.rep_, y.rep_));
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        x.f_.require_same(y.f_);
        return FieldElement(x.f_, x.f_.sub(x.rep_, y.rep_));
    }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        x.f_.require_same(y.f_);
        return FieldElement(x.f_, x.f_.mul(x.rep_, y.rep_));
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        x.f_.require_same(y.f_);
        return FieldElement(x.f_, x.f_.div(x.rep_, y.rep_));
    }
    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.f_ == y.f_ && x.rep_ == y.rep_;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

   private:
    Field f_;
    rep_t rep_;
};

inline FieldElement Field::element(std::uint64_t rep) const {
    if (rep >= d_->q)
        throw std::invalid_argument("element rep " + std::to_string(rep) +
                                    " out of range for " + label());
    return FieldElement(*this, static_cast<rep_t>(rep));
}

inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

inline FieldElement Field::generator() const {
    if (d_->r == 1)
        throw std::invalid_argument(label() + " is a prime field and has no generator symbol");
    return FieldElement(*this, static_cast<rep_t>(d_->p));
}

inline std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(d_->q);
    out.push_back(zero());
    for (std::uint64_t v = d_->p; v < d_->q; ++v) out.push_back(element(v));
    for (std::uint64_t v = 1; v < d_->p; ++v) out.push_back(element(v));
    return out;
}

/// Constructs GF(p^r). For r > 1 the modulus is the lexicographically
/// smallest monic irreducible of degree r, coefficients compared from the
/// constant term upward; the search is deterministic across runs.
inline Field field_build(std::uint64_t p, unsigned r) {
    if (!detail::is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("extension degree must be at least 1");

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->r = r;
    data->ppow.assign(r + 1, 1);
    for (unsigned i = 1; i <= r; ++i) {
        if (data->ppow[i - 1] > (std::uint64_t(1) << 31) / p)
            throw std::invalid_argument("field order p^r too large");
        data->ppow[i] = data->ppow[i - 1] * p;
    }
    data->q = data->ppow[r];

    if (r > 1) {
        bool found = false;
        for (std::uint64_t idx = 0; idx < data->q && !found; ++idx) {
            detail::PPoly f(r + 1, 0);
            f[r] = 1;
            // idx digits base p, big-endian, give (c_0, ..., c_{r-1})
            std::uint64_t rest = idx;
            for (unsigned i = 0; i < r; ++i) {
                f[r - 1 - i] = rest % p;
                rest /= p;
            }
            if (detail::is_irreducible(f, p)) {
                data->modulus.assign(f.begin(), f.end());
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    if (data->q <= detail::kFieldTableLimit) {
        const std::uint64_t q = data->q;
        data->add_tab.resize(q * q);
        data->mul_tab.resize(q * q);
        data->inv_tab.assign(q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                data->add_tab[a * q + b] = data->add_slow(static_cast<rep_t>(a), static_cast<rep_t>(b));
                rep_t m = data->mul_slow(static_cast<rep_t>(a), static_cast<rep_t>(b));
                data->mul_tab[a * q + b] = m;
                if (m == 1) data->inv_tab[a] = static_cast<rep_t>(b);
            }
        data->tables = true;
    }

    return Field(std::move(data));
}

/// Builds the field of a given prime-power order.
inline Field field_from_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return field_build(q, 1);
    unsigned r = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return field_build(p, r);
}

/// Renders an element: prime-field elements as canonical residues 0..p-1,
/// extension elements as polynomials in `a` with descending powers.
inline std::string to_string(const FieldElement& x) {
    const Field& f = x.field();
    if (f.degree() == 1 || x.rep() == 0) return std::to_string(x.rep());
    const std::uint64_t p = f.characteristic();
    std::string s;
    std::uint64_t rest = x.rep();
    std::vector<std::uint64_t> digits(f.degree());
    for (unsigned i = 0; i < f.degree(); ++i) {
        digits[i] = rest % p;
        rest /= p;
    }
    for (unsigned i = f.degree(); i-- > 0;) {
        if (digits[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(digits[i]);
        } else {
            if (digits[i] != 1) s += std::to_string(digits[i]);
            s += "a";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

/// Parses an element. Plain integers are reps (a leading '-' negates in the
/// field); any string containing `a` is read as a polynomial in the
/// generator with integer digit coefficients, e.g. "a+1" or "2a^3+a".
inline FieldElement parse_element(const Field& f, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty element literal");

    auto fail = [&] { throw std::invalid_argument("cannot parse element '" + std::string(text) + "'"); };

    if (s.find('a') == std::string::npos) {
        std::size_t i = 0;
        bool negate = false;
        if (s[i] == '-') {
            negate = true;
            ++i;
        } else if (s[i] == '+') {
            ++i;
        }
        if (i >= s.size()) fail();
        std::uint64_t v = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            v %= f.order();
        }
        rep_t rep = static_cast<rep_t>(v);
        return FieldElement(f, negate ? f.neg(rep) : rep);
    }

    if (f.degree() == 1) fail();
    rep_t acc = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negate = false;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            negate = true;
            ++i;
        }
        if (i >= s.size()) fail();
        // coefficients in `a`-form are scalar digits, reduced mod p
        std::uint64_t coeff = 1;
        bool saw_digits = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = 0;
            saw_digits = true;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = (coeff * 10 + static_cast<std::uint64_t>(s[i] - '0')) % f.characteristic();
                ++i;
            }
        }
        std::uint64_t exp = 0;
        if (i < s.size() && s[i] == 'a') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + static_cast<std::uint64_t>(s[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_digits) {
            fail();
        }
        rep_t term = static_cast<rep_t>(coeff);
        if (exp > 0)
            term = f.mul(term, f.pow(static_cast<rep_t>(f.characteristic()),
                                     static_cast<long long>(exp)));
        acc = negate ? f.sub(acc, term) : f.add(acc, term);
    }
    return FieldElement(f, acc);
}

}  // namespace fqcodes

#endif  // FQCODES_GALOIS_HPP
