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

#ifndef FQCODES_MATRIX_HPP
#define FQCODES_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"

namespace fqcodes {

/// Row vector over a Field.
class Vector {
   public:
    Vector(Field field, std::vector<rep_t> reps) : f_(std::move(field)), v_(std::move(reps)) {
        for (rep_t r : v_)
            if (r >= f_.order()) throw std::invalid_argument("vector entry out of range for " + f_.label());
    }

    static Vector zero(const Field& f, std::size_t n) { return Vector(f, std::vector<rep_t>(n, 0)); }

    static Vector from_ints(const Field& f, const std::vector<long long>& vals) {
        std::vector<rep_t> reps;
        reps.reserve(vals.size());
        for (long long v : vals) reps.push_back(f.coerce(v));
        return Vector(f, std::move(reps));
    }

    const Field& field() const noexcept { return f_; }
    std::size_t size() const noexcept { return v_.size(); }
    rep_t rep(std::size_t i) const { return v_.at(i); }
    void set_rep(std::size_t i, rep_t r) {
        if (r >= f_.order()) throw std::invalid_argument("vector entry out of range");
        v_.at(i) = r;
    }
    FieldElement at(std::size_t i) const { return FieldElement(f_, v_.at(i)); }
    void set(std::size_t i, const FieldElement& e) {
        f_.require_same(e.field());
        v_.at(i) = e.rep();
    }
    const std::vector<rep_t>& reps() const noexcept { return v_; }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (rep_t r : v_)
            if (r != 0) ++w;
        return w;
    }
    bool is_zero() const noexcept { return weight() == 0; }

    friend Vector operator+(const Vector& x, const Vector& y) {
        x.f_.require_same(y.f_);
        if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch");
        Vector out = x;
        for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] = x.f_.add(x.v_[i], y.v_[i]);
        return out;
    }
    friend Vector operator-(const Vector& x, const Vector& y) {
        x.f_.require_same(y.f_);
        if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch");
        Vector out = x;
        for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] = x.f_.sub(x.v_[i], y.v_[i]);
        return out;
    }
    Vector scaled(rep_t c) const {
        Vector out = *this;
        for (auto& r : out.v_) r = f_.mul(c, r);
        return out;
    }

    friend bool operator==(const Vector& x, const Vector& y) {
        return x.f_ == y.f_ && x.v_ == y.v_;
    }
    friend bool operator!=(const Vector& x, const Vector& y) { return !(x == y); }

   private:
    Field f_;
    std::vector<rep_t> v_;
};

inline std::string to_string(const Vector& v, bool pretty = false) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += pretty ? to_string(v.at(i)) : std::to_string(v.rep(i));
    }
    return s;
}

/// Dense matrix over a Field, row-major. Zero-row and zero-column shapes
/// are valid.
class Matrix {
   public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : f_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set_rep(i, i, 1);
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& rows) {
        if (rows.empty()) throw std::invalid_argument("cannot infer width from an empty row list");
        return from_rows(f, rows, rows.front().size());
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& rows,
                            std::size_t cols) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows in matrix literal");
            for (std::size_t j = 0; j < cols; ++j) m.set_rep(i, j, f.coerce(rows[i][j]));
        }
        return m;
    }

    static Matrix from_rep_rows(const Field& f, const std::vector<std::vector<rep_t>>& rows,
                                std::size_t cols) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged rows in matrix literal");
            for (std::size_t j = 0; j < cols; ++j) m.set_rep(i, j, rows[i][j]);
        }
        return m;
    }

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    rep_t rep(std::size_t i, std::size_t j) const { return e_[index(i, j)]; }
    void set_rep(std::size_t i, std::size_t j, rep_t r) {
        if (r >= f_.order()) throw std::invalid_argument("matrix entry out of range for " + f_.label());
        e_[index(i, j)] = r;
    }
    FieldElement at(std::size_t i, std::size_t j) const { return FieldElement(f_, rep(i, j)); }
    void set(std::size_t i, std::size_t j, const FieldElement& e) {
        f_.require_same(e.field());
        set_rep(i, j, e.rep());
    }

    Vector row(std::size_t i) const {
        std::vector<rep_t> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = rep(i, j);
        return Vector(f_, std::move(r));
    }
    void set_row(std::size_t i, const Vector& v) {
        f_.require_same(v.field());
        if (v.size() != cols_) throw std::invalid_argument("row width mismatch");
        for (std::size_t j = 0; j < cols_; ++j) e_[index(i, j)] = v.rep(j);
    }

    bool is_zero() const noexcept {
        for (rep_t r : e_)
            if (r != 0) return false;
        return true;
    }

    /// New matrix with the given (sorted or unsorted, deduplicated) columns removed.
    Matrix without_columns(std::vector<std::size_t> cols) const {
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (std::size_t c : cols)
            if (c >= cols_) throw std::invalid_argument("column index out of range");
        Matrix out(f_, rows_, cols_ - cols.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t jj = 0;
            std::size_t next = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (next < cols.size() && cols[next] == j) {
                    ++next;
                    continue;
                }
                out.set_rep(i, jj++, rep(i, j));
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
        return i * cols_ + j;
    }

    Field f_;
    std::size_t rows_, cols_;
    std::vector<rep_t> e_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with deterministic pivoting: columns scanned
/// left to right, pivot row is the first with a nonzero entry.
inline RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < r.cols() && pr < r.rows(); ++col) {
        std::size_t sel = r.rows();
        for (std::size_t i = pr; i < r.rows(); ++i)
            if (r.rep(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == r.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                rep_t t = r.rep(pr, j);
                r.set_rep(pr, j, r.rep(sel, j));
                r.set_rep(sel, j, t);
            }
        const rep_t inv = f.inv(r.rep(pr, col));
        for (std::size_t j = 0; j < r.cols(); ++j) r.set_rep(pr, j, f.mul(inv, r.rep(pr, j)));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pr) continue;
            const rep_t c = r.rep(i, col);
            if (c == 0) continue;
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.set_rep(i, j, f.sub(r.rep(i, j), f.mul(c, r.rep(pr, j))));
        }
        pivots.push_back(col);
        ++pr;
    }
    return {std::move(r), pr, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Rows form a basis of {v : m v^T = 0}, ordered by ascending free column
/// of the reduced row echelon form.
inline Matrix nullspace_basis(const Matrix& m) {
    const Field& f = m.field();
    auto [r, rk, pivots] = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t next = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (next < pivots.size() && pivots[next] == j)
                ++next;
            else
                free_cols.push_back(j);
        }
    }
    Matrix out(f, free_cols.size(), m.cols());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        const std::size_t fc = free_cols[idx];
        out.set_rep(idx, fc, 1);
        for (std::size_t t = 0; t < pivots.size(); ++t)
            out.set_rep(idx, pivots[t], f.neg(r.rep(t, fc)));
    }
    return out;
}

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set_rep(j, i, m.rep(i, j));
    return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    a.field().require_same(b.field());
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const rep_t av = a.rep(i, t);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.set_rep(i, j, f.add(out.rep(i, j), f.mul(av, b.rep(t, j))));
        }
    return out;
}

/// Row vector times matrix: v has m.rows() entries, result has m.cols().
inline Vector vec_mat(const Vector& v, const Matrix& m) {
    v.field().require_same(m.field());
    if (v.size() != m.rows()) throw std::invalid_argument("vec_mat dimension mismatch");
    const Field& f = v.field();
    std::vector<rep_t> out(m.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const rep_t c = v.rep(i);
        if (c == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(c, m.rep(i, j)));
    }
    return Vector(f, std::move(out));
}

inline Matrix nonzero_rows(const Matrix& m) {
    std::vector<std::vector<rep_t>> keep;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.rep(i, j) != 0) {
                nz = true;
                break;
            }
        if (nz) keep.push_back(m.row(i).reps());
    }
    return Matrix::from_rep_rows(m.field(), keep, m.cols());
}

inline Matrix stack_rows(const Matrix& a, const Matrix& b) {
    a.field().require_same(b.field());
    if (a.cols() != b.cols()) throw std::invalid_argument("stack width mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set_rep(i, j, a.rep(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set_rep(a.rows() + i, j, b.rep(i, j));
    return out;
}

/// True iff the row spaces coincide (identical nonzero rref rows).
inline bool row_space_equal(const Matrix& a, const Matrix& b) {
    a.field().require_same(b.field());
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_equal width mismatch");
    return nonzero_rows(rref(a).reduced) == nonzero_rows(rref(b).reduced);
}

}  // namespace fqcodes

#endif  // FQCODES_MATRIX_HPP
