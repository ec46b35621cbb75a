#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "finsym/error.hpp"
#include "finsym/rational.hpp"

namespace finsym {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw InputError("ragged matrix literal");
            }
            for (long long v : r) {
                data_.emplace_back(v);
            }
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw InputError("matrix row " + std::to_string(i) + " has wrong length");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) {
            throw InputError("matrix dimension mismatch in product");
        }
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Integer& a = (*this)(i, k);
                if (a == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    p(i, j) += a * o(k, j);
                }
            }
        }
        return p;
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(dst, j) += k * (*this)(src, j);
        }
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, dst) += k * (*this)(i, src);
        }
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(r, j) = -(*this)(r, j);
        }
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += (j ? "," : "") + (*this)(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * m * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... (nonnegative,
/// zeros last). V_inv is the inverse of V, kept because cohomology needs coordinates
/// in the column basis.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inv;

    std::size_t rank() const {
        std::size_t r = 0;
        while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) {
            ++r;
        }
        return r;
    }

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
            d.push_back(D(i, i));
        }
        return d;
    }
};

namespace detail {

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Truncating quotient so that |a - q*b| < |b|.
inline Integer trunc_div(const Integer& a, const Integer& b) { return a / b; }

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
    using detail::abs_int;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols), IntMatrix::identity(cols)};
    IntMatrix& D = f.D;

    auto col_swap = [&](std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        f.V.swap_cols(a, b);
        f.V_inv.swap_rows(a, b);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        f.U.swap_rows(a, b);
    };
    // col[dst] -= q * col[src]
    auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        D.add_col(dst, src, -q);
        f.V.add_col(dst, src, -q);
        f.V_inv.add_row(src, dst, q);
    };
    auto row_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        D.add_row(dst, src, -q);
        f.U.add_row(dst, src, -q);
    };

    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pi = t;
        std::size_t pj = t;
        Integer best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (D(i, j) != 0 && (!found || abs_int(D(i, j)) < best)) {
                    found = true;
                    best = abs_int(D(i, j));
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) {
            break;
        }
        if (pi != t) {
            row_swap(pi, t);
        }
        if (pj != t) {
            col_swap(pj, t);
        }

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0) {
                    continue;
                }
                row_sub(i, t, detail::trunc_div(D(i, t), D(t, t)));
                if (D(i, t) != 0) {
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0) {
                    continue;
                }
                col_sub(j, t, detail::trunc_div(D(t, j), D(t, t)));
                if (D(t, j) != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row(t, i, 1);
                        f.U.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) {
                break;
            }
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            f.U.negate_row(t);
        }
    }
    return f;
}

}  // namespace finsym
