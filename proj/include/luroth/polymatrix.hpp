#ifndef LUROTH_POLYMATRIX_HPP
#define LUROTH_POLYMATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "luroth/poly.hpp"

namespace luroth {

// Rectangular matrix of polynomials.
template <typename K>
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols, std::vector<std::string> vars)
        : rows_(rows), cols_(cols), vars_(std::move(vars)),
          data_(rows * cols, Poly<K>(vars_)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }

    Poly<K>& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Poly<K>& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i) {
            if (!at(i, i).is_zero()) return false;
            for (size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == -at(j, i))) return false;
        }
        return true;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::string> vars_;
    std::vector<Poly<K>> data_;
};

namespace detail {

// Fraction-free Bareiss elimination; valid over exact coefficient fields
// where the intermediate divisions are exact ring divisions.
template <typename K>
Poly<K> det_bareiss(const PolyMatrix<K>& m) {
    size_t n = m.rows();
    std::vector<std::vector<Poly<K>>> a(n, std::vector<Poly<K>>(n, Poly<K>(m.vars())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Poly<K> prev = Poly<K>::constant(m.vars(), FieldOps<K>::from_long(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly<K>(m.vars());
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly<K> num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.divide_exact(prev);
            }
            a[i][k] = Poly<K>(m.vars());
        }
        prev = a[k][k];
    }
    Poly<K> d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

// Division-free Laplace expansion memoized on the active column subset,
// for inexact coefficients where Bareiss divisions would not cancel.
template <typename K>
Poly<K> det_cofactor(const PolyMatrix<K>& m) {
    size_t n = m.rows();
    if (n > 16) throw std::invalid_argument("cofactor determinant size limit exceeded");
    std::unordered_map<uint64_t, Poly<K>> memo;
    auto rec = [&](auto&& self, size_t row, uint64_t cols) -> Poly<K> {
        if (row == n) return Poly<K>::constant(m.vars(), FieldOps<K>::from_long(1));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        Poly<K> acc(m.vars());
        int sgn = 1;
        for (size_t j = 0; j < n; ++j) {
            if (!(cols & (uint64_t{1} << j))) continue;
            if (!m.at(row, j).is_zero()) {
                Poly<K> term = m.at(row, j) * self(self, row + 1, cols & ~(uint64_t{1} << j));
                acc += (sgn > 0) ? term : -term;
            }
            sgn = -sgn;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    return rec(rec, 0, full);
}

}  // namespace detail

template <typename K>
Poly<K> det(const PolyMatrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return Poly<K>::constant(m.vars(), FieldOps<K>::from_long(1));
    if constexpr (FieldOps<K>::exact) return detail::det_bareiss(m);
    else return detail::det_cofactor(m);
}

// Pfaffian of a skew-symmetric even-size matrix, by expansion along the first
// remaining row with memoization on the subset of active indices.
template <typename K>
Poly<K> pfaffian(const PolyMatrix<K>& m) {
    size_t n = m.rows();
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
    if (n % 2 != 0) throw std::invalid_argument("pfaffian of odd-size matrix");
    if (n > 62) throw std::invalid_argument("pfaffian size limit exceeded");
    if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian of non-skew matrix");
    if (n == 0) return Poly<K>::constant(m.vars(), FieldOps<K>::from_long(1));

    std::unordered_map<uint64_t, Poly<K>> memo;
    auto rec = [&](auto&& self, uint64_t mask) -> Poly<K> {
        if (mask == 0) return Poly<K>::constant(m.vars(), FieldOps<K>::from_long(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t first = 0;
        while (!(mask & (uint64_t{1} << first))) ++first;
        Poly<K> acc(m.vars());
        uint64_t rest = mask & ~(uint64_t{1} << first);
        int sgn = 1;
        for (size_t j = first + 1; j < n; ++j) {
            if (!(rest & (uint64_t{1} << j))) continue;
            if (!m.at(first, j).is_zero()) {
                Poly<K> sub = self(self, rest & ~(uint64_t{1} << j));
                Poly<K> term = m.at(first, j) * sub;
                acc += (sgn > 0) ? term : -term;
            }
            sgn = -sgn;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    return rec(rec, full);
}

// Scalar matrix convenience wrappers.
template <typename K>
using Matrix = std::vector<std::vector<K>>;

template <typename K>
PolyMatrix<K> to_poly_matrix(const Matrix<K>& m) {
    size_t r = m.size(), c = r ? m[0].size() : 0;
    PolyMatrix<K> pm(r, c, {});
    for (size_t i = 0; i < r; ++i) {
        if (m[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (size_t j = 0; j < c; ++j) pm.at(i, j) = Poly<K>::constant({}, m[i][j]);
    }
    return pm;
}

template <typename K>
K det(const Matrix<K>& m) {
    Poly<K> d = det(to_poly_matrix(m));
    return d.is_zero() ? FieldOps<K>::from_long(0) : d.terms().begin()->second;
}

template <typename K>
K pfaffian(const Matrix<K>& m) {
    Poly<K> p = pfaffian(to_poly_matrix(m));
    return p.is_zero() ? FieldOps<K>::from_long(0) : p.terms().begin()->second;
}

}  // namespace luroth

#endif
