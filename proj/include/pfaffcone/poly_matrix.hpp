/*
   Copyright 2026 The pfaffcone Authors

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

#ifndef PFAFFCONE_POLY_MATRIX_HPP
#define PFAFFCONE_POLY_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "polynomial.hpp"

namespace pfaffcone {

/// Dense square matrix with polynomial entries; indices are 1-based.
template <Coefficient C>
class PolyMatrix {
   public:
    using poly_type = Polynomial<C>;

    PolyMatrix() = default;
    PolyMatrix(std::size_t dim, std::size_t nvars) : dim_(dim), entries_(dim * dim, poly_type(nvars)) {}

    static PolyMatrix identity(std::size_t dim, std::size_t nvars) {
        PolyMatrix m(dim, nvars);
        for (std::size_t a = 1; a <= dim; ++a) m(a, a) = poly_type::constant(C(1), nvars);
        return m;
    }

    /// Matrix with the single entry (a, b) equal to 1.
    static PolyMatrix elementary(std::size_t dim, std::size_t a, std::size_t b, std::size_t nvars = 0) {
        PolyMatrix m(dim, nvars);
        m(a, b) = poly_type::constant(C(1), nvars);
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    poly_type& operator()(std::size_t a, std::size_t b) { return entries_.at(index(a, b)); }
    const poly_type& operator()(std::size_t a, std::size_t b) const { return entries_.at(index(a, b)); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(dim_, 0);
        for (std::size_t a = 1; a <= dim_; ++a)
            for (std::size_t b = 1; b <= dim_; ++b) t(b, a) = (*this)(a, b);
        return t;
    }

    poly_type trace() const {
        poly_type s;
        for (std::size_t a = 1; a <= dim_; ++a) s += (*this)(a, a);
        return s;
    }

    friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
        check_dims(x, y);
        PolyMatrix r = x;
        for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += y.entries_[k];
        return r;
    }

    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
        check_dims(x, y);
        PolyMatrix r = x;
        for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= y.entries_[k];
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        check_dims(x, y);
        PolyMatrix r(x.dim_, 0);
        for (std::size_t a = 1; a <= x.dim_; ++a)
            for (std::size_t c = 1; c <= x.dim_; ++c) {
                const auto& xac = x(a, c);
                if (xac.is_zero()) continue;
                for (std::size_t b = 1; b <= x.dim_; ++b)
                    if (!y(c, b).is_zero()) r(a, b) += xac * y(c, b);
            }
        return r;
    }

    friend PolyMatrix operator*(const C& s, const PolyMatrix& x) {
        PolyMatrix r = x;
        for (auto& e : r.entries_) e = s * e;
        return r;
    }

    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
        return x.dim_ == y.dim_ && x.entries_ == y.entries_;
    }

   private:
    std::size_t dim_ = 0;
    std::vector<poly_type> entries_;

    std::size_t index(std::size_t a, std::size_t b) const {
        if (a == 0 || b == 0 || a > dim_ || b > dim_) throw std::out_of_range("matrix index out of range");
        return (a - 1) * dim_ + (b - 1);
    }

    static void check_dims(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.dim_ != y.dim_) throw std::invalid_argument("matrix dimension mismatch");
    }
};

using RationalPolyMatrix = PolyMatrix<Rational>;
using ComplexMatrix = PolyMatrix<GaussianRational>;

/// Conjugate transpose; conjugation acts on coefficients only.
inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.dim(), 0);
    for (std::size_t a = 1; a <= m.dim(); ++a)
        for (std::size_t b = 1; b <= m.dim(); ++b) r(b, a) = conj(m(a, b));
    return r;
}

/**
 * Symbolic determinant by Laplace expansion along rows, memoized on the set
 * of columns still available (2^dim subproblems instead of dim! products).
 */
template <Coefficient C>
Polynomial<C> determinant(const PolyMatrix<C>& m) {
    const std::size_t n = m.dim();
    if (n == 0) return Polynomial<C>::constant(C(1));
    if (n > 30) throw std::invalid_argument("determinant: dimension too large for subset expansion");
    std::unordered_map<std::uint32_t, Polynomial<C>> memo;

    // minor on the last popcount(cols) rows and the given columns
    auto minor = [&](auto&& self, std::uint32_t cols) -> Polynomial<C> {
        if (cols == 0) return Polynomial<C>::constant(C(1));
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols)) + 1;
        Polynomial<C> sum;
        int position = 0;
        for (std::size_t col = 1; col <= n; ++col) {
            std::uint32_t bit = 1u << (col - 1);
            if (!(cols & bit)) continue;
            const auto& entry = m(row, col);
            if (!entry.is_zero()) {
                Polynomial<C> term = entry * self(self, cols & ~bit);
                sum = (position % 2 == 0) ? sum + term : sum - term;
            }
            ++position;
        }
        memo.emplace(cols, sum);
        return sum;
    };
    return minor(minor, (1u << n) - 1);
}

/// Exact determinant of a rational matrix by Gaussian elimination.
inline Rational exact_determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(a[pivot][k]) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

/**
 * Characteristic polynomial coefficients via the Faddeev-LeVerrier recurrence:
 * returns c[0..n] with det(lambda*I - A) = sum_j c[j] lambda^j and c[n] = 1.
 * Only ring operations and division by 1..n are used, so the result is exact.
 */
template <Coefficient C>
std::vector<Polynomial<C>> faddeev_leverrier(const PolyMatrix<C>& a) {
    const std::size_t n = a.dim();
    std::vector<Polynomial<C>> c(n + 1);
    c[n] = Polynomial<C>::constant(C(1));
    PolyMatrix<C> mk(n, 0);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t d = 1; d <= n; ++d) mk(d, d) += c[n - k + 1];
        Polynomial<C> tr;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (!a(i, j).is_zero() && !mk(j, i).is_zero()) tr += a(i, j) * mk(j, i);
        c[n - k] = C(make_rational(-1, static_cast<long>(k))) * tr;
    }
    return c;
}

}  // namespace pfaffcone

#endif  // PFAFFCONE_POLY_MATRIX_HPP
