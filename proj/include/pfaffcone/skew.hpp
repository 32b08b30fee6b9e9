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

// The generic 2l x 2l antisymmetric matrix whose strict upper triangle holds
// the independent variables x1..xn (n = l(2l-1)) in row-major order, and the
// polynomials derived from it: Pfaffian, determinant, sub-Pfaffians, first and
// second derivatives, traces of the Hessian tensor, characteristic polynomial.
//
// Derivative convention. "Derivative with respect to M_ab" always means the
// derivative with respect to the independent variable x_(a,b) for a < b, and
// is extended antisymmetrically: d/dM_ba := -d/dM_ab, d/dM_aa := 0. Under this
// convention the first derivative is the signed complementary sub-Pfaffian,
// S_ab,cd = d^2 p / dM_ab dM_cd is totally antisymmetric in [abcd], and for
// l = 3 one gets S_ab,cd = 1/2 eps_abcdef M_ef and Tr[S^2] = 24 |x|^2 exactly.
// Treating M_ab and M_ba as independent entries instead would be off by
// factors of 2 in all of these.

#ifndef PFAFFCONE_SKEW_HPP
#define PFAFFCONE_SKEW_HPP

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "poly_matrix.hpp"
#include "polynomial.hpp"
#include "polynomial_io.hpp"

namespace pfaffcone {

using IndexPair = std::pair<int, int>;

/// Bijection between ordered pairs 1 <= a < b <= 2l and variable indices 1..l(2l-1).
class PairIndexMap {
   public:
    explicit PairIndexMap(int ell) : ell_(ell) {
        if (ell < 1) throw std::invalid_argument("ell must be at least 1");
        const int m = dim();
        forward_.assign(static_cast<std::size_t>(m * m), 0);
        inverse_.reserve(static_cast<std::size_t>(nvars()));
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) {
                inverse_.emplace_back(a, b);
                forward_[static_cast<std::size_t>((a - 1) * m + (b - 1))] = static_cast<Var>(inverse_.size());
            }
    }

    int ell() const noexcept { return ell_; }
    int dim() const noexcept { return 2 * ell_; }
    int nvars() const noexcept { return ell_ * (2 * ell_ - 1); }

    Var index(int a, int b) const {
        if (a < 1 || b > dim() || a >= b) throw std::out_of_range("pair index requires 1 <= a < b <= 2l");
        return forward_[static_cast<std::size_t>((a - 1) * dim() + (b - 1))];
    }

    IndexPair pair(Var i) const {
        if (i < 1 || i > static_cast<Var>(nvars())) throw std::out_of_range("variable index out of range");
        return inverse_[i - 1];
    }

   private:
    int ell_;
    std::vector<Var> forward_;
    std::vector<IndexPair> inverse_;
};

inline Var pair_index(int ell, int a, int b) { return PairIndexMap(ell).index(a, b); }
inline IndexPair pair_index_inverse(int ell, Var i) { return PairIndexMap(ell).pair(i); }

inline std::size_t skew_nvars(int ell) { return static_cast<std::size_t>(ell * (2 * ell - 1)); }

/// (2l-1)!!, the number of perfect matchings of 2l points.
inline std::uint64_t double_factorial_odd(int ell) {
    std::uint64_t r = 1;
    for (int k = 2 * ell - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
    return r;
}

class SkewSymbolicMatrix {
   public:
    explicit SkewSymbolicMatrix(int ell) : pairs_(ell) {}

    int ell() const noexcept { return pairs_.ell(); }
    int dim() const noexcept { return pairs_.dim(); }
    std::size_t nvars() const noexcept { return static_cast<std::size_t>(pairs_.nvars()); }
    const PairIndexMap& pairs() const noexcept { return pairs_; }

    /// Entry as (sign, variable); variable 0 on the diagonal.
    std::pair<int, Var> signed_variable(int a, int b) const {
        if (a == b) return {0, 0};
        if (a < b) return {1, pairs_.index(a, b)};
        return {-1, pairs_.index(b, a)};
    }

    RationalPolynomial entry(int a, int b) const {
        auto [s, v] = signed_variable(a, b);
        if (s == 0) return RationalPolynomial(nvars());
        auto x = RationalPolynomial::variable(v, nvars());
        return s > 0 ? x : -x;
    }

    RationalPolyMatrix as_matrix() const {
        RationalPolyMatrix m(static_cast<std::size_t>(dim()), nvars());
        for (int a = 1; a <= dim(); ++a)
            for (int b = 1; b <= dim(); ++b) m(a, b) = entry(a, b);
        return m;
    }

   private:
    PairIndexMap pairs_;
};

using IndexMask = std::uint64_t;

inline IndexMask mask_of(std::span<const int> rows, int dim) {
    IndexMask mask = 0;
    for (int r : rows) {
        if (r < 1 || r > dim) throw std::out_of_range("row index out of range");
        IndexMask bit = IndexMask{1} << (r - 1);
        if (mask & bit) throw std::invalid_argument("repeated row index");
        mask |= bit;
    }
    return mask;
}

/**
 * Symbolic Pfaffians of principal submatrices, expanded along the lowest
 * remaining index and memoized on the index subset:
 *
 *     Pf(R) = sum_{j in R, j > i} (-1)^{pos(j)} M_ij Pf(R \ {i, j}),  i = min R,
 *
 * with pos(j) the 0-based position of j in R \ {i}, sign-alternating starting at +.
 * The memo table is owned by the expander and is not shared between threads.
 */
class PfaffianExpander {
   public:
    explicit PfaffianExpander(int ell) : matrix_(ell) {
        if (ell > 31) throw std::invalid_argument("ell too large for subset masks");
    }

    const SkewSymbolicMatrix& matrix() const noexcept { return matrix_; }

    const RationalPolynomial& of(IndexMask rows) {
        if (std::popcount(rows) % 2 != 0) throw std::invalid_argument("sub-Pfaffian of an odd-size index set");
        if (auto it = memo_.find(rows); it != memo_.end()) return it->second;
        RationalPolynomial result(matrix_.nvars());
        if (rows == 0) {
            result = RationalPolynomial::constant(Rational(1), matrix_.nvars());
        } else {
            int i = std::countr_zero(rows) + 1;
            IndexMask rest = rows & (rows - 1);
            int position = 0;
            for (IndexMask scan = rest; scan != 0; scan &= scan - 1) {
                int j = std::countr_zero(scan) + 1;
                IndexMask bit = IndexMask{1} << (j - 1);
                RationalPolynomial term = matrix_.entry(i, j) * of(rest & ~bit);
                result = (position % 2 == 0) ? result + term : result - term;
                ++position;
            }
        }
        return memo_.emplace(rows, std::move(result)).first->second;
    }

    const RationalPolynomial& full() { return of(full_mask()); }

    IndexMask full_mask() const noexcept { return (IndexMask{1} << matrix_.dim()) - 1; }

   private:
    SkewSymbolicMatrix matrix_;
    std::unordered_map<IndexMask, RationalPolynomial> memo_;
};

/// P_l: homogeneous of degree l in l(2l-1) variables with (2l-1)!! terms, all +-1.
inline RationalPolynomial pfaffian(int ell) {
    PfaffianExpander ex(ell);
    return ex.full();
}

/// Pfaffian of the principal submatrix on `rows` (any order; the set is sorted ascending).
inline RationalPolynomial sub_pfaffian(int ell, std::span<const int> rows) {
    PfaffianExpander ex(ell);
    return ex.of(mask_of(rows, 2 * ell));
}

inline RationalPolynomial sub_pfaffian(int ell, std::initializer_list<int> rows) {
    return sub_pfaffian(ell, std::span<const int>(rows.begin(), rows.size()));
}

/// Symbolic determinant of the 2l x 2l skew matrix.
inline RationalPolynomial determinant(int ell) { return determinant(SkewSymbolicMatrix(ell).as_matrix()); }

/// The numeric skew matrix with x placed in the upper triangle.
inline std::vector<std::vector<Rational>> skew_matrix_at(int ell, std::span<const Rational> x) {
    SkewSymbolicMatrix m(ell);
    if (x.size() != m.nvars()) throw std::invalid_argument("point length does not match l(2l-1)");
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.dim()),
                                         std::vector<Rational>(static_cast<std::size_t>(m.dim())));
    for (int r = 1; r <= m.dim(); ++r)
        for (int c = 1; c <= m.dim(); ++c) {
            auto [s, v] = m.signed_variable(r, c);
            if (s != 0) a[r - 1][c - 1] = s > 0 ? x[v - 1] : Rational(-x[v - 1]);
        }
    return a;
}

/// Exact value of det M(x) by elimination, for sizes where expansion is too large.
inline Rational determinant_at(int ell, std::span<const Rational> x) { return exact_determinant(skew_matrix_at(ell, x)); }

/// dP/dx_(a,b) for every pair a < b, keyed by the pair.
inline std::map<IndexPair, RationalPolynomial> grad_matrix(int ell) {
    PairIndexMap pairs(ell);
    RationalPolynomial p = pfaffian(ell);
    std::map<IndexPair, RationalPolynomial> grad;
    for (Var i = 1; i <= static_cast<Var>(pairs.nvars()); ++i) grad.emplace(pairs.pair(i), partial(p, i));
    return grad;
}

/**
 * S_ab,cd = d^2 p / dM_ab dM_cd, stored on pairs of variable indices and
 * extended to arbitrary (a, b, c, d) by antisymmetry within each pair.
 * Entries with overlapping pairs are the direct second derivatives, which
 * vanish because p is multilinear in the matching variables.
 */
class HessianTensor {
   public:
    HessianTensor(int ell, std::vector<RationalPolynomial> values)
        : pairs_(ell), n_(static_cast<std::size_t>(pairs_.nvars())), values_(std::move(values)) {
        if (values_.size() != n_ * n_) throw std::invalid_argument("Hessian tensor size mismatch");
    }

    int ell() const noexcept { return pairs_.ell(); }
    std::size_t nvars() const noexcept { return n_; }
    const PairIndexMap& pairs() const noexcept { return pairs_; }

    /// Entry by variable indices, i.e. S_(p),(q) for ordered pairs p, q.
    const RationalPolynomial& by_vars(Var i, Var j) const { return values_.at((i - 1) * n_ + (j - 1)); }

    /// S_ab,cd for any indices in 1..2l.
    RationalPolynomial at(int a, int b, int c, int d) const {
        if (a == b || c == d) return RationalPolynomial(n_);
        int sign = 1;
        if (a > b) std::swap(a, b), sign = -sign;
        if (c > d) std::swap(c, d), sign = -sign;
        const auto& v = by_vars(pairs_.index(a, b), pairs_.index(c, d));
        return sign > 0 ? v : -v;
    }

   private:
    PairIndexMap pairs_;
    std::size_t n_;
    std::vector<RationalPolynomial> values_;
};

inline HessianTensor hessian_tensor(int ell) {
    if (ell < 2) throw std::invalid_argument("Hessian tensor requires l >= 2");
    const std::size_t n = skew_nvars(ell);
    RationalPolynomial p = pfaffian(ell);
    std::vector<RationalPolynomial> values(n * n, RationalPolynomial(n));
    for (Var i = 1; i <= n; ++i) {
        RationalPolynomial pi = partial(p, i);
        for (Var j = i; j <= n; ++j) {
            RationalPolynomial pij = partial(pi, j);
            values[(i - 1) * n + (j - 1)] = pij;
            values[(j - 1) * n + (i - 1)] = std::move(pij);
        }
    }
    return HessianTensor(ell, std::move(values));
}

/**
 * Tr[S^2] = sum over all a,b,c,d in 1..2l of S_ab,cd S_cd,ab. Each ordered pair
 * (a,b), a != b, is a variable up to a sign, and the signs cancel in the
 * product, so the full sum is 4 times the sum over variable pairs.
 */
inline RationalPolynomial trace_S2(const HessianTensor& s) {
    RationalPolynomial sum(s.nvars());
    for (Var i = 1; i <= s.nvars(); ++i)
        for (Var j = 1; j <= s.nvars(); ++j) {
            const auto& sij = s.by_vars(i, j);
            const auto& sji = s.by_vars(j, i);
            if (!sij.is_zero() && !sji.is_zero()) sum += sij * sji;
        }
    return RationalPolynomial::constant(Rational(4), s.nvars()) * sum;
}

/// Tr[S^3] = S_ab,cd S_cd,ef S_ef,ab over all six indices; 8 times the variable-pair sum.
inline RationalPolynomial trace_S3(const HessianTensor& s) {
    RationalPolynomial sum(s.nvars());
    const std::size_t n = s.nvars();
    for (Var i = 1; i <= n; ++i)
        for (Var j = 1; j <= n; ++j) {
            const auto& sij = s.by_vars(i, j);
            if (sij.is_zero()) continue;
            RationalPolynomial inner(n);
            for (Var k = 1; k <= n; ++k) {
                const auto& sjk = s.by_vars(j, k);
                const auto& ski = s.by_vars(k, i);
                if (!sjk.is_zero() && !ski.is_zero()) inner += sjk * ski;
            }
            if (!inner.is_zero()) sum += sij * inner;
        }
    return RationalPolynomial::constant(Rational(8), n) * sum;
}

inline RationalPolynomial trace_S2(int ell) { return trace_S2(hessian_tensor(ell)); }
inline RationalPolynomial trace_S3(int ell) { return trace_S3(hessian_tensor(ell)); }

/// det(lambda I - M) = lambda^2l + c_{2l-2} lambda^{2l-2} + ... + c_2 lambda^2 + c_0.
struct CharPolyCoeffs {
    int ell = 0;
    std::vector<RationalPolynomial> even;  // even[j] = c_{2j}, j = 0..l-1
    bool odd_coefficients_vanish = false;

    /// c_power for 0 <= power <= 2l (c_2l = 1, odd powers zero when the check passed).
    RationalPolynomial coefficient(int power) const {
        const std::size_t n = skew_nvars(ell);
        if (power < 0 || power > 2 * ell) throw std::out_of_range("characteristic coefficient power out of range");
        if (power == 2 * ell) return RationalPolynomial::constant(Rational(1), n);
        if (power % 2 != 0) return RationalPolynomial(n);
        return even[static_cast<std::size_t>(power / 2)];
    }
};

inline CharPolyCoeffs char_poly(int ell) {
    SkewSymbolicMatrix m(ell);
    auto c = faddeev_leverrier(m.as_matrix());
    CharPolyCoeffs out;
    out.ell = ell;
    out.odd_coefficients_vanish = true;
    for (int k = 0; k < 2 * ell; ++k) {
        auto& coeff = c[static_cast<std::size_t>(k)];
        coeff = coeff.with_nvars(m.nvars());
        if (k % 2 == 0)
            out.even.push_back(std::move(coeff));
        else if (!coeff.is_zero())
            out.odd_coefficients_vanish = false;
    }
    return out;
}

inline nlohmann::json to_json(const CharPolyCoeffs& cp) {
    nlohmann::json out = nlohmann::json::array();
    for (int power = 0; power < 2 * cp.ell; power += 2)
        out.push_back({{"power", power}, {"coeff", to_json(cp.coefficient(power))}});
    out.push_back({{"power", 2 * cp.ell}, {"coeff", to_json(cp.coefficient(2 * cp.ell))}});
    return out;
}

/**
 * Numeric sub-Pfaffians of a concrete skew matrix, for every even index
 * subset at once (bottom-up over 2^(2l) masks). Used for exact randomized
 * identity testing at sizes where symbolic derivatives get expensive.
 *
 * First and second derivatives of Pf(R) follow the complement rule inside R:
 * dPf(R)/dM_ab = (-1)^(pos(a)+pos(b)+1) Pf(R \ {a,b}) with 1-based positions in R.
 */
template <class V>
class NumericPfaffianTable {
   public:
    explicit NumericPfaffianTable(std::vector<std::vector<V>> a) : a_(std::move(a)), m_(static_cast<int>(a_.size())) {
        if (m_ % 2 != 0 || m_ > 24) throw std::invalid_argument("numeric Pfaffian table needs an even size <= 24");
        table_.assign(std::size_t{1} << m_, V(0));
        table_[0] = V(1);
        for (IndexMask mask = 1; mask < (IndexMask{1} << m_); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            int i = std::countr_zero(mask);
            IndexMask rest = mask & (mask - 1);
            V sum(0);
            int position = 0;
            for (IndexMask scan = rest; scan != 0; scan &= scan - 1, ++position) {
                int j = std::countr_zero(scan);
                const V& aij = a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (aij == 0) continue;
                V term = aij * table_[rest & ~(IndexMask{1} << j)];
                if (position % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            table_[mask] = sum;
        }
    }

    int dim() const noexcept { return m_; }
    IndexMask full_mask() const noexcept { return (IndexMask{1} << m_) - 1; }
    const V& pfaffian(IndexMask rows) const { return table_.at(rows); }
    const V& pfaffian() const { return table_[full_mask()]; }

    /// d Pf(rows) / d x_(a,b), a < b both in rows.
    V derivative(IndexMask rows, int a, int b) const {
        IndexMask ba = IndexMask{1} << (a - 1), bb = IndexMask{1} << (b - 1);
        if (!(rows & ba) || !(rows & bb) || a == b) return V(0);
        int pa = std::popcount(rows & (ba - 1)) + 1;
        int pb = std::popcount(rows & (bb - 1)) + 1;
        const V& rest = table_[rows & ~(ba | bb)];
        return ((pa + pb + 1) % 2 == 0) ? rest : V(-rest);
    }

    /// Gradient of the full Pfaffian with respect to x_(a,b).
    V gradient(int a, int b) const { return derivative(full_mask(), a, b); }

    /// Second derivative with respect to x_(a,b), x_(c,d) (a < b, c < d).
    V second(int a, int b, int c, int d) const {
        IndexMask ab = (IndexMask{1} << (a - 1)) | (IndexMask{1} << (b - 1));
        IndexMask cd = (IndexMask{1} << (c - 1)) | (IndexMask{1} << (d - 1));
        if (ab & cd) return V(0);
        V inner = derivative(full_mask() & ~ab, c, d);
        return ((a + b + 1) % 2 == 0) ? inner : V(-inner);
    }

   private:
    std::vector<std::vector<V>> a_;
    int m_;
    std::vector<V> table_;
};

}  // namespace pfaffcone

#endif  // PFAFFCONE_SKEW_HPP
