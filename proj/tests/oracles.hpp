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

// Test-side reference implementations. Deliberately naive and independent of
// the library algorithms they check (no memoization, no shared sign helpers).

#ifndef PFAFFCONE_TESTS_ORACLES_HPP
#define PFAFFCONE_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pfaffcone/pfaffcone.hpp"

namespace oracle {

using pfaffcone::Rational;
using pfaffcone::RationalPolynomial;
using pfaffcone::Var;

/// Variable index of (a, b), a < b, by direct enumeration of the upper triangle.
inline Var pair_var(int ell, int a, int b) {
    Var v = 0;
    for (int r = 1; r <= 2 * ell; ++r)
        for (int c = r + 1; c <= 2 * ell; ++c) {
            ++v;
            if (r == a && c == b) return v;
        }
    throw std::logic_error("pair out of range");
}

/// Entry (a, b) of the generic skew matrix as a polynomial.
inline RationalPolynomial skew_entry(int ell, int a, int b) {
    const std::size_t n = static_cast<std::size_t>(ell * (2 * ell - 1));
    if (a == b) return RationalPolynomial(n);
    if (a < b) return RationalPolynomial::variable(pair_var(ell, a, b), n);
    return -RationalPolynomial::variable(pair_var(ell, b, a), n);
}

inline int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

/**
 * Pf = 1/(2^l l!) sum over all permutations s of S_2l of
 *      sgn(s) prod_i M_{s(2i-1) s(2i)},
 * the full epsilon-tensor sum, no matching shortcut.
 */
inline RationalPolynomial epsilon_pfaffian(int ell) {
    const int m = 2 * ell;
    const std::size_t n = static_cast<std::size_t>(ell * (m - 1));
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 1);
    RationalPolynomial sum(n);
    do {
        RationalPolynomial prod = RationalPolynomial::constant(Rational(permutation_sign(p)), n);
        for (int i = 0; i < ell; ++i) prod = prod * skew_entry(ell, p[2 * i], p[2 * i + 1]);
        sum = sum + prod;
    } while (std::next_permutation(p.begin(), p.end()));
    Rational norm = 1;
    for (int i = 1; i <= ell; ++i) norm *= 2 * i;
    return RationalPolynomial::constant(Rational(1) / norm, n) * sum;
}

/// Determinant by plain recursive cofactor expansion along the first row.
inline RationalPolynomial cofactor_determinant(const std::vector<std::vector<RationalPolynomial>>& a, std::size_t nvars) {
    const std::size_t n = a.size();
    if (n == 0) return RationalPolynomial::constant(Rational(1), nvars);
    if (n == 1) return a[0][0];
    RationalPolynomial det(nvars);
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col].is_zero()) continue;
        std::vector<std::vector<RationalPolynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<RationalPolynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        RationalPolynomial term = a[0][col] * cofactor_determinant(minor, nvars);
        det = col % 2 ? det - term : det + term;
    }
    return det;
}

inline std::vector<std::vector<RationalPolynomial>> skew_rows(int ell) {
    std::vector<std::vector<RationalPolynomial>> m;
    for (int a = 1; a <= 2 * ell; ++a) {
        std::vector<RationalPolynomial> row;
        for (int b = 1; b <= 2 * ell; ++b) row.push_back(skew_entry(ell, a, b));
        m.push_back(std::move(row));
    }
    return m;
}

/// Random polynomial: up to `terms` terms, degree <= `max_deg`, coefficients p/q small.
inline RationalPolynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, int terms = 6, int max_deg = 3) {
    std::uniform_int_distribution<int> var(1, static_cast<int>(nvars)), deg(0, max_deg), num(-5, 5), den(1, 3);
    RationalPolynomial p(nvars);
    std::uniform_int_distribution<int> count(0, terms);
    for (int t = count(rng); t > 0; --t) {
        RationalPolynomial m = RationalPolynomial::constant(pfaffcone::make_rational(num(rng), den(rng)), nvars);
        for (int d = deg(rng); d > 0; --d) m = m * RationalPolynomial::variable(static_cast<Var>(var(rng)), nvars);
        p = p + m;
    }
    return p;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    std::vector<Rational> x(n);
    for (auto& v : x) v = pfaffcone::make_rational(num(rng), den(rng));
    return x;
}

/// Sum of squares x1^2 + ... + xn^2 built term by term.
inline RationalPolynomial squares(std::size_t n) {
    RationalPolynomial s(n);
    for (Var i = 1; i <= n; ++i) {
        auto x = RationalPolynomial::variable(i, n);
        s = s + x * x;
    }
    return s;
}

}  // namespace oracle

#endif  // PFAFFCONE_TESTS_ORACLES_HPP
