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

// The l = 3 cone as Hsiang's cubic: the 6x6 skew matrix in x1..x15 corresponds
// to a traceless anti-hermitian 4x4 matrix Z with (i/3) Tr[Z^3] = P_3.

#ifndef PFAFFCONE_HSIANG_HPP
#define PFAFFCONE_HSIANG_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "poly_matrix.hpp"
#include "polynomial_io.hpp"
#include "skew.hpp"

namespace pfaffcone {

inline constexpr std::size_t kHsiangVars = 15;

/// The su(4) element corresponding to the generic 6x6 skew matrix.
inline ComplexMatrix build_Z() {
    // (i/2) * symmetric part + (1/2) * antisymmetric part, row-major
    static constexpr std::array<std::string_view, 16> symmetric = {
        "x3 + x8 - x12", "x9 + x11",      "-x5 - x10",     "x7 - x4",         //
        "x9 + x11",      "x3 + x12 - x8", "x4 + x7",       "x10 - x5",        //
        "-x5 - x10",     "x4 + x7",       "x8 + x12 - x3", "x11 - x9",        //
        "x7 - x4",       "x10 - x5",      "x11 - x9",      "-x3 - x8 - x12",  //
    };
    static constexpr std::array<std::string_view, 16> antisymmetric = {
        "0",          "x15 + x6",   "-x14 - x2",  "x1 - x13",  //
        "-x15 - x6",  "0",          "x1 + x13",   "x2 - x14",  //
        "x14 + x2",   "-x1 - x13",  "0",          "x6 - x15",  //
        "-x1 + x13",  "-x2 + x14",  "-x6 + x15",  "0",         //
    };
    const GaussianRational half_i(Rational(0), make_rational(1, 2));
    const GaussianRational half(make_rational(1, 2));
    ComplexMatrix z(4, kHsiangVars);
    for (std::size_t k = 0; k < 16; ++k) {
        auto s = parse_polynomial<GaussianRational>(symmetric[k], kHsiangVars);
        auto a = parse_polynomial<GaussianRational>(antisymmetric[k], kHsiangVars);
        z(k / 4 + 1, k % 4 + 1) = half_i * s + half * a;
    }
    return z;
}

inline bool verify_anti_hermitian(const ComplexMatrix& z) { return (adjoint(z) + z).is_zero(); }

struct TraceCubedIdentity {
    GaussianPolynomial value;  // (i/3) Tr[Z^3]
    bool imaginary_vanishes = false;
    bool matches_pfaffian = false;

    bool passed() const { return imaginary_vanishes && matches_pfaffian; }
};

inline TraceCubedIdentity verify_trace_cubed_identity(const ComplexMatrix& z = build_Z()) {
    TraceCubedIdentity r;
    const GaussianRational i_third(Rational(0), make_rational(1, 3));
    r.value = i_third * (z * z * z).trace();
    r.imaginary_vanishes = imag_part(r.value).is_zero();
    r.matches_pfaffian = r.imaginary_vanishes && real_part(r.value) == pfaffian(3);
    return r;
}

/// Block swap [[0, 1], [1, 0]] with 3x3 blocks.
inline ComplexMatrix block_swap() {
    ComplexMatrix m(6, 0);
    for (std::size_t k = 1; k <= 3; ++k) {
        m(k, k + 3) = GaussianPolynomial::constant(GaussianRational(1));
        m(k + 3, k) = GaussianPolynomial::constant(GaussianRational(1));
    }
    return m;
}

struct LMembershipWitness {
    ComplexMatrix candidate;
    ComplexMatrix defect;  // X^T + M X M

    bool member() const { return defect.is_zero(); }
};

/// Membership in L = {X : X^T = -M X M}, M the block swap.
inline LMembershipWitness check_L_membership(const ComplexMatrix& x) {
    if (x.dim() != 6) throw std::invalid_argument("L membership is defined for 6x6 matrices");
    const auto m = block_swap();
    return {x, x.transpose() + m * x * m};
}

/**
 * Y = 1/2 * D K X K' D' with 3x3 blocks
 *   D = diag(1, -i), K = [[1, 1], [-1, 1]], K' = [[1, -1], [1, 1]], D' = diag(1, i).
 * Since K K' = 2 and D D' = 1 this is a similarity transform.
 */
inline ComplexMatrix map_X_to_Y(const ComplexMatrix& x) {
    if (x.dim() != 6) throw std::invalid_argument("map_X_to_Y expects a 6x6 matrix");
    ComplexMatrix d(6, 0), k(6, 0), kp(6, 0), dp(6, 0);
    auto c = [](GaussianRational v) { return GaussianPolynomial::constant(v); };
    const GaussianRational i = GaussianRational::i();
    for (std::size_t r = 1; r <= 3; ++r) {
        d(r, r) = c(1);
        d(r + 3, r + 3) = c(-i);
        dp(r, r) = c(1);
        dp(r + 3, r + 3) = c(i);
        k(r, r) = c(1);
        k(r, r + 3) = c(1);
        k(r + 3, r) = c(-1);
        k(r + 3, r + 3) = c(1);
        kp(r, r) = c(1);
        kp(r, r + 3) = c(-1);
        kp(r + 3, r) = c(1);
        kp(r + 3, r + 3) = c(1);
    }
    return GaussianRational(make_rational(1, 2)) * (d * k * x * kp * dp);
}

inline bool is_antisymmetric(const ComplexMatrix& y) { return (y.transpose() + y).is_zero(); }

/// E23 - E65, E12 - E54, E26 - E35: the matrices taken as positive simple roots of L.
inline std::array<ComplexMatrix, 3> simple_root_matrices() {
    auto e = [](std::size_t a, std::size_t b) { return ComplexMatrix::elementary(6, a, b); };
    return {e(2, 3) - e(6, 5), e(1, 2) - e(5, 4), e(2, 6) - e(3, 5)};
}

/// Exact random member of L: X = (R - M R^T M)/2 for a random rational R.
inline ComplexMatrix random_L_member(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    ComplexMatrix r(6, 0);
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t b = 1; b <= 6; ++b)
            r(a, b) = GaussianPolynomial::constant(GaussianRational(make_rational(num(rng), den(rng))));
    const auto m = block_swap();
    return GaussianRational(make_rational(1, 2)) * (r - m * r.transpose() * m);
}

inline nlohmann::json to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t a = 1; a <= m.dim(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t b = 1; b <= m.dim(); ++b) row.push_back(to_string(m(a, b)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pfaffcone

#endif  // PFAFFCONE_HSIANG_HPP
