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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace pfaffcone;

namespace {

RationalPolynomial P(std::string_view s, std::size_t n) { return parse_polynomial<Rational>(s, n); }

constexpr std::string_view kP3 =
    "x1*x10*x15 - x1*x11*x14 + x1*x12*x13 - x2*x7*x15 + x2*x8*x14 - x2*x9*x13 + x3*x6*x15 - x3*x8*x12"
    " + x3*x9*x11 - x4*x6*x14 + x4*x7*x12 - x4*x9*x10 + x5*x6*x13 - x5*x7*x11 + x5*x8*x10";

}  // namespace

TEST_CASE("pair index layout", "[skew]") {
    CHECK(pair_index(3, 1, 2) == 1);
    CHECK(pair_index(3, 5, 6) == 15);
    CHECK(pair_index(2, 3, 4) == 6);
    CHECK(pair_index(3, 2, 3) == 6);
    for (int ell = 1; ell <= 5; ++ell) {
        PairIndexMap m(ell);
        for (Var i = 1; i <= static_cast<Var>(m.nvars()); ++i) {
            auto [a, b] = m.pair(i);
            REQUIRE(a < b);
            REQUIRE(m.index(a, b) == i);
            REQUIRE(oracle::pair_var(ell, a, b) == i);
        }
    }
    CHECK_THROWS_AS(pair_index(2, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(pair_index(2, 3, 5), std::out_of_range);
    CHECK_THROWS_AS(pair_index_inverse(2, 7), std::out_of_range);
    CHECK_THROWS_AS(pair_index_inverse(2, 0), std::out_of_range);
}

TEST_CASE("symbolic skew matrix", "[skew]") {
    SkewSymbolicMatrix m(3);
    for (int a = 1; a <= 6; ++a) {
        CHECK(m.entry(a, a).is_zero());
        for (int b = 1; b <= 6; ++b) CHECK(m.entry(a, b) == -m.entry(b, a));
    }
    CHECK(m.entry(5, 6) == RationalPolynomial::variable(15, 15));
    CHECK(m.entry(2, 1) == -RationalPolynomial::variable(1, 15));
}

TEST_CASE("pfaffian examples", "[skew]") {
    CHECK(to_string(pfaffian(1)) == "x1");
    CHECK(to_string(pfaffian(2)) == "x1*x6 - x2*x5 + x3*x4");
    CHECK(pfaffian(3) == P(kP3, 15));
}

TEST_CASE("pfaffian term counts and unit coefficients", "[skew]") {
    const std::size_t expected[] = {1, 3, 15, 105, 945, 10395};
    for (int ell = 1; ell <= 6; ++ell) {
        auto u = pfaffian(ell);
        REQUIRE(u.size() == expected[ell - 1]);
        REQUIRE(u.size() == double_factorial_odd(ell));
        REQUIRE(u.homogeneous_degree() == std::optional<std::size_t>(ell));
        for (const auto& t : u.terms()) REQUIRE(abs(t.coeff) == 1);
    }
}

TEST_CASE("row expansion agrees with the epsilon sum", "[skew][oracle]") {
    for (int ell = 1; ell <= 4; ++ell) REQUIRE(pfaffian(ell) == oracle::epsilon_pfaffian(ell));
}

TEST_CASE("determinant examples and p^2 = det", "[skew]") {
    CHECK(determinant(1) == P("x1^2", 1));
    auto p2 = pfaffian(2);
    CHECK(determinant(2) == p2 * p2);
    for (int ell = 1; ell <= 3; ++ell)
        REQUIRE(determinant(ell) == oracle::cofactor_determinant(oracle::skew_rows(ell), skew_nvars(ell)));
    for (int ell = 1; ell <= 4; ++ell) {
        auto u = pfaffian(ell);
        REQUIRE(u * u == determinant(ell));
    }
}

TEST_CASE("p^2 = det at random rational points", "[skew]") {
    std::mt19937_64 rng(17);
    for (int ell = 3; ell <= 6; ++ell) {
        auto u = pfaffian(ell);
        const int points = ell == 3 ? 100 : (ell == 6 ? 100 : 50);
        for (int t = 0; t < points; ++t) {
            auto x = oracle::random_point(rng, u.nvars());
            Rational p = evaluate(u, x);
            REQUIRE(p * p == determinant_at(ell, x));
        }
    }
}

TEST_CASE("sub-pfaffian examples", "[skew]") {
    CHECK(sub_pfaffian(3, {1, 2}) == RationalPolynomial::variable(1, 15));
    CHECK(sub_pfaffian(3, {3, 4, 5, 6}) == P("x10*x15 - x11*x14 + x12*x13", 15));
    CHECK(sub_pfaffian(3, std::span<const int>{}) == RationalPolynomial::constant(Rational(1), 15));
    CHECK(sub_pfaffian(3, {1, 2, 3, 4, 5, 6}) == pfaffian(3));
    CHECK_THROWS_AS(sub_pfaffian(3, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("grad_matrix examples", "[skew]") {
    CHECK(grad_matrix(2).at({1, 2}) == RationalPolynomial::variable(6, 6));
    CHECK(grad_matrix(3).at({1, 2}) == P("x10*x15 - x11*x14 + x12*x13", 15));
    CHECK(grad_matrix(1).at({1, 2}) == RationalPolynomial::constant(Rational(1), 1));
}

TEST_CASE("gradient is the signed complementary sub-pfaffian", "[skew]") {
    for (int ell = 1; ell <= 4; ++ell) {
        auto grad = grad_matrix(ell);
        auto u = pfaffian(ell);
        for (const auto& [ab, g] : grad) {
            auto [a, b] = ab;
            REQUIRE(g == partial(u, pair_index(ell, a, b)));
            std::vector<int> rest;
            for (int r = 1; r <= 2 * ell; ++r)
                if (r != a && r != b) rest.push_back(r);
            RationalPolynomial expected = sub_pfaffian(ell, rest);
            if ((a + b + 1) % 2) expected = -expected;
            REQUIRE(g == expected);
        }
    }
}

TEST_CASE("hessian tensor examples", "[skew]") {
    auto s3 = hessian_tensor(3);
    CHECK(s3.at(1, 2, 3, 4) == RationalPolynomial::variable(15, 15));
    CHECK(hessian_tensor(2).at(1, 2, 3, 4) == RationalPolynomial::constant(Rational(1), 6));
    // overlapping pairs: the antisymmetric extension and the direct derivative coincide (both vanish)
    CHECK(s3.at(1, 2, 1, 3).is_zero());
    CHECK(partial(partial(pfaffian(3), pair_index(3, 1, 2)), pair_index(3, 1, 3)).is_zero());
    CHECK_THROWS_AS(hessian_tensor(1), std::invalid_argument);
}

TEST_CASE("hessian tensor is totally antisymmetric", "[skew]") {
    for (int ell = 2; ell <= 4; ++ell) {
        auto s = hessian_tensor(ell);
        const int m = 2 * ell;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                for (int c = b + 1; c <= m; ++c)
                    for (int d = c + 1; d <= m; ++d) {
                        RationalPolynomial base = s.at(a, b, c, d);
                        std::vector<int> perm{0, 1, 2, 3};
                        const int idx[4] = {a, b, c, d};
                        do {
                            RationalPolynomial v = s.at(idx[perm[0]], idx[perm[1]], idx[perm[2]], idx[perm[3]]);
                            REQUIRE(v == (oracle::permutation_sign(perm) > 0 ? base : -base));
                        } while (std::next_permutation(perm.begin(), perm.end()));
                    }
    }
}

TEST_CASE("l = 3 hessian equals the contracted epsilon tensor", "[skew]") {
    auto s = hessian_tensor(3);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c)
                for (int d = 1; d <= 6; ++d) {
                    // sum over e < f of eps_{abcdef} x_(e,f)
                    RationalPolynomial expected(15);
                    for (int e = 1; e <= 6; ++e)
                        for (int f = e + 1; f <= 6; ++f) {
                            std::vector<int> idx{a, b, c, d, e, f};
                            std::vector<int> sorted = idx;
                            std::sort(sorted.begin(), sorted.end());
                            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                            std::vector<int> perm;
                            for (int v : idx) perm.push_back(v - 1);
                            RationalPolynomial x = oracle::skew_entry(3, e, f);
                            expected = oracle::permutation_sign(perm) > 0 ? expected + x : expected - x;
                        }
                    REQUIRE(s.at(a, b, c, d) == expected);
                }
}

TEST_CASE("traces of S against all-index sums", "[skew][oracle]") {
    // naive full sums over a,b,c,d(,e,f) in 1..2l with the antisymmetric extension
    for (int ell = 2; ell <= 3; ++ell) {
        auto s = hessian_tensor(ell);
        const int m = 2 * ell;
        const std::size_t n = skew_nvars(ell);
        RationalPolynomial t2(n), t3(n);
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                for (int c = 1; c <= m; ++c)
                    for (int d = 1; d <= m; ++d) {
                        RationalPolynomial sab = s.at(a, b, c, d);
                        if (sab.is_zero()) continue;
                        t2 = t2 + sab * s.at(c, d, a, b);
                        for (int e = 1; e <= m; ++e)
                            for (int f = 1; f <= m; ++f) {
                                RationalPolynomial scd = s.at(c, d, e, f);
                                if (scd.is_zero()) continue;
                                t3 = t3 + sab * scd * s.at(e, f, a, b);
                            }
                    }
        REQUIRE(trace_S2(ell) == t2);
        REQUIRE(trace_S3(ell) == t3);
    }
}

TEST_CASE("trace values", "[skew]") {
    CHECK(trace_S2(2) == RationalPolynomial::constant(Rational(24), 6));
    CHECK(trace_S2(3) == RationalPolynomial::constant(Rational(24), 15) * oracle::squares(15));
    CHECK(trace_S3(3) == RationalPolynomial::constant(Rational(48), 15) * pfaffian(3));
}

TEST_CASE("characteristic polynomial against a cofactor oracle", "[skew][oracle]") {
    for (int ell = 1; ell <= 3; ++ell) {
        const std::size_t n = skew_nvars(ell);
        const Var lambda = static_cast<Var>(n + 1);
        auto rows = oracle::skew_rows(ell);
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < rows.size(); ++b) {
                rows[a][b] = -rows[a][b].with_nvars(n + 1);
                if (a == b) rows[a][b] = rows[a][b] + RationalPolynomial::variable(lambda, n + 1);
            }
        RationalPolynomial det = oracle::cofactor_determinant(rows, n + 1);
        auto cp = char_poly(ell);
        REQUIRE(cp.odd_coefficients_vanish);
        RationalPolynomial assembled(n + 1);
        for (int power = 0; power <= 2 * ell; ++power)
            assembled = assembled +
                        cp.coefficient(power).with_nvars(n + 1) * pow(RationalPolynomial::variable(lambda, n + 1), power);
        REQUIRE(assembled == det);
    }
}

TEST_CASE("characteristic coefficients", "[skew]") {
    CHECK(char_poly(1).coefficient(0) == P("x1^2", 1));
    auto c2 = char_poly(2);
    CHECK(c2.coefficient(2) == oracle::squares(6));
    CHECK(c2.coefficient(0) == pow(pfaffian(2), 2));
    for (int ell = 1; ell <= 4; ++ell) {
        auto cp = char_poly(ell);
        REQUIRE(cp.odd_coefficients_vanish);
        auto u = pfaffian(ell);
        REQUIRE(cp.coefficient(0) == u * u);
        REQUIRE(cp.coefficient(2 * ell - 2) == oracle::squares(skew_nvars(ell)));
        for (int power = 1; power < 2 * ell; power += 2) REQUIRE(cp.coefficient(power).is_zero());
    }
    CHECK_THROWS_AS(char_poly(2).coefficient(5), std::out_of_range);
    auto j = to_json(char_poly(2));
    CHECK(j.size() == 3);
    CHECK(j[0]["power"] == 0);
}

TEST_CASE("gradient norm equals c2", "[skew]") {
    for (int ell = 2; ell <= 3; ++ell) {
        auto u = pfaffian(ell);
        RationalPolynomial norm(u.nvars());
        for (Var i = 1; i <= u.nvars(); ++i) norm = norm + pow(partial(u, i), 2);
        REQUIRE(norm == char_poly(ell).coefficient(2));
        // and the sub-pfaffian sum over (2l-2)-subsets
        RationalPolynomial subs(u.nvars());
        for (int a = 1; a <= 2 * ell; ++a)
            for (int b = a + 1; b <= 2 * ell; ++b) {
                std::vector<int> rest;
                for (int r = 1; r <= 2 * ell; ++r)
                    if (r != a && r != b) rest.push_back(r);
                subs = subs + pow(sub_pfaffian(ell, rest), 2);
            }
        REQUIRE(subs == norm);
    }
    // l = 4: pointwise against the characteristic polynomial of the numeric matrix
    auto u = pfaffian(4);
    std::vector<RationalPolynomial> grad;
    for (Var i = 1; i <= u.nvars(); ++i) grad.push_back(partial(u, i));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        auto x = oracle::random_point(rng, u.nvars());
        Rational norm = 0;
        for (const auto& g : grad) {
            Rational v = evaluate(g, x);
            norm += v * v;
        }
        auto m = skew_matrix_at(4, x);
        RationalPolyMatrix a(8, 0);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) a(i + 1, j + 1) = RationalPolynomial::constant(m[i][j]);
        auto c = faddeev_leverrier(a);
        REQUIRE(c[2] == RationalPolynomial::constant(norm));
    }
}

TEST_CASE("numeric sub-pfaffian table matches symbolic derivatives", "[skew]") {
    std::mt19937_64 rng(29);
    for (int ell = 2; ell <= 4; ++ell) {
        auto u = pfaffian(ell);
        auto s = hessian_tensor(ell);
        PairIndexMap pairs(ell);
        for (int t = 0; t < 5; ++t) {
            auto x = oracle::random_point(rng, u.nvars());
            NumericPfaffianTable<Rational> table(skew_matrix_at(ell, x));
            REQUIRE(table.pfaffian() == evaluate(u, x));
            for (Var i = 1; i <= u.nvars(); ++i) {
                auto [a, b] = pairs.pair(i);
                REQUIRE(table.gradient(a, b) == evaluate(partial(u, i), x));
                for (Var j = 1; j <= u.nvars(); ++j) {
                    auto [c, d] = pairs.pair(j);
                    REQUIRE(table.second(a, b, c, d) == evaluate(s.by_vars(i, j), x));
                }
            }
        }
    }
}

TEST_CASE("pfaffian expander rejects odd subsets", "[skew]") {
    PfaffianExpander ex(2);
    CHECK_THROWS_AS(ex.of(0b0111), std::invalid_argument);
    CHECK(ex.of(0) == RationalPolynomial::constant(Rational(1), 6));
    CHECK(ex.full() == pfaffian(2));
}
