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

// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
// Exit status is 0 only if every criterion passes within budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pfaffcone/pfaffcone.hpp"

using namespace pfaffcone;

namespace {

using Clock = std::chrono::steady_clock;

RationalPolynomial constant(const Rational& c, std::size_t n) { return RationalPolynomial::constant(c, n); }

std::vector<Rational> rational_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rational> x(n);
    for (auto& v : x) v = make_rational(num(rng), den(rng));
    return x;
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<bool(std::string&)> body;
};

bool pfaffian_correctness(std::string& note) {
    const std::uint64_t expected[] = {1, 3, 15, 105, 945, 10395};
    for (int ell = 1; ell <= 6; ++ell) {
        auto u = pfaffian(ell);
        if (u.size() != expected[ell - 1]) {
            note = "term count for l = " + std::to_string(ell);
            return false;
        }
        for (const auto& t : u.terms())
            if (abs(t.coeff) != 1) {
                note = "non-unit coefficient for l = " + std::to_string(ell);
                return false;
            }
    }
    if (to_string(pfaffian(2)) != "x1*x6 - x2*x5 + x3*x4") return false;
    const auto p3 = parse_polynomial<Rational>(
        "x1*x10*x15 - x1*x11*x14 + x1*x12*x13 - x2*x7*x15 + x2*x8*x14 - x2*x9*x13 + x3*x6*x15 - x3*x8*x12"
        " + x3*x9*x11 - x4*x6*x14 + x4*x7*x12 - x4*x9*x10 + x5*x6*x13 - x5*x7*x11 + x5*x8*x10",
        15);
    note = "terms 1, 3, 15, 105, 945, 10395";
    return pfaffian(3) == p3;
}

bool square_is_determinant(std::string& note) {
    for (int ell = 1; ell <= 4; ++ell) {
        auto u = pfaffian(ell);
        if (u * u != determinant(ell)) {
            note = "symbolic mismatch at l = " + std::to_string(ell);
            return false;
        }
    }
    std::mt19937_64 rng(2);
    for (int ell = 5; ell <= 6; ++ell) {
        auto u = pfaffian(ell);
        for (int t = 0; t < 100; ++t) {
            auto x = rational_point(rng, u.nvars());
            Rational p = evaluate(u, x);
            if (p * p != determinant_at(ell, x)) {
                note = "pointwise mismatch at l = " + std::to_string(ell);
                return false;
            }
        }
    }
    note = "symbolic l <= 4, 100 rational points for l = 5, 6";
    return true;
}

bool minimality_identity(std::string& note) {
    for (int ell = 2; ell <= 4; ++ell) {
        auto t0 = Clock::now();
        auto u = pfaffian(ell);
        if (!laplacian(u).is_zero()) return false;
        auto [rho, rem] = divide_exact(cubic_form(u), u);
        if (!rem.is_zero()) return false;
        if (rho != constant(make_rational(1, 12), u.nvars()) * trace_S2(ell)) return false;
        if (ell == 4 && std::chrono::duration<double>(Clock::now() - t0).count() > 300) {
            note = "l = 4 symbolic over 5 minutes";
            return false;
        }
    }
    auto t0 = Clock::now();
    auto cert = verify_minimality(5, VerificationMode::randomized(1000, 5));
    if (std::chrono::duration<double>(Clock::now() - t0).count() > 300) {
        note = "l = 5 randomized over 5 minutes";
        return false;
    }
    note = "symbolic l = 2, 3, 4; l = 5 randomized 1000 trials, " + std::to_string(cert.failures) + " failures";
    return cert.passed() && cert.failures == 0;
}

bool trace_values(std::string& note) {
    const std::size_t n = 15;
    auto s = hessian_tensor(3);
    note = "Tr[S^2] = 24 x^2, Tr[S^3] = 48 P3";
    return trace_S2(s) == constant(24, n) * sum_of_squares(n) && trace_S3(s) == constant(48, n) * pfaffian(3);
}

bool hsiang_correspondence(std::string& note) {
    auto z = build_Z();
    if (!z.trace().is_zero() || !verify_anti_hermitian(z)) return false;
    auto id = verify_trace_cubed_identity(z);
    if (!(imag_part(id.value).is_zero() && (real_part(id.value) - pfaffian(3)).is_zero())) return false;
    for (const auto& x : simple_root_matrices())
        if (!check_L_membership(x).member()) return false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto x = random_L_member(seed);
        if (!check_L_membership(x).member() || !is_antisymmetric(map_X_to_Y(x))) return false;
    }
    note = "(i/3)Tr[Z^3] - P3 = 0; 3 simple roots in L; 100 random L-members";
    return true;
}

bool singular_quartic(std::string& note) {
    auto a = quartic_via_charpoly().quartic;
    if (a != quartic_via_subpfaffians().quartic || a != quartic_via_gradient().quartic) return false;
    auto published = published_quartic().quartic;
    if (published != a) return false;
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
        auto x = random_integer_point(15, rng);
        if (evaluate(published, x) != evaluate(a, x)) return false;
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto w = witness_singular_stratum(seed);
        if (!w.passed()) return false;
    }
    note = std::to_string(a.size()) + "-term quartic; 200 points; 100 rank-2 witnesses";
    return true;
}

bool numeric_minimality(std::string& note) {
    note.clear();
    for (int k = 1; k <= 3; ++k) {
        const int ell = k + 1;
        ZeroSetSampler sampler(ell);
        CurvatureEvaluator eval(ell);
        double worst = 0.0;
        int evaluated = 0, singular = 0;
        for (std::uint64_t s = 0; evaluated < 1000; ++s) {
            auto rng = trial_rng(7, s);
            auto p = sampler.sample(rng());
            if (p.singular) {
                if (++singular > 1000) return false;
                continue;
            }
            ++evaluated;
            worst = std::max(worst, std::abs(eval.at(p).normalized_mean_curvature));
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "%sk=%d max %.2e", note.empty() ? "" : ", ", k, worst);
        note += buf;
        if (!(worst < 1e-9)) return false;
    }
    return true;
}

bool negative_control(std::string& note) {
    auto c2 = symmetric_counterexample(2);
    if (c2.laplacian != constant(-2, 3)) return false;
    if (c2.remainder != parse_polynomial<Rational>("-6*x3^2", 3)) return false;
    auto c3 = symmetric_counterexample(3);
    note = "n = 2: Laplacian -2, remainder -6*x3^2; n = 3 fails both";
    return !c3.laplacian.is_zero() && !c3.remainder.is_zero();
}

bool positive_control(std::string& note) {
    for (int n = 2; n <= 3; ++n) {
        auto c = unconstrained_determinant_check(n);
        if (!c.harmonic || !c.remainder_zero || !c.rho_degree) return false;
    }
    note = "n = 2, 3 harmonic with polynomial rho";
    return true;
}

bool quadric_congruence(std::string& note) {
    auto q = quadric_congruence_check();
    note = to_string(q.form);
    return q.diagonal && q.positive == 3 && q.negative == 3;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Pfaffian term counts and P2, P3", 10, pfaffian_correctness},
        {2, "p^2 = det", 60, square_is_determinant},
        {3, "minimality identity u_i u_j u_ij = rho u", 600, minimality_identity},
        {4, "Tr[S^2] and Tr[S^3] for l = 3", 30, trace_values},
        {5, "su(4) correspondence", 10, hsiang_correspondence},
        {6, "singular-locus quartic", 60, singular_quartic},
        {7, "numeric mean curvature", 120, numeric_minimality},
        {8, "negative control: symmetric determinants", 5, negative_control},
        {9, "positive control: unconstrained determinants", 10, positive_control},
        {10, "quadric congruence", 1, quadric_congruence},
    };

    bool all = true;
    double suite_s = 0.0;
    for (const auto& c : criteria) {
        std::string note;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        suite_s += s;
        bool in_time = s < c.budget_s;
        if (!in_time) note += " (over budget)";
        all = all && ok && in_time;
        std::printf("[%s] criterion %2d: %s  (%.2f s / %.0f s)  %s\n", ok && in_time ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), s, c.budget_s, note.c_str());
        std::fflush(stdout);
    }

    auto t5 = Clock::now();
    auto p5 = pfaffian(5);
    double s5 = std::chrono::duration<double>(Clock::now() - t5).count();
    auto t6 = Clock::now();
    auto p6 = pfaffian(6);
    double s6 = std::chrono::duration<double>(Clock::now() - t6).count();
    bool perf = s5 < 1.0 && s6 < 30.0 && suite_s < 900.0 && p5.size() == 945 && p6.size() == 10395;
    all = all && perf;
    std::printf("[%s] criterion 11: performance  pfaffian(5) %.3f s / 1 s, pfaffian(6) %.3f s / 30 s, criteria 1-10 %.1f s / 900 s\n",
                perf ? "PASS" : "FAIL", s5, s6, suite_s);
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
