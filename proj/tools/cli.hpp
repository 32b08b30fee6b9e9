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

// Command implementations for the pfaffcone tool. Kept in a header so the
// test suite can drive run_cli() in-process.
//
// The CLI speaks k (hypersurface index); the library speaks l = k + 1.
// Exit status: 0 iff every check passed, 1 on a failed check, 2 on usage errors.

#ifndef PFAFFCONE_TOOLS_CLI_HPP
#define PFAFFCONE_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfaffcone/pfaffcone.hpp"

namespace pfaffcone::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Largest k emitted without --force.
inline constexpr int kEmitGuardK = 5;

struct CliOptions {
    std::string command;
    int k = 1;
    std::string mode = "auto";  // auto | symbolic | randomized
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::size_t samples = 1000;
    double tolerance = 1e-9;
    std::string format = "text";  // text | structured
    bool force = false;
    bool with_rho = false;

    int ell() const { return k + 1; }
    bool structured() const { return format == "structured"; }
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string point_text(std::span<const Rational> x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].get_str();
    return s + ")";
}

inline nlohmann::json point_json(std::span<const Rational> x) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : x) j.push_back(v.get_str());
    return j;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline RunReport begin_report(const CliOptions& o, const nlohmann::json& echo, bool with_k = true) {
    RunReport r;
    r.command = o.command;
    r.options = echo;
    if (with_k) {
        r.k = o.k;
        r.ell = o.ell();
    }
    return r;
}

inline int finish(RunReport& r, std::chrono::steady_clock::time_point t0, const CliOptions& o, std::ostream& out) {
    r.total_ms = elapsed_ms(t0);
    if (o.structured())
        out << r.to_json().dump(2) << "\n";
    else
        out << r.to_text();
    return r.overall_pass() ? kExitPass : kExitFail;
}

inline bool symbolic_mode(const CliOptions& o) {
    if (o.mode == "symbolic") return true;
    if (o.mode == "randomized") return false;
    return o.ell() <= 4;
}

}  // namespace detail

/// Pfaffian of the generic 2l x 2l skew matrix, l = k+1.
inline int run_emit(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const int ell = o.ell();
    const std::uint64_t terms = double_factorial_odd(ell);
    if (o.k > kEmitGuardK && !o.force) {
        err << "emit: P_" << ell << " has " << terms << " terms ((2k+1)!! with k = " << o.k
            << "); rerun with --force to expand it\n";
        return kExitUsage;
    }
    auto t0 = std::chrono::steady_clock::now();
    RationalPolynomial u = pfaffian(ell);
    if (!o.structured()) {
        out << to_string(u) << "\n";
        if (o.with_rho && ell >= 2) {
            RationalPolynomial tr = trace_S2(ell);
            out << "rho = " << to_string(RationalPolynomial::constant(make_rational(1, 12), tr.nvars()) * tr) << "\n";
            out << "Tr[S^2] = " << to_string(tr) << "\n";
        }
        return kExitPass;
    }
    RunReport r = detail::begin_report(o, {{"k", o.k}, {"with_rho", o.with_rho}, {"force", o.force}});
    r.results["terms"] = u.size();
    r.results["expected_terms"] = terms;
    r.results["text"] = to_string(u);
    r.results["polynomial"] = to_json(u);
    if (o.with_rho && ell >= 2) {
        RationalPolynomial tr = trace_S2(ell);
        r.results["trace_S2"] = to_json(tr);
        r.results["rho"] = to_json(RationalPolynomial::constant(make_rational(1, 12), tr.nvars()) * tr);
    }
    return detail::finish(r, t0, o, out);
}

/// Full minimality certificate for P_l plus the skew-matrix cross-identities.
inline int run_verify(const CliOptions& o, std::ostream& out, std::ostream&) {
    const int ell = o.ell();
    const bool symbolic = detail::symbolic_mode(o);
    const std::size_t trials = o.trials.value_or(1000);
    const std::string method = symbolic ? "symbolic" : "randomized";
    if (symbolic && ell > 4 && !o.force)
        throw UsageError("symbolic verification for k = " + std::to_string(o.k) +
                         " expands polynomials far beyond desk scale; use --mode randomized or pass --force");
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = detail::begin_report(
        o, {{"k", o.k}, {"mode", o.mode}, {"resolved_mode", method}, {"seed", o.seed}, {"trials", trials}});
    r.results["trial_box"] = "integers in [-" + std::to_string(kIdentityTestBox) + ", " +
                             std::to_string(kIdentityTestBox) + "]";

    const RationalPolynomial u = pfaffian(ell);
    const PairIndexMap pairs(ell);
    const std::size_t n = u.nvars();
    // random points for the pointwise cross-checks, shared across checks
    const std::size_t cross_trials = std::min<std::size_t>(trials, 100);
    auto cross_point = [&](std::size_t t) {
        auto rng = trial_rng(o.seed ^ 0x5a5a5a5aULL, t);
        return random_integer_point(n, rng);
    };

    r.checks.push_back(timed_check("pfaffian.term_count", ell, "symbolic", [&](VerificationReport& c) {
        bool unit = true;
        for (const auto& t : u.terms()) unit = unit && abs(t.coeff) == 1;
        c.details = {{"terms", u.size()}, {"expected", double_factorial_odd(ell)}, {"unit_coefficients", unit}};
        return unit && u.size() == double_factorial_odd(ell);
    }));

    r.checks.push_back(timed_check("pfaffian.square_equals_determinant", ell, method, [&](VerificationReport& c) {
        if (symbolic) return u * u == determinant(ell);
        for (std::size_t t = 0; t < cross_trials; ++t) {
            auto x = cross_point(t);
            Rational p = evaluate(u, x);
            if (p * p != determinant_at(ell, x)) {
                c.witness = detail::point_text(x);
                return false;
            }
        }
        c.details = {{"points", cross_trials}};
        return true;
    }));

    r.checks.push_back(timed_check("pfaffian.gradient_complement_rule", ell, method, [&](VerificationReport& c) {
        // dP/dx_(a,b) = (-1)^(a+b+1) Pf(complement of {a, b})
        if (symbolic) {
            for (Var i = 1; i <= n; ++i) {
                auto [a, b] = pairs.pair(i);
                std::vector<int> rest;
                for (int r2 = 1; r2 <= 2 * ell; ++r2)
                    if (r2 != a && r2 != b) rest.push_back(r2);
                RationalPolynomial expected = sub_pfaffian(ell, rest);
                if ((a + b + 1) % 2 != 0) expected = -expected;
                if (partial(u, i) != expected) {
                    c.witness = "pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                    return false;
                }
            }
            return true;
        }
        std::vector<RationalPolynomial> grad;
        for (Var i = 1; i <= n; ++i) grad.push_back(partial(u, i));
        const std::size_t pts = std::min<std::size_t>(cross_trials, 10);
        for (std::size_t t = 0; t < pts; ++t) {
            auto x = cross_point(t);
            NumericPfaffianTable<Rational> table(skew_matrix_at(ell, x));
            for (Var i = 1; i <= n; ++i) {
                auto [a, b] = pairs.pair(i);
                if (evaluate(grad[i - 1], x) != table.gradient(a, b)) {
                    c.witness = detail::point_text(x);
                    return false;
                }
            }
        }
        c.details = {{"points", pts}};
        return true;
    }));

    const bool symbolic_charpoly = symbolic && ell <= 3;
    r.checks.push_back(timed_check("charpoly.odd_coefficients_vanish", ell, symbolic_charpoly ? "symbolic" : "randomized",
                                   [&](VerificationReport& c) {
                                       if (symbolic_charpoly) return char_poly(ell).odd_coefficients_vanish;
                                       for (std::size_t t = 0; t < cross_trials; ++t) {
                                           auto x = cross_point(t);
                                           auto m = skew_matrix_at(ell, x);
                                           RationalPolyMatrix a(m.size(), 0);
                                           for (std::size_t i = 0; i < m.size(); ++i)
                                               for (std::size_t j = 0; j < m.size(); ++j)
                                                   a(i + 1, j + 1) = RationalPolynomial::constant(m[i][j]);
                                           auto coeffs = faddeev_leverrier(a);
                                           for (std::size_t p = 1; p < coeffs.size(); p += 2)
                                               if (!coeffs[p].is_zero()) {
                                                   c.witness = detail::point_text(x);
                                                   return false;
                                               }
                                       }
                                       c.details = {{"points", cross_trials}};
                                       return true;
                                   }));

    MinimalityCertificate cert;
    r.checks.push_back(timed_check("minimality.identity", ell, method, [&](VerificationReport& c) {
        cert = verify_minimality(ell, symbolic ? VerificationMode::symbolic() : VerificationMode::randomized(trials, o.seed),
                                 o.force ? ell : 4);
        c.details = {{"laplacian_zero", cert.laplacian_zero},
                     {"cubic_identity_holds", cert.cubic_identity_holds},
                     {"rho_matches_trace_S2_over_12", cert.rho_matches_trace},
                     {"rho_homogeneous", cert.rho_homogeneous}};
        if (!symbolic) {
            c.details["trials"] = trials;
            c.details["failures"] = cert.failures;
        }
        if (cert.witness) c.witness = detail::point_text(*cert.witness);
        return cert.passed();
    }));
    if (symbolic) {
        r.results["rho_terms"] = cert.rho.size();
        if (ell <= 3 || o.with_rho) r.results["rho"] = to_string(cert.rho);
    } else {
        r.results["rho"] = "Tr[S^2]/12, evaluated pointwise";
    }

    if (ell == 3) {
        const HessianTensor s = hessian_tensor(3);
        r.checks.push_back(timed_check("trace.S2_equals_24_x_squared", ell, "symbolic", [&](VerificationReport&) {
            return trace_S2(s) == RationalPolynomial::constant(Rational(24), n) * sum_of_squares(n);
        }));
        r.checks.push_back(timed_check("trace.S3_equals_48_P3", ell, "symbolic", [&](VerificationReport&) {
            return trace_S3(s) == RationalPolynomial::constant(Rational(48), n) * u;
        }));
    }
    return detail::finish(r, t0, o, out);
}

/// Mean curvature of {P_l = 0} at sampled nonsingular points.
inline int run_curvature(const CliOptions& o, std::ostream& out, std::ostream&) {
    const int ell = o.ell();
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = detail::begin_report(
        o, {{"k", o.k}, {"samples", o.samples}, {"seed", o.seed}, {"tolerance", o.tolerance}});
    const ZeroSetSampler sampler(ell);
    const CurvatureEvaluator eval(ell);
    double max_normalized = 0.0, max_numerator = 0.0;
    std::size_t singular = 0, evaluated = 0;
    std::optional<std::vector<Rational>> worst;
    r.checks.push_back(timed_check("curvature.normalized_below_tolerance", ell, "numeric", [&](VerificationReport& c) {
        for (std::size_t s = 0; s < o.samples; ++s) {
            auto rng = trial_rng(o.seed, s);
            ZeroSetPoint p = sampler.sample(rng());
            if (p.singular) {
                ++singular;
                continue;
            }
            CurvatureSample cs = eval.at(p);
            ++evaluated;
            double a = std::abs(cs.normalized_mean_curvature);
            max_numerator = std::max(max_numerator, std::abs(cs.mean_curvature_numerator));
            if (!worst || a > max_normalized) {
                max_normalized = a;
                worst = p.coords;
            }
        }
        bool pass = evaluated > 0 && max_normalized < o.tolerance;
        if (!pass && worst) c.witness = detail::point_text(*worst);
        return pass;
    }));
    r.results["max_abs_normalized_mean_curvature"] = max_normalized;
    r.results["max_abs_mean_curvature_numerator"] = max_numerator;
    r.results["nonsingular_samples"] = evaluated;
    r.results["singular_samples"] = singular;
    return detail::finish(r, t0, o, out);
}

/// The l = 3 cone as a cubic on su(4).
inline int run_hsiang(const CliOptions& o, std::ostream& out, std::ostream&) {
    const std::size_t trials = o.trials.value_or(100);
    CliOptions fixed = o;
    fixed.k = 2;
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = detail::begin_report(fixed, {{"seed", o.seed}, {"trials", trials}});
    const ComplexMatrix z = build_Z();

    r.checks.push_back(timed_check("hsiang.Z_linear_in_x", 3, "symbolic", [&](VerificationReport&) {
        for (std::size_t a = 1; a <= 4; ++a)
            for (std::size_t b = 1; b <= 4; ++b) {
                const auto& e = z(a, b);
                if (!e.is_zero() && e.homogeneous_degree() != std::optional<std::size_t>(1)) return false;
            }
        return true;
    }));
    r.checks.push_back(timed_check("hsiang.Z_traceless", 3, "symbolic",
                                   [&](VerificationReport&) { return z.trace().is_zero(); }));
    r.checks.push_back(timed_check("hsiang.Z_anti_hermitian", 3, "symbolic",
                                   [&](VerificationReport&) { return verify_anti_hermitian(z); }));
    r.checks.push_back(timed_check("hsiang.i_third_trace_Z_cubed_equals_P3", 3, "symbolic", [&](VerificationReport& c) {
        auto id = verify_trace_cubed_identity(z);
        c.details = {{"imaginary_part_vanishes", id.imaginary_vanishes}};
        if (!id.passed()) c.witness = "(i/3)Tr[Z^3] = " + to_string(id.value);
        return id.passed();
    }));
    r.checks.push_back(timed_check("hsiang.trace_Z_squared_equals_minus_x_squared", 3, "symbolic", [&](VerificationReport&) {
        return real_part((z * z).trace()) == -sum_of_squares(kHsiangVars) && imag_part((z * z).trace()).is_zero();
    }));

    nlohmann::json images = nlohmann::json::array();
    r.checks.push_back(timed_check("hsiang.simple_roots_in_L", 3, "symbolic", [&](VerificationReport& c) {
        int index = 0;
        for (const auto& x : simple_root_matrices()) {
            ++index;
            auto w = check_L_membership(x);
            auto y = map_X_to_Y(x);
            images.push_back(to_json(y));
            if (!w.member() || !is_antisymmetric(y)) {
                c.witness = "simple root " + std::to_string(index);
                return false;
            }
        }
        return true;
    }));
    r.results["simple_root_images"] = images;

    r.checks.push_back(timed_check("hsiang.random_L_members_map_to_antisymmetric", 3, "randomized", [&](VerificationReport& c) {
        for (std::size_t t = 0; t < trials; ++t) {
            auto rng = trial_rng(o.seed, t);
            auto x = random_L_member(rng());
            if (!check_L_membership(x).member() || !is_antisymmetric(map_X_to_Y(x))) {
                c.witness = "trial " + std::to_string(t);
                return false;
            }
        }
        c.details = {{"trials", trials}};
        return true;
    }));
    return detail::finish(r, t0, o, out);
}

/// Singular locus of the l = 3 cone: quartic pipelines, fixture, witnesses.
inline int run_singular(const CliOptions& o, std::ostream& out, std::ostream&) {
    const std::size_t trials = o.trials.value_or(100);
    CliOptions fixed = o;
    fixed.k = 2;
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = detail::begin_report(fixed, {{"seed", o.seed}, {"trials", trials}});
    const RationalPolynomial p3 = pfaffian(3);

    RationalPolynomial quartic;
    r.checks.push_back(timed_check("singular.three_pipelines_agree", 3, "symbolic", [&](VerificationReport& c) {
        auto a = quartic_via_charpoly(), b = quartic_via_subpfaffians(), g = quartic_via_gradient();
        quartic = a.quartic;
        c.details = {{"char_poly_terms", a.quartic.size()},
                     {"sub_pfaffian_terms", b.quartic.size()},
                     {"gradient_terms", g.quartic.size()}};
        return a.quartic == b.quartic && b.quartic == g.quartic;
    }));
    r.results["quartic_terms"] = quartic.size();
    r.results["quartic_degree"] = quartic.degree();

    const RationalPolynomial published = published_quartic().quartic;
    r.checks.push_back(timed_check("singular.fixture_matches_symbolically", 3, "symbolic",
                                   [&](VerificationReport&) { return published == quartic; }));
    r.checks.push_back(timed_check("singular.fixture_matches_at_points", 3, "randomized", [&](VerificationReport& c) {
        for (std::size_t t = 0; t < 200; ++t) {
            auto rng = trial_rng(o.seed ^ 0x51ULL, t);
            auto x = random_integer_point(kHsiangVars, rng);
            if (evaluate(published, x) != evaluate(quartic, x)) {
                c.witness = detail::point_text(x);
                return false;
            }
        }
        c.details = {{"points", 200}};
        return true;
    }));
    r.checks.push_back(timed_check("singular.quartic_nonnegative", 3, "randomized", [&](VerificationReport& c) {
        std::mt19937_64 rng(o.seed ^ 0x4e4eULL);
        std::uniform_int_distribution<long> num(-99, 99), den(1, 16);
        for (std::size_t t = 0; t < 1000; ++t) {
            std::vector<Rational> x(kHsiangVars);
            for (auto& v : x) v = make_rational(num(rng), den(rng));
            if (sgn(evaluate(quartic, x)) < 0) {
                c.witness = detail::point_text(x);
                return false;
            }
        }
        c.details = {{"points", 1000}};
        return true;
    }));

    nlohmann::json first_witness;
    r.checks.push_back(timed_check("singular.rank2_witnesses", 3, "randomized", [&](VerificationReport& c) {
        for (std::size_t t = 0; t < trials; ++t) {
            auto rng = trial_rng(o.seed, t);
            SingularWitness w = witness_singular_stratum(rng());
            if (t == 0) first_witness = to_json(w.diagnosis);
            if (!w.passed()) {
                c.witness = detail::point_text(*w.diagnosis.exact_point);
                return false;
            }
        }
        c.details = {{"witnesses", trials}};
        return true;
    }));
    r.results["example_witness"] = first_witness;

    // numeric rank 6 <=> Pf != 0 and rank >= 4 <=> quartic > 0, so on points
    // with Pf != 0 the quartic is positive
    std::map<int, std::size_t> ranks;
    r.checks.push_back(timed_check("singular.rank_matches_quartic", 3, "numeric", [&](VerificationReport& c) {
        for (std::size_t t = 0; t < trials; ++t) {
            auto rng = trial_rng(o.seed ^ 0x6a6aULL, t);
            auto x = random_integer_point(kHsiangVars, rng);
            SingularDiagnosis d = diagnose_point(std::span<const Rational>(x));
            ++ranks[d.numeric_rank];
            bool pf_nonzero = sgn(*d.exact_pfaffian) != 0;
            bool quartic_positive = sgn(*d.exact_quartic) > 0;
            if ((d.numeric_rank == 6) != pf_nonzero || (d.numeric_rank >= 4) != quartic_positive) {
                c.witness = detail::point_text(x);
                return false;
            }
        }
        return true;
    }));
    r.checks.push_back(timed_check("singular.rank4_points_off_the_quartic", 3, "numeric", [&](VerificationReport& c) {
        std::uniform_int_distribution<long> dist(-kIdentityTestBox, kIdentityTestBox);
        for (std::size_t t = 0; t < trials; ++t) {
            auto rng = trial_rng(o.seed ^ 0x4444ULL, t);
            std::array<std::vector<Rational>, 4> v;
            for (auto& w : v) {
                w.resize(6);
                for (auto& e : w) e = dist(rng);
            }
            auto x = rank2_point(v[0], v[1]), y = rank2_point(v[2], v[3]);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
            SingularDiagnosis d = diagnose_point(std::span<const Rational>(x));
            ++ranks[d.numeric_rank];
            if (sgn(*d.exact_pfaffian) != 0) {
                c.witness = detail::point_text(x);
                return false;
            }
            // rank 4 exactly when the quartic is positive; degenerate draws have rank <= 2
            if ((d.numeric_rank == 4) != (sgn(*d.exact_quartic) > 0) || d.numeric_rank > 4) {
                c.witness = detail::point_text(x);
                return false;
            }
        }
        return true;
    }));
    nlohmann::json hist = nlohmann::json::object();
    for (auto [rank, count] : ranks) hist[std::to_string(rank)] = count;
    r.results["rank_histogram"] = hist;
    return detail::finish(r, t0, o, out);
}

/// Timing table for pfaffian expansion and minimality verification, l = 2..6.
inline int run_bench(const CliOptions& o, std::ostream& out, std::ostream&) {
    const std::size_t trials = o.trials.value_or(100);
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = detail::begin_report(o, {{"seed", o.seed}, {"trials", trials}}, false);
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream table;
    table << std::left << std::setw(4) << "l" << std::setw(10) << "terms" << std::setw(16) << "pfaffian_ms"
          << std::setw(12) << "method" << "verify_ms\n";
    double ms5 = 0.0, ms6 = 0.0;
    for (int ell = 2; ell <= 6; ++ell) {
        auto ts = std::chrono::steady_clock::now();
        RationalPolynomial u = pfaffian(ell);
        double pf_ms = detail::elapsed_ms(ts);
        if (ell == 5) ms5 = pf_ms;
        if (ell == 6) ms6 = pf_ms;
        bool symbolic = ell <= 4;
        ts = std::chrono::steady_clock::now();
        auto cert = verify_minimality(ell, symbolic ? VerificationMode::symbolic() : VerificationMode::randomized(trials, o.seed));
        double verify_ms = detail::elapsed_ms(ts);
        rows.push_back({{"ell", ell}, {"terms", u.size()}, {"method", symbolic ? "symbolic" : "randomized"},
                        {"verified", cert.passed()}});
        r.checks.push_back({"bench.minimality_l" + std::to_string(ell), ell, symbolic ? "symbolic" : "randomized",
                            cert.passed(), std::nullopt, verify_ms, nullptr});
        char pf[32], vf[32];
        std::snprintf(pf, sizeof pf, "%.1f", pf_ms);
        std::snprintf(vf, sizeof vf, "%.1f", verify_ms);
        table << std::setw(4) << ell << std::setw(10) << u.size() << std::setw(16) << pf << std::setw(12)
              << (symbolic ? "symbolic" : "randomized") << vf << "\n";
    }
    r.checks.push_back({"bench.pfaffian_l5_under_1s", 5, "symbolic", ms5 < 1000.0, std::nullopt, ms5, nullptr});
    r.checks.push_back({"bench.pfaffian_l6_under_30s", 6, "symbolic", ms6 < 30000.0, std::nullopt, ms6, nullptr});
    r.results["rows"] = rows;
    if (!o.structured()) out << table.str();
    return detail::finish(r, t0, o, out);
}

inline int dispatch(const CliOptions& o, std::ostream& out, std::ostream& err) {
    if (o.command == "emit") return run_emit(o, out, err);
    if (o.command == "verify") return run_verify(o, out, err);
    if (o.command == "curvature") return run_curvature(o, out, err);
    if (o.command == "hsiang") return run_hsiang(o, out, err);
    if (o.command == "singular") return run_singular(o, out, err);
    if (o.command == "bench") return run_bench(o, out, err);
    throw UsageError("unknown command '" + o.command + "'");
}

/// Parses argv and runs the selected command.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pfaffian minimal cones: construction and exact verification", "pfaffcone"};
    app.set_version_flag("--version", std::string(PFAFFCONE_VERSION));
    app.require_subcommand(1);
    CliOptions o;
    std::size_t trials = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "hypersurface index k (l = k+1)")->check(CLI::Range(1, 30)); };
    auto add_trials = [&](CLI::App* sub) {
        sub->add_option("--trials", trials, "number of randomized trials")->check(CLI::PositiveNumber);
    };

    auto* emit = app.add_subcommand("emit", "print the Pfaffian P_{k+1}");
    add_k(emit);
    add_common(emit);
    emit->add_flag("--with-rho", o.with_rho, "also print rho = Tr[S^2]/12");
    emit->add_flag("--force", o.force, "expand beyond the size guard");

    auto* verify = app.add_subcommand("verify", "verify harmonicity and the minimality identity");
    add_k(verify);
    add_common(verify);
    add_trials(verify);
    verify->add_option("--mode", o.mode, "symbolic | randomized | auto")
        ->check(CLI::IsMember({"auto", "symbolic", "randomized"}));
    verify->add_flag("--with-rho", o.with_rho, "print rho even when large");
    verify->add_flag("--force", o.force, "allow symbolic mode above l = 4");

    auto* curvature = app.add_subcommand("curvature", "sample the zero set and evaluate mean curvature");
    add_k(curvature);
    add_common(curvature);
    curvature->add_option("--samples", o.samples, "number of zero-set samples")->check(CLI::PositiveNumber);
    curvature->add_option("--tolerance", o.tolerance, "bound on |normalized mean curvature|")
        ->check(CLI::NonNegativeNumber);

    auto* hsiang = app.add_subcommand("hsiang", "verify the su(4) cubic correspondence (k = 2)");
    add_common(hsiang);
    add_trials(hsiang);

    auto* singular = app.add_subcommand("singular", "verify the singular-locus quartic (k = 2)");
    add_common(singular);
    add_trials(singular);

    auto* bench = app.add_subcommand("bench", "time expansion and verification for l = 2..6");
    add_common(bench);
    add_trials(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    for (auto* sub : {emit, verify, curvature, hsiang, singular, bench})
        if (sub->parsed()) o.command = sub->get_name();
    if (trials > 0) o.trials = trials;

    try {
        return dispatch(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleSizeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pfaffcone"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pfaffcone::cli

#endif  // PFAFFCONE_TOOLS_CLI_HPP
