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

// Minimality of the Pfaffian cones {P_l = 0}.
//
// For a homogeneous u the mean curvature of {u = 0} is proportional to
// |grad u|^2 Lap(u) - u_i u_j u_ij. The Pfaffian is harmonic and satisfies
// u_i u_j u_ij = rho u with rho = Tr[S^2]/12, so both terms vanish on the cone.

#ifndef PFAFFCONE_MINIMALITY_HPP
#define PFAFFCONE_MINIMALITY_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly_matrix.hpp"
#include "polynomial.hpp"
#include "skew.hpp"

namespace pfaffcone {

/// sum_{i,j} u_i u_j u_ij, computed from formal partials in the x coordinates.
inline RationalPolynomial cubic_form(const RationalPolynomial& u) {
    const std::size_t n = u.nvars();
    std::vector<RationalPolynomial> grad;
    grad.reserve(n);
    for (Var i = 1; i <= n; ++i) grad.push_back(partial(u, i));

    RationalPolynomial total(n);
    for (Var i = 1; i <= n; ++i) {
        if (grad[i - 1].is_zero()) continue;
        // sum_j u_ij u_j, then times u_i
        RationalPolynomial hv(n);
        for (Var j = 1; j <= n; ++j) {
            if (grad[j - 1].is_zero()) continue;
            RationalPolynomial uij = partial(grad[i - 1], j);
            if (!uij.is_zero()) hv += uij * grad[j - 1];
        }
        if (!hv.is_zero()) total += grad[i - 1] * hv;
    }
    return total;
}

inline RationalPolynomial cubic_form(int ell) {
    if (ell < 2) throw std::invalid_argument("cubic form requires l >= 2");
    return cubic_form(pfaffian(ell));
}

struct VerificationMode {
    enum class Kind { symbolic, randomized };
    Kind kind = Kind::symbolic;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    static VerificationMode symbolic() { return {}; }
    static VerificationMode randomized(std::size_t trials, std::uint64_t seed) {
        return {Kind::randomized, trials, seed};
    }
    std::string name() const { return kind == Kind::symbolic ? "symbolic" : "randomized"; }
};

struct MinimalityCertificate {
    int ell = 0;
    VerificationMode method;
    bool laplacian_zero = false;
    bool cubic_identity_holds = false;
    bool rho_matches_trace = false;
    bool rho_homogeneous = false;
    RationalPolynomial rho;                       // symbolic mode only
    std::size_t failures = 0;                     // randomized mode
    std::optional<std::vector<Rational>> witness;  // first failing point, randomized mode

    bool passed() const { return laplacian_zero && cubic_identity_holds && rho_matches_trace && rho_homogeneous; }
};

class InfeasibleSizeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Integer coordinates for identity testing are drawn uniformly from [-9, 9].
inline constexpr long kIdentityTestBox = 9;

/// Per-trial generator derived from (seed, trial) so trials are independent of scheduling.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

inline std::vector<Rational> random_integer_point(std::size_t n, std::mt19937_64& rng, long box = kIdentityTestBox) {
    std::uniform_int_distribution<long> dist(-box, box);
    std::vector<Rational> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
}

/**
 * Exact check of u_i u_j u_ij = (Tr[S^2]/12) u at one point. Values of u, its
 * gradient and the Hessian tensor are read off the numeric sub-Pfaffian table.
 */
inline bool minimality_identity_at(int ell, std::span<const Rational> x) {
    NumericPfaffianTable<Rational> table(skew_matrix_at(ell, x));
    PairIndexMap pairs(ell);
    const Var n = static_cast<Var>(pairs.nvars());
    std::vector<Rational> grad(n);
    for (Var i = 1; i <= n; ++i) {
        auto [a, b] = pairs.pair(i);
        grad[i - 1] = table.gradient(a, b);
    }
    Rational cubic = 0, trace = 0;
    for (Var i = 1; i <= n; ++i) {
        auto [a, b] = pairs.pair(i);
        for (Var j = 1; j <= n; ++j) {
            auto [c, d] = pairs.pair(j);
            Rational s = table.second(a, b, c, d);
            if (sgn(s) == 0) continue;
            cubic += grad[i - 1] * grad[j - 1] * s;
            trace += s * s;
        }
    }
    trace *= 4;  // all-index sum, see trace_S2
    return cubic == trace / 12 * table.pfaffian();
}

/**
 * Certificate that {P_l = 0} is minimal.
 *
 * Symbolic mode: Lap(P_l) = 0; cubic_form(l) divided by P_l leaves remainder
 * zero; the quotient rho equals trace_S2(l)/12; rho is homogeneous of degree 2l-4.
 * Randomized mode keeps the symbolic Laplacian check (it is linear in the size
 * of P_l) and replaces the rest with exact evaluation at `trials` integer points.
 */
inline MinimalityCertificate verify_minimality(int ell, VerificationMode mode, int symbolic_bound = 4) {
    if (ell < 2) throw std::invalid_argument("minimality certificate requires l >= 2");
    MinimalityCertificate cert;
    cert.ell = ell;
    cert.method = mode;
    RationalPolynomial u = pfaffian(ell);
    cert.laplacian_zero = laplacian(u).is_zero();

    if (mode.kind == VerificationMode::Kind::symbolic) {
        if (ell > symbolic_bound)
            throw InfeasibleSizeError("symbolic minimality certificate requested for l = " + std::to_string(ell) +
                                      " above the configured bound " + std::to_string(symbolic_bound));
        auto [rho, rem] = divide_exact(cubic_form(u), u);
        cert.cubic_identity_holds = rem.is_zero();
        RationalPolynomial expected = RationalPolynomial::constant(make_rational(1, 12), u.nvars()) * trace_S2(ell);
        cert.rho_matches_trace = (rho == expected);
        auto deg = rho.homogeneous_degree();
        cert.rho_homogeneous = !rho.is_zero() && deg && *deg == static_cast<std::size_t>(2 * ell - 4);
        cert.rho = std::move(rho);
        return cert;
    }

    for (std::size_t t = 0; t < mode.trials; ++t) {
        auto rng = trial_rng(mode.seed, t);
        auto x = random_integer_point(u.nvars(), rng);
        if (!minimality_identity_at(ell, x)) {
            if (!cert.witness) cert.witness = x;
            ++cert.failures;
        }
    }
    cert.cubic_identity_holds = cert.failures == 0;
    cert.rho_matches_trace = cert.failures == 0;
    cert.rho_homogeneous = true;  // rho is evaluated as Tr[S^2]/12, homogeneous by construction
    return cert;
}

/// A point of R^n with u(point) = 0 exactly.
struct ZeroSetPoint {
    std::vector<Rational> coords;
    double gradient_norm = 0.0;
    bool singular = false;
};

inline std::vector<double> to_doubles(std::span<const Rational> x) {
    std::vector<double> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(v.get_d());
    return out;
}

/// Gradient norm threshold on a cone: |grad u| <= rel_tol * |x|^(l-1) counts as singular.
inline bool is_singular_gradient(double gradient_norm, double point_norm, int ell, double rel_tol = 1e-8) {
    return gradient_norm <= rel_tol * std::pow(point_norm, ell - 1);
}

/**
 * u is affine in each variable: u = A x_j + B. With the other coordinates of
 * `point` fixed, sets x_j = -B/A. Returns nullopt when A = 0 and B != 0; when
 * A = B = 0 the whole line lies in the zero set and the point is returned
 * with x_j = 0.
 */
inline std::optional<std::vector<Rational>> solve_on_line(const RationalPolynomial& u, std::vector<Rational> point,
                                                          Var j) {
    point.at(j - 1) = 0;
    Rational b = evaluate(u, point);
    Rational a = evaluate(partial(u, j), point);
    if (sgn(a) == 0) {
        if (sgn(b) == 0) return point;
        return std::nullopt;
    }
    point[j - 1] = -b / a;
    return point;
}

/// Draws exact rational points on {P_l = 0}.
class ZeroSetSampler {
   public:
    explicit ZeroSetSampler(int ell, std::size_t max_draws = 64) : ell_(ell), u_(pfaffian(ell)), max_draws_(max_draws) {
        for (Var i = 1; i <= u_.nvars(); ++i) grad_.push_back(partial(u_, i));
    }

    int ell() const noexcept { return ell_; }
    const RationalPolynomial& polynomial() const noexcept { return u_; }

    /// Coordinates are small rationals p/q, |p| <= 9, 1 <= q <= 4; one variable
    /// with nonzero linear coefficient is then solved for. Degenerate draws
    /// (every linear coefficient zero) are redrawn.
    ZeroSetPoint sample(std::uint64_t seed) const {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
        const std::size_t n = u_.nvars();
        std::vector<Var> order(n);
        std::iota(order.begin(), order.end(), Var{1});
        for (std::size_t draw = 0; draw < max_draws_; ++draw) {
            std::vector<Rational> x(n);
            for (auto& v : x) v = make_rational(num(rng), den(rng));
            std::shuffle(order.begin(), order.end(), rng);
            for (Var j : order) {
                std::vector<Rational> probe = x;
                probe[j - 1] = 0;
                Rational a = evaluate(grad_[j - 1], probe);
                if (sgn(a) == 0) continue;
                probe[j - 1] = -evaluate(u_, probe) / a;
                return finish(std::move(probe));
            }
        }
        throw std::runtime_error("zero-set sampler exhausted its retry budget");
    }

    ZeroSetPoint finish(std::vector<Rational> coords) const {
        if (sgn(evaluate(u_, coords)) != 0) throw std::logic_error("sampled point is not on the zero set");
        ZeroSetPoint p;
        double g2 = 0.0;
        for (const auto& g : grad_) {
            double gi = evaluate(g, coords).get_d();
            g2 += gi * gi;
        }
        p.gradient_norm = std::sqrt(g2);
        auto xd = to_doubles(coords);
        double norm = std::sqrt(std::inner_product(xd.begin(), xd.end(), xd.begin(), 0.0));
        p.singular = is_singular_gradient(p.gradient_norm, norm, ell_);
        p.coords = std::move(coords);
        return p;
    }

   private:
    int ell_;
    RationalPolynomial u_;
    std::vector<RationalPolynomial> grad_;
    std::size_t max_draws_;
};

inline ZeroSetPoint sample_zero_point(int ell, std::uint64_t seed) { return ZeroSetSampler(ell).sample(seed); }

class SingularPointError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CurvatureSample {
    ZeroSetPoint point;
    double gradient_norm = 0.0;
    double mean_curvature_numerator = 0.0;   // |grad u|^2 Lap(u) - u_i u_j u_ij
    double normalized_mean_curvature = 0.0;  // numerator / |grad u|^3
};

/// Floating-point evaluation of the mean-curvature expression of {u = 0}.
class CurvatureEvaluator {
   public:
    explicit CurvatureEvaluator(int ell, double rel_tol = 1e-8) : ell_(ell), rel_tol_(rel_tol) {
        RationalPolynomial u = pfaffian(ell);
        n_ = u.nvars();
        laplacian_ = CompiledPolynomial(laplacian(u));
        for (Var i = 1; i <= n_; ++i) {
            RationalPolynomial ui = partial(u, i);
            grad_.emplace_back(ui);
            for (Var j = 1; j <= n_; ++j) {
                RationalPolynomial uij = partial(ui, j);
                if (!uij.is_zero()) hess_.push_back({i - 1, j - 1, CompiledPolynomial(uij)});
            }
        }
    }

    CurvatureSample at(const ZeroSetPoint& point) const {
        if (point.coords.size() != n_) throw std::invalid_argument("point length does not match l(2l-1)");
        auto x = to_doubles(point.coords);
        std::vector<double> g(n_);
        double g2 = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            g[i] = grad_[i](x);
            g2 += g[i] * g[i];
        }
        double gnorm = std::sqrt(g2);
        double xnorm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        if (is_singular_gradient(gnorm, xnorm, ell_, rel_tol_))
            throw SingularPointError("gradient vanishes at the point (singular point of the cone)");
        double contraction = 0.0;
        for (const auto& h : hess_) contraction += g[h.i] * g[h.j] * h.poly(x);
        double lap = laplacian_.empty() ? 0.0 : laplacian_(x);

        CurvatureSample s;
        s.point = point;
        s.gradient_norm = gnorm;
        s.mean_curvature_numerator = g2 * lap - contraction;
        s.normalized_mean_curvature = s.mean_curvature_numerator / (g2 * gnorm);
        return s;
    }

   private:
    struct HessianEntry {
        std::size_t i, j;
        CompiledPolynomial poly;
    };
    int ell_;
    double rel_tol_;
    std::size_t n_ = 0;
    std::vector<CompiledPolynomial> grad_;
    std::vector<HessianEntry> hess_;
    CompiledPolynomial laplacian_;
};

inline CurvatureSample mean_curvature_at(int ell, const ZeroSetPoint& point) { return CurvatureEvaluator(ell).at(point); }

/// Layout: diagonal entries x1..xn, then the strict upper triangle row-major.
inline RationalPolyMatrix symmetric_symbolic_matrix(int n) {
    const std::size_t nv = static_cast<std::size_t>(n * (n + 1) / 2);
    RationalPolyMatrix m(static_cast<std::size_t>(n), nv);
    Var next = static_cast<Var>(n) + 1;
    for (int a = 1; a <= n; ++a) m(a, a) = RationalPolynomial::variable(static_cast<Var>(a), nv);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            m(a, b) = RationalPolynomial::variable(next++, nv);
            m(b, a) = m(a, b);
        }
    return m;
}

/// n x n matrix of n^2 independent variables, row-major.
inline RationalPolyMatrix general_symbolic_matrix(int n) {
    const std::size_t nv = static_cast<std::size_t>(n * n);
    RationalPolyMatrix m(static_cast<std::size_t>(n), nv);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) m(a, b) = RationalPolynomial::variable(static_cast<Var>((a - 1) * n + b), nv);
    return m;
}

struct SymmetricCounterexample {
    RationalPolynomial determinant;
    RationalPolynomial laplacian;
    RationalPolynomial remainder;  // of u_i u_j u_ij divided by u
};

/// Determinants of symmetric matrices are neither harmonic nor satisfy u_i u_j u_ij = rho u.
inline SymmetricCounterexample symmetric_counterexample(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("symmetric counterexample is defined for n = 2, 3");
    RationalPolynomial u = determinant(symmetric_symbolic_matrix(n));
    return {u, laplacian(u), divide_exact(cubic_form(u), u).remainder};
}

struct DeterminantCertificate {
    int n = 0;
    RationalPolynomial determinant;
    bool harmonic = false;
    bool remainder_zero = false;
    RationalPolynomial rho;
    std::optional<std::size_t> rho_degree;

    bool passed() const { return harmonic && remainder_zero && rho_degree.has_value(); }
};

/// Determinants of unconstrained matrices are harmonic with polynomial rho.
inline DeterminantCertificate unconstrained_determinant_check(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("unconstrained determinant check is defined for n = 2, 3");
    DeterminantCertificate c;
    c.n = n;
    c.determinant = determinant(general_symbolic_matrix(n));
    c.harmonic = laplacian(c.determinant).is_zero();
    auto [q, r] = divide_exact(cubic_form(c.determinant), c.determinant);
    c.remainder_zero = r.is_zero();
    c.rho_degree = q.homogeneous_degree();
    c.rho = std::move(q);
    return c;
}

struct QuadricCongruence {
    RationalPolynomial form;
    bool diagonal = false;
    int positive = 0;
    int negative = 0;

    bool passed() const { return diagonal && positive == 3 && negative == 3; }
};

/// Applies (x_a, x_b) -> (x_a + x_b, x_b - x_a) on the planes (1,6), (2,5), (3,4) to P_2.
inline QuadricCongruence quadric_congruence_check() {
    const std::size_t n = 6;
    auto x = [&](Var v) { return RationalPolynomial::variable(v, n); };
    std::map<Var, RationalPolynomial> rot;
    for (auto [a, b] : {std::pair<Var, Var>{1, 6}, {2, 5}, {3, 4}}) {
        rot.emplace(a, x(a) + x(b));
        rot.emplace(b, x(b) - x(a));
    }
    QuadricCongruence q;
    q.form = substitute(pfaffian(2), rot);
    q.diagonal = true;
    for (const auto& t : q.form.terms()) {
        const auto& f = t.mono.factors();
        if (f.size() != 1 || f.front().second != 2) {
            q.diagonal = false;
            continue;
        }
        (sgn(t.coeff) > 0 ? q.positive : q.negative)++;
    }
    return q;
}

}  // namespace pfaffcone

#endif  // PFAFFCONE_MINIMALITY_HPP
