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

// Singular locus of the l = 3 cone. Besides the origin the cone is singular
// where the 6x6 skew matrix has rank <= 2, i.e. where two of the three
// eigenvalue pairs +-i*lambda vanish. That set is cut out by the lambda^2
// coefficient of the characteristic polynomial, a quartic which equals both
// the sum of squared 4x4 sub-Pfaffians and |grad P_3|^2.

#ifndef PFAFFCONE_SINGULAR_HPP
#define PFAFFCONE_SINGULAR_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "polynomial_io.hpp"
#include "skew.hpp"

namespace pfaffcone {

/// Reference transcription of the singular-locus quartic (hand-ordered terms, not canonical order).
inline constexpr std::string_view kPublishedSingularQuartic = R"(
    x3^2*x6^2 + x4^2*x6^2 + x5^2*x6^2 + x2^2*x7^2 + x4^2*x7^2 + x5^2*x7^2 + x2^2*x8^2 + x3^2*x8^2
    + x5^2*x8^2 + x2^2*x9^2 + x3^2*x9^2 + x4^2*x9^2 + x1^2*x10^2 + x4^2*x10^2 + x5^2*x10^2
    + x8^2*x10^2 + x9^2*x10^2 + x1^2*x11^2 + x3^2*x11^2 + x5^2*x11^2 + x7^2*x11^2 + x9^2*x11^2
    + x1^2*x12^2 + x3^2*x12^2 + x4^2*x12^2 + x7^2*x12^2 + x8^2*x12^2 + x1^2*x13^2 + x2^2*x13^2
    + x5^2*x13^2 + x6^2*x13^2 + x9^2*x13^2 + x12^2*x13^2 + x1^2*x14^2 + x2^2*x14^2 + x4^2*x14^2
    + x6^2*x14^2 + x8^2*x14^2 + x11^2*x14^2 + x1^2*x15^2 + x2^2*x15^2 + x3^2*x15^2 + x6^2*x15^2
    + x7^2*x15^2 + x10^2*x15^2 - 2*x2*x3*x6*x7 - 2*x2*x4*x6*x8 - 2*x3*x4*x7*x8 - 2*x2*x5*x6*x9
    - 2*x3*x5*x7*x9 - 2*x4*x5*x8*x9 + 2*x1*x3*x6*x10 - 2*x1*x2*x7*x10 - 2*x1*x2*x8*x11
    - 2*x3*x4*x10*x11 - 2*x7*x8*x10*x11 - 2*x1*x2*x9*x12 - 2*x3*x5*x10*x12 - 2*x7*x9*x10*x12
    - 2*x4*x5*x11*x12 - 2*x8*x9*x11*x12 - 2*x1*x3*x8*x13 - 2*x2*x3*x11*x13 - 2*x6*x7*x11*x13
    - 2*x1*x3*x9*x14 - 2*x2*x3*x12*x14 - 2*x6*x7*x12*x14 - 2*x4*x5*x13*x14 - 2*x8*x9*x13*x14
    - 2*x11*x12*x13*x14 - 2*x1*x4*x9*x15 - 2*x2*x4*x12*x15 - 2*x6*x8*x12*x15 - 2*x3*x4*x14*x15
    - 2*x7*x8*x14*x15 - 2*x10*x11*x14*x15 + 2*x1*x4*x6*x11 + 2*x1*x5*x6*x12 + 2*x1*x4*x7*x13
    + 2*x2*x4*x10*x13 + 2*x6*x8*x10*x13 + 2*x1*x5*x7*x14 + 2*x2*x5*x10*x14 + 2*x6*x9*x10*x14
    + 2*x1*x5*x8*x15 + 2*x2*x5*x11*x15 + 2*x6*x9*x11*x15 + 2*x3*x5*x13*x15 + 2*x7*x9*x13*x15
    + 2*x10*x12*x13*x15)";

struct SingularLocusQuartic {
    enum class Provenance { char_poly, sub_pfaffian_sum, gradient_norm, published };
    RationalPolynomial quartic;
    Provenance provenance;
};

inline std::string_view provenance_name(SingularLocusQuartic::Provenance p) {
    switch (p) {
        case SingularLocusQuartic::Provenance::char_poly: return "char-poly";
        case SingularLocusQuartic::Provenance::sub_pfaffian_sum: return "sub-pfaffian-sum";
        case SingularLocusQuartic::Provenance::gradient_norm: return "gradient-norm";
        case SingularLocusQuartic::Provenance::published: return "reference-fixture";
    }
    return "unknown";
}

/// c_2 of det(lambda I - M) for the 6x6 skew matrix.
inline SingularLocusQuartic quartic_via_charpoly() {
    return {char_poly(3).coefficient(2), SingularLocusQuartic::Provenance::char_poly};
}

/// Sum over the 15 four-element index sets I of Pf(M_I)^2.
inline SingularLocusQuartic quartic_via_subpfaffians() {
    PfaffianExpander ex(3);
    RationalPolynomial sum(skew_nvars(3));
    for (IndexMask mask = 0; mask < 64; ++mask) {
        if (std::popcount(mask) != 4) continue;
        const auto& pf = ex.of(mask);
        sum += pf * pf;
    }
    return {sum, SingularLocusQuartic::Provenance::sub_pfaffian_sum};
}

/// sum_i (dP_3/dx_i)^2.
inline SingularLocusQuartic quartic_via_gradient() {
    RationalPolynomial p = pfaffian(3);
    RationalPolynomial sum(p.nvars());
    for (Var i = 1; i <= p.nvars(); ++i) {
        RationalPolynomial g = partial(p, i);
        sum += g * g;
    }
    return {sum, SingularLocusQuartic::Provenance::gradient_norm};
}

inline SingularLocusQuartic published_quartic() {
    return {parse_polynomial<Rational>(kPublishedSingularQuartic, 15), SingularLocusQuartic::Provenance::published};
}

struct SingularDiagnosis {
    std::vector<double> point;
    std::optional<std::vector<Rational>> exact_point;
    std::optional<Rational> exact_pfaffian;
    std::optional<Rational> exact_quartic;
    double pfaffian_value = 0.0;
    double quartic_value = 0.0;
    int numeric_rank = 0;
    std::array<double, 3> lambdas{};  // descending; the spectrum is {+-i lambda_k}
};

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankRelTol = 1e-10;

namespace detail {

inline const RationalPolynomial& cached_quartic() {
    static const RationalPolynomial q = quartic_via_charpoly().quartic;
    return q;
}

inline const RationalPolynomial& cached_pfaffian3() {
    static const RationalPolynomial p = pfaffian(3);
    return p;
}

inline void spectral_diagnosis(SingularDiagnosis& d) {
    Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
    PairIndexMap pairs(3);
    for (Var i = 1; i <= 15; ++i) {
        auto [a, b] = pairs.pair(i);
        m(a - 1, b - 1) = d.point[i - 1];
        m(b - 1, a - 1) = -d.point[i - 1];
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(m);
    const auto& sv = svd.singularValues();
    double top = sv.maxCoeff();
    d.numeric_rank = 0;
    if (top > 0)
        for (int k = 0; k < 6; ++k)
            if (sv(k) > kRankRelTol * top) ++d.numeric_rank;

    // -M^2 = M^T M is symmetric PSD with eigenvalues lambda_k^2, each twice
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(m.transpose() * m);
    std::array<double, 6> ev{};
    for (int k = 0; k < 6; ++k) ev[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, eig.eigenvalues()(k)));
    std::sort(ev.begin(), ev.end(), std::greater<>());
    d.lambdas = {ev[0], ev[2], ev[4]};
}

}  // namespace detail

inline SingularDiagnosis diagnose_point(std::span<const Rational> x) {
    if (x.size() != 15) throw std::invalid_argument("diagnose_point expects 15 coordinates");
    SingularDiagnosis d;
    d.exact_point = std::vector<Rational>(x.begin(), x.end());
    d.exact_pfaffian = evaluate(detail::cached_pfaffian3(), x);
    d.exact_quartic = evaluate(detail::cached_quartic(), x);
    d.pfaffian_value = d.exact_pfaffian->get_d();
    d.quartic_value = d.exact_quartic->get_d();
    for (const auto& v : x) d.point.push_back(v.get_d());
    detail::spectral_diagnosis(d);
    return d;
}

inline SingularDiagnosis diagnose_point(std::span<const double> x) {
    if (x.size() != 15) throw std::invalid_argument("diagnose_point expects 15 coordinates");
    SingularDiagnosis d;
    d.point.assign(x.begin(), x.end());
    d.pfaffian_value = CompiledPolynomial(detail::cached_pfaffian3())(x);
    d.quartic_value = CompiledPolynomial(detail::cached_quartic())(x);
    detail::spectral_diagnosis(d);
    return d;
}

/// Upper-triangle coordinates of a b^T - b a^T (rank <= 2).
inline std::vector<Rational> rank2_point(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != 6 || b.size() != 6) throw std::invalid_argument("rank-2 construction expects 6-vectors");
    std::vector<Rational> x;
    x.reserve(15);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = r + 1; c < 6; ++c) x.push_back(a[r] * b[c] - b[r] * a[c]);
    return x;
}

struct SingularWitness {
    std::vector<Rational> a, b;
    SingularDiagnosis diagnosis;
    bool gradient_vanishes = false;  // exact

    bool passed() const {
        return diagnosis.exact_pfaffian && sgn(*diagnosis.exact_pfaffian) == 0 && diagnosis.exact_quartic &&
               sgn(*diagnosis.exact_quartic) == 0 && diagnosis.numeric_rank <= 2 && gradient_vanishes;
    }
};

inline SingularWitness singular_witness(std::vector<Rational> a, std::vector<Rational> b) {
    SingularWitness w;
    auto x = rank2_point(a, b);
    w.diagnosis = diagnose_point(std::span<const Rational>(x));
    const auto& p = detail::cached_pfaffian3();
    w.gradient_vanishes = true;
    for (Var i = 1; i <= 15; ++i)
        if (sgn(evaluate(partial(p, i), x)) != 0) w.gradient_vanishes = false;
    w.a = std::move(a);
    w.b = std::move(b);
    return w;
}

/// Random rank-2 point of the cone: a, b with entries p/q, |p| <= 9, 1 <= q <= 4.
inline SingularWitness witness_singular_stratum(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rational> a(6), b(6);
    for (auto& v : a) v = make_rational(num(rng), den(rng));
    for (auto& v : b) v = make_rational(num(rng), den(rng));
    return singular_witness(std::move(a), std::move(b));
}

inline nlohmann::json to_json(const SingularDiagnosis& d) {
    nlohmann::json j;
    if (d.exact_point) {
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& v : *d.exact_point) pt.push_back(v.get_str());
        j["point"] = pt;
        j["pfaffian"] = d.exact_pfaffian->get_str();
        j["quartic"] = d.exact_quartic->get_str();
    } else {
        j["point"] = d.point;
        j["pfaffian"] = d.pfaffian_value;
        j["quartic"] = d.quartic_value;
    }
    j["numeric_rank"] = d.numeric_rank;
    j["lambdas"] = d.lambdas;
    return j;
}

}  // namespace pfaffcone

#endif  // PFAFFCONE_SINGULAR_HPP
