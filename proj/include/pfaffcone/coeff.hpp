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

#ifndef PFAFFCONE_COEFF_HPP
#define PFAFFCONE_COEFF_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfaffcone {

/// Arbitrary-precision rational. gmpxx keeps every value in lowest terms with
/// a positive denominator, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "num" or "num/den".
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        return make_rational(Integer(std::string(text.substr(0, slash))),
                             Integer(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational norm = o.re * o.re + o.im * o.im;
        if (sgn(norm) == 0) throw std::domain_error("division by zero");
        Rational r = (re * o.re + im * o.im) / norm;
        im = (im * o.re - re * o.im) / norm;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, Rational(-z.im)}; }

inline bool is_zero(const GaussianRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

inline std::string to_string(const GaussianRational& z) {
    if (is_zero(z.im)) return z.re.get_str();
    std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : z.im.get_str() + "*i";
    if (is_zero(z.re)) return im;
    if (sgn(z.im) < 0) return "(" + z.re.get_str() + " - " + im.substr(1) + ")";
    return "(" + z.re.get_str() + " + " + im + ")";
}

/// Static description of a coefficient ring.
template <class C>
struct CoeffRing;

template <>
struct CoeffRing<Rational> {
    static constexpr std::string_view name = "rational";
    static constexpr bool is_complex = false;
};

template <>
struct CoeffRing<GaussianRational> {
    static constexpr std::string_view name = "gaussian";
    static constexpr bool is_complex = true;
};

template <class C>
concept Coefficient = requires { CoeffRing<C>::name; };

}  // namespace pfaffcone

#endif  // PFAFFCONE_COEFF_HPP
