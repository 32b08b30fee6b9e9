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

// Canonical text and structured (JSON) forms of polynomials.
//
// Text: terms in descending graded-lex order, variables "x{i}", powers "x{i}^e",
// factors joined by '*', unit coefficients omitted, e.g.
//     "x1*x6 - x2*x5 + x3*x4"      "3/2*x1^2 - 1"      "(1/2 + 1/2*i)*x3"
// Structured: a JSON array of {"exponents": {"i": e, ...}, "coeff": ...} where
// coeff is {"num", "den"} (strings) for rationals and {"re": {...}, "im": {...}}
// for Gaussian rationals.

#ifndef PFAFFCONE_POLYNOMIAL_IO_HPP
#define PFAFFCONE_POLYNOMIAL_IO_HPP

#include <nlohmann/json.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>

#include "polynomial.hpp"

namespace pfaffcone {

namespace detail {

inline bool negative(const Rational& c) { return sgn(c) < 0; }

// a Gaussian coefficient is written with a leading minus only when it is
// purely real or purely imaginary
inline bool negative(const GaussianRational& c) {
    if (is_zero(c.im)) return sgn(c.re) < 0;
    if (is_zero(c.re)) return sgn(c.im) < 0;
    return false;
}

inline std::string magnitude_text(const Rational& c) { return Rational(abs(c)).get_str(); }

inline std::string magnitude_text(const GaussianRational& c) {
    if (is_zero(c.im)) return Rational(abs(c.re)).get_str();
    if (is_zero(c.re)) return abs(c.im) == 1 ? "i" : Rational(abs(c.im)).get_str() + "*i";
    return to_string(c);
}

inline bool is_unit_magnitude(const Rational& c) { return abs(c) == 1; }
inline bool is_unit_magnitude(const GaussianRational& c) { return is_zero(c.im) && abs(c.re) == 1; }

}  // namespace detail

template <Coefficient C>
std::string to_string(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = detail::negative(t.coeff);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (t.mono.is_one()) {
            s += detail::magnitude_text(t.coeff);
        } else {
            if (!detail::is_unit_magnitude(t.coeff)) s += detail::magnitude_text(t.coeff) + "*";
            s += t.mono.to_string();
        }
    }
    return s;
}

namespace detail {

template <Coefficient C>
class PolynomialParser {
   public:
    PolynomialParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    Polynomial<C> parse() {
        Polynomial<C> p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p.with_nvars(std::max(nvars_, max_var_));
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    std::size_t max_var_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial<C> expression() {
        Polynomial<C> acc;
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
        acc = term();
        if (negate) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            bool minus = text_[pos_++] == '-';
            Polynomial<C> t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial<C> term() {
        Polynomial<C> acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial<C> factor() {
        char c = peek();
        Polynomial<C> base;
        if (c == '(') {
            ++pos_;
            base = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (c == 'x') {
            ++pos_;
            unsigned long v = std::stoul(digits());
            if (v == 0) fail("variable indices start at 1");
            max_var_ = std::max<std::size_t>(max_var_, v);
            base = Polynomial<C>::monomial(Monomial::variable(static_cast<Var>(v)), C(1), v);
        } else if (c == 'i') {
            ++pos_;
            if constexpr (CoeffRing<C>::is_complex)
                base = Polynomial<C>::constant(GaussianRational::i());
            else
                fail("imaginary unit in a rational polynomial (coefficient-ring mismatch)");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            Rational q{Integer(num)};
            if (peek() == '/') {
                ++pos_;
                q = make_rational(Integer(num), Integer(digits()));
            }
            base = Polynomial<C>::constant(C(q));
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (peek() == '^') {
            ++pos_;
            base = pow(base, static_cast<unsigned>(std::stoul(digits())));
        }
        return base;
    }
};

}  // namespace detail

/// Parses the canonical text form (and any sum of products written with the same tokens).
template <Coefficient C>
Polynomial<C> parse_polynomial(std::string_view text, std::size_t nvars = 0) {
    return detail::PolynomialParser<C>(text, nvars).parse();
}

inline nlohmann::json rational_to_json(const Rational& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    auto field = [&](const char* key) -> Integer {
        const auto& v = j.at(key);
        if (v.is_string()) return Integer(v.get<std::string>());
        if (v.is_number_integer()) return Integer(v.get<long>());
        throw std::invalid_argument(std::string("rational field '") + key + "' must be a string or integer");
    };
    return make_rational(field("num"), j.contains("den") ? field("den") : Integer(1));
}

inline nlohmann::json coeff_to_json(const Rational& q) { return rational_to_json(q); }

inline nlohmann::json coeff_to_json(const GaussianRational& z) {
    return {{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

template <Coefficient C>
C coeff_from_json(const nlohmann::json& j) {
    if constexpr (CoeffRing<C>::is_complex) {
        if (j.contains("re")) return GaussianRational(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
        return GaussianRational(rational_from_json(j));
    } else {
        if (j.contains("re") || j.contains("im"))
            throw std::invalid_argument("Gaussian coefficient in a rational polynomial (coefficient-ring mismatch)");
        return rational_from_json(j);
    }
}

template <Coefficient C>
nlohmann::json to_json(const Polynomial<C>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : t.mono.factors()) exps[std::to_string(v)] = e;
        terms.push_back({{"exponents", std::move(exps)}, {"coeff", coeff_to_json(t.coeff)}});
    }
    return terms;
}

template <Coefficient C>
Polynomial<C> polynomial_from_json(const nlohmann::json& j, std::size_t nvars = 0) {
    if (!j.is_array()) throw std::invalid_argument("structured polynomial must be a JSON array");
    std::vector<typename Polynomial<C>::Term> terms;
    for (const auto& t : j) {
        std::vector<Monomial::Factor> factors;
        for (const auto& [key, e] : t.at("exponents").items()) {
            unsigned long v = std::stoul(key);
            if (v == 0) throw std::invalid_argument("variable indices start at 1");
            factors.emplace_back(static_cast<Var>(v), e.template get<Exp>());
        }
        terms.push_back({Monomial(std::move(factors)), coeff_from_json<C>(t.at("coeff"))});
    }
    return Polynomial<C>::from_terms(std::move(terms), nvars);
}

}  // namespace pfaffcone

#endif  // PFAFFCONE_POLYNOMIAL_IO_HPP
