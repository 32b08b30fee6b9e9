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

#ifndef PFAFFCONE_POLYNOMIAL_HPP
#define PFAFFCONE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "monomial.hpp"

namespace pfaffcone {

/**
 * Sparse multivariate polynomial over an exact coefficient ring.
 *
 * Terms are kept in descending graded-lex order with no zero coefficients, so
 * two polynomials are equal iff their term lists are equal. `nvars` is the
 * declared number of variables x1..x_nvars; it bounds partial derivatives and
 * evaluation points but does not take part in equality.
 */
template <Coefficient C>
class Polynomial {
   public:
    using coeff_type = C;

    struct Term {
        Monomial mono;
        C coeff;

        friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
    };

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(const C& c, std::size_t nvars = 0) {
        Polynomial p(nvars);
        if (!pfaffcone::is_zero(c)) p.terms_.push_back({Monomial{}, c});
        return p;
    }

    static Polynomial variable(Var v, std::size_t nvars) {
        if (v == 0 || v > nvars) throw std::invalid_argument("variable index out of range");
        Polynomial p(nvars);
        p.terms_.push_back({Monomial::variable(v), C(1)});
        return p;
    }

    static Polynomial monomial(const Monomial& m, const C& c, std::size_t nvars) {
        Polynomial p(std::max<std::size_t>(nvars, m.max_var()));
        if (!pfaffcone::is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    static Polynomial from_terms(std::vector<Term> terms, std::size_t nvars) {
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(terms.size());
        for (auto& t : terms) {
            nvars = std::max<std::size_t>(nvars, t.mono.max_var());
            auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        return from_map(std::move(acc), nvars);
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Total degree; the zero polynomial reports 0.
    std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

    /// Common degree of all terms, or nullopt if mixed. Zero is homogeneous of every degree (reported as 0).
    std::optional<std::size_t> homogeneous_degree() const noexcept {
        if (terms_.empty()) return 0;
        std::size_t d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return std::nullopt;
        return d;
    }

    const Term& leading() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.front();
    }

    C coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return grlex_greater(t.mono, key); });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return C(0);
    }

    Polynomial with_nvars(std::size_t nvars) const {
        for (const auto& t : terms_)
            if (t.mono.max_var() > nvars) throw std::invalid_argument("polynomial uses a variable beyond nvars");
        Polynomial p = *this;
        p.nvars_ = nvars;
        return p;
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::size_t nv = std::max(a.nvars_, b.nvars_);
        if (a.is_zero() || b.is_zero()) return Polynomial(nv);
        if (a.size() == 1) return b.times_term(a.terms_.front(), nv);
        if (b.size() == 1) return a.times_term(b.terms_.front(), nv);
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                auto [it, fresh] = acc.try_emplace(s.mono * t.mono, s.coeff);
                if (fresh)
                    it->second *= t.coeff;
                else
                    it->second += s.coeff * t.coeff;
            }
        }
        return from_map(std::move(acc), nv);
    }

    friend Polynomial operator*(const C& c, const Polynomial& p) {
        if (pfaffcone::is_zero(c)) return Polynomial(p.nvars_);
        Polynomial r = p;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

   private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;

    static Polynomial from_map(std::unordered_map<Monomial, C, MonomialHash>&& acc, std::size_t nvars) {
        Polynomial p(nvars);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!pfaffcone::is_zero(c)) p.terms_.push_back({m, std::move(c)});
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
        return p;
    }

    // multiplication by a single term preserves the monomial order
    Polynomial times_term(const Term& s, std::size_t nv) const {
        Polynomial r(nv);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
        return r;
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial r(std::max(a.nvars_, b.nvars_));
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && grlex_greater(i->mono, j->mono))) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || grlex_greater(j->mono, i->mono)) {
                r.terms_.push_back({j->mono, subtract ? C(-j->coeff) : j->coeff});
                ++j;
            } else {
                C c = subtract ? C(i->coeff - j->coeff) : C(i->coeff + j->coeff);
                if (!pfaffcone::is_zero(c)) r.terms_.push_back({i->mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

using RationalPolynomial = Polynomial<Rational>;
using GaussianPolynomial = Polynomial<GaussianRational>;

template <Coefficient C>
Polynomial<C> pow(const Polynomial<C>& p, unsigned e) {
    Polynomial<C> r = Polynomial<C>::constant(C(1), p.nvars());
    for (unsigned k = 0; k < e; ++k) r = r * p;
    return r;
}

/// Formal partial derivative with respect to x_i, 1 <= i <= nvars.
template <Coefficient C>
Polynomial<C> partial(const Polynomial<C>& p, Var i) {
    if (i == 0 || i > p.nvars()) throw std::invalid_argument("partial: variable index out of range");
    std::vector<typename Polynomial<C>::Term> out;
    for (const auto& t : p.terms()) {
        Exp e = t.mono.exponent(i);
        if (e == 0) continue;
        out.push_back({t.mono.without_one(i), t.coeff * C(static_cast<long>(e))});
    }
    // distinct monomials stay distinct after lowering one exponent, but order may change
    return Polynomial<C>::from_terms(std::move(out), p.nvars());
}

/// Sum of the pure second partials.
template <Coefficient C>
Polynomial<C> laplacian(const Polynomial<C>& p) {
    std::vector<typename Polynomial<C>::Term> out;
    for (const auto& t : p.terms()) {
        for (const auto& [v, e] : t.mono.factors()) {
            if (e < 2) continue;
            out.push_back({t.mono.without_one(v).without_one(v), t.coeff * C(static_cast<long>(e * (e - 1)))});
        }
    }
    return Polynomial<C>::from_terms(std::move(out), p.nvars());
}

/// Exact evaluation at a rational point of length nvars.
template <Coefficient C>
C evaluate(const Polynomial<C>& p, std::span<const Rational> point) {
    if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: point length does not match nvars");
    C sum(0);
    Rational prod;
    for (const auto& t : p.terms()) {
        prod = 1;
        for (const auto& [v, e] : t.mono.factors())
            for (Exp k = 0; k < e; ++k) prod *= point[v - 1];
        if (sgn(prod) != 0) sum += t.coeff * C(prod);
    }
    return sum;
}

template <Coefficient C>
struct DivisionResult {
    Polynomial<C> quotient;
    Polynomial<C> remainder;
};

/**
 * Multivariate division by a single divisor with graded-lex leading-term
 * reduction: p = quotient * d + remainder, where no term of the remainder is
 * divisible by the leading monomial of d. If p is a multiple of d the
 * remainder is zero and the quotient is the exact cofactor.
 */
template <Coefficient C>
DivisionResult<C> divide_exact(const Polynomial<C>& p, const Polynomial<C>& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::size_t nv = std::max(p.nvars(), d.nvars());
    const auto& lead = d.leading();
    std::map<Monomial, C, GrlexDescending> work;
    for (const auto& t : p.terms()) work.emplace(t.mono, t.coeff);

    std::vector<typename Polynomial<C>::Term> quot, rem;
    while (!work.empty()) {
        auto top = work.begin();
        auto q = lead.mono.quotient_of(top->first);
        if (!q) {
            rem.push_back({top->first, std::move(top->second)});
            work.erase(top);
            continue;
        }
        C factor = top->second / lead.coeff;
        for (const auto& t : d.terms()) {
            Monomial m = t.mono * *q;
            auto it = work.find(m);
            if (it == work.end()) {
                work.emplace(std::move(m), C(-(factor * t.coeff)));
            } else {
                it->second -= factor * t.coeff;
                if (is_zero(it->second)) work.erase(it);
            }
        }
        quot.push_back({std::move(*q), std::move(factor)});
    }
    return {Polynomial<C>::from_terms(std::move(quot), nv), Polynomial<C>::from_terms(std::move(rem), nv)};
}

/// Replaces each mapped variable by a polynomial; unmapped variables are kept.
template <Coefficient C>
Polynomial<C> substitute(const Polynomial<C>& p, const std::map<Var, Polynomial<C>>& images) {
    std::size_t nv = p.nvars();
    for (const auto& [v, img] : images) nv = std::max(nv, img.nvars());
    std::map<std::pair<Var, Exp>, Polynomial<C>> powers;
    auto power = [&](Var v, Exp e) -> const Polynomial<C>& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, pow(images.at(v), e)).first;
        return it->second;
    };

    Polynomial<C> result(nv);
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> kept;
        Polynomial<C> term = Polynomial<C>::constant(C(1), nv);
        for (const auto& [v, e] : t.mono.factors()) {
            if (images.count(v))
                term = term * power(v, e);
            else
                kept.emplace_back(v, e);
        }
        result += Polynomial<C>::monomial(Monomial(std::move(kept)), t.coeff, nv) * term;
    }
    return result;
}

/// Explicit promotion of a real polynomial into the Gaussian ring.
inline GaussianPolynomial to_gaussian(const RationalPolynomial& p) {
    std::vector<GaussianPolynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({t.mono, GaussianRational(t.coeff)});
    return GaussianPolynomial::from_terms(std::move(terms), p.nvars());
}

inline RationalPolynomial real_part(const GaussianPolynomial& p) {
    std::vector<RationalPolynomial::Term> terms;
    for (const auto& t : p.terms()) terms.push_back({t.mono, t.coeff.re});
    return RationalPolynomial::from_terms(std::move(terms), p.nvars());
}

inline RationalPolynomial imag_part(const GaussianPolynomial& p) {
    std::vector<RationalPolynomial::Term> terms;
    for (const auto& t : p.terms()) terms.push_back({t.mono, t.coeff.im});
    return RationalPolynomial::from_terms(std::move(terms), p.nvars());
}

/// Coefficient-wise conjugation; variables are real symbols.
inline GaussianPolynomial conj(const GaussianPolynomial& p) {
    std::vector<GaussianPolynomial::Term> terms;
    for (const auto& t : p.terms()) terms.push_back({t.mono, conj(t.coeff)});
    return GaussianPolynomial::from_terms(std::move(terms), p.nvars());
}

/// Sum of squares of the variables x1..x_n.
inline RationalPolynomial sum_of_squares(std::size_t n) {
    std::vector<RationalPolynomial::Term> terms;
    for (Var v = 1; v <= n; ++v) terms.push_back({Monomial::variable(v, 2), Rational(1)});
    return RationalPolynomial::from_terms(std::move(terms), n);
}

/// Floating-point evaluator, for curvature sampling only.
class CompiledPolynomial {
   public:
    CompiledPolynomial() = default;
    explicit CompiledPolynomial(const RationalPolynomial& p) {
        for (const auto& t : p.terms()) terms_.push_back({t.coeff.get_d(), t.mono.factors()});
    }

    double operator()(std::span<const double> x) const {
        double sum = 0.0;
        for (const auto& t : terms_) {
            double prod = t.coeff;
            for (const auto& [v, e] : t.factors)
                for (Exp k = 0; k < e; ++k) prod *= x[v - 1];
            sum += prod;
        }
        return sum;
    }

    bool empty() const noexcept { return terms_.empty(); }

   private:
    struct Term {
        double coeff;
        std::vector<Monomial::Factor> factors;
    };
    std::vector<Term> terms_;
};

}  // namespace pfaffcone

#endif  // PFAFFCONE_POLYNOMIAL_HPP
