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

#ifndef PFAFFCONE_MONOMIAL_HPP
#define PFAFFCONE_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfaffcone {

using Var = std::uint32_t;  // 1-based variable index
using Exp = std::uint32_t;

/// Power product x_{v1}^{e1} * ... stored sparsely, sorted by variable index,
/// with no zero exponents.
class Monomial {
   public:
    using Factor = std::pair<Var, Exp>;

    Monomial() = default;

    Monomial(std::initializer_list<Factor> factors) : Monomial(std::vector<Factor>(factors)) {}

    explicit Monomial(std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end());
        for (auto& [v, e] : factors) {
            if (v == 0) throw std::invalid_argument("variable indices start at 1");
            if (e == 0) continue;
            if (!factors_.empty() && factors_.back().first == v)
                factors_.back().second += e;
            else
                factors_.emplace_back(v, e);
            degree_ += e;
        }
    }

    static Monomial variable(Var v, Exp e = 1) { return Monomial({{v, e}}); }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return factors_.empty(); }

    Var max_var() const noexcept { return factors_.empty() ? 0 : factors_.back().first; }

    Exp exponent(Var v) const noexcept {
        for (const auto& [w, e] : factors_) {
            if (w == v) return e;
            if (w > v) break;
        }
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first)
                r.factors_.push_back(*i++);
            else if (j->first < i->first)
                r.factors_.push_back(*j++);
            else {
                r.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        auto j = other.factors_.begin();
        for (const auto& [v, e] : factors_) {
            while (j != other.factors_.end() && j->first < v) ++j;
            if (j == other.factors_.end() || j->first != v || j->second < e) return false;
        }
        return true;
    }

    /// other / *this, or nullopt if *this does not divide other.
    std::optional<Monomial> quotient_of(const Monomial& other) const {
        if (!divides(other)) return std::nullopt;
        Monomial r;
        auto i = factors_.begin();
        for (const auto& [v, e] : other.factors_) {
            while (i != factors_.end() && i->first < v) ++i;
            Exp d = (i != factors_.end() && i->first == v) ? e - i->second : e;
            if (d > 0) r.factors_.emplace_back(v, d);
        }
        r.degree_ = other.degree_ - degree_;
        return r;
    }

    /// Lowers the exponent of v by one; requires exponent(v) > 0.
    Monomial without_one(Var v) const {
        Monomial r = *this;
        for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
            if (it->first == v) {
                if (--it->second == 0) r.factors_.erase(it);
                --r.degree_;
                return r;
            }
        }
        throw std::logic_error("variable not present in monomial");
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.factors_ == b.factors_; }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (const auto& [v, e] : factors_) {
            h ^= (static_cast<std::uint64_t>(v) << 32 | e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += '*';
            s += 'x' + std::to_string(v);
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s;
    }

   private:
    std::vector<Factor> factors_;
    std::size_t degree_ = 0;
};

/// Graded lexicographic comparison with x1 > x2 > ... : higher total degree
/// first, ties broken by the exponent of the lowest-indexed differing variable.
/// Returns true when a is strictly greater than b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
        if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    // equal degree and a common prefix forces equal length
    return false;
}

/// Strict weak order placing the grlex-largest monomial first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace pfaffcone

#endif  // PFAFFCONE_MONOMIAL_HPP
