// Graded formal series truncated at a working degree.
#pragma once

#include "polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kvlie {

class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous components 0..N of a formal series. Component d only holds
/// words of length d; nothing above N is ever represented.
class GradedSeries {
public:
    GradedSeries(Alphabet alphabet, std::size_t truncation)
        : alphabet_(std::move(alphabet)), components_(truncation + 1, Polynomial(alphabet_))
    {
    }

    /// Splits p into components and drops everything above N.
    static GradedSeries from_polynomial(const Polynomial& p, std::size_t truncation)
    {
        GradedSeries s(p.alphabet(), truncation);
        for (const auto& [w, c] : p) {
            if (w.degree() <= truncation) {
                s.components_[w.degree()].add_term(w, c);
            }
        }
        return s;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t truncation() const { return components_.size() - 1; }

    const Polynomial& operator[](std::size_t d) const { return components_.at(d); }

    /// Replaces component d; p must be homogeneous of degree d (or zero).
    void set(std::size_t d, Polynomial p)
    {
        require_same(alphabet_, p.alphabet());
        if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != static_cast<long>(d))) {
            throw std::invalid_argument("component " + std::to_string(d) + " must be homogeneous of that degree");
        }
        components_.at(d) = std::move(p);
    }

    /// Adds a polynomial of any shape, dropping words above N.
    void add(const Polynomial& p)
    {
        require_same(alphabet_, p.alphabet());
        for (const auto& [w, c] : p) {
            if (w.degree() <= truncation()) {
                components_[w.degree()].add_term(w, c);
            }
        }
    }

    Polynomial to_polynomial() const
    {
        Polynomial r(alphabet_);
        for (const auto& c : components_) {
            r += c;
        }
        return r;
    }

    bool is_zero() const
    {
        for (const auto& c : components_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    /// Lowest degree with a nonzero component, if any.
    std::optional<std::size_t> lowest_nonzero() const
    {
        for (std::size_t d = 0; d < components_.size(); ++d) {
            if (!components_[d].is_zero()) {
                return d;
            }
        }
        return std::nullopt;
    }

    GradedSeries& operator+=(const GradedSeries& o)
    {
        require_same(alphabet_, o.alphabet_);
        const std::size_t n = std::min(truncation(), o.truncation());
        components_.resize(n + 1, Polynomial(alphabet_));
        for (std::size_t d = 0; d <= n; ++d) {
            components_[d] += o.components_[d];
        }
        return *this;
    }
    GradedSeries& operator-=(const GradedSeries& o)
    {
        require_same(alphabet_, o.alphabet_);
        const std::size_t n = std::min(truncation(), o.truncation());
        components_.resize(n + 1, Polynomial(alphabet_));
        for (std::size_t d = 0; d <= n; ++d) {
            components_[d] -= o.components_[d];
        }
        return *this;
    }
    GradedSeries& operator*=(const Rational& s)
    {
        for (auto& c : components_) {
            c *= s;
        }
        return *this;
    }

    /// Sums and differences live at the smaller of the two truncations.
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator-(GradedSeries a) { return a *= Rational(-1); }
    friend GradedSeries operator*(GradedSeries a, const Rational& s) { return a *= s; }
    friend GradedSeries operator*(const Rational& s, GradedSeries a) { return a *= s; }

    /// Truncated concatenation product.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
    {
        require_same(a.alphabet_, b.alphabet_);
        const std::size_t n = std::min(a.truncation(), b.truncation());
        GradedSeries r(a.alphabet_, n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.components_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!b.components_[j].is_zero()) {
                    r.components_[i + j] += a.components_[i] * b.components_[j];
                }
            }
        }
        return r;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b)
    {
        return a.alphabet_ == b.alphabet_ && a.components_ == b.components_;
    }

private:
    Alphabet alphabet_;
    std::vector<Polynomial> components_;
};

inline GradedSeries truncate(const GradedSeries& s, std::size_t n)
{
    GradedSeries r(s.alphabet(), n);
    for (std::size_t d = 0; d <= std::min(n, s.truncation()); ++d) {
        r.set(d, s[d]);
    }
    return r;
}

inline GradedSeries substitute(const GradedSeries& s, const Substitution& sub)
{
    GradedSeries r(s.alphabet(), s.truncation());
    for (std::size_t d = 0; d <= s.truncation(); ++d) {
        r.set(d, substitute(s[d], sub));
    }
    return r;
}

/// exp(s) = sum s^k / k!; requires a zero constant term.
inline GradedSeries series_exp(const GradedSeries& s)
{
    if (!s[0].is_zero()) {
        throw precondition_error("series_exp requires a zero constant term");
    }
    const std::size_t n = s.truncation();
    GradedSeries result(s.alphabet(), n);
    result.set(0, Polynomial::one(s.alphabet()));
    GradedSeries power = result;
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * s;
        result += power * inverse_factorial(static_cast<long>(k));
    }
    return result;
}

/// log(s) = sum_{k>=1} (-1)^{k+1} (s-1)^k / k; requires constant term 1.
inline GradedSeries series_log(const GradedSeries& s)
{
    if (s[0] != Polynomial::one(s.alphabet())) {
        throw precondition_error("series_log requires constant term 1");
    }
    const std::size_t n = s.truncation();
    GradedSeries u = s;
    u.set(0, Polynomial(s.alphabet()));
    GradedSeries result(s.alphabet(), n);
    GradedSeries power = u;
    for (std::size_t k = 1; k <= n; ++k) {
        result += power * make_rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        power = power * u;
    }
    return result;
}

} // namespace kvlie
