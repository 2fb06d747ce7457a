// Exact scalars: rationals, integer helpers and Bernoulli numbers.
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kvlie {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "a/b" with optional sign, "a" when b = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "[+-]digits[/digits]". Throws std::invalid_argument on malformed
/// input or a zero denominator.
inline Rational parse_rational(std::string_view text)
{
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
            ++i;
        }
        return i > start;
    };
    std::string num;
    std::string den = "1";
    if (!digits(num)) {
        throw std::invalid_argument("expected digits in rational '" + std::string(text) + "'");
    }
    skip_ws();
    if (i < text.size() && text[i] == '/') {
        ++i;
        den.clear();
        if (!digits(den)) {
            throw std::invalid_argument("expected denominator in rational '" + std::string(text) + "'");
        }
    }
    skip_ws();
    if (i != text.size()) {
        throw std::invalid_argument("trailing characters in rational '" + std::string(text) + "'");
    }
    Integer n(num);
    Integer d(den);
    if (negative) {
        n = -n;
    }
    return make_rational(n, d);
}

inline Integer factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative number");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("binomial(n, k) requires 0 <= k <= n");
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Möbius function; n >= 1.
inline int moebius(long n)
{
    if (n < 1) {
        throw std::domain_error("moebius(n) requires n >= 1");
    }
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    if (n > 1) {
        mu = -mu;
    }
    return mu;
}

/// Bernoulli numbers for t/(e^t - 1) = sum B_k t^k / k!, so B_1 = -1/2.
/// Values come from sum_{j=0}^{m} C(m+1, j) B_j = 0 and are memoized; the
/// cache grows under a mutex and readers get copies.
class BernoulliCache {
public:
    Rational get(std::size_t k)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        extend(k);
        return values_[k];
    }

    /// Fills the cache through index k so later lookups never grow it.
    void reserve(std::size_t k)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        extend(k);
    }

private:
    void extend(std::size_t k)
    {
        if (values_.empty()) {
            values_.emplace_back(1);
        }
        while (values_.size() <= k) {
            const std::size_t m = values_.size();
            if (m >= 3 && m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            Rational acc(0);
            for (std::size_t j = 0; j < m; ++j) {
                acc += Rational(binomial(static_cast<long>(m + 1), static_cast<long>(j))) * values_[j];
            }
            Rational b = -acc / Rational(static_cast<long>(m + 1));
            b.canonicalize();
            values_.push_back(b);
        }
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

inline BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

inline Rational bernoulli(std::size_t k) { return bernoulli_cache().get(k); }

/// 1/n! as a rational.
inline Rational inverse_factorial(long n) { return make_rational(Integer(1), factorial(n)); }

} // namespace kvlie
