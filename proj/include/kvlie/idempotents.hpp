// The Dynkin idempotent gamma, the Eulerian idempotent e, and the kernel of
// gamma.
#pragma once

#include "parallel.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace kvlie {

/// [w1, [w2, [..., [w_{n-1}, w_n]...]]] expanded in words.
inline Polynomial right_nested_bracket(const Word& w, const Alphabet& a)
{
    if (w.empty()) {
        return Polynomial(a);
    }
    Polynomial t(a, Word{w[w.degree() - 1]});
    for (std::size_t i = w.degree() - 1; i-- > 0;) {
        t = ad(w[i], t);
    }
    return t;
}

/// gamma(v1...vn) = (1/n) [v1, [v2, [..., [v_{n-1}, v_n]...]]]; gamma(1) = 0.
inline Polynomial dynkin(const Polynomial& p)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        if (w.empty()) {
            continue;
        }
        r += right_nested_bracket(w, p.alphabet()) * (c / Rational(static_cast<long>(w.degree())));
    }
    return r;
}

namespace detail {

inline const std::vector<Permutation>& descent_class_cached(std::size_t n, std::size_t k)
{
    static std::mutex m;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<Permutation>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find({n, k});
    if (it == cache.end()) {
        it = cache.emplace(std::pair{n, k}, enumerate_descent_class(n, k)).first;
    }
    return it->second;
}

/// sum_{sigma in D_{1..k}} (w_n ... w_1)^sigma.
inline Polynomial reversed_descent_sum(const Word& w, std::size_t k, const Alphabet& a)
{
    Polynomial r(a);
    const Word rev = w.reversed();
    for (const auto& sigma : descent_class_cached(w.degree(), k)) {
        r.add_term(permute_word(rev, sigma), Rational(1));
    }
    return r;
}

} // namespace detail

/// Second route to gamma through descent classes:
/// gamma_n(w) = ((-1)^{n-1}/n) sum_{k=0}^{n-1} (-1)^k sum_{sigma in D_{1..k}} (w_n...w_1)^sigma.
inline Polynomial dynkin_via_descents(const Polynomial& p)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        const std::size_t n = w.degree();
        if (n == 0) {
            continue;
        }
        Polynomial acc(p.alphabet());
        for (std::size_t k = 0; k < n; ++k) {
            auto term = detail::reversed_descent_sum(w, k, p.alphabet());
            acc += (k % 2 == 0) ? term : -term;
        }
        const long sign = (n - 1) % 2 == 0 ? 1 : -1;
        r += acc * (c * make_rational(sign, static_cast<long>(n)));
    }
    return r;
}

/// Coefficient of (.)^sigma in e_n for a permutation with d descents:
/// (-1)^d / (n * C(n-1, d)).
inline Rational eulerian_coefficient(std::size_t n, std::size_t d)
{
    Rational c = make_rational(Integer(d % 2 == 0 ? 1 : -1), Integer(static_cast<long>(n)) * binomial(static_cast<long>(n - 1), static_cast<long>(d)));
    return c;
}

namespace detail {

/// Per-word, per-descent-count tallies of w^sigma over a set of permutations.
using DescentTally = std::unordered_map<std::uint64_t, std::vector<std::int64_t>>;

inline std::uint64_t encode_word(const std::vector<std::uint8_t>& images, const Word& w, std::size_t k)
{
    std::uint64_t key = 0;
    for (auto im : images) {
        key = key * k + index_of(w[im - 1]);
    }
    return key;
}

inline Word decode_word(std::uint64_t key, std::size_t n, std::size_t k)
{
    std::vector<Letter> out(n);
    for (std::size_t i = n; i-- > 0;) {
        out[i] = letter(key % k);
        key /= k;
    }
    return Word(std::move(out));
}

inline void tally_chunk(const Word& w, std::size_t k, std::size_t first, DescentTally& tally)
{
    const std::size_t n = w.degree();
    for_each_permutation_with_first(n, first, [&](const std::vector<std::uint8_t>& im) {
        auto& row = tally[encode_word(im, w, k)];
        if (row.empty()) {
            row.assign(n, 0);
        }
        ++row[count_descents(im)];
    });
}

} // namespace detail

/// Eulerian idempotent through the permutation formula
/// e_n = sum_{sigma in S_n} (-1)^{d(sigma)} / (n C(n-1, d(sigma))) (.)^sigma.
///
/// Permutations are counted per descent number with exact integers, chunked by
/// sigma(1) across `threads` workers, then combined in a fixed order.
inline Polynomial eulerian(const Polynomial& p, unsigned threads = default_thread_count())
{
    const std::size_t k = p.alphabet().size();
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        const std::size_t n = w.degree();
        if (n == 0) {
            continue;
        }
        // base-k encoding must fit in 64 bits
        long double cap = 1;
        for (std::size_t i = 0; i < n; ++i) {
            cap *= static_cast<long double>(k);
        }
        if (cap > 1.8e19L) {
            throw std::length_error("eulerian: word too long for this alphabet");
        }
        std::vector<detail::DescentTally> tallies(n);
        parallel_for(n, threads, [&](std::size_t chunk) { detail::tally_chunk(w, k, chunk + 1, tallies[chunk]); });
        std::map<std::uint64_t, std::vector<std::int64_t>> merged;
        for (auto& t : tallies) {
            for (auto& [key, row] : t) {
                auto& m = merged[key];
                if (m.empty()) {
                    m.assign(n, 0);
                }
                for (std::size_t d = 0; d < n; ++d) {
                    m[d] += row[d];
                }
            }
        }
        std::vector<Rational> coeff(n);
        for (std::size_t d = 0; d < n; ++d) {
            coeff[d] = eulerian_coefficient(n, d);
        }
        for (const auto& [key, row] : merged) {
            Rational total(0);
            for (std::size_t d = 0; d < n; ++d) {
                if (row[d] != 0) {
                    total += coeff[d] * Rational(static_cast<long>(row[d]));
                }
            }
            r.add_term(detail::decode_word(key, n, k), total * c);
        }
    }
    return r;
}

/// J^{*k}(w) with J = Id - u o c, unrolled through the co-shuffle:
/// J^{*k} = mu o (J (x) J^{*(k-1)}) o Delta.
class ConvolutionPowers {
public:
    explicit ConvolutionPowers(Alphabet a) : alphabet_(std::move(a)) {}

    const Polynomial& power(std::size_t k, const Word& w)
    {
        auto key = std::pair{k, w};
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        Polynomial r(alphabet_);
        if (k == 1) {
            if (!w.empty()) {
                r.add_term(w, Rational(1));
            }
        } else if (w.degree() >= k) {
            const auto delta = coshuffle(Polynomial(alphabet_, w));
            for (const auto& [pair, c] : delta) {
                const auto& [left, right] = pair;
                if (left.empty() || right.degree() < k - 1) {
                    continue;
                }
                const Polynomial& tail = power(k - 1, right);
                for (const auto& [v, b] : tail) {
                    r.add_term(left + v, c * b);
                }
            }
        }
        return memo_.emplace(key, std::move(r)).first->second;
    }

private:
    Alphabet alphabet_;
    std::map<std::pair<std::size_t, Word>, Polynomial> memo_;
};

/// e = log*(Id) = J - J^{*2}/2 + J^{*3}/3 - ...; on degree n the sum stops at
/// J^{*n} since J^{*(n+1)} vanishes there.
inline Polynomial eulerian_via_convolution(const Polynomial& p)
{
    ConvolutionPowers powers(p.alphabet());
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        for (std::size_t k = 1; k <= w.degree(); ++k) {
            r += powers.power(k, w) * (c * make_rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
        }
    }
    return r;
}

/// w - gamma(w), an element of Ker gamma.
inline Polynomial kernel_generator(const Word& w, const Alphabet& a = Alphabet::xy())
{
    if (w.empty()) {
        throw std::invalid_argument("kernel_generator requires degree >= 1");
    }
    Polynomial p(a, w);
    return p - dynkin(p);
}

/// Descent-sum form of n (w - gamma(w)):
/// (n-1) w + sum_{k=0}^{n-2} (-1)^{n+k} sum_{sigma in D_{1..k}} (w_n ... w_1)^sigma.
inline Polynomial kernel_generator_explicit(const Word& w, const Alphabet& a = Alphabet::xy())
{
    const std::size_t n = w.degree();
    if (n < 1) {
        throw std::invalid_argument("kernel_generator_explicit requires degree >= 1");
    }
    Polynomial r(a, w, Rational(static_cast<long>(n - 1)));
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        auto term = detail::reversed_descent_sum(w, k, a);
        r += ((n + k) % 2 == 0) ? term : -term;
    }
    return r;
}

/// gamma(a) a for homogeneous a, which lies in Ker gamma. Cross terms
/// gamma(a_i) a_j with i != j are not kernel elements, so a non-homogeneous
/// input is handled component by component: sum_d gamma(a_d) a_d.
inline Polynomial patras_reutenauer_generator(const Polynomial& a)
{
    if (a.is_homogeneous()) {
        return dynkin(a) * a;
    }
    std::map<std::size_t, Polynomial> parts;
    for (const auto& [w, c] : a) {
        parts.try_emplace(w.degree(), a.alphabet()).first->second.add_term(w, c);
    }
    Polynomial r(a.alphabet());
    for (const auto& [d, p] : parts) {
        r += dynkin(p) * p;
    }
    return r;
}

/// Psi_z(p) = gamma((p - gamma(p))_z).
inline Polynomial psi(const Polynomial& p, Letter z) { return dynkin(letter_part(p - dynkin(p), z)); }

} // namespace kvlie
