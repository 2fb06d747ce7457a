// The Baker-Campbell-Hausdorff series, through the Eulerian idempotent and
// through log(exp * exp), and its split into x- and y-beginning halves.
#pragma once

#include "idempotents.hpp"
#include "lyndon.hpp"
#include "parallel.hpp"
#include "series.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kvlie {

/// Which way the generators enter the product exp(a1) exp(a2) ... .
/// forward: a_i = x_i (Phi(x,y)); reversed: a_i = x_{k+1-i} (Phi(y,x)).
enum class ArgumentOrder { forward, reversed };

struct BchSeries {
    GradedSeries series;
    ArgumentOrder order = ArgumentOrder::forward;

    std::size_t truncation() const { return series.truncation(); }
    const Polynomial& operator[](std::size_t d) const { return series[d]; }
};

namespace detail {

inline std::vector<Letter> ordered_letters(std::size_t k, ArgumentOrder order)
{
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < k; ++i) {
        ls.push_back(letter(order == ArgumentOrder::forward ? i : k - 1 - i));
    }
    return ls;
}

/// Calls f(exponents) for every composition of m into `parts` non-negative parts.
inline void for_each_composition(std::size_t m, std::size_t parts, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> c(parts, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (i + 1 == parts) {
            c[i] = left;
            f(c);
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            c[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (parts > 0) {
        rec(0, m);
    }
}

inline Word block_word(const std::vector<Letter>& letters, const std::vector<std::size_t>& exps)
{
    Word w;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (std::size_t j = 0; j < exps[i]; ++j) {
            w.push_back(letters[i]);
        }
    }
    return w;
}

inline Rational inverse_factorial_product(const std::vector<std::size_t>& exps)
{
    Integer den = 1;
    for (auto e : exps) {
        den *= factorial(static_cast<long>(e));
    }
    return make_rational(Integer(1), den);
}

inline void certify_lie(const GradedSeries& s, const char* what)
{
    for (std::size_t d = 1; d <= s.truncation(); ++d) {
        if (!decompose_lie(s[d]).is_lie()) {
            throw std::logic_error(std::string(what) + ": component " + std::to_string(d) + " is not a Lie element");
        }
    }
}

} // namespace detail

/// Phi_m(a1..ak) = sum over compositions i1+..+ik = m of
/// e_m(a1^i1 ... ak^ik) / (i1! ... ik!).
inline BchSeries multilinear_bch(std::size_t k, std::size_t n, ArgumentOrder order = ArgumentOrder::forward,
                                 unsigned threads = default_thread_count())
{
    if (k < 2 || n < 1) {
        throw std::invalid_argument("multilinear_bch requires k >= 2 and N >= 1");
    }
    const Alphabet a = k == 2 ? Alphabet::xy() : Alphabet::indexed(k);
    const auto letters = detail::ordered_letters(k, order);
    GradedSeries s(a, n);
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial comp(a);
        detail::for_each_composition(m, k, [&](const std::vector<std::size_t>& exps) {
            const Word w = detail::block_word(letters, exps);
            const auto e = eulerian(Polynomial(a, w), threads);
            std::size_t used = 0;
            for (auto x : exps) {
                used += x != 0;
            }
            if (used == 1 && m >= 2 && !e.is_zero()) {
                throw std::logic_error("e does not vanish on a pure power");
            }
            comp += e * detail::inverse_factorial_product(exps);
        });
        s.set(m, std::move(comp));
    }
    detail::certify_lie(s, "multilinear_bch");
    return {std::move(s), order};
}

/// Phi(x,y) through the Eulerian idempotent.
inline BchSeries bch_eulerian(std::size_t n, unsigned threads = default_thread_count())
{
    return multilinear_bch(2, n, ArgumentOrder::forward, threads);
}

/// log(exp(a1) exp(a2) ... exp(ak)) by direct expansion.
inline BchSeries multilinear_bch_oracle(std::size_t k, std::size_t n, ArgumentOrder order = ArgumentOrder::forward)
{
    if (k < 2 || n < 1) {
        throw std::invalid_argument("multilinear_bch_oracle requires k >= 2 and N >= 1");
    }
    const Alphabet a = k == 2 ? Alphabet::xy() : Alphabet::indexed(k);
    GradedSeries prod(a, n);
    prod.set(0, Polynomial::one(a));
    for (Letter l : detail::ordered_letters(k, order)) {
        prod = prod * series_exp(GradedSeries::from_polynomial(Polynomial::letter(a, l), n));
    }
    return {series_log(prod), order};
}

inline BchSeries bch_oracle(std::size_t n) { return multilinear_bch_oracle(2, n); }

/// Phi(y,x) from Phi(x,y) by the letter swap (and back).
inline BchSeries swap_arguments(const BchSeries& phi)
{
    if (phi.series.alphabet().size() != 2) {
        throw std::invalid_argument("swap_arguments requires two letters");
    }
    return {substitute(phi.series, Substitution::swap()),
            phi.order == ArgumentOrder::forward ? ArgumentOrder::reversed : ArgumentOrder::forward};
}

struct PhiSplit {
    GradedSeries plus;  // gamma of the x-beginning monomials
    GradedSeries minus; // gamma of the y-beginning monomials
};

/// Phi+_n = gamma(x (Phi_n)_x), Phi-_n = gamma(y (Phi_n)_y). Throws
/// not_lie_element if some component of the input is not a Lie element.
inline PhiSplit phi_split(const GradedSeries& phi)
{
    const Alphabet& a = phi.alphabet();
    if (a.size() != 2) {
        throw std::invalid_argument("phi_split requires two letters");
    }
    PhiSplit out{GradedSeries(a, phi.truncation()), GradedSeries(a, phi.truncation())};
    for (std::size_t d = 1; d <= phi.truncation(); ++d) {
        auto dec = decompose_lie(phi[d]);
        if (!dec.is_lie()) {
            throw not_lie_element(std::move(dec.residual));
        }
        out.plus.set(d, dynkin(Polynomial::letter(a, X) * letter_part(phi[d], X)));
        out.minus.set(d, dynkin(Polynomial::letter(a, Y) * letter_part(phi[d], Y)));
    }
    return out;
}

inline PhiSplit phi_split(const BchSeries& phi) { return phi_split(phi.series); }

} // namespace kvlie
