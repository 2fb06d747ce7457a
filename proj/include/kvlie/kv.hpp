// Solutions of the first Kashiwara-Vergne equation
//   x + y - log(e^y e^x) = (1 - e^{-ad x}) F + (e^{ad y} - 1) G
// and of its multilinear version.
#pragma once

#include "bch.hpp"
#include "idempotents.hpp"
#include "linalg.hpp"
#include "lyndon.hpp"
#include "operators.hpp"
#include "series.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kvlie {

struct KvSolutionPair {
    GradedSeries F;
    GradedSeries G;

    std::size_t truncation() const { return std::min(F.truncation(), G.truncation()); }
};

/// a(x,y), degree m component:
///   m/(m+1) sum_{i+j=m} 1/((i+1)! j!) gamma(e_{m+1}(x^{i+1} y^j)_x).
inline GradedSeries a_series(std::size_t n, unsigned threads = default_thread_count())
{
    if (n < 1) {
        throw std::invalid_argument("a_series requires N >= 1");
    }
    const Alphabet a = Alphabet::xy();
    GradedSeries s(a, n);
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial acc(a);
        for (std::size_t i = 0; i <= m; ++i) {
            const std::size_t j = m - i;
            Word w = Word::power(X, i + 1) + Word::power(Y, j);
            const Rational c = make_rational(Integer(1), factorial(static_cast<long>(i + 1)) * factorial(static_cast<long>(j)));
            acc += dynkin(letter_part(eulerian(Polynomial(a, w), threads), X)) * c;
        }
        s.set(m, acc * make_rational(static_cast<long>(m), static_cast<long>(m + 1)));
    }
    return s;
}

/// F0(x,y) = -Ber(-x) a(-x,-y).
inline GradedSeries f0(std::size_t n, unsigned threads = default_thread_count())
{
    const auto a_neg = substitute(a_series(n, threads), Substitution::negate_all(2));
    return -apply_ber(X, -1, a_neg);
}

/// G(x,y) = F(-y,-x).
inline GradedSeries swap_negate(const GradedSeries& s) { return substitute(s, Substitution::swap_negate()); }

inline GradedSeries g0(std::size_t n, unsigned threads = default_thread_count()) { return swap_negate(f0(n, threads)); }

inline KvSolutionPair f0_pair(std::size_t n, unsigned threads = default_thread_count())
{
    auto f = f0(n, threads);
    auto g = swap_negate(f);
    return {std::move(f), std::move(g)};
}

/// Phi(y,x) up to degree n, evaluated from Phi(x,y) by substitution.
inline GradedSeries phi_yx(std::size_t n) { return swap_arguments(bch_oracle(n)).series; }

/// Phi-(y,x): the y-beginning half of Phi(x,y) with x and y exchanged.
inline GradedSeries phi_minus_yx(std::size_t n)
{
    return substitute(phi_split(bch_oracle(n)).minus, Substitution::swap());
}

/// Phi-(y,x) - E(-x) F in degrees 2..n; the split starts at degree 2.
inline GradedSeries verify_split(const GradedSeries& F, std::size_t n)
{
    auto minus = phi_minus_yx(n);
    minus.set(1, Polynomial(minus.alphabet()));
    return minus - apply_E(X, -1, truncate(F, n));
}

/// sum_{n>=2} Phi_n(y,x) - E(-x) F + E(y) G, truncated at n.
inline GradedSeries verify_kv1(const KvSolutionPair& pair, std::size_t n)
{
    auto phi = phi_yx(n);
    phi.set(1, Polynomial(phi.alphabet()));
    return phi - apply_E(X, -1, truncate(pair.F, n)) + apply_E(Y, 1, truncate(pair.G, n));
}

inline GradedSeries verify_kv1(const KvSolutionPair& pair) { return verify_kv1(pair, pair.truncation()); }

/// E(-x) F - E(y) G; zero for solutions of the homogeneous equation.
inline GradedSeries verify_homogeneous(const KvSolutionPair& pair)
{
    const std::size_t n = pair.truncation();
    return apply_E(X, -1, truncate(pair.F, n)) - apply_E(Y, 1, truncate(pair.G, n));
}

/// F1 = (F + G(-y,-x))/2 + lambda x, G1 = (G + F(-y,-x))/2 - lambda y.
inline KvSolutionPair symmetrize(const KvSolutionPair& pair, const Rational& lambda)
{
    if (!verify_kv1(pair).is_zero()) {
        throw precondition_error("symmetrize: input is not a solution");
    }
    const Alphabet& a = pair.F.alphabet();
    const std::size_t n = pair.truncation();
    const Rational half = make_rational(1, 2);
    auto F = (truncate(pair.F, n) + swap_negate(truncate(pair.G, n))) * half;
    auto G = (truncate(pair.G, n) + swap_negate(truncate(pair.F, n))) * half;
    F.add(Polynomial::letter(a, X) * lambda);
    G.add(Polynomial::letter(a, Y) * -lambda);
    return {std::move(F), std::move(G)};
}

/// F = Ber(-x) gamma(p_x) + l1 x, G = Ber(y) gamma(p_y) + l2 y for p in Ker gamma.
inline KvSolutionPair homogeneous_solution(const Polynomial& p, const Rational& lambda1, const Rational& lambda2, std::size_t n)
{
    if (!dynkin(p).is_zero()) {
        throw precondition_error("homogeneous_solution: p is not in the kernel of gamma");
    }
    const Alphabet& a = p.alphabet();
    auto F = apply_ber(X, -1, GradedSeries::from_polynomial(dynkin(letter_part(p, X)), n));
    auto G = apply_ber(Y, 1, GradedSeries::from_polynomial(dynkin(letter_part(p, Y)), n));
    F.add(Polynomial::letter(a, X) * lambda1);
    G.add(Polynomial::letter(a, Y) * lambda2);
    return {std::move(F), std::move(G)};
}

/// F = F0 + Ber(-x) Psi_x(p) + l1 x, G = G0 + Ber(y) Psi_y(p) + l2 y.
inline KvSolutionPair general_solution(const Polynomial& p, const Rational& lambda1, const Rational& lambda2, std::size_t n,
                                       unsigned threads = default_thread_count())
{
    auto base = f0_pair(n, threads);
    const Alphabet& a = base.F.alphabet();
    require_same(a, p.alphabet());
    base.F += apply_ber(X, -1, GradedSeries::from_polynomial(psi(p, X), n));
    base.G += apply_ber(Y, 1, GradedSeries::from_polynomial(psi(p, Y), n));
    base.F.add(Polynomial::letter(a, X) * lambda1);
    base.G.add(Polynomial::letter(a, Y) * lambda2);
    return base;
}

/// A(p) = gamma(p) p - gamma(p') p' with p' = p(-y,-x).
inline Polynomial antisymmetric_kernel_element(const Polynomial& p)
{
    if (p.alphabet().size() != 2) {
        throw std::invalid_argument("antisymmetric_kernel_element requires two letters");
    }
    const auto q = substitute(p, Substitution::swap_negate());
    return patras_reutenauer_generator(p) - patras_reutenauer_generator(q);
}

/// Solves E(s z) F = target degree by degree in Lyndon coordinates, with the
/// coefficient of the letter z in degree 1 set to zero (z spans the kernel).
/// target must vanish in degrees 0 and 1; the result has components 1..N-1.
/// Returns nothing if some degree is inconsistent.
inline std::optional<GradedSeries> e_preimage(const GradedSeries& target, Letter z, int sign)
{
    const Alphabet& a = target.alphabet();
    const std::size_t n = target.truncation();
    if (n < 2 || !target[0].is_zero() || !target[1].is_zero()) {
        throw std::invalid_argument("e_preimage: target must start in degree 2");
    }
    GradedSeries F(a, n - 1);
    for (std::size_t d = 1; d + 1 <= n; ++d) {
        // degree d+1 of E(sz)F: s ad(z) F_d + sum_{k>=2} s^k/k! ad(z)^k F_{d+1-k}
        Polynomial rhs = target[d + 1];
        for (std::size_t k = 2; k <= d; ++k) {
            Rational c = inverse_factorial(static_cast<long>(k));
            if (sign < 0 && k % 2 == 1) {
                c = -c;
            }
            rhs -= ad_pow(z, k, F[d + 1 - k]) * c;
        }
        const auto basis = lyndon_basis(a, d);
        std::vector<Polynomial> cols;
        std::vector<std::size_t> which;
        for (std::size_t i = 0; i < basis->words.size(); ++i) {
            if (basis->words[i].word() == Word{z}) {
                continue;
            }
            cols.push_back(ad(z, basis->brackets[i]) * Rational(sign));
            which.push_back(i);
        }
        WordIndex index;
        for (const auto& [w, c] : rhs) {
            index.index(w);
        }
        const Matrix m = columns_matrix(cols, index);
        std::vector<Rational> b(m.rows());
        for (const auto& [w, c] : rhs) {
            b[*index.find(w)] = c;
        }
        const auto sol = solve(m, b);
        if (!sol) {
            return std::nullopt;
        }
        if (rank(m) != cols.size()) {
            throw std::logic_error("e_preimage: E(z) is not injective on Lie elements of degree " + std::to_string(d));
        }
        Polynomial comp(a);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            comp += basis->brackets[which[c]] * (*sol)[c];
        }
        F.set(d, std::move(comp));
    }
    return F;
}

/// Independent route to the split solution: solves E(-x) F = Phi-(y,x) as a
/// linear system, with no x term in degree 1. Returns the components 1..n.
inline std::vector<Polynomial> solve_split_linear_series(std::size_t n)
{
    if (n < 1) {
        throw std::invalid_argument("solve_split_linear requires n >= 1");
    }
    auto target = phi_minus_yx(n + 1);
    target.set(1, Polynomial(target.alphabet()));
    const auto F = e_preimage(target, X, -1);
    if (!F) {
        throw std::runtime_error("solve_split_linear: inconsistent system");
    }
    std::vector<Polynomial> out;
    for (std::size_t d = 1; d <= n; ++d) {
        out.push_back((*F)[d]);
    }
    return out;
}

inline Polynomial solve_split_linear(std::size_t n) { return solve_split_linear_series(n).back(); }

// ---- multilinear version ------------------------------------------------

/// s_i = (-1)^i, the sign in front of ad x_i in the i-th operator.
inline int multilinear_sign(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

inline Alphabet multilinear_alphabet(std::size_t k) { return k == 2 ? Alphabet::xy() : Alphabet::indexed(k); }

/// a_i, degree m component: m/(m+1) times the sum over exponent vectors
/// (c_k, ..., c_1) of m, with c_i raised by one, of
///   gamma(e_{m+1}(x_k^{c_k} ... x_1^{c_1})_{x_i}) / prod c_j!.
inline GradedSeries multilinear_a(std::size_t i, std::size_t k, std::size_t n, unsigned threads = default_thread_count())
{
    if (k < 2 || i < 1 || i > k) {
        throw std::out_of_range("multilinear_a: index out of range");
    }
    const Alphabet a = multilinear_alphabet(k);
    const auto letters = detail::ordered_letters(k, ArgumentOrder::reversed);
    const std::size_t slot = k - i; // position of x_i in x_k ... x_1
    const Letter xi = letter(i - 1);
    GradedSeries s(a, n);
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial acc(a);
        detail::for_each_composition(m, k, [&](const std::vector<std::size_t>& c) {
            auto exps = c;
            ++exps[slot];
            const Word w = detail::block_word(letters, exps);
            acc += dynkin(letter_part(eulerian(Polynomial(a, w), threads), xi)) * detail::inverse_factorial_product(exps);
        });
        s.set(m, acc * make_rational(static_cast<long>(m), static_cast<long>(m + 1)));
    }
    return s;
}

/// F_{i,0} = s_i Ber(s_i x_i) a_i.
inline GradedSeries multilinear_f0(std::size_t i, std::size_t k, std::size_t n, unsigned threads = default_thread_count())
{
    const int s = multilinear_sign(i);
    auto r = apply_ber(letter(i - 1), s, multilinear_a(i, k, n, threads));
    return s > 0 ? r : -r;
}

inline std::vector<GradedSeries> multilinear_f0_tuple(std::size_t k, std::size_t n, unsigned threads = default_thread_count())
{
    std::vector<GradedSeries> out;
    for (std::size_t i = 1; i <= k; ++i) {
        out.push_back(multilinear_f0(i, k, n, threads));
    }
    return out;
}

inline std::vector<int> multilinear_signs(std::size_t k)
{
    std::vector<int> s;
    for (std::size_t i = 1; i <= k; ++i) {
        s.push_back(multilinear_sign(i));
    }
    return s;
}

/// sum_{m>=2} Phi_m(x_k, ..., x_1) - sum_i E(s_i x_i) F_i, truncated at n.
inline GradedSeries verify_multilinear(std::size_t k, const std::vector<GradedSeries>& F, std::size_t n,
                                       const std::vector<int>& signs)
{
    if (F.size() != k || signs.size() != k) {
        throw std::invalid_argument("verify_multilinear: expected one series and one sign per letter");
    }
    auto phi = multilinear_bch_oracle(k, n, ArgumentOrder::reversed).series;
    phi.set(1, Polynomial(phi.alphabet()));
    for (std::size_t i = 0; i < k; ++i) {
        phi -= apply_E(letter(i), signs[i], truncate(F[i], n));
    }
    return phi;
}

inline GradedSeries verify_multilinear(std::size_t k, const std::vector<GradedSeries>& F, std::size_t n)
{
    return verify_multilinear(k, F, n, multilinear_signs(k));
}

/// Independent check: solves sum_i E(s_i x_i) F_i = sum_{m>=2} Phi_m(x_k..x_1)
/// through degree n as one linear system whose unknowns are the Lyndon
/// coordinates of every F_i in degrees 1..n-1. Returns a solution if one exists.
inline std::optional<std::vector<GradedSeries>> multilinear_linear_solve(std::size_t k, std::size_t n, const std::vector<int>& signs)
{
    if (signs.size() != k || n < 2) {
        throw std::invalid_argument("multilinear_linear_solve: bad arguments");
    }
    const Alphabet a = multilinear_alphabet(k);
    auto phi = multilinear_bch_oracle(k, n, ArgumentOrder::reversed).series;
    phi.set(1, Polynomial(a));
    const Polynomial rhs = phi.to_polynomial();

    struct Unknown {
        std::size_t i;
        std::size_t degree;
        Polynomial bracket;
    };
    std::vector<Unknown> unknowns;
    std::vector<Polynomial> cols;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t d = 1; d < n; ++d) {
            const auto basis = lyndon_basis(a, d);
            for (const auto& b : basis->brackets) {
                unknowns.push_back({i, d, b});
                cols.push_back(apply_E(letter(i), signs[i], GradedSeries::from_polynomial(b, n)).to_polynomial());
            }
        }
    }
    WordIndex index;
    for (const auto& [w, c] : rhs) {
        index.index(w);
    }
    const Matrix m = columns_matrix(cols, index);
    std::vector<Rational> b(m.rows());
    for (const auto& [w, c] : rhs) {
        b[*index.find(w)] = c;
    }
    const auto sol = solve(m, b);
    if (!sol) {
        return std::nullopt;
    }
    std::vector<GradedSeries> out(k, GradedSeries(a, n));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if ((*sol)[u] != 0) {
            out[unknowns[u].i].add(unknowns[u].bracket * (*sol)[u]);
        }
    }
    return out;
}

} // namespace kvlie
