// Noncommutative polynomials over Q: the tensor bialgebra T(V).
#pragma once

#include "permutation.hpp"
#include "rational.hpp"
#include "word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kvlie {

/// Finitely supported map Word -> Rational over a fixed alphabet.
/// No zero coefficient is ever stored, so equality is term-wise equality.
class Polynomial {
public:
    using Terms = std::map<Word, Rational>;

    explicit Polynomial(Alphabet alphabet = Alphabet::xy()) : alphabet_(std::move(alphabet)) {}

    Polynomial(Alphabet alphabet, const Word& w, Rational c = Rational(1)) : alphabet_(std::move(alphabet))
    {
        add_term(w, c);
    }

    static Polynomial letter(const Alphabet& a, Letter l) { return Polynomial(a, Word{l}); }
    static Polynomial one(const Alphabet& a) { return Polynomial(a, Word{}); }

    const Alphabet& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& w, const Rational& c)
    {
        if (c == 0) {
            return;
        }
        for (Letter l : w) {
            if (!alphabet_.contains(l)) {
                throw std::invalid_argument("letter outside the alphabet");
            }
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Highest word length, or -1 for zero.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree()); }

    bool is_homogeneous() const
    {
        return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        require_same(alphabet_, o.alphabet_);
        for (const auto& [w, c] : o.terms_) {
            add_term(w, c);
        }
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        require_same(alphabet_, o.alphabet_);
        for (const auto& [w, c] : o.terms_) {
            add_term(w, -c);
        }
        return *this;
    }
    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    /// Concatenation product.
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q)
    {
        require_same(p.alphabet_, q.alphabet_);
        Polynomial r(p.alphabet_);
        for (const auto& [u, a] : p.terms_) {
            for (const auto& [v, b] : q.terms_) {
                r.add_term(u + v, a * b);
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }

private:
    Alphabet alphabet_;
    Terms terms_;
};

inline Polynomial concat(const Polynomial& p, const Polynomial& q) { return p * q; }

/// [p, q] = pq - qp.
inline Polynomial bracket(const Polynomial& p, const Polynomial& q) { return p * q - q * p; }

inline Polynomial ad(const Polynomial& z, const Polynomial& p) { return bracket(z, p); }

/// [z, p] for a single letter, without building z as a polynomial.
inline Polynomial ad(Letter z, const Polynomial& p)
{
    Polynomial r(p.alphabet());
    const Word zw{z};
    for (const auto& [w, c] : p) {
        r.add_term(zw + w, c);
        r.add_term(w + zw, -c);
    }
    return r;
}

/// ad(z)^k p; ad_pow(z, 0, p) = p.
template <typename Z>
Polynomial ad_pow(const Z& z, std::size_t k, Polynomial p)
{
    for (std::size_t i = 0; i < k; ++i) {
        p = ad(z, p);
    }
    return p;
}

/// The z-part: b_z in p = sum_z z b_z + (constant). Strips a leading z from
/// every word that starts with z and drops everything else.
inline Polynomial letter_part(const Polynomial& p, Letter z)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        if (!w.empty() && w.front() == z) {
            r.add_term(w.subword(1), c);
        }
    }
    return r;
}

/// Image of one letter under a signed letter substitution.
struct SignedLetter {
    Letter letter;
    int sign = 1;
};

/// Letter-wise substitution z -> (+/-) z', indexed by source letter.
class Substitution {
public:
    explicit Substitution(std::size_t alphabet_size) : images_(alphabet_size) {}

    Substitution& set(Letter from, Letter to, int sign = 1)
    {
        images_.at(index_of(from)) = SignedLetter{to, sign < 0 ? -1 : 1};
        return *this;
    }

    const std::optional<SignedLetter>& image(Letter l) const { return images_.at(index_of(l)); }
    std::size_t size() const { return images_.size(); }

    /// (x, y) -> (-y, -x).
    static Substitution swap_negate()
    {
        Substitution s(2);
        s.set(X, Y, -1).set(Y, X, -1);
        return s;
    }
    /// (x, y) -> (y, x).
    static Substitution swap()
    {
        Substitution s(2);
        s.set(X, Y).set(Y, X);
        return s;
    }
    /// Every letter negated.
    static Substitution negate_all(std::size_t k)
    {
        Substitution s(k);
        for (std::size_t i = 0; i < k; ++i) {
            s.set(kvlie::letter(i), kvlie::letter(i), -1);
        }
        return s;
    }
    /// x_i -> x_{k+1-i}, optionally negated.
    static Substitution reverse_letters(std::size_t k, int sign = 1)
    {
        Substitution s(k);
        for (std::size_t i = 0; i < k; ++i) {
            s.set(kvlie::letter(i), kvlie::letter(k - 1 - i), sign);
        }
        return s;
    }

private:
    std::vector<std::optional<SignedLetter>> images_;
};

/// Multiplicative extension of a signed letter substitution: a word with k
/// negated images picks up (-1)^k.
inline Polynomial substitute(const Polynomial& p, const Substitution& s)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        std::vector<Letter> out;
        out.reserve(w.degree());
        int sign = 1;
        for (Letter l : w) {
            if (index_of(l) >= s.size() || !s.image(l)) {
                throw std::invalid_argument("substitute: no image for letter '" + p.alphabet().symbol(l) + "'");
            }
            out.push_back(s.image(l)->letter);
            sign *= s.image(l)->sign;
        }
        r.add_term(Word(std::move(out)), sign > 0 ? c : Rational(-c));
    }
    return r;
}

/// Same letter indices, different symbol table (sizes must agree).
inline Polynomial relabel(const Polynomial& p, const Alphabet& target)
{
    if (p.alphabet().size() != target.size()) {
        throw alphabet_mismatch("relabel: alphabet sizes differ");
    }
    Polynomial r(target);
    for (const auto& [w, c] : p) {
        r.add_term(w, c);
    }
    return r;
}

/// Linear extension of permute_word to the words of degree |sigma|; other
/// degrees are rejected.
inline Polynomial permute(const Polynomial& p, const Permutation& sigma)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        r.add_term(permute_word(w, sigma), c);
    }
    return r;
}

inline Polynomial homogeneous_component(const Polynomial& p, std::size_t d)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        if (w.degree() == d) {
            r.add_term(w, c);
        }
    }
    return r;
}

/// Drops all words longer than n.
inline Polynomial truncate(const Polynomial& p, std::size_t n)
{
    Polynomial r(p.alphabet());
    for (const auto& [w, c] : p) {
        if (w.degree() <= n) {
            r.add_term(w, c);
        }
    }
    return r;
}

/// Element of T(V) (x) T(V), finitely supported on pairs of words.
class TensorSquareElement {
public:
    using Key = std::pair<Word, Word>;

    explicit TensorSquareElement(Alphabet a) : alphabet_(std::move(a)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Word& a, const Word& b) const
    {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& a, const Word& b, const Rational& c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// p (x) q.
    static TensorSquareElement tensor(const Polynomial& p, const Polynomial& q)
    {
        require_same(p.alphabet(), q.alphabet());
        TensorSquareElement t(p.alphabet());
        for (const auto& [u, a] : p) {
            for (const auto& [v, b] : q) {
                t.add_term(u, v, a * b);
            }
        }
        return t;
    }

    TensorSquareElement& operator+=(const TensorSquareElement& o)
    {
        require_same(alphabet_, o.alphabet_);
        for (const auto& [k, c] : o.terms_) {
            add_term(k.first, k.second, c);
        }
        return *this;
    }
    friend TensorSquareElement operator+(TensorSquareElement a, const TensorSquareElement& b) { return a += b; }
    friend TensorSquareElement operator-(TensorSquareElement a, const TensorSquareElement& b)
    {
        for (const auto& [k, c] : b.terms_) {
            a.add_term(k.first, k.second, -c);
        }
        return a;
    }

    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend TensorSquareElement operator*(const TensorSquareElement& s, const TensorSquareElement& t)
    {
        require_same(s.alphabet_, t.alphabet_);
        TensorSquareElement r(s.alphabet_);
        for (const auto& [k1, a] : s.terms_) {
            for (const auto& [k2, b] : t.terms_) {
                r.add_term(k1.first + k2.first, k1.second + k2.second, a * b);
            }
        }
        return r;
    }

    friend bool operator==(const TensorSquareElement& a, const TensorSquareElement& b)
    {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }

private:
    Alphabet alphabet_;
    std::map<Key, Rational> terms_;
};

/// Visits every (left, right) unshuffle of w: each position goes either to
/// the left or to the right factor, keeping its relative order. 2^|w| pairs.
template <typename F>
void for_each_unshuffle(const Word& w, F&& visit)
{
    const std::size_t n = w.degree();
    if (n >= 8 * sizeof(unsigned long long)) {
        throw std::length_error("word too long to unshuffle");
    }
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<Letter> left;
        std::vector<Letter> right;
        for (std::size_t i = 0; i < n; ++i) {
            ((mask >> i) & 1ULL ? right : left).push_back(w[i]);
        }
        visit(Word(std::move(left)), Word(std::move(right)));
    }
}

/// Co-shuffle: the algebra morphism with Delta(v) = 1 (x) v + v (x) 1 on letters.
inline TensorSquareElement coshuffle(const Polynomial& p)
{
    TensorSquareElement t(p.alphabet());
    for (const auto& [w, c] : p) {
        for_each_unshuffle(w, [&](const Word& a, const Word& b) { t.add_term(a, b, c); });
    }
    return t;
}

/// Counit: the constant term.
inline Rational counit(const Polynomial& p) { return p.coeff(Word{}); }

/// Primitive means Delta(p) = 1 (x) p + p (x) 1.
inline bool is_primitive(const Polynomial& p)
{
    const auto one = Polynomial::one(p.alphabet());
    return coshuffle(p) == TensorSquareElement::tensor(one, p) + TensorSquareElement::tensor(p, one);
}

} // namespace kvlie
