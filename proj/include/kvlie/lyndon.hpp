// Lyndon basis of the free Lie algebra and Lie-membership certificates.
#pragma once

#include "polynomial.hpp"
#include "rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kvlie {

/// w is strictly smaller than each of its proper non-empty suffixes.
inline bool is_lyndon(const Word& w)
{
    if (w.empty()) {
        return false;
    }
    for (std::size_t i = 1; i < w.degree(); ++i) {
        if (!lex_less(w, w.subword(i))) {
            return false;
        }
    }
    return true;
}

/// A Lyndon word with its standard factorization w = left right, where right
/// is the longest proper Lyndon suffix. Letters have no split (split == 0).
class LyndonWord {
public:
    explicit LyndonWord(Word w) : word_(std::move(w))
    {
        if (!is_lyndon(word_)) {
            throw std::invalid_argument("not a Lyndon word");
        }
        for (std::size_t i = 1; i < word_.degree(); ++i) {
            if (is_lyndon(word_.subword(i))) {
                split_ = i;
                break;
            }
        }
    }

    const Word& word() const { return word_; }
    std::size_t split() const { return split_; }
    std::size_t degree() const { return word_.degree(); }

    LyndonWord left() const { return LyndonWord(word_.subword(0, split_)); }
    LyndonWord right() const { return LyndonWord(word_.subword(split_)); }

    friend bool operator==(const LyndonWord& a, const LyndonWord& b) { return a.word_ == b.word_; }

private:
    Word word_;
    std::size_t split_ = 0;
};

/// All Lyndon words of length n over the first k letters, in lexicographic
/// order (Duval's generation).
inline std::vector<LyndonWord> lyndon_words(std::size_t k, std::size_t n)
{
    if (n < 1 || k < 1) {
        throw std::invalid_argument("lyndon_words requires k >= 1 and n >= 1");
    }
    std::vector<LyndonWord> out;
    std::vector<std::size_t> w{0};
    while (!w.empty()) {
        if (w.size() == n) {
            std::vector<Letter> ls;
            for (auto i : w) {
                ls.push_back(letter(i));
            }
            out.emplace_back(Word(std::move(ls)));
        }
        const std::size_t m = w.size();
        while (w.size() < n) {
            w.push_back(w[w.size() - m]);
        }
        while (!w.empty() && w.back() == k - 1) {
            w.pop_back();
        }
        if (!w.empty()) {
            ++w.back();
        }
    }
    return out;
}

inline std::vector<LyndonWord> lyndon_words(const Alphabet& a, std::size_t n) { return lyndon_words(a.size(), n); }

/// Bracketing at the standard factorization; a letter maps to itself.
inline Polynomial standard_bracketing(const LyndonWord& lw, const Alphabet& a = Alphabet::xy())
{
    if (lw.degree() == 1) {
        return Polynomial(a, lw.word());
    }
    return bracket(standard_bracketing(lw.left(), a), standard_bracketing(lw.right(), a));
}

/// (1/n) sum_{d | n} mu(d) k^{n/d}.
inline Integer witt_dimension(std::size_t k, std::size_t n)
{
    if (k < 1 || n < 1) {
        throw std::invalid_argument("witt_dimension requires k >= 1 and n >= 1");
    }
    Integer sum = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n / d));
            sum += moebius(static_cast<long>(d)) * pw;
        }
    }
    return sum / Integer(static_cast<unsigned long>(n));
}

/// Lyndon words of one degree with their standard bracketings.
struct LyndonBasis {
    std::vector<LyndonWord> words;
    std::vector<Polynomial> brackets;
};

/// Per-(alphabet, degree) cache. Construction happens under a lock; entries
/// are immutable afterwards.
inline std::shared_ptr<const LyndonBasis> lyndon_basis(const Alphabet& a, std::size_t n)
{
    static std::mutex m;
    static std::map<std::pair<std::vector<std::string>, std::size_t>, std::shared_ptr<const LyndonBasis>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::pair{a.symbols(), n};
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    auto basis = std::make_shared<LyndonBasis>();
    basis->words = lyndon_words(a.size(), n);
    for (const auto& lw : basis->words) {
        basis->brackets.push_back(standard_bracketing(lw, a));
    }
    cache.emplace(key, basis);
    return basis;
}

/// Coordinates of a homogeneous Lie element in the Lyndon basis.
struct LieCoordinates {
    std::size_t degree = 0;
    std::map<Word, Rational> coords; // keyed by the Lyndon word

    Rational operator[](const Word& w) const
    {
        auto it = coords.find(w);
        return it == coords.end() ? Rational(0) : it->second;
    }
};

/// Outcome of Lie-membership elimination: the coordinates found and the
/// residual p - sum c_l P_l, which is zero exactly when p is a Lie element.
struct LieDecomposition {
    LieCoordinates coordinates;
    Polynomial residual;

    bool is_lie() const { return residual.is_zero(); }
};

class not_lie_element : public std::runtime_error {
public:
    not_lie_element(Polynomial residual)
        : std::runtime_error("not a Lie element"), residual_(std::move(residual))
    {
    }
    const Polynomial& residual() const { return residual_; }

private:
    Polynomial residual_;
};

/// Triangular elimination against standard bracketings: P_l = l + (words
/// lexicographically larger than l), so Lyndon words are processed in
/// increasing order. p must be homogeneous.
inline LieDecomposition decompose_lie(const Polynomial& p)
{
    if (!p.is_homogeneous()) {
        throw std::invalid_argument("decompose_lie requires a homogeneous polynomial");
    }
    LieDecomposition out{LieCoordinates{}, p};
    if (p.is_zero()) {
        return out;
    }
    const auto n = static_cast<std::size_t>(p.degree());
    out.coordinates.degree = n;
    if (n == 0) {
        return out;
    }
    const auto basis = lyndon_basis(p.alphabet(), n);
    for (std::size_t i = 0; i < basis->words.size(); ++i) {
        const Rational c = out.residual.coeff(basis->words[i].word());
        if (c != 0) {
            out.coordinates.coords.emplace(basis->words[i].word(), c);
            out.residual -= basis->brackets[i] * c;
        }
    }
    return out;
}

/// Lyndon coordinates of a homogeneous Lie element; throws not_lie_element
/// carrying the nonzero residual otherwise.
inline LieCoordinates to_lie_coordinates(const Polynomial& p)
{
    auto d = decompose_lie(p);
    if (!d.is_lie()) {
        throw not_lie_element(std::move(d.residual));
    }
    return std::move(d.coordinates);
}

/// sum c_l P_l.
inline Polynomial from_lie_coordinates(const LieCoordinates& lc, const Alphabet& a = Alphabet::xy())
{
    Polynomial r(a);
    for (const auto& [w, c] : lc.coords) {
        r += standard_bracketing(LyndonWord(w), a) * c;
    }
    return r;
}

/// Every homogeneous component is a Lie element.
inline bool is_lie_element(const Polynomial& p)
{
    std::map<std::size_t, Polynomial> parts;
    for (const auto& [w, c] : p) {
        parts.try_emplace(w.degree(), p.alphabet()).first->second.add_term(w, c);
    }
    for (const auto& [d, q] : parts) {
        if (d == 0 || !decompose_lie(q).is_lie()) {
            return false;
        }
    }
    return true;
}

} // namespace kvlie
