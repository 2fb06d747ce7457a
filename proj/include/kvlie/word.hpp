// Letters, alphabets and words of the tensor algebra T(V).
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kvlie {

/// Index of a letter in its alphabet.
enum class Letter : std::uint8_t {};

constexpr Letter letter(std::size_t index) { return static_cast<Letter>(index); }
constexpr std::size_t index_of(Letter l) { return static_cast<std::size_t>(l); }

inline constexpr Letter X = letter(0);
inline constexpr Letter Y = letter(1);

class alphabet_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered list of distinct letter symbols. The order induces the
/// lexicographic order on words. Copies share the symbol table.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols)
        : symbols_(std::make_shared<const std::vector<std::string>>(std::move(symbols)))
    {
        const auto& s = *symbols_;
        if (s.empty()) {
            throw std::invalid_argument("alphabet must be non-empty");
        }
        if (s.size() > 255) {
            throw std::invalid_argument("alphabet too large");
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].empty()) {
                throw std::invalid_argument("empty letter symbol");
            }
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (s[i] == s[j]) {
                    throw std::invalid_argument("duplicate letter symbol '" + s[i] + "'");
                }
            }
        }
    }

    /// The two-letter alphabet {x, y}.
    static Alphabet xy()
    {
        static const Alphabet a({"x", "y"});
        return a;
    }

    /// {x1, ..., xk}.
    static Alphabet indexed(std::size_t k)
    {
        std::vector<std::string> s;
        for (std::size_t i = 1; i <= k; ++i) {
            s.push_back("x" + std::to_string(i));
        }
        return Alphabet(std::move(s));
    }

    std::size_t size() const { return symbols_->size(); }
    const std::string& symbol(Letter l) const { return symbols_->at(index_of(l)); }
    const std::vector<std::string>& symbols() const { return *symbols_; }

    bool contains(Letter l) const { return index_of(l) < size(); }

    Letter find(std::string_view sym) const
    {
        for (std::size_t i = 0; i < size(); ++i) {
            if ((*symbols_)[i] == sym) {
                return letter(i);
            }
        }
        throw std::invalid_argument("unknown letter '" + std::string(sym) + "'");
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b)
    {
        return a.symbols_ == b.symbols_ || *a.symbols_ == *b.symbols_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> symbols_;
};

inline void require_same(const Alphabet& a, const Alphabet& b)
{
    if (!(a == b)) {
        throw alphabet_mismatch("operands use different alphabets");
    }
}

/// A finite sequence of letters; the empty word is the unit of T(V).
///
/// Words compare shortlex (degree first, then lexicographically), which is
/// the storage order of polynomial terms. Use lex_less() for the plain
/// lexicographic order needed by Lyndon words.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// l repeated n times.
    static Word power(Letter l, std::size_t n) { return Word(std::vector<Letter>(n, l)); }

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word subword(std::size_t pos, std::size_t len = std::string::npos) const
    {
        const std::size_t stop = len == std::string::npos ? letters_.size() : std::min(letters_.size(), pos + len);
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                         letters_.begin() + static_cast<std::ptrdiff_t>(stop)));
    }

    Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

    Word& operator+=(const Word& o)
    {
        letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
        return *this;
    }
    void push_back(Letter l) { letters_.push_back(l); }

    friend Word operator+(Word a, const Word& b)
    {
        a += b;
        return a;
    }

    friend bool operator==(const Word&, const Word&) = default;

    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                      b.letters_.end());
    }

private:
    std::vector<Letter> letters_;
};

/// Plain lexicographic order (a proper prefix is smaller).
inline bool lex_less(const Word& a, const Word& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string to_string(const Word& w, const Alphabet& a)
{
    std::string s;
    for (Letter l : w) {
        s += a.symbol(l);
    }
    return s;
}

/// Splits a string into letters by longest symbol match.
inline Word parse_word(std::string_view text, const Alphabet& a)
{
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t best_len = 0;
        std::size_t best = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const auto& s = a.symbols()[k];
            if (s.size() > best_len && text.substr(i, s.size()) == s) {
                best_len = s.size();
                best = k;
            }
        }
        if (best_len == 0) {
            throw std::invalid_argument("unknown letter at offset " + std::to_string(i) + " in word '" +
                                        std::string(text) + "'");
        }
        w.push_back(letter(best));
        i += best_len;
    }
    return w;
}

/// All words of the given degree over k letters, in lexicographic order.
inline std::vector<Word> all_words(std::size_t k, std::size_t degree)
{
    std::vector<Word> out;
    std::vector<Letter> cur(degree, letter(0));
    while (true) {
        out.emplace_back(cur);
        std::size_t i = degree;
        while (i > 0) {
            --i;
            if (index_of(cur[i]) + 1 < k) {
                cur[i] = letter(index_of(cur[i]) + 1);
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), letter(0));
                break;
            }
            if (i == 0) {
                return out;
            }
        }
        if (degree == 0) {
            return out;
        }
    }
}

} // namespace kvlie
