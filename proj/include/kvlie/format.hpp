// Text, JSON and LaTeX forms of polynomials, the text parser, and defect
// reports.
#pragma once

#include "polynomial.hpp"
#include "series.hpp"

#include <json.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kvlie {

/// Terms in degree-then-lexicographic order: "1/4*y + 1/24*xy - 1/24*yx".
/// Unit coefficients are omitted; the zero polynomial prints as "0".
inline std::string format_text(const Polynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string word = to_string(w, p.alphabet());
        if (w.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += word;
        } else {
            out += mag.get_str() + "*" + word;
        }
    }
    return out;
}

inline std::string format_json(const Polynomial& p)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [w, c] : p) {
        arr.push_back({{"word", to_string(w, p.alphabet())}, {"coeff", c.get_str()}});
    }
    return arr.dump();
}

namespace detail {

/// "x12" -> "x_{12}"; other symbols are left alone.
inline std::string latex_symbol(const std::string& s)
{
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) {
        --i;
    }
    if (i == 0 || i == s.size()) {
        return s;
    }
    return s.substr(0, i) + "_{" + s.substr(i) + "}";
}

} // namespace detail

inline std::string format_latex(const Polynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string coeff;
        if (mag.get_den() == 1) {
            coeff = mag.get_num().get_str();
        } else {
            coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        }
        if (w.empty()) {
            out += coeff;
            continue;
        }
        if (mag != 1) {
            out += coeff + " ";
        }
        for (Letter l : w) {
            out += detail::latex_symbol(p.alphabet().symbol(l));
        }
    }
    return out;
}

enum class Format { text, json, latex };

inline std::string format(const Polynomial& p, Format f)
{
    switch (f) {
    case Format::json:
        return format_json(p);
    case Format::latex:
        return format_latex(p);
    case Format::text:
        break;
    }
    return format_text(p);
}

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses term := [sign] [rational '*'] word, terms joined by + or -.
/// Whitespace is ignored everywhere, including inside words. A rational with
/// no word is a constant term.
inline Polynomial parse_polynomial(std::string_view text, const Alphabet& a = Alphabet::xy())
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    auto read_word = [&]() -> Word {
        Word w;
        skip();
        const std::size_t start = i;
        while (i < text.size()) {
            std::size_t best = 0;
            std::optional<std::size_t> which;
            for (std::size_t k = 0; k < a.size(); ++k) {
                const auto& s = a.symbols()[k];
                if (s.size() > best && text.substr(i, s.size()) == s) {
                    best = s.size();
                    which = k;
                }
            }
            if (!which) {
                break;
            }
            w.push_back(letter(*which));
            i += best;
            skip();
        }
        if (i == start) {
            throw parse_error("expected a word", i);
        }
        return w;
    };

    Polynomial p(a);
    skip();
    if (i == text.size()) {
        throw parse_error("empty polynomial", i);
    }
    bool first = true;
    while (true) {
        skip();
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw parse_error("expected '+' or '-'", i);
        }
        first = false;
        if (i >= text.size()) {
            throw parse_error("expected a term", i);
        }
        Rational coeff(1);
        Word w;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) {
                ++i;
            }
            try {
                coeff = parse_rational(text.substr(start, i - start));
            } catch (const std::exception&) {
                throw parse_error("malformed coefficient", start);
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                w = read_word();
            }
        } else {
            w = read_word();
        }
        p.add_term(w, coeff * sign);
        skip();
        if (i == text.size()) {
            break;
        }
    }
    return p;
}

/// One nonzero term of a defect series.
struct DefectTerm {
    std::size_t degree;
    Word word;
    Rational coeff;
};

inline std::vector<DefectTerm> defect_terms(const GradedSeries& s)
{
    std::vector<DefectTerm> out;
    for (std::size_t d = 0; d <= s.truncation(); ++d) {
        for (const auto& [w, c] : s[d]) {
            out.push_back({d, w, c});
        }
    }
    return out;
}

inline std::optional<DefectTerm> first_defect(const GradedSeries& s)
{
    for (std::size_t d = 0; d <= s.truncation(); ++d) {
        if (!s[d].is_zero()) {
            const auto& [w, c] = *s[d].begin();
            return DefectTerm{d, w, c};
        }
    }
    return std::nullopt;
}

/// "(degree, word, coefficient)".
inline std::string to_string(const DefectTerm& t, const Alphabet& a)
{
    return "(" + std::to_string(t.degree) + ", " + to_string(t.word, a) + ", " + t.coeff.get_str() + ")";
}

} // namespace kvlie
