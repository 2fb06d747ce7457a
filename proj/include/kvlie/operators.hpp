// The operators E(sz) = exp(s ad z) - 1, Ber(sz) and s ad z acting on graded
// series.
#pragma once

#include "rational.hpp"
#include "series.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kvlie {

enum class OperatorKind { E, Ber, ad };

/// An operator built on s * ad(z), with s = +1 or -1, applied up to degree
/// `truncation`.
struct OperatorSpec {
    Letter letter = X;
    int sign = 1;
    OperatorKind kind = OperatorKind::ad;
    std::size_t truncation = 8;
};

namespace detail {

/// Coefficient of (s ad z)^k in the operator's power series.
inline Rational operator_coefficient(OperatorKind kind, std::size_t k)
{
    switch (kind) {
    case OperatorKind::E:
        return k == 0 ? Rational(0) : inverse_factorial(static_cast<long>(k));
    case OperatorKind::Ber:
        return bernoulli(k) * inverse_factorial(static_cast<long>(k));
    case OperatorKind::ad:
        return k == 1 ? Rational(1) : Rational(0);
    }
    return Rational(0);
}

} // namespace detail

/// sum_k c_k (s ad z)^k s, truncated at min(op.truncation, s.truncation()).
inline GradedSeries apply_operator(const OperatorSpec& op, const GradedSeries& s)
{
    if (op.sign != 1 && op.sign != -1) {
        throw std::invalid_argument("operator sign must be +1 or -1");
    }
    if (!s.alphabet().contains(op.letter)) {
        throw std::invalid_argument("operator letter is not in the alphabet");
    }
    const std::size_t n = std::min(op.truncation, s.truncation());
    std::vector<Rational> coeff(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coeff[k] = detail::operator_coefficient(op.kind, k);
        if (op.sign < 0 && k % 2 == 1) {
            coeff[k] = -coeff[k];
        }
    }
    GradedSeries out(s.alphabet(), n);
    for (std::size_t d = 0; d <= n; ++d) {
        if (s[d].is_zero()) {
            continue;
        }
        Polynomial acc = s[d] * coeff[0];
        Polynomial term = s[d];
        for (std::size_t k = 1; d + k <= n; ++k) {
            term = ad(op.letter, term);
            if (term.is_zero()) {
                break;
            }
            if (coeff[k] != 0) {
                out.add(term * coeff[k]);
            }
        }
        out.add(acc);
    }
    return out;
}

inline GradedSeries apply_E(Letter z, int sign, const GradedSeries& s)
{
    return apply_operator({z, sign, OperatorKind::E, s.truncation()}, s);
}

inline GradedSeries apply_ber(Letter z, int sign, const GradedSeries& s)
{
    return apply_operator({z, sign, OperatorKind::Ber, s.truncation()}, s);
}

inline GradedSeries apply_ad(Letter z, int sign, const GradedSeries& s)
{
    return apply_operator({z, sign, OperatorKind::ad, s.truncation()}, s);
}

} // namespace kvlie
