// Symmetric groups and descent statistics.
#pragma once

#include "word.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kvlie {

/// A bijection of {1..n}, stored as its images (sigma(1), ..., sigma(n)),
/// with the descent set cached.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size() + 1, false);
        for (auto v : images_) {
            if (v < 1 || v > images_.size() || seen[v]) {
                throw std::invalid_argument("images do not form a permutation");
            }
            seen[v] = true;
        }
        cache_descents();
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<std::uint8_t> im(n);
        std::iota(im.begin(), im.end(), std::uint8_t{1});
        return Permutation(std::move(im));
    }

    /// omega = (n, n-1, ..., 1).
    static Permutation reversal(std::size_t n)
    {
        std::vector<std::uint8_t> im(n);
        for (std::size_t i = 0; i < n; ++i) {
            im[i] = static_cast<std::uint8_t>(n - i);
        }
        return Permutation(std::move(im));
    }

    std::size_t size() const { return images_.size(); }

    /// sigma(i), 1-based.
    std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }

    const std::vector<std::uint8_t>& images() const { return images_; }

    /// {i : sigma(i) > sigma(i+1)}, 1-based positions in increasing order.
    const std::vector<std::size_t>& descent_set() const { return descents_; }
    std::size_t descent_count() const { return descents_.size(); }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    void cache_descents()
    {
        descents_.clear();
        for (std::size_t i = 0; i + 1 < images_.size(); ++i) {
            if (images_[i] > images_[i + 1]) {
                descents_.push_back(i + 1);
            }
        }
    }

    std::vector<std::uint8_t> images_;
    std::vector<std::size_t> descents_;
};

/// (sigma o tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau)
{
    if (sigma.size() != tau.size()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    std::vector<std::uint8_t> im(sigma.size());
    for (std::size_t i = 0; i < im.size(); ++i) {
        im[i] = static_cast<std::uint8_t>(sigma(tau.images()[i]));
    }
    return Permutation(std::move(im));
}

inline Permutation inverse(const Permutation& sigma)
{
    std::vector<std::uint8_t> im(sigma.size());
    for (std::size_t i = 0; i < im.size(); ++i) {
        im[sigma.images()[i] - 1] = static_cast<std::uint8_t>(i + 1);
    }
    return Permutation(std::move(im));
}

inline Permutation reversal(std::size_t n) { return Permutation::reversal(n); }

/// "(2,1,3)".
inline std::string to_string(const Permutation& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(p.images()[i]);
    }
    return s + ")";
}

/// Position i of the result carries w[sigma(i)].
inline Word permute_word(const Word& w, const Permutation& sigma)
{
    if (w.degree() != sigma.size()) {
        throw std::invalid_argument("permute_word: size mismatch");
    }
    std::vector<Letter> out(w.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = w[sigma.images()[i] - 1];
    }
    return Word(std::move(out));
}

inline std::size_t count_descents(const std::vector<std::uint8_t>& images)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
        d += images[i] > images[i + 1];
    }
    return d;
}

/// Visits S_n in lexicographic order of images without materializing it.
/// The callback receives the raw image vector; it must not keep a reference.
template <typename F>
void for_each_permutation(std::size_t n, F&& visit)
{
    if (n < 1) {
        throw std::invalid_argument("for_each_permutation requires n >= 1");
    }
    std::vector<std::uint8_t> im(n);
    std::iota(im.begin(), im.end(), std::uint8_t{1});
    do {
        visit(static_cast<const std::vector<std::uint8_t>&>(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

/// The chunk of S_n with sigma(1) = first, in lexicographic order. The n
/// chunks partition S_n and can be reduced independently.
template <typename F>
void for_each_permutation_with_first(std::size_t n, std::size_t first, F&& visit)
{
    if (first < 1 || first > n) {
        throw std::invalid_argument("chunk index out of range");
    }
    std::vector<std::uint8_t> im;
    im.push_back(static_cast<std::uint8_t>(first));
    for (std::size_t v = 1; v <= n; ++v) {
        if (v != first) {
            im.push_back(static_cast<std::uint8_t>(v));
        }
    }
    do {
        visit(static_cast<const std::vector<std::uint8_t>&>(im));
    } while (std::next_permutation(im.begin() + 1, im.end()));
}

/// Forward range over S_n in lexicographic order. Each dereference yields a
/// Permutation value; memory stays O(n).
class SymmetricGroup {
public:
    explicit SymmetricGroup(std::size_t n) : n_(n)
    {
        if (n < 1) {
            throw std::invalid_argument("SymmetricGroup requires n >= 1");
        }
    }

    class iterator {
    public:
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::size_t n) : images_(n), done_(false) { std::iota(images_.begin(), images_.end(), std::uint8_t{1}); }

        Permutation operator*() const { return Permutation(images_); }
        iterator& operator++()
        {
            done_ = !std::next_permutation(images_.begin(), images_.end());
            return *this;
        }
        iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b)
        {
            if (a.done_ || b.done_) {
                return a.done_ == b.done_;
            }
            return a.images_ == b.images_;
        }

    private:
        std::vector<std::uint8_t> images_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    std::size_t n_;
};

inline SymmetricGroup enumerate_sn(std::size_t n) { return SymmetricGroup(n); }

/// D_{1..k}: permutations of S_n whose descent set is exactly {1, ..., k}
/// (k = 0 gives the identity). Such sigma decrease on positions 1..k+1 and
/// increase from k+1 on, so sigma(k+1) = 1 and the class is fixed by the
/// k-subset of {2..n} placed in front; |D_{1..k}| = C(n-1, k).
/// Returned in lexicographic order of images.
inline std::vector<Permutation> enumerate_descent_class(std::size_t n, std::size_t k)
{
    if (n < 1 || k > n - 1) {
        throw std::invalid_argument("enumerate_descent_class requires n >= 1 and 0 <= k <= n-1");
    }
    std::vector<Permutation> out;
    // choose mask over {2..n} of size k
    std::vector<bool> chosen(n - 1, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::uint8_t> head;
        std::vector<std::uint8_t> tail;
        for (std::size_t i = 0; i < n - 1; ++i) {
            (chosen[i] ? head : tail).push_back(static_cast<std::uint8_t>(i + 2));
        }
        std::vector<std::uint8_t> im(head.rbegin(), head.rend());
        im.push_back(1);
        im.insert(im.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(im));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kvlie
