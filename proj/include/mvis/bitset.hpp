#pragma once

#include "mvis/common.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mvis
{

namespace bits
{
    using Word = std::uint64_t;

    constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

    inline bool test(const Word * w, Vertex v) { return (w[v >> 6] >> (v & 63)) & 1U; }
    inline void set(Word * w, Vertex v) { w[v >> 6] |= Word{1} << (v & 63); }
    inline void reset(Word * w, Vertex v) { w[v >> 6] &= ~(Word{1} << (v & 63)); }

    inline bool any(const Word * a, std::size_t words)
    {
        for (std::size_t i = 0; i < words; ++i)
            if (a[i])
                return true;
        return false;
    }

    inline bool intersects(const Word * a, const Word * b, std::size_t words)
    {
        for (std::size_t i = 0; i < words; ++i)
            if (a[i] & b[i])
                return true;
        return false;
    }

    inline std::size_t count(const Word * a, std::size_t words)
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words; ++i)
            c += static_cast<std::size_t>(std::popcount(a[i]));
        return c;
    }

    /// Index of the lowest set bit at or after `from`, or `n` if none.
    inline std::size_t next(const Word * a, std::size_t words, std::size_t from)
    {
        std::size_t wi = from >> 6;
        if (wi >= words)
            return words * 64;
        Word cur = a[wi] & (~Word{0} << (from & 63));
        while (true) {
            if (cur)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++wi >= words)
                return words * 64;
            cur = a[wi];
        }
    }

    template <typename F>
    void for_each(const Word * a, std::size_t words, F && f)
    {
        for (std::size_t i = 0; i < words; ++i) {
            Word w = a[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }
}

/// A subset of {0, ..., n-1}. The universe size n is fixed at construction.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_(bits::words_for(n), 0) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> vs) : VertexSet(n)
    {
        for (Vertex v : vs)
            insert(v);
    }
    VertexSet(std::size_t n, std::span<const Vertex> vs) : VertexSet(n)
    {
        for (Vertex v : vs)
            insert(v);
    }

    static VertexSet full(std::size_t n)
    {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v)
            s.insert(v);
        return s;
    }

    std::size_t universe() const { return n_; }
    std::size_t word_count() const { return words_.size(); }

    bool contains(Vertex v) const { return v < n_ && bits::test(words_.data(), v); }
    void insert(Vertex v)
    {
        if (v >= n_)
            throw InputError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
        bits::set(words_.data(), v);
    }
    void erase(Vertex v)
    {
        if (v < n_)
            bits::reset(words_.data(), v);
    }

    std::size_t size() const { return bits::count(words_.data(), words_.size()); }
    bool empty() const { return !bits::any(words_.data(), words_.size()); }

    bool intersects(const VertexSet & o) const { return bits::intersects(words_.data(), o.words_.data(), std::min(words_.size(), o.words_.size())); }
    bool is_subset_of(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~(i < o.words_.size() ? o.words_[i] : 0))
                return false;
        return true;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Members in increasing order.
    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(size());
        bits::for_each(words_.data(), words_.size(), [&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F && f) const { bits::for_each(words_.data(), words_.size(), std::forward<F>(f)); }

    std::span<const bits::Word> words() const { return words_; }
    std::span<bits::Word> words() { return words_; }
    const bits::Word * data() const { return words_.data(); }
    bits::Word * data() { return words_.data(); }

private:
    std::size_t n_ = 0;
    std::vector<bits::Word> words_;
};

}
