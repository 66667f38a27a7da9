#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dominion {

/**
 * Dynamically sized bit-vector over the vertex ids 0..capacity-1 of some graph.
 *
 * All binary operations require both operands to have the same capacity.
 */
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int bits_per_word = 64;

    VertexSet() = default;

    explicit VertexSet(int capacity)
        : _capacity(capacity), _words((capacity + bits_per_word - 1) / bits_per_word, 0)
    {
    }

    VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity)
    {
        for (int v : members)
            set(v);
    }

    static auto full(int capacity) -> VertexSet
    {
        VertexSet s(capacity);
        s.set_all();
        return s;
    }

    static auto of(int capacity, std::span<const int> members) -> VertexSet
    {
        VertexSet s(capacity);
        for (int v : members)
            s.set(v);
        return s;
    }

    auto capacity() const -> int { return _capacity; }

    auto set(int v) -> void { _words[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
    auto reset(int v) -> void { _words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }
    auto test(int v) const -> bool { return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1U; }
    auto contains(int v) const -> bool { return v >= 0 && v < _capacity && test(v); }

    auto set_all() -> void
    {
        for (auto & w : _words)
            w = ~Word{0};
        trim();
    }

    auto clear() -> void
    {
        for (auto & w : _words)
            w = 0;
    }

    auto count() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto empty() const -> bool
    {
        for (auto w : _words)
            if (w != 0)
                return false;
        return true;
    }

    auto any() const -> bool { return ! empty(); }

    /// Smallest member, or -1.
    auto first() const -> int { return next(0); }

    /// Smallest member >= from, or -1.
    auto next(int from) const -> int
    {
        if (from >= _capacity)
            return -1;
        auto i = static_cast<std::size_t>(from / bits_per_word);
        Word w = _words[i] & (~Word{0} << (from % bits_per_word));
        while (true) {
            if (w != 0)
                return static_cast<int>(i) * bits_per_word + std::countr_zero(w);
            if (++i == _words.size())
                return -1;
            w = _words[i];
        }
    }

    /// Largest member, or -1.
    auto last() const -> int
    {
        for (auto i = _words.size(); i-- > 0;)
            if (_words[i] != 0)
                return static_cast<int>(i) * bits_per_word + (bits_per_word - 1 - std::countl_zero(_words[i]));
        return -1;
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t i = 0; i < _words.size(); ++i) {
            Word w = _words[i];
            while (w != 0) {
                f(static_cast<int>(i) * bits_per_word + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    auto members() const -> std::vector<int>
    {
        std::vector<int> result;
        result.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { result.push_back(v); });
        return result;
    }

    auto intersects(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto intersection_count(const VertexSet & other) const -> int
    {
        int result = 0;
        for (std::size_t i = 0; i < _words.size(); ++i)
            result += std::popcount(_words[i] & other._words[i]);
        return result;
    }

    auto is_subset_of(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto operator^=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] ^= other._words[i];
        return *this;
    }

    /// Set difference.
    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto complemented() const -> VertexSet
    {
        VertexSet result = *this;
        for (auto & w : result._words)
            w = ~w;
        result.trim();
        return result;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    /// Lexicographic order on the ascending member lists.
    friend auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        int d = (a ^ b).first();
        if (d < 0)
            return false;
        // members below d are shared; a proper prefix sorts first
        if (a.test(d))
            return b.next(d + 1) >= 0;
        return a.next(d + 1) < 0;
    }

    auto words() const -> std::span<const Word> { return _words; }
    auto words() -> std::span<Word> { return _words; }

private:
    auto trim() -> void
    {
        if (_capacity % bits_per_word != 0 && ! _words.empty())
            _words.back() &= (Word{1} << (_capacity % bits_per_word)) - 1;
    }

    int _capacity = 0;
    std::vector<Word> _words;
};

} // namespace dominion
