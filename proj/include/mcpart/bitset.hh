#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace mcpart
{
    using BitWord = std::uint64_t;
    inline constexpr std::size_t bits_per_word = 64;

    constexpr auto words_for(std::size_t bits) -> std::size_t
    {
        return (bits + bits_per_word - 1) / bits_per_word;
    }

    /**
     * Fixed-width bit vector over the universe [0, size). The tag keeps
     * vertex sets and clique-index sets from being mixed up.
     */
    template <typename Tag_>
    class BitSet
    {
        private:
            std::size_t _size = 0;
            std::vector<BitWord> _bits;

        public:
            BitSet() = default;

            explicit BitSet(std::size_t size) :
                _size(size),
                _bits(words_for(size), 0)
            {
            }

            BitSet(std::size_t size, std::initializer_list<std::size_t> members) :
                BitSet(size)
            {
                for (auto m : members)
                    insert(m);
            }

            /// Builds a set from raw words; bits at or beyond size must be clear.
            BitSet(std::size_t size, std::span<const BitWord> words) :
                _size(size),
                _bits(words.begin(), words.end())
            {
                if (_bits.size() != words_for(size))
                    throw std::invalid_argument("BitSet: word count does not match size");
            }

            static auto full(std::size_t size) -> BitSet
            {
                BitSet result(size);
                for (std::size_t w = 0 ; w < result._bits.size() ; ++w)
                    result._bits[w] = ~BitWord{ 0 };
                if (auto rem = size % bits_per_word ; rem != 0)
                    result._bits.back() = (BitWord{ 1 } << rem) - 1;
                return result;
            }

            auto size() const -> std::size_t
            {
                return _size;
            }

            auto words() const -> std::span<const BitWord>
            {
                return _bits;
            }

            auto contains(std::size_t a) const -> bool
            {
                return a < _size && (_bits[a / bits_per_word] >> (a % bits_per_word)) & 1;
            }

            auto insert(std::size_t a) -> void
            {
                if (a >= _size)
                    throw std::out_of_range("BitSet::insert: member out of range");
                _bits[a / bits_per_word] |= BitWord{ 1 } << (a % bits_per_word);
            }

            auto erase(std::size_t a) -> void
            {
                if (a < _size)
                    _bits[a / bits_per_word] &= ~(BitWord{ 1 } << (a % bits_per_word));
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _bits)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _bits)
                    if (0 != w)
                        return false;
                return true;
            }

            /// Smallest member, or size() if empty.
            auto first() const -> std::size_t
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w)
                    if (_bits[w] != 0)
                        return w * bits_per_word + std::countr_zero(_bits[w]);
                return _size;
            }

            /// Smallest member that is at least from, or size() if none.
            auto next_from(std::size_t from) const -> std::size_t
            {
                if (from >= _size)
                    return _size;
                auto w = from / bits_per_word;
                auto word = _bits[w] & (~BitWord{ 0 } << (from % bits_per_word));
                while (true) {
                    if (word)
                        return w * bits_per_word + std::countr_zero(word);
                    if (++w == _bits.size())
                        return _size;
                    word = _bits[w];
                }
            }

            auto intersect_with(const BitSet & other) -> BitSet &
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w)
                    _bits[w] &= other._bits[w];
                return *this;
            }

            auto unite_with(const BitSet & other) -> BitSet &
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w)
                    _bits[w] |= other._bits[w];
                return *this;
            }

            auto subtract(const BitSet & other) -> BitSet &
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w)
                    _bits[w] &= ~other._bits[w];
                return *this;
            }

            auto intersects(const BitSet & other) const -> bool
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w)
                    if (_bits[w] & other._bits[w])
                        return true;
                return false;
            }

            auto is_subset_of(const BitSet & other) const -> bool
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w)
                    if (_bits[w] & ~other._bits[w])
                        return false;
                return true;
            }

            /// Members in ascending order.
            auto members() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                for_each([&] (std::size_t a) { result.push_back(a); });
                return result;
            }

            template <typename Fn_>
            auto for_each(Fn_ && fn) const -> void
            {
                for (std::size_t w = 0 ; w < _bits.size() ; ++w) {
                    auto word = _bits[w];
                    while (word) {
                        fn(w * bits_per_word + std::countr_zero(word));
                        word &= word - 1;
                    }
                }
            }

            friend auto operator& (BitSet a, const BitSet & b) -> BitSet
            {
                return a.intersect_with(b);
            }

            friend auto operator| (BitSet a, const BitSet & b) -> BitSet
            {
                return a.unite_with(b);
            }

            friend auto operator== (const BitSet &, const BitSet &) -> bool = default;

            /// Lexicographic order on the ascending member lists.
            friend auto operator<=> (const BitSet & a, const BitSet & b) -> std::strong_ordering
            {
                auto x = a.members(), y = b.members();
                return x <=> y;
            }
    };

    struct VertexTag;
    struct CliqueIndexTag;

    using Vertex = std::size_t;
    using CliqueIndex = std::size_t;

    using VertexSet = BitSet<VertexTag>;
    using CliqueSet = BitSet<CliqueIndexTag>;
}
