#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace rigidkit::detail {

// Word-level helpers over spans; the engine lays domains out in one flat
// vector and hands out views.
using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

inline void set_bit(std::span<Word> s, std::size_t i) { s[i / word_bits] |= Word{1} << (i % word_bits); }
inline bool test_bit(std::span<const Word> s, std::size_t i) { return (s[i / word_bits] >> (i % word_bits)) & 1U; }

inline std::size_t popcount(std::span<const Word> s) {
    std::size_t c = 0;
    for (Word w : s)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline bool any(std::span<const Word> s) {
    for (Word w : s)
        if (w)
            return true;
    return false;
}

// In-place AND; returns whether anything survives.
inline bool and_with(std::span<Word> s, std::span<const Word> other) {
    Word acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        acc |= (s[i] &= other[i]);
    return acc != 0;
}

template <typename F>
void for_each_bit(std::span<const Word> s, F&& f) {
    for (std::size_t wi = 0; wi < s.size(); ++wi) {
        Word w = s[wi];
        while (w) {
            f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

}  // namespace rigidkit::detail
