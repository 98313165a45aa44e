#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trisat::bits {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t nbits) { return (nbits + word_bits - 1) / word_bits; }

inline bool test(std::span<const Word> row, std::size_t i) { return (row[i / word_bits] >> (i % word_bits)) & 1U; }
inline void set(std::span<Word> row, std::size_t i) { row[i / word_bits] |= Word{1} << (i % word_bits); }
inline void reset(std::span<Word> row, std::size_t i) { row[i / word_bits] &= ~(Word{1} << (i % word_bits)); }

inline std::size_t count(std::span<const Word> row)
{
    std::size_t c = 0;
    for (Word w : row)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline void and_into(std::span<Word> dst, std::span<const Word> src)
{
    for (std::size_t k = 0; k < dst.size(); ++k)
        dst[k] &= src[k];
}

/// First set bit at position >= from, or npos.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
inline std::size_t next_set(std::span<const Word> row, std::size_t from)
{
    std::size_t k = from / word_bits;
    if (k >= row.size())
        return npos;
    Word w = row[k] & (~Word{0} << (from % word_bits));
    while (true) {
        if (w != 0)
            return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
        if (++k == row.size())
            return npos;
        w = row[k];
    }
}

/// Row-major bit matrix with a fixed number of columns; rows are contiguous word spans.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    bool test(std::size_t r, std::size_t c) const { return bits::test(row(r), c); }
    void set(std::size_t r, std::size_t c) { bits::set(row(r), c); }
    void reset(std::size_t r, std::size_t c) { bits::reset(row(r), c); }

    void fill()
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            auto rw = row(r);
            for (std::size_t c = 0; c < cols_; ++c)
                bits::set(rw, c);
        }
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

} // namespace trisat::bits
