// Bit-packed vectors and matrices over GF(2).
//
// Coordinates are 0-indexed in this API. Text I/O (supports, bit strings)
// reads coordinate 1 as the leftmost character / index 1.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

/// Raised for inputs that are well-formed but mathematically invalid for the
/// requested operation (length mismatch, non-self-dual input, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::size_t length) : length_(length), words_(words_for(length), 0) {}

    /// Parses a string of '0'/'1' characters, leftmost character = coordinate 1.
    static BitWord from_string(std::string_view bits);
    /// Builds a word from a 1-indexed support list.
    static BitWord from_support(std::size_t length, std::span<const std::size_t> support);

    std::size_t length() const { return length_; }
    std::size_t word_count() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }
    bool is_zero() const {
        for (auto x : words_)
            if (x) return false;
        return true;
    }

    BitWord& operator^=(const BitWord& other);
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// '0'/'1' string, coordinate 1 first.
    std::string to_string() const;
    /// 1-indexed support, ascending.
    std::vector<std::size_t> support() const;

    bool operator==(const BitWord&) const = default;
    /// Lexicographic order on the printed bit string ("0" < "1", coordinate 1 most significant).
    std::strong_ordering operator<=>(const BitWord& other) const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t weight(const BitWord& v) { return v.weight(); }

/// Standard inner product over GF(2). Throws DomainError on length mismatch.
int inner_product(const BitWord& u, const BitWord& v);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitWord(cols)) {}
    /// All rows must share one length; `cols` is needed when `rows` is empty.
    BitMatrix(std::vector<BitWord> rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::span<const std::string> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    const BitWord& row(std::size_t r) const { return rows_[r]; }
    BitWord& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitWord>& row_list() const { return rows_; }

    void append_row(BitWord row);

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    BitMatrix& operator+=(const BitMatrix& rhs);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

    /// [lhs | rhs]
    static BitMatrix hconcat(const BitMatrix& lhs, const BitMatrix& rhs);
    /// lhs stacked above rhs
    static BitMatrix vconcat(const BitMatrix& top, const BitMatrix& bottom);

    bool is_zero() const;
    std::vector<std::string> to_strings() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitWord> rows_;
};

struct RrefResult {
    BitMatrix matrix;                 ///< same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  ///< 0-indexed pivot columns, ascending
};

/// Reduced row-echelon form. Pivot = leftmost column, first available row.
RrefResult rref(const BitMatrix& m);

/// Nonzero rows of rref(m): a canonical basis of the row space.
BitMatrix row_basis(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Generator matrix of the dual code, in (n - rank) x n form.
BitMatrix dual(const BitMatrix& g);

/// Generator matrix of the intersection of the two row spaces.
BitMatrix intersect(const BitMatrix& g1, const BitMatrix& g2);

/// True iff v lies in the row space of g.
bool contains(const BitMatrix& g, const BitWord& v);

/// Reduces v against an rref basis (rows with the given pivots). The result is
/// the canonical coset representative of v modulo the row space: zero on all pivots.
BitWord reduce(const BitMatrix& rref_basis, std::span<const std::size_t> pivots, BitWord v);

}  // namespace sdc
