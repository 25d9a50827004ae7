#include "sdcodes/gf2.hpp"

#include <algorithm>
#include <utility>

namespace sdc {

BitWord BitWord::from_string(std::string_view bits) {
    BitWord w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.set(i);
        else if (bits[i] != '0')
            throw DomainError("bit string contains a character other than 0/1: '" + std::string(bits) + "'");
    }
    return w;
}

BitWord BitWord::from_support(std::size_t length, std::span<const std::size_t> support) {
    BitWord w(length);
    for (auto i : support) {
        if (i < 1 || i > length)
            throw DomainError("support index " + std::to_string(i) + " outside 1.." + std::to_string(length));
        w.set(i - 1);
    }
    return w;
}

BitWord& BitWord::operator^=(const BitWord& other) {
    if (other.length_ != length_) throw DomainError("length mismatch in vector addition");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitWord::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::size_t> BitWord::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t x = words_[w];
        while (x) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)) + 1);
            x &= x - 1;
        }
    }
    return out;
}

std::strong_ordering BitWord::operator<=>(const BitWord& other) const {
    const std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < common; ++w) {
        const std::uint64_t diff = words_[w] ^ other.words_[w];
        if (diff) {
            const auto bit = std::countr_zero(diff);
            return ((words_[w] >> bit) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return length_ <=> other.length_;
}

int inner_product(const BitWord& u, const BitWord& v) {
    if (u.length() != v.length()) throw DomainError("inner product of words with different lengths");
    std::size_t acc = 0;
    auto a = u.words();
    auto b = v.words();
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return static_cast<int>(acc & 1U);
}

BitMatrix::BitMatrix(std::vector<BitWord> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.length() != cols_) throw DomainError("matrix rows must all have length " + std::to_string(cols_));
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    if (rows.empty()) return {};
    std::vector<BitWord> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(BitWord::from_string(r));
    const std::size_t cols = out.front().length();
    return BitMatrix(std::move(out), cols);
}

void BitMatrix::append_row(BitWord row) {
    if (row.length() != cols_) throw DomainError("appended row has the wrong length");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c : rows_[r].support()) t.set(c - 1, r);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows()) throw DomainError("matrix product shape mismatch");
    BitMatrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c : rows_[r].support()) out.rows_[r] ^= rhs.rows_[c - 1];
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& rhs) {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw DomainError("matrix sum shape mismatch");
    for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= rhs.rows_[r];
    return *this;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& lhs, const BitMatrix& rhs) {
    if (lhs.rows() != rhs.rows()) throw DomainError("hconcat row count mismatch");
    BitMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (auto c : lhs.rows_[r].support()) out.set(r, c - 1);
        for (auto c : rhs.rows_[r].support()) out.set(r, lhs.cols() + c - 1);
    }
    return out;
}

BitMatrix BitMatrix::vconcat(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DomainError("vconcat column count mismatch");
    BitMatrix out = top;
    for (const auto& r : bottom.rows_) out.rows_.push_back(r);
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitWord& r) { return r.is_zero(); });
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, 0, {}};
    auto& a = res.matrix;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        std::swap(a.row(r), a.row(p));
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.row(i) ^= a.row(r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

BitMatrix row_basis(const BitMatrix& m) {
    auto red = rref(m);
    std::vector<BitWord> rows(red.matrix.row_list().begin(),
                              red.matrix.row_list().begin() + static_cast<std::ptrdiff_t>(red.rank));
    return BitMatrix(std::move(rows), m.cols());
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix dual(const BitMatrix& g) {
    const auto red = rref(g);
    const std::size_t n = g.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;

    BitMatrix out(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitWord v(n);
        v.set(f);
        for (std::size_t r = 0; r < red.rank; ++r)
            if (red.matrix.get(r, f)) v.set(red.pivots[r]);
        out.append_row(std::move(v));
    }
    return out;
}

BitMatrix intersect(const BitMatrix& g1, const BitMatrix& g2) {
    if (g1.cols() != g2.cols()) throw DomainError("intersect: codes have different lengths");
    return dual(BitMatrix::vconcat(dual(g1), dual(g2)));
}

BitWord reduce(const BitMatrix& rref_basis, std::span<const std::size_t> pivots, BitWord v) {
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (v.get(pivots[r])) v ^= rref_basis.row(r);
    return v;
}

bool contains(const BitMatrix& g, const BitWord& v) {
    if (v.length() != g.cols()) throw DomainError("contains: word length differs from code length");
    const auto red = rref(g);
    return reduce(red.matrix, red.pivots, v).is_zero();
}

}  // namespace sdc
