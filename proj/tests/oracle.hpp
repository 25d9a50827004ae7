// Naive reference implementations used as test oracles. Everything here works
// on lengths up to 64 with one machine word per vector, and shares no code
// with the library beyond the BitWord conversions.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sdcodes/gf2.hpp"
#include "sdcodes/numeric.hpp"

namespace oracle {

using Word = std::uint64_t;

inline std::string data_path(const std::string& name) { return std::string(SDCODES_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(SDCODES_GOLDEN_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Word to_word(const sdc::BitWord& v) {
    Word w = 0;
    for (std::size_t i = 0; i < v.length(); ++i)
        if (v.get(i)) w |= Word{1} << i;
    return w;
}

inline sdc::BitWord from_word(Word w, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((w >> i) & 1U) s[i] = '1';
    return sdc::BitWord::from_string(s);
}

inline std::vector<Word> rows_of(const sdc::BitMatrix& m) {
    std::vector<Word> out;
    for (const auto& r : m.row_list()) out.push_back(to_word(r));
    return out;
}

inline std::size_t rank(std::vector<Word> rows) {
    std::size_t r = 0;
    for (int bit = 63; bit >= 0; --bit) {
        const Word mask = Word{1} << bit;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                               [&](Word x) { return x & mask; });
        if (it == rows.end()) continue;
        std::swap(*it, rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & mask)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

/// Every word of the row space, as a sorted set.
inline std::set<Word> span(const std::vector<Word>& rows) {
    std::set<Word> out{0};
    for (Word r : rows) {
        std::vector<Word> add;
        for (Word w : out) add.push_back(w ^ r);
        out.insert(add.begin(), add.end());
    }
    return out;
}

inline std::vector<std::uint64_t> distribution(const std::set<Word>& words, std::size_t n) {
    std::vector<std::uint64_t> out(n + 1, 0);
    for (Word w : words) ++out[static_cast<std::size_t>(std::popcount(w))];
    return out;
}

inline std::size_t min_weight(const std::set<Word>& words) {
    std::size_t best = 65;
    for (Word w : words)
        if (w) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(w)));
    return best;
}

/// Four-circulant generator [I | A B; B^T A^T] straight from the definition.
inline std::vector<Word> four_circulant(const std::string& ra, const std::string& rb) {
    const std::size_t m = ra.size();
    auto a = [&](std::size_t i, std::size_t j) { return ra[(j + m - i) % m] == '1'; };
    auto b = [&](std::size_t i, std::size_t j) { return rb[(j + m - i) % m] == '1'; };
    std::vector<Word> rows;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        Word w = Word{1} << i;
        for (std::size_t j = 0; j < m; ++j) {
            const bool left = i < m ? a(i, j) : b(j, i - m);
            const bool right = i < m ? b(i, j) : a(j, i - m);
            if (left) w |= Word{1} << (2 * m + j);
            if (right) w |= Word{1} << (3 * m + j);
        }
        rows.push_back(w);
    }
    return rows;
}

inline bool self_orthogonal(const std::vector<Word>& rows) {
    for (Word x : rows)
        for (Word y : rows)
            if (std::popcount(x & y) % 2) return false;
    return true;
}

/// Distinct entries of M^T M, computed entry by entry.
inline std::vector<std::uint64_t> gram(const std::vector<Word>& words, std::size_t n) {
    std::set<std::uint64_t> vals;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t c = 0;
            for (Word w : words) c += ((w >> i) & 1U) & ((w >> j) & 1U);
            vals.insert(c);
        }
    return {vals.begin(), vals.end()};
}

/// Dense integer polynomial arithmetic, index = exponent.
using Poly = std::vector<sdc::Integer>;

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly power(const Poly& a, std::size_t k) {
    Poly out{1};
    for (std::size_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

inline Poly type_ii_basis(std::size_t n, std::size_t j) {
    Poly p1(9);
    p1[0] = 1, p1[4] = 14, p1[8] = 1;
    Poly one_minus(5);
    one_minus[0] = 1, one_minus[4] = -1;
    Poly y4(5);
    y4[4] = 1;
    return mul(power(p1, n / 8 - 3 * j), mul(power(y4, j), power(one_minus, 4 * j)));
}

/// Random self-dual four-circulant specs (rA first bit 1), found by rejection.
inline std::vector<std::pair<std::string, std::string>> random_self_dual_specs(std::size_t count, std::size_t max_m,
                                                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::string>> out;
    while (out.size() < count) {
        const std::size_t m = 2 + rng() % (max_m - 1);
        std::string ra(m, '0'), rb(m, '0');
        ra[0] = '1';
        for (std::size_t i = 1; i < m; ++i) ra[i] = (rng() & 1U) ? '1' : '0';
        for (std::size_t i = 0; i < m; ++i) rb[i] = (rng() & 1U) ? '1' : '0';
        if (self_orthogonal(four_circulant(ra, rb))) out.emplace_back(ra, rb);
    }
    return out;
}

}  // namespace oracle
