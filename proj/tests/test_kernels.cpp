// Serial and parallel kernels must agree exactly.
#include "doctest.h"
#include "oracle.hpp"
#include "sdcodes/kernels.hpp"

using namespace sdc;
using namespace sdc::kernels;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
    return m;
}

struct ThreadCap {
    explicit ThreadCap(int n) { set_thread_limit(n); }
    ~ThreadCap() { set_thread_limit(0); }
};

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(56, 7) == 231917400ULL);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("Gray histogram matches naive enumeration") {
    std::mt19937_64 rng(23);
    ThreadCap cap(4);
    for (int t = 0; t < 20; ++t) {
        const std::size_t k = 1 + rng() % 14, n = k + rng() % 50;
        const auto g = random_matrix(rng, k, n);
        const PackedRows rows(g);
        const std::vector<std::uint64_t> zero(rows.stride(), 0);
        const auto serial = gray_histogram_serial(rows, zero);
        CHECK(serial == gray_histogram_parallel(rows, zero));

        // Naive: every message, not only distinct words.
        std::vector<std::uint64_t> naive(n + 1, 0);
        const auto w = oracle::rows_of(g);
        for (std::uint64_t msg = 0; msg < (1ULL << k); ++msg) {
            oracle::Word x = 0;
            for (std::size_t i = 0; i < k; ++i)
                if ((msg >> i) & 1U) x ^= w[i];
            ++naive[static_cast<std::size_t>(std::popcount(x))];
        }
        CHECK(serial == naive);
    }
}

TEST_CASE("Gray histogram with an offset") {
    std::mt19937_64 rng(29);
    const auto g = random_matrix(rng, 9, 100);
    const PackedRows rows(g);
    BitWord off(100);
    for (std::size_t i = 0; i < 100; i += 3) off.set(i);
    const std::vector<std::uint64_t> o(off.words().begin(), off.words().end());
    CHECK(gray_histogram_serial(rows, o) == gray_histogram_parallel(rows, o));
}

TEST_CASE("level scans agree and find the lightest combination") {
    std::mt19937_64 rng(31);
    ThreadCap cap(3);
    for (int t = 0; t < 25; ++t) {
        const std::size_t k = 2 + rng() % 16, n = 20 + rng() % 120;
        const PackedRows rows(random_matrix(rng, k, n));
        for (std::size_t r = 1; r <= std::min<std::size_t>(k, 4); ++r) {
            const auto s = scan_level_serial(rows, r);
            const auto p = scan_level_parallel(rows, r);
            CHECK(s.best_weight == p.best_weight);
            CHECK(s.best_combo == p.best_combo);
            CHECK(s.visited == binomial(k, r));
            CHECK(p.visited == s.visited);
            CHECK(rows.combine(s.best_combo).weight() == s.best_weight);
            CHECK(collect_level_serial(rows, r, s.best_weight) == collect_level_parallel(rows, r, s.best_weight));
        }
    }
}

TEST_CASE("early stop reports a light word") {
    std::mt19937_64 rng(37);
    const PackedRows rows(random_matrix(rng, 12, 60));
    const auto full = scan_level_serial(rows, 3);
    const auto s = scan_level_serial(rows, 3, full.best_weight + 1);
    CHECK(s.stopped);
    CHECK(s.best_weight == full.best_weight);
    CHECK(s.visited <= full.visited);
    const auto p = scan_level_parallel(rows, 3, full.best_weight + 1);
    CHECK(p.stopped);
    CHECK(p.best_weight <= full.best_weight);
    const auto none = scan_level_parallel(rows, 3, full.best_weight);
    CHECK_FALSE(none.stopped);
}

TEST_CASE("collect level returns every word of the weight") {
    std::mt19937_64 rng(41);
    const auto g = random_matrix(rng, 10, 40);
    const PackedRows rows(g);
    const auto w = oracle::rows_of(g);
    for (std::size_t r = 1; r <= 3; ++r) {
        const std::size_t target = 18;
        const auto got = collect_level_serial(rows, r, target);
        std::size_t naive = 0;
        for (std::uint64_t msg = 0; msg < (1ULL << 10); ++msg) {
            if (static_cast<std::size_t>(std::popcount(msg)) != r) continue;
            oracle::Word x = 0;
            for (std::size_t i = 0; i < 10; ++i)
                if ((msg >> i) & 1U) x ^= w[i];
            naive += static_cast<std::size_t>(std::popcount(x)) == target;
        }
        CHECK(got.size() == naive * rows.stride());
    }
}
