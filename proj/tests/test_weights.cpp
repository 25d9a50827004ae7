#include "doctest.h"
#include "oracle.hpp"
#include "sdcodes/codes.hpp"
#include "sdcodes/weights.hpp"

using namespace sdc;

namespace {

Code spec_code(const std::string& a, const std::string& b) {
    return four_circulant({BitWord::from_string(a), BitWord::from_string(b)});
}

Code golay() { return Code(parse_matrix_file(oracle::slurp(oracle::data_path("golay24.txt")))); }

Code from_file(const char* name, std::size_t index = 0) {
    return four_circulant(parse_spec_file(oracle::slurp(oracle::data_path(name))).at(index));
}

std::vector<std::uint64_t> as_u64(const WeightDistribution& d) {
    std::vector<std::uint64_t> out;
    for (const auto& c : d.counts) out.push_back(static_cast<std::uint64_t>(c));
    return out;
}

}  // namespace

TEST_CASE("brute-force distributions") {
    const auto rep = weight_distribution_bruteforce(Code(BitMatrix::from_strings(std::vector<std::string>{"11"})));
    CHECK(as_u64(rep) == std::vector<std::uint64_t>{1, 0, 1});

    const auto e8 = weight_distribution_bruteforce(spec_code("01", "11"));
    CHECK(as_u64(e8) == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});

    const auto g = weight_distribution_bruteforce(golay());
    CHECK(g.counts[8] == 759);
    CHECK(g.counts[12] == 2576);
    CHECK(g.total() == 4096);

    CHECK_THROWS_AS(weight_distribution_bruteforce(golay(), 10), DomainError);
}

TEST_CASE("distribution matches the naive span") {
    for (const auto& [a, b] : oracle::random_self_dual_specs(30, 8, 43)) {
        const Code c = spec_code(a, b);
        CHECK(as_u64(weight_distribution_bruteforce(c)) ==
              oracle::distribution(oracle::span(oracle::rows_of(c.generator())), c.n()));
    }
}

TEST_CASE("distribution text round trip") {
    const auto g = weight_distribution_bruteforce(golay());
    CHECK(g.to_text() == "0 1\n8 759\n12 2576\n16 759\n24 1\n");
    CHECK(WeightDistribution::parse(g.to_text(), 24) == g);
    CHECK(g.min_nonzero_weight() == 8U);
    CHECK_THROWS_AS(WeightDistribution::parse("25 1\n", 24), DomainError);
    CHECK_THROWS_AS(WeightDistribution::parse("3 x\n", 24), DomainError);
}

TEST_CASE("weight divisor") {
    CHECK(weight_divisor(spec_code("01", "11")) == 4);
    CHECK(weight_divisor(spec_code("10", "00")) == 2);
    CHECK(weight_divisor(Code(BitMatrix::from_strings(std::vector<std::string>{"100", "011"}))) == 1);
}

TEST_CASE("information sets are disjoint and systematic") {
    const Code c = from_file("c112.txt");
    const auto sets = information_sets(c);
    REQUIRE(sets.size() >= 2);
    std::vector<int> used(c.n(), 0);
    for (const auto& s : sets) {
        CHECK(s.rank == s.pivots.size());
        for (auto p : s.pivots) CHECK(used[p]++ == 0);
        for (std::size_t i = 0; i < s.rows.count(); ++i) {
            const BitWord w = s.rows.word_of({s.rows.row(i), s.rows.stride()});
            CHECK(c.contains(w));
        }
    }
    CHECK(sets.front().rank == c.k());
}

TEST_CASE("minimum weight on small codes") {
    CHECK(min_weight(spec_code("01", "11")).summary() == "exact 4 (witness weight 4)");
    const auto g = min_weight(golay());
    CHECK(g.kind == MinWeightCertificate::Kind::exact);
    CHECK(g.value == 8);
    CHECK(g.witness->weight() == 8);
    CHECK(golay().contains(*g.witness));
    CHECK_THROWS_AS(min_weight(Code(BitMatrix(0, 4))), DomainError);
}

TEST_CASE("minimum weight equals brute force on random four-circulant codes") {
    for (const auto& [a, b] : oracle::random_self_dual_specs(60, 10, 47)) {
        const Code c = spec_code(a, b);
        const auto words = oracle::span(oracle::rows_of(c.generator()));
        const auto expect = oracle::min_weight(words);
        MinWeightOptions serial;
        serial.parallel = false;
        const auto s = min_weight(c, serial);
        const auto p = min_weight(c);
        CHECK(s.kind == MinWeightCertificate::Kind::exact);
        CHECK(s.value == expect);
        CHECK(p.value == expect);
        CHECK(p.kind == MinWeightCertificate::Kind::exact);
        CHECK(c.contains(*s.witness));
    }
}

TEST_CASE("budgeted minimum weight gives a sound lower bound") {
    const Code g = golay();
    MinWeightOptions o;
    o.budget = 20;
    const auto cert = min_weight(g, o);
    CHECK(cert.value <= 8);
    if (cert.kind == MinWeightCertificate::Kind::lower_bound) CHECK(cert.summary().rfind("lower-bound ", 0) == 0);

    MinWeightOptions stop;
    stop.early_stop = 12;
    const auto early = min_weight(g, stop);
    CHECK(early.early_stopped);
    CHECK(early.witness->weight() < 12);
}

TEST_CASE("certificate merge") {
    MinWeightCertificate a, b;
    a.value = 10;
    b.value = 12;
    a.witness = BitWord::from_string(std::string(14, '1') + "0000");
    b.witness = BitWord::from_string(std::string(16, '1') + "00");
    const auto m = merge(a, b);
    CHECK(m.value == 12);
    CHECK(m.witness->weight() == 14);
    CHECK(m.kind == MinWeightCertificate::Kind::lower_bound);

    b.value = 14;
    const auto exact = merge(a, b);
    CHECK(exact.kind == MinWeightCertificate::Kind::exact);
    CHECK(exact.value == 14);
}

TEST_CASE("low-weight search") {
    const Code e8 = spec_code("01", "11");
    const auto w = find_low_weight(e8, 4);
    REQUIRE(w);
    CHECK(w->weight() == 4);
    CHECK(e8.contains(*w));

    LowWeightOptions serial;
    serial.parallel = false;
    serial.iterations = 50;
    LowWeightOptions parallel = serial;
    parallel.parallel = true;
    const Code g = golay();
    CHECK(find_low_weight(g, 8, serial) == find_low_weight(g, 8, parallel));
    CHECK_FALSE(find_low_weight(g, 7, serial));
}

TEST_CASE("enumerate weight") {
    CHECK(enumerate_weight(spec_code("01", "11"), 4, 100).size() == 14);
    const auto words = enumerate_weight(golay(), 8, 1000);
    CHECK(words.size() == 759);
    for (const auto& w : words) CHECK(w.weight() == 8);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(enumerate_weight(Code(BitMatrix::from_strings(std::vector<std::string>{"11"})), 1, 10).empty());
    CHECK_THROWS_AS(enumerate_weight(golay(), 8, 100), DomainError);
}

TEST_CASE("enumerate weight equals the naive span") {
    for (const auto& [a, b] : oracle::random_self_dual_specs(20, 8, 53)) {
        const Code c = spec_code(a, b);
        const auto all = oracle::span(oracle::rows_of(c.generator()));
        for (std::size_t w = 2; w <= 8; w += 2) {
            std::vector<oracle::Word> expect;
            for (auto x : all)
                if (static_cast<std::size_t>(std::popcount(x)) == w) expect.push_back(x);
            const auto got = enumerate_weight(c, w, 1'000'000);
            CHECK(got.size() == expect.size());
            for (const auto& x : got) CHECK(all.count(oracle::to_word(x)));
        }
    }
}

TEST_CASE("Gram invariant") {
    const auto e8_words = enumerate_weight(spec_code("01", "11"), 4, 100);
    CHECK(gram_invariant(e8_words) == std::vector<std::uint64_t>{3, 7});

    const auto gw = enumerate_weight(golay(), 8, 1000);
    CHECK(gram_invariant(gw) == std::vector<std::uint64_t>{77, 253});

    std::vector<oracle::Word> raw;
    for (const auto& w : gw) raw.push_back(oracle::to_word(w));
    CHECK(gram_invariant(gw) == oracle::gram(raw, 24));
}

TEST_CASE("Gram invariant is permutation invariant") {
    std::mt19937_64 rng(59);
    const auto gw = enumerate_weight(golay(), 8, 1000);
    const auto base = gram_invariant(gw);
    for (int t = 0; t < 5; ++t) {
        std::vector<std::size_t> perm(24);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<BitWord> moved;
        for (const auto& w : gw) {
            BitWord x(24);
            for (std::size_t i = 0; i < 24; ++i) x.set(perm[i], w.get(i));
            moved.push_back(x);
        }
        CHECK(gram_invariant(moved) == base);
    }
}
