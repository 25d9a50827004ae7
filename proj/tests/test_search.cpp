#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "oracle.hpp"
#include "sdcodes/random.hpp"
#include "sdcodes/search.hpp"

using namespace sdc;

namespace {

FourCirculantSpec spec(const std::string& a, const std::string& b) {
    return {BitWord::from_string(a), BitWord::from_string(b)};
}

std::filesystem::path temp_file(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("sdcodes_test_" + name);
    std::filesystem::remove(p);
    std::filesystem::remove(p.string() + ".stats");
    return p;
}

SearchConfig small_config() {
    SearchConfig cfg;
    cfg.m = 5;
    cfg.target_d = 4;
    cfg.seed = 2024;
    cfg.max_candidates = 600;
    cfg.checkpoint_every = 64;
    return cfg;
}

bool same_records(const std::vector<SearchRecord>& a, const std::vector<SearchRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (format_record(a[i]) != format_record(b[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("random specs") {
    auto r1 = stream_rng(9, 0), r2 = stream_rng(9, 0);
    CHECK(random_spec(2, r1) == random_spec(2, r2));
    auto rng = stream_rng(1, 1);
    for (int i = 0; i < 10000; ++i) CHECK(random_spec(5, rng).ra.get(0));
}

TEST_CASE("rB weights are binomial") {
    // Chi-square against Binomial(10, 1/2); 10 degrees of freedom, 0.1% critical value 29.59.
    auto rng = stream_rng(77, 0);
    const int draws = 20000;
    std::vector<int> seen(11, 0);
    for (int i = 0; i < draws; ++i) ++seen[random_spec(10, rng).rb.weight()];
    double chi = 0;
    for (int w = 0; w <= 10; ++w) {
        const double expect = draws * static_cast<double>(kernels::binomial(10, w)) / 1024.0;
        chi += (seen[w] - expect) * (seen[w] - expect) / expect;
    }
    CHECK(chi < 29.59);
}

TEST_CASE("screen") {
    CHECK(screen(spec("01", "11"), false).accepted);
    CHECK(screen(spec("01", "11"), true).accepted);
    const auto r = screen(spec("10", "00"), true);
    CHECK_FALSE(r.accepted);
    CHECK(r.reason.find("row weight 2") != std::string::npos);
    CHECK(screen(spec("10", "00"), false).accepted);
    CHECK_FALSE(screen(spec("11", "00"), false).accepted);

    for (const char* name : {"length120_specs.txt", "length128_specs.txt"})
        for (const auto& s : parse_spec_file(oracle::slurp(oracle::data_path(name)))) CHECK(screen(s, true).accepted);
}

TEST_CASE("config validation") {
    SearchConfig cfg = small_config();
    CHECK_NOTHROW(cfg.validate());
    cfg.target_d = 3;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = small_config();
    cfg.doubly_even_only = true;  // n = 20 is not a multiple of 8
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.m = 6;
    cfg.target_d = 12;  // bound at n = 24 is 8
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.target_d = 8;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("dedupe keys") {
    SearchRecord a;
    a.spec = spec("01", "11");
    a.target_count = Integer(14);
    SearchRecord b = a;
    CHECK(dedupe_key(a) == dedupe_key(b));

    SearchRecord e8, ii;
    e8.spec = spec("01", "11");
    ii.spec = spec("10", "00");
    const auto de8 = weight_distribution_bruteforce(four_circulant(e8.spec));
    const auto dii = weight_distribution_bruteforce(four_circulant(ii.spec));
    CHECK(dedupe_key(e8, de8) != dedupe_key(ii, dii));
    CHECK(dedupe_key(e8) != dedupe_key(ii));
}

TEST_CASE("the printed weight-20 counts are distinct") {
    for (auto [name, count] : {std::pair{"length120_a20.txt", 502}, std::pair{"length128_a20.txt", 200}}) {
        std::istringstream in(oracle::slurp(oracle::data_path(name)));
        std::set<long long> values;
        long long v;
        int lines = 0;
        while (in >> v) {
            values.insert(v);
            ++lines;
        }
        CHECK(lines == count);
        CHECK(values.size() == static_cast<std::size_t>(count));
    }
}

TEST_CASE("campaign is deterministic and sound") {
    const auto cfg = small_config();
    const auto r1 = run_campaign(cfg);
    const auto r2 = run_campaign(cfg);
    REQUIRE_FALSE(r1.records.empty());
    CHECK(same_records(r1.records, r2.records));
    CHECK(r1.stats.drawn == cfg.max_candidates);
    CHECK(r1.stats.accepted == r1.records.size());
    CHECK(r1.stats.screen_passed == r1.stats.accepted + r1.stats.rejected_min_weight + r1.stats.rejected_uncertified);
    CHECK(r1.stats.drawn == r1.stats.screen_passed + r1.stats.rejected_not_self_dual + r1.stats.rejected_row_weight);

    for (const auto& r : r1.records) {
        CHECK(screen(r.spec, false).accepted);
        const Code c = four_circulant(r.spec);
        CHECK(is_self_dual(c));
        const auto words = oracle::span(oracle::rows_of(c.generator()));
        CHECK(oracle::min_weight(words) >= cfg.target_d);
        CHECK(r.certificate.value >= cfg.target_d);
        REQUIRE(r.target_count);
        CHECK(*r.target_count == oracle::distribution(words, c.n())[cfg.target_d]);
    }
}

TEST_CASE("campaign does not depend on the thread count") {
    const auto cfg = small_config();
    kernels::set_thread_limit(1);
    const auto one = run_campaign(cfg);
    kernels::set_thread_limit(4);
    const auto four = run_campaign(cfg);
    kernels::set_thread_limit(0);
    CHECK(same_records(one.records, four.records));
}

TEST_CASE("doubly even campaign") {
    SearchConfig cfg;
    cfg.m = 6;
    cfg.target_d = 8;
    cfg.doubly_even_only = true;
    cfg.max_candidates = 3000;
    cfg.seed = 11;
    const auto r = run_campaign(cfg);
    CHECK(r.stats.rejected_row_weight > 0);
    for (const auto& rec : r.records) {
        const Code c = four_circulant(rec.spec);
        CHECK(parity_class(c) == ParityClass::doubly_even);
        // Every such code at n = 24 with d = 8 is the Golay code.
        CHECK(rec.target_count == Integer(759));
    }
}

TEST_CASE("campaign file, sidecar and resume") {
    const auto path = temp_file("campaign.txt");
    auto cfg = small_config();
    cfg.output_path = path.string();
    const auto full = run_campaign(cfg);

    const auto text = oracle::slurp(path.string());
    const auto specs = parse_spec_file(text);
    CHECK(specs.size() == full.records.size());
    const auto stats = oracle::slurp(path.string() + ".stats");
    CHECK(stats.find("candidates_drawn 600\n") != std::string::npos);
    CHECK(stats.find("accepted " + std::to_string(full.stats.accepted) + "\n") != std::string::npos);

    // Interrupt after two batches, then resume to the full length.
    const auto part_path = temp_file("partial.txt");
    auto part = cfg;
    part.output_path = part_path.string();
    part.max_candidates = 128;
    run_campaign(part);
    part.max_candidates = cfg.max_candidates;
    part.resume = true;
    const auto resumed = run_campaign(part);
    CHECK(same_records(resumed.records, full.records));
    CHECK(resumed.stats.drawn == full.stats.drawn);
    CHECK(oracle::slurp(part_path.string()).substr(0, 200) == text.substr(0, 200));
    CHECK(parse_spec_file(oracle::slurp(part_path.string())) == specs);

    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".stats");
    std::filesystem::remove(part_path);
    std::filesystem::remove(part_path.string() + ".stats");
}
