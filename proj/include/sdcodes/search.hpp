// Seeded randomized search for self-dual four-circulant codes.
//
// Candidate i is drawn from random stream (seed, i) and evaluated on its own,
// so a campaign's output depends only on the configuration, never on the
// number of worker threads. Candidates are processed in batches. Each batch
// is evaluated in parallel, then merged in draw order, then checkpointed.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sdcodes/codes.hpp"
#include "sdcodes/numeric.hpp"
#include "sdcodes/weights.hpp"

namespace sdc {

struct SearchConfig {
    std::size_t m = 0;
    std::size_t target_d = 0;
    bool doubly_even_only = false;
    std::uint64_t seed = 1;
    std::uint64_t max_candidates = 1000;
    std::uint64_t budget = 0;                  ///< per-candidate min-weight budget (codewords; 0 = unlimited)
    std::uint64_t count_budget = 50'000'000;   ///< budget for counting weight-target_d words
    std::size_t count_cap = 2'000'000;
    std::string output_path;                   ///< spec file; empty = no persistence
    std::uint64_t checkpoint_every = 256;      ///< candidates per batch / checkpoint
    bool resume = false;

    /// Throws DomainError for inconsistent settings.
    void validate() const;
};

struct ScreenResult {
    bool accepted = false;
    std::string reason;
};

struct SearchRecord {
    std::uint64_t draw = 0;
    FourCirculantSpec spec;
    MinWeightCertificate certificate;
    std::optional<Integer> target_count;  ///< number of codewords of weight target_d
    std::string key;
    std::optional<std::uint64_t> same_key_as;  ///< draw index of an earlier record with an equal key
};

struct CampaignStats {
    std::uint64_t drawn = 0;
    std::uint64_t screen_passed = 0;
    std::uint64_t rejected_not_self_dual = 0;
    std::uint64_t rejected_row_weight = 0;
    std::uint64_t rejected_min_weight = 0;    ///< a codeword below target_d was found
    std::uint64_t rejected_uncertified = 0;   ///< budget ran out before reaching target_d
    std::uint64_t accepted = 0;
    std::uint64_t distinct_keys = 0;

    std::string to_text(const std::vector<SearchRecord>& records) const;
};

struct CampaignResult {
    std::vector<SearchRecord> records;
    CampaignStats stats;
};

/// rA with its first bit forced to 1, rB uniform.
FourCirculantSpec random_spec(std::size_t m, std::mt19937_64& rng);

ScreenResult screen(const FourCirculantSpec& spec, bool doubly_even_only);

/// Key used to separate records: the weight-target count when known, else the
/// full distribution (small codes), else certificate plus spec.
std::string dedupe_key(const SearchRecord& record, const std::optional<WeightDistribution>& distribution = {});

CampaignResult run_campaign(const SearchConfig& config);

/// Record lines: a "# record ..." comment followed by the spec line.
std::string format_record(const SearchRecord& record);

}  // namespace sdc
