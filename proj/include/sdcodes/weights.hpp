// Weight distributions, certified minimum weight, low-weight search and the
// Gram-matrix invariant of a set of codewords.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdcodes/codes.hpp"
#include "sdcodes/kernels.hpp"
#include "sdcodes/numeric.hpp"

namespace sdc {

struct WeightDistribution {
    std::size_t n = 0;
    std::vector<Integer> counts;  ///< counts[i] = number of words of weight i, size n + 1

    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t length) : n(length), counts(length + 1) {}

    Integer total() const;
    /// Smallest i > 0 with counts[i] > 0.
    std::optional<std::size_t> min_nonzero_weight() const;
    /// Smallest i with counts[i] > 0 (shadows have no zero word).
    std::optional<std::size_t> min_weight_any() const;

    /// "weight count" lines for every nonzero count.
    std::string to_text() const;
    static WeightDistribution parse(std::string_view text, std::size_t n);

    bool operator==(const WeightDistribution&) const = default;
};

inline constexpr std::size_t kDefaultBruteForceCap = 28;

/// Exact distribution by enumerating all 2^k codewords in Gray-code order.
/// Throws DomainError when k exceeds cap.
WeightDistribution weight_distribution_bruteforce(const Code& c, std::size_t cap = kDefaultBruteForceCap);
/// Distribution of the coset offset + C.
WeightDistribution coset_distribution_bruteforce(const Code& c, const BitWord& offset,
                                                 std::size_t cap = kDefaultBruteForceCap);

/// Largest power of two (1, 2 or 4) dividing every codeword weight, read off
/// the generator: even rows give 2, self-orthogonal rows of weight 0 mod 4 give 4.
std::size_t weight_divisor(const Code& c);

/// Column-disjoint information sets. Set j is a systematic generator whose
/// rank_j pivot columns are disjoint from every other set's pivots; the last
/// set may be rank deficient.
struct InformationSet {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    kernels::PackedRows rows;
};

std::vector<InformationSet> information_sets(const Code& c);

/// Certified lower bound after every set has finished level r and the first
/// `sets_at_next` sets have also finished level r + 1.
std::size_t bz_lower_bound(const std::vector<InformationSet>& sets, std::size_t k, std::size_t r,
                           std::size_t sets_at_next = 0);

struct MinWeightCertificate {
    enum class Kind { exact, lower_bound };

    Kind kind = Kind::lower_bound;
    std::size_t value = 0;            ///< exact minimum weight, or proven lower bound
    std::optional<BitWord> witness;   ///< lightest codeword seen (upper bound)
    std::size_t level = 0;            ///< last level completed in every information set
    std::vector<std::size_t> level_per_set;
    std::vector<std::size_t> set_ranks;
    std::uint64_t visited = 0;
    bool early_stopped = false;

    std::optional<std::size_t> upper_bound() const;
    std::string summary() const;
};

/// Lower bounds combine by max, upper bounds by min.
MinWeightCertificate merge(const MinWeightCertificate& a, const MinWeightCertificate& b);

struct MinWeightOptions {
    std::uint64_t budget = 0;                ///< max codewords visited; 0 = unlimited
    std::optional<std::size_t> early_stop;   ///< stop once a codeword lighter than this is seen
    std::optional<std::size_t> certify_at;   ///< stop once the lower bound reaches this
    std::optional<BitWord> known_codeword;   ///< seeds the upper bound
    std::size_t max_level = 0;               ///< 0 = no cap
    bool parallel = true;
};

/// Brouwer-Zimmermann style minimum-weight computation.
MinWeightCertificate min_weight(const Code& c, const MinWeightOptions& opts = {});

struct LowWeightOptions {
    std::uint64_t iterations = 1000;
    std::uint64_t seed = 1;
    std::size_t message_weight = 2;   ///< enumerate messages of weight 1..this per information set
    bool parallel = true;
};

/// Randomized information-set search for a codeword of weight <= target.
/// Deterministic in (seed, iterations).
std::optional<BitWord> find_low_weight(const Code& c, std::size_t target, const LowWeightOptions& opts = {});

/// All codewords of weight exactly w, sorted. Throws DomainError when more
/// than `cap` exist or the enumeration would exceed `budget` visited words.
std::vector<BitWord> enumerate_weight(const Code& c, std::size_t w, std::size_t cap, std::uint64_t budget = 0);

/// Distinct entries of M^T M where the words are the rows of the integer matrix M.
std::vector<std::uint64_t> gram_invariant(const std::vector<BitWord>& words);

}  // namespace sdc
