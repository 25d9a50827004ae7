// Enumeration kernels over packed generator rows.
//
// Every kernel has a serial reference and an OpenMP version. Both produce
// identical results; the parallel versions split the work into contiguous
// pieces (Gray-code index ranges, or combinations grouped by their largest
// element) and merge in a fixed order.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "sdcodes/gf2.hpp"

namespace sdc::kernels {

/// Rows of a generator matrix laid out contiguously, `stride` words each.
class PackedRows {
public:
    PackedRows() = default;
    explicit PackedRows(const BitMatrix& m);

    std::size_t count() const { return count_; }
    std::size_t stride() const { return stride_; }
    std::size_t bits() const { return bits_; }
    const std::uint64_t* row(std::size_t i) const { return data_.data() + i * stride_; }

    BitWord word_of(std::span<const std::uint64_t> packed) const;
    BitWord combine(std::span<const std::size_t> combo) const;

private:
    std::size_t count_ = 0;
    std::size_t stride_ = 0;
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> data_;
};

/// histogram[w] = number of messages whose word (offset + message * G) has weight w.
using Histogram = std::vector<std::uint64_t>;

/// Largest dimension the Gray-code kernels accept.
inline constexpr std::size_t kMaxGrayDimension = 40;

Histogram gray_histogram_serial(const PackedRows& rows, std::span<const std::uint64_t> offset);
Histogram gray_histogram_parallel(const PackedRows& rows, std::span<const std::uint64_t> offset);

inline constexpr std::size_t kNoStop = 0;

/// Best word over all r-subsets of the rows.
struct LevelScan {
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best_combo;  ///< colexicographically first subset attaining best_weight
    std::uint64_t visited = 0;
    bool stopped = false;                 ///< a word of weight < stop_below was seen
};

/// Scans all r-subsets (r >= 1) in colexicographic order. When stop_below is
/// nonzero the scan ends at the first word whose weight is below it.
LevelScan scan_level_serial(const PackedRows& rows, std::size_t r, std::size_t stop_below = kNoStop);
LevelScan scan_level_parallel(const PackedRows& rows, std::size_t r, std::size_t stop_below = kNoStop);

/// Packed words (stride words each, concatenated) of every r-subset whose sum
/// has weight exactly w, in colexicographic order of the subsets.
std::vector<std::uint64_t> collect_level_serial(const PackedRows& rows, std::size_t r, std::size_t w);
std::vector<std::uint64_t> collect_level_parallel(const PackedRows& rows, std::size_t r, std::size_t w);

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t r);

/// Worker count used by the parallel kernels (0 = OpenMP default).
void set_thread_limit(int threads);
int thread_limit();

}  // namespace sdc::kernels
