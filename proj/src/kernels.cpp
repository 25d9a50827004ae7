#include "sdcodes/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>

namespace sdc::kernels {

namespace {

int g_thread_limit = 0;

int worker_count() { return g_thread_limit > 0 ? g_thread_limit : omp_get_max_threads(); }

inline std::size_t popcount_words(const std::uint64_t* w, std::size_t stride) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < stride; ++i) total += static_cast<std::size_t>(std::popcount(w[i]));
    return total;
}

inline void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t stride) {
    for (std::size_t i = 0; i < stride; ++i) dst[i] = a[i] ^ b[i];
}

inline void xor_assign(std::uint64_t* dst, const std::uint64_t* src, std::size_t stride) {
    for (std::size_t i = 0; i < stride; ++i) dst[i] ^= src[i];
}

void check_gray_input(const PackedRows& rows, std::span<const std::uint64_t> offset) {
    if (rows.count() > kMaxGrayDimension) throw DomainError("Gray-code enumeration dimension too large");
    if (!offset.empty() && offset.size() != rows.stride()) throw DomainError("offset word has the wrong length");
}

// Histogram of the Gray-code indices [lo, hi).
void gray_range(const PackedRows& rows, std::span<const std::uint64_t> offset, std::uint64_t lo, std::uint64_t hi,
                Histogram& hist) {
    const std::size_t stride = rows.stride();
    std::vector<std::uint64_t> acc(stride, 0);
    if (!offset.empty()) std::copy(offset.begin(), offset.end(), acc.begin());
    const std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t b = 0; b < rows.count(); ++b)
        if ((g >> b) & 1U) xor_assign(acc.data(), rows.row(b), stride);
    ++hist[popcount_words(acc.data(), stride)];
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        xor_assign(acc.data(), rows.row(static_cast<std::size_t>(std::countr_zero(i))), stride);
        ++hist[popcount_words(acc.data(), stride)];
    }
}

// Walks the r-subsets {c_0 < ... < c_{r-1} = top} in colexicographic order,
// keeping suffix sums so that each step costs about one row addition.
// visit(word, combo) returns false to stop; walk returns false if stopped.
template <class Visit>
bool walk_top(const PackedRows& rows, std::size_t r, std::size_t top, Visit&& visit) {
    const std::size_t stride = rows.stride();
    std::vector<std::size_t> c(r);
    for (std::size_t j = 0; j + 1 < r; ++j) c[j] = j;
    c[r - 1] = top;
    // acc[j] = sum of rows c[j..r-1]; acc[r] = 0
    std::vector<std::uint64_t> acc((r + 1) * stride, 0);
    auto slot = [&](std::size_t j) { return acc.data() + j * stride; };
    for (std::size_t j = r; j-- > 0;) xor_into(slot(j), slot(j + 1), rows.row(c[j]), stride);

    for (;;) {
        if (!visit(static_cast<const std::uint64_t*>(slot(0)), static_cast<const std::vector<std::size_t>&>(c)))
            return false;
        std::size_t i = 0;
        while (i + 1 < r && c[i] + 1 == c[i + 1]) ++i;
        if (i + 1 >= r) return true;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j) c[j] = j;
        for (std::size_t j = i + 1; j-- > 0;) xor_into(slot(j), slot(j + 1), rows.row(c[j]), stride);
    }
}

struct TopResult {
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best_combo;
    std::uint64_t visited = 0;
    bool stopped = false;
};

TopResult scan_top(const PackedRows& rows, std::size_t r, std::size_t top, std::size_t stop_below,
                   const std::atomic<bool>* cancel) {
    TopResult res;
    const std::size_t stride = rows.stride();
    walk_top(rows, r, top, [&](const std::uint64_t* word, const std::vector<std::size_t>& combo) {
        ++res.visited;
        const std::size_t w = popcount_words(word, stride);
        if (w < res.best_weight) {
            res.best_weight = w;
            res.best_combo = combo;
            if (stop_below != kNoStop && w < stop_below) {
                res.stopped = true;
                return false;
            }
        }
        if (cancel && (res.visited & 0xFFFU) == 0 && cancel->load(std::memory_order_relaxed)) return false;
        return true;
    });
    return res;
}

void fold(LevelScan& into, TopResult&& part) {
    into.visited += part.visited;
    if (part.best_weight < into.best_weight) {
        into.best_weight = part.best_weight;
        into.best_combo = std::move(part.best_combo);
    }
    into.stopped = into.stopped || part.stopped;
}

void check_level(const PackedRows& rows, std::size_t r) {
    if (r == 0 || r > rows.count()) throw DomainError("level must satisfy 1 <= r <= number of rows");
}

void collect_top(const PackedRows& rows, std::size_t r, std::size_t top, std::size_t w, std::vector<std::uint64_t>& out) {
    const std::size_t stride = rows.stride();
    walk_top(rows, r, top, [&](const std::uint64_t* word, const std::vector<std::size_t>&) {
        if (popcount_words(word, stride) == w) out.insert(out.end(), word, word + stride);
        return true;
    });
}

}  // namespace

PackedRows::PackedRows(const BitMatrix& m)
    : count_(m.rows()), stride_(words_for(m.cols())), bits_(m.cols()), data_(count_ * stride_, 0) {
    for (std::size_t i = 0; i < count_; ++i) {
        auto w = m.row(i).words();
        std::copy(w.begin(), w.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * stride_));
    }
}

BitWord PackedRows::word_of(std::span<const std::uint64_t> packed) const {
    BitWord out(bits_);
    std::copy(packed.begin(), packed.end(), out.words().begin());
    return out;
}

BitWord PackedRows::combine(std::span<const std::size_t> combo) const {
    BitWord out(bits_);
    for (auto i : combo) xor_assign(out.words().data(), row(i), stride_);
    return out;
}

Histogram gray_histogram_serial(const PackedRows& rows, std::span<const std::uint64_t> offset) {
    check_gray_input(rows, offset);
    Histogram hist(rows.bits() + 1, 0);
    gray_range(rows, offset, 0, std::uint64_t{1} << rows.count(), hist);
    return hist;
}

Histogram gray_histogram_parallel(const PackedRows& rows, std::span<const std::uint64_t> offset) {
    check_gray_input(rows, offset);
    const std::uint64_t total = std::uint64_t{1} << rows.count();
    const std::uint64_t chunk = std::max<std::uint64_t>(std::uint64_t{1} << 12, total / 1024);
    const auto pieces = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    Histogram hist(rows.bits() + 1, 0);

#pragma omp parallel num_threads(worker_count())
    {
        Histogram local(rows.bits() + 1, 0);
#pragma omp for schedule(dynamic)
        for (std::int64_t p = 0; p < pieces; ++p) {
            const std::uint64_t lo = static_cast<std::uint64_t>(p) * chunk;
            gray_range(rows, offset, lo, std::min(total, lo + chunk), local);
        }
#pragma omp critical(sdc_gray_merge)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
    }
    return hist;
}

LevelScan scan_level_serial(const PackedRows& rows, std::size_t r, std::size_t stop_below) {
    check_level(rows, r);
    LevelScan out;
    for (std::size_t top = r - 1; top < rows.count(); ++top) {
        fold(out, scan_top(rows, r, top, stop_below, nullptr));
        if (out.stopped) break;
    }
    return out;
}

LevelScan scan_level_parallel(const PackedRows& rows, std::size_t r, std::size_t stop_below) {
    check_level(rows, r);
    const std::size_t tops = rows.count() - (r - 1);
    std::vector<TopResult> parts(tops);
    std::atomic<bool> cancel{false};

#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(tops); ++t) {
        if (cancel.load(std::memory_order_relaxed)) continue;
        auto& part = parts[static_cast<std::size_t>(t)];
        part = scan_top(rows, r, static_cast<std::size_t>(t) + r - 1, stop_below, &cancel);
        if (part.stopped) cancel.store(true, std::memory_order_relaxed);
    }

    // Merge in top order: ties resolve to the colexicographically first subset.
    LevelScan out;
    for (auto& p : parts) fold(out, std::move(p));
    return out;
}

std::vector<std::uint64_t> collect_level_serial(const PackedRows& rows, std::size_t r, std::size_t w) {
    check_level(rows, r);
    std::vector<std::uint64_t> out;
    for (std::size_t top = r - 1; top < rows.count(); ++top) collect_top(rows, r, top, w, out);
    return out;
}

std::vector<std::uint64_t> collect_level_parallel(const PackedRows& rows, std::size_t r, std::size_t w) {
    check_level(rows, r);
    const std::size_t tops = rows.count() - (r - 1);
    std::vector<std::vector<std::uint64_t>> parts(tops);

#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(tops); ++t)
        collect_top(rows, r, static_cast<std::size_t>(t) + r - 1, w, parts[static_cast<std::size_t>(t)]);

    std::vector<std::uint64_t> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

void set_thread_limit(int threads) { g_thread_limit = std::max(0, threads); }

int thread_limit() { return worker_count(); }

}  // namespace sdc::kernels
