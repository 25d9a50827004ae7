#include "sdcodes/weights.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "sdcodes/random.hpp"

namespace sdc {

namespace {

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

std::size_t round_up(std::size_t x, std::size_t divisor) { return (x + divisor - 1) / divisor * divisor; }

// Gauss-Jordan elimination restricted to the given columns, taken in order.
// Returns the pivot columns; `m` is left systematic on them.
std::vector<std::size_t> eliminate_on(BitMatrix& m, std::span<const std::size_t> columns) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (auto col : columns) {
        if (r == m.rows()) break;
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, col)) ++p;
        if (p == m.rows()) continue;
        std::swap(m.row(r), m.row(p));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, col)) m.row(i) ^= m.row(r);
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

Integer WeightDistribution::total() const {
    Integer t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const {
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] != 0) return i;
    return std::nullopt;
}

std::optional<std::size_t> WeightDistribution::min_weight_any() const {
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) return i;
    return std::nullopt;
}

std::string WeightDistribution::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) os << i << ' ' << counts[i] << '\n';
    return os.str();
}

WeightDistribution WeightDistribution::parse(std::string_view text, std::size_t n) {
    WeightDistribution d(n);
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string w, c;
        if (!(ls >> w) || w.front() == '#') continue;
        if (!(ls >> c)) throw DomainError("distribution line " + std::to_string(lineno) + ": expected 'weight count'");
        std::size_t wi = 0;
        try {
            wi = std::stoul(w);
            if (wi > n) throw DomainError("distribution line " + std::to_string(lineno) + ": weight exceeds length");
            d.counts[wi] = Integer(c);
        } catch (const std::invalid_argument&) {
            throw DomainError("distribution line " + std::to_string(lineno) + ": not a number");
        } catch (const std::runtime_error& e) {
            throw DomainError("distribution line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return d;
}

WeightDistribution coset_distribution_bruteforce(const Code& c, const BitWord& offset, std::size_t cap) {
    if (c.k() > cap)
        throw DomainError("dimension " + std::to_string(c.k()) + " exceeds the brute-force cap " + std::to_string(cap));
    if (offset.length() != c.n()) throw DomainError("coset offset has the wrong length");
    const kernels::PackedRows rows(c.generator());
    const auto hist = kernels::gray_histogram_parallel(rows, offset.words());
    WeightDistribution d(c.n());
    for (std::size_t i = 0; i < hist.size(); ++i) d.counts[i] = hist[i];
    return d;
}

WeightDistribution weight_distribution_bruteforce(const Code& c, std::size_t cap) {
    return coset_distribution_bruteforce(c, BitWord(c.n()), cap);
}

std::size_t weight_divisor(const Code& c) {
    bool doubly = true;
    for (const auto& r : c.generator().row_list()) {
        if (r.weight() % 2) return 1;
        if (r.weight() % 4) doubly = false;
    }
    return doubly && is_self_orthogonal(c) ? 4 : 2;
}

std::vector<InformationSet> information_sets(const Code& c) {
    std::vector<InformationSet> sets;
    std::vector<bool> used(c.n(), false);
    for (;;) {
        std::vector<std::size_t> fresh;
        for (std::size_t i = 0; i < c.n(); ++i)
            if (!used[i]) fresh.push_back(i);
        if (fresh.empty()) break;
        BitMatrix m = c.generator();
        auto pivots = eliminate_on(m, fresh);
        if (pivots.empty()) break;
        for (auto p : pivots) used[p] = true;
        const std::size_t rank = pivots.size();
        sets.push_back({std::move(pivots), rank, kernels::PackedRows(m)});
    }
    return sets;
}

std::size_t bz_lower_bound(const std::vector<InformationSet>& sets, std::size_t k, std::size_t r,
                           std::size_t sets_at_next) {
    std::size_t bound = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        const std::size_t level = r + (j < sets_at_next ? 1 : 0);
        const std::size_t deficit = k - sets[j].rank;
        if (level + 1 > deficit) bound += level + 1 - deficit;
    }
    return bound;
}

std::optional<std::size_t> MinWeightCertificate::upper_bound() const {
    if (!witness) return std::nullopt;
    return witness->weight();
}

std::string MinWeightCertificate::summary() const {
    std::ostringstream os;
    if (kind == Kind::exact)
        os << "exact " << value;
    else
        os << "lower-bound " << value;
    if (witness) os << " (witness weight " << witness->weight() << ")";
    return os.str();
}

MinWeightCertificate merge(const MinWeightCertificate& a, const MinWeightCertificate& b) {
    MinWeightCertificate out = a.value >= b.value ? a : b;
    // An exact value is also a valid lower bound.
    const std::size_t lower = std::max(a.value, b.value);
    std::optional<BitWord> witness;
    for (const auto* c : {&a, &b})
        if (c->witness && (!witness || c->witness->weight() < witness->weight())) witness = c->witness;
    out.witness = witness;
    out.value = lower;
    out.kind = (witness && witness->weight() <= lower) ? MinWeightCertificate::Kind::exact
                                                       : MinWeightCertificate::Kind::lower_bound;
    if (out.kind == MinWeightCertificate::Kind::exact) out.value = witness->weight();
    out.visited = a.visited + b.visited;
    return out;
}

MinWeightCertificate min_weight(const Code& c, const MinWeightOptions& opts) {
    if (c.k() == 0) throw DomainError("the zero code has no nonzero codewords");
    const std::size_t k = c.k();
    const auto sets = information_sets(c);
    const std::size_t divisor = weight_divisor(c);

    MinWeightCertificate cert;
    cert.level_per_set.assign(sets.size(), 0);
    for (const auto& s : sets) cert.set_ranks.push_back(s.rank);

    std::size_t upper = kInfinity;
    if (opts.known_codeword) {
        if (!c.contains(*opts.known_codeword) || opts.known_codeword->is_zero())
            throw DomainError("seed codeword is not a nonzero codeword of the code");
        cert.witness = *opts.known_codeword;
        upper = cert.witness->weight();
    }
    std::size_t lower = round_up(bz_lower_bound(sets, k, 0), divisor);

    auto finish = [&]() {
        if (upper <= lower) {
            cert.kind = MinWeightCertificate::Kind::exact;
            cert.value = upper;
        } else {
            cert.kind = MinWeightCertificate::Kind::lower_bound;
            cert.value = lower;
        }
        return cert;
    };
    auto early = [&]() { return opts.early_stop && upper < *opts.early_stop; };
    auto certified = [&]() { return opts.certify_at && lower >= *opts.certify_at; };

    if (upper <= lower || early() || certified()) {
        cert.early_stopped = upper > lower;
        return finish();
    }

    for (std::size_t r = 1; r <= k; ++r) {
        if (opts.max_level && r > opts.max_level) return finish();
        for (std::size_t j = 0; j < sets.size(); ++j) {
            const std::size_t deficit = k - sets[j].rank;
            if (r + 1 > deficit) {
                const std::uint64_t cost = kernels::binomial(k, r);
                if (opts.budget && (cost > opts.budget || cert.visited + cost > opts.budget)) return finish();
                // Any word at or below the current lower bound settles the question.
                std::size_t stop_below = lower + 1;
                if (opts.early_stop) stop_below = std::max(stop_below, *opts.early_stop);
                const auto scan = opts.parallel ? kernels::scan_level_parallel(sets[j].rows, r, stop_below)
                                                : kernels::scan_level_serial(sets[j].rows, r, stop_below);
                cert.visited += scan.visited;
                if (scan.best_weight < upper) {
                    upper = scan.best_weight;
                    cert.witness = sets[j].rows.combine(scan.best_combo);
                }
                if (scan.stopped) {
                    cert.early_stopped = upper > lower;
                    return finish();
                }
            }
            cert.level_per_set[j] = r;
            lower = std::max(lower, round_up(bz_lower_bound(sets, k, r - 1, j + 1), divisor));
            if (upper <= lower || certified()) return finish();
            if (early()) {
                cert.early_stopped = true;
                return finish();
            }
        }
        cert.level = r;
    }
    return finish();
}

std::optional<BitWord> find_low_weight(const Code& c, std::size_t target, const LowWeightOptions& opts) {
    if (c.k() == 0) return std::nullopt;
    const std::size_t n = c.n();
    const std::size_t p = std::clamp<std::size_t>(opts.message_weight, 1, c.k());

    auto attempt = [&](std::uint64_t iteration) -> std::optional<BitWord> {
        auto rng = stream_rng(opts.seed, iteration);
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
        BitMatrix m = c.generator();
        eliminate_on(m, order);
        const kernels::PackedRows rows(m);
        for (std::size_t r = 1; r <= p; ++r) {
            const auto scan = kernels::scan_level_serial(rows, r, target + 1);
            if (scan.best_weight <= target && scan.best_weight > 0) return rows.combine(scan.best_combo);
        }
        return std::nullopt;
    };

    if (!opts.parallel) {
        for (std::uint64_t it = 0; it < opts.iterations; ++it)
            if (auto w = attempt(it)) return w;
        return std::nullopt;
    }

    // Chunks of iterations run in parallel; the lowest successful iteration wins.
    const std::uint64_t chunk = static_cast<std::uint64_t>(std::max(1, kernels::thread_limit())) * 8;
    for (std::uint64_t base = 0; base < opts.iterations; base += chunk) {
        const std::uint64_t count = std::min(chunk, opts.iterations - base);
        std::vector<std::optional<BitWord>> found(count);
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_limit())
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
            found[static_cast<std::size_t>(i)] = attempt(base + static_cast<std::uint64_t>(i));
        for (auto& f : found)
            if (f) return f;
    }
    return std::nullopt;
}

std::vector<BitWord> enumerate_weight(const Code& c, std::size_t w, std::size_t cap, std::uint64_t budget) {
    std::set<BitWord> found;
    if (w == 0) return {BitWord(c.n())};
    if (w > c.n() || c.k() == 0) return {};
    const std::size_t divisor = weight_divisor(c);
    if (w % divisor) return {};

    const std::size_t k = c.k();
    const auto sets = information_sets(c);
    std::uint64_t visited = 0;
    auto complete = [&](std::size_t r, std::size_t at_next) {
        return round_up(bz_lower_bound(sets, k, r, at_next), divisor) > w;
    };
    if (complete(0, 0)) return {};

    for (std::size_t r = 1; r <= k; ++r) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (r + 1 > k - sets[j].rank) {
                const std::uint64_t cost = kernels::binomial(k, r);
                if (budget && (cost > budget || visited + cost > budget))
                    throw DomainError("enumerating weight " + std::to_string(w) + " needs more than the budget of " +
                                      std::to_string(budget) + " codewords");
                visited += cost;
                const auto& rows = sets[j].rows;
                const auto packed = kernels::collect_level_parallel(rows, r, w);
                for (std::size_t off = 0; off < packed.size(); off += rows.stride()) {
                    found.insert(rows.word_of(std::span(packed).subspan(off, rows.stride())));
                    if (found.size() > cap)
                        throw DomainError("more than " + std::to_string(cap) + " codewords of weight " +
                                          std::to_string(w));
                }
            }
            if (complete(r - 1, j + 1)) return {found.begin(), found.end()};
        }
    }
    return {found.begin(), found.end()};
}

std::vector<std::uint64_t> gram_invariant(const std::vector<BitWord>& words) {
    if (words.empty()) throw DomainError("gram invariant of an empty word list");
    const std::size_t n = words.front().length();
    std::vector<std::uint64_t> gram(n * n, 0);
    for (const auto& w : words) {
        if (w.length() != n) throw DomainError("gram invariant: words have different lengths");
        const auto s = w.support();
        for (auto a : s)
            for (auto b : s) ++gram[(a - 1) * n + (b - 1)];
    }
    std::sort(gram.begin(), gram.end());
    gram.erase(std::unique(gram.begin(), gram.end()), gram.end());
    return gram;
}

}  // namespace sdc
