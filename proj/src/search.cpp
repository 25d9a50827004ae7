#include "sdcodes/search.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sdcodes/enumerators.hpp"
#include "sdcodes/random.hpp"

namespace sdc {

namespace {

// Codes this small get their full distribution by brute force.
constexpr std::size_t kFullDistributionMaxK = 20;

enum class Status { not_self_dual, row_weight, min_weight, uncertified, accepted };

struct Outcome {
    Status status = Status::not_self_dual;
    SearchRecord record;
};

Outcome evaluate(const SearchConfig& cfg, std::uint64_t draw) {
    Outcome out;
    auto rng = stream_rng(cfg.seed, draw);
    out.record.draw = draw;
    out.record.spec = random_spec(cfg.m, rng);

    const auto verdict = screen(out.record.spec, cfg.doubly_even_only);
    if (!verdict.accepted) {
        out.status = circulant_condition_holds(out.record.spec) ? Status::row_weight : Status::not_self_dual;
        return out;
    }

    const Code code = four_circulant(out.record.spec);
    MinWeightOptions opts;
    opts.budget = cfg.budget;
    opts.early_stop = cfg.target_d;
    opts.certify_at = cfg.target_d;
    opts.parallel = false;
    out.record.certificate = min_weight(code, opts);
    const auto& cert = out.record.certificate;
    if (cert.witness && cert.witness->weight() < cfg.target_d) {
        out.status = Status::min_weight;
        return out;
    }
    if (cert.value < cfg.target_d) {
        out.status = Status::uncertified;
        return out;
    }
    out.status = Status::accepted;

    std::optional<WeightDistribution> dist;
    if (code.k() <= kFullDistributionMaxK) {
        dist = weight_distribution_bruteforce(code);
        out.record.target_count = dist->counts[cfg.target_d];
    } else {
        try {
            out.record.target_count = Integer(enumerate_weight(code, cfg.target_d, cfg.count_cap, cfg.count_budget).size());
        } catch (const DomainError&) {
            // Too many words or too expensive: fall back to a weaker key.
        }
    }
    out.record.key = dedupe_key(out.record, dist);
    return out;
}

std::string checkpoint_line(const CampaignStats& s) {
    std::ostringstream os;
    os << "# checkpoint drawn=" << s.drawn << " screen_passed=" << s.screen_passed
       << " rejected_not_self_dual=" << s.rejected_not_self_dual << " rejected_row_weight=" << s.rejected_row_weight
       << " rejected_min_weight=" << s.rejected_min_weight << " rejected_uncertified=" << s.rejected_uncertified
       << " accepted=" << s.accepted << "\n";
    return os.str();
}

std::map<std::string, std::string> parse_fields(const std::string& line, std::size_t skip) {
    std::map<std::string, std::string> out;
    std::istringstream is(line.substr(skip));
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

// Restores records and counters from an existing campaign file.
void load_checkpoint(const std::string& path, std::vector<SearchRecord>& records, CampaignStats& stats) {
    std::ifstream in(path);
    if (!in) return;
    std::vector<SearchRecord> pending;
    std::optional<SearchRecord> current;
    std::string line;
    const std::string rec_tag = "# record ";
    const std::string cp_tag = "# checkpoint ";
    while (std::getline(in, line)) {
        if (line.rfind(rec_tag, 0) == 0) {
            auto f = parse_fields(line, rec_tag.size());
            SearchRecord r;
            r.draw = std::stoull(f.at("draw"));
            r.certificate.kind = f.at("kind") == "exact" ? MinWeightCertificate::Kind::exact
                                                        : MinWeightCertificate::Kind::lower_bound;
            r.certificate.value = std::stoul(f.at("d"));
            if (f.count("count")) r.target_count = Integer(f.at("count"));
            if (f.count("same_key_as")) r.same_key_as = std::stoull(f.at("same_key_as"));
            r.key = f.at("key");
            current = std::move(r);
        } else if (line.rfind(cp_tag, 0) == 0) {
            auto f = parse_fields(line, cp_tag.size());
            stats.drawn = std::stoull(f.at("drawn"));
            stats.screen_passed = std::stoull(f.at("screen_passed"));
            stats.rejected_not_self_dual = std::stoull(f.at("rejected_not_self_dual"));
            stats.rejected_row_weight = std::stoull(f.at("rejected_row_weight"));
            stats.rejected_min_weight = std::stoull(f.at("rejected_min_weight"));
            stats.rejected_uncertified = std::stoull(f.at("rejected_uncertified"));
            stats.accepted = std::stoull(f.at("accepted"));
            for (auto& r : pending) records.push_back(std::move(r));
            pending.clear();
        } else if (current && !line.empty() && line.front() != '#') {
            auto specs = parse_spec_file(line);
            if (specs.size() == 1) {
                current->spec = specs.front();
                pending.push_back(std::move(*current));
            }
            current.reset();
        }
    }
}

}  // namespace

void SearchConfig::validate() const {
    if (m == 0) throw DomainError("circulant order m must be positive");
    if (target_d == 0 || target_d % 2) throw DomainError("target minimum weight must be a positive even number");
    if (checkpoint_every == 0) throw DomainError("checkpoint interval must be positive");
    if (doubly_even_only) {
        if ((4 * m) % 8)
            throw DomainError("doubly even self-dual codes need length divisible by 8; 4m = " + std::to_string(4 * m));
        if (target_d % 4) throw DomainError("doubly even codes have weights divisible by 4");
        if (target_d > mallows_sloane(4 * m))
            throw DomainError("target " + std::to_string(target_d) + " exceeds the bound " +
                              std::to_string(mallows_sloane(4 * m)) + " for length " + std::to_string(4 * m));
    }
}

FourCirculantSpec random_spec(std::size_t m, std::mt19937_64& rng) {
    FourCirculantSpec spec{BitWord(m), BitWord(m)};
    spec.ra.set(0);
    for (std::size_t i = 1; i < m; ++i) spec.ra.set(i, random_bit(rng));
    for (std::size_t i = 0; i < m; ++i) spec.rb.set(i, random_bit(rng));
    return spec;
}

ScreenResult screen(const FourCirculantSpec& spec, bool doubly_even_only) {
    if (!circulant_condition_holds(spec)) return {false, "A A^T + B B^T != I"};
    const std::size_t row_weight = 1 + spec.ra.weight() + spec.rb.weight();
    if (doubly_even_only && row_weight % 4)
        return {false, "generator row weight " + std::to_string(row_weight) + " is not divisible by 4"};
    return {true, ""};
}

std::string dedupe_key(const SearchRecord& record, const std::optional<WeightDistribution>& distribution) {
    std::ostringstream os;
    if (record.target_count) {
        os << "count:" << *record.target_count;
    } else if (distribution) {
        os << "dist:";
        bool first = true;
        for (std::size_t i = 0; i < distribution->counts.size(); ++i) {
            if (distribution->counts[i] == 0) continue;
            os << (first ? "" : ",") << i << ':' << distribution->counts[i];
            first = false;
        }
    } else {
        os << "cert:" << (record.certificate.kind == MinWeightCertificate::Kind::exact ? "exact" : "lb")
           << record.certificate.value << ";spec:" << record.spec.ra.to_string() << '-' << record.spec.rb.to_string();
    }
    return os.str();
}

std::string format_record(const SearchRecord& r) {
    std::ostringstream os;
    os << "# record draw=" << r.draw
       << " kind=" << (r.certificate.kind == MinWeightCertificate::Kind::exact ? "exact" : "lower-bound")
       << " d=" << r.certificate.value;
    if (r.target_count) os << " count=" << *r.target_count;
    if (r.same_key_as) os << " same_key_as=" << *r.same_key_as;
    os << " key=" << r.key << "\n";
    os << r.spec.ra.to_string() << ' ' << r.spec.rb.to_string() << "\n";
    return os.str();
}

std::string CampaignStats::to_text(const std::vector<SearchRecord>& records) const {
    std::ostringstream os;
    os << "candidates_drawn " << drawn << "\n";
    os << "screen_passed " << screen_passed << "\n";
    os << "screen_pass_rate " << std::fixed << std::setprecision(6)
       << (drawn ? static_cast<double>(screen_passed) / static_cast<double>(drawn) : 0.0) << "\n";
    os << "rejected_not_self_dual " << rejected_not_self_dual << "\n";
    os << "rejected_row_weight " << rejected_row_weight << "\n";
    os << "rejected_min_weight " << rejected_min_weight << "\n";
    os << "rejected_uncertified " << rejected_uncertified << "\n";
    os << "accepted " << accepted << "\n";
    os << "distinct_keys " << distinct_keys << "\n";
    for (const auto& r : records) os << "key " << r.draw << ' ' << r.key << "\n";
    return os.str();
}

CampaignResult run_campaign(const SearchConfig& cfg) {
    cfg.validate();
    CampaignResult result;
    auto& stats = result.stats;
    std::map<std::string, std::uint64_t> first_with_key;

    std::ofstream out;
    if (!cfg.output_path.empty()) {
        if (cfg.resume && std::filesystem::exists(cfg.output_path)) {
            load_checkpoint(cfg.output_path, result.records, stats);
            out.open(cfg.output_path, std::ios::app);
        } else {
            out.open(cfg.output_path, std::ios::trunc);
            out << "# search m=" << cfg.m << " target_d=" << cfg.target_d
                << " doubly_even_only=" << (cfg.doubly_even_only ? 1 : 0) << " seed=" << cfg.seed << "\n";
        }
        if (!out) throw DomainError("cannot write campaign file " + cfg.output_path);
    }
    for (const auto& r : result.records) first_with_key.try_emplace(r.key, r.draw);

    for (std::uint64_t base = stats.drawn; base < cfg.max_candidates; base += cfg.checkpoint_every) {
        const std::uint64_t count = std::min(cfg.checkpoint_every, cfg.max_candidates - base);
        std::vector<Outcome> batch(count);
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_limit())
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
            batch[static_cast<std::size_t>(i)] = evaluate(cfg, base + static_cast<std::uint64_t>(i));

        std::string chunk;
        for (auto& o : batch) {
            ++stats.drawn;
            switch (o.status) {
                case Status::not_self_dual: ++stats.rejected_not_self_dual; continue;
                case Status::row_weight: ++stats.rejected_row_weight; continue;
                case Status::min_weight: ++stats.rejected_min_weight; break;
                case Status::uncertified: ++stats.rejected_uncertified; break;
                case Status::accepted: ++stats.accepted; break;
            }
            ++stats.screen_passed;
            if (o.status != Status::accepted) continue;
            auto [it, fresh] = first_with_key.try_emplace(o.record.key, o.record.draw);
            if (!fresh) o.record.same_key_as = it->second;
            chunk += format_record(o.record);
            result.records.push_back(std::move(o.record));
        }
        if (out) {
            out << chunk << checkpoint_line(stats);
            out.flush();
        }
    }
    stats.distinct_keys = first_with_key.size();

    if (!cfg.output_path.empty()) {
        std::ofstream side(cfg.output_path + ".stats", std::ios::trunc);
        side << stats.to_text(result.records);
    }
    return result;
}

}  // namespace sdc
