#include "sdcodes/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "sdcodes/codes.hpp"
#include "sdcodes/enumerators.hpp"
#include "sdcodes/kernels.hpp"
#include "sdcodes/search.hpp"
#include "sdcodes/shadow.hpp"
#include "sdcodes/weights.hpp"

namespace sdc::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
}

std::string support_text(const BitWord& w) {
    std::string s;
    for (auto i : w.support()) s += (s.empty() ? "" : ",") + std::to_string(i);
    return s;
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError("not a rational number: '" + text + "'");
    }
}

struct CodeInput {
    std::string spec_path;
    std::size_t index = 1;
    std::string matrix_path;

    void attach(CLI::App* cmd) {
        auto* spec = cmd->add_option("--spec", spec_path, "four-circulant spec file (rA rB per line)")
                         ->check(CLI::ExistingFile);
        cmd->add_option("--index", index, "1-indexed spec line")->check(CLI::PositiveNumber);
        auto* matrix = cmd->add_option("--matrix", matrix_path, "generator matrix file")->check(CLI::ExistingFile);
        spec->excludes(matrix);
    }

    Code load() const {
        if (!matrix_path.empty()) return Code(parse_matrix_file(read_file(matrix_path)));
        if (spec_path.empty()) throw CLI::RequiredError("--spec or --matrix");
        const auto specs = parse_spec_file(read_file(spec_path));
        if (index > specs.size())
            throw DomainError(spec_path + " has " + std::to_string(specs.size()) + " specs, asked for #" +
                              std::to_string(index));
        return four_circulant(specs[index - 1]);
    }
};

std::string code_line(const Code& c) {
    std::ostringstream os;
    const auto cls = parity_class(c);
    if (cls == ParityClass::not_self_dual)
        os << "not self-dual";
    else
        os << "self-dual, " << to_string(cls);
    os << ", n=" << c.n() << ", k=" << c.k();
    return os.str();
}

struct FamilyInput {
    std::size_t n = 0;
    std::string type = "I";
    std::size_t min_weight = 0;
    std::vector<std::size_t> shadow_zero;
    std::vector<std::string> params;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "code length")->required();
        cmd->add_option("--type", type, "I (self-dual) or II (doubly even)");
        cmd->add_option("--min-weight", min_weight, "pin A_i = 0 for 0 < i < this");
        cmd->add_option("--shadow-zero", shadow_zero, "pin B_i = 0 (type I)")->delimiter(',');
        cmd->add_option("--param", params, "NAME:SOURCE:INDEX[:SCALE], SOURCE one of gleason, A, B");
    }

    EnumeratorFamily solve() const {
        FamilyConstraints fc;
        fc.min_weight = min_weight;
        fc.shadow_zero = shadow_zero;
        if (!params.empty()) {
            std::vector<ParameterDef> defs;
            for (const auto& p : params) {
                std::vector<std::string> parts;
                std::stringstream ss(p);
                for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
                if (parts.size() < 3 || parts.size() > 4) throw CLI::ValidationError("--param", "bad spec '" + p + "'");
                ParameterDef d;
                d.name = parts[0];
                if (parts[1] == "gleason")
                    d.source = ParameterDef::Source::gleason;
                else if (parts[1] == "A")
                    d.source = ParameterDef::Source::code;
                else if (parts[1] == "B")
                    d.source = ParameterDef::Source::shadow;
                else
                    throw CLI::ValidationError("--param", "unknown source '" + parts[1] + "'");
                try {
                    d.index = std::stoul(parts[2]);
                } catch (const std::exception&) {
                    throw CLI::ValidationError("--param", "bad index '" + parts[2] + "'");
                }
                if (parts.size() == 4) d.scale = parse_rational(parts[3]);
                defs.push_back(std::move(d));
            }
            fc.parameters = std::move(defs);
        }
        return solve_family(n, parse_gleason_type(type), fc);
    }
};

std::string describe(const ParameterDef& d) {
    std::string src;
    switch (d.source) {
        case ParameterDef::Source::gleason: src = "a_"; break;
        case ParameterDef::Source::code: src = "A_"; break;
        case ParameterDef::Source::shadow: src = "B_"; break;
    }
    src += std::to_string(d.index);
    if (d.scale != 1) src = format_rational(d.scale) + " " + src;
    return d.name + " = " + src;
}

int classify_parse_error(const CLI::ParseError& e, const CLI::App& app, std::ostream& out, std::ostream& err) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for binary self-dual codes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    int threads = 0;
    app.add_option("--seed", seed, "random seed");
    app.add_option("--budget", budget, "max codewords visited by enumerations (0 = unlimited)");
    app.add_option("--threads", threads, "worker thread cap (0 = runtime default)")->check(CLI::NonNegativeNumber);

    std::function<void()> action;

    // build
    CodeInput build_in;
    std::string build_output;
    bool build_print = false;
    auto* build = app.add_subcommand("build", "construct a code and summarize it");
    build_in.attach(build);
    build->add_option("--output", build_output, "write the generator matrix here");
    build->add_flag("--print", build_print, "print the generator matrix");
    build->callback([&] {
        action = [&] {
            const Code c = build_in.load();
            std::size_t lo = c.n(), hi = 0;
            for (const auto& r : c.generator().row_list()) {
                lo = std::min(lo, r.weight());
                hi = std::max(hi, r.weight());
            }
            out << "n=" << c.n() << " k=" << c.k() << "\n";
            out << "row weights " << lo;
            if (hi != lo) out << ".." << hi;
            out << "\n";
            if (build_print) out << serialize_matrix(c.generator());
            if (!build_output.empty()) write_file(build_output, serialize_matrix(c.generator()));
        };
    });

    // check
    CodeInput check_in;
    bool check_bound = false;
    std::optional<std::size_t> check_d;
    auto* check = app.add_subcommand("check", "self-duality, parity class and the Mallows-Sloane bound");
    check_in.attach(check);
    check->add_flag("--bound", check_bound, "print the Mallows-Sloane bound (8 | n)");
    check->add_option("--d", check_d, "claimed minimum weight to test for extremality");
    check->callback([&] {
        action = [&] {
            const Code c = check_in.load();
            out << code_line(c) << "\n";
            if (check_bound || check_d) {
                if (c.n() % 8) throw DomainError("the Mallows-Sloane bound needs length divisible by 8");
                out << "bound d <= " << mallows_sloane(c.n()) << "\n";
            }
            if (check_d) out << (is_extremal(c.n(), *check_d) ? "extremal" : "not extremal") << "\n";
        };
    });

    // minweight
    CodeInput mw_in;
    std::optional<std::size_t> mw_early, mw_certify, mw_find;
    std::size_t mw_max_level = 0;
    std::uint64_t mw_iterations = 1000;
    std::size_t mw_message_weight = 2;
    bool mw_serial = false;
    auto* mw = app.add_subcommand("minweight", "certified minimum weight, or a low-weight witness with --find");
    mw_in.attach(mw);
    mw->add_option("--early-stop", mw_early, "stop at the first codeword lighter than this");
    mw->add_option("--certify-at", mw_certify, "stop once the lower bound reaches this");
    mw->add_option("--max-level", mw_max_level, "highest enumeration level (0 = no cap)");
    mw->add_option("--find", mw_find, "random information-set search for a word of weight <= this");
    mw->add_option("--iterations", mw_iterations, "iterations for --find");
    mw->add_option("--message-weight", mw_message_weight, "message weights tried per iteration for --find");
    mw->add_flag("--serial", mw_serial, "use the serial reference kernels");
    mw->callback([&] {
        action = [&] {
            const Code c = mw_in.load();
            if (mw_find) {
                LowWeightOptions lo;
                lo.iterations = mw_iterations;
                lo.seed = seed;
                lo.message_weight = mw_message_weight;
                lo.parallel = !mw_serial;
                const auto w = find_low_weight(c, *mw_find, lo);
                if (!w) {
                    out << "no codeword of weight <= " << *mw_find << " found\n";
                    return;
                }
                out << "witness weight " << w->weight() << "\n" << support_text(*w) << "\n";
                return;
            }
            MinWeightOptions o;
            o.budget = budget;
            o.early_stop = mw_early;
            o.certify_at = mw_certify;
            o.max_level = mw_max_level;
            o.parallel = !mw_serial;
            const auto cert = min_weight(c, o);
            out << cert.summary() << "\n";
            out << "level " << cert.level << " visited " << cert.visited << "\n";
            if (cert.witness) out << "witness " << support_text(*cert.witness) << "\n";
        };
    });

    // distribution
    CodeInput dist_in;
    std::size_t dist_cap = kDefaultBruteForceCap;
    auto* dist = app.add_subcommand("distribution", "weight distribution by exhaustive enumeration");
    dist_in.attach(dist);
    dist->add_option("--cap", dist_cap, "refuse codes of dimension above this");
    dist->callback([&] {
        action = [&] { out << weight_distribution_bruteforce(dist_in.load(), dist_cap).to_text(); };
    });

    // enumerate-weight
    CodeInput ew_in;
    std::size_t ew_weight = 0, ew_cap = 1'000'000;
    bool ew_count_only = false;
    auto* ew = app.add_subcommand("enumerate-weight", "all codewords of one weight");
    ew_in.attach(ew);
    ew->add_option("--weight", ew_weight, "target weight")->required();
    ew->add_option("--cap", ew_cap, "fail if more words than this exist");
    ew->add_flag("--count-only", ew_count_only, "print only the count");
    ew->callback([&] {
        action = [&] {
            const auto words = enumerate_weight(ew_in.load(), ew_weight, ew_cap, budget);
            out << "count " << words.size() << "\n";
            if (!ew_count_only)
                for (const auto& w : words) out << support_text(w) << "\n";
        };
    });

    // gram-invariant
    CodeInput gi_in;
    std::optional<std::size_t> gi_weight;
    std::size_t gi_cap = 1'000'000;
    auto* gi = app.add_subcommand("gram-invariant", "distinct entries of M^T M over the words of one weight");
    gi_in.attach(gi);
    gi->add_option("--weight", gi_weight, "weight of the words (default: minimum weight)");
    gi->add_option("--cap", gi_cap, "fail if more words than this exist");
    gi->callback([&] {
        action = [&] {
            const Code c = gi_in.load();
            std::size_t w;
            if (gi_weight) {
                w = *gi_weight;
            } else {
                MinWeightOptions o;
                o.budget = budget;
                const auto cert = min_weight(c, o);
                if (cert.kind != MinWeightCertificate::Kind::exact)
                    throw DomainError("minimum weight not certified within budget; pass --weight");
                w = cert.value;
            }
            const auto words = enumerate_weight(c, w, gi_cap, budget);
            out << "weight " << w << " words " << words.size() << "\n";
            std::string line;
            for (auto v : gram_invariant(words)) line += (line.empty() ? "" : " ") + std::to_string(v);
            out << line << "\n";
        };
    });

    // gleason
    auto* gleason = app.add_subcommand("gleason", "Gleason bases, fits and enumerator families");
    gleason->require_subcommand(1);

    std::size_t basis_n = 0;
    std::string basis_type = "I";
    auto* basis = gleason->add_subcommand("basis", "basis polynomials");
    basis->add_option("--n", basis_n, "code length")->required();
    basis->add_option("--type", basis_type, "I or II");
    basis->callback([&] {
        action = [&] {
            for (const auto& p : gleason_basis(basis_n, parse_gleason_type(basis_type))) out << p.to_string() << "\n";
        };
    });

    std::string fit_path, fit_type = "I";
    std::size_t fit_n = 0;
    auto* fit = gleason->add_subcommand("fit", "Gleason coefficients of a weight distribution");
    fit->add_option("--distribution", fit_path, "\"weight count\" lines")->required()->check(CLI::ExistingFile);
    fit->add_option("--n", fit_n, "code length")->required();
    fit->add_option("--type", fit_type, "I or II");
    fit->callback([&] {
        action = [&] {
            const auto d = WeightDistribution::parse(read_file(fit_path), fit_n);
            const auto g = fit_coefficients(d, parse_gleason_type(fit_type));
            for (std::size_t j = 0; j < g.a.size(); ++j) out << "a_" << j << " = " << format_rational(g.a[j]) << "\n";
        };
    });

    FamilyInput sf_in;
    std::optional<std::size_t> sf_max_degree;
    auto* sf = gleason->add_subcommand("solve-family", "enumerator family under minimum-weight and shadow pins");
    sf_in.attach(sf);
    sf->add_option("--max-degree", sf_max_degree, "print coefficients up to this degree (default n/2)");
    sf->callback([&] {
        action = [&] {
            const auto fam = sf_in.solve();
            const std::size_t top = sf_max_degree.value_or(fam.n / 2);
            out << "# parameters";
            if (fam.definitions.empty()) out << " none";
            out << "\n";
            for (const auto& d : fam.definitions) out << describe(d) << "\n";
            out << "# code\n" << fam.render_code(top);
            if (fam.type == GleasonType::I) out << "# shadow\n" << fam.render_shadow(top);
        };
    });

    FamilyInput sub_in;
    std::vector<std::string> sub_values;
    bool sub_shadow = false;
    auto* sub = gleason->add_subcommand("substitute", "evaluate a family at given parameter values");
    sub_in.attach(sub);
    sub->add_option("--value", sub_values, "NAME=VALUE")->required();
    sub->add_flag("--shadow", sub_shadow, "print the shadow distribution instead");
    sub->callback([&] {
        action = [&] {
            const auto fam = sub_in.solve();
            std::map<std::string, Rational> values;
            for (const auto& v : sub_values) {
                const auto eq = v.find('=');
                if (eq == std::string::npos) throw CLI::ValidationError("--value", "expected NAME=VALUE, got " + v);
                values[v.substr(0, eq)] = parse_rational(v.substr(eq + 1));
            }
            out << (sub_shadow ? substitute_shadow(fam, values) : substitute(fam, values)).to_text();
        };
    });

    // shadow
    CodeInput sh_in;
    bool sh_distribution = false;
    std::size_t sh_cap = kDefaultBruteForceCap;
    auto* sh = app.add_subcommand("shadow", "C0 / shadow decomposition of a singly even self-dual code");
    sh_in.attach(sh);
    sh->add_flag("--distribution", sh_distribution, "also enumerate the shadow's weight distribution");
    sh->add_option("--cap", sh_cap, "dimension cap for --distribution");
    sh->callback([&] {
        action = [&] {
            const Code c = sh_in.load();
            const auto dec = shadow_decompose(c);
            out << "C0 n=" << dec.c0.n() << " k=" << dec.c0.k() << "\n";
            out << "t1 " << support_text(dec.t1) << "\n";
            out << "t2 " << support_text(dec.t2) << "\n";
            out << "t3 " << support_text(dec.t3) << "\n";
            if (sh_distribution) out << "# shadow\n" << coset_distribution_bruteforce(c, dec.t1, sh_cap).to_text();
        };
    });

    // neighbors
    CodeInput nb_in;
    std::string nb_prefix;
    auto* nb = app.add_subcommand("neighbors", "the two doubly even neighbors C0 + t1, C0 + t3");
    nb_in.attach(nb);
    nb->add_option("--output-prefix", nb_prefix, "write PREFIX1.txt and PREFIX2.txt");
    nb->callback([&] {
        action = [&] {
            const Code c = nb_in.load();
            const auto [first, second] = doubly_even_neighbors(c);
            int i = 1;
            for (const Code* x : {&first, &second}) {
                out << "neighbor " << i << ": " << code_line(*x) << ", intersection dimension "
                    << intersection_dimension(c, *x) << "\n";
                if (!nb_prefix.empty())
                    write_file(nb_prefix + std::to_string(i) + ".txt", serialize_matrix(x->generator()));
                ++i;
            }
        };
    });

    // neighbor-x
    CodeInput nx_in;
    std::string nx_support, nx_output;
    auto* nx = app.add_subcommand("neighbor-x", "the neighbor <C intersect x^perp, x>");
    nx_in.attach(nx);
    nx->add_option("--support", nx_support, "1-indexed support of x")->required()->check(CLI::ExistingFile);
    nx->add_option("--output", nx_output, "write the neighbor's generator matrix here");
    nx->callback([&] {
        action = [&] {
            const Code c = nx_in.load();
            const BitWord x = parse_support(read_file(nx_support), c.n());
            const Code d = neighbor_via_vector(c, x);
            out << code_line(d) << "\n";
            const std::size_t dim = intersection_dimension(c, d);
            out << (is_neighbor(c, d) ? "neighbor of input" : "not a neighbor of input") << ", intersection dimension "
                << dim << "\n";
            if (!nx_output.empty()) write_file(nx_output, serialize_matrix(d.generator()));
        };
    });

    // search
    SearchConfig sc;
    auto* se = app.add_subcommand("search", "seeded random search for four-circulant self-dual codes");
    se->add_option("--m", sc.m, "circulant order (n = 4m)")->required();
    se->add_option("--target-d", sc.target_d, "required minimum weight")->required();
    se->add_flag("--doubly-even-only", sc.doubly_even_only, "screen for row weight 0 mod 4");
    se->add_option("--max-candidates", sc.max_candidates, "number of specs drawn");
    se->add_option("--checkpoint-every", sc.checkpoint_every, "candidates per batch and checkpoint");
    se->add_option("--count-cap", sc.count_cap, "cap on weight-target words counted per code");
    se->add_option("--count-budget", sc.count_budget, "visit budget for counting weight-target words");
    se->add_option("--output", sc.output_path, "append-only campaign file (spec format)");
    se->add_flag("--resume", sc.resume, "continue from the last checkpoint in --output");
    se->callback([&] {
        action = [&] {
            sc.seed = seed;
            sc.budget = budget;
            const auto result = run_campaign(sc);
            for (const auto& r : result.records) out << format_record(r);
            out << result.stats.to_text({});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return classify_parse_error(e, app, out, err);
    }

    if (threads > 0) kernels::set_thread_limit(threads);
    try {
        if (action) action();
        out.flush();
        return 0;
    } catch (const CLI::ParseError& e) {
        return classify_parse_error(e, app, out, err);
    } catch (const DomainError& e) {
        out.flush();
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sdc::cli
