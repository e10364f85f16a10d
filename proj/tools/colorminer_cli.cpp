#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "colorminer/colored_string.hpp"
#include "colorminer/cross_check.hpp"
#include "colorminer/errors.hpp"
#include "colorminer/miner_skip.hpp"
#include "colorminer/miner_sweep.hpp"
#include "colorminer/trace.hpp"

namespace {

using namespace colorminer;

// exit codes: 0 ok, 1 verification mismatch, 2 I/O or format error,
// 3 bad argument

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

// empty path means stdout
int emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    out << content;
    return out ? 0 : 2;
}

std::vector<int32_t> split_list(const std::string& csv) {
    std::vector<int32_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

struct MineArgs {
    std::string input, output, color;
    std::string engine = "skip";
    std::string filter = "full";
    bool filter_given = false;
    int32_t max_delay = -1;
    bool counts = false;
    bool tokens = false;
    bool debug_trace = false;
};

int cmd_mine(const MineArgs& a) {
    std::string filter = a.filter;
    if (a.engine == "fast") {
        if (a.filter_given && a.filter == "full") {
            std::cerr << "engine 'fast' requires --filter real\n";
            return 3;
        }
        filter = "real";
    }

    std::string doc;
    if (!read_file(a.input, doc)) {
        std::cerr << "cannot read " << a.input << "\n";
        return 2;
    }
    ColoredString cs;
    try {
        cs = parse_colored(doc, a.tokens);
    } catch (const Error& e) {
        std::cerr << a.input << ": " << e.what() << "\n";
        return 2;
    }

    int32_t y = -1;
    for (int32_t i = 0; i < cs.gamma; ++i)
        if (cs.color_tokens[i] == a.color) y = i;
    if (y < 0) {
        std::cerr << "unknown color token '" << a.color << "'\n";
        return 3;
    }
    if (a.max_delay > cs.size()) {
        std::cerr << "--max-delay " << a.max_delay << " exceeds n = "
                  << cs.size() << "\n";
        return 3;
    }

    MineOptions opts;
    opts.real_filter = filter == "real";
    opts.fast_bound = a.engine == "fast";
    opts.max_delay = a.max_delay;
    if (a.debug_trace) opts.debug_trace = &std::cerr;

    std::vector<ReportEntry> rows;
    try {
        rows = a.engine == "base" ? sweep_minimal(cs, y, opts)
                                  : skipping_mine(cs, y, opts);
    } catch (const Error& e) {
        std::cerr << "mining failed: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream os;
    for (const ReportEntry& e : rows) {
        os << e.delay << '\t' << render_pattern(cs, e.pattern);
        if (a.counts) os << '\t' << e.occurrence_count;
        os << '\n';
    }
    return emit(a.output, os.str());
}

struct GenArgs {
    std::string output;
    int32_t n = 0, sigma = 0, gamma = 0;
    uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
    ColoredString cs;
    try {
        cs = gen_random(a.n, a.sigma, a.gamma, a.seed);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    // compact when every token is one character; the renderer falls back
    // to tokenized lines for wider alphabets on its own
    return emit(a.output, render_colored(cs, false));
}

struct ConvertArgs {
    std::string input, output;
};

int cmd_convert(const ConvertArgs& a) {
    std::string csv;
    if (!read_file(a.input, csv)) {
        std::cerr << "cannot read " << a.input << "\n";
        return 2;
    }
    IngestResult res;
    try {
        res = ingest_trace(parse_trace_csv(csv));
    } catch (const Error& e) {
        std::cerr << a.input << ": " << e.what() << "\n";
        return 2;
    }
    const int rc = emit(a.output, render_colored(res.cs, false));
    if (rc != 0) return rc;
    std::cout << render_mapping(res);
    return 0;
}

struct CheckArgs {
    int64_t count = 500;
    uint64_t seed = 0;
    bool sabotage = false;
};

int cmd_check(const CheckArgs& a) {
    const CrossCheckResult res =
        run_corpus(a.count, a.seed, a.sabotage, std::cout);
    std::cout << "checked " << res.instances << " instances, "
              << res.comparisons << " comparisons, " << res.mismatches
              << " mismatches\n";
    return res.mismatches == 0 ? 0 : 1;
}

struct BenchArgs {
    std::string ns = "1000";
    std::string sigmas = "2";
    std::string gammas = "2";
    int32_t reps = 5;
    uint64_t seed = 0;
};

bool same_report(const std::vector<ReportEntry>& a,
                 const std::vector<ReportEntry>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].delay != b[i].delay || a[i].pattern != b[i].pattern ||
            a[i].occurrence_count != b[i].occurrence_count)
            return false;
    return true;
}

// all timed configurations mine with the real-occurrence filter so the
// three engines produce the same report and stay comparable
int cmd_bench(const BenchArgs& a) {
    const auto ns = split_list(a.ns);
    const auto sigmas = split_list(a.sigmas);
    const auto gammas = split_list(a.gammas);
    if (ns.empty() || sigmas.empty() || gammas.empty() || a.reps < 1) {
        std::cerr << "bench needs non-empty --n/--sigma/--gamma and "
                     "--reps >= 1\n";
        return 3;
    }

    MineOptions real, fast;
    real.real_filter = true;
    fast.real_filter = true;
    fast.fast_bound = true;

    const auto timed = [](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(t1 - t0).count();
    };

    SplitMix64 rng(a.seed);
    bool mismatch = false;
    std::cout << "n\tsigma\tgamma\tbase\tskip\treal\tbase/skip\tskip/real"
                 "\tbase/real\n";
    for (int32_t n : ns)
        for (int32_t sigma : sigmas)
            for (int32_t gamma : gammas) {
                const ColoredString cs =
                    gen_random(n, sigma, gamma, rng.next());
                std::vector<ReportEntry> rb, rs, rf;
                double tb = 0, ts = 0, tf = 0;
                for (int32_t rep = 0; rep < a.reps; ++rep) {
                    tb += timed([&] { rb = sweep_minimal(cs, 0, real); });
                    ts += timed([&] { rs = skipping_mine(cs, 0, real); });
                    tf += timed([&] { rf = skipping_mine(cs, 0, fast); });
                }
                tb /= a.reps;
                ts /= a.reps;
                tf /= a.reps;
                if (!same_report(rb, rs) || !same_report(rb, rf)) {
                    std::cerr << "engines disagree at n=" << n
                              << " sigma=" << sigma << " gamma=" << gamma
                              << "\n";
                    mismatch = true;
                }
                const auto ratio = [](double x, double y) {
                    return y > 0 ? x / y : 0.0;
                };
                std::cout << n << '\t' << sigma << '\t' << gamma << '\t'
                          << tb << '\t' << ts << '\t' << tf << '\t'
                          << ratio(tb, ts) << '\t' << ratio(ts, tf) << '\t'
                          << ratio(tb, tf) << '\n';
            }
    return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimally delay-unique substring miner for colored strings"};
    app.require_subcommand(1);

    MineArgs mine;
    CLI::App* m = app.add_subcommand(
        "mine", "mine minimal uniform-delay substrings from a file");
    m->add_option("--input", mine.input, "two-line colored-string file")
        ->required();
    m->add_option("--output", mine.output, "report path (default stdout)");
    m->add_option("--color", mine.color, "color token to predict")
        ->required();
    m->add_option("--engine", mine.engine, "mining engine")
        ->check(CLI::IsMember({"base", "skip", "fast"}));
    m->add_option("--filter", mine.filter, "report filter")
        ->check(CLI::IsMember({"full", "real"}));
    m->add_option("--max-delay", mine.max_delay, "drop delays above this");
    m->add_flag("--counts", mine.counts, "append occurrence counts");
    m->add_flag("--tokens", mine.tokens, "whitespace-tokenized input");
    m->add_flag("--debug-trace", mine.debug_trace,
                "write one line per queue extraction to stderr");

    GenArgs gen;
    CLI::App* g = app.add_subcommand(
        "gen", "generate a deterministic random colored string");
    g->add_option("--n", gen.n, "length")->required();
    g->add_option("--sigma", gen.sigma, "symbol alphabet size")->required();
    g->add_option("--gamma", gen.gamma, "color alphabet size")->required();
    g->add_option("--seed", gen.seed, "generator seed");
    g->add_option("--output", gen.output, "output path (default stdout)");

    ConvertArgs conv;
    CLI::App* c = app.add_subcommand(
        "convert", "turn a CSV simulation trace into a colored string");
    c->add_option("--input", conv.input, "trace CSV")->required();
    c->add_option("--output", conv.output,
                  "colored-string path (default stdout)");

    CheckArgs check;
    CLI::App* k = app.add_subcommand(
        "check", "cross-validate all engines against the brute-force "
                 "reference on a random corpus");
    k->add_option("--count", check.count, "number of instances");
    k->add_option("--seed", check.seed, "corpus seed");
    k->add_flag("--sabotage", check.sabotage,
                "deliberately corrupt one engine to prove the harness bites");

    BenchArgs bench;
    CLI::App* b = app.add_subcommand(
        "bench", "time the engines over a size grid and verify they agree");
    b->add_option("--n", bench.ns, "comma-separated lengths");
    b->add_option("--sigma", bench.sigmas, "comma-separated alphabet sizes");
    b->add_option("--gamma", bench.gammas, "comma-separated color counts");
    b->add_option("--reps", bench.reps, "repetitions per cell");
    b->add_option("--seed", bench.seed, "instance seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    mine.filter_given = m->count("--filter") > 0;
    try {
        if (app.got_subcommand(m)) return cmd_mine(mine);
        if (app.got_subcommand(g)) return cmd_gen(gen);
        if (app.got_subcommand(c)) return cmd_convert(conv);
        if (app.got_subcommand(k)) return cmd_check(check);
        if (app.got_subcommand(b)) return cmd_bench(bench);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 3;
}
