#include "matchbound/cli.hpp"

#include "matchbound/bounds.hpp"
#include "matchbound/count.hpp"
#include "matchbound/generators.hpp"
#include "matchbound/json_io.hpp"
#include "matchbound/lemmas.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace matchbound::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string joined;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) joined += ' ';
        joined += args[i];
    }
    return joined;
}

// Options shared by every subcommand that needs a graph or a family.
struct GraphSource {
    std::string file;
    std::string family;
    int n = 0;
    int a = 0;
    int b = 0;
    std::string rs;
    double p = 0.0;
    std::uint64_t seed = 0;
    CLI::Option* p_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
};

void add_family_options(CLI::App& sub, GraphSource& src) {
    sub.add_option("--family", src.family,
                   "graph family: complete | complete_bipartite | bipartite_union | "
                   "erdos_renyi | random_bipartite");
    sub.add_option("--n", src.n, "vertex count (complete, erdos_renyi) or per-side size "
                                 "(random_bipartite)");
    sub.add_option("--a", src.a, "left part size (complete_bipartite)");
    sub.add_option("--b", src.b, "right part size (complete_bipartite)");
    sub.add_option("--rs", src.rs, "comma-separated block sizes (bipartite_union), e.g. 2,3");
    src.p_opt = sub.add_option("--p", src.p, "edge probability (random families)");
    src.seed_opt = sub.add_option("--seed", src.seed, "seed (required for random families)");
}

void add_input_option(CLI::App& sub, GraphSource& src) {
    sub.add_option("input", src.file, "edge-list file (alternative to --family)");
}

std::vector<int> parse_block_sizes(const std::string& rs) {
    std::vector<int> blocks;
    std::istringstream in(rs);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            blocks.push_back(value);
        } catch (const std::exception&) {
            throw UsageError("--rs: '" + token + "' is not an integer");
        }
    }
    if (blocks.empty()) throw UsageError("--rs: no block sizes given");
    return blocks;
}

CampaignSpec spec_from_source(const GraphSource& src, int samples) {
    const auto family = family_from_name(src.family);
    if (!family) throw UsageError("unknown family '" + src.family + "'");
    CampaignSpec spec;
    spec.family = *family;
    spec.samples = samples;
    switch (*family) {
        case Family::complete:
            spec.n = src.n;
            break;
        case Family::complete_bipartite:
            spec.a = src.a;
            spec.b = src.b;
            break;
        case Family::bipartite_union:
            spec.block_sizes = parse_block_sizes(src.rs);
            break;
        case Family::erdos_renyi:
        case Family::random_bipartite:
            spec.n = src.n;
            if (src.p_opt == nullptr || src.p_opt->count() == 0) {
                throw UsageError("--p is required for random families");
            }
            if (src.seed_opt == nullptr || src.seed_opt->count() == 0) {
                throw UsageError("--seed is required for random families; pick one and the "
                                 "run becomes reproducible");
            }
            spec.p = src.p;
            spec.seed = src.seed;
            break;
    }
    return spec;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct LoadedGraph {
    Graph graph;
    std::string id;
};

LoadedGraph load_graph(const GraphSource& src) {
    if (!src.file.empty() && !src.family.empty()) {
        throw UsageError("give an input file or --family, not both");
    }
    if (!src.file.empty()) {
        return {parse_graph(read_file(src.file)), src.file};
    }
    if (!src.family.empty()) {
        const CampaignSpec spec = spec_from_source(src, 1);
        return {campaign_graph(spec, 0), campaign_graph_id(spec, 0)};
    }
    throw UsageError("need an input file or --family");
}

std::string sanitize_for_filename(const std::string& s) {
    std::string out;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        out += ok ? c : '_';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

std::vector<VerificationRecord> run_campaign(const CampaignSpec& spec, double tolerance,
                                             int limit, int threads) {
    const int samples = spec.samples;
    std::vector<VerificationRecord> records(static_cast<std::size_t>(samples));
    std::atomic<int> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
        while (true) {
            const int i = cursor.fetch_add(1);
            if (i >= samples) break;
            try {
                records[static_cast<std::size_t>(i)] =
                    verify_graph(campaign_graph(spec, i), tolerance, limit,
                                 campaign_graph_id(spec, i));
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                break;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads - 1));
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

std::string record_text_line(const VerificationRecord& r) {
    std::ostringstream line;
    line << r.graph_id << " n=" << r.n << " count=" << r.count.str() << " bound_log=";
    if (r.bound_log.is_zero) {
        line << "-inf";
    } else {
        line << fmt_g(r.bound_log.log);
    }
    line << " slack=" << fmt_g(r.slack);
    if (r.violated) {
        line << " VIOLATED";
    } else if (r.tight) {
        line << " tight";
    }
    return line.str();
}

struct CommonFlags {
    bool json = false;
    std::string out_file;
};

void emit_report(const std::string& text, const CommonFlags& flags, std::ostream& out) {
    out << text;
    if (!flags.out_file.empty()) write_text_file(flags.out_file, text);
}

int cmd_count(const GraphSource& src, int limit, const CommonFlags& flags,
              const std::string& command, std::ostream& out) {
    const LoadedGraph loaded = load_graph(src);
    const BigCount count = count_perfect_matchings(loaded.graph, limit);
    if (flags.json) {
        nlohmann::json j;
        j["tool"] = kToolName;
        j["version"] = kVersion;
        j["command"] = command;
        j["id"] = loaded.id;
        j["n"] = loaded.graph.vertex_count();
        j["count"] = count.str();
        emit_report(j.dump(2) + "\n", flags, out);
    } else {
        emit_report(count.str() + "\n", flags, out);
    }
    return kExitSuccess;
}

int cmd_bound(const GraphSource& src, const CommonFlags& flags, const std::string& command,
              std::ostream& out) {
    const LoadedGraph loaded = load_graph(src);
    const LogValue bound = degree_bound_log(loaded.graph);
    // Keep the linear value printable: exp stays finite well past this,
    // but past ~1e15 the %.6f rendering is all noise.
    const bool small = !bound.is_zero && bound.log < 34.5;
    if (flags.json) {
        nlohmann::json j;
        j["tool"] = kToolName;
        j["version"] = kVersion;
        j["command"] = command;
        j["id"] = loaded.id;
        j["n"] = loaded.graph.vertex_count();
        j["bound_zero"] = bound.is_zero;
        j["bound_log"] = bound.is_zero ? nlohmann::json(nullptr) : nlohmann::json(bound.log);
        j["bound"] = small ? nlohmann::json(bound.linear()) : nlohmann::json(nullptr);
        emit_report(j.dump(2) + "\n", flags, out);
        return kExitSuccess;
    }
    std::string text;
    if (bound.is_zero) {
        text = "0\n";
    } else {
        if (small) text += fmt_fixed6(bound.linear()) + "\n";
        text += "log " + fmt_g(bound.log) + "\n";
    }
    emit_report(text, flags, out);
    return kExitSuccess;
}

int cmd_verify(const GraphSource& src, int samples, double tolerance, int limit, int threads,
               const CommonFlags& flags, const std::string& command, std::ostream& out,
               std::ostream& err) {
    if (samples < 1) throw UsageError("--samples must be >= 1");
    if (tolerance < 0) throw UsageError("--tol must be >= 0");
    threads = std::clamp(threads, 1, 64);

    std::vector<VerificationRecord> records;
    std::optional<CampaignSpec> spec;
    const auto start = std::chrono::steady_clock::now();
    if (!src.file.empty()) {
        if (!src.family.empty()) throw UsageError("give an input file or --family, not both");
        records.push_back(
            verify_graph(parse_graph(read_file(src.file)), tolerance, limit, src.file));
    } else if (!src.family.empty()) {
        spec = spec_from_source(src, samples);
        records = run_campaign(*spec, tolerance, limit, threads);
    } else {
        throw UsageError("need an input file or --family");
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const double wall_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();

    const std::optional<BigCount> expected =
        spec ? expected_tight_count(*spec) : std::nullopt;
    int violations = 0;
    int tight_failures = 0;
    int tight_count = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    bool any_finite_slack = false;
    for (const auto& r : records) {
        if (r.violated) ++violations;
        if (r.tight) ++tight_count;
        if (std::isfinite(r.slack)) {
            any_finite_slack = true;
            min_slack = std::min(min_slack, r.slack);
        }
        if (expected && (!r.tight || r.count != *expected)) ++tight_failures;
    }

    // A violated record would disprove the bound; preserve the evidence.
    for (const auto& r : records) {
        if (!r.violated) continue;
        const auto stamp = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count();
        const std::string path =
            "violation-" + sanitize_for_filename(r.graph_id) + "-" + std::to_string(stamp) +
            ".graph";
        Graph g;
        if (spec) {
            // Recover the sample index from the id suffix when present.
            int index = 0;
            const auto pos = r.graph_id.rfind("sample=");
            if (pos != std::string::npos) index = std::stoi(r.graph_id.substr(pos + 7));
            g = campaign_graph(*spec, index);
        } else {
            g = parse_graph(read_file(src.file));
        }
        write_text_file(path, "# " + std::string(kToolName) + " " + command + "\n# " +
                                  r.graph_id + "\n" + serialize_graph(g));
        err << "violation recorded: " << r.graph_id << " -> " << path << "\n";
    }

    const bool failed = violations > 0 || tight_failures > 0;
    if (flags.json) {
        nlohmann::json j;
        j["tool"] = kToolName;
        j["version"] = kVersion;
        j["command"] = command;
        if (spec) j["spec"] = to_json(*spec);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : records) rows.push_back(to_json(r));
        j["records"] = rows;
        nlohmann::json summary;
        summary["samples"] = records.size();
        summary["violations"] = violations;
        summary["tight"] = tight_count;
        summary["tight_expected"] = static_cast<bool>(expected);
        summary["tight_failures"] = tight_failures;
        summary["min_slack"] = any_finite_slack ? nlohmann::json(min_slack) : nlohmann::json(nullptr);
        summary["wall_ms"] = wall_ms;
        j["summary"] = summary;
        emit_report(j.dump(2) + "\n", flags, out);
    } else {
        std::string text;
        for (const auto& r : records) text += record_text_line(r) + "\n";
        std::ostringstream summary;
        summary << "samples=" << records.size() << " violations=" << violations
                << " tight=" << tight_count;
        if (expected) summary << " tight_failures=" << tight_failures;
        if (any_finite_slack) summary << " min_slack=" << fmt_g(min_slack);
        summary << " wall_ms=" << fmt_g(wall_ms);
        text += summary.str() + "\n";
        emit_report(text, flags, out);
    }
    if (failed) {
        err << "verification failed: " << violations << " violation(s), " << tight_failures
            << " tightness failure(s)\n";
        return kExitCheckFailed;
    }
    return kExitSuccess;
}

int cmd_lemmas(long long r_max, long long theta_max, const CommonFlags& flags,
               const std::string& command, std::ostream& out, std::ostream& err) {
    const SweepReport report = sweep_lemmas(r_max, theta_max);
    const nlohmann::json checks = to_json(report.checks);
    if (flags.json) {
        nlohmann::json j;
        j["tool"] = kToolName;
        j["version"] = kVersion;
        j["command"] = command;
        j["r_max"] = report.r_max;
        j["theta_max"] = report.theta_max;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : report.rows) rows.push_back(to_json(row));
        j["rows"] = rows;
        j["checks"] = checks;
        emit_report(j.dump(2) + "\n", flags, out);
    } else {
        std::string text = "r margin concavity_gap deficit envelope theta\n";
        for (const auto& row : report.rows) {
            std::ostringstream line;
            line << row.r << " " << fmt_g(row.margin) << " " << fmt_g(row.concavity_gap) << " "
                 << fmt_g(row.deficit) << " " << fmt_g(row.envelope) << " " << fmt_g(row.theta);
            text += line.str() + "\n";
        }
        for (const auto& [name, ok] : checks.items()) {
            text += "check " + name + ": " + (ok.get<bool>() ? "ok" : "FAIL") + "\n";
        }
        emit_report(text, flags, out);
    }
    if (!report.checks.hard_pass()) {
        err << "lemma sweep failed\n";
        return kExitCheckFailed;
    }
    return kExitSuccess;
}

int cmd_gen(const GraphSource& src, int sample, const CommonFlags& flags, std::ostream& out) {
    if (src.family.empty()) throw UsageError("--family is required");
    if (sample < 0) throw UsageError("--sample must be >= 0");
    const CampaignSpec spec = spec_from_source(src, sample + 1);
    const Graph g = campaign_graph(spec, sample);
    const std::string text =
        "# " + campaign_graph_id(spec, sample) + "\n" + serialize_graph(g);
    if (!flags.out_file.empty()) {
        write_text_file(flags.out_file, text);
    } else {
        out << text;
    }
    return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact perfect-matching counts and degree-based upper bounds"};
    app.name(kToolName);
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GraphSource count_src, bound_src, verify_src, gen_src;
    CommonFlags count_flags, bound_flags, verify_flags, lemmas_flags, gen_flags;
    int count_limit = kDefaultCountLimit;
    int verify_limit = kDefaultCountLimit;
    int verify_samples = 1;
    int verify_threads = 1;
    double verify_tol = kDefaultTolerance;
    long long lemmas_r_max = 100;
    long long lemmas_theta_max = 0;
    int gen_sample = 0;

    CLI::App* count_cmd = app.add_subcommand("count", "count perfect matchings exactly");
    add_input_option(*count_cmd, count_src);
    add_family_options(*count_cmd, count_src);
    count_cmd->add_option("--max-vertices", count_limit,
                          "refuse graphs larger than this (hard cap 64)");
    count_cmd->add_flag("--json", count_flags.json, "emit a JSON report");
    count_cmd->add_option("--out", count_flags.out_file, "also write the report to this file");

    CLI::App* bound_cmd = app.add_subcommand("bound", "degree-based upper bound");
    add_input_option(*bound_cmd, bound_src);
    add_family_options(*bound_cmd, bound_src);
    bound_cmd->add_flag("--json", bound_flags.json, "emit a JSON report");
    bound_cmd->add_option("--out", bound_flags.out_file, "also write the report to this file");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "count, bound, and compare over a campaign");
    add_input_option(*verify_cmd, verify_src);
    add_family_options(*verify_cmd, verify_src);
    verify_cmd->add_option("--samples", verify_samples, "number of sampled graphs");
    verify_cmd->add_option("--tol", verify_tol, "tightness/violation tolerance");
    verify_cmd->add_option("--max-vertices", verify_limit,
                           "refuse graphs larger than this (hard cap 64)");
    verify_cmd->add_option("--threads", verify_threads, "worker threads (records stay ordered)");
    verify_cmd->add_flag("--json", verify_flags.json, "emit a JSON report");
    verify_cmd->add_option("--out", verify_flags.out_file, "also write the report to this file");

    CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "sweep the scalar inequalities");
    lemmas_cmd->add_option("--r-max", lemmas_r_max, "largest row index r (default 100)");
    lemmas_cmd->add_option("--theta-max", lemmas_theta_max,
                           "check the Stirling remainder up to this k (default --r-max)");
    lemmas_cmd->add_flag("--json", lemmas_flags.json, "emit a JSON report");
    lemmas_cmd->add_option("--out", lemmas_flags.out_file, "also write the report to this file");

    CLI::App* gen_cmd = app.add_subcommand("gen", "write a family graph as an edge list");
    add_family_options(*gen_cmd, gen_src);
    gen_cmd->add_option("--sample", gen_sample, "campaign sample index (default 0)");
    gen_cmd->add_option("--out", gen_flags.out_file, "write here instead of stdout");

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());

    const std::string command = join_args(args);
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (app.got_subcommand(count_cmd)) {
            return cmd_count(count_src, count_limit, count_flags, command, out);
        }
        if (app.got_subcommand(bound_cmd)) {
            return cmd_bound(bound_src, bound_flags, command, out);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(verify_src, verify_samples, verify_tol, verify_limit,
                              verify_threads, verify_flags, command, out, err);
        }
        if (app.got_subcommand(lemmas_cmd)) {
            return cmd_lemmas(lemmas_r_max, lemmas_theta_max, lemmas_flags, command, out, err);
        }
        if (app.got_subcommand(gen_cmd)) {
            return cmd_gen(gen_src, gen_sample, gen_flags, out);
        }
        err << kToolName << ": no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    } catch (const UsageError& e) {
        err << kToolName << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << kToolName << ": parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << kToolName << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace matchbound::cli
