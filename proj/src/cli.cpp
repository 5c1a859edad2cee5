#include "deltastar/cli.hpp"

#include "deltastar/bounds.hpp"
#include "deltastar/diffsets.hpp"
#include "deltastar/error.hpp"
#include "deltastar/extraction.hpp"
#include "deltastar/io.hpp"
#include "deltastar/primes.hpp"
#include "deltastar/serialize.hpp"
#include "deltastar/tuples.hpp"
#include "deltastar/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <sstream>
#include <vector>

namespace deltastar::cli {

namespace {

using nlohmann::json;

constexpr const char* kEvidenceNote =
    "finite scan: shows at least one representation below N, not infinitely many";

// Everything a command produces; the chosen format picks one rendering.
struct Output {
    json parameters = json::object();
    json result;
    std::string text;
    std::string csv;
    std::string quiet;
};

struct Globals {
    std::string format = "json";
    bool quiet = false;
    unsigned threads = 0;
    std::uint64_t memory_budget_mb = 2048;

    SieveOptions sieve() const {
        SieveOptions options;
        options.threads = threads;
        options.memory_budget_bytes = memory_budget_mb << 20;
        return options;
    }
};

std::string join(const auto& values, const char* sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

Output cmd_primes(const Globals& g, std::uint64_t limit, bool count_only) {
    const PrimeTable table = sieve_primes(limit, g.sieve());
    Output o;
    o.parameters = {{"limit", limit}, {"count_only", count_only}};
    o.result = {{"limit", limit}, {"count", table.count()}};
    o.quiet = std::to_string(table.count()) + "\n";
    if (count_only) {
        o.text = o.quiet;
        o.csv = "count\n" + o.quiet;
        return o;
    }
    const auto primes = table.primes();
    o.result["primes"] = primes;
    o.text = format_integers(primes);
    o.csv = "prime\n" + o.text;
    return o;
}

Output cmd_check(const std::vector<std::uint64_t>& values, const std::string& input) {
    std::vector<std::uint64_t> elements = values;
    if (!input.empty()) {
        const auto from_file = read_tuple(input);
        elements.insert(elements.end(), from_file.begin(), from_file.end());
    }
    const IntegerSet set = IntegerSet::from_unsorted(elements);
    const KTuple tuple(std::vector<std::uint64_t>(set.begin(), set.end()));
    const AdmissibilityVerdict verdict = is_admissible(tuple);

    Output o;
    o.parameters = {{"tuple", values}, {"input", input.empty() ? json(nullptr) : json(input)}};
    o.result = to_json(tuple, verdict);
    o.quiet = verdict.admissible ? "true\n" : "false\n";
    if (verdict.admissible) {
        o.text = "admissible (k=" + std::to_string(tuple.size()) + ")\n";
    } else {
        o.text = "not admissible: every residue class mod " + std::to_string(*verdict.obstruction) +
                 " is occupied\n";
    }
    o.csv = "k,admissible,obstruction\n" + std::to_string(tuple.size()) + "," +
            (verdict.admissible ? "true," : "false," + std::to_string(*verdict.obstruction)) + "\n";
    return o;
}

Output cmd_extract(const std::string& input, std::uint64_t k, const std::string& mode, bool force) {
    const IntegerSet set = read_integer_set(input);
    const ExtractionResult result = extract_admissible_set(set, k, {parse_refine_mode(mode), force});

    Output o;
    o.parameters = {{"input", input}, {"k", k}, {"mode", mode}, {"force", force}};
    o.result = to_json(result);
    o.result["input_size"] = set.size();

    std::ostringstream text;
    text << "# mode=" << mode << " k=" << k << " input_size=" << set.size() << "\n";
    for (const RemovalStep& s : result.trace) {
        text << "# p=" << s.p << " b=" << s.residue << " removed=" << s.removed << " remaining=" << s.remaining
             << (s.skipped ? " skipped" : "") << "\n";
    }
    text << "# tuple: " << join(result.tuple, " ") << "\n";
    text << format_integers(result.survivors.values());
    o.text = text.str();

    std::ostringstream csv;
    csv << "p,b,removed,remaining,skipped\n";
    for (const RemovalStep& s : result.trace) {
        csv << s.p << "," << s.residue << "," << s.removed << "," << s.remaining << ","
            << (s.skipped ? "true" : "false") << "\n";
    }
    o.csv = csv.str();
    o.quiet = format_integers(result.tuple.elements());
    return o;
}

Output cmd_bound(std::uint64_t c, unsigned decimals, std::size_t digit_budget) {
    BoundOptions options;
    options.digit_budget = digit_budget;
    const BoundReport report = delta_r_bound(c, options);
    const std::string threshold = threshold_decimal(report, decimals);

    Output o;
    o.parameters = {{"C", c}, {"decimals", decimals}, {"digit_budget", digit_budget}};
    o.result = to_json(report, decimals);
    o.quiet = report.r_min.get_str() + "\n";
    o.text = "C=" + std::to_string(c) + " threshold=" + threshold + " r_min=" + report.r_min.get_str() +
             (report.exact() ? "" : " (enclosure)") + "\n";
    o.csv = "C,r_min,threshold_decimal,exact\n" + std::to_string(c) + "," + report.r_min.get_str() + "," +
            threshold + "," + (report.exact() ? "true" : "false") + "\n";
    return o;
}

Output cmd_delta(const std::string& input) {
    const IntegerSet set = read_integer_set(input);
    const IntegerSet diffs = difference_set(set);

    Output o;
    o.parameters = {{"input", input}};
    o.result = {{"input_size", set.size()}, {"count", diffs.size()},
                {"differences", std::vector<std::uint64_t>(diffs.begin(), diffs.end())}};
    o.text = format_integers(diffs.values());
    o.quiet = o.text;
    o.csv = "difference\n" + o.text;
    return o;
}

Output cmd_pairs(const Globals& g, std::uint64_t d, std::uint64_t n, std::size_t max_pairs) {
    ScanOptions options{max_pairs, g.threads, g.sieve()};
    const WitnessReport report = prime_pairs_with_difference(d, n, options);

    Output o;
    o.parameters = {{"d", d}, {"N", n}, {"max_pairs", max_pairs}};
    o.result = to_json(report);
    o.result["evidence"] = kEvidenceNote;
    o.quiet = std::to_string(report.count) + "\n";
    std::ostringstream text;
    text << "# " << report.count << " prime pairs with difference " << d << " up to " << n
         << (report.truncated() ? " (list truncated)" : "") << "\n";
    std::ostringstream csv;
    csv << "q,q_plus_d\n";
    for (const auto& [q, q2] : report.pairs) {
        text << q << " " << q2 << "\n";
        csv << q << "," << q2 << "\n";
    }
    o.text = text.str();
    o.csv = csv.str();
    return o;
}

Output cmd_realized(const Globals& g, std::uint64_t n, std::uint64_t max_d, bool gaps) {
    ScanOptions options;
    options.threads = g.threads;
    options.sieve = g.sieve();
    const IntegerSet realized = realized_differences(n, max_d, options);

    std::vector<std::uint64_t> evens;
    std::vector<std::uint64_t> missing_even;
    for (std::uint64_t d = 2; d <= max_d; d += 2) {
        (realized.contains(d) ? evens : missing_even).push_back(d);
    }

    Output o;
    o.parameters = {{"N", n}, {"max_d", max_d}, {"gaps", gaps}};
    o.result = {{"N", n},
                {"max_d", max_d},
                {"count", realized.size()},
                {"differences", std::vector<std::uint64_t>(realized.begin(), realized.end())},
                {"missing_even", missing_even},
                {"evidence", kEvidenceNote}};
    std::string gap_line;
    if (gaps) {
        json gap_json = {{"max_gap", realized.empty() ? json(nullptr) : json(max_gap(realized, max_d))}};
        gap_json["max_gap_even"] = evens.empty() ? json(nullptr) : json(max_gap(IntegerSet::from_sorted(evens), max_d));
        gap_line = "# max_gap=" + gap_json["max_gap"].dump() + " max_gap_even=" + gap_json["max_gap_even"].dump() + "\n";
        o.result["gaps"] = gap_json;
    }
    o.quiet = std::to_string(realized.size()) + "\n";
    o.text = "# " + std::to_string(realized.size()) + " differences <= " + std::to_string(max_d) +
             " realized by primes <= " + std::to_string(n) + "\n" + gap_line + format_integers(realized.values());
    o.csv = "d\n" + format_integers(realized.values());
    return o;
}

Output cmd_scan(const Globals& g, const std::string& input, std::uint64_t n, std::uint64_t max_hits) {
    const KTuple tuple = read_tuple(input);
    TupleScanOptions options;
    options.threads = g.threads;
    options.sieve = g.sieve();
    const auto hits = scan_tuple_witnesses(tuple, n, max_hits, options);

    Output o;
    o.parameters = {{"tuple", input}, {"N", n}, {"min_hits", max_hits}};
    json hits_json = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "n,offsets,primes\n";
    for (const auto& hit : hits) {
        hits_json.push_back(to_json(hit));
        text << hit.n << ": " << join(hit.primes, " ") << "\n";
        csv << hit.n << "," << join(hit.offsets, ";") << "," << join(hit.primes, ";") << "\n";
    }
    o.result = {{"tuple", std::vector<std::uint64_t>(tuple.begin(), tuple.end())},
                {"N", n},
                {"count", hits.size()},
                {"hits", std::move(hits_json)},
                {"evidence", kEvidenceNote}};
    o.quiet = std::to_string(hits.size()) + "\n";
    o.text = "# " + std::to_string(hits.size()) + " hits with n <= " + std::to_string(n) + "\n" + text.str();
    o.csv = csv.str();
    return o;
}

Output cmd_demo(const Globals& g, const std::string& input, std::uint64_t c, std::uint64_t n) {
    const IntegerSet set = read_integer_set(input);
    TupleScanOptions options;
    options.threads = g.threads;
    options.sieve = g.sieve();
    const DeltaDemoReport report = delta_r_star_demo(set, c, n, options);

    Output o;
    o.parameters = {{"input", input}, {"C", c}, {"N", n}};
    o.result = to_json(report);
    o.result["evidence"] = kEvidenceNote;
    o.quiet = std::to_string(report.realized_difference) + "\n";
    std::ostringstream text;
    text << "tuple (k=" << report.k << "): " << join(report.tuple, " ") << "\n"
         << "first hit n=" << report.hit.n << ": " << join(report.hit.primes, " ") << "\n"
         << "realized difference " << report.realized_difference << " = " << report.witness_pair.second << " - "
         << report.witness_pair.first << "\n";
    o.text = text.str();
    o.csv = "realized_difference,q,q2,n\n" + std::to_string(report.realized_difference) + "," +
            std::to_string(report.witness_pair.first) + "," + std::to_string(report.witness_pair.second) + "," +
            std::to_string(report.hit.n) + "\n";
    return o;
}

void report_error(const Globals& g, const std::string& command, const Error& e, std::ostream& err) {
    if (g.format != "json") {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return;
    }
    json body = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"command", command}};
    if (const auto* failed = dynamic_cast<const ExtractionFailed*>(&e)) {
        body["steps"] = to_json(failed->trace());
        body["survivors"] = std::vector<std::uint64_t>(failed->survivors().begin(), failed->survivors().end());
    }
    if (const auto* none = dynamic_cast<const NoWitness*>(&e)) {
        body["tuple"] = std::vector<std::uint64_t>(none->tuple().begin(), none->tuple().end());
    }
    err << json{{"error", body}}.dump() << "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Admissible k-tuples, residue-class extraction and prime-difference evidence", "deltastar"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g.format, "Output rendering")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Print only the primary scalar");
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--memory-budget-mb", g.memory_budget_mb, "Largest prime table to build")->capture_default_str();

    std::function<Output()> action;

    std::uint64_t limit = 0;
    bool count_only = false;
    auto* primes = app.add_subcommand("primes", "List primes up to a limit");
    primes->add_option("--limit", limit)->required();
    primes->add_flag("--count-only", count_only, "Report pi(limit) without the list");
    primes->callback([&] { action = [&] { return cmd_primes(g, limit, count_only); }; });

    std::vector<std::uint64_t> tuple_values;
    std::string check_input;
    auto* check = app.add_subcommand("check", "Test a k-tuple for admissibility");
    check->add_option("values", tuple_values, "Tuple elements");
    check->add_option("--input", check_input, "Read tuple elements from a file");
    check->callback([&] {
        if (tuple_values.empty() && check_input.empty()) throw CLI::ValidationError("check", "no tuple given");
        action = [&] { return cmd_check(tuple_values, check_input); };
    });

    std::string extract_input;
    std::uint64_t k = 0;
    std::string mode = "strict";
    bool force = false;
    auto* extract = app.add_subcommand("extract", "Extract an admissible k-tuple from a set");
    extract->add_option("--input", extract_input)->required();
    extract->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    extract->add_option("--mode", mode)->check(CLI::IsMember({"strict", "optimized"}))->capture_default_str();
    extract->add_flag("--force", force, "Attempt extraction below the required cardinality");
    extract->callback([&] { action = [&] { return cmd_extract(extract_input, k, mode, force); }; });

    std::uint64_t c = 0;
    unsigned decimals = 2;
    std::size_t digit_budget = BoundOptions{}.digit_budget;
    auto* bound = app.add_subcommand("bound", "Least r with r >= C * prod_{p<=C} p/(p-1)");
    bound->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    bound->add_option("--decimals", decimals)->capture_default_str();
    bound->add_option("--digit-budget", digit_budget)->capture_default_str();
    bound->callback([&] { action = [&] { return cmd_bound(c, decimals, digit_budget); }; });

    std::string delta_input;
    auto* delta = app.add_subcommand("delta", "Positive pairwise differences of a set");
    delta->add_option("--input", delta_input)->required();
    delta->callback([&] { action = [&] { return cmd_delta(delta_input); }; });

    std::uint64_t d = 0;
    std::uint64_t pairs_n = 0;
    std::size_t max_pairs = ScanOptions{}.max_pairs;
    auto* pairs = app.add_subcommand("pairs", "Prime pairs (q, q+d) up to N");
    pairs->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    pairs->add_option("--n", pairs_n)->required();
    pairs->add_option("--max-pairs", max_pairs)->capture_default_str();
    pairs->callback([&] { action = [&] { return cmd_pairs(g, d, pairs_n, max_pairs); }; });

    std::uint64_t realized_n = 0;
    std::uint64_t max_d = 0;
    bool gaps = false;
    auto* realized = app.add_subcommand("realized", "Differences up to max-d realized by primes up to N");
    realized->add_option("--n", realized_n)->required();
    realized->add_option("--max-d", max_d)->required()->check(CLI::PositiveNumber);
    realized->add_flag("--gaps", gaps, "Report the largest gap among realized differences");
    realized->callback([&] { action = [&] { return cmd_realized(g, realized_n, max_d, gaps); }; });

    std::string scan_input;
    std::uint64_t scan_n = 0;
    std::uint64_t min_hits = 10;
    auto* scan = app.add_subcommand("scan", "Find n with at least two primes among n + h_i");
    scan->add_option("--tuple", scan_input)->required();
    scan->add_option("--n", scan_n)->required();
    scan->add_option("--min-hits", min_hits, "Stop after this many hits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->callback([&] { action = [&] { return cmd_scan(g, scan_input, scan_n, min_hits); }; });

    std::string demo_input;
    std::uint64_t demo_c = 0;
    std::uint64_t demo_n = 0;
    auto* demo = app.add_subcommand("demo", "Extract a C-tuple and find a prime-pair witness in its differences");
    demo->add_option("--input", demo_input)->required();
    demo->add_option("--c", demo_c)->required()->check(CLI::PositiveNumber);
    demo->add_option("--n", demo_n)->required();
    demo->callback([&] { action = [&] { return cmd_demo(g, demo_input, demo_c, demo_n); }; });

    std::vector<const char*> argv{"deltastar"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    Output o;
    try {
        o = action();
    } catch (const Error& e) {
        report_error(g, command, e, err);
        return exit_domain_error;
    } catch (const std::exception& e) {
        report_error(g, command, Error(ErrorCode::invalid_argument, e.what()), err);
        return exit_domain_error;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (g.quiet) {
        out << o.quiet;
    } else if (g.format == "text") {
        out << o.text;
    } else if (g.format == "csv") {
        out << o.csv;
    } else {
        const json envelope = {
            {"command", command}, {"parameters", o.parameters}, {"result", o.result}, {"elapsed_ms", elapsed}};
        out << envelope.dump() << "\n";
    }
    return exit_ok;
}

}  // namespace deltastar::cli
