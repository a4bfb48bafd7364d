#include "primegen/cli.hpp"

#include <exception>
#include <iomanip>

#include <CLI11.hpp>
#include <json.hpp>

#include "primegen/primality.hpp"

namespace primegen::cli {
namespace {

using Json = nlohmann::ordered_json;

const char* yes_no(bool flag) { return flag ? "yes" : "no"; }
const char* true_false(bool flag) { return flag ? "true" : "false"; }

Json to_json(const std::optional<FirstFailure>& failure) {
    if (!failure) return nullptr;
    Json j;
    j["n"] = failure->n;
    j["magnitude"] = failure->magnitude;
    j["factor"] = failure->factor ? Json(*failure->factor) : Json(nullptr);
    return j;
}

Json to_json(const EvaluationRecord& record) {
    Json j;
    j["p"] = record.p;
    j["n"] = record.n;
    j["raw"] = record.raw;
    j["magnitude"] = record.magnitude;
    j["is_prime"] = record.is_prime;
    return j;
}

Json to_json(const FamilyRunReport& report) {
    Json j;
    j["seed"] = report.p;
    j["range"] = {{"min", report.range.n_min}, {"max", report.range.n_max},
                  {"count", report.range.count}};
    j["records"] = Json::array();
    for (const auto& record : report.records) j["records"].push_back(to_json(record));
    j["all_prime"] = report.all_prime;
    j["first_failure"] = to_json(report.first_failure);
    return j;
}

void csv_header(std::ostream& out) { out << "p,n,raw,magnitude,is_prime\n"; }

void csv_rows(const FamilyRunReport& report, std::ostream& out) {
    for (const auto& r : report.records)
        out << r.p << ',' << r.n << ',' << r.raw << ',' << r.magnitude << ','
            << true_false(r.is_prime) << '\n';
}

void text_failure(const FirstFailure& failure, std::ostream& out) {
    out << "first failure: n = " << failure.n << ", |value| = " << failure.magnitude;
    if (failure.factor) out << ", smallest factor " << *failure.factor;
    out << '\n';
}

std::string describe(const EulerRun& run) {
    std::string text = to_string(run.polynomial);
    if (run.reflect_at)
        text += " (" + to_string(run.base) + " with n -> n - " + std::to_string(*run.reflect_at) + ")";
    return text;
}

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << '\n';
    return kUsageError;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

EulerRun euler_run(std::optional<std::int64_t> reflect_at) {
    EulerRun run;
    run.reflect_at = reflect_at;
    if (reflect_at) run.polynomial = shift(run.base, *reflect_at);
    run.run_length = run_length(run.polynomial, run.start);
    return run;
}

void render_family(const FamilyRunReport& report, OutputFormat format, bool summary,
                   std::ostream& out) {
    switch (format) {
        case OutputFormat::csv:
            csv_header(out);
            csv_rows(report, out);
            return;
        case OutputFormat::json:
            out << to_json(report).dump(2) << '\n';
            return;
        case OutputFormat::text:
            break;
    }
    out << "p = " << report.p << ", n in [" << report.range.n_min << ", " << report.range.n_max
        << "], " << report.range.count << " values\n";
    out << std::setw(8) << "n" << std::setw(14) << "raw" << std::setw(14) << "magnitude"
        << "  prime\n";
    for (const auto& r : report.records)
        out << std::setw(8) << r.n << std::setw(14) << r.raw << std::setw(14) << r.magnitude
            << "  " << yes_no(r.is_prime) << '\n';
    if (!summary) return;
    out << "all prime: " << yes_no(report.all_prime)
        << "; distinct primes: " << report.distinct_primes.size() << '\n';
    out << "multiplicity:";
    for (const auto& [prime, count] : multiplicity_table(report)) out << ' ' << prime << 'x' << count;
    out << '\n';
    if (report.first_failure) text_failure(*report.first_failure, out);
}

void render_aggregate(std::int64_t limit, const AggregateReport& report, OutputFormat format,
                      std::ostream& out) {
    switch (format) {
        case OutputFormat::csv:
            csv_header(out);
            for (const auto& family : report.reports) csv_rows(family, out);
            return;
        case OutputFormat::json: {
            Json j;
            j["limit"] = limit;
            j["seeds"] = report.seeds;
            j["reports"] = Json::array();
            for (const auto& family : report.reports) j["reports"].push_back(to_json(family));
            j["total_evaluations"] = report.total_evaluations;
            j["total_all_prime"] = report.total_all_prime;
            j["overall_distinct_primes"] = report.overall_distinct_primes;
            out << j.dump(2) << '\n';
            return;
        }
        case OutputFormat::text:
            break;
    }
    out << "twin-prime seeds 2 < p < " << limit << '\n';
    out << std::setw(8) << "p" << std::setw(8) << "count" << std::setw(11) << "all_prime"
        << std::setw(10) << "distinct" << '\n';
    for (const auto& family : report.reports)
        out << std::setw(8) << family.p << std::setw(8) << family.range.count << std::setw(11)
            << yes_no(family.all_prime) << std::setw(10) << family.distinct_primes.size() << '\n';
    out << "total evaluations: " << report.total_evaluations
        << "; all prime: " << yes_no(report.total_all_prime)
        << "; distinct primes: " << report.overall_distinct_primes.size() << '\n';
    for (const auto& family : report.reports)
        if (family.first_failure) {
            out << "p = " << family.p << ": ";
            text_failure(*family.first_failure, out);
        }
}

void render_scan(const std::vector<SeedScanEntry>& entries, OutputFormat format,
                 std::ostream& out) {
    switch (format) {
        case OutputFormat::csv:
            out << "p,count,all_prime,failure_n,failure_magnitude,failure_factor\n";
            for (const auto& e : entries) {
                out << e.p << ',' << e.count << ',' << true_false(e.all_prime) << ',';
                if (e.first_failure) {
                    out << e.first_failure->n << ',' << e.first_failure->magnitude << ',';
                    if (e.first_failure->factor) out << *e.first_failure->factor;
                } else {
                    out << ",,";
                }
                out << '\n';
            }
            return;
        case OutputFormat::json: {
            Json j = Json::array();
            for (const auto& e : entries) {
                Json row;
                row["p"] = e.p;
                row["count"] = e.count;
                row["all_prime"] = e.all_prime;
                row["first_failure"] = to_json(e.first_failure);
                j.push_back(row);
            }
            out << j.dump(2) << '\n';
            return;
        }
        case OutputFormat::text:
            break;
    }
    out << std::setw(8) << "p" << std::setw(8) << "count" << std::setw(11) << "all_prime"
        << std::setw(11) << "failure_n" << std::setw(14) << "magnitude" << std::setw(10)
        << "factor" << '\n';
    for (const auto& e : entries) {
        out << std::setw(8) << e.p << std::setw(8) << e.count << std::setw(11)
            << yes_no(e.all_prime);
        if (e.first_failure) {
            out << std::setw(11) << e.first_failure->n << std::setw(14)
                << e.first_failure->magnitude;
            if (e.first_failure->factor) out << std::setw(10) << *e.first_failure->factor;
        }
        out << '\n';
    }
}

void render_euler(const EulerRun& run, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::csv:
            out << "a,b,c,reflect_at,start,run_length\n"
                << run.polynomial.a << ',' << run.polynomial.b << ',' << run.polynomial.c << ',';
            if (run.reflect_at) out << *run.reflect_at;
            out << ',' << run.start << ',' << run.run_length << '\n';
            return;
        case OutputFormat::json: {
            Json j;
            j["polynomial"] = {{"a", run.polynomial.a}, {"b", run.polynomial.b},
                               {"c", run.polynomial.c}};
            j["reflect_at"] = run.reflect_at ? Json(*run.reflect_at) : Json(nullptr);
            j["start"] = run.start;
            j["run_length"] = run.run_length;
            out << j.dump(2) << '\n';
            return;
        }
        case OutputFormat::text:
            break;
    }
    out << "polynomial: " << describe(run) << '\n'
        << "run length from n = " << run.start << ": " << run.run_length << '\n';
}

void render_primes(const std::vector<std::uint64_t>& primes, OutputFormat format,
                   std::ostream& out) {
    switch (format) {
        case OutputFormat::csv:
            out << "prime\n";
            break;
        case OutputFormat::json:
            out << Json(primes).dump() << '\n';
            return;
        case OutputFormat::text:
            break;
    }
    for (auto p : primes) out << p << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime-generating polynomial toolkit: (1 + 2n)(p - 2n) + 2 over twin primes",
                 "primegen"};
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format: text, csv or json");
    };

    std::optional<std::int64_t> p;
    std::optional<std::int64_t> all_limit;
    std::optional<std::int64_t> reflect_at;
    std::int64_t limit = 0;
    std::uint64_t max_limit = kDefaultScanCeiling;

    auto* verify = app.add_subcommand("verify", "Check that every admissible n gives a prime");
    auto* verify_p = verify->add_option("--p", p, "Lower twin-prime member");
    auto* verify_all_opt = verify->add_option("--all", all_limit, "Verify every seed below this limit");
    verify_p->excludes(verify_all_opt);
    add_format(verify);

    auto* table = app.add_subcommand("table", "Print the evaluation table for one seed");
    table->add_option("--p", p, "Lower twin-prime member")->required();
    add_format(table);

    auto* euler = app.add_subcommand("euler", "Run length of n^2 + n + 41, optionally shifted");
    euler->add_option("--reflect", reflect_at, "Use (n - x)^2 + (n - x) + 41");
    add_format(euler);

    auto* scan = app.add_subcommand("scan", "Find the first failure for each seed below a limit");
    scan->add_option("--limit", limit, "Exclusive upper bound on p")->required();
    scan->add_option("--max-limit", max_limit, "Largest accepted --limit")
        ->capture_default_str();
    add_format(scan);

    auto* primes = app.add_subcommand("primes", "List primes up to a limit");
    primes->add_option("--limit", limit, "Inclusive upper bound")->required();
    add_format(primes);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAllPrime : kUsageError;
    }

    const auto format = parse_output_format(format_name);
    if (!format)
        return usage_error(err, "unknown format '" + format_name + "' (expected text, csv or json)");

    try {
        if (verify->parsed()) {
            if (!p && !all_limit) return usage_error(err, "verify needs one of --p or --all");
            if (all_limit) {
                if (*all_limit < 3) return usage_error(err, "--all must be at least 3");
                const AggregateReport report = verify_all(*all_limit);
                render_aggregate(*all_limit, report, *format, out);
                return report.total_all_prime ? kAllPrime : kCompositeFound;
            }
            const FamilyRunReport report = verify_family(TwinPrimeSeed::make(*p));
            render_family(report, *format, true, out);
            return report.all_prime ? kAllPrime : kCompositeFound;
        }
        if (table->parsed()) {
            const FamilyRunReport report = verify_family(TwinPrimeSeed::make(*p));
            render_family(report, *format, false, out);
            return report.all_prime ? kAllPrime : kCompositeFound;
        }
        if (euler->parsed()) {
            render_euler(euler_run(reflect_at), *format, out);
            return kAllPrime;
        }
        if (scan->parsed()) {
            if (limit < 3 || static_cast<std::uint64_t>(limit) > max_limit)
                return usage_error(err, "--limit must be in [3, " + std::to_string(max_limit) + "]");
            const auto entries = scan_seeds(limit, max_limit);
            render_scan(entries, *format, out);
            for (const auto& e : entries)
                if (!e.all_prime) return kCompositeFound;
            return kAllPrime;
        }
        if (primes->parsed()) {
            if (limit < 0) return usage_error(err, "--limit must be non-negative");
            render_primes(primes_up_to(static_cast<std::uint64_t>(limit)), *format, out);
            return kAllPrime;
        }
    } catch (const SeedError& e) {
        return usage_error(err, std::string("invalid seed: ") + e.what());
    } catch (const std::exception& e) {
        return usage_error(err, e.what());
    }
    return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("primegen");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace primegen::cli
