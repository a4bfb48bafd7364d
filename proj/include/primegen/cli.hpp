#pragma once

// Command-line front end: subcommands verify, table, euler, scan, primes.
// Data goes to `out`, diagnostics to `err`.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "primegen/analysis.hpp"

namespace primegen::cli {

enum class OutputFormat { text, csv, json };

/// Exit statuses.
inline constexpr int kAllPrime = 0;
inline constexpr int kCompositeFound = 1;
inline constexpr int kUsageError = 2;

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct EulerRun {
    QuadraticPolynomial base = kEulerPolynomial;
    std::optional<std::int64_t> reflect_at;
    QuadraticPolynomial polynomial = kEulerPolynomial;  // base(n - reflect_at) when reflected
    std::int64_t start = 0;
    std::int64_t run_length = 0;
};

EulerRun euler_run(std::optional<std::int64_t> reflect_at);

// `summary` adds the verification footer to text output; csv and json are unaffected.
void render_family(const FamilyRunReport& report, OutputFormat format, bool summary,
                   std::ostream& out);
void render_aggregate(std::int64_t limit, const AggregateReport& report, OutputFormat format,
                      std::ostream& out);
void render_scan(const std::vector<SeedScanEntry>& entries, OutputFormat format, std::ostream& out);
void render_euler(const EulerRun& run, OutputFormat format, std::ostream& out);
void render_primes(const std::vector<std::uint64_t>& primes, OutputFormat format, std::ostream& out);

/// Parses argv (argv[0] is the program name) and dispatches. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primegen::cli
