#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "b2weight/construction.hpp"
#include "b2weight/core.hpp"
#include "b2weight/entropy_bounds.hpp"
#include "b2weight/oracle.hpp"
#include "b2weight/split_bounds.hpp"

namespace b2weight::cli {

/// Codebook file did not match the expected format; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternalDefect = 3;

inline constexpr std::array<double, 7> kDefaultTableWbars = {0.5, 0.4, 0.345,
                                                             0.2, 0.1, 0.05, 0.02};

struct BoundsRow {
    double wbar;
    double sum_entropy;
    double diff_entropy;
    double prefix_suffix;
    double improved;
    double lower;
};

struct BoundsTable {
    std::vector<BoundsRow> rows;
};

/// One row of all five bounds; thin composition of the library calls so
/// the CLI adds no arithmetic of its own.
BoundsRow compute_bounds_row(double wbar, const OptimizerOptions& opts);
BoundsTable compute_bounds_table(std::span<const double> wbars, const OptimizerOptions& opts);

/// CSV with a fixed header and six-decimal fixed-point values; byte-stable
/// across runs for identical inputs.
std::string to_csv(const BoundsTable& table);

/// Codebook file: a `# b2weight codebook ...` header line followed by one
/// 0/1 string per line, newline-terminated, no trailing blank line.
void write_codebook(std::ostream& os, const Codebook& cb);
Codebook read_codebook(std::istream& is);

int run_table(const std::vector<double>& wbars, const OptimizerOptions& opts,
              const std::string& out_path);
int run_curve(double wbar_min, double wbar_max, double step, const OptimizerOptions& opts,
              const std::string& out_path);
int run_construct(int n, int omega, const std::string& out_path);
int run_verify(const std::string& in_path);
int run_search(int n, int omega, std::uint64_t node_limit);

/// Parses argv and dispatches to the subcommands. Exit codes: 0 ok,
/// 1 verification failure or violation, 2 usage error, 3 internal defect.
int run(int argc, const char* const* argv);

}  // namespace b2weight::cli
