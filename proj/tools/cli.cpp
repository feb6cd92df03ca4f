#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace b2weight::cli {

namespace {

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void require_table_wbar(double w) {
    if (!(w > 0.0 && w <= 0.5)) {
        throw std::domain_error("wbar must lie in (0, 0.5], got " + std::to_string(w));
    }
}

int write_text_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitUsage;
    }
    os << text;
    if (!os) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

void print_violation(const B2Violation& violation, const Codebook& cb) {
    const auto [i1, j1] = violation.pair1;
    const auto [i2, j2] = violation.pair2;
    std::cout << "violation: vectors (" << i1 << ", " << j1 << ") and (" << i2 << ", " << j2
              << ") have the same sum\n";
    std::cout << "  " << cb.vectors[i1].to_string() << " + " << cb.vectors[j1].to_string()
              << " = " << violation.sum.to_string() << "\n";
    std::cout << "  " << cb.vectors[i2].to_string() << " + " << cb.vectors[j2].to_string()
              << " = " << violation.sum.to_string() << "\n";
}

}  // namespace

BoundsRow compute_bounds_row(double wbar, const OptimizerOptions& opts) {
    require_table_wbar(wbar);
    const WeightFraction w(wbar);
    return BoundsRow{wbar,
                     bound_sum_entropy(w).value,
                     bound_diff_entropy(w).value,
                     bound_prefix_suffix(w, opts).value,
                     bound_improved(w, opts).value,
                     lower_bound_rate(w).value};
}

BoundsTable compute_bounds_table(std::span<const double> wbars, const OptimizerOptions& opts) {
    BoundsTable table;
    table.rows.reserve(wbars.size());
    for (double w : wbars) table.rows.push_back(compute_bounds_row(w, opts));
    return table;
}

std::string to_csv(const BoundsTable& table) {
    std::string out =
        "wbar,bound_sum_eq3,bound_diff_eq4,bound_prefix_suffix_eq7,bound_improved_eq19,"
        "lower_bound\n";
    for (const BoundsRow& r : table.rows) {
        out += format_fixed(r.wbar);
        out += ',';
        out += format_fixed(r.sum_entropy);
        out += ',';
        out += format_fixed(r.diff_entropy);
        out += ',';
        out += format_fixed(r.prefix_suffix);
        out += ',';
        out += format_fixed(r.improved);
        out += ',';
        out += format_fixed(r.lower);
        out += '\n';
    }
    return out;
}

void write_codebook(std::ostream& os, const Codebook& cb) {
    os << "# b2weight codebook n=" << cb.params.n << " omega=" << cb.params.omega
       << " q=" << cb.size() << " construction=bose\n";
    for (const BinaryVector& v : cb.vectors) {
        os << v.to_string() << "\n";
    }
}

Codebook read_codebook(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        throw ParseError(1, "empty file, expected codebook header");
    }
    int n = -1;
    int omega = -1;
    long long declared = -1;
    {
        std::istringstream hs(header);
        std::string hash, tag1, tag2, token;
        hs >> hash >> tag1 >> tag2;
        if (hash != "#" || tag1 != "b2weight" || tag2 != "codebook") {
            throw ParseError(1, "expected header '# b2weight codebook n=... omega=... q=...'");
        }
        while (hs >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos) {
                throw ParseError(1, "malformed header token '" + token + "'");
            }
            const std::string key = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            try {
                if (key == "n") n = std::stoi(value);
                else if (key == "omega") omega = std::stoi(value);
                else if (key == "q") declared = std::stoll(value);
                else if (key == "construction") { /* informational */ }
                else throw ParseError(1, "unknown header key '" + key + "'");
            } catch (const std::invalid_argument&) {
                throw ParseError(1, "non-numeric header value '" + token + "'");
            } catch (const std::out_of_range&) {
                throw ParseError(1, "header value out of range '" + token + "'");
            }
        }
    }
    if (n <= 0 || omega <= 0 || declared < 0) {
        throw ParseError(1, "header must declare positive n, omega and q");
    }
    if (omega > n) {
        throw ParseError(1, "header declares omega > n");
    }

    Codebook cb{CodeParameters(n, omega), {}};
    std::string line;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (static_cast<int>(line.size()) != n) {
            throw ParseError(lineno, "expected " + std::to_string(n) + " characters, got " +
                                         std::to_string(line.size()));
        }
        for (char c : line) {
            if (c != '0' && c != '1') {
                throw ParseError(lineno, std::string("invalid character '") + c + "'");
            }
        }
        cb.vectors.push_back(BinaryVector::parse(line));
    }
    if (static_cast<long long>(cb.vectors.size()) != declared) {
        throw ParseError(lineno + 1, "header declares q=" + std::to_string(declared) +
                                         " vectors but the body has " +
                                         std::to_string(cb.vectors.size()));
    }
    return cb;
}

int run_table(const std::vector<double>& wbars, const OptimizerOptions& opts,
              const std::string& out_path) {
    const BoundsTable table = compute_bounds_table(wbars, opts);
    return write_text_output(to_csv(table), out_path);
}

int run_curve(double wbar_min, double wbar_max, double step, const OptimizerOptions& opts,
              const std::string& out_path) {
    if (!(wbar_min > 0.0 && wbar_min <= wbar_max && wbar_max <= 0.5)) {
        throw std::domain_error("curve requires 0 < min <= max <= 0.5");
    }
    if (!(step > 0.0)) {
        throw std::domain_error("curve step must be positive");
    }
    std::vector<double> wbars;
    for (long long i = 0;; ++i) {
        const double w = wbar_min + static_cast<double>(i) * step;
        if (w > wbar_max + 1e-12) break;
        wbars.push_back(std::min(w, wbar_max));
    }
    const BoundsTable table = compute_bounds_table(wbars, opts);
    return write_text_output(to_csv(table), out_path);
}

int run_construct(int n, int omega, const std::string& out_path) {
    const Codebook cb = build_codebook(CodeParameters(n, omega));

    // A failed self-check here is a construction defect, never a user error.
    if (const auto violation = verify_b2(cb)) {
        std::cerr << "internal defect: constructed codebook violates the pair-sum property\n";
        print_violation(*violation, cb);
        return kExitInternalDefect;
    }

    std::ostringstream os;
    write_codebook(os, cb);
    return write_text_output(os.str(), out_path);
}

int run_verify(const std::string& in_path) {
    std::ifstream is(in_path, std::ios::binary);
    if (!is) {
        std::cerr << "error: cannot open '" << in_path << "'\n";
        return kExitUsage;
    }
    Codebook cb{CodeParameters(1, 1), {}};
    try {
        cb = read_codebook(is);
    } catch (const ParseError& e) {
        std::cout << "parse error: " << e.what() << "\n";
        return kExitViolation;
    }
    try {
        if (const auto violation = verify_b2(cb)) {
            print_violation(*violation, cb);
            return kExitViolation;
        }
    } catch (const WeightError& e) {
        std::cout << "weight error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const DuplicateError& e) {
        std::cout << "duplicate error: " << e.what() << "\n";
        return kExitViolation;
    }
    std::cout << "ok: " << cb.size() << " vectors, n=" << cb.params.n
              << " omega=" << cb.params.omega << ", all pair sums distinct\n";
    return kExitOk;
}

int run_search(int n, int omega, std::uint64_t node_limit) {
    const SearchResult result = exhaustive_max_b2(n, omega, node_limit);
    std::cout << "n=" << result.n << " omega=" << result.omega << "\n";
    std::cout << "max_size=" << result.max_size
              << (result.exact ? " (exact)" : " (lower bound, node limit reached)") << "\n";
    std::cout << "nodes_explored=" << result.nodes_explored << "\n";
    std::cout << "witness:\n";
    for (const BinaryVector& v : result.witness.vectors) {
        std::cout << v.to_string() << "\n";
    }
    return kExitOk;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Constant-weight binary B2 codebooks: rate bounds, construction, verification"};
    app.require_subcommand(1);

    std::vector<double> wbars(kDefaultTableWbars.begin(), kDefaultTableWbars.end());
    OptimizerOptions opts;
    std::string out_path;
    std::string in_path;
    double wbar_min = 0.0;
    double wbar_max = 0.0;
    double curve_step = 0.0;
    int n = 0;
    int omega = 0;
    std::uint64_t node_limit = kDefaultNodeLimit;

    CLI::App* table = app.add_subcommand("table", "Compute all five rate bounds per wbar as CSV");
    table->add_option("--wbars", wbars, "Weight fractions in (0, 0.5]")->delimiter(',');
    table->add_option("--step", opts.coarse_step, "Coarse grid step for the minimax bounds");
    table->add_option("--refine", opts.refine_rounds, "Local refinement rounds");
    table->add_option("--out", out_path, "Output CSV path (default stdout)");

    CLI::App* curve = app.add_subcommand("curve", "Bound curves on a wbar grid as CSV");
    curve->add_option("--min", wbar_min, "Smallest wbar")->required();
    curve->add_option("--max", wbar_max, "Largest wbar")->required();
    curve->add_option("--step", curve_step, "Grid step in wbar")->required();
    curve->add_option("--out", out_path, "Output CSV path (default stdout)");

    CLI::App* construct =
        app.add_subcommand("construct", "Build and self-verify a constant-weight B2 codebook");
    construct->add_option("--n", n, "Code length (omega must divide n)")->required();
    construct->add_option("--omega", omega, "Hamming weight, at most n/2")->required();
    construct->add_option("--out", out_path, "Output codebook path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Re-check a codebook file");
    verify->add_option("--in", in_path, "Codebook file to verify")->required();

    CLI::App* search =
        app.add_subcommand("search", "Exact maximum codebook size by exhaustive search");
    search->add_option("--n", n, "Code length")->required();
    search->add_option("--omega", omega, "Hamming weight")->required();
    search->add_option("--node-limit", node_limit, "Abort threshold for search nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) return run_table(wbars, opts, out_path);
        if (curve->parsed()) return run_curve(wbar_min, wbar_max, curve_step, opts, out_path);
        if (construct->parsed()) return run_construct(n, omega, out_path);
        if (verify->parsed()) return run_verify(in_path);
        if (search->parsed()) return run_search(n, omega, node_limit);
    } catch (const ScaleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalDefect;
    }
    return kExitUsage;
}

}  // namespace b2weight::cli
