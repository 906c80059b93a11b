#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// command-line front end: alpha sweeps to CSV, a self-check suite with
// per-check margins, single-point parameter reports, and channel diagnostics

namespace entclone::cli {

struct SweepConfig {
    double alpha_min = 0.0;
    double alpha_max = 0.70710678118654752440;
    int steps = 201;            // inclusive uniform grid, so steps >= 2
    double tolerance = 1e-10;   // forwarded to residual-style checks
    std::string out_path;       // empty means standard output
    std::uint64_t seed = 0;     // reproducible Haar sampling
};

// one CSV row: peak fidelity, the nonzero optimal parameters, and the
// correlation measures of the optimal output
struct SweepRecord {
    double alpha;
    double f_max;
    double a6, a16, a11;
    double c_in, c12, c13;
    double i_in, i12, i13, i_pair;
    double negativity;
    double f1_prime;
};

std::string csv_header();

// grid evaluation in parallel, rows returned in grid order; throws on an
// invalid range or step count
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

enum class CheckKind {
    Residual,  // measured deviation, passes when margin <= tolerance
    Floor      // signed slack, passes when margin >= -tolerance
};

struct CheckResult {
    std::string id;
    CheckKind kind;
    double margin;
    double tolerance;
    bool passed;
};

// the cross-module self-check catalog; `tolerance` replaces the default
// bound of every residual check, floors keep their pinned values
std::vector<CheckResult> run_verify(double tolerance, std::uint64_t seed);

// exit codes: 0 success, 1 failed check or unwritable output, 2 usage error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entclone::cli
