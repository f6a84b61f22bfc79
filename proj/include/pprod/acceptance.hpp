#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pprod::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    bool report_only;
    std::string detail;
    double seconds;
};

struct Options {
    std::uint64_t seed = 20240601;
    int bilinear_instances = 1000;
};

/// Runs every exit criterion in order. When `progress` is set, one line per
/// criterion is written to it as soon as that criterion finishes.
std::vector<CriterionResult> run_all(const Options& opts = {}, std::ostream* progress = nullptr);

std::string format_line(const CriterionResult& r);

/// Individual criteria, exposed so unit tests can run them selectively.
CriterionResult table_reproduction();
CriterionResult boundary_bracketing();
CriterionResult limit_behavior();
CriterionResult energy_sweep();
CriterionResult parseval_energy_identity();
CriterionResult oracle_equivalence();
CriterionResult bilinear_sweep(std::uint64_t seed, int instances);
CriterionResult counting_identities();
CriterionResult coverage_golden();
CriterionResult report_only_bounds();

}  // namespace pprod::acceptance
