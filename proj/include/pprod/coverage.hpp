#pragma once

// Exhaustive solvability of p_1 ... p_k * s = a (mod m) over all reduced
// classes a, with primes p_i <= x coprime to m and s an almost-prime <= y.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pprod/modular.hpp"

namespace pprod {

/// Integers s in [2, y] with at most `ell` prime factors counted with
/// multiplicity. ell = 1 gives exactly the primes.
class AlmostPrimeTable {
public:
    AlmostPrimeTable(u64 y, unsigned ell, std::vector<u64> values)
        : y_(y), ell_(ell), values_(std::move(values)) {}

    u64 y() const noexcept { return y_; }
    unsigned ell() const noexcept { return ell_; }
    std::span<const u64> values() const noexcept { return values_; }
    bool contains(u64 s) const;

private:
    u64 y_;
    unsigned ell_;
    std::vector<u64> values_;
};

/// Omega(n) for every n <= limit, by a smallest-prime-factor sieve.
std::vector<unsigned char> omega_table(u64 limit);

AlmostPrimeTable almost_primes(u64 y, unsigned ell);

struct CoverageQuery {
    u64 m = 2;
    u64 x = 2;
    u64 y = 2;
    unsigned k = 1;
    unsigned ell = 1;
    // Lifts the x, y <= m restriction.
    bool allow_large_range = false;
};

struct Witness {
    std::vector<u64> primes;  // p_1 .. p_k
    std::optional<u64> s;     // absent when ell = 0

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CoverageReport {
    CoverageQuery query;
    u64 phi = 0;
    std::vector<bool> covered;        // indexed by residue in [0, m)
    std::vector<u64> uncovered;       // units without a representation
    std::map<u64, Witness> witnesses; // lexicographically smallest per unit
    std::vector<u64> counts;          // representation count per residue

    std::size_t covered_count() const { return witnesses.size(); }
    bool fully_covered() const { return uncovered.empty(); }
};

/// Composes residue distributions of prime products and almost-primes and
/// recovers witnesses by backtracking.
CoverageReport coverage_check(const CoverageQuery& query);

/// Reference path: enumerates every (p_1, ..., p_k, s) tuple. Throws
/// ResourceError when the tuple count exceeds `budget`.
CoverageReport coverage_check_enumerate(const CoverageQuery& query, u64 budget = 1'000'000);

/// Re-evaluates the congruence and every range and coprimality constraint.
bool verify_witness(const CoverageQuery& query, u64 a, const Witness& w);

/// floor(m^gamma), tolerant to the last bit of pow().
u64 exponent_cutoff(u64 m, double gamma);

struct ExponentSearchResult {
    std::optional<double> gamma;                 // smallest fully covering grid point
    std::vector<std::pair<double, bool>> points; // every grid point and its verdict
    bool monotone = true;                        // passing points form a suffix
};

ExponentSearchResult minimal_exponent_search(u64 m, unsigned k, unsigned ell,
                                             std::span<const double> grid);

}  // namespace pprod
