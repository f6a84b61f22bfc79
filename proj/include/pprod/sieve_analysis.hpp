#pragma once

// The sieved sequence of smallest residues v = a * inverse(p_1 ... p_k) that
// land in [1, y], its divisibility profile, the level-of-distribution
// exponents and degrees behind the admissibility conditions, and the sieve
// predicate g < theta_l.

#include <optional>
#include <vector>

#include "pprod/admissibility.hpp"
#include "pprod/exp_sums.hpp"
#include "pprod/modular.hpp"

namespace pprod {

class SievedSequence {
public:
    SievedSequence(i64 a, u64 m, u64 x, u64 y, unsigned k, std::vector<u64> multiplicity,
                   std::vector<u64> witnesses);

    i64 a() const noexcept { return a_; }
    u64 m() const noexcept { return m_; }
    u64 x() const noexcept { return x_; }
    u64 y() const noexcept { return y_; }
    unsigned k() const noexcept { return k_; }

    /// Multiplicity of v in [1, y].
    u64 multiplicity(u64 v) const { return v <= y_ ? multiplicity_[v] : 0; }
    /// Total multiplicity |A_k|.
    u64 size() const noexcept { return size_; }
    /// Lexicographically smallest prime tuple producing v, if any.
    std::optional<std::vector<u64>> witness(u64 v) const;

private:
    i64 a_;
    u64 m_, x_, y_;
    unsigned k_;
    std::vector<u64> multiplicity_;  // index v in [0, y]
    std::vector<u64> witnesses_;     // k entries per v, zeros when absent
    u64 size_ = 0;
};

/// Enumerates prime tuples. Requires gcd(a, m) = 1 and 1 <= y <= m; throws
/// ResourceError when pi'(x)^k exceeds `budget`.
SievedSequence build_sequence(i64 a, const Modulus& m, u64 x, u64 y, unsigned k,
                              u64 budget = kDefaultBudget);

struct DivisorRecord {
    u64 d;
    u64 count;
    double expected;
    double remainder;
};

struct KappaCurve {
    double kappa;
    double reference;  // N^{1 - kappa}
};

struct DistributionProfile {
    u64 level;
    double n_main;  // pi'(x)^k * y / m
    std::vector<DivisorRecord> records;
    double sum_remainders = 0.0;
    std::vector<KappaCurve> curves;  // report-only
};

DistributionProfile profile_distribution(const SievedSequence& seq, u64 level,
                                         const std::vector<double>& kappas = {0.01, 0.05, 0.1});

struct LevelExponents {
    unsigned k;
    double alpha;
    double beta;
    double epsilon;
    unsigned ell;
    double d_exponent;
    std::optional<double> g;
    double theta;
    bool sieve_pass;
};

/// Requires k in {1, 2, 3, 4}, 1/2 <= alpha <= 1 and 0 <= beta <= 1.
LevelExponents level_exponents(unsigned k, double alpha, double beta, double epsilon,
                               unsigned ell,
                               const GreavesConstants& c = GreavesConstants::standard());

/// g < theta_l, strictly.
bool sieve_predicate(double g, unsigned ell,
                     const GreavesConstants& c = GreavesConstants::standard());

struct SequenceWitness {
    u64 v;
    std::vector<u64> primes;
};

/// Smallest v in the sieved sequence with 2 <= v and Omega(v) <= ell.
std::optional<SequenceWitness> end_to_end_witness(const Modulus& m, u64 x, u64 y, unsigned k,
                                                  unsigned ell, i64 a,
                                                  u64 budget = kDefaultBudget);

}  // namespace pprod
