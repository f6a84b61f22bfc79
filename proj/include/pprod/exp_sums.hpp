#pragma once

// Exact residue-count distributions of inverse prime products, the
// exponential sums built on them, the counting functions T_k and their
// deviations, multiplicative energy, and checkers for the inequalities that
// carry explicit constants.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "pprod/modular.hpp"

namespace pprod {

inline constexpr u64 kDefaultBudget = 100'000'000;

/// N_k(r): number of ordered k-tuples of primes <= x, coprime to m, whose
/// inverse product is r (mod m). k = 0 is the point mass at 1.
class InverseResidueCounts {
public:
    InverseResidueCounts(unsigned k, u64 x, u64 modulus, std::vector<u64> counts);

    /// Identity of the convolution monoid: all mass on r = 1.
    static InverseResidueCounts point_mass(u64 x, u64 modulus);

    unsigned k() const noexcept { return k_; }
    u64 x() const noexcept { return x_; }
    u64 modulus() const noexcept { return modulus_; }
    std::span<const u64> counts() const noexcept { return counts_; }
    u64 operator[](u64 r) const { return counts_.at(r); }

    /// Sum of all counts (overflow-checked).
    u64 total() const;
    /// Sum of squared counts (overflow-checked).
    u64 sum_of_squares() const;

private:
    unsigned k_;
    u64 x_;
    u64 modulus_;
    std::vector<u64> counts_;
};

/// Dense multiplicative convolution over Z_m: out(r) = sum_{s*t = r} a(s) b(t).
/// Iterates only over the nonzero support of each side.
std::vector<u64> multiplicative_convolution(std::span<const u64> a, std::span<const u64> b,
                                            u64 modulus);

InverseResidueCounts build_counts_1(u64 x, const Modulus& m);
InverseResidueCounts build_counts_1(const PrimeTable& table, u64 x, const Modulus& m);

/// Throws IncompatibleError when modulus or cutoff differ.
InverseResidueCounts convolve(const InverseResidueCounts& lhs, const InverseResidueCounts& rhs);

/// N_k by (k-1) convolutions of N_1.
InverseResidueCounts build_counts(u64 x, unsigned k, const Modulus& m);

/// Counts of p mod m (not inverted) for primes p <= x coprime to m.
std::vector<u64> prime_residue_counts(u64 x, const Modulus& m);

struct ExpSumValue {
    unsigned k;
    i64 a;
    u64 x;
    u64 m;
    std::complex<double> value;
    double abs;
};

/// S_k(a; x) from the residue-count distribution.
ExpSumValue s_k(i64 a, u64 x, unsigned k, const Modulus& m);
ExpSumValue s_k(i64 a, const InverseResidueCounts& counts);

/// S_k(a; x) by k nested loops over prime tuples. Throws ResourceError when
/// pi'(x)^k exceeds `budget`.
ExpSumValue s_k_direct(i64 a, u64 x, unsigned k, const Modulus& m, u64 budget = kDefaultBudget);

/// S_k(a; x) for every a in [0, m).
std::vector<std::complex<double>> s_k_all(const InverseResidueCounts& counts);

/// Number of ordered quadruples of primes <= x coprime to m with
/// p1*p2 = q1*q2 (mod m), as sum_r M(r)^2.
u64 energy(u64 x, const Modulus& m);

struct EnergyReport {
    u64 x;
    u64 m;
    u64 energy;
    double rhs;  // 2 x^2 (x^2/m + 1)
    bool pass;
};

EnergyReport check_energy_bound(u64 x, const Modulus& m);

struct BilinearReport {
    double lhs;
    double rhs;  // sqrt(Phi * Psi * m)
    double phi_norm;
    double psi_norm;
    bool pass;
};

/// |sum_{u,v} phi_u psi_v e_m(a u v)| against sqrt(Phi Psi m). U and V are sets
/// of residues in [0, m) paired with their coefficients. Throws
/// PreconditionError when gcd(a, m) > 1 or when the inputs are malformed.
BilinearReport check_bilinear(std::span<const u64> U, std::span<const std::complex<double>> phi,
                              std::span<const u64> V, std::span<const std::complex<double>> psi,
                              i64 a, const Modulus& m);

struct BilinearInstance {
    u64 m;
    i64 a;
    std::vector<u64> U;
    std::vector<std::complex<double>> phi;
    std::vector<u64> V;
    std::vector<std::complex<double>> psi;
};

/// Random subsets of units with unit-norm coefficients; m uniform in [2, max_m].
BilinearInstance random_bilinear_instance(std::mt19937_64& rng, u64 max_m);

/// T_k(a; x, y): tuples with a * inverse product in [1, y]. Requires
/// gcd(a, m) = 1 and 1 <= y <= m.
u64 t_k(i64 a, u64 x, u64 y, unsigned k, const Modulus& m);
u64 t_k(i64 a, u64 y, const InverseResidueCounts& counts, const Modulus& m);

/// Report-only replacement for m^{o(1)} factors: C * (log m)^c.
struct Slack {
    double constant = 1.0;
    double log_exponent = 0.0;

    double factor(u64 m) const;
};

struct DeviationRecord {
    unsigned k;
    i64 a;
    u64 x;
    u64 y;
    u64 m;
    u64 t_count;
    double main_term;  // pi'(x)^k * y / m
    double delta;
    double bound_rhs;  // reported, never asserted
    bool x_at_least_sqrt_m;
};

DeviationRecord delta_k(i64 a, u64 x, u64 y, unsigned k, const Modulus& m, Slack slack = {});

/// gcd(a, m) together with the shapes of the S_2, S_3, S_4 bounds at that gcd.
/// All three right-hand sides are report-only.
struct BoundContext {
    i64 a;
    u64 m;
    u64 f;
    u64 x;
    double s2_rhs;
    double s3_rhs;
    double s4_rhs;

    static BoundContext make(i64 a, u64 x, const Modulus& m);
};

/// Explicit bilinear bound on S_k for k in {2,3,4} and gcd(a, m) = 1:
/// split the tuple into two halves and apply the bilinear inequality with
/// Phi, Psi the exact sums of squared counts.
struct SkBilinearReport {
    unsigned k;
    double abs;
    double rhs;
    bool pass;
};

SkBilinearReport check_sk_bilinear(i64 a, u64 x, unsigned k, const Modulus& m);

}  // namespace pprod
