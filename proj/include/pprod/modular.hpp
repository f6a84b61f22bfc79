#pragma once

// Exact integer and modular arithmetic: prime sieving, modular inverses and
// unit-group metadata for a fixed modulus. Everything here works on native
// 64-bit integers; moduli are capped at 2^31 so a product of two reduced
// residues always fits in 62 bits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pprod {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kModulusCap = u64{1} << 31;
inline constexpr u64 kDefaultSieveCap = u64{1} << 31;

/// Overflow-checked arithmetic. Throws OverflowError on wraparound.
u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exponent);

/// a*b mod m for a, b < m <= kModulusCap.
inline u64 mul_mod(u64 a, u64 b, u64 m) { return (a * b) % m; }

/// Trial-division factorization into (prime, exponent) pairs, ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Euler's totient from the factorization of n.
u64 totient(u64 n);

/// Number of prime factors of n counted with multiplicity.
unsigned big_omega(u64 n);

class Modulus {
public:
    explicit Modulus(u64 m);

    u64 value() const noexcept { return m_; }
    u64 phi() const noexcept { return phi_; }
    unsigned omega() const noexcept { return static_cast<unsigned>(prime_divisors_.size()); }
    const std::vector<u64>& prime_divisors() const noexcept { return prime_divisors_; }

    /// True iff gcd(v, m) = 1; v is reduced first.
    bool is_unit(u64 v) const noexcept { return unit_mask_[v % m_]; }

    /// Reduced units in ascending order.
    std::vector<u64> units() const;

    /// Least nonnegative residue of any signed integer.
    u64 reduce(i64 a) const noexcept;

private:
    u64 m_;
    u64 phi_;
    std::vector<u64> prime_divisors_;
    std::vector<bool> unit_mask_;
};

struct ResidueClass {
    u64 value;
    u64 modulus;

    static ResidueClass of(i64 a, const Modulus& m) { return {m.reduce(a), m.value()}; }
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

class PrimeTable {
public:
    PrimeTable(u64 limit, std::vector<u64> primes) : limit_(limit), primes_(std::move(primes)) {}

    u64 limit() const noexcept { return limit_; }
    std::span<const u64> primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }

    /// pi(x) for x <= limit.
    std::size_t count_up_to(u64 x) const;
    bool contains(u64 n) const;

private:
    u64 limit_;
    std::vector<u64> primes_;
};

/// Segmented sieve of Eratosthenes over odd numbers.
/// Throws EmptyTableError for limit < 2 and CapacityError above `cap`.
PrimeTable sieve_primes(u64 limit, u64 cap = kDefaultSieveCap);

/// The unique u in [1, m) with n*u = 1 (mod m). Throws NotInvertibleError
/// when gcd(n, m) > 1.
u64 mod_inverse(i64 n, const Modulus& m);

/// All inverses of `values` in one pass (prefix products plus a single
/// extended gcd). Same contract as mod_inverse for every element.
std::vector<u64> batch_inverse(std::span<const u64> values, const Modulus& m);

/// Primes p <= x with p not dividing m, ascending. Throws RangeError when
/// x exceeds the table limit.
std::vector<u64> coprime_primes(const PrimeTable& table, const Modulus& m, u64 x);

}  // namespace pprod
