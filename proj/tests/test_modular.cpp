#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "pprod/errors.hpp"
#include "pprod/modular.hpp"

using namespace pprod;

TEST(SievePrimes, SmallTables) {
    const auto t10 = sieve_primes(10);
    EXPECT_EQ(std::vector<u64>(t10.primes().begin(), t10.primes().end()), (std::vector<u64>{2, 3, 5, 7}));
    const auto t2 = sieve_primes(2);
    EXPECT_EQ(std::vector<u64>(t2.primes().begin(), t2.primes().end()), (std::vector<u64>{2}));
    EXPECT_EQ(sieve_primes(3).size(), 2u);
}

TEST(SievePrimes, CountToOneMillion) {
    // Independent primality loop, frozen: 78498.
    std::size_t by_trial = 0;
    for (u64 n = 2; n <= 1'000'000; ++n) by_trial += oracle::is_prime(n) ? 1 : 0;
    ASSERT_EQ(by_trial, 78498u);
    EXPECT_EQ(sieve_primes(1'000'000).size(), by_trial);
}

TEST(SievePrimes, MatchesTrialDivisionTo1e5) {
    const auto table = sieve_primes(100'000);
    std::vector<u64> expected;
    for (u64 n = 2; n <= 100'000; ++n) {
        if (oracle::is_prime(n)) expected.push_back(n);
    }
    EXPECT_EQ(std::vector<u64>(table.primes().begin(), table.primes().end()), expected);
}

TEST(SievePrimes, SegmentBoundaries) {
    // Limits straddling the 2^17 span of one odd-only segment.
    for (u64 limit : {131'071u, 131'072u, 131'073u, 262'147u}) {
        const auto table = sieve_primes(limit);
        std::size_t c = 0;
        for (u64 n = 2; n <= limit; ++n) c += oracle::is_prime(n) ? 1 : 0;
        EXPECT_EQ(table.size(), c) << limit;
    }
}

TEST(SievePrimes, Errors) {
    EXPECT_THROW(sieve_primes(1), EmptyTableError);
    EXPECT_THROW(sieve_primes(0), EmptyTableError);
    EXPECT_THROW(sieve_primes(1000, 999), CapacityError);
}

TEST(PrimeTable, CountUpTo) {
    const auto t = sieve_primes(100);
    EXPECT_EQ(t.count_up_to(100), 25u);
    EXPECT_EQ(t.count_up_to(10), 4u);
    EXPECT_EQ(t.count_up_to(1), 0u);
    EXPECT_THROW(t.count_up_to(101), RangeError);
    EXPECT_TRUE(t.contains(97));
    EXPECT_FALSE(t.contains(91));
}

TEST(Modulus, Metadata) {
    const Modulus m(30);
    EXPECT_EQ(m.phi(), 8u);
    EXPECT_EQ(m.omega(), 3u);
    EXPECT_EQ(m.prime_divisors(), (std::vector<u64>{2, 3, 5}));
    EXPECT_FALSE(m.is_unit(0));
    EXPECT_TRUE(m.is_unit(7));
    EXPECT_FALSE(m.is_unit(25));
    EXPECT_EQ(m.units(), (std::vector<u64>{1, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_EQ(m.reduce(-1), 29u);
    EXPECT_EQ(ResidueClass::of(-31, m), (ResidueClass{29, 30}));
}

TEST(Modulus, Errors) {
    EXPECT_THROW(Modulus(1), DomainError);
    EXPECT_THROW(Modulus(0), DomainError);
    EXPECT_THROW(Modulus(kModulusCap + 1), CapacityError);
}

TEST(Modulus, PhiTwoWaysUpTo1e4) {
    for (u64 mv = 2; mv <= 10'000; ++mv) {
        const Modulus m(mv);
        u64 mask_count = 0;
        for (u64 v = 1; v <= mv; ++v) mask_count += m.is_unit(v) ? 1 : 0;
        ASSERT_EQ(mask_count, m.phi()) << mv;
        ASSERT_EQ(oracle::phi_by_gcd(mv), m.phi()) << mv;
        ASSERT_EQ(m.units().size(), m.phi()) << mv;
    }
}

TEST(ModInverse, Examples) {
    for (u64 mv : {2u, 3u, 10u, 97u, 1000u}) EXPECT_EQ(mod_inverse(1, Modulus(mv)), 1u);
    EXPECT_EQ(mod_inverse(3, Modulus(7)), 5u);
    EXPECT_EQ(mod_inverse(-3, Modulus(7)), 2u);
    EXPECT_THROW(mod_inverse(4, Modulus(10)), NotInvertibleError);
    EXPECT_THROW(mod_inverse(0, Modulus(7)), NotInvertibleError);
}

TEST(ModInverse, ExhaustiveAndInvolutionTo1000) {
    for (u64 mv = 2; mv <= 1000; ++mv) {
        const Modulus m(mv);
        for (u64 n : m.units()) {
            const u64 u = mod_inverse(static_cast<i64>(n), m);
            ASSERT_GE(u, 1u);
            ASSERT_LT(u, mv);
            ASSERT_EQ(n * u % mv, 1u % mv) << n << " mod " << mv;
            ASSERT_EQ(mod_inverse(static_cast<i64>(u), m), n);
        }
    }
}

TEST(BatchInverse, MatchesPerElement) {
    const Modulus m(9973 * 2);
    const auto primes = coprime_primes(sieve_primes(5000), m, 5000);
    const auto batch = batch_inverse(primes, m);
    ASSERT_EQ(batch.size(), primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        EXPECT_EQ(batch[i], mod_inverse(static_cast<i64>(primes[i]), m));
    }
    EXPECT_TRUE(batch_inverse(std::vector<u64>{}, m).empty());
    EXPECT_THROW(batch_inverse(std::vector<u64>{3, 4}, m), NotInvertibleError);
}

TEST(CoprimePrimes, Examples) {
    const auto t10 = sieve_primes(10);
    EXPECT_EQ(coprime_primes(t10, Modulus(11), 10), (std::vector<u64>{2, 3, 5, 7}));
    EXPECT_EQ(coprime_primes(t10, Modulus(10), 10), (std::vector<u64>{3, 7}));
    // pi(100) = 25 minus the three primes dividing 30.
    EXPECT_EQ(coprime_primes(sieve_primes(100), Modulus(30), 100).size(), 22u);
    EXPECT_THROW(coprime_primes(t10, Modulus(11), 11), RangeError);
}

TEST(CheckedArithmetic, Overflow) {
    EXPECT_EQ(checked_mul(u64{1} << 31, u64{1} << 31), u64{1} << 62);
    EXPECT_THROW(checked_mul(u64{1} << 32, u64{1} << 32), OverflowError);
    EXPECT_THROW(checked_add(~u64{0}, 1), OverflowError);
    EXPECT_EQ(checked_pow(26, 3), 17576u);
    EXPECT_THROW(checked_pow(1000, 7), OverflowError);
}

TEST(Factorize, Basics) {
    EXPECT_EQ(factorize(360), (std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_EQ(totient(1), 1u);
    EXPECT_EQ(big_omega(8), 3u);
    EXPECT_EQ(big_omega(2147483647), 1u);
}
