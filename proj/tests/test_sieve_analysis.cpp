#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "pprod/coverage.hpp"
#include "pprod/errors.hpp"
#include "pprod/sieve_analysis.hpp"

using namespace pprod;

namespace {

// Elements of the sieved sequence with multiplicity, by oracle loops.
std::map<u64, u64> brute_sequence(u64 a, u64 m, u64 x, u64 y, unsigned k) {
    const auto ps = oracle::primes_coprime(x, m);
    std::map<u64, u64> out;
    std::vector<std::size_t> idx(k, 0);
    if (ps.empty()) return out;
    while (true) {
        u64 v = a % m;
        for (unsigned i = 0; i < k; ++i) v = v * oracle::inverse_by_search(ps[idx[i]], m) % m;
        if (v >= 1 && v <= y) ++out[v];
        unsigned pos = 0;
        while (pos < k && ++idx[pos] == ps.size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

}  // namespace

TEST(BuildSequence, InversesModEleven) {
    const Modulus m(11);
    const auto seq = build_sequence(1, m, 10, 11, 1);
    EXPECT_EQ(seq.size(), 4u);
    for (u64 v : {6u, 4u, 9u, 8u}) EXPECT_EQ(seq.multiplicity(v), 1u) << v;
    EXPECT_EQ(seq.multiplicity(5), 0u);
    EXPECT_EQ(*seq.witness(6), (std::vector<u64>{2}));
    EXPECT_FALSE(seq.witness(5).has_value());
}

TEST(BuildSequence, MultiplicityMatchesTk) {
    for (u64 mv : {11u, 30u, 53u, 101u}) {
        const Modulus m(mv);
        for (unsigned k = 1; k <= 3; ++k) {
            for (u64 y : {mv / 3 + 1, mv}) {
                for (u64 a : {u64{1}, mv - 1}) {
                    const auto seq = build_sequence(static_cast<i64>(a), m, mv / 2 + 1, y, k);
                    EXPECT_EQ(seq.size(), t_k(static_cast<i64>(a), mv / 2 + 1, y, k, m));
                    const auto brute = brute_sequence(a, mv, mv / 2 + 1, y, k);
                    for (u64 v = 1; v <= y; ++v) {
                        const auto it = brute.find(v);
                        ASSERT_EQ(seq.multiplicity(v), it == brute.end() ? 0 : it->second);
                    }
                }
            }
        }
        const auto full = build_sequence(1, m, mv, mv, 2);
        EXPECT_EQ(full.size(), checked_pow(oracle::primes_coprime(mv, mv).size(), 2));
    }
}

TEST(BuildSequence, Errors) {
    EXPECT_THROW(build_sequence(2, Modulus(12), 10, 12, 1), PreconditionError);
    EXPECT_THROW(build_sequence(1, Modulus(11), 10, 12, 1), RangeError);
    EXPECT_THROW(build_sequence(1, Modulus(101), 101, 101, 4, 1000), ResourceError);
}

TEST(Profile, DivisorOneAndCommonFactors) {
    const Modulus m(30);
    const auto seq = build_sequence(7, m, 29, 30, 2);
    const auto prof = profile_distribution(seq, 12);
    const auto& r1 = prof.records.front();
    EXPECT_EQ(r1.count, seq.size());
    const auto dev = delta_k(7, 29, 30, 2, m);
    EXPECT_NEAR(r1.remainder, std::abs(dev.delta), 1e-9);
    for (const auto& rec : prof.records) {
        if (std::gcd(rec.d, u64{30}) > 1) {
            EXPECT_EQ(rec.count, 0u) << rec.d;
            EXPECT_EQ(rec.expected, 0.0);
            EXPECT_EQ(rec.remainder, 0.0);
        }
    }
    EXPECT_THROW(profile_distribution(seq, 0), DomainError);
}

TEST(Profile, MatchesPerElementScan) {
    const Modulus m(101);
    const auto seq = build_sequence(1, m, 50, 101, 2);
    const auto prof = profile_distribution(seq, 10, {0.1});
    const auto brute = brute_sequence(1, 101, 50, 101, 2);
    const double n_main = 15.0 * 15.0 * 101.0 / 101.0;  // 15 primes up to 50
    EXPECT_DOUBLE_EQ(prof.n_main, n_main);
    double sum = 0;
    for (const auto& rec : prof.records) {
        u64 count = 0;
        for (auto [v, c] : brute) count += (v % rec.d == 0) ? c : 0;
        EXPECT_EQ(rec.count, count) << rec.d;
        EXPECT_DOUBLE_EQ(rec.expected, n_main / static_cast<double>(rec.d));
        sum += rec.remainder;
    }
    EXPECT_NEAR(prof.sum_remainders, sum, 1e-9);
    ASSERT_EQ(prof.curves.size(), 1u);
    EXPECT_NEAR(prof.curves[0].reference, std::pow(n_main, 0.9), 1e-9);
}

TEST(LevelExponents, Examples) {
    const auto k2 = level_exponents(2, 0.905, 0.905, 0.0, 3);
    ASSERT_TRUE(k2.g.has_value());
    EXPECT_NEAR(*k2.g, 0.905 / 0.31, 1e-12);
    EXPECT_NEAR(*k2.g, 2.91935, 1e-5);
    EXPECT_TRUE(k2.sieve_pass);

    const auto k4 = level_exponents(4, 0.8, 0.5, 0.0, 3);
    EXPECT_DOUBLE_EQ(k4.d_exponent, 0.0);
    EXPECT_FALSE(k4.g.has_value());
    EXPECT_FALSE(k4.sieve_pass);

    const auto k3 = level_exponents(3, 0.864, 0.864, 0.0, 3);
    ASSERT_TRUE(k3.g.has_value());
    EXPECT_LT(*k3.g, theta(3).value);
    EXPECT_TRUE(k3.sieve_pass);

    const auto k1 = level_exponents(1, 0.997, 0.997, 0.0, 17);
    EXPECT_DOUBLE_EQ(k1.d_exponent, std::min(0.997 / 16 + 0.997 - 1, 0.997 / 3 + 0.997 - 1.25));
    EXPECT_TRUE(k1.sieve_pass);

    // Epsilon sits in the numerator.
    const auto eps = level_exponents(2, 0.905, 0.905, 0.01, 3);
    EXPECT_NEAR(*eps.g, 0.915 / 0.31, 1e-12);
}

TEST(LevelExponents, Errors) {
    EXPECT_THROW(level_exponents(5, 0.9, 0.9, 0, 3), UnsupportedError);
    EXPECT_THROW(level_exponents(0, 0.9, 0.9, 0, 3), UnsupportedError);
    EXPECT_THROW(level_exponents(2, 0.4, 0.9, 0, 3), DomainError);
    EXPECT_THROW(level_exponents(2, 0.9, 1.1, 0, 3), DomainError);
}

TEST(LevelExponents, PublishedRowsBracketed) {
    struct Row {
        unsigned k, ell;
        double alpha;
    };
    for (const Row& r : {Row{2, 3, 0.905}, Row{3, 3, 0.864}, Row{4, 3, 0.760}, Row{4, 4, 0.673},
                         Row{1, 17, 0.997}}) {
        EXPECT_TRUE(level_exponents(r.k, r.alpha, r.alpha, 0.0, r.ell).sieve_pass) << r.k << " " << r.ell;
        EXPECT_FALSE(level_exponents(r.k, r.alpha - 0.002, r.alpha - 0.002, 0.0, r.ell).sieve_pass)
            << r.k << " " << r.ell;
    }
}

TEST(SievePredicate, Strictness) {
    EXPECT_TRUE(sieve_predicate(1.0, 2));
    EXPECT_FALSE(sieve_predicate(theta(3).value, 3));
    EXPECT_TRUE(sieve_predicate(std::nextafter(theta(3).value, 0.0), 3));
    EXPECT_THROW(sieve_predicate(1.0, 1), DomainError);
    EXPECT_THROW(sieve_predicate(INFINITY, 3), DomainError);
}

TEST(EndToEnd, SevenExamples) {
    const Modulus m(7);
    EXPECT_FALSE(end_to_end_witness(m, 7, 7, 1, 1, 5).has_value());
    const auto w = end_to_end_witness(m, 7, 7, 1, 2, 5);
    ASSERT_TRUE(w.has_value());
    // 5 * inverse(3) = 4 and 3 * 4 = 12 = 5 (mod 7); 6 (via p = 2) is larger.
    EXPECT_EQ(w->v, 4u);
    EXPECT_EQ(w->primes, (std::vector<u64>{3}));
    EXPECT_EQ(build_sequence(5, m, 7, 7, 1).multiplicity(6), 1u);
}

TEST(EndToEnd, EquivalentToCoverage) {
    for (u64 mv = 3; mv <= 40; ++mv) {
        const Modulus m(mv);
        for (unsigned k = 1; k <= 2; ++k) {
            for (unsigned ell = 1; ell <= 2; ++ell) {
                const u64 x = mv / 2 + 1, y = (2 * mv) / 3 + 1;
                const CoverageQuery q{mv, x, y, k, ell, false};
                const auto rep = coverage_check(q);
                for (u64 a : m.units()) {
                    const auto w = end_to_end_witness(m, x, y, k, ell, static_cast<i64>(a));
                    ASSERT_EQ(w.has_value(), static_cast<bool>(rep.covered[a])) << mv << " " << a;
                    if (w) {
                        Witness cw{w->primes, w->v};
                        EXPECT_TRUE(verify_witness(q, a, cw));
                    }
                }
            }
        }
    }
}
