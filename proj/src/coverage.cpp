#include "pprod/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pprod/errors.hpp"
#include "pprod/exp_sums.hpp"

namespace pprod {

bool AlmostPrimeTable::contains(u64 s) const {
    return std::binary_search(values_.begin(), values_.end(), s);
}

std::vector<unsigned char> omega_table(u64 limit) {
    std::vector<unsigned char> omega(limit + 1, 0);
    std::vector<u64> spf(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (u64 j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
        omega[i] = static_cast<unsigned char>(omega[i / spf[i]] + 1);
    }
    return omega;
}

AlmostPrimeTable almost_primes(u64 y, unsigned ell) {
    if (y < 2) throw DomainError("almost-prime cutoff must be at least 2");
    if (ell < 1) throw DomainError("ell must be at least 1");
    if (y > kDefaultSieveCap) throw CapacityError("almost-prime cutoff too large");
    const auto omega = omega_table(y);
    std::vector<u64> values;
    for (u64 n = 2; n <= y; ++n) {
        if (omega[n] <= ell) values.push_back(n);
    }
    return AlmostPrimeTable(y, ell, std::move(values));
}

namespace {

struct Ingredients {
    std::vector<u64> primes;  // coprime to m, ascending
    std::vector<u64> s_values;  // almost-primes coprime to m, ascending
};

void validate(const CoverageQuery& q) {
    if (q.m < 2) throw DomainError("modulus must be at least 2");
    if (q.k + q.ell == 0) throw DomainError("need k + ell >= 1");
    if (!q.allow_large_range && (q.x > q.m || q.y > q.m)) {
        throw RangeError("x and y must not exceed m (pass allow_large_range to lift)");
    }
}

Ingredients gather(const CoverageQuery& q, const Modulus& m) {
    Ingredients in;
    if (q.k > 0 && q.x >= 2) in.primes = coprime_primes(sieve_primes(q.x), m, q.x);
    if (q.ell > 0 && q.y >= 2) {
        const auto table = almost_primes(q.y, q.ell);
        for (u64 s : table.values()) {
            if (m.is_unit(s)) in.s_values.push_back(s);
        }
    }
    return in;
}

CoverageReport finish(const CoverageQuery& q, const Modulus& m, std::vector<u64> counts,
                      std::map<u64, Witness> witnesses) {
    CoverageReport rep;
    rep.query = q;
    rep.phi = m.phi();
    rep.covered.assign(q.m, false);
    for (const auto& [a, w] : witnesses) rep.covered[a] = true;
    for (u64 a : m.units()) {
        if (!rep.covered[a]) rep.uncovered.push_back(a);
    }
    rep.witnesses = std::move(witnesses);
    rep.counts = std::move(counts);
    return rep;
}

}  // namespace

CoverageReport coverage_check(const CoverageQuery& q) {
    validate(q);
    const Modulus m(q.m);
    const auto in = gather(q, m);
    const u64 mod = q.m;

    std::vector<u64> prime_dist(mod, 0);
    for (u64 p : in.primes) ++prime_dist[p % mod];

    // reach[j](r): representations of r by j primes times the s-factor.
    std::vector<std::vector<u64>> reach(q.k + 1);
    reach[0].assign(mod, 0);
    if (q.ell == 0) {
        reach[0][1] = 1;
    } else {
        for (u64 s : in.s_values) ++reach[0][s % mod];
    }
    for (unsigned j = 1; j <= q.k; ++j) {
        reach[j] = multiplicative_convolution(prime_dist, reach[j - 1], mod);
    }

    const auto prime_inv = batch_inverse(in.primes, m);
    std::map<u64, Witness> witnesses;
    for (u64 a : m.units()) {
        if (reach[q.k][a] == 0) continue;
        Witness w;
        u64 target = a;
        for (unsigned pos = 0; pos < q.k; ++pos) {
            const auto& rest = reach[q.k - pos - 1];
            for (std::size_t i = 0; i < in.primes.size(); ++i) {
                const u64 next = mul_mod(target, prime_inv[i], mod);
                if (rest[next] != 0) {
                    w.primes.push_back(in.primes[i]);
                    target = next;
                    break;
                }
            }
        }
        if (q.ell > 0) {
            for (u64 s : in.s_values) {
                if (s % mod == target) {
                    w.s = s;
                    break;
                }
            }
        }
        witnesses.emplace(a, std::move(w));
    }
    return finish(q, m, std::move(reach[q.k]), std::move(witnesses));
}

CoverageReport coverage_check_enumerate(const CoverageQuery& q, u64 budget) {
    validate(q);
    const Modulus m(q.m);
    const auto in = gather(q, m);
    const u64 mod = q.m;

    u64 work = q.ell > 0 ? in.s_values.size() : 1;
    for (unsigned i = 0; i < q.k; ++i) work = checked_mul(work, in.primes.size());
    if (work > budget) {
        throw ResourceError("tuple enumeration needs " + std::to_string(work) +
                            " steps, budget is " + std::to_string(budget));
    }

    std::vector<u64> counts(mod, 0);
    std::map<u64, Witness> witnesses;
    if (work == 0) return finish(q, m, std::move(counts), std::move(witnesses));

    // Odometer with the first coordinate most significant, so tuples come out
    // in lexicographic order and the first hit per class is the smallest.
    const std::size_t s_count = q.ell > 0 ? in.s_values.size() : 1;
    std::vector<std::size_t> idx(q.k, 0);
    while (true) {
        u64 prod = 1;
        for (unsigned i = 0; i < q.k; ++i) prod = mul_mod(prod, in.primes[idx[i]] % mod, mod);
        for (std::size_t si = 0; si < s_count; ++si) {
            const u64 r = q.ell > 0 ? mul_mod(prod, in.s_values[si] % mod, mod) : prod;
            ++counts[r];
            if (!witnesses.contains(r)) {
                Witness w;
                for (unsigned i = 0; i < q.k; ++i) w.primes.push_back(in.primes[idx[i]]);
                if (q.ell > 0) w.s = in.s_values[si];
                witnesses.emplace(r, std::move(w));
            }
        }
        int pos = static_cast<int>(q.k) - 1;
        while (pos >= 0 && ++idx[pos] == in.primes.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return finish(q, m, std::move(counts), std::move(witnesses));
}

bool verify_witness(const CoverageQuery& q, u64 a, const Witness& w) {
    if (q.m < 2 || a >= q.m || std::gcd(a, q.m) != 1) return false;
    if (w.primes.size() != q.k) return false;
    if (w.s.has_value() != (q.ell > 0)) return false;
    u64 prod = 1;
    for (u64 p : w.primes) {
        if (p > q.x || big_omega(p) != 1 || q.m % p == 0) return false;
        prod = mul_mod(prod, p % q.m, q.m);
    }
    if (w.s) {
        const u64 s = *w.s;
        if (s < 2 || s > q.y || big_omega(s) > q.ell || std::gcd(s, q.m) != 1) return false;
        prod = mul_mod(prod, s % q.m, q.m);
    }
    return prod == a;
}

u64 exponent_cutoff(u64 m, double gamma) {
    const double v = std::pow(static_cast<double>(m), gamma);
    return static_cast<u64>(std::floor(v * (1.0 + 1e-12)));
}

ExponentSearchResult minimal_exponent_search(u64 m, unsigned k, unsigned ell,
                                             std::span<const double> grid) {
    if (grid.empty()) throw DomainError("exponent grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] <= 1.0)) throw DomainError("grid must lie in (0, 1]");
        if (i > 0 && grid[i] <= grid[i - 1]) throw DomainError("grid must be ascending");
    }
    ExponentSearchResult result;
    bool seen_pass = false;
    for (double gamma : grid) {
        const u64 cut = exponent_cutoff(m, gamma);
        CoverageQuery q{m, cut, cut, k, ell, false};
        const bool pass = coverage_check(q).fully_covered();
        result.points.emplace_back(gamma, pass);
        if (pass && !result.gamma) result.gamma = gamma;
        if (seen_pass && !pass) result.monotone = false;
        seen_pass = seen_pass || pass;
    }
    return result;
}

}  // namespace pprod
