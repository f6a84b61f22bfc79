#pragma once

// Brute-force reference computations used only by tests. None of these touch
// the library's sieves, distributions or convolutions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<u64> primes_coprime(u64 x, u64 m) {
    std::vector<u64> out;
    for (u64 p = 2; p <= x; ++p) {
        if (is_prime(p) && m % p != 0) out.push_back(p);
    }
    return out;
}

inline u64 inverse_by_search(u64 n, u64 m) {
    n %= m;
    for (u64 u = 1; u < m; ++u) {
        if (n * u % m == 1) return u;
    }
    return 0;
}

inline unsigned omega_with_multiplicity(u64 n) {
    unsigned c = 0;
    for (u64 d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            n /= d;
            ++c;
        }
    }
    return c + (n > 1 ? 1 : 0);
}

inline u64 phi_by_gcd(u64 m) {
    u64 c = 0;
    for (u64 v = 1; v <= m; ++v) c += std::gcd(v, m) == 1 ? 1 : 0;
    return c;
}

// Ordered quadruples with inv(p1) inv(p2) = inv(q1) inv(q2) (mod m).
inline u64 energy_by_quadruples(u64 x, u64 m) {
    const auto ps = primes_coprime(x, m);
    std::vector<u64> inv;
    for (u64 p : ps) inv.push_back(inverse_by_search(p, m));
    u64 e = 0;
    for (u64 a : inv)
        for (u64 b : inv)
            for (u64 c : inv)
                for (u64 d : inv) e += (a * b % m == c * d % m) ? 1 : 0;
    return e;
}

inline std::complex<double> e_m(u64 j, u64 m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j % m) / static_cast<double>(m));
}

// Tuples (p_1..p_k, v) with a * inv(p_1)...inv(p_k) = v (mod m), 1 <= v <= y.
inline u64 t_by_loops(u64 a, u64 x, u64 y, unsigned k, u64 m) {
    const auto ps = primes_coprime(x, m);
    std::vector<u64> idx(k, 0);
    u64 count = 0;
    if (ps.empty()) return 0;
    while (true) {
        u64 prod = a % m;
        for (unsigned i = 0; i < k; ++i) prod = prod * inverse_by_search(ps[idx[i]], m) % m;
        for (u64 v = 1; v <= y; ++v) count += (v % m == prod) ? 1 : 0;
        unsigned pos = 0;
        while (pos < k && ++idx[pos] == ps.size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return count;
}

}  // namespace oracle
