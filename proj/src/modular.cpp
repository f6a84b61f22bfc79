#include "pprod/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "pprod/errors.hpp"

namespace pprod {

u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in addition: " + std::to_string(a) + " + " +
                            std::to_string(b));
    }
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in multiplication: " + std::to_string(a) + " * " +
                            std::to_string(b));
    }
    return r;
}

u64 checked_pow(u64 base, unsigned exponent) {
    u64 r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
    return r;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 totient(u64 n) {
    u64 phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

unsigned big_omega(u64 n) {
    unsigned total = 0;
    for (auto [p, e] : factorize(n)) total += e;
    return total;
}

Modulus::Modulus(u64 m) : m_(m) {
    if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
    if (m > kModulusCap) throw CapacityError("modulus exceeds cap 2^31: " + std::to_string(m));
    for (auto [p, e] : factorize(m)) prime_divisors_.push_back(p);
    phi_ = totient(m);

    // Sieve out multiples of each prime divisor.
    unit_mask_.assign(m, true);
    unit_mask_[0] = false;
    for (u64 p : prime_divisors_) {
        for (u64 v = p; v < m; v += p) unit_mask_[v] = false;
    }
}

std::vector<u64> Modulus::units() const {
    std::vector<u64> out;
    out.reserve(phi_);
    for (u64 v = 1; v < m_; ++v) {
        if (unit_mask_[v]) out.push_back(v);
    }
    return out;
}

u64 Modulus::reduce(i64 a) const noexcept {
    const i64 m = static_cast<i64>(m_);
    i64 r = a % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

std::size_t PrimeTable::count_up_to(u64 x) const {
    if (x > limit_) {
        throw RangeError("x = " + std::to_string(x) + " exceeds prime table limit " +
                         std::to_string(limit_));
    }
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

bool PrimeTable::contains(u64 n) const {
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable sieve_primes(u64 limit, u64 cap) {
    if (limit < 2) throw EmptyTableError("no primes below " + std::to_string(limit));
    if (limit > cap) {
        throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                            std::to_string(cap));
    }

    const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<u64> base;
    for (u64 i = 3; i <= root; i += 2) {
        if (!small[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += 2 * i) small[j] = 0;
    }

    std::vector<u64> primes{2};
    if (limit >= 3) {
        const double estimate = static_cast<double>(limit) / std::log(static_cast<double>(limit));
        primes.reserve(static_cast<std::size_t>(estimate * 1.2) + 16);
    }

    // Each segment covers odd numbers low, low+2, ..., low + 2*(kSegment-1).
    constexpr u64 kSegment = u64{1} << 16;
    std::vector<char> seg(kSegment);
    for (u64 low = 3; low <= limit; low += 2 * kSegment) {
        const u64 high = std::min(limit, low + 2 * (kSegment - 1));
        const u64 len = (high - low) / 2 + 1;
        std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(len), 1);
        for (u64 p : base) {
            if (p * p > high) break;
            u64 start = std::max(p * p, (low + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            for (u64 j = start; j <= high; j += 2 * p) seg[(j - low) / 2] = 0;
        }
        for (u64 i = 0; i < len; ++i) {
            if (seg[i]) primes.push_back(low + 2 * i);
        }
    }
    return PrimeTable(limit, std::move(primes));
}

namespace {

// Extended Euclid; returns gcd and sets x with a*x = gcd (mod m).
i64 ext_gcd(i64 a, i64 b, i64& x) {
    i64 x0 = 1, x1 = 0;
    while (b != 0) {
        const i64 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    x = x0;
    return a;
}

}  // namespace

u64 mod_inverse(i64 n, const Modulus& m) {
    const u64 r = m.reduce(n);
    i64 x = 0;
    const i64 g = ext_gcd(static_cast<i64>(r), static_cast<i64>(m.value()), x);
    if (g != 1) {
        throw NotInvertibleError(std::to_string(n) + " is not invertible modulo " +
                                 std::to_string(m.value()));
    }
    return m.reduce(x);
}

std::vector<u64> batch_inverse(std::span<const u64> values, const Modulus& m) {
    const u64 mod = m.value();
    std::vector<u64> prefix(values.size());
    u64 acc = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const u64 v = values[i] % mod;
        if (!m.is_unit(v)) {
            throw NotInvertibleError(std::to_string(values[i]) + " is not invertible modulo " +
                                     std::to_string(mod));
        }
        prefix[i] = acc;
        acc = mul_mod(acc, v, mod);
    }
    std::vector<u64> out(values.size());
    u64 inv = mod_inverse(static_cast<i64>(acc), m);
    for (std::size_t i = values.size(); i-- > 0;) {
        out[i] = mul_mod(inv, prefix[i], mod);
        inv = mul_mod(inv, values[i] % mod, mod);
    }
    return out;
}

std::vector<u64> coprime_primes(const PrimeTable& table, const Modulus& m, u64 x) {
    const std::size_t n = table.count_up_to(x);
    std::vector<u64> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const u64 p = table.primes()[i];
        if (m.value() % p != 0) out.push_back(p);
    }
    return out;
}

}  // namespace pprod
