#include "pprod/exp_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "numeric.hpp"
#include "pprod/errors.hpp"

namespace pprod {

using detail::CompensatedComplexSum;
using detail::unit_root;

InverseResidueCounts::InverseResidueCounts(unsigned k, u64 x, u64 modulus, std::vector<u64> counts)
    : k_(k), x_(x), modulus_(modulus), counts_(std::move(counts)) {
    if (counts_.size() != modulus_) {
        throw IncompatibleError("count vector length " + std::to_string(counts_.size()) +
                                " does not match modulus " + std::to_string(modulus_));
    }
}

InverseResidueCounts InverseResidueCounts::point_mass(u64 x, u64 modulus) {
    std::vector<u64> counts(modulus, 0);
    counts[1 % modulus] = 1;
    return InverseResidueCounts(0, x, modulus, std::move(counts));
}

u64 InverseResidueCounts::total() const {
    u64 sum = 0;
    for (u64 c : counts_) sum = checked_add(sum, c);
    return sum;
}

u64 InverseResidueCounts::sum_of_squares() const {
    u64 sum = 0;
    for (u64 c : counts_) sum = checked_add(sum, checked_mul(c, c));
    return sum;
}

namespace {

std::vector<std::pair<u64, u64>> support(std::span<const u64> counts) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 r = 0; r < counts.size(); ++r) {
        if (counts[r] != 0) out.emplace_back(r, counts[r]);
    }
    return out;
}

void require_k(unsigned k) {
    if (k == 0) throw DomainError("k must be at least 1");
}

std::vector<u64> primes_for(u64 x, const Modulus& m) {
    if (x < 2) return {};
    return coprime_primes(sieve_primes(x), m, x);
}

}  // namespace

std::vector<u64> multiplicative_convolution(std::span<const u64> a, std::span<const u64> b,
                                            u64 modulus) {
    if (a.size() != modulus || b.size() != modulus) {
        throw IncompatibleError("distribution length does not match modulus");
    }
    const auto sa = support(a);
    const auto sb = support(b);
    std::vector<u64> out(modulus, 0);
    for (auto [s, cs] : sa) {
        for (auto [t, ct] : sb) {
            u64& slot = out[mul_mod(s, t, modulus)];
            slot = checked_add(slot, checked_mul(cs, ct));
        }
    }
    return out;
}

InverseResidueCounts build_counts_1(const PrimeTable& table, u64 x, const Modulus& m) {
    if (x < 2) throw DomainError("cutoff x must be at least 2");
    const auto primes = coprime_primes(table, m, x);
    const auto inverses = batch_inverse(primes, m);
    std::vector<u64> counts(m.value(), 0);
    for (u64 inv : inverses) ++counts[inv];
    return InverseResidueCounts(1, x, m.value(), std::move(counts));
}

InverseResidueCounts build_counts_1(u64 x, const Modulus& m) {
    if (x < 2) throw DomainError("cutoff x must be at least 2");
    return build_counts_1(sieve_primes(x), x, m);
}

InverseResidueCounts convolve(const InverseResidueCounts& lhs, const InverseResidueCounts& rhs) {
    if (lhs.modulus() != rhs.modulus()) {
        throw IncompatibleError("cannot convolve distributions modulo " +
                                std::to_string(lhs.modulus()) + " and " +
                                std::to_string(rhs.modulus()));
    }
    if (lhs.x() != rhs.x()) {
        throw IncompatibleError("cannot convolve distributions with cutoffs " +
                                std::to_string(lhs.x()) + " and " + std::to_string(rhs.x()));
    }
    return InverseResidueCounts(lhs.k() + rhs.k(), lhs.x(), lhs.modulus(),
                                multiplicative_convolution(lhs.counts(), rhs.counts(),
                                                           lhs.modulus()));
}

InverseResidueCounts build_counts(u64 x, unsigned k, const Modulus& m) {
    require_k(k);
    const auto one = build_counts_1(x, m);
    auto acc = one;
    for (unsigned i = 1; i < k; ++i) acc = convolve(acc, one);
    return acc;
}

std::vector<u64> prime_residue_counts(u64 x, const Modulus& m) {
    std::vector<u64> counts(m.value(), 0);
    for (u64 p : primes_for(x, m)) ++counts[p % m.value()];
    return counts;
}

ExpSumValue s_k(i64 a, const InverseResidueCounts& counts) {
    if (counts.k() == 0) throw DomainError("k must be at least 1");
    const u64 mod = counts.modulus();
    const i64 smod = static_cast<i64>(mod);
    const u64 ar = static_cast<u64>(((a % smod) + smod) % smod);
    CompensatedComplexSum sum;
    const auto c = counts.counts();
    for (u64 r = 0; r < mod; ++r) {
        if (c[r] == 0) continue;
        sum.add(static_cast<double>(c[r]) * unit_root(mul_mod(ar, r, mod), mod));
    }
    const auto value = sum.value();
    return {counts.k(), a, counts.x(), mod, value, std::abs(value)};
}

ExpSumValue s_k(i64 a, u64 x, unsigned k, const Modulus& m) {
    require_k(k);
    return s_k(a, build_counts(x, k, m));
}

ExpSumValue s_k_direct(i64 a, u64 x, unsigned k, const Modulus& m, u64 budget) {
    require_k(k);
    const auto primes = primes_for(x, m);
    u64 work = 1;
    for (unsigned i = 0; i < k; ++i) {
        work = checked_mul(work, std::max<u64>(primes.size(), 1));
        if (work > budget) {
            throw ResourceError("direct enumeration needs " + std::to_string(primes.size()) +
                                "^" + std::to_string(k) + " terms, budget is " +
                                std::to_string(budget));
        }
    }
    std::vector<u64> inv(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        inv[i] = mod_inverse(static_cast<i64>(primes[i]), m);
    }

    const u64 mod = m.value();
    const u64 ar = m.reduce(a);
    const double two_pi_over_m = 2.0 * std::numbers::pi / static_cast<double>(mod);
    CompensatedComplexSum sum;
    // Odometer over index tuples.
    std::vector<std::size_t> idx(k, 0);
    if (!primes.empty()) {
        while (true) {
            u64 prod = ar;
            for (unsigned i = 0; i < k; ++i) prod = mul_mod(prod, inv[idx[i]], mod);
            sum.add(std::polar(1.0, two_pi_over_m * static_cast<double>(prod)));
            unsigned pos = 0;
            while (pos < k && ++idx[pos] == primes.size()) idx[pos++] = 0;
            if (pos == k) break;
        }
    }
    const auto value = sum.value();
    return {k, a, x, mod, value, std::abs(value)};
}

std::vector<std::complex<double>> s_k_all(const InverseResidueCounts& counts) {
    const u64 mod = counts.modulus();
    std::vector<std::complex<double>> roots(mod);
    for (u64 j = 0; j < mod; ++j) roots[j] = unit_root(j, mod);
    const auto sup = support(counts.counts());
    std::vector<std::complex<double>> out(mod);
    for (u64 a = 0; a < mod; ++a) {
        CompensatedComplexSum sum;
        for (auto [r, c] : sup) sum.add(static_cast<double>(c) * roots[mul_mod(a, r, mod)]);
        out[a] = sum.value();
    }
    return out;
}

u64 energy(u64 x, const Modulus& m) {
    if (x < 2) throw DomainError("cutoff x must be at least 2");
    const auto base = prime_residue_counts(x, m);
    const auto pairs = multiplicative_convolution(base, base, m.value());
    u64 e = 0;
    for (u64 c : pairs) e = checked_add(e, checked_mul(c, c));
    return e;
}

EnergyReport check_energy_bound(u64 x, const Modulus& m) {
    const u64 e = energy(x, m);
    const double xd = static_cast<double>(x);
    const double rhs = 2.0 * xd * xd * (xd * xd / static_cast<double>(m.value()) + 1.0);
    return {x, m.value(), e, rhs, static_cast<double>(e) <= rhs};
}

BilinearReport check_bilinear(std::span<const u64> U, std::span<const std::complex<double>> phi,
                              std::span<const u64> V, std::span<const std::complex<double>> psi,
                              i64 a, const Modulus& m) {
    if (!m.is_unit(m.reduce(a))) {
        throw PreconditionError("bilinear bound needs gcd(a, m) = 1, got a = " +
                                std::to_string(a));
    }
    if (U.size() != phi.size() || V.size() != psi.size()) {
        throw PreconditionError("coefficient count does not match set size");
    }
    const u64 mod = m.value();
    auto validate = [mod](std::span<const u64> set, const char* name) {
        std::vector<u64> sorted(set.begin(), set.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw PreconditionError(std::string(name) + " has repeated residues");
        }
        if (!sorted.empty() && sorted.back() >= mod) {
            throw PreconditionError(std::string(name) + " has an unreduced residue");
        }
    };
    validate(U, "U");
    validate(V, "V");

    std::vector<std::complex<double>> roots(mod);
    for (u64 j = 0; j < mod; ++j) roots[j] = unit_root(j, mod);
    const u64 ar = m.reduce(a);

    CompensatedComplexSum outer;
    for (std::size_t i = 0; i < U.size(); ++i) {
        const u64 au = mul_mod(ar, U[i], mod);
        CompensatedComplexSum inner;
        for (std::size_t j = 0; j < V.size(); ++j) inner.add(psi[j] * roots[mul_mod(au, V[j], mod)]);
        outer.add(phi[i] * inner.value());
    }
    double phi_norm = 0.0, psi_norm = 0.0;
    for (auto z : phi) phi_norm += std::norm(z);
    for (auto z : psi) psi_norm += std::norm(z);

    BilinearReport report;
    report.lhs = std::abs(outer.value());
    report.phi_norm = phi_norm;
    report.psi_norm = psi_norm;
    report.rhs = std::sqrt(phi_norm * psi_norm * static_cast<double>(mod));
    report.pass = report.lhs <= report.rhs + 1e-6 * report.rhs;
    return report;
}

BilinearInstance random_bilinear_instance(std::mt19937_64& rng, u64 max_m) {
    if (max_m < 2) throw DomainError("max_m must be at least 2");
    BilinearInstance inst;
    inst.m = std::uniform_int_distribution<u64>(2, max_m)(rng);
    const Modulus mod(inst.m);
    const auto units = mod.units();
    inst.a = static_cast<i64>(units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]);

    std::uniform_real_distribution<double> unit_interval(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    auto draw = [&](std::vector<u64>& set, std::vector<std::complex<double>>& coeff) {
        const double density = unit_interval(rng);
        for (u64 u : units) {
            if (unit_interval(rng) < density) {
                set.push_back(u);
                coeff.push_back(std::polar(1.0, angle(rng)));
            }
        }
        if (set.empty()) {
            set.push_back(units.front());
            coeff.push_back(std::polar(1.0, angle(rng)));
        }
    };
    draw(inst.U, inst.phi);
    draw(inst.V, inst.psi);
    return inst;
}

namespace {

void require_window(i64 a, u64 y, const Modulus& m) {
    if (!m.is_unit(m.reduce(a))) {
        throw PreconditionError("T_k needs gcd(a, m) = 1, got a = " + std::to_string(a));
    }
    if (y < 1 || y > m.value()) {
        throw RangeError("window y = " + std::to_string(y) + " outside [1, " +
                         std::to_string(m.value()) + "]");
    }
}

}  // namespace

u64 t_k(i64 a, u64 y, const InverseResidueCounts& counts, const Modulus& m) {
    if (counts.modulus() != m.value()) throw IncompatibleError("modulus mismatch");
    require_window(a, y, m);
    const u64 mod = m.value();
    const u64 ar = m.reduce(a);
    const auto c = counts.counts();
    u64 total = 0;
    for (u64 r = 0; r < mod; ++r) {
        if (c[r] == 0) continue;
        const u64 v = mul_mod(ar, r, mod);
        if (v >= 1 && v <= y) total = checked_add(total, c[r]);
    }
    return total;
}

u64 t_k(i64 a, u64 x, u64 y, unsigned k, const Modulus& m) {
    require_window(a, y, m);
    return t_k(a, y, build_counts(x, k, m), m);
}

double Slack::factor(u64 m) const {
    return constant * std::pow(std::log(static_cast<double>(m)), log_exponent);
}

DeviationRecord delta_k(i64 a, u64 x, u64 y, unsigned k, const Modulus& m, Slack slack) {
    require_k(k);
    require_window(a, y, m);
    const auto counts = build_counts(x, k, m);
    DeviationRecord rec{};
    rec.k = k;
    rec.a = a;
    rec.x = x;
    rec.y = y;
    rec.m = m.value();
    rec.t_count = t_k(a, y, counts, m);
    const double mass = static_cast<double>(counts.total());
    rec.main_term = mass * static_cast<double>(y) / static_cast<double>(m.value());
    rec.delta = static_cast<double>(rec.t_count) - rec.main_term;
    rec.x_at_least_sqrt_m = x * x >= m.value();

    const double xd = static_cast<double>(x);
    const double md = static_cast<double>(m.value());
    const double s = slack.factor(m.value());
    switch (k) {
        case 1: rec.bound_rhs = (std::pow(xd, 15.0 / 16.0) + std::pow(md, 0.25) * std::pow(xd, 2.0 / 3.0)) * s; break;
        case 2: rec.bound_rhs = xd * std::sqrt(md) * s; break;
        case 3: rec.bound_rhs = std::pow(xd, 2.5) * s; break;
        case 4: rec.bound_rhs = std::pow(xd, 4.0) / std::sqrt(md) * s; break;
        default: rec.bound_rhs = std::nan(""); break;
    }
    return rec;
}

BoundContext BoundContext::make(i64 a, u64 x, const Modulus& m) {
    BoundContext ctx{};
    ctx.a = a;
    ctx.m = m.value();
    ctx.x = x;
    ctx.f = std::gcd(m.reduce(a), m.value());
    if (ctx.f == 0) ctx.f = m.value();
    const double xd = static_cast<double>(x);
    const double fd = static_cast<double>(ctx.f);
    const double md = static_cast<double>(ctx.m);
    ctx.s2_rhs = xd * (fd * xd / md + 1.0) * std::sqrt(md / fd);
    ctx.s3_rhs = std::pow(xd, 2.5) * std::sqrt(fd * xd / md + 1.0);
    ctx.s4_rhs = std::pow(xd, 4.0) / std::sqrt(md / fd);
    return ctx;
}

SkBilinearReport check_sk_bilinear(i64 a, u64 x, unsigned k, const Modulus& m) {
    if (k < 2 || k > 4) throw UnsupportedError("bilinear split covers k = 2, 3, 4 only");
    if (!m.is_unit(m.reduce(a))) {
        throw PreconditionError("bilinear bound needs gcd(a, m) = 1, got a = " +
                                std::to_string(a));
    }
    const auto one = build_counts_1(x, m);
    const auto two = convolve(one, one);
    const double e1 = static_cast<double>(one.sum_of_squares());
    const double e2 = static_cast<double>(two.sum_of_squares());
    const double md = static_cast<double>(m.value());

    InverseResidueCounts full = k == 2 ? two : (k == 3 ? convolve(two, one) : convolve(two, two));
    SkBilinearReport rep{};
    rep.k = k;
    rep.abs = s_k(a, full).abs;
    const double phi_norm = k == 2 ? e1 : e2;
    const double psi_norm = k == 4 ? e2 : e1;
    rep.rhs = std::sqrt(phi_norm * psi_norm * md);
    rep.pass = rep.abs <= rep.rhs + 1e-6 * rep.rhs;
    return rep;
}

}  // namespace pprod
