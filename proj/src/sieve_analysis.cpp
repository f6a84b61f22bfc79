#include "pprod/sieve_analysis.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pprod/coverage.hpp"
#include "pprod/errors.hpp"

namespace pprod {

SievedSequence::SievedSequence(i64 a, u64 m, u64 x, u64 y, unsigned k,
                               std::vector<u64> multiplicity, std::vector<u64> witnesses)
    : a_(a), m_(m), x_(x), y_(y), k_(k), multiplicity_(std::move(multiplicity)),
      witnesses_(std::move(witnesses)) {
    for (u64 c : multiplicity_) size_ = checked_add(size_, c);
}

std::optional<std::vector<u64>> SievedSequence::witness(u64 v) const {
    if (v == 0 || v > y_ || multiplicity_[v] == 0) return std::nullopt;
    const auto first = witnesses_.begin() + static_cast<std::ptrdiff_t>(v * k_);
    return std::vector<u64>(first, first + k_);
}

SievedSequence build_sequence(i64 a, const Modulus& m, u64 x, u64 y, unsigned k, u64 budget) {
    if (k == 0) throw DomainError("k must be at least 1");
    if (!m.is_unit(m.reduce(a))) {
        throw PreconditionError("the sieved sequence needs gcd(a, m) = 1");
    }
    if (y < 1 || y > m.value()) throw RangeError("y must lie in [1, m]");

    std::vector<u64> primes;
    if (x >= 2) primes = coprime_primes(sieve_primes(x), m, x);
    u64 work = 1;
    for (unsigned i = 0; i < k; ++i) work = checked_mul(work, primes.size());
    if (work > budget) {
        throw ResourceError("sequence needs " + std::to_string(work) +
                            " tuples, budget is " + std::to_string(budget));
    }

    const auto inv = batch_inverse(primes, m);
    const u64 mod = m.value();
    const u64 ar = m.reduce(a);
    std::vector<u64> mult(y + 1, 0);
    std::vector<u64> wit((y + 1) * k, 0);
    if (work > 0) {
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            u64 v = ar;
            for (unsigned i = 0; i < k; ++i) v = mul_mod(v, inv[idx[i]], mod);
            if (v >= 1 && v <= y) {
                if (mult[v]++ == 0) {
                    for (unsigned i = 0; i < k; ++i) wit[v * k + i] = primes[idx[i]];
                }
            }
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && ++idx[pos] == primes.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return SievedSequence(a, mod, x, y, k, std::move(mult), std::move(wit));
}

DistributionProfile profile_distribution(const SievedSequence& seq, u64 level,
                                         const std::vector<double>& kappas) {
    if (level < 1) throw DomainError("level D must be at least 1");
    DistributionProfile prof;
    prof.level = level;

    u64 primes_count = 0;
    if (seq.x() >= 2) {
        primes_count = coprime_primes(sieve_primes(seq.x()), Modulus(seq.m()), seq.x()).size();
    }
    const double mass = std::pow(static_cast<double>(primes_count), static_cast<double>(seq.k()));
    prof.n_main = mass * static_cast<double>(seq.y()) / static_cast<double>(seq.m());

    for (u64 d = 1; d <= level; ++d) {
        u64 count = 0;
        for (u64 v = d; v <= seq.y(); v += d) count = checked_add(count, seq.multiplicity(v));
        const bool coprime = std::gcd(d, seq.m()) == 1;
        const double expected = coprime ? prof.n_main / static_cast<double>(d) : 0.0;
        const double r = std::abs(static_cast<double>(count) - expected);
        prof.records.push_back({d, count, expected, r});
        prof.sum_remainders += r;
    }
    for (double kappa : kappas) {
        prof.curves.push_back({kappa, std::pow(prof.n_main, 1.0 - kappa)});
    }
    return prof;
}

LevelExponents level_exponents(unsigned k, double alpha, double beta, double epsilon,
                               unsigned ell, const GreavesConstants& c) {
    if (k < 1 || k > 4) {
        throw UnsupportedError("level exponents are known for k in {1, 2, 3, 4}, got " +
                               std::to_string(k));
    }
    if (!(alpha >= 0.5 && alpha <= 1.0)) throw DomainError("need 1/2 <= alpha <= 1");
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("need 0 <= beta <= 1");
    if (!(epsilon >= 0.0)) throw DomainError("epsilon must be nonnegative");

    LevelExponents out{};
    out.k = k;
    out.alpha = alpha;
    out.beta = beta;
    out.epsilon = epsilon;
    out.ell = ell;
    out.theta = c.theta(ell);
    switch (k) {
        case 1:
            out.d_exponent = std::min(alpha / 16.0 + beta - 1.0, alpha / 3.0 + beta - 1.25);
            break;
        case 2: out.d_exponent = alpha + beta - 1.5; break;
        case 3: out.d_exponent = alpha / 2.0 + beta - 1.0; break;
        case 4: out.d_exponent = beta - 0.5; break;
    }
    if (out.d_exponent > kGuard) {
        out.g = (beta + epsilon) / out.d_exponent;
        out.sieve_pass = sieve_predicate(*out.g, ell, c);
    }
    return out;
}

bool sieve_predicate(double g, unsigned ell, const GreavesConstants& c) {
    if (ell < 2) throw DomainError("ell must be at least 2");
    if (!std::isfinite(g)) throw DomainError("degree g must be finite");
    return g < c.theta(ell);
}

std::optional<SequenceWitness> end_to_end_witness(const Modulus& m, u64 x, u64 y, unsigned k,
                                                  unsigned ell, i64 a, u64 budget) {
    const auto seq = build_sequence(a, m, x, y, k, budget);
    if (y < 2 || ell == 0) return std::nullopt;
    const auto omega = omega_table(y);
    for (u64 v = 2; v <= y; ++v) {
        if (seq.multiplicity(v) != 0 && omega[v] <= ell) return SequenceWitness{v, *seq.witness(v)};
    }
    return std::nullopt;
}

}  // namespace pprod
