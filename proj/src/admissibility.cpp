#include "pprod/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "pprod/errors.hpp"

namespace pprod {

namespace {

double parse_decimal(std::string_view text) {
    std::size_t used = 0;
    const std::string s(text);
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("not a decimal constant: " + s);
    }
    if (used != s.size()) throw DomainError("not a decimal constant: " + s);
    return v;
}

}  // namespace

GreavesConstants::GreavesConstants(double d2, double d3, double d4, double d5, bool standard)
    : d_{d2, d3, d4, d5}, standard_(standard) {
    for (double d : d_) {
        if (!(d > 0.0 && d < 1.0)) throw DomainError("sieve constants must lie in (0, 1)");
    }
}

const GreavesConstants& GreavesConstants::standard() {
    static const GreavesConstants instance = [] {
        auto c = from_strings("0.044560", "0.074267", "0.103974", "0.124821");
        c.standard_ = true;
        return c;
    }();
    return instance;
}

GreavesConstants GreavesConstants::from_strings(std::string_view d2, std::string_view d3,
                                                std::string_view d4, std::string_view d5_plus) {
    return GreavesConstants(parse_decimal(d2), parse_decimal(d3), parse_decimal(d4),
                            parse_decimal(d5_plus), false);
}

double GreavesConstants::delta(unsigned ell) const {
    if (ell < 2) throw DomainError("delta_l is defined for l >= 2, got " + std::to_string(ell));
    return d_[std::min(ell, 5u) - 2];
}

double GreavesConstants::theta(unsigned ell) const { return static_cast<double>(ell) - delta(ell); }

Theta theta(unsigned ell, const GreavesConstants& c) { return {ell, c.theta(ell)}; }

std::string_view to_string(Case c) {
    switch (c) {
        case Case::Triple: return "triple";
        case Case::K2: return "k2";
        case Case::K3: return "k3";
        case Case::K4: return "k4";
    }
    return "?";
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Triple: return "triple";
        case Family::Quadruple: return "quadruple";
        case Family::Pair: return "pair";
    }
    return "?";
}

Case parse_case(std::string_view name) {
    if (name == "triple") return Case::Triple;
    if (name == "k2") return Case::K2;
    if (name == "k3") return Case::K3;
    if (name == "k4") return Case::K4;
    throw DomainError("unknown case '" + std::string(name) + "' (expected triple, k2, k3, k4)");
}

namespace {

unsigned primes_in(Case c) {
    switch (c) {
        case Case::Triple: return 1;
        case Case::K2: return 2;
        case Case::K3: return 3;
        case Case::K4: return 4;
    }
    return 0;
}

std::vector<ConditionMargin> margins_for(Case c, double alpha, double beta) {
    std::vector<std::pair<std::string, double>> dens;
    switch (c) {
        case Case::Triple:
            dens = {{"alpha/16+beta-1", alpha / 16.0 + beta - 1.0},
                    {"alpha/3+beta-5/4", alpha / 3.0 + beta - 1.25}};
            break;
        case Case::K2: dens = {{"alpha+beta-3/2", alpha + beta - 1.5}}; break;
        case Case::K3: dens = {{"alpha/2+beta-1", alpha / 2.0 + beta - 1.0}}; break;
        case Case::K4: dens = {{"beta-1/2", beta - 0.5}}; break;
    }
    std::vector<ConditionMargin> out;
    for (auto& [name, d] : dens) {
        const bool ok = d > kGuard;
        out.push_back({name, d, ok ? beta / d : std::numeric_limits<double>::infinity(), ok});
    }
    return out;
}

AdmissibilityVerdict evaluate(const AdmissibilityQuery& q, Case c, unsigned ell,
                              const GreavesConstants& consts) {
    AdmissibilityVerdict v;
    v.query = q;
    v.route = c;
    v.route_k = c == Case::Triple ? 0 : primes_in(c);
    v.route_ell = ell;
    v.theta = consts.theta(ell);
    v.margins = margins_for(c, q.alpha, q.beta);
    v.in_regime = q.alpha <= 1.0 && q.beta <= 1.0;

    const ConditionMargin* worst = nullptr;
    bool dens_ok = true;
    for (const auto& m : v.margins) {
        if (!m.denominator_ok) {
            if (dens_ok) v.binding_constraint = m.name + " <= 0";
            dens_ok = false;
        }
        if (!worst || m.ratio > worst->ratio) worst = &m;
    }
    v.ratio = worst->ratio;
    if (dens_ok) {
        v.binding_constraint = "beta/(" + worst->name + ")";
        v.passes = v.ratio <= v.theta * (1.0 + kGuard);
    }
    return v;
}

void require_theorem_domain(const AdmissibilityQuery& q) {
    if (q.ell < 2) throw DomainError("ell must be at least 2");
    if (!(q.alpha >= 0.5)) throw DomainError("the conditions need alpha >= 1/2");
    if (!(q.beta >= 0.0)) throw DomainError("the conditions need beta >= 0");
}

}  // namespace

AdmissibilityQuery make_query(Case c, unsigned ell, double alpha, double beta) {
    AdmissibilityQuery q;
    q.family = c == Case::Triple ? Family::Triple : Family::Quadruple;
    q.k = primes_in(c);
    q.ell = ell;
    q.alpha = alpha;
    q.beta = beta;
    return q;
}

AdmissibilityVerdict check_theorem(const AdmissibilityQuery& q, const GreavesConstants& consts) {
    switch (q.family) {
        case Family::Triple:
            require_theorem_domain(q);
            return evaluate(q, Case::Triple, q.ell, consts);
        case Family::Quadruple: {
            require_theorem_domain(q);
            switch (q.k) {
                case 1: return evaluate(q, Case::Triple, q.ell, consts);
                case 2: return evaluate(q, Case::K2, q.ell, consts);
                case 3: return evaluate(q, Case::K3, q.ell, consts);
                case 4: return evaluate(q, Case::K4, q.ell, consts);
                default:
                    throw UnsupportedError("quadruples are covered for k in {1, 2, 3, 4} only, got k = " +
                                           std::to_string(q.k));
            }
        }
        case Family::Pair: {
            // (K; alpha) follows from (K-1; alpha, alpha) or (k, K-k; alpha, alpha).
            if (!(q.alpha >= 0.5)) throw DomainError("the conditions need alpha >= 1/2");
            AdmissibilityQuery diag = q;
            diag.beta = q.alpha;
            std::optional<AdmissibilityVerdict> best;
            for (Case c : {Case::Triple, Case::K2, Case::K3, Case::K4}) {
                const unsigned used = primes_in(c);
                if (q.k < used + 2) continue;
                auto v = evaluate(diag, c, q.k - used, consts);
                v.query = q;
                if (!best || (v.passes && !best->passes) ||
                    (v.passes == best->passes && v.ratio - v.theta < best->ratio - best->theta)) {
                    best = std::move(v);
                }
            }
            if (!best) {
                AdmissibilityVerdict v;
                v.query = q;
                v.binding_constraint = "no implying triple or quadruple for k < 3";
                v.ratio = std::numeric_limits<double>::infinity();
                v.in_regime = q.alpha <= 1.0;
                return v;
            }
            return *best;
        }
    }
    throw UnsupportedError("unknown family");
}

double corollary_alpha(Case c, unsigned ell, const GreavesConstants& consts) {
    if (ell < 3) throw DomainError("the closed forms need ell >= 3, got " + std::to_string(ell));
    const double t = consts.theta(ell);
    switch (c) {
        case Case::Triple: return 16.0 * t / (17.0 * t - 16.0);
        case Case::K2: return 3.0 * t / (4.0 * t - 2.0);
        case Case::K3: return 2.0 * t / (3.0 * t - 2.0);
        case Case::K4: return t / (2.0 * t - 2.0);
    }
    throw UnsupportedError("unknown case");
}

PairResult to_pair(const AdmissibilityQuery& q) {
    if (q.beta != q.alpha) {
        throw PreconditionError("the pair implication needs beta == alpha");
    }
    switch (q.family) {
        case Family::Triple: return {q.ell + 1, q.alpha, q.for_primes};
        case Family::Quadruple: return {q.k + q.ell, q.alpha, q.for_primes};
        case Family::Pair: break;
    }
    throw PreconditionError("query is already a pair");
}

std::string round_up_3(double value) {
    const double up = std::ceil(value * 1000.0 - 1e-9) / 1000.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", up);
    return buf;
}

std::vector<ScanPoint> region_scan(Case c, unsigned ell, const std::vector<double>& alpha_grid,
                                   const std::vector<double>& beta_grid,
                                   const GreavesConstants& consts) {
    for (const auto* grid : {&alpha_grid, &beta_grid}) {
        for (std::size_t i = 0; i < grid->size(); ++i) {
            if ((*grid)[i] < 0.0 || (*grid)[i] > 1.0) throw DomainError("grid must lie in [0, 1]");
            if (i > 0 && (*grid)[i] < (*grid)[i - 1]) throw DomainError("grid must be ascending");
        }
    }
    std::vector<ScanPoint> out;
    out.reserve(alpha_grid.size() * beta_grid.size());
    for (double a : alpha_grid) {
        for (double b : beta_grid) {
            // Outside alpha >= 1/2 the theorem says nothing; report a failure.
            if (a < 0.5) {
                out.push_back({a, b, std::numeric_limits<double>::infinity(), false,
                               "alpha < 1/2"});
                continue;
            }
            const auto v = check_theorem(make_query(c, ell, a, b), consts);
            out.push_back({a, b, v.ratio, v.passes, v.binding_constraint});
        }
    }
    return out;
}

PublishedTable reproduce_table(const GreavesConstants& consts) {
    struct Spec {
        Case c;
        unsigned ell;
    };
    static constexpr Spec kRows[] = {
        {Case::K2, 3}, {Case::K3, 3}, {Case::K4, 3}, {Case::K4, 4}, {Case::Triple, 17}};

    PublishedTable table;
    for (const auto& s : kRows) {
        TableRow row;
        row.c = s.c;
        row.k = primes_in(s.c);
        row.ell = s.ell;
        row.alpha_exact = corollary_alpha(s.c, s.ell, consts);
        row.alpha_printed = round_up_3(row.alpha_exact);
        const double printed = std::stod(row.alpha_printed);
        const auto q = make_query(s.c, s.ell, printed, printed);
        row.pair_k = to_pair(q).k;
        row.passes_at_printed = check_theorem(q, consts).passes;
        row.fails_below =
            !check_theorem(make_query(s.c, s.ell, printed - 0.002, printed - 0.002), consts).passes;
        table.rows.push_back(std::move(row));
    }
    for (unsigned ell : {3u, 4u, 5u, 10u, 20u, 50u, 100u, 200u, 500u, 1000u}) {
        table.limit.push_back({ell, corollary_alpha(Case::K4, ell, consts), 4 + ell});
    }
    return table;
}

}  // namespace pprod
