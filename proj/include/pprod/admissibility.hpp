#pragma once

// Admissibility conditions for exponent pairs, the closed-form boundary
// exponents on the diagonal alpha = beta, the implications that turn
// triples and quadruples into pairs, and the published numeric table.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pprod {

/// Greaves' sieve constants delta_l, stored as decimal strings and parsed
/// once. Values for l >= 5 are all equal to the l = 5 entry.
class GreavesConstants {
public:
    static const GreavesConstants& standard();
    /// Alternate values for delta_2, delta_3, delta_4 and delta_{>=5}.
    static GreavesConstants from_strings(std::string_view d2, std::string_view d3,
                                         std::string_view d4, std::string_view d5_plus);

    double delta(unsigned ell) const;
    /// theta_l = l - delta_l.
    double theta(unsigned ell) const;
    bool is_standard() const noexcept { return standard_; }

    static constexpr std::string_view kProvenanceNote =
        "delta_l are Greaves' sieve constants as quoted; a full derivation was never "
        "published. Supply alternates with --greaves.";

private:
    GreavesConstants(double d2, double d3, double d4, double d5, bool standard);
    double d_[4];
    bool standard_;
};

struct Theta {
    unsigned ell;
    double value;
};

Theta theta(unsigned ell, const GreavesConstants& c = GreavesConstants::standard());

enum class Family { Triple, Quadruple, Pair };

/// Diagonal cases of the theorem: triples (one prime) and quadruples with
/// k = 2, 3, 4 primes.
enum class Case { Triple, K2, K3, K4 };

std::string_view to_string(Case c);
std::string_view to_string(Family f);
Case parse_case(std::string_view name);

struct AdmissibilityQuery {
    Family family = Family::Quadruple;
    unsigned k = 2;
    unsigned ell = 2;
    double alpha = 0.0;
    double beta = 0.0;
    // Pair records only: tag for the variant where the almost-prime factor is
    // itself prime. Carried through, never evaluated separately.
    bool for_primes = false;
};

struct ConditionMargin {
    std::string name;     // the denominator expression
    double denominator;
    double ratio;         // beta / denominator; +inf when denominator <= 0
    bool denominator_ok;
};

struct AdmissibilityVerdict {
    AdmissibilityQuery query;
    Case route = Case::Triple;  // which theorem case produced the verdict
    unsigned route_k = 0;       // k of the routed quadruple (0 for triples)
    unsigned route_ell = 0;
    bool passes = false;
    std::string binding_constraint;
    std::vector<ConditionMargin> margins;
    double ratio = 0.0;  // largest ratio across conditions
    double theta = 0.0;
    bool in_regime = true;  // alpha, beta <= 1
};

/// Guard band: absolute on denominators, relative on ratio <= theta.
inline constexpr double kGuard = 1e-12;

/// Evaluates the theorem's conditions. Quadruples with k = 1 route to the
/// triple case; k >= 5 throws UnsupportedError. A pair (K; alpha) passes when
/// some triple or quadruple implying it does.
AdmissibilityVerdict check_theorem(const AdmissibilityQuery& query,
                                   const GreavesConstants& c = GreavesConstants::standard());

/// Closed-form alpha on the diagonal where the binding ratio equals theta_l.
/// Requires ell >= 3.
double corollary_alpha(Case c, unsigned ell,
                       const GreavesConstants& consts = GreavesConstants::standard());

struct PairResult {
    unsigned k;
    double alpha;
    bool for_primes = false;
};

/// (k, l; a, a) -> (k + l; a) and (l; a, a) -> (l + 1; a). Requires beta == alpha.
PairResult to_pair(const AdmissibilityQuery& query);

/// Round up at the third decimal, printed with three decimals.
std::string round_up_3(double value);

struct ScanPoint {
    double alpha;
    double beta;
    double ratio;
    bool passes;
    std::string binding_constraint;
};

std::vector<ScanPoint> region_scan(Case c, unsigned ell, const std::vector<double>& alpha_grid,
                                   const std::vector<double>& beta_grid,
                                   const GreavesConstants& consts = GreavesConstants::standard());

/// Query for a diagonal case at (alpha, beta).
AdmissibilityQuery make_query(Case c, unsigned ell, double alpha, double beta);

struct TableRow {
    Case c;
    unsigned k;  // primes in the product (1 for the triple)
    unsigned ell;
    double alpha_exact;
    std::string alpha_printed;
    unsigned pair_k;
    bool passes_at_printed;
    bool fails_below;  // at printed - 0.002
};

struct LimitRow {
    unsigned ell;
    double alpha_exact;
    unsigned pair_k;
};

struct PublishedTable {
    std::vector<TableRow> rows;
    std::vector<LimitRow> limit;
};

/// The published diagonal exponents, their pair images and the k = 4
/// sequence approaching 1/2 as ell grows.
PublishedTable reproduce_table(const GreavesConstants& c = GreavesConstants::standard());

}  // namespace pprod
