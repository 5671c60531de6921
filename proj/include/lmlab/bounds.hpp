#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmlab/core.hpp"
#include "lmlab/numeric.hpp"

namespace lmlab {

enum class Scope { all_tilings, lattice_only };
enum class Status { excludes, silent, hypotheses_unmet, boundary_uncertain };

std::string to_string(Scope scope);
std::string to_string(Status status);
Scope parse_scope(const std::string& text);
Status parse_status(const std::string& text);

/// One exclusion criterion evaluated at a parameter triple. `detail` records
/// the inequality that decided the status, with the values compared.
struct CriterionOutcome {
    std::string name;
    Scope scope = Scope::all_tilings;
    Status status = Status::hypotheses_unmet;
    std::string detail;

    friend bool operator==(const CriterionOutcome&, const CriterionOutcome&) = default;
};

// Each criterion follows the strictness of the corresponding published
// statement. Polynomial thresholds are compared in exact integers; thresholds
// involving logarithms use Interval and report boundary_uncertain whenever
// the enclosure straddles the compared value.

/// s >= 2, n >= 3, e < n: excludes iff e >= (4n-2)/5.
CriterionOutcome bound_prereq(std::int64_t n, std::int64_t e, int s);

/// s in {1, 2, 3}, n >= 3: excludes iff e is at least the square-root bound
/// and below the linear threshold. Throws invalid-s for other s.
CriterionOutcome bound_small_s(std::int64_t n, std::int64_t e, int s);

/// s in {1, 2}, epsilon > 0. Applies only when the explicit size condition
/// ceil(log(c n) / log(base)) < epsilon n / 2 holds. The square-root bound
/// uses the coefficient rounded up to two decimals.
CriterionOutcome bound_asymptotic(std::int64_t n, std::int64_t e, int s, const Rational& epsilon);

struct TableRow {
    std::int64_t min_n = 0;
    Rational coefficient;  // rounded up to a multiple of 1/100
    Interval coefficient_enclosure;
};

/// Least n meeting the size condition, and the coefficient of n log2 n.
TableRow table_row(int s, const Rational& epsilon);

enum class LargeSMode {
    displayed,  // e < sqrt(12.36 n), with 12.36 = 309/25
    strict,     // e < sqrt(3n / (3 sqrt 2 - 4)) - 1
};

/// s >= 3, n >= 61, e < n.
CriterionOutcome bound_large_s(std::int64_t n, std::int64_t e, int s, LargeSMode mode = LargeSMode::displayed);

/// Lattice-only necessary conditions for 2 <= e < n <= 2e.
CriterionOutcome bound_prior_lattice(std::int64_t n, std::int64_t e, int kplus, int kminus);

enum class ExistenceVerdict { exists, excluded, open };
std::string to_string(ExistenceVerdict verdict);
ExistenceVerdict parse_existence_verdict(const std::string& text);

struct ClassificationReport {
    std::int64_t n = 0;
    std::int64_t e = 0;
    int s = 0;
    ExistenceVerdict verdict = ExistenceVerdict::open;
    bool lattice_excluded = false;
    std::vector<CriterionOutcome> criteria;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyOptions {
    std::vector<Rational> epsilons{Rational(1, 10), Rational(1, 15), Rational(1, 20)};
    LargeSMode large_s_mode = LargeSMode::displayed;
};

/// Lattice tilings shipped with the library; each is re-verified before use.
struct KnownTiling {
    BallParams params;
    std::string generator;  // lattice text format
};
const std::vector<KnownTiling>& known_tilings();

/// Constructive reason a tiling exists: e = 0, e = n, or a verified known tiling.
std::optional<std::string> existence_witness(std::int64_t n, std::int64_t e, int s);

ClassificationReport classify(std::int64_t n, std::int64_t e, int s, const ClassifyOptions& options = {});

struct PackingDensityBound {
    bool applicable = false;  // (e+1)^2 > 2n
    Rational value;
    bool vacuous = false;  // value >= 1
};

/// n e (e+1) / (((e+1)^2 - 2n) s (n - e)); throws invalid-parameter for e >= n.
PackingDensityBound packing_density_bound(std::int64_t n, std::int64_t e, int s);

enum class DensityRegime { sqrt, linear };

/// Leading constants a^2 / (s (a^2 - 2)) for e = a sqrt(n), and
/// 1 / (s (1 - a)) for e = a n.
Rational density_bound_asymptotic(DensityRegime regime, const Rational& a, int s);

}  // namespace lmlab
