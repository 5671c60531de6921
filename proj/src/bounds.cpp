#include "lmlab/bounds.hpp"

#include <mutex>
#include <sstream>

#include "lmlab/lattice.hpp"
#include "lmlab/text_format.hpp"

namespace lmlab {

std::string to_string(Scope scope) { return scope == Scope::all_tilings ? "all-tilings" : "lattice-only"; }

std::string to_string(Status status) {
    switch (status) {
        case Status::excludes: return "excludes";
        case Status::silent: return "silent";
        case Status::hypotheses_unmet: return "hypotheses-unmet";
        case Status::boundary_uncertain: return "boundary-uncertain";
    }
    return "hypotheses-unmet";
}

Scope parse_scope(const std::string& text) {
    if (text == "all-tilings") return Scope::all_tilings;
    if (text == "lattice-only") return Scope::lattice_only;
    throw Error(ErrorKind::parse_error, "unknown scope '" + text + "'");
}

Status parse_status(const std::string& text) {
    for (auto st : {Status::excludes, Status::silent, Status::hypotheses_unmet, Status::boundary_uncertain})
        if (to_string(st) == text) return st;
    throw Error(ErrorKind::parse_error, "unknown status '" + text + "'");
}

std::string to_string(ExistenceVerdict verdict) {
    switch (verdict) {
        case ExistenceVerdict::exists: return "exists";
        case ExistenceVerdict::excluded: return "excluded";
        case ExistenceVerdict::open: return "open";
    }
    return "open";
}

ExistenceVerdict parse_existence_verdict(const std::string& text) {
    for (auto v : {ExistenceVerdict::exists, ExistenceVerdict::excluded, ExistenceVerdict::open})
        if (to_string(v) == text) return v;
    throw Error(ErrorKind::parse_error, "unknown verdict '" + text + "'");
}

namespace {

Integer big(std::int64_t v) { return Integer(std::to_string(v)); }

CriterionOutcome outcome(std::string name, Scope scope, Status status, std::string detail) {
    return CriterionOutcome{std::move(name), scope, status, std::move(detail)};
}

// Least r >= 0 with (num/den)^r >= target, for num > den > 0.
std::int64_t least_exponent(const Integer& num, const Integer& den, const Rational& target) {
    std::int64_t r = 0;
    Integer pn = 1, pd = 1;
    while (pn * target.get_den() < pd * target.get_num()) {
        pn *= num;
        pd *= den;
        ++r;
    }
    return r;
}

std::string show(const Interval& x) {
    std::ostringstream os;
    os.precision(17);
    os << '[' << x.lo() << ", " << x.hi() << ']';
    return os.str();
}

Status status_from(Comparison c) {
    switch (c) {
        case Comparison::above_or_equal: return Status::excludes;
        case Comparison::below: return Status::silent;
        case Comparison::uncertain: return Status::boundary_uncertain;
    }
    return Status::boundary_uncertain;
}

}  // namespace

CriterionOutcome bound_prereq(std::int64_t n, std::int64_t e, int s) {
    const std::string name = "prereq-4n-2-over-5";
    if (s < 2 || n < 3 || e < 0 || e >= n)
        return outcome(name, Scope::all_tilings, Status::hypotheses_unmet, "needs s >= 2, n >= 3, 0 <= e < n");
    Integer lhs = 5 * big(e), rhs = 4 * big(n) - 2;
    const bool ex = lhs >= rhs;
    return outcome(name, Scope::all_tilings, ex ? Status::excludes : Status::silent,
                   "5e = " + lhs.get_str() + (ex ? " >= " : " < ") + "4n-2 = " + rhs.get_str());
}

CriterionOutcome bound_small_s(std::int64_t n, std::int64_t e, int s) {
    if (s < 1 || s > 3) throw Error(ErrorKind::invalid_s, "small-s criterion covers s in {1, 2, 3}");
    const std::string name = "small-s";
    if (n < 3 || e < 0 || e > n)
        return outcome(name, Scope::all_tilings, Status::hypotheses_unmet, "needs n >= 3, 0 <= e <= n");

    // r = ceil(log_base(target)), linear threshold (num/den) n - r, and the
    // square-root threshold coef * n * log_base(target).
    Integer base_num, base_den;
    Rational target, linear, coef;
    switch (s) {
        case 1: base_num = 2; base_den = 1; target = Rational(big(n)); linear = Rational(1, 2); coef = 2; break;
        case 2: base_num = 4; base_den = 3; target = Rational(3 * big(n), 2); linear = Rational(3, 4); coef = Rational(12, 5); break;
        default: base_num = 6; base_den = 5; target = Rational(5 * big(n), 3); linear = Rational(5, 6); coef = Rational(8, 3); break;
    }
    target.canonicalize();
    const std::int64_t r = least_exponent(base_num, base_den, target);
    Rational linear_threshold = linear * big(n) - big(r);
    std::ostringstream detail;
    detail << "r = " << r << "; ";
    if (Rational(big(e)) >= linear_threshold) {
        detail << "e = " << e << " >= linear threshold " << to_string(linear_threshold);
        return outcome(name, Scope::all_tilings, Status::silent, detail.str());
    }
    detail << "e = " << e << " < linear threshold " << to_string(linear_threshold) << "; ";
    Interval log_target = log2(Interval::from(target));
    if (s != 1) log_target = log_target / log2(Interval::from(Rational(base_num, base_den)));
    Interval bound = Interval::from(coef) * Interval::from(big(n)) * log_target;
    const Comparison c = compare(Rational(big(e) * big(e)), bound);
    detail << "e^2 = " << Integer(big(e) * big(e)).get_str()
           << (c == Comparison::below ? " < " : c == Comparison::above_or_equal ? " >= " : " ~ ")
           << to_string(coef) << "*n*log = " << show(bound);
    return outcome(name, Scope::all_tilings, status_from(c), detail.str());
}

namespace {

struct AsymptoticShape {
    Integer base_num, base_den;  // base = 1 + 9eps/4 or 1 + 25eps/8
    Rational target;             // n or 3n/2
    Rational linear;             // 2/3 or 4/5
    Rational coef_num;           // 2 or 12/5, divided by log2(base)
};

AsymptoticShape asymptotic_shape(std::int64_t n, int s, const Rational& eps) {
    AsymptoticShape out;
    const Integer p = eps.get_num(), q = eps.get_den();
    if (s == 1) {
        out.base_num = 4 * q + 9 * p;
        out.base_den = 4 * q;
        out.target = Rational(big(n));
        out.linear = Rational(2, 3);
        out.coef_num = 2;
    } else {
        out.base_num = 8 * q + 25 * p;
        out.base_den = 8 * q;
        out.target = Rational(3 * big(n), 2);
        out.linear = Rational(4, 5);
        out.coef_num = Rational(12, 5);
    }
    out.target.canonicalize();
    return out;
}

void check_asymptotic_args(int s, const Rational& eps) {
    if (s != 1 && s != 2) throw Error(ErrorKind::invalid_s, "asymptotic criterion covers s in {1, 2}");
    if (eps <= 0) throw Error(ErrorKind::invalid_parameter, "epsilon must be positive");
}

// 2 q r < p n, i.e. r < eps n / 2.
bool size_condition(std::int64_t n, std::int64_t r, const Rational& eps) {
    return 2 * eps.get_den() * big(r) < eps.get_num() * big(n);
}

Interval coefficient_enclosure(int s, const Rational& eps) {
    auto shape = asymptotic_shape(1, s, eps);
    return Interval::from(shape.coef_num) / log2(Interval::from(Rational(shape.base_num, shape.base_den)));
}

Rational round_up_hundredths(const Interval& x) {
    Rational lo = ceil_hundredths(Rational(x.lo()));
    Rational hi = ceil_hundredths(Rational(x.hi()));
    // On a straddle the larger value is the conservative (weaker) bound.
    return hi > lo ? hi : lo;
}

}  // namespace

CriterionOutcome bound_asymptotic(std::int64_t n, std::int64_t e, int s, const Rational& epsilon) {
    check_asymptotic_args(s, epsilon);
    const std::string name = "asymptotic-eps-" + to_string(epsilon);
    if (n < 3 || e < 0 || e > n)
        return outcome(name, Scope::all_tilings, Status::hypotheses_unmet, "needs n >= 3, 0 <= e <= n");
    const auto shape = asymptotic_shape(n, s, epsilon);
    const std::int64_t r = least_exponent(shape.base_num, shape.base_den, shape.target);
    std::ostringstream detail;
    detail << "r = " << r;
    if (!size_condition(n, r, epsilon)) {
        detail << " >= eps*n/2 = " << to_string(Rational(epsilon * big(n) / 2)) << " (size condition fails)";
        return outcome(name, Scope::all_tilings, Status::hypotheses_unmet, detail.str());
    }
    detail << " < eps*n/2; ";
    Rational linear_threshold = (shape.linear - epsilon) * big(n);
    if (Rational(big(e)) > linear_threshold) {
        detail << "e = " << e << " > (" << to_string(shape.linear) << "-eps)n = " << to_string(linear_threshold);
        return outcome(name, Scope::all_tilings, Status::silent, detail.str());
    }
    detail << "e = " << e << " <= (" << to_string(shape.linear) << "-eps)n = " << to_string(linear_threshold)
           << "; ";
    const Rational coef = round_up_hundredths(coefficient_enclosure(s, epsilon));
    Interval bound = Interval::from(coef) * Interval::from(big(n)) * log2(Interval::from(big(n)));
    const Comparison c = compare(Rational(big(e) * big(e)), bound);
    detail << "e^2 = " << Integer(big(e) * big(e)).get_str()
           << (c == Comparison::below ? " < " : c == Comparison::above_or_equal ? " >= " : " ~ ")
           << to_decimal(coef, 2) << "*n*log2(n) = " << show(bound);
    return outcome(name, Scope::all_tilings, status_from(c), detail.str());
}

TableRow table_row(int s, const Rational& epsilon) {
    check_asymptotic_args(s, epsilon);
    if (epsilon >= 1) throw Error(ErrorKind::parameter_out_of_range, "epsilon must lie in (0, 1)");
    // r(n) is nondecreasing, so a failure at n with exponent r forces
    // failures up to 2 q r / p; jump past them.
    std::int64_t n = 3;
    for (;;) {
        const auto shape = asymptotic_shape(n, s, epsilon);
        const std::int64_t r = least_exponent(shape.base_num, shape.base_den, shape.target);
        if (size_condition(n, r, epsilon)) break;
        Integer jump = 2 * epsilon.get_den() * big(r) / epsilon.get_num() + 1;
        n = std::max<std::int64_t>(n + 1, to_int64(jump));
    }
    TableRow row;
    row.min_n = n;
    row.coefficient_enclosure = coefficient_enclosure(s, epsilon);
    row.coefficient = round_up_hundredths(row.coefficient_enclosure);
    return row;
}

namespace {

// Minimal n beyond which sqrt(12.36 n) can drop below the proven
// sqrt(3n/(3 sqrt 2 - 4)) - 1.
bool strict_excludes(std::int64_t n, std::int64_t e) {
    // e + 1 >= sqrt(3n/(3 sqrt 2 - 4))  <=>  18 (e+1)^4 >= (3n + 4 (e+1)^2)^2
    Integer e1 = big(e) + 1;
    Integer sq = e1 * e1;
    Integer rhs = 3 * big(n) + 4 * sq;
    return 18 * sq * sq >= rhs * rhs;
}

}  // namespace

CriterionOutcome bound_large_s(std::int64_t n, std::int64_t e, int s, LargeSMode mode) {
    const std::string name = "large-s";
    if (s < 3) return outcome(name, Scope::all_tilings, Status::hypotheses_unmet, "needs s >= 3");
    if (n < 61 || e < 0 || e >= n)
        return outcome(name, Scope::all_tilings, Status::hypotheses_unmet, "needs n >= 61, 0 <= e < n");

    std::ostringstream detail;
    bool above = false;
    if (mode == LargeSMode::displayed) {
        Integer lhs = 25 * big(e) * big(e), rhs = 309 * big(n);
        above = lhs >= rhs;
        detail << "25e^2 = " << lhs.get_str() << (above ? " >= " : " < ") << "309n = " << rhs.get_str();
    } else {
        above = strict_excludes(n, e);
        detail << "e+1 " << (above ? ">=" : "<") << " sqrt(3n/(3sqrt2-4)) (exact: 18(e+1)^4 vs (3n+4(e+1)^2)^2)";
    }
    if (!above) return outcome(name, Scope::all_tilings, Status::silent, detail.str());

    if (s == 3) {
        const bool in_band = 3 * big(e) > 2 * (big(n) - 1) && 5 * big(e) < 4 * big(n) - 2;
        if (in_band && n <= 1347) {
            detail << "; escape band 2(n-1)/3 < e < (4n-2)/5 holds (band applied for n <= 1347 only,"
                   << " dropped from n >= 1348 on)";
            return outcome(name, Scope::all_tilings, Status::silent, detail.str());
        }
        if (in_band) detail << "; escape band dropped for n >= 1348";
    }
    if (mode == LargeSMode::displayed && !strict_excludes(n, e)) {
        detail << "; but e+1 < sqrt(3n/(3sqrt2-4)), so 12.36 is not backed at this n";
        return outcome(name, Scope::all_tilings, Status::boundary_uncertain, detail.str());
    }
    return outcome(name, Scope::all_tilings, Status::excludes, detail.str());
}

CriterionOutcome bound_prior_lattice(std::int64_t n, std::int64_t e, int kplus, int kminus) {
    const std::string name = "prior-lattice";
    if (!(2 <= e && e < n && n <= 2 * e) || kminus < 0 || kplus < kminus || kplus == 0)
        return outcome(name, Scope::lattice_only, Status::hypotheses_unmet,
                       "needs 2 <= e < n <= 2e and kplus >= kminus >= 0, not both 0");
    const Integer N = big(n), E = big(e);
    std::vector<std::string> holding;
    if (kminus == 0) {
        if (e == n - 1) holding.push_back("1a: e = n-1");
        if (3 * E >= 2 * N - 2 && e <= n - 3 && kplus == 1) holding.push_back("1b: (2n-2)/3 <= e <= n-3, k+ = 1");
        if (2 * E >= N && 3 * E < 2 * N - 2) holding.push_back("1c: n/2 <= e < (2n-2)/3");
    }
    std::string sum_note;
    if (kplus == kminus) {
        if (5 * E >= 4 * N - 2 && e <= n - 1 && kplus == 1) holding.push_back("2a: (4n-2)/5 <= e <= n-1, k = 1");
        if (2 * E >= N && 5 * E < 4 * N - 2) {
            Integer sum = 0, power = 1;
            for (std::int64_t i = 1; i <= e; ++i) {
                sum += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) * power;
                power *= 2 * kplus;
            }
            Integer rhs = ipow(Integer(kplus + 1), static_cast<unsigned long>(e));
            sum_note = "sum C(n,i)(2k)^(i-1) = " + sum.get_str() + (sum >= rhs ? " >= " : " < ") +
                       "(k+1)^e = " + rhs.get_str();
            if (sum >= rhs) holding.push_back("2b: " + sum_note);
        }
    }
    if (holding.empty()) {
        std::string detail = "no listed case holds";
        if (!sum_note.empty()) detail += " (" + sum_note + ")";
        return outcome(name, Scope::lattice_only, Status::excludes, detail);
    }
    std::string detail = "case ";
    for (std::size_t i = 0; i < holding.size(); ++i) detail += (i ? "; " : "") + holding[i];
    return outcome(name, Scope::lattice_only, Status::silent, detail);
}

const std::vector<KnownTiling>& known_tilings() {
    static const std::vector<KnownTiling> tilings{
        {BallParams::symmetric(2, 1, 1), "1,2;2,-1"},
        {BallParams::symmetric(3, 1, 1), "7,0,0;-2,1,0;-3,0,1"},
        {BallParams::symmetric(4, 1, 1), "9,0,0,0;-2,1,0,0;-3,0,1,0;-4,0,0,1"},
        {BallParams::symmetric(3, 1, 2), "1,0,3;0,1,4;0,0,13"},
    };
    return tilings;
}

namespace {

const std::vector<KnownTiling>& verified_tilings() {
    static const std::vector<KnownTiling> verified = [] {
        std::vector<KnownTiling> out;
        for (const auto& t : known_tilings())
            if (verify_lattice_tiling(parse_lattice(t.generator), t.params).verdict == Verdict::tiles)
                out.push_back(t);
        return out;
    }();
    return verified;
}

}  // namespace

std::optional<std::string> existence_witness(std::int64_t n, std::int64_t e, int s) {
    if (e == 0) return "e = 0: Z^n itself is a perfect code";
    if (e == n) return "e = n: the hypercube [-s,s]^n tiles by ((2s+1)Z)^n";
    for (const auto& t : verified_tilings())
        if (t.params.n == n && t.params.e == e && t.params.kplus == s && t.params.kminus == s)
            return "verified lattice tiling " + t.generator;
    return std::nullopt;
}

ClassificationReport classify(std::int64_t n, std::int64_t e, int s, const ClassifyOptions& options) {
    if (n < 1 || e < 0 || e > n || s < 1)
        throw Error(ErrorKind::invalid_parameter, "classify needs n >= 1, 0 <= e <= n, s >= 1");
    ClassificationReport report;
    report.n = n;
    report.e = e;
    report.s = s;

    report.criteria.push_back(bound_prereq(n, e, s));
    if (s <= 3)
        report.criteria.push_back(bound_small_s(n, e, s));
    else
        report.criteria.push_back(outcome("small-s", Scope::all_tilings, Status::hypotheses_unmet, "needs s in {1, 2, 3}"));
    for (const auto& eps : options.epsilons) {
        if (s <= 2)
            report.criteria.push_back(bound_asymptotic(n, e, s, eps));
        else
            report.criteria.push_back(outcome("asymptotic-eps-" + to_string(eps), Scope::all_tilings,
                                              Status::hypotheses_unmet, "needs s in {1, 2}"));
    }
    report.criteria.push_back(bound_large_s(n, e, s, options.large_s_mode));
    report.criteria.push_back(bound_prior_lattice(n, e, s, s));

    bool excluded = false;
    for (const auto& c : report.criteria) {
        if (c.status != Status::excludes) continue;
        if (c.scope == Scope::all_tilings)
            excluded = true;
        else
            report.lattice_excluded = true;
    }
    if (existence_witness(n, e, s))
        report.verdict = ExistenceVerdict::exists;
    else
        report.verdict = excluded ? ExistenceVerdict::excluded : ExistenceVerdict::open;
    return report;
}

PackingDensityBound packing_density_bound(std::int64_t n, std::int64_t e, int s) {
    if (n < 1 || e < 0 || s < 1) throw Error(ErrorKind::invalid_parameter, "need n >= 1, e >= 0, s >= 1");
    if (e >= n) throw Error(ErrorKind::invalid_parameter, "density bound needs e < n");
    PackingDensityBound out;
    const Integer N = big(n), E = big(e);
    Integer gap = (E + 1) * (E + 1) - 2 * N;
    if (gap <= 0) return out;
    out.applicable = true;
    out.value = Rational(N * E * (E + 1), gap * s * (N - E));
    out.value.canonicalize();
    out.vacuous = out.value >= 1;
    return out;
}

Rational density_bound_asymptotic(DensityRegime regime, const Rational& a, int s) {
    if (s < 1) throw Error(ErrorKind::parameter_out_of_range, "s must be at least 1");
    if (regime == DensityRegime::sqrt) {
        if (a <= 0 || a * a <= 2) throw Error(ErrorKind::parameter_out_of_range, "sqrt regime needs a > sqrt(2)");
        return a * a / (s * (a * a - 2));
    }
    if (a <= 0 || a >= 1) throw Error(ErrorKind::parameter_out_of_range, "linear regime needs 0 < a < 1");
    return Rational(1) / (s * (1 - a));
}

}  // namespace lmlab
