#include "reebmec/mec.hpp"

#include <cstdlib>
#include <string>

#include "reebmec/errors.hpp"

namespace reebmec {

namespace {

void require_valid(const std::vector<std::string>& violations, const char* which) {
    if (violations.empty())
        return;
    std::string msg = std::string(which) + " model validation failed: " + violations.front();
    if (violations.size() > 1)
        msg += " (+" + std::to_string(violations.size() - 1) + " more)";
    fail(ErrorCode::invalid_input, msg);
}

Rational half_sum(const Rational& sigma_over_delta, OrbitType type) {
    return type == OrbitType::II ? sigma_over_delta / Rational(2) : sigma_over_delta;
}

Rational truncated_from_counts(const GeneratorCounts& counts, long long l_plus, long long N) {
    if (N < l_plus)
        return Rational(0);
    long long sum = 0;
    for (const auto& [deg, cnt] : counts) {
        if (deg < l_plus || deg > N)
            continue;
        sum += (deg % 2 == 0 ? cnt : -cnt);
    }
    return Rational(sum);
}

Rational truncated_minus_from_counts(const GeneratorCounts& counts, long long N) {
    if (-N > kLMinus)
        return Rational(0);
    long long sum = 0;
    for (const auto& [deg, cnt] : counts) {
        if (deg < -N || deg > kLMinus)
            continue;
        sum += (deg % 2 == 0 ? cnt : -cnt);
    }
    return Rational(sum);
}

struct FitResult {
    Rational limit;
};

// Least-squares intercept of estimate = L + c * (1/N), all in exact
// arithmetic.
Rational fit_limit(const std::vector<long long>& Ns, const std::vector<Rational>& ys) {
    size_t m = Ns.size();
    if (m == 1)
        return ys[0];
    Rational sx(0), sy(0), sxx(0), sxy(0);
    for (size_t i = 0; i < m; ++i) {
        Rational x(1, Ns[i]);
        sx += x;
        sy += ys[i];
        sxx += x * x;
        sxy += x * ys[i];
    }
    Rational mm(static_cast<long long>(m));
    Rational denom = mm * sxx - sx * sx;
    if (denom.is_zero())
        return ys.back();
    return (sxx * sy - sx * sxy) / denom;
}

template <typename Model>
OracleReport oracle_impl(const Model& model, const std::vector<long long>& truncations,
                         const Rational& closed_form, int n) {
    if (truncations.empty())
        fail(ErrorCode::invalid_input, "oracle needs at least one truncation level");
    for (size_t i = 0; i + 1 < truncations.size(); ++i)
        if (!(truncations[i] < truncations[i + 1]))
            fail(ErrorCode::invalid_input, "truncation levels must be strictly increasing");
    if (truncations.front() < 1)
        fail(ErrorCode::invalid_input, "truncation levels must be positive");

    long long l_plus = 2 * n - 4;
    GeneratorCounts counts =
        enumerate_generators(model, std::max(truncations.back(), std::llabs(l_plus)));

    OracleReport rep;
    rep.truncations = truncations;
    rep.closed_form = closed_form;
    for (long long N : truncations) {
        Rational chi_n = truncated_from_counts(counts, l_plus, N);
        Rational est = chi_n / Rational(N);
        rep.estimates.push_back(est);
        rep.deviations.push_back((chi_n - Rational(N) * closed_form).abs());
    }
    rep.fitted_limit = fit_limit(truncations, rep.estimates);
    rep.max_dev = rep.deviations.front();
    for (const Rational& d : rep.deviations)
        if (rep.max_dev < d)
            rep.max_dev = d;
    return rep;
}

} // namespace

MecValue MecValue::from_halves(const Rational& plus, const Rational& minus) {
    MecValue v;
    v.chi_plus = plus;
    v.chi_minus = minus;
    v.chi = (plus + minus) / Rational(2);
    return v;
}

MecValue MecValue::chi_only(const Rational& c) {
    MecValue v;
    v.chi = c;
    return v;
}

MecValue mec_af(const AFModel& model) {
    require_valid(validate_af(model), "asymptotically finite");
    if (!model.no_low_degree)
        fail(ErrorCode::invalid_input,
             "the MEC formula needs the no-orbits-of-degree -1,0,1 assertion");
    Rational plus(0), minus(0);
    for (const PrincipalOrbitFamily& f : model.families) {
        Rational term = half_sum(Rational(f.sigma) / f.delta, f.orbit_type);
        if (f.delta.sign() > 0)
            plus += term;
        else
            minus += term;
    }
    return MecValue::from_halves(plus, minus);
}

MecValue mec_mb(const MBModel& model) {
    require_valid(validate_mb(model), "Morse-Bott");
    Rational plus(0), minus(0);
    for (const MaximalOrbifold& s : model.maximal) {
        Rational delta = s.mu_rs_rule.a; // Delta(S_T) is the rule slope
        if (delta.is_zero())
            fail(ErrorCode::undefined_result,
                 "orbifold '" + s.label + "' has zero mean index; the MEC is undefined");
        Rational term =
            Rational(orbifold_sign(s, model.n)) * Rational(e_invariant(s.strata)) / delta;
        if (delta.sign() > 0)
            plus += term;
        else
            minus += term;
    }
    return MecValue::from_halves(plus, minus);
}

Rational truncated_euler(const AFModel& model, long long N, std::optional<long long> l_plus) {
    long long lp = l_plus.value_or(2 * model.n - 4);
    return truncated_from_counts(enumerate_generators(model, std::max(N, std::llabs(lp))), lp, N);
}

Rational truncated_euler(const MBModel& model, long long N, std::optional<long long> l_plus) {
    long long lp = l_plus.value_or(2 * model.n - 4);
    return truncated_from_counts(enumerate_generators(model, std::max(N, std::llabs(lp))), lp, N);
}

Rational truncated_euler_minus(const AFModel& model, long long N) {
    return truncated_minus_from_counts(enumerate_generators(model, N), N);
}

Rational truncated_euler_minus(const MBModel& model, long long N) {
    return truncated_minus_from_counts(enumerate_generators(model, N), N);
}

OracleReport oracle_convergence(const AFModel& model, const std::vector<long long>& truncations) {
    Rational closed = *mec_af(model).chi_plus;
    return oracle_impl(model, truncations, closed, model.n);
}

OracleReport oracle_convergence(const MBModel& model, const std::vector<long long>& truncations) {
    Rational closed = *mec_mb(model).chi_plus;
    return oracle_impl(model, truncations, closed, model.n);
}

// ---- surgery -------------------------------------------------------------------

namespace {

void check_subcritical(int n, int k) {
    if (n < 2)
        fail(ErrorCode::invalid_input, "surgery needs ambient half-dimension n >= 2");
    if (k < 1 || k >= n)
        fail(ErrorCode::invalid_input,
             "surgery index " + std::to_string(k) + " is not subcritical for n = " +
                 std::to_string(n));
}

void check_dimension_three(int n, int k, bool linearized) {
    if (n == 2 && !linearized)
        fail(ErrorCode::dimension_guard,
             "a connect sum in dimension 3 introduces a contractible orbit of degree 1 "
             "(k=" + std::to_string(k) +
             "); cylindrical bookkeeping is refused, rerun in linearized mode");
}

Rational surgery_shift(int k) { return Rational(k % 2 == 0 ? 1 : -1, 2); }

} // namespace

std::vector<long long> surgery_generators(int n, int k, long long r) {
    check_subcritical(n, k);
    std::vector<long long> out;
    for (long long m = 1;; ++m) {
        long long d = 2 * n - k - 4 + 2 * m;
        if (d > r)
            break;
        out.push_back(d);
    }
    return out;
}

PrincipalOrbitFamily handle_family(int n, int k) {
    check_subcritical(n, k);
    PrincipalOrbitFamily f;
    f.label = "handle_k" + std::to_string(k);
    f.orbit_type = OrbitType::I;
    f.sigma = (k % 2 == 0) ? 1 : -1;
    f.delta = Rational(2);
    // |x^m| = 2m + (2n - k - 4), the m-th iterate of the principal handle orbit
    f.degree_rule = DegreeRule{2, 2 * n - k - 4};
    return f;
}

AFModel af_surgery(const AFModel& model, int k, bool linearized) {
    check_subcritical(model.n, k);
    check_dimension_three(model.n, k, linearized);

    AFModel out = model;
    PrincipalOrbitFamily f = handle_family(model.n, k);
    int suffix = 0;
    auto taken = [&](const std::string& label) {
        for (const PrincipalOrbitFamily& g : out.families)
            if (g.label == label)
                return true;
        return false;
    };
    std::string label = f.label;
    while (taken(label))
        label = f.label + "_" + std::to_string(++suffix);
    f.label = label;
    out.families.push_back(f);
    // an index-1 surgery at n = 2 creates a degree-1 orbit
    out.no_low_degree = model.no_low_degree && (2 * model.n - k - 2 > 1);
    return out;
}

MecValue surgery_apply(const MecValue& v, const SurgeryStep& step) {
    check_subcritical(step.n, step.k);
    check_dimension_three(step.n, step.k, step.linearized);
    Rational shift = surgery_shift(step.k);

    if (step.mode == SurgeryMode::corollary) {
        if (!v.chi)
            fail(ErrorCode::undefined_result, "surgery on an undefined mean Euler characteristic");
        return MecValue::chi_only(*v.chi + shift);
    }
    if (!v.halves_defined())
        fail(ErrorCode::undefined_result, "generator-mode surgery needs both halves defined");
    // the handle family has Delta = 2 > 0, so only chi+ moves
    return MecValue::from_halves(*v.chi_plus + shift, *v.chi_minus);
}

Reachability reachability_necessary(const MecValue& source, const MecValue& target,
                                    SurgeryMode mode) {
    auto coord = [&](const MecValue& v) -> Rational {
        const std::optional<Rational>& c = mode == SurgeryMode::corollary ? v.chi : v.chi_plus;
        if (!c)
            fail(ErrorCode::undefined_result, "reachability needs defined MEC coordinates");
        return *c;
    };
    Reachability r;
    r.difference = coord(target) - coord(source);
    Rational doubled = Rational(2) * r.difference;
    r.reachable = doubled.is_integer();
    if (r.reachable) {
        r.net_half_units = doubled.num();
        r.min_surgeries = std::llabs(r.net_half_units);
    }
    return r;
}

} // namespace reebmec
