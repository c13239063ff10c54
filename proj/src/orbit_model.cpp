#include "reebmec/orbit_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "reebmec/errors.hpp"

namespace reebmec {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

int parity_sign(long long v) { return (v % 2 == 0) ? 1 : -1; }

// ---- stratification DAG helpers ----------------------------------------------

struct Dag {
    const std::vector<Stratum>* strata;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> children;     // direct edges
    std::vector<std::set<int>> descendants;     // strict, deduplicated
    std::vector<int> roots;
    std::vector<int> topo;                      // children before parents
};

Dag build_dag(const std::vector<Stratum>& strata) {
    Dag dag;
    dag.strata = &strata;
    for (size_t i = 0; i < strata.size(); ++i) {
        if (!dag.index.emplace(strata[i].label, static_cast<int>(i)).second)
            fail(ErrorCode::invalid_input, "duplicate stratum label '" + strata[i].label + "'");
    }
    int n = static_cast<int>(strata.size());
    dag.children.resize(n);
    for (int i = 0; i < n; ++i)
        for (const std::string& c : strata[i].children) {
            auto it = dag.index.find(c);
            if (it == dag.index.end())
                fail(ErrorCode::invalid_input, "unknown child stratum '" + c + "'");
            dag.children[i].push_back(it->second);
        }

    // depth-first with cycle detection; collects strict descendants
    dag.descendants.resize(n);
    std::vector<int> state(n, 0); // 0 new, 1 active, 2 done
    std::vector<int> topo;
    auto dfs = [&](auto&& self, int v) -> void {
        if (state[v] == 1)
            fail(ErrorCode::invalid_input, "stratification containment has a cycle at '" +
                                               strata[v].label + "'");
        if (state[v] == 2)
            return;
        state[v] = 1;
        for (int c : dag.children[v]) {
            self(self, c);
            dag.descendants[v].insert(c);
            dag.descendants[v].insert(dag.descendants[c].begin(), dag.descendants[c].end());
        }
        state[v] = 2;
        topo.push_back(v);
    };
    std::vector<char> is_child(n, 0);
    for (int i = 0; i < n; ++i)
        for (int c : dag.children[i])
            is_child[c] = 1;
    for (int i = 0; i < n; ++i) {
        if (!is_child[i])
            dag.roots.push_back(i);
        dfs(dfs, i);
    }
    dag.topo = std::move(topo);
    return dag;
}

std::vector<long long> chi_values(const Dag& dag) {
    const auto& strata = *dag.strata;
    std::vector<long long> chi(strata.size(), 0);
    for (int v : dag.topo) {
        long long c = strata[v].euler_underlying;
        for (int d : dag.descendants[v])
            c -= chi[d];
        chi[v] = c;
    }
    return chi;
}

// Fresh Morse multisets per stratum: the closed-stratum data minus every
// descendant's fresh contribution.  Underflow means the supplied Morse data
// cannot come from one admissible function.
std::vector<std::map<long long, long long>> fresh_morse(const Dag& dag) {
    const auto& strata = *dag.strata;
    std::vector<std::map<long long, long long>> fresh(strata.size());
    for (int v : dag.topo) {
        std::map<long long, long long> counts;
        for (long long ind : *strata[v].morse_indices)
            ++counts[ind];
        for (int d : dag.descendants[v])
            for (const auto& [ind, cnt] : fresh[d]) {
                counts[ind] -= cnt;
                if (counts[ind] < 0)
                    fail(ErrorCode::invalid_input,
                         "morse data of stratum '" + strata[v].label +
                             "' does not contain its substrata contributions");
            }
        fresh[v] = std::move(counts);
    }
    return fresh;
}

} // namespace

// ---- validation -----------------------------------------------------------------

std::vector<std::string> validate_af(const AFModel& model) {
    std::vector<std::string> out;
    if (model.n < 1)
        out.push_back("half-dimension n must be positive");
    std::set<std::string> labels;
    for (const PrincipalOrbitFamily& f : model.families) {
        std::string at = "family '" + f.label + "': ";
        if (!labels.insert(f.label).second)
            out.push_back(at + "duplicate label");
        if (f.sigma != 1 && f.sigma != -1)
            out.push_back(at + "sigma must be +1 or -1");
        if (f.delta.is_zero())
            out.push_back(at + "asymptotic mean index must be nonzero");
        if (!f.degree_rule)
            continue;
        const DegreeRule& r = *f.degree_rule;
        if (Rational(r.a) != f.delta)
            out.push_back(at + "degree rule slope must equal the mean index");
        if (f.sigma != parity_sign(r.a + r.b))
            out.push_back(at + "sigma is not the parity of the degree at k = 1");
        bool slope_even = (r.a % 2 == 0);
        if (slope_even != (f.orbit_type == OrbitType::I))
            out.push_back(at + "iterate parity pattern contradicts the declared orbit type");
        // |a k + b - k delta| stays inside the 2n-2 window; with a = delta
        // this is a bound on |b| (checked non-strictly: the perturbed
        // sphere families sit exactly on the boundary at n = 2)
        if (std::abs(r.b) > 2 * model.n - 2)
            out.push_back(at + "degree rule offset outside the index window");
        if (model.no_low_degree) {
            long long step = f.orbit_type == OrbitType::II ? 2 : 1;
            for (long long d = -1; d <= 1; ++d) {
                if (r.a == 0)
                    continue;
                long long num = d - r.b;
                if (num % r.a == 0) {
                    long long k = num / r.a;
                    if (k >= 1 && (step == 1 || k % 2 == 1))
                        out.push_back(at + "generator of degree " + std::to_string(d) +
                                      " contradicts the no-low-degree flag");
                }
            }
        }
    }
    return out;
}

std::vector<std::string> validate_mb(const MBModel& model) {
    std::vector<std::string> out;
    if (model.n < 1)
        out.push_back("half-dimension n must be positive");
    if (!model.good_only)
        out.push_back("good_only must be asserted for the Morse-Bott MEC formula");
    std::set<std::string> labels;
    for (const MaximalOrbifold& s : model.maximal) {
        std::string at = "orbifold '" + s.label + "': ";
        if (!labels.insert(s.label).second)
            out.push_back(at + "duplicate label");
        if (s.sigma != 1 && s.sigma != -1)
            out.push_back(at + "sigma must be +1 or -1");
        if (s.dim < 0 || s.dim % 2 != 0)
            out.push_back(at + "orbit space dimension must be even and nonnegative");

        const MuRsRule& r = s.mu_rs_rule;
        if (!r.a.is_integer()) {
            out.push_back(at + "index rule slope must be an integer");
            continue;
        }
        // mu_RS(S_kT) - dim/2 is an integer for every k
        Rational base = r.a + r.b - Rational(s.dim, 2);
        if (!base.is_integer()) {
            out.push_back(at + "mu_RS - dim/2 must be an integer");
            continue;
        }
        if (r.a.num() % 2 != 0)
            out.push_back(at + "bad orbifold: the degree parity alternates with the cover");
        else if (s.sigma != orbifold_sign(s, model.n))
            out.push_back(at + "sigma does not match (-1)^degree");

        try {
            Dag dag = build_dag(s.strata);
            if (s.strata.empty()) {
                out.push_back(at + "needs at least one stratum");
                continue;
            }
            if (dag.roots.size() != 1)
                out.push_back(at + "stratification must have a unique top stratum");
            else if (s.strata[dag.roots[0]].dim != s.dim)
                out.push_back(at + "top stratum dimension differs from the orbifold dimension");
            for (const Stratum& st : s.strata) {
                std::string sat = at + "stratum '" + st.label + "': ";
                if (st.cover_multiple < 1)
                    out.push_back(sat + "cover multiple must be positive");
                if (st.stab_order < 1)
                    out.push_back(sat + "stabilizer order must be positive");
                if (st.dim < 0 || st.dim % 2 != 0)
                    out.push_back(sat + "dimension must be even and nonnegative");
                if (st.morse_indices) {
                    long long signed_count = 0;
                    for (long long ind : *st.morse_indices)
                        signed_count += parity_sign(ind);
                    if (signed_count != st.euler_underlying)
                        out.push_back(sat + "morse indices do not reproduce the Euler number");
                }
            }
        } catch (const Error& e) {
            out.push_back(at + e.what());
        }
    }
    return out;
}

// ---- orbifold invariants -----------------------------------------------------------

long long orbifold_degree(const MaximalOrbifold& s, long long k, int n) {
    if (k < 1)
        fail(ErrorCode::invalid_input, "orbifold_degree needs k >= 1");
    Rational d = s.mu_rs_rule.at(k) - Rational(s.dim, 2) + Rational(n - 3);
    if (!d.is_integer())
        fail(ErrorCode::invalid_input, "orbifold degree is not an integer; index data inconsistent");
    return d.num();
}

int orbifold_sign(const MaximalOrbifold& s, int n) {
    long long d1 = orbifold_degree(s, 1, n);
    long long d2 = orbifold_degree(s, 2, n);
    if (parity_sign(d1) != parity_sign(d2))
        fail(ErrorCode::invalid_input, "orbifold '" + s.label +
                                           "' is bad: its degree parity alternates with the cover");
    return parity_sign(d1);
}

std::map<std::string, long long> chi_hat(const std::vector<Stratum>& strata) {
    Dag dag = build_dag(strata);
    std::vector<long long> chi = chi_values(dag);
    std::map<std::string, long long> out;
    for (size_t i = 0; i < strata.size(); ++i)
        out[strata[i].label] = chi[i];
    return out;
}

long long e_invariant(const std::vector<Stratum>& strata) {
    Dag dag = build_dag(strata);
    std::vector<long long> chi = chi_values(dag);
    long long e_strata = 0;
    for (size_t i = 0; i < strata.size(); ++i)
        e_strata += chi[i] * strata[i].stab_order;

    bool have_morse = !strata.empty();
    for (const Stratum& s : strata)
        have_morse = have_morse && s.morse_indices.has_value();
    if (have_morse) {
        auto fresh = fresh_morse(dag);
        long long e_cells = 0;
        for (size_t i = 0; i < strata.size(); ++i)
            for (const auto& [ind, cnt] : fresh[i])
                e_cells += parity_sign(ind) * cnt * strata[i].stab_order;
        if (e_cells != e_strata)
            fail(ErrorCode::invalid_input,
                 "stratum-sum and cell-sum orbifold Euler invariants disagree (" +
                     std::to_string(e_strata) + " vs " + std::to_string(e_cells) + ")");
    }
    return e_strata;
}

// ---- generator enumeration ------------------------------------------------------------

namespace {

// adds counts for degrees a*k + b, k >= k0 stepping by `step`, within |d| <= max_degree
void add_affine_degrees(GeneratorCounts& counts, long long a, long long b, long long step,
                        long long max_degree) {
    if (a == 0)
        fail(ErrorCode::incomplete_data, "degree rule with zero slope cannot be enumerated");
    long long k_lo, k_hi;
    if (a > 0) {
        k_lo = std::max(1LL, ceil_div(-max_degree - b, a));
        k_hi = floor_div(max_degree - b, a);
    } else {
        k_lo = std::max(1LL, ceil_div(max_degree - b, a));
        k_hi = floor_div(-max_degree - b, a);
    }
    if (step == 2 && k_lo % 2 == 0)
        ++k_lo;
    for (long long k = k_lo; k <= k_hi; k += step)
        ++counts[a * k + b];
}

} // namespace

GeneratorCounts enumerate_generators(const AFModel& model, long long max_degree) {
    GeneratorCounts counts;
    for (const PrincipalOrbitFamily& f : model.families) {
        if (!f.degree_rule)
            fail(ErrorCode::incomplete_data,
                 "family '" + f.label + "' has no degree rule; generator data incomplete");
        long long step = f.orbit_type == OrbitType::II ? 2 : 1;
        add_affine_degrees(counts, f.degree_rule->a, f.degree_rule->b, step, max_degree);
    }
    return counts;
}

GeneratorCounts enumerate_generators(const MBModel& model, long long max_degree) {
    GeneratorCounts counts;
    for (const MaximalOrbifold& s : model.maximal) {
        Dag dag = build_dag(s.strata);
        if (dag.roots.size() != 1)
            fail(ErrorCode::invalid_input,
                 "orbifold '" + s.label + "' stratification must have a unique top stratum");
        for (const Stratum& st : s.strata)
            if (!st.morse_indices)
                fail(ErrorCode::incomplete_data, "stratum '" + st.label +
                                                     "' has no morse data; generator data incomplete");
        long long m_top = s.strata[dag.roots[0]].cover_multiple;
        auto fresh = fresh_morse(dag);
        for (size_t i = 0; i < s.strata.size(); ++i) {
            bool any = false;
            for (const auto& [ind, cnt] : fresh[i])
                any = any || cnt > 0;
            if (!any)
                continue;
            // iterates of critical points in this stratum live in covers the
            // index rule only describes at multiples of the top period
            if (s.strata[i].cover_multiple != m_top)
                fail(ErrorCode::incomplete_data,
                     "stratum '" + s.strata[i].label +
                         "' needs per-period index data the model does not carry; "
                         "generator data incomplete");
            if (!s.mu_rs_rule.a.is_integer() ||
                !(s.mu_rs_rule.a + s.mu_rs_rule.b - Rational(s.dim, 2)).is_integer())
                fail(ErrorCode::invalid_input, "index rule of '" + s.label + "' is not integral");
            long long a = s.mu_rs_rule.a.num();
            Rational b0 = s.mu_rs_rule.b - Rational(s.dim, 2) + Rational(model.n - 3);
            for (const auto& [ind, cnt] : fresh[i]) {
                Rational b = b0 + Rational(ind);
                if (!b.is_integer())
                    fail(ErrorCode::invalid_input, "generator degree is not an integer");
                for (long long c = 0; c < cnt; ++c)
                    add_affine_degrees(counts, a, b.num(), 1, max_degree);
            }
        }
    }
    return counts;
}

} // namespace reebmec
