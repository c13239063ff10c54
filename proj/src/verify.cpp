#include "reebmec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "reebmec/calibration.hpp"
#include "reebmec/catalog.hpp"
#include "reebmec/indices.hpp"
#include "reebmec/mec.hpp"

namespace reebmec {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

Mat mat_pow(const Mat& m, int k) {
    Mat out = Mat::identity(m.rows());
    for (int i = 0; i < k; ++i)
        out = out * m;
    return out;
}

PropertyResult pass_result(const std::string& name, const std::string& detail) {
    return PropertyResult{name, true, detail};
}

PropertyResult fail_result(const std::string& name, const std::string& detail) {
    return PropertyResult{name, false, detail};
}

} // namespace

Mat random_symplectic(int n, Rng& rng, int factors) {
    Mat a = Mat::identity(2 * n);
    for (int f = 0; f < factors; ++f) {
        int kind = static_cast<int>(rng.range(0, n >= 2 ? 4 : 3));
        Mat g = Mat::identity(2 * n);
        switch (kind) {
        case 0: { // rotation in one symplectic plane
            int j = static_cast<int>(rng.range(0, n - 1));
            double phi = rng.uniform(-kPi, kPi);
            g(j, j) = std::cos(phi);
            g(j, n + j) = -std::sin(phi);
            g(n + j, j) = std::sin(phi);
            g(n + j, n + j) = std::cos(phi);
            break;
        }
        case 1: { // q-shear [I B; 0 I], B symmetric
            for (int r = 0; r < n; ++r)
                for (int c = r; c < n; ++c) {
                    double s = rng.uniform(-0.6, 0.6);
                    g(r, n + c) = s;
                    g(c, n + r) = s;
                }
            break;
        }
        case 2: { // p-shear [I 0; B I], B symmetric
            for (int r = 0; r < n; ++r)
                for (int c = r; c < n; ++c) {
                    double s = rng.uniform(-0.6, 0.6);
                    g(n + r, c) = s;
                    g(n + c, r) = s;
                }
            break;
        }
        case 3: { // stretch
            for (int j = 0; j < n; ++j) {
                double d = std::exp(rng.uniform(-0.6, 0.6));
                g(j, j) = d;
                g(n + j, n + j) = 1.0 / d;
            }
            break;
        }
        default: { // unitary mixing of two planes
            int i = static_cast<int>(rng.range(0, n - 2));
            int j = static_cast<int>(rng.range(i + 1, n - 1));
            double psi = rng.uniform(-kPi, kPi);
            double c = std::cos(psi), s = std::sin(psi);
            g(i, i) = c;
            g(i, j) = -s;
            g(j, i) = s;
            g(j, j) = c;
            g(n + i, n + i) = c;
            g(n + i, n + j) = -s;
            g(n + j, n + i) = s;
            g(n + j, n + j) = c;
            break;
        }
        }
        a = a * g;
    }
    return a;
}

std::vector<double> random_rates(int n, Rng& rng, double T, const std::vector<int>& protect) {
    std::vector<double> rates(n);
    for (int j = 0; j < n; ++j) {
        for (;;) {
            double w = rng.uniform(-3.0 * kPi, 3.0 * kPi);
            bool ok = std::fabs(w) > 0.3;
            for (int k : protect) {
                double x = std::fabs(w) * T * k / (2.0 * kPi);
                ok = ok && std::fabs(x - std::round(x)) > 0.02;
            }
            if (ok) {
                rates[j] = w;
                break;
            }
        }
    }
    return rates;
}

SyntheticStratification random_stratification(Rng& rng) {
    int count = static_cast<int>(rng.range(1, 6));
    std::vector<int> level(count, 0);
    for (int v = 1; v < count; ++v)
        level[v] = static_cast<int>(rng.range(1, 3));

    // direct containment edges, acyclic by level; node 0 is the unique root
    std::vector<std::vector<int>> children(count);
    std::vector<std::vector<int>> parents(count);
    for (int v = 1; v < count; ++v) {
        for (int u = 0; u < count; ++u) {
            if (level[u] >= level[v] || u == v)
                continue;
            if (rng.uniform() < 0.5) {
                children[u].push_back(v);
                parents[v].push_back(u);
            }
        }
        if (parents[v].empty()) {
            children[0].push_back(v);
            parents[v].push_back(0);
        }
    }

    // fresh Morse multisets first; the closed data is assembled from them
    std::vector<std::vector<long long>> fresh(count);
    for (int v = 0; v < count; ++v) {
        int size = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < size; ++i)
            fresh[v].push_back(rng.range(0, 6));
    }

    std::vector<std::set<int>> desc(count);
    // levels bound depth; a fixed number of relaxation sweeps closes the set
    for (int sweep = 0; sweep < count; ++sweep)
        for (int u = 0; u < count; ++u)
            for (int c : children[u]) {
                desc[u].insert(c);
                desc[u].insert(desc[c].begin(), desc[c].end());
            }

    SyntheticStratification out;
    out.expected_e = 0;
    std::vector<long long> stab(count);
    for (int v = 0; v < count; ++v) {
        stab[v] = rng.range(1, 9);
        long long signed_fresh = 0;
        for (long long ind : fresh[v])
            signed_fresh += (ind % 2 == 0) ? 1 : -1;
        out.expected_e += stab[v] * signed_fresh;
    }

    for (int v = 0; v < count; ++v) {
        Stratum s;
        s.label = "S" + std::to_string(v);
        s.cover_multiple = 1;
        s.stab_order = stab[v];
        s.dim = 2 * static_cast<int>(rng.range(0, 3));
        std::vector<long long> closed = fresh[v];
        for (int d : desc[v])
            closed.insert(closed.end(), fresh[d].begin(), fresh[d].end());
        std::sort(closed.begin(), closed.end());
        long long chi = 0;
        for (long long ind : closed)
            chi += (ind % 2 == 0) ? 1 : -1;
        s.euler_underlying = chi;
        s.morse_indices = std::move(closed);
        for (int c : children[v])
            s.children.push_back("S" + std::to_string(c));
        out.strata.push_back(std::move(s));
        if (v == 0)
            out.expected_chi_top = chi;
    }
    return out;
}

// ---- property drivers --------------------------------------------------------

namespace props {

PropertyResult polar_roundtrip(uint64_t seed, int samples, int n_max) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, n_max - 1));
        Mat a = random_symplectic(n, rng, 8);
        PolarParts pu = polar_decompose(SympMatrix(n, a));
        double scale = std::max(1.0, max_abs(a));
        double resid = max_abs_diff(pu.p * pu.u, a) / scale;
        resid = std::max(resid, max_abs_diff(pu.u.transposed() * pu.u, Mat::identity(2 * n)));
        resid = std::max(resid, max_abs_diff(pu.p, pu.p.transposed()));
        if (!is_symplectic(pu.u, 1e-8))
            return fail_result("polar-roundtrip", "orthogonal factor is not symplectic");
        worst = std::max(worst, resid);
        if (resid > kSymTol)
            return fail_result("polar-roundtrip", fmt("residual %.3e exceeds tolerance", resid));
    }
    return pass_result("polar-roundtrip", fmt("max residual %.3e over the corpus", worst));
}

PropertyResult lift_refinement(uint64_t seed, int paths, int n_max) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < paths; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, n_max - 1));
        std::vector<double> rates = random_rates(n, rng, 1.0, {1});
        int m = suggested_samples(rates, 1.0);
        double t1 = lift_angle(rotation_path(rates, 1.0, m)).total();
        double t2 = lift_angle(rotation_path(rates, 1.0, 2 * m)).total();
        worst = std::max(worst, std::fabs(t1 - t2));
        if (std::fabs(t1 - t2) > kThetaTol)
            return fail_result("lift-refinement", fmt("doubling samples moved theta by %.3e", t1 - t2));
    }
    return pass_result("lift-refinement", fmt("max shift %.3e under sample doubling", worst));
}

PropertyResult lift_additivity(uint64_t seed, int paths, int n_max) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < paths; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, n_max - 1));
        std::vector<double> rates = random_rates(n, rng, 1.0, {1});
        int m = suggested_samples(rates, 1.0);
        SympPath p = rotation_path(rates, 1.0, m);
        AngleTrack full = lift_angle(p);
        size_t split = static_cast<size_t>(rng.range(1, m - 1));

        Mat mid_inv = inverse(p.matrix(split));
        std::vector<double> times;
        std::vector<Mat> mats;
        for (size_t j = split; j < p.size(); ++j) {
            times.push_back(p.time(j) - p.time(split));
            mats.push_back(p.matrix(j) * mid_inv);
        }
        double tail = lift_angle(SympPath(n, std::move(times), std::move(mats))).total();
        double defect = std::fabs(full.total() - full.theta[split] - tail);
        worst = std::max(worst, defect);
        if (defect > kThetaTol)
            return fail_result("lift-additivity", fmt("split-and-relift defect %.3e", defect));
    }
    return pass_result("lift-additivity", fmt("max split defect %.3e", worst));
}

PropertyResult iterate_semigroup(uint64_t seed, int paths, int n_max) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < paths; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, n_max - 1));
        std::vector<double> rates = random_rates(n, rng, 1.0, {1});
        SympPath p = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
        int a = static_cast<int>(rng.range(2, 3)), b = static_cast<int>(rng.range(2, 3));
        SympPath q1 = iterate_path(p, a * b);
        SympPath q2 = iterate_path(iterate_path(p, a), b);
        if (q1.size() != q2.size())
            return fail_result("iterate-semigroup", "grids differ in size");
        for (size_t j = 0; j < q1.size(); ++j) {
            if (std::fabs(q1.time(j) - q2.time(j)) > 1e-9)
                return fail_result("iterate-semigroup", "grids differ");
            worst = std::max(worst, max_abs_diff(q1.matrix(j), q2.matrix(j)));
        }
        if (worst > 1e-9)
            return fail_result("iterate-semigroup", fmt("samples differ by %.3e", worst));
    }
    return pass_result("iterate-semigroup", fmt("max sample difference %.3e", worst));
}

PropertyResult homogeneity(uint64_t seed, int paths_per_n, int n_max) {
    Rng rng(seed);
    double worst_loop = 0.0, worst_fit = 0.0;
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i < paths_per_n; ++i) {
            // loop corpus: whole turns only, Psi(T) = I
            std::vector<double> rates(n);
            for (int j = 0; j < n; ++j) {
                long long turns = rng.range(-3, 3);
                if (turns == 0)
                    turns = 1;
                rates[j] = 2.0 * kPi * static_cast<double>(turns);
            }
            SympPath loop = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
            IndexValue base = mean_index(loop);
            for (int k = 2; k <= 3; ++k) {
                IndexValue it = mean_index(iterate_path(loop, k));
                double defect = std::fabs(it.value - k * base.value);
                worst_loop = std::max(worst_loop, defect);
                if (defect > kThetaTol * k)
                    return fail_result("homogeneity", fmt("loop defect %.3e at k=%.0f", defect, k));
            }

            // generic corpus: within the fit error bars
            std::vector<double> grates = random_rates(n, rng, 1.0, {1, 2, 3, 6});
            SympPath p = rotation_path(grates, 1.0, suggested_samples(grates, 1.0));
            IndexValue m1 = mean_index(p, 6);
            IndexValue m2 = mean_index(iterate_path(p, 2), 6);
            double tol = *m1.error_bar * 2 + *m2.error_bar + kThetaTol;
            double defect = std::fabs(m2.value - 2.0 * m1.value);
            worst_fit = std::max(worst_fit, defect);
            if (defect > tol)
                return fail_result("homogeneity", fmt("fit defect %.3e exceeds %.3e", defect, tol));
        }
    return pass_result("homogeneity",
                       fmt("loop defect %.3e, fitted defect %.3e", worst_loop, worst_fit));
}

PropertyResult index_gap(uint64_t seed, int paths_per_n, int n_max) {
    Rng rng(seed);
    double worst_margin = 0.0;
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i < paths_per_n; ++i) {
            std::vector<double> rates = random_rates(n, rng, 1.0, {1});
            long long cz = conley_zehnder_rot(rates, 1.0).as_int();
            SympPath p = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
            double delta = mean_index(p, 6).value;
            double gap = std::fabs(static_cast<double>(cz) - delta);
            worst_margin = std::max(worst_margin, gap - n);
            if (gap >= n + 1e-6)
                return fail_result("index-gap", fmt("|cz - mean| = %.6f at n = %.0f", gap, n));
        }
    return pass_result("index-gap", fmt("max (|cz - mean| - n) = %.3e", worst_margin));
}

PropertyResult iterate_convergence(uint64_t seed, int paths_per_n, int n_max) {
    Rng rng(seed);
    const std::vector<int> ks = {1, 2, 4, 8};
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i < paths_per_n; ++i) {
            std::vector<double> rates = random_rates(n, rng, 1.0, ks);
            SympPath p = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
            double delta = mean_index(p, 6).value;
            for (int k : ks) {
                long long czk = conley_zehnder_rot(rates, static_cast<double>(k)).as_int();
                double dev = std::fabs(static_cast<double>(czk) / k - delta) - static_cast<double>(n) / k;
                worst = std::max(worst, dev);
                if (dev > kThetaTol)
                    return fail_result("iterate-convergence",
                                       fmt("cz(k)/k misses mean by margin %.3e at k=%.0f", dev, k));
            }
            // spot-check the sampled algorithm through the iteration rule
            if (i % 10 == 0 &&
                conley_zehnder(iterate_path(p, 2)).as_int() !=
                    conley_zehnder_rot(rates, 2.0).as_int())
                return fail_result("iterate-convergence",
                                   "sampled index disagrees with the closed form on an iterate");
        }
    return pass_result("iterate-convergence", fmt("max (|cz_k/k - mean| - n/k) = %.3e", worst));
}

PropertyResult quasimorphism_defect(uint64_t seed, int pairs_per_n, int n_max) {
    Rng rng(seed);
    std::string detail = "max defect";
    for (int n = 1; n <= n_max; ++n) {
        double worst = 0.0;
        for (int i = 0; i < pairs_per_n; ++i) {
            Mat a = random_symplectic(n, rng, 8);
            Mat b = random_symplectic(n, rng, 8);
            double defect = std::fabs(dgw_index(SympMatrix(n, a * b)).value -
                                      dgw_index(SympMatrix(n, a)).value -
                                      dgw_index(SympMatrix(n, b)).value);
            worst = std::max(worst, defect);
        }
        if (worst > calib::dgw_qm_defect_bound[n])
            return fail_result("quasimorphism",
                               fmt("defect %.4f above the recorded bound at n = %.0f", worst, n));
        detail += fmt(" n%.0f: %.4f", n, worst);
    }
    return pass_result("quasimorphism", detail);
}

PropertyResult dgw_mean_gap(uint64_t seed, int paths_per_n, int n_max) {
    Rng rng(seed);
    std::string detail = "max gap";
    for (int n = 1; n <= n_max; ++n) {
        double worst = 0.0;
        for (int i = 0; i < paths_per_n; ++i) {
            std::vector<double> rates = random_rates(n, rng, 1.0, {1});
            SympPath p = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
            double delta = mean_index(p, 4).value;
            Mat power = Mat::identity(2 * n);
            for (int k = 1; k <= 32; k *= 2) {
                power = mat_pow(p.endpoint(), k);
                double gap = std::fabs(dgw_index(SympMatrix(n, power)).value / k - delta);
                worst = std::max(worst, gap);
            }
        }
        if (worst > calib::dgw_mean_gap_bound[n])
            return fail_result("dgw-mean-gap",
                               fmt("gap %.4f above the recorded bound at n = %.0f", worst, n));
        detail += fmt(" n%.0f: %.4f", n, worst);
    }
    return pass_result("dgw-mean-gap", detail);
}

PropertyResult catenation_bound(uint64_t seed, int pairs_per_n, int n_max) {
    Rng rng(seed);
    std::string detail = "max defect";
    for (int n = 1; n <= n_max; ++n) {
        double worst = 0.0;
        for (int i = 0; i < pairs_per_n; ++i) {
            // conjugated rotations give non-commuting unitary parts
            auto conjugated = [&](const std::vector<double>& rates) {
                Mat c = random_symplectic(n, rng, 4);
                Mat cinv = inverse(c);
                int m = 4 * suggested_samples(rates, 1.0);
                return sampled_path(n, 1.0, m, [&](double t) {
                    std::vector<double> angles(rates.size());
                    for (size_t j = 0; j < rates.size(); ++j)
                        angles[j] = rates[j] * t;
                    return c * block_rotation(angles) * cinv;
                });
            };
            SympPath p1 = conjugated(random_rates(n, rng, 1.0, {1}));
            SympPath p2 = conjugated(random_rates(n, rng, 1.0, {1}));
            worst = std::max(worst, catenation_defect(p1, p2));
        }
        if (worst > calib::catenation_defect_bound[n])
            return fail_result("catenation",
                               fmt("defect %.4f above the recorded bound at n = %.0f", worst, n));
        detail += fmt(" n%.0f: %.4f", n, worst);

        // commuting block rotations catenate exactly
        std::vector<double> r1 = random_rates(n, rng, 1.0, {1});
        std::vector<double> r2 = random_rates(n, rng, 1.0, {1});
        SympPath q1 = rotation_path(r1, 1.0, suggested_samples(r1, 1.0));
        SympPath q2 = rotation_path(r2, 1.0, suggested_samples(r2, 1.0));
        if (catenation_defect(q1, q2) > kThetaTol)
            return fail_result("catenation", "commuting rotations failed to catenate exactly");
    }
    return pass_result("catenation", detail);
}

PropertyResult index_cross_check(uint64_t seed, int paths_per_n, int n_max) {
    Rng rng(seed);
    int checked = 0;
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i < paths_per_n; ++i) {
            std::vector<double> rates = random_rates(n, rng, 1.0, {1});
            long long closed = conley_zehnder_rot(rates, 1.0).as_int();

            SympPath p = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
            long long sampled = conley_zehnder(p).as_int();

            AnalyticPath ap;
            ap.duration = 1.0;
            for (double w : rates)
                ap.blocks.push_back(AnalyticBlock::rotation(w));
            Rational rs = robbin_salamon(ap).as_rational();

            if (sampled != closed || !rs.is_integer() || rs.num() != closed)
                return fail_result("index-cross-check",
                                   fmt("cz=%.0f cz_rot=%.0f rs=%.2f disagree",
                                       static_cast<double>(sampled), static_cast<double>(closed),
                                       rs.to_double()));
            ++checked;

            // mixed rotation/stretch descriptors: sampled algorithm vs crossing forms
            if (n >= 2) {
                AnalyticPath mixed;
                mixed.duration = 1.0;
                for (int j = 0; j < n; ++j) {
                    if (j == 0 || rng.uniform() < 0.5)
                        mixed.blocks.push_back(AnalyticBlock::rotation(rates[j]));
                    else {
                        double a = rng.uniform(0.2, 1.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
                        mixed.blocks.push_back(AnalyticBlock::stretch(a));
                    }
                }
                SympPath mp = mixed.sample(4 * suggested_samples(rates, 1.0));
                long long mixed_cz = conley_zehnder(mp).as_int();
                Rational mixed_rs = robbin_salamon(mixed).as_rational();
                if (!mixed_rs.is_integer() || mixed_rs.num() != mixed_cz)
                    return fail_result("index-cross-check", "mixed-block cz and rs disagree");
                ++checked;
            }
        }
    return pass_result("index-cross-check", fmt("%.0f nondegenerate paths agree across algorithms",
                                                static_cast<double>(checked)));
}

PropertyResult frame_invariance(uint64_t seed, int paths, int n_max) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < paths; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, n_max - 1));
        std::vector<double> rates = random_rates(n, rng, 1.0, {1});
        int m = 2 * suggested_samples(rates, 1.0);
        SympPath p = rotation_path(rates, 1.0, m);

        // unitary frame change that closes up over the path: a contractible
        // loop of block rotations, so the section winding is zero
        std::vector<double> amp(n), phase(n);
        for (int j = 0; j < n; ++j) {
            amp[j] = rng.uniform(-0.4, 0.4);
            phase[j] = rng.uniform(0.0, 2.0 * kPi);
        }
        std::vector<double> times;
        std::vector<Mat> mats;
        std::vector<double> angles(n);
        auto frame = [&](double t) {
            for (int j = 0; j < n; ++j)
                angles[j] = amp[j] * std::sin(2.0 * kPi * t + phase[j]);
            return block_rotation(angles);
        };
        Mat f0_inv = inverse(frame(0.0));
        for (size_t s = 0; s < p.size(); ++s) {
            times.push_back(p.time(s));
            mats.push_back(frame(p.time(s)) * p.matrix(s) * f0_inv);
        }
        double reframed = unitary_index(SympPath(n, std::move(times), std::move(mats))).value;
        double defect = std::fabs(reframed - unitary_index(p).value);
        worst = std::max(worst, defect);
        if (defect > kThetaTol)
            return fail_result("frame-invariance", fmt("closed-frame change moved mu by %.3e", defect));
    }
    return pass_result("frame-invariance", fmt("max shift %.3e under closed frame changes", worst));
}

PropertyResult anti_symmetry(uint64_t seed, int paths, int n_max) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < paths; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, n_max - 1));
        std::vector<double> rates = random_rates(n, rng, 1.0, {1});
        SympPath p = rotation_path(rates, 1.0, suggested_samples(rates, 1.0));
        double forward = unitary_index(p).value;
        double backward = unitary_index(reverse_inverse_path(p)).value;
        worst = std::max(worst, std::fabs(forward + backward));
        if (std::fabs(forward + backward) > kThetaTol)
            return fail_result("anti-symmetry", fmt("mu + mu(reversed) = %.3e", forward + backward));
    }
    return pass_result("anti-symmetry", fmt("max |mu + mu(reversed)| = %.3e", worst));
}

PropertyResult euler_lemma(uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        SyntheticStratification s = random_stratification(rng);
        long long e = e_invariant(s.strata); // cross-checks the cell route internally
        if (e != s.expected_e)
            return fail_result("euler-lemma",
                               fmt("e = %.0f but the generating data says %.0f",
                                   static_cast<double>(e), static_cast<double>(s.expected_e)));
    }
    return pass_result("euler-lemma", fmt("%.0f/%.0f exact agreements", cases, cases));
}

PropertyResult chi_telescope(uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        SyntheticStratification s = random_stratification(rng);
        auto chis = chi_hat(s.strata);
        long long total = 0;
        for (const auto& [label, chi] : chis)
            total += chi;
        if (total != s.expected_chi_top)
            return fail_result("chi-telescope", fmt("sum CHI = %.0f, chi(top) = %.0f",
                                                    static_cast<double>(total),
                                                    static_cast<double>(s.expected_chi_top)));
    }
    return pass_result("chi-telescope", fmt("%.0f/%.0f telescoping sums exact", cases, cases));
}

PropertyResult sign_stability(uint64_t seed, int k_max) {
    (void)seed;
    std::vector<MBModel> fixtures;
    for (int n = 2; n <= 6; ++n)
        fixtures.push_back(standard_sphere(n));
    fixtures.push_back(ustilovsky(3, 7));
    fixtures.push_back(ustilovsky(5, 7));
    fixtures.push_back(ustilovsky(7, 9));
    fixtures.push_back(prequantization_mb(2, 2));
    fixtures.push_back(prequantization_mb(6, -3));
    for (const MBModel& m : fixtures) {
        if (!validate_mb(m).empty())
            return fail_result("sign-stability", "fixture failed validation");
        for (const MaximalOrbifold& s : m.maximal) {
            int sign = orbifold_sign(s, m.n);
            for (long long k = 1; k <= k_max; ++k) {
                long long d = orbifold_degree(s, k, m.n);
                if ((d % 2 == 0 ? 1 : -1) != sign)
                    return fail_result("sign-stability",
                                       fmt("sign flipped at cover k = %.0f", static_cast<double>(k)));
            }
        }
    }
    return pass_result("sign-stability", fmt("signs constant over k = 1..%.0f on all fixtures",
                                             static_cast<double>(k_max)));
}

PropertyResult af_window(int k_max) {
    std::vector<AFModel> fixtures;
    for (int n = 2; n <= 6; ++n)
        fixtures.push_back(standard_sphere_af(n));
    for (int k = 1; k < 4; ++k)
        fixtures.push_back(af_surgery(standard_sphere_af(4), k));
    for (const AFModel& m : fixtures) {
        Rational window(2 * m.n - 2);
        for (const PrincipalOrbitFamily& f : m.families) {
            if (!f.degree_rule)
                continue;
            for (long long k = 1; k <= k_max; ++k) {
                if (f.orbit_type == OrbitType::II && k % 2 == 0)
                    continue;
                Rational dev = (Rational(f.degree_rule->at(k)) - Rational(k) * f.delta).abs();
                if (dev > window)
                    return fail_result("af-window", "degree rule escapes the index window");
            }
        }
    }
    return pass_result("af-window", fmt("rules stay in the 2n-2 window for k = 1..%.0f",
                                        static_cast<double>(k_max)));
}

PropertyResult oracle_agreement(long long n_top, int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        MBModel mb = standard_sphere(n);
        AFModel af = standard_sphere_af(n);
        if (enumerate_generators(mb, n_top) != enumerate_generators(af, n_top))
            return fail_result("oracle-agreement",
                               fmt("sphere generator multisets differ at n = %.0f",
                                   static_cast<double>(n)));
        Rational closed = *mec_mb(mb).chi_plus;
        for (long long N = 100; N <= n_top; N *= 10) {
            Rational dev = (truncated_euler(mb, N) - Rational(N) * closed).abs();
            if (dev > Rational(2))
                return fail_result("oracle-agreement", "truncated complex deviates by more than 2");
        }
    }
    return pass_result("oracle-agreement",
                       fmt("AF and MB routes agree up to degree %.0f for n <= %.0f",
                           static_cast<double>(n_top), static_cast<double>(n_max)));
}

PropertyResult surgery_coherence(long long degree_cutoff) {
    for (int n = 3; n <= 5; ++n) {
        AFModel base = standard_sphere_af(n);
        MecValue before = mec_af(base);
        for (int k = 1; k < n; ++k) {
            AFModel after = af_surgery(base, k);
            MecValue post = mec_af(after);
            Rational shift = *post.chi_plus - *before.chi_plus;
            Rational expected(k % 2 == 0 ? 1 : -1, 2);
            if (shift != expected)
                return fail_result("surgery-coherence", "chi+ shift is not (-1)^k/2");

            GeneratorCounts diff = enumerate_generators(after, degree_cutoff);
            for (const auto& [deg, cnt] : enumerate_generators(base, degree_cutoff)) {
                diff[deg] -= cnt;
                if (diff[deg] == 0)
                    diff.erase(deg);
            }
            GeneratorCounts expected_inject;
            for (long long d : surgery_generators(n, k, degree_cutoff))
                ++expected_inject[d];
            if (diff != expected_inject)
                return fail_result("surgery-coherence", "injected degree multiset mismatch");

            // value-level application agrees with the model route
            SurgeryStep step{k, n, SurgeryMode::generator, false};
            MecValue applied = surgery_apply(before, step);
            if (*applied.chi_plus != *post.chi_plus || *applied.chi != *post.chi)
                return fail_result("surgery-coherence", "surgery_apply disagrees with af_surgery");
        }
    }

    // the dimension-3 cylindrical guard must fire
    bool fired = false;
    try {
        af_surgery(standard_sphere_af(2), 1);
    } catch (const Error& e) {
        fired = e.code() == ErrorCode::dimension_guard;
    }
    if (!fired)
        return fail_result("surgery-coherence", "dimension-3 refusal did not fire");
    AFModel linearized = af_surgery(standard_sphere_af(2), 1, true);
    if (linearized.no_low_degree)
        return fail_result("surgery-coherence", "degree-1 handle orbit not flagged at n = 2");
    return pass_result("surgery-coherence",
                       fmt("chi+ shifts and multiset injections exact for n = 3..5, cutoff %.0f",
                           static_cast<double>(degree_cutoff)));
}

PropertyResult sign_structure(uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        AFModel m;
        m.n = 2 + static_cast<int>(rng.range(0, 3));
        m.no_low_degree = true;
        int families = 1 + static_cast<int>(rng.range(0, 4));
        for (int f = 0; f < families; ++f) {
            PrincipalOrbitFamily fam;
            fam.label = "f" + std::to_string(f);
            fam.orbit_type = rng.uniform() < 0.5 ? OrbitType::I : OrbitType::II;
            fam.sigma = rng.uniform() < 0.5 ? 1 : -1;
            fam.delta = Rational(rng.range(1, 9), rng.range(1, 3));
            m.families.push_back(fam);
        }
        MecValue v = mec_af(m);
        if (!v.chi_minus->is_zero())
            return fail_result("sign-structure", "chi- nonzero on an all-positive fixture");
    }
    return pass_result("sign-structure",
                       fmt("chi- = 0 on %.0f weakly index-positive fixtures", cases));
}

PropertyResult wip_recovery(uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 50; ++i) {
        double k1 = rng.uniform(0.5, 5.0), k2 = rng.uniform(-3.0, 3.0);
        std::vector<WipSample> samples;
        for (int j = 1; j <= 10; ++j)
            samples.push_back({static_cast<double>(j), k1 * j + k2});
        auto cert = wip_fit(samples);
        if (!cert || std::fabs(cert->kappa1 - k1) > 1e-9 || std::fabs(cert->kappa2 - k2) > 1e-8 ||
            cert->witness_margin > 1e-9)
            return fail_result("wip-recovery", "exact line not recovered");
    }
    if (wip_fit({{1.0, 5.0}, {2.0, 3.0}}))
        return fail_result("wip-recovery", "decreasing samples must fail");
    auto single = wip_fit({{1.0, 5.0}});
    if (!single || single->kappa1 != kKappa1Cap || std::fabs(single->kappa2 - (5.0 - kKappa1Cap)) > 1e-6)
        return fail_result("wip-recovery", "degenerate fit must return the configured cap");
    return pass_result("wip-recovery", "exact lines recovered; degenerate cases handled");
}

} // namespace props

// ---- suite runner --------------------------------------------------------------

std::vector<std::string> verify_suite_names() {
    return {"polar",          "lift-refine",   "lift-additivity", "iterate",
            "homogeneity",    "index-gap",     "convergence",     "quasimorphism",
            "dgw-mean-gap",   "catenation",    "cross-check",     "frame-invariance",
            "anti-symmetry",  "euler-lemma",   "chi-telescope",   "sign-stability",
            "af-window",      "oracle-agreement", "surgery-coherence", "sign-structure",
            "wip"};
}

std::vector<PropertyResult> run_verify_suite(const std::string& name, uint64_t seed) {
    using namespace props;
    auto one = [](PropertyResult r) { return std::vector<PropertyResult>{std::move(r)}; };

    if (name == "polar")
        return one(polar_roundtrip(seed, 1000, 4));
    if (name == "lift-refine")
        return one(lift_refinement(seed, 100, 4));
    if (name == "lift-additivity")
        return one(lift_additivity(seed, 100, 4));
    if (name == "iterate")
        return one(iterate_semigroup(seed, 50, 4));
    if (name == "homogeneity")
        return one(homogeneity(seed, 15, 4));
    if (name == "index-gap")
        return one(index_gap(seed, 100, 5));
    if (name == "convergence")
        return one(iterate_convergence(seed, 50, 4));
    if (name == "quasimorphism")
        return one(quasimorphism_defect(seed, 1000, calib::max_calibrated_n));
    if (name == "dgw-mean-gap")
        return one(dgw_mean_gap(seed, 50, calib::max_calibrated_n));
    if (name == "catenation")
        return one(catenation_bound(seed, 100, calib::max_calibrated_n));
    if (name == "cross-check")
        return one(index_cross_check(seed, 100, 4));
    if (name == "frame-invariance")
        return one(frame_invariance(seed, 100, 4));
    if (name == "anti-symmetry")
        return one(anti_symmetry(seed, 100, 4));
    if (name == "euler-lemma")
        return one(euler_lemma(seed, 100));
    if (name == "chi-telescope")
        return one(chi_telescope(seed, 100));
    if (name == "sign-stability")
        return one(sign_stability(seed, 50));
    if (name == "af-window")
        return one(af_window(1000));
    if (name == "oracle-agreement")
        return one(oracle_agreement(10000, 4));
    if (name == "surgery-coherence")
        return one(surgery_coherence(200));
    if (name == "sign-structure")
        return one(sign_structure(seed, 100));
    if (name == "wip")
        return one(wip_recovery(seed));
    if (name == "all") {
        std::vector<PropertyResult> out;
        for (const std::string& s : verify_suite_names())
            for (PropertyResult& r : run_verify_suite(s, seed))
                out.push_back(std::move(r));
        return out;
    }
    std::string known;
    for (const std::string& s : verify_suite_names())
        known += (known.empty() ? "" : ", ") + s;
    fail(ErrorCode::invalid_input,
         "unknown verification suite '" + name + "' (available: " + known + ", all)");
}

} // namespace reebmec
