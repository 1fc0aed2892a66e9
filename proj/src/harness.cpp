#include "bbrc/harness.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>

#include "bbrc/shapes.hpp"
#include "json.hpp"

namespace bbrc {

Trop conjectured_rigging(const TensorState& state, int a, int i, int t) {
    EtaShapes sh = eta_shapes(a, t, i, static_cast<int>(state.factors.size()), state.n);
    if (sh.eta.empty()) return 0;
    VariableMatrix X = variables_of_state(state);
    Trop num = trop_loop_schur(sh.eta, sh.shift, X);
    Trop den = trop_loop_schur(sh.eta_tilde, sh.shift, X);
    if (num >= kTropInfinity || den >= kTropInfinity) return kTropInfinity;
    return num - den;
}

Trop conjectured_row_length(const TensorState& state, int a, int i) {
    int m = static_cast<int>(state.factors.size());
    int n = state.n;
    VariableMatrix X = variables_of_state(state);
    CellSet outer_cells = make_cells(lambda_shape(a, i - 1, m, n), {});
    CellSet inner_cells = make_cells(lambda_shape(a, i, m, n), {});
    Trop num = trop_cylindric_loop_schur(outer_cells, 0, a, X);
    Trop den = trop_cylindric_loop_schur(inner_cells, 0, a, X);
    if (num >= kTropInfinity || den >= kTropInfinity) return kTropInfinity;
    return num - den;
}

std::vector<TrialReport> check_state(const TensorState& state, const CheckParams& params) {
    int n = state.n;
    int m = static_cast<int>(state.factors.size());
    int smax = 0;
    for (const auto& f : state.factors) smax = std::max(smax, f.capacity());
    int t_max = params.t_max > 0 ? params.t_max : m * n + smax;
    std::vector<int> colors = params.colors;
    if (colors.empty())
        for (int a = 1; a <= n - 1; ++a) colors.push_back(a);

    RiggedConfiguration rc0 = phi_inverse(state);
    std::vector<TrialReport> out;
    for (int a : colors) {
        int rows = static_cast<int>(rc0.nu[a - 1].size());
        for (int i = 1; i <= rows; ++i) {
            TrialReport rep;
            rep.state_word = word(state);
            rep.a = a;
            rep.i = i;
            long long nu_len = rc0.nu[a - 1][i - 1];
            long long j0 = rc0.rig[a - 1][i - 1];
            for (int t = 0; t <= t_max; ++t) {
                RiggingTrial trial;
                trial.t = t;
                trial.oracle = j0 + static_cast<long long>(t) * nu_len;
                trial.conjectured = conjectured_rigging(state, a, i, t);
                trial.match = trial.conjectured < kTropInfinity &&
                              trial.conjectured == trial.oracle;
                rep.table.push_back(trial);
            }
            // first T from which everything in the sweep matches
            int T = t_max + 1;
            for (int t = t_max; t >= 0 && rep.table[t].match; --t) T = t;
            if (T <= t_max) {
                rep.first_match_T = T;
                rep.window = t_max - T + 1;
            }
            Trop crl = conjectured_row_length(state, a, i);
            rep.row_length_match = crl == nu_len;
            rep.stabilization_ok = true;
            if (rep.first_match_T) {
                for (int t = *rep.first_match_T; t < t_max; ++t) {
                    Trop d = rep.table[t + 1].conjectured - rep.table[t].conjectured;
                    if (d != crl) rep.stabilization_ok = false;
                }
            }
            out.push_back(std::move(rep));
        }
    }
    return out;
}

namespace {

// portable deterministic integers from a seeded engine
int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

TensorState random_state(std::mt19937_64& rng, int n, int m, int s_max) {
    TensorState t;
    t.n = n;
    for (int j = 0; j < m; ++j) {
        int s = rand_int(rng, 1, s_max);
        CoordinateVector b;
        b.mult.assign(n, 0);
        for (int k = 0; k < s; ++k) ++b.mult[rand_int(rng, 0, n - 1)];
        t.factors.push_back(std::move(b));
    }
    return t;
}

}  // namespace

FuzzSummary fuzz(const FuzzParams& params) {
    FuzzSummary sum;
    if (params.trials <= 0) return sum;
    int t_max = params.t_max > 0 ? params.t_max : params.m * params.n + params.s_max;
    sum.min_T_histogram.assign(t_max + 2, 0);

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 8);
    std::vector<std::future<FuzzSummary>> futures;
    int per = (params.trials + static_cast<int>(workers) - 1) / static_cast<int>(workers);
    for (unsigned w = 0; w < workers; ++w) {
        int lo = static_cast<int>(w) * per;
        int hi = std::min(params.trials, lo + per);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [=]() {
            FuzzSummary local;
            local.min_T_histogram.assign(t_max + 2, 0);
            for (int trial = lo; trial < hi; ++trial) {
                std::mt19937_64 rng(params.seed * 0x9e3779b97f4a7c15ULL + trial + 1);
                TensorState state = random_state(rng, params.n, params.m, params.s_max);
                ++local.trials;
                CheckParams cp;
                cp.t_max = t_max;
                cp.colors = params.colors;
                auto reports = check_state(state, cp);
                RiggedConfiguration rc = phi_inverse(state);
                for (const auto& rep : reports) {
                    ++local.reports;
                    if (rep.first_match_T) {
                        ++local.matched;
                        ++local.min_T_histogram[*rep.first_match_T];
                        if (!rep.stabilization_ok) {
                            ++local.hard_failures;
                            local.counterexamples.push_back("stabilization: " + rep.state_word);
                        }
                    } else {
                        ++local.inconclusive;
                        local.counterexamples.push_back(
                            "no-match a=" + std::to_string(rep.a) + " i=" +
                            std::to_string(rep.i) + " state=" + rep.state_word);
                    }
                    // a = 1 shape formula is a theorem
                    if (rep.a == 1) {
                        Trop crl = conjectured_row_length(state, 1, rep.i);
                        if (crl != rc.nu[0][rep.i - 1]) {
                            ++local.hard_failures;
                            local.counterexamples.push_back("a1-shape: " + rep.state_word);
                        }
                    }
                }
            }
            return local;
        }));
    }
    for (auto& f : futures) {
        FuzzSummary local = f.get();
        sum.trials += local.trials;
        sum.reports += local.reports;
        sum.matched += local.matched;
        sum.inconclusive += local.inconclusive;
        sum.hard_failures += local.hard_failures;
        for (size_t i = 0; i < local.min_T_histogram.size(); ++i)
            sum.min_T_histogram[i] += local.min_T_histogram[i];
        sum.counterexamples.insert(sum.counterexamples.end(), local.counterexamples.begin(),
                                   local.counterexamples.end());
    }
    return sum;
}

bool column_fusion_check(const TensorState& state, int t) {
    if (state.factors.empty() || state.factors.front().capacity() != 1)
        throw std::invalid_argument("column_fusion_check: leading factor must be B^{1,1}");
    int n = state.n;
    int k = 0;
    while (state.factors.front().mult[k] == 0) ++k;
    for (int a = 0; a < k; ++a)
        if (state.factors[1].mult[a] != 0)
            throw std::invalid_argument("column_fusion_check: state not fusible");
    TensorState fused = fuse_column(state);
    CoordinateVector zero;
    zero.mult.assign(n, 0);
    fused.factors.insert(fused.factors.begin(), zero);  // B^{1,0} padding
    for (int a = 1; a <= n - 1; ++a) {
        for (int i = 1; i <= 2; ++i) {
            if (conjectured_rigging(state, a, i, t) != conjectured_rigging(fused, a, i, t))
                return false;
            if (conjectured_row_length(state, a, i) != conjectured_row_length(fused, a, i))
                return false;
        }
    }
    return true;
}

std::string to_json(const FuzzSummary& s) {
    nlohmann::json j;
    j["trials"] = s.trials;
    j["reports"] = s.reports;
    j["matched"] = s.matched;
    j["inconclusive"] = s.inconclusive;
    j["min_T_histogram"] = s.min_T_histogram;
    j["hard_failures"] = s.hard_failures;
    j["counterexamples"] = s.counterexamples;
    return j.dump(2);
}

}  // namespace bbrc
