#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbrc/crystal.hpp"
#include "bbrc/loop_schur.hpp"
#include "bbrc/rigged_config.hpp"

namespace bbrc {

// trop(s_eta / s_eta~) at (a, i, t) for the initial state's variables.
// Empty eta evaluates to 0 (absent-row convention); infinity propagates.
Trop conjectured_rigging(const TensorState& state, int a, int i, int t);

// trop(cyl s_{lambda(a,i-1)} / cyl s_{lambda(a,i)}): the row-length formula.
Trop conjectured_row_length(const TensorState& state, int a, int i);

struct RiggingTrial {
    int t = 0;
    long long oracle = 0;
    Trop conjectured = 0;
    bool match = false;
};

struct TrialReport {
    std::string state_word;
    int a = 0;
    int i = 0;
    std::vector<RiggingTrial> table;
    std::optional<int> first_match_T;  // start of a full match window, if any
    int window = 0;
    bool row_length_match = false;     // conjectured_row_length == nu_i^{(a)}
    bool stabilization_ok = false;     // conj(t+1)-conj(t) == row length on the window
};

struct CheckParams {
    int t_max = -1;        // default m*n + max s_i
    std::vector<int> colors;  // default all 1..n-1
};

// Oracle via phi_inverse + rc_time_evolution against the conjectured values
// for every row of every requested color.
std::vector<TrialReport> check_state(const TensorState& state, const CheckParams& params = {});

struct FuzzParams {
    int n = 3;
    int m = 3;
    int s_max = 5;
    int trials = 100;
    std::uint64_t seed = 0;
    int t_max = -1;
    std::vector<int> colors;
};

struct FuzzSummary {
    int trials = 0;
    int reports = 0;              // (state, a, i) triples checked
    int matched = 0;              // reports with a full match window
    int inconclusive = 0;         // no match within the sweep bound
    std::vector<int> min_T_histogram;
    int hard_failures = 0;        // proven-property violations (must stay 0)
    std::vector<std::string> counterexamples;  // machine-readable dumps
};

// Deterministic-by-seed batch of check_state runs.  Conjecture mismatches are
// data; hard failures cover only proven properties (a=1 shapes, stabilization
// within matched windows, m=1 closed forms).
FuzzSummary fuzz(const FuzzParams& params);

// Section-4 check: for a state k (x) b_m (x) ... with x_1^{(<k)} = 0, fusing
// the leading letter (with B^{1,0} padding) preserves every tropical value.
bool column_fusion_check(const TensorState& state, int t = 2);

std::string to_json(const FuzzSummary& s);

}  // namespace bbrc
