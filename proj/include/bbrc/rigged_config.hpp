#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bbrc/crystal.hpp"

namespace bbrc {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// Q_l(xi) = sum_j min(l, xi_j)
long long q_stat(int l, const Partition& xi);

// A rigged configuration over a tensor spec of KR factors (r_k, s_k),
// leftmost first.  nu[a-1] holds the parts of nu^{(a)}, rig[a-1] the parallel
// riggings; rows are kept canonical (length desc, rigging desc within ties).
// Vacancy numbers are always derived from (spec, nu), never stored.
struct RiggedConfiguration {
    int n = 0;
    std::vector<std::pair<int, int>> spec;
    std::vector<Partition> nu;
    std::vector<std::vector<int>> rig;

    bool operator==(const RiggedConfiguration&) const = default;
};

RiggedConfiguration empty_rc(int n, std::vector<std::pair<int, int>> spec = {});

void canonicalize(RiggedConfiguration& rc);

// p_l^{(a)} = Q_l(mu^{(a)}) + Q_l(nu^{(a-1)}) - 2 Q_l(nu^{(a)}) + Q_l(nu^{(a+1)})
long long vacancy(const RiggedConfiguration& rc, int a, int l);

// Every rigging bounded above by its vacancy number.
bool is_valid(const RiggedConfiguration& rc);

// delta: leftmost factor must be B^{1,1}; removes one box per color from the
// chosen singular rows of weakly increasing length, resets those riggings to
// the new vacancy numbers, returns the emitted letter in {1,...,n}.
int delta(RiggedConfiguration& rc);

// delta^{-1}: prepends B^{1,1} and adds boxes to the longest singular rows of
// weakly decreasing pre-length for colors letter-1 down to 1.
void delta_inverse(RiggedConfiguration& rc, int letter);

// gamma / ls column splitting: spec-only on the rc side.
void split_column(RiggedConfiguration& rc);   // (1,s) -> (1,1),(1,s-1), s > 1
void fuse_column(RiggedConfiguration& rc);    // inverse

// ls on tensor states: detach the first letter of the leftmost factor.
TensorState split_column(const TensorState& t);
// ls^{-1}: merge a leading B^{1,1} letter k into the next factor; requires
// the next factor to have no letters below k.
TensorState fuse_column(const TensorState& t);

// Full KSS bijection for single-row specs.  phi consumes the rc; the
// optional trace records (spec, nu, rig) after each emitted letter, matching
// the worked-example displays.
TensorState phi_map(RiggedConfiguration rc,
                    std::vector<RiggedConfiguration>* trace = nullptr);
RiggedConfiguration phi_inverse(const TensorState& t);

// Adding a vacuum factor B^{r,s}: on the left (nu, rig) is unchanged; on the
// right riggings J_i^{(r)} grow by min(s, nu_i^{(r)}).
enum class Side { Left, Right };
void pad_vacuum(RiggedConfiguration& rc, Side side, int r, int s);

// T_r^infty on the rc side: J_i^{(r)} += t * nu_i^{(r)}.
void rc_time_evolution(RiggedConfiguration& rc, int r, int t);

// JSON: {"n":..., "spec":[[1,s],...], "nu":[[parts],...], "J":[[riggings],...]}
std::string to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const std::string& text);

}  // namespace bbrc
