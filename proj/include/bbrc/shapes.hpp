#pragma once

#include "bbrc/crystal.hpp"
#include "bbrc/loop_schur.hpp"

namespace bbrc {

// lambda(a, 0) = (n-a)^m; lambda(a, i+1) removes the maximal border strip of
// size at most n anchored at the bottom-left cell (bottom row in full, then
// columns [lam_{r+1}, lam_r] per higher row).
std::vector<int> lambda_shape(int a, int i, int m, int n);

// The skew shapes of the rigging formula, in a fixed global frame: rectangle
// R_c (m rows x (n-a) cols) has top row 1 + (t+1-c)*a and left column
// c*(n-a)+1 for c = 0 (that is R_{r-1}) through t+1 (that is R_{r+t}).
// eta: lambda(a, i-1) tiles in R_r..R_{r+t} cut by the green line (keep rows
// <= bottom(R_r) - i) and the blue line (keep cols <= left(R_{r+t+1}) - 1 - i),
// plus uncut lambda(a, i) copies top-left in R_{r-1} and R_{r+t}.
// eta~: one lambda(a, i) copy per rectangle band meeting eta, topmost bands.
// Both carry the frame's content shift (t+1)(n-a) mod n.
struct EtaShapes {
    CellSet eta;
    CellSet eta_tilde;
    int shift = 0;    // global-frame content shift
    int t_tilde = 0;  // number of lambda(a,i) copies in eta~
};

EtaShapes eta_shapes(int a, int t, int i, int m, int n);

CellSet eta_shape(int a, int t, int i, int m, int n);
CellSet eta_tilde_shape(int a, int t, int i, int m, int n);

// (-length of the inner partition) mod n of the normalized shape; agrees with
// the global-frame shift after normalize() compensation.
int content_shift(const CellSet& raw_eta, int n);

// x_j^{(a+j-1)} = multiplicity of letter a in the j-th factor from the left.
VariableMatrix variables_of_state(const TensorState& t);

}  // namespace bbrc
