#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "bbrc/crystal.hpp"

namespace bbrc {

// Tropical values; kTropInfinity marks an empty tableau set.
using Trop = std::int64_t;
constexpr Trop kTropInfinity = std::numeric_limits<Trop>::max() / 4;

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// A skew region as a set of cells (1-based, English convention).  Rows need
// not be contiguous: components separated by an empty row or column are
// independent, which the evaluators handle directly.
using CellSet = std::vector<Cell>;  // kept sorted/unique

CellSet make_cells(const std::vector<int>& outer, const std::vector<int>& inner);

// (outer, inner) over the bounding rows; requires contiguous rows and a valid
// skew shape.
std::pair<std::vector<int>, std::vector<int>> shape_of(const CellSet& cells);

// Translate so min row = min col = 1, compensating the content shift so that
// cell colors are preserved: k' = k - dr + dc.
std::pair<CellSet, int> normalize(const CellSet& cells, int k, int n);

// 1-based color in {1,...,n} of a cell under shift k: ((i - j + k) mod n),
// with 0 meaning n.
int content_color(Cell c, int k, int n);

// The variable array X = {x_i^{(a)}}: value(i, a) with i in 1..m the factor
// row and a in 1..n the (mod-n) superscript.
struct VariableMatrix {
    int m = 0;
    int n = 0;
    std::vector<int> v;  // v[(i-1)*n + slot], slot = a mod n (slot 0 == superscript n)

    int& at(int i, int slot) { return v[(i - 1) * n + slot]; }
    int at(int i, int slot) const { return v[(i - 1) * n + slot]; }
};

VariableMatrix zero_variables(int m, int n);

// min over semistandard fillings T: cells -> {1..m} of
// sum_cells x_{T(c)}^{(color(c))}; empty set evaluates to 0.
// Production min-plus column DP and independent enumeration oracle.
Trop trop_loop_schur(const CellSet& cells, int shift, const VariableMatrix& X);
Trop trop_loop_schur_enum(const CellSet& cells, int shift, const VariableMatrix& X);

// Cylindric variant: fillings whose universal cover under translations by
// (rows down, cols left) = reps * (a, n-a) is semistandard; enumeration with
// the cover filter.
bool is_cylindric_ssyt(const CellSet& cells, const std::vector<int>& filling,
                       int rows_down, int cols_left);
Trop trop_cylindric_loop_schur(const CellSet& cells, int shift, int a,
                               const VariableMatrix& X, int reps = 1);

}  // namespace bbrc
