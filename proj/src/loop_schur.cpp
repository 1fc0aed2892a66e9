#include "bbrc/loop_schur.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bbrc {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}

CellSet make_cells(const std::vector<int>& outer, const std::vector<int>& inner) {
    CellSet cs;
    for (size_t r = 0; r < outer.size(); ++r) {
        int in = r < inner.size() ? inner[r] : 0;
        if (in > outer[r]) throw std::invalid_argument("make_cells: inner exceeds outer");
        for (int c = in + 1; c <= outer[r]; ++c)
            cs.push_back({static_cast<int>(r + 1), c});
    }
    std::sort(cs.begin(), cs.end());
    return cs;
}

std::pair<std::vector<int>, std::vector<int>> shape_of(const CellSet& cells) {
    if (cells.empty()) return {{}, {}};
    int rmin = cells.front().row, rmax = cells.front().row;
    for (const auto& c : cells) {
        rmin = std::min(rmin, c.row);
        rmax = std::max(rmax, c.row);
    }
    std::vector<int> outer, inner;
    for (int r = rmin; r <= rmax; ++r) {
        int lo = 0, hi = -1, count = 0;
        for (const auto& c : cells)
            if (c.row == r) {
                if (count == 0) lo = hi = c.col;
                lo = std::min(lo, c.col);
                hi = std::max(hi, c.col);
                ++count;
            }
        if (count == 0 || hi - lo + 1 != count)
            throw std::invalid_argument("shape_of: rows not contiguous");
        outer.push_back(hi);
        inner.push_back(lo - 1);
    }
    for (size_t r = 0; r + 1 < outer.size(); ++r)
        if (outer[r] < outer[r + 1] || inner[r] < inner[r + 1])
            throw std::invalid_argument("shape_of: not a skew shape");
    return {outer, inner};
}

std::pair<CellSet, int> normalize(const CellSet& cells, int k, int n) {
    if (cells.empty()) return {cells, 0};
    int rmin = cells.front().row, cmin = cells.front().col;
    for (const auto& c : cells) {
        rmin = std::min(rmin, c.row);
        cmin = std::min(cmin, c.col);
    }
    int dr = 1 - rmin, dc = 1 - cmin;
    CellSet out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back({c.row + dr, c.col + dc});
    std::sort(out.begin(), out.end());
    return {out, mod(k - dr + dc, n)};
}

int content_color(Cell c, int k, int n) {
    int v = mod(c.row - c.col + k, n);
    return v == 0 ? n : v;
}

VariableMatrix zero_variables(int m, int n) {
    VariableMatrix X;
    X.m = m;
    X.n = n;
    X.v.assign(static_cast<size_t>(m) * n, 0);
    return X;
}

namespace {

struct Columns {
    std::vector<int> cols;                    // distinct columns in order
    std::vector<std::vector<int>> rows;       // rows per column, sorted
};

Columns columns_of(const CellSet& cells) {
    Columns out;
    std::map<int, std::vector<int>> by_col;
    for (const auto& c : cells) by_col[c.col].push_back(c.row);
    for (auto& [c, rs] : by_col) {
        std::sort(rs.begin(), rs.end());
        out.cols.push_back(c);
        out.rows.push_back(rs);
    }
    return out;
}

// All strictly-increasing-down-contiguous-runs fillings of one column,
// as parallel (rows, values).
void column_fillings(const std::vector<int>& rows, int m,
                     std::vector<std::vector<int>>& out) {
    out.clear();
    // split into contiguous runs; strictness binds only within a run
    std::vector<std::pair<size_t, size_t>> runs;
    size_t start = 0;
    for (size_t i = 1; i <= rows.size(); ++i) {
        if (i == rows.size() || rows[i] != rows[i - 1] + 1) {
            runs.emplace_back(start, i);
            start = i;
        }
    }
    std::vector<int> cur(rows.size(), 0);
    auto rec = [&](auto&& self, size_t run_idx) -> void {
        if (run_idx == runs.size()) {
            out.push_back(cur);
            return;
        }
        auto [lo, hi] = runs[run_idx];
        size_t len = hi - lo;
        if (len > static_cast<size_t>(m)) return;  // no strict filling
        std::vector<int> pick(len);
        auto pick_rec = [&](auto&& pself, size_t pos, int minval) -> void {
            if (pos == len) {
                for (size_t i = 0; i < len; ++i) cur[lo + i] = pick[i];
                self(self, run_idx + 1);
                return;
            }
            for (int v = minval; v <= m - static_cast<int>(len - pos) + 1; ++v) {
                pick[pos] = v;
                pself(pself, pos + 1, v + 1);
            }
        };
        pick_rec(pick_rec, 0, 1);
    };
    rec(rec, 0);
}

Trop column_cost(const std::vector<int>& rows, const std::vector<int>& vals, int col,
                 int shift, const VariableMatrix& X) {
    Trop cost = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        int slot = mod(rows[i] - col + shift, X.n);
        cost += X.at(vals[i], slot);
    }
    return cost;
}

}  // namespace

Trop trop_loop_schur(const CellSet& cells, int shift, const VariableMatrix& X) {
    if (cells.empty()) return 0;
    Columns cols = columns_of(cells);
    // DP over columns left to right; the state is the previous column's
    // filling (keyed by its row/value pairs) when the next column is adjacent.
    std::map<std::vector<int>, Trop> prev;
    std::vector<int> prev_rows;
    prev[{}] = 0;
    std::vector<std::vector<int>> fills;
    for (size_t ci = 0; ci < cols.cols.size(); ++ci) {
        int col = cols.cols[ci];
        const auto& rows = cols.rows[ci];
        column_fillings(rows, X.m, fills);
        if (fills.empty()) return kTropInfinity;
        std::map<std::vector<int>, Trop> next;
        bool adjacent_prev = ci > 0 && cols.cols[ci - 1] == col - 1;
        for (const auto& [pkey, acc] : prev) {
            for (const auto& f : fills) {
                if (adjacent_prev) {
                    bool ok = true;
                    for (size_t i = 0; i < rows.size() && ok; ++i) {
                        auto it = std::lower_bound(prev_rows.begin(), prev_rows.end(), rows[i]);
                        if (it != prev_rows.end() && *it == rows[i]) {
                            size_t pi = static_cast<size_t>(it - prev_rows.begin());
                            if (pkey[pi] > f[i]) ok = false;
                        }
                    }
                    if (!ok) continue;
                }
                Trop val = acc + column_cost(rows, f, col, shift, X);
                auto [it, inserted] = next.try_emplace(f, val);
                if (!inserted && val < it->second) it->second = val;
            }
        }
        bool adjacent_next = ci + 1 < cols.cols.size() && cols.cols[ci + 1] == col + 1;
        if (!adjacent_next) {
            Trop best = kTropInfinity;
            for (const auto& [key, v] : next) best = std::min(best, v);
            next.clear();
            next[{}] = best;
            prev_rows.clear();
        } else {
            prev_rows = rows;
        }
        prev = std::move(next);
        if (prev.empty()) return kTropInfinity;
    }
    Trop best = kTropInfinity;
    for (const auto& [key, v] : prev) best = std::min(best, v);
    return best;
}

namespace {

// Enumerate complete fillings column by column, invoking sink on each.
template <typename Sink>
void enumerate_fillings(const CellSet& cells, int m, Sink&& sink) {
    Columns cols = columns_of(cells);
    size_t ncols = cols.cols.size();
    std::vector<std::vector<std::vector<int>>> fills(ncols);
    for (size_t ci = 0; ci < ncols; ++ci) {
        column_fillings(cols.rows[ci], m, fills[ci]);
        if (fills[ci].empty()) return;
    }
    std::vector<const std::vector<int>*> chosen(ncols);
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == ncols) {
            sink(cols, chosen);
            return;
        }
        bool adj = ci > 0 && cols.cols[ci - 1] == cols.cols[ci] - 1;
        for (const auto& f : fills[ci]) {
            if (adj) {
                bool ok = true;
                const auto& rows = cols.rows[ci];
                const auto& prows = cols.rows[ci - 1];
                const auto& pf = *chosen[ci - 1];
                for (size_t i = 0; i < rows.size() && ok; ++i) {
                    auto it = std::lower_bound(prows.begin(), prows.end(), rows[i]);
                    if (it != prows.end() && *it == rows[i])
                        if (pf[static_cast<size_t>(it - prows.begin())] > f[i]) ok = false;
                }
                if (!ok) continue;
            }
            chosen[ci] = &f;
            self(self, ci + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

Trop trop_loop_schur_enum(const CellSet& cells, int shift, const VariableMatrix& X) {
    if (cells.empty()) return 0;
    Trop best = kTropInfinity;
    enumerate_fillings(cells, X.m, [&](const Columns& cols,
                                       const std::vector<const std::vector<int>*>& chosen) {
        Trop tot = 0;
        for (size_t ci = 0; ci < cols.cols.size(); ++ci)
            tot += column_cost(cols.rows[ci], *chosen[ci], cols.cols[ci], shift, X);
        best = std::min(best, tot);
    });
    return best;
}

bool is_cylindric_ssyt(const CellSet& cells, const std::vector<int>& filling,
                       int rows_down, int cols_left) {
    if (cells.size() != filling.size())
        throw std::invalid_argument("is_cylindric_ssyt: filling size mismatch");
    std::map<Cell, int> f;
    for (size_t i = 0; i < cells.size(); ++i) f[cells[i]] = filling[i];
    // planar semistandardness
    for (const auto& [c, v] : f) {
        auto right = f.find({c.row, c.col + 1});
        if (right != f.end() && v > right->second) return false;
        auto below = f.find({c.row + 1, c.col});
        if (below != f.end() && v >= below->second) return false;
    }
    // adjacencies between the shape and its period translate
    for (const auto& [c, v] : f) {
        Cell t{c.row + rows_down, c.col - cols_left};
        auto chk = [&](Cell nb, bool strict, bool translate_smaller) {
            auto it = f.find(nb);
            if (it == f.end()) return true;
            int a = translate_smaller ? v : it->second;
            int b = translate_smaller ? it->second : v;
            return strict ? a < b : a <= b;
        };
        // translated copy sits down-left; its cell t carries value v
        if (!chk({t.row, t.col + 1}, false, true)) return false;   // v <= right neighbor
        if (!chk({t.row, t.col - 1}, false, false)) return false;  // left neighbor <= v
        if (!chk({t.row + 1, t.col}, true, true)) return false;    // v < below
        if (!chk({t.row - 1, t.col}, true, false)) return false;   // above < v
    }
    return true;
}

Trop trop_cylindric_loop_schur(const CellSet& cells, int shift, int a,
                               const VariableMatrix& X, int reps) {
    if (cells.empty()) return 0;
    int n = X.n;
    int rows_down = a * reps;
    int cols_left = (n - a) * reps;
    Trop best = kTropInfinity;
    enumerate_fillings(cells, X.m, [&](const Columns& cols,
                                       const std::vector<const std::vector<int>*>& chosen) {
        CellSet cs;
        std::vector<int> vals;
        for (size_t ci = 0; ci < cols.cols.size(); ++ci)
            for (size_t i = 0; i < cols.rows[ci].size(); ++i) {
                cs.push_back({cols.rows[ci][i], cols.cols[ci]});
                vals.push_back((*chosen[ci])[i]);
            }
        if (!is_cylindric_ssyt(cs, vals, rows_down, cols_left)) return;
        Trop tot = 0;
        for (size_t i = 0; i < cs.size(); ++i) {
            int slot = mod(cs[i].row - cs[i].col + shift, n);
            tot += X.at(vals[i], slot);
        }
        best = std::min(best, tot);
    });
    return best;
}

}  // namespace bbrc
