#include "bbrc/shapes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bbrc {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<int> remove_rim(const std::vector<int>& lam_in, int n) {
    std::vector<int> lam;
    for (int p : lam_in)
        if (p > 0) lam.push_back(p);
    if (lam.empty()) return {};
    int l = static_cast<int>(lam.size());
    int k = 1;
    while (k + 1 <= l && lam[l - (k + 1)] + k <= n) ++k;
    std::vector<int> out(lam.begin(), lam.begin() + (l - k));
    for (int r = l - k + 1; r <= l - 1; ++r) out.push_back(lam[r] - 1);
    std::erase(out, 0);
    return out;
}

void place(std::set<Cell>& cells, const std::vector<int>& lam, int top, int left) {
    for (size_t r = 0; r < lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c)
            cells.insert({top + static_cast<int>(r), left + c});
}
}  // namespace

std::vector<int> lambda_shape(int a, int i, int m, int n) {
    if (a < 1 || a > n - 1) throw std::invalid_argument("lambda_shape: a out of range");
    if (i < 0) throw std::invalid_argument("lambda_shape: negative i");
    std::vector<int> lam(m, n - a);
    for (int step = 0; step < i && !lam.empty(); ++step) lam = remove_rim(lam, n);
    return lam;
}

EtaShapes eta_shapes(int a, int t, int i, int m, int n) {
    if (t < 0 || i < 1) throw std::invalid_argument("eta_shapes: need t >= 0, i >= 1");
    int w = n - a;
    std::vector<int> tile = lambda_shape(a, i - 1, m, n);
    std::vector<int> corner = lambda_shape(a, i, m, n);
    auto rect_top = [&](int c) { return 1 + (t + 1 - c) * a; };
    auto rect_left = [&](int c) { return c * w + 1; };
    int green = rect_top(1) + m - 1 - i;       // keep rows <= green
    int blue = rect_left(t + 2) - 1 - i;       // keep cols <= blue

    std::set<Cell> eta;
    for (int c = 1; c <= t + 1; ++c) {
        std::set<Cell> one;
        place(one, tile, rect_top(c), rect_left(c));
        for (const Cell& cell : one)
            if (cell.row <= green && cell.col <= blue) eta.insert(cell);
    }
    place(eta, corner, rect_top(0), rect_left(0));
    place(eta, corner, rect_top(t + 1), rect_left(t + 1));

    EtaShapes out;
    out.eta.assign(eta.begin(), eta.end());
    out.shift = mod((t + 1) * w, n);
    if (!eta.empty()) {
        std::set<int> bands;
        for (const Cell& cell : eta) bands.insert((cell.col - 1) / w);
        out.t_tilde = static_cast<int>(bands.size());
        int top_band = *bands.rbegin();
        std::set<Cell> tilde;
        for (int b = top_band - out.t_tilde + 1; b <= top_band; ++b)
            place(tilde, corner, rect_top(b), rect_left(b));
        out.eta_tilde.assign(tilde.begin(), tilde.end());
    }
    return out;
}

CellSet eta_shape(int a, int t, int i, int m, int n) { return eta_shapes(a, t, i, m, n).eta; }

CellSet eta_tilde_shape(int a, int t, int i, int m, int n) {
    return eta_shapes(a, t, i, m, n).eta_tilde;
}

int content_shift(const CellSet& raw_eta, int n) {
    if (raw_eta.empty()) return 0;
    auto [norm, unused] = normalize(raw_eta, 0, n);
    (void)unused;
    auto [outer, inner] = shape_of(norm);
    int len = 0;
    for (int x : inner)
        if (x > 0) ++len;
    return mod(-len, n);
}

VariableMatrix variables_of_state(const TensorState& t) {
    int m = static_cast<int>(t.factors.size());
    int n = t.n;
    VariableMatrix X = zero_variables(m, n);
    for (int j = 1; j <= m; ++j) {
        const auto& f = t.factors[j - 1];
        if (f.rank() != n) throw std::invalid_argument("variables_of_state: rank mismatch");
        for (int a = 1; a <= n; ++a) X.at(j, mod(a + j - 1, n)) = f.mult[a - 1];
    }
    return X;
}

}  // namespace bbrc
