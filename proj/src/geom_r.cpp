#include "bbrc/geom_r.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bbrc {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }

// superscript shift by +1: out^(b) = in^(b-1)
std::vector<int> rot(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    std::vector<int> out(n);
    for (int b = 0; b < n; ++b) out[b] = v[mod(b - 1, n)];
    return out;
}

std::vector<int> unrot(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    std::vector<int> out(n);
    for (int b = 0; b < n; ++b) out[b] = v[mod(b + 1, n)];
    return out;
}
}  // namespace

long long tropical_kappa(int a, const std::vector<int>& x1, const std::vector<int>& x2) {
    int n = static_cast<int>(x1.size());
    if (x2.size() != x1.size()) throw std::invalid_argument("kappa: rank mismatch");
    long long best = 0;
    bool first = true;
    for (int j = a; j <= a + n - 1; ++j) {
        long long tot = 0;
        for (int k = a + 1; k <= j; ++k) tot += x1[mod(k - 1, n)];
        for (int k = j + 1; k <= a + n - 1; ++k) tot += x2[mod(k - 1, n)];
        if (first || tot < best) best = tot;
        first = false;
    }
    return best;
}

std::pair<CoordinateVector, CoordinateVector> tropical_R(const CoordinateVector& left,
                                                         const CoordinateVector& right) {
    int n = left.rank();
    if (right.rank() != n) throw std::invalid_argument("tropical_R: rank mismatch");
    // x1 = right factor with the staircase twist, x2 = left factor
    std::vector<int> x1 = rot(right.mult);
    const std::vector<int>& x2 = left.mult;
    std::vector<long long> kap(n);
    for (int a = 1; a <= n; ++a) kap[a - 1] = tropical_kappa(a, x1, x2);
    auto K = [&](int a) { return kap[mod(a - 1, n)]; };
    std::vector<int> f1(n), f2(n);
    for (int a = 1; a <= n; ++a) {
        f1[a - 1] = static_cast<int>(x2[mod(a - 2, n)] + K(a - 1) - K(a));
        f2[a - 1] = static_cast<int>(x1[mod(a, n)] + K(a + 1) - K(a));
    }
    return {CoordinateVector{f2}, CoordinateVector{unrot(f1)}};
}

std::map<PairKey, PairKey> oracle_R_table(int n, int s, int sp) {
    auto key = [](const TensorState& t) {
        return PairKey{t.factors[0].mult, t.factors[1].mult};
    };
    TensorState start_a{n, {vacuum(n, s), vacuum(n, sp)}};
    TensorState start_b{n, {vacuum(n, sp), vacuum(n, s)}};
    std::map<PairKey, PairKey> table;
    table[key(start_a)] = key(start_b);
    std::deque<std::pair<TensorState, TensorState>> queue;
    queue.emplace_back(start_a, start_b);
    while (!queue.empty()) {
        auto [ta, tb] = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            for (CrystalOp op : {CrystalOp::E, CrystalOp::F}) {
                auto ra = tensor_step(op, i, ta);
                auto rb = tensor_step(op, i, tb);
                if (ra.has_value() != rb.has_value())
                    throw std::logic_error("oracle_R: operator domains differ");
                if (!ra) continue;
                auto ka = key(*ra);
                auto kb = key(*rb);
                auto it = table.find(ka);
                if (it != table.end()) {
                    if (it->second != kb) throw std::logic_error("oracle_R: ambiguous image");
                } else {
                    table.emplace(ka, kb);
                    queue.emplace_back(*ra, *rb);
                }
            }
        }
    }
    size_t total = all_elements(n, s).size() * all_elements(n, sp).size();
    if (table.size() != total) throw std::logic_error("oracle_R: crystal graph not connected");
    return table;
}

std::pair<CoordinateVector, CoordinateVector> oracle_R(const CoordinateVector& left,
                                                       const CoordinateVector& right) {
    auto table = oracle_R_table(left.rank(), left.capacity(), right.capacity());
    auto img = table.at({left.mult, right.mult});
    return {CoordinateVector{img.first}, CoordinateVector{img.second}};
}

bool yang_baxter_check(const CoordinateVector& a, const CoordinateVector& b,
                       const CoordinateVector& c) {
    auto r1 = [](std::array<CoordinateVector, 3> t) {
        auto [x, y] = tropical_R(t[0], t[1]);
        return std::array<CoordinateVector, 3>{x, y, t[2]};
    };
    auto r2 = [](std::array<CoordinateVector, 3> t) {
        auto [x, y] = tropical_R(t[1], t[2]);
        return std::array<CoordinateVector, 3>{t[0], x, y};
    };
    auto lhs = r1(r2(r1({a, b, c})));
    auto rhs = r2(r1(r2({a, b, c})));
    return lhs == rhs;
}

}  // namespace bbrc
