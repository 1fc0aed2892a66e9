#include "bbrc/box_ball.hpp"

#include <algorithm>
#include <stdexcept>

#include "bbrc/geom_r.hpp"

namespace bbrc {

BoxBallState state_from_word(const std::string& w, int n) {
    BoxBallState b;
    b.support.n = n;
    for (char c : w) b.support.factors.push_back(from_word(std::string(1, c), n));
    return b;
}

int ball_count(const TensorState& t) {
    int total = 0;
    for (const auto& f : t.factors) total += f.capacity() - f.mult[0];
    return total;
}

int ball_count(const BoxBallState& b) { return ball_count(b.support); }

BoxBallState time_evolution(const BoxBallState& b, int carrier_capacity) {
    int n = b.support.n;
    int bc = ball_count(b);
    int k = carrier_capacity == 0 ? bc + 1 : carrier_capacity;
    if (k <= bc) throw std::invalid_argument("time_evolution: carrier capacity too small");
    CoordinateVector carrier = vacuum(n, k);
    BoxBallState out;
    out.support.n = n;
    out.vacuum_capacity = b.vacuum_capacity;
    std::vector<CoordinateVector> rev;
    for (auto it = b.support.factors.rbegin(); it != b.support.factors.rend(); ++it) {
        auto [c2, f2] = tropical_R(*it, carrier);
        carrier = c2;
        rev.push_back(f2);
    }
    const CoordinateVector empty = vacuum(n, k);
    int guard = bc + 4;
    while (carrier != empty) {
        if (--guard < 0) throw std::logic_error("time_evolution: carrier failed to drain");
        auto [c2, f2] = tropical_R(vacuum(n, b.vacuum_capacity), carrier);
        carrier = c2;
        rev.push_back(f2);
    }
    out.support.factors.assign(rev.rbegin(), rev.rend());
    return out;
}

std::vector<Soliton> solitons(const BoxBallState& b) {
    const auto& fs = b.support.factors;
    int m = static_cast<int>(fs.size());
    std::vector<Soliton> out;
    int i = 0;
    while (i < m) {
        if (fs[i].capacity() - fs[i].mult[0] == 0) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < m && fs[j + 1].capacity() - fs[j + 1].mult[0] > 0) ++j;
        std::string w;
        for (int idx = i; idx <= j; ++idx) w += word(fs[idx]);
        Soliton s;
        s.left_factor = m - i;       // positions count from the right
        s.right_factor = m - j;
        s.amplitude = static_cast<int>(std::count_if(w.begin(), w.end(),
                                                     [](char c) { return c != '1'; }));
        s.interacting = !std::is_sorted(w.begin(), w.end());
        out.push_back(s);
        i = j + 1;
    }
    return out;
}

std::string render(const BoxBallState& b, int window) {
    int n = b.support.n;
    int m = static_cast<int>(b.support.factors.size());
    bool mixed = b.vacuum_capacity != 1;
    for (const auto& f : b.support.factors)
        if (f.capacity() != 1) mixed = true;
    std::string out;
    for (int pos = window; pos >= 1; --pos) {
        int idx = m - pos;
        const CoordinateVector f =
            (idx >= 0 && idx < m) ? b.support.factors[idx] : vacuum(n, b.vacuum_capacity);
        std::string w = word(f);
        out += mixed ? "[" + w + "]" : w;
    }
    return out;
}

}  // namespace bbrc
