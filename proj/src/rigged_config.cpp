#include "bbrc/rigged_config.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace bbrc {

namespace {
constexpr int kInfinity = std::numeric_limits<int>::max();
}

long long q_stat(int l, const Partition& xi) {
    long long q = 0;
    for (int p : xi) q += std::min(l, p);
    return q;
}

RiggedConfiguration empty_rc(int n, std::vector<std::pair<int, int>> spec) {
    RiggedConfiguration rc;
    rc.n = n;
    rc.spec = std::move(spec);
    rc.nu.assign(n - 1, {});
    rc.rig.assign(n - 1, {});
    return rc;
}

void canonicalize(RiggedConfiguration& rc) {
    for (int a = 0; a < rc.n - 1; ++a) {
        std::vector<std::pair<int, int>> rows;
        rows.reserve(rc.nu[a].size());
        for (size_t i = 0; i < rc.nu[a].size(); ++i)
            rows.emplace_back(rc.nu[a][i], rc.rig[a][i]);
        std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first > y.first : x.second > y.second;
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            rc.nu[a][i] = rows[i].first;
            rc.rig[a][i] = rows[i].second;
        }
    }
}

long long vacancy(const RiggedConfiguration& rc, int a, int l) {
    if (a < 1 || a > rc.n - 1) throw std::invalid_argument("vacancy: color out of range");
    Partition mu;
    for (const auto& [r, s] : rc.spec)
        if (r == a) mu.push_back(s);
    long long p = q_stat(l, mu);
    if (a >= 2) p += q_stat(l, rc.nu[a - 2]);
    p -= 2 * q_stat(l, rc.nu[a - 1]);
    if (a < rc.n - 1) p += q_stat(l, rc.nu[a]);
    return p;
}

bool is_valid(const RiggedConfiguration& rc) {
    for (int a = 1; a <= rc.n - 1; ++a)
        for (size_t i = 0; i < rc.nu[a - 1].size(); ++i)
            if (rc.rig[a - 1][i] > vacancy(rc, a, rc.nu[a - 1][i])) return false;
    return true;
}

int delta(RiggedConfiguration& rc) {
    if (rc.spec.empty() || rc.spec.front() != std::pair<int, int>{1, 1})
        throw std::invalid_argument("delta: leftmost factor must be B^{1,1}");
    if (!is_valid(rc)) throw std::invalid_argument("delta: rigging above vacancy");
    canonicalize(rc);
    int n = rc.n;
    std::vector<int> sel(n - 1, -1);
    int prev = 1;
    int letter = n;
    for (int a = 1; a <= n - 1; ++a) {
        int best = -1;
        for (size_t i = 0; i < rc.nu[a - 1].size(); ++i) {
            int l = rc.nu[a - 1][i];
            if (l < prev) continue;
            if (rc.rig[a - 1][i] != vacancy(rc, a, l)) continue;
            if (best < 0 || l < rc.nu[a - 1][best]) best = static_cast<int>(i);
        }
        if (best < 0) {
            letter = a;
            break;
        }
        sel[a - 1] = best;
        prev = rc.nu[a - 1][best];
    }
    rc.spec.erase(rc.spec.begin());
    for (int a = 1; a < letter; ++a) --rc.nu[a - 1][sel[a - 1]];
    for (int a = 1; a < letter; ++a) {
        int i = sel[a - 1];
        if (rc.nu[a - 1][i] == 0) {
            rc.nu[a - 1].erase(rc.nu[a - 1].begin() + i);
            rc.rig[a - 1].erase(rc.rig[a - 1].begin() + i);
        } else {
            rc.rig[a - 1][i] = static_cast<int>(vacancy(rc, a, rc.nu[a - 1][i]));
        }
    }
    canonicalize(rc);
    return letter;
}

void delta_inverse(RiggedConfiguration& rc, int letter) {
    if (letter < 1 || letter > rc.n) throw std::invalid_argument("delta_inverse: bad letter");
    canonicalize(rc);
    const RiggedConfiguration before = rc;  // singularity is tested against the pre-image
    rc.spec.insert(rc.spec.begin(), {1, 1});
    int bound = kInfinity;
    std::vector<std::pair<int, int>> touched;  // (a, row index)
    for (int a = letter - 1; a >= 1; --a) {
        int best = -1;
        int best_len = -1;
        for (size_t i = 0; i < before.nu[a - 1].size(); ++i) {
            int l = before.nu[a - 1][i];
            if (l > bound) continue;
            if (before.rig[a - 1][i] != vacancy(before, a, l)) continue;
            if (l > best_len) {
                best_len = l;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) {
            rc.nu[a - 1].push_back(1);
            rc.rig[a - 1].push_back(0);
            touched.emplace_back(a, static_cast<int>(rc.nu[a - 1].size()) - 1);
            bound = 0;
        } else {
            ++rc.nu[a - 1][best];
            touched.emplace_back(a, best);
            bound = best_len;
        }
    }
    for (auto [a, i] : touched)
        rc.rig[a - 1][i] = static_cast<int>(vacancy(rc, a, rc.nu[a - 1][i]));
    canonicalize(rc);
}

void split_column(RiggedConfiguration& rc) {
    if (rc.spec.empty() || rc.spec.front().first != 1 || rc.spec.front().second <= 1)
        throw std::invalid_argument("split_column: leftmost capacity must exceed 1");
    int s = rc.spec.front().second;
    rc.spec.front() = {1, s - 1};
    rc.spec.insert(rc.spec.begin(), {1, 1});
}

void fuse_column(RiggedConfiguration& rc) {
    if (rc.spec.size() < 2 || rc.spec[0] != std::pair<int, int>{1, 1} || rc.spec[1].first != 1)
        throw std::invalid_argument("fuse_column: spec must start (1,1),(1,s)");
    int s = rc.spec[1].second;
    rc.spec.erase(rc.spec.begin());
    rc.spec.front() = {1, s + 1};
}

TensorState split_column(const TensorState& t) {
    if (t.factors.empty() || t.factors.front().capacity() <= 1)
        throw std::invalid_argument("split_column: leftmost capacity must exceed 1");
    TensorState out = t;
    const auto& f = t.factors.front();
    int first = 0;
    while (f.mult[first] == 0) ++first;
    CoordinateVector head;
    head.mult.assign(t.n, 0);
    head.mult[first] = 1;
    out.factors.front().mult[first] -= 1;
    out.factors.insert(out.factors.begin(), head);
    return out;
}

TensorState fuse_column(const TensorState& t) {
    if (t.factors.size() < 2 || t.factors.front().capacity() != 1)
        throw std::invalid_argument("fuse_column: leading factor must be B^{1,1}");
    int k = 0;
    while (t.factors.front().mult[k] == 0) ++k;
    const auto& next = t.factors[1];
    for (int a = 0; a < k; ++a)
        if (next.mult[a] != 0)
            throw std::invalid_argument("fuse_column: merged word not weakly increasing");
    TensorState out = t;
    out.factors.erase(out.factors.begin());
    out.factors.front().mult[k] += 1;
    return out;
}

TensorState phi_map(RiggedConfiguration rc, std::vector<RiggedConfiguration>* trace) {
    std::vector<std::pair<int, int>> orig = rc.spec;
    std::string letters;
    while (!rc.spec.empty()) {
        if (rc.spec.front().second > 1) split_column(rc);
        int letter = delta(rc);
        letters.push_back(static_cast<char>('0' + letter));
        if (trace) trace->push_back(rc);
    }
    TensorState out;
    out.n = rc.n;
    size_t pos = 0;
    for (const auto& [r, s] : orig) {
        (void)r;
        out.factors.push_back(from_word(letters.substr(pos, s), rc.n));
        pos += s;
    }
    return out;
}

RiggedConfiguration phi_inverse(const TensorState& t) {
    RiggedConfiguration rc = empty_rc(t.n);
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
        std::string w = word(*it);
        for (auto wc = w.rbegin(); wc != w.rend(); ++wc) {
            delta_inverse(rc, *wc - '0');
            if (wc != w.rbegin()) fuse_column(rc);
        }
    }
    return rc;
}

void pad_vacuum(RiggedConfiguration& rc, Side side, int r, int s) {
    if (side == Side::Left) {
        rc.spec.insert(rc.spec.begin(), {r, s});
        return;
    }
    rc.spec.emplace_back(r, s);
    if (r >= 1 && r <= rc.n - 1)
        for (size_t i = 0; i < rc.nu[r - 1].size(); ++i)
            rc.rig[r - 1][i] += std::min(s, rc.nu[r - 1][i]);
}

void rc_time_evolution(RiggedConfiguration& rc, int r, int t) {
    if (t < 0) throw std::invalid_argument("rc_time_evolution: negative step count");
    for (size_t i = 0; i < rc.nu[r - 1].size(); ++i)
        rc.rig[r - 1][i] += t * rc.nu[r - 1][i];
    canonicalize(rc);
}

std::string to_json(const RiggedConfiguration& rc) {
    nlohmann::json j;
    j["n"] = rc.n;
    auto spec = nlohmann::json::array();
    for (const auto& [r, s] : rc.spec) spec.push_back({r, s});
    j["spec"] = spec;
    j["nu"] = rc.nu;
    j["J"] = rc.rig;
    return j.dump();
}

RiggedConfiguration rc_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    RiggedConfiguration rc;
    rc.n = j.at("n").get<int>();
    if (rc.n < 2) throw std::invalid_argument("rank must be at least 2");
    for (const auto& e : j.at("spec")) rc.spec.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    rc.nu = j.at("nu").get<std::vector<Partition>>();
    rc.rig = j.at("J").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rc.nu.size()) != rc.n - 1 || rc.rig.size() != rc.nu.size())
        throw std::invalid_argument("rc: expected n-1 partitions with parallel riggings");
    for (size_t a = 0; a < rc.nu.size(); ++a)
        if (rc.nu[a].size() != rc.rig[a].size())
            throw std::invalid_argument("rc: riggings not parallel to parts");
    canonicalize(rc);
    return rc;
}

}  // namespace bbrc
