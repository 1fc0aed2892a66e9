#include "bbrc/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace bbrc {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

int CoordinateVector::capacity() const {
    return std::accumulate(mult.begin(), mult.end(), 0);
}

CoordinateVector vacuum(int n, int s) {
    CoordinateVector b;
    b.mult.assign(n, 0);
    b.mult[0] = s;
    return b;
}

std::string word(const CoordinateVector& b) {
    std::string w;
    for (int a = 0; a < b.rank(); ++a)
        w.append(b.mult[a], static_cast<char>('1' + a));
    return w;
}

CoordinateVector from_word(const std::string& w, int n) {
    CoordinateVector b;
    b.mult.assign(n, 0);
    for (char c : w) {
        int a = c - '1';
        if (a < 0 || a >= n) throw std::invalid_argument("letter out of range: " + w);
        ++b.mult[a];
    }
    if (word(b) != w) throw std::invalid_argument("word not weakly increasing: " + w);
    return b;
}

std::optional<CoordinateVector> crystal_e(int i, const CoordinateVector& b) {
    int n = b.rank();
    if (i < 0 || i >= n) throw std::invalid_argument("crystal index out of range");
    int hi = mod(i, n);       // position of letter i+1
    int lo = mod(i - 1, n);   // position of letter i
    if (b.mult[hi] == 0) return std::nullopt;
    CoordinateVector c = b;
    ++c.mult[lo];
    --c.mult[hi];
    return c;
}

std::optional<CoordinateVector> crystal_f(int i, const CoordinateVector& b) {
    int n = b.rank();
    if (i < 0 || i >= n) throw std::invalid_argument("crystal index out of range");
    int lo = mod(i - 1, n);
    int hi = mod(i, n);
    if (b.mult[lo] == 0) return std::nullopt;
    CoordinateVector c = b;
    --c.mult[lo];
    ++c.mult[hi];
    return c;
}

int epsilon(int i, const CoordinateVector& b) { return b.mult[mod(i, b.rank())]; }
int phi(int i, const CoordinateVector& b) { return b.mult[mod(i - 1, b.rank())]; }

Weight weight_of(const std::vector<int>& v) {
    Weight w{v};
    if (!w.rep.empty()) {
        int lo = *std::min_element(w.rep.begin(), w.rep.end());
        for (int& x : w.rep) x -= lo;
    }
    return w;
}

std::string word(const TensorState& t) {
    std::string out;
    for (size_t k = 0; k < t.factors.size(); ++k) {
        if (k) out += '|';
        out += word(t.factors[k]);
    }
    return out;
}

Weight weight_of(const TensorState& t) {
    std::vector<int> v(t.n, 0);
    for (const auto& f : t.factors)
        for (int a = 0; a < t.n; ++a) v[a] += f.mult[a];
    return weight_of(v);
}

namespace {

// Signature rule: per factor left-to-right write '+'^phi then '-'^eps and
// cancel adjacent "-+" pairs.  e_i acts at the leftmost surviving '-',
// f_i at the rightmost surviving '+'.
struct Signature {
    std::vector<int> plus;   // factor indices of surviving '+', in order
    std::vector<int> minus;  // surviving '-'
};

Signature signature(int i, const TensorState& t) {
    Signature s;
    for (int idx = 0; idx < static_cast<int>(t.factors.size()); ++idx) {
        const auto& b = t.factors[idx];
        for (int k = 0; k < phi(i, b); ++k) {
            if (!s.minus.empty())
                s.minus.pop_back();
            else
                s.plus.push_back(idx);
        }
        for (int k = 0; k < epsilon(i, b); ++k) s.minus.push_back(idx);
    }
    return s;
}

}  // namespace

std::optional<TensorState> tensor_step(CrystalOp op, int i, const TensorState& t) {
    if (t.factors.empty()) return std::nullopt;
    Signature s = signature(i, t);
    TensorState out = t;
    if (op == CrystalOp::E) {
        if (s.minus.empty()) return std::nullopt;
        int idx = s.minus.front();
        auto nb = crystal_e(i, t.factors[idx]);
        out.factors[idx] = *nb;
    } else {
        if (s.plus.empty()) return std::nullopt;
        int idx = s.plus.back();
        auto nb = crystal_f(i, t.factors[idx]);
        out.factors[idx] = *nb;
    }
    return out;
}

int tensor_epsilon(int i, const TensorState& t) {
    return static_cast<int>(signature(i, t).minus.size());
}

int tensor_phi(int i, const TensorState& t) {
    return static_cast<int>(signature(i, t).plus.size());
}

std::vector<CoordinateVector> all_elements(int n, int s) {
    std::vector<CoordinateVector> out;
    CoordinateVector cur;
    cur.mult.assign(n, 0);
    // lexicographic recursion over compositions of s into n parts
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur.mult[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur.mult[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, s);
    return out;
}

std::string to_json(const TensorState& t) {
    nlohmann::json j;
    j["n"] = t.n;
    auto arr = nlohmann::json::array();
    for (const auto& f : t.factors) arr.push_back(f.mult);
    j["factors"] = arr;
    return j.dump();
}

TensorState tensor_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TensorState t;
    t.n = j.at("n").get<int>();
    if (t.n < 2) throw std::invalid_argument("rank must be at least 2");
    for (const auto& f : j.at("factors")) {
        CoordinateVector b;
        b.mult = f.get<std::vector<int>>();
        if (b.rank() != t.n) throw std::invalid_argument("factor rank mismatch");
        for (int x : b.mult)
            if (x < 0) throw std::invalid_argument("negative multiplicity");
        t.factors.push_back(std::move(b));
    }
    return t;
}

}  // namespace bbrc
