#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bbrc {

// An element of B^{1,s} in coordinate form: mult[a-1] = number of letters a,
// weakly increasing word 1^{x1} 2^{x2} ... n^{xn}.
struct CoordinateVector {
    std::vector<int> mult;

    int rank() const { return static_cast<int>(mult.size()); }
    int capacity() const;

    bool operator==(const CoordinateVector&) const = default;
};

CoordinateVector vacuum(int n, int s);  // u_{s w1} = (s,0,...,0)

// word <-> coordinates ("1123" etc.); word_of_letters uses letters 1..n
std::string word(const CoordinateVector& b);
CoordinateVector from_word(const std::string& w, int n);

// Crystal operators, i in {0,...,n-1}, indices mod n.
// e_i bumps x_i up and x_{i+1} down; f_i the reverse. Null when blocked.
std::optional<CoordinateVector> crystal_e(int i, const CoordinateVector& b);
std::optional<CoordinateVector> crystal_f(int i, const CoordinateVector& b);

int epsilon(int i, const CoordinateVector& b);  // = x_{i+1}
int phi(int i, const CoordinateVector& b);      // = x_i

// Weight class in Z^n modulo the all-ones vector; canonical representative
// subtracts the minimum entry.
struct Weight {
    std::vector<int> rep;
    bool operator==(const Weight&) const = default;
};

Weight weight_of(const std::vector<int>& v);

// Ordered tensor product b_m (x) ... (x) b_1; factors stored leftmost first
// (factors[0] = b_m). All factors share the rank n.
struct TensorState {
    int n = 0;
    std::vector<CoordinateVector> factors;

    bool operator==(const TensorState&) const = default;
};

std::string word(const TensorState& t);        // factors joined by '|'
Weight weight_of(const TensorState& t);

enum class CrystalOp { E, F };

// Tensor crystal structure (opposite of Kashiwara's convention): on two
// factors, e_i acts left iff eps_i(left) > phi_i(right), f_i acts left iff
// eps_i(left) >= phi_i(right); extended to long tensors by the signature rule.
std::optional<TensorState> tensor_step(CrystalOp op, int i, const TensorState& t);

int tensor_epsilon(int i, const TensorState& t);
int tensor_phi(int i, const TensorState& t);

// All elements of B^{1,s} for small enumerations.
std::vector<CoordinateVector> all_elements(int n, int s);

// JSON round-trip: {"n": int, "factors": [[x1,...,xn], ...]} left-to-right.
std::string to_json(const TensorState& t);
TensorState tensor_from_json(const std::string& text);

}  // namespace bbrc
