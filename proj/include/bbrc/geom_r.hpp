#pragma once

#include <map>
#include <utility>

#include "bbrc/crystal.hpp"

namespace bbrc {

// Tropicalization of kappa_a(x1, x2): min over j in {a,...,a+n-1} of
// sum_{k=a+1..j} x1^(k) + sum_{k=j+1..a+n-1} x2^(k), upper indices mod n.
// a is 1-based; vectors are raw coordinate vectors in formula position
// (x1 = right factor twisted, x2 = left factor -- see tropical_R).
long long tropical_kappa(int a, const std::vector<int>& x1, const std::vector<int>& x2);

// Tropicalized birational R on a pair of factors (left, right) of equal rank.
// Returns (new_left, new_right) in B^{1,s'} (x) B^{1,s}; capacities swap.
// A crystal isomorphism: agrees with oracle_R everywhere tested.
std::pair<CoordinateVector, CoordinateVector> tropical_R(const CoordinateVector& left,
                                                         const CoordinateVector& right);

// Combinatorial R by its defining property: BFS the crystal graph of
// B^{1,s} (x) B^{1,s'} from the highest weight pair, mirroring operator words
// on the target side.  Test oracle; exponential in crystal size.
using PairKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<PairKey, PairKey> oracle_R_table(int n, int s, int sp);

std::pair<CoordinateVector, CoordinateVector> oracle_R(const CoordinateVector& left,
                                                       const CoordinateVector& right);

// R1 R2 R1 == R2 R1 R2 on the triple (tropical_R at positions 1 and 2).
bool yang_baxter_check(const CoordinateVector& a, const CoordinateVector& b,
                       const CoordinateVector& c);

}  // namespace bbrc
