#pragma once

#include <string>
#include <vector>

#include "bbrc/crystal.hpp"

namespace bbrc {

// Semi-infinite box-ball state: finitely many explicit factors (leftmost
// first) with u_{s w1} vacuum factors implied on the left.  Factor positions
// count from the right (rightmost = 1) and are stable under evolution; the
// explicit window only grows on the left.
struct BoxBallState {
    TensorState support;
    int vacuum_capacity = 1;

    bool operator==(const BoxBallState&) const = default;
};

BoxBallState state_from_word(const std::string& w, int n);  // size-1 bins

int ball_count(const TensorState& t);
int ball_count(const BoxBallState& b);

// One step of T_1^infty via a capacity-k carrier swept right-to-left with
// tropical_R; vacuum factors are materialized on the left until the carrier
// returns to u_{k w1}.  Default k = ball_count + 1 (minimal safe value).
BoxBallState time_evolution(const BoxBallState& b, int carrier_capacity = 0);

// Maximal blocks of adjacent ball-carrying factors.  A block is a soliton
// when its reading word is weakly increasing; otherwise it is interacting.
struct Soliton {
    int left_factor = 0;   // position of the block's leftmost factor
    int right_factor = 0;  // position of the rightmost (left > right)
    int amplitude = 0;
    bool interacting = false;
};

std::vector<Soliton> solitons(const BoxBallState& b);

// One character per size-1 factor over positions [window..1] left-to-right;
// multi-capacity factors rendered as bracketed words.
std::string render(const BoxBallState& b, int window);

}  // namespace bbrc
