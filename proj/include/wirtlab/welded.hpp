#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wirtlab/gauss_code.hpp"

namespace wirtlab {

enum class MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    WeldedSwap,
};

// A rewrite applied at explicit visit positions of the current code.
//   R1Add:      insert a kink at gap `a` (before visit a); `over_first` picks O,U
//               versus U,O; `sign` is the kink sign.
//   R1Remove:   delete the adjacent pair starting at position a.
//   R2Add:      insert O_x O_y at gap a and the two Under visits at gap b
//               (a != b); `reversed` puts them as U_y U_x; x gets `sign`, y
//               the opposite sign.
//   R2Remove:   delete the crossings whose visits start at positions a and b.
//   R3:         the three adjacent pairs starting at a, b, c (the pair holding
//               both Over visits of the moving strand first) are each reversed.
//   WeldedSwap: exchange the adjacent Over visits at a and a+1.
struct Move {
    MoveKind kind = MoveKind::R1Add;
    std::size_t a = 0, b = 0, c = 0;
    bool over_first = true;
    bool reversed = false;
    int sign = 1;
    friend bool operator==(const Move&, const Move&) = default;
};

std::string describe(const Move& m);

// Throws BadParameter when the move does not match the code.
GaussCode apply_move(const GaussCode& code, const Move& m);

// Every move applicable to the code, in a fixed deterministic order.
// Crossing-increasing moves are generated only when the result stays within
// `crossing_cap` crossings.
std::vector<Move> enumerate_moves(const GaussCode& code, std::size_t crossing_cap);

struct WeldedSearchResult {
    int min_omega = 1;
    std::vector<Move> moves;  // replays from the input code to a minimizer
    GaussCode best;
    std::size_t visited = 0;
};

// Breadth-first over codes reachable within `budget` moves; codes are merged
// up to rotation and crossing renumbering. Throws ResourceLimit past the
// visited-code cap.
WeldedSearchResult search_welded_min_omega(const GaussCode& code, int budget, std::size_t crossing_cap);

}  // namespace wirtlab
