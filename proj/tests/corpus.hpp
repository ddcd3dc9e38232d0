#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wirtlab/diagram.hpp"
#include "wirtlab/gauss_code.hpp"

namespace corpus {

inline wirtlab::GaussCode trefoil() { return wirtlab::parse_gauss_code("O1+,U2+,O3+,U1+,O2+,U3+"); }
inline wirtlab::GaussCode figure_eight() { return wirtlab::parse_gauss_code("O1-,U2-,O3+,U4+,O2-,U1-,O4+,U3+"); }
inline wirtlab::GaussCode virtual_trefoil() { return wirtlab::parse_gauss_code("O1+,U2+,U1+,O2+"); }

// Named codes covering classical, virtual and welded-style diagrams.
inline std::vector<std::pair<std::string, wirtlab::GaussCode>> codes() {
    using namespace wirtlab;
    return {
        {"trefoil", trefoil()},
        {"figure-eight", figure_eight()},
        {"virtual trefoil", virtual_trefoil()},
        {"T(2,5)", build_torus_2braid(3, 1)},
        {"T(2,3)#T(2,3)", build_torus_2braid(2, 2)},
        {"pretzel(3,3,2)", build_pretzel({3, 3, 2})},
        {"twist chain [3,2]", build_twist_chain({3, 2})},
        {"flank-switched trefoil", flank_switch(trefoil(), 1)},
        {"balanced flank trefoil", flank(trefoil(), 1, true)},
        {"handle-dragged trefoil", handle_drag(trefoil(), 0)},
    };
}

}  // namespace corpus
