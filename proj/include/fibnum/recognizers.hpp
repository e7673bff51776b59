#pragma once

#include "fibnum/automaton.hpp"

namespace fibnum {

// Single-track validity languages, both padding-invariant.
Automaton build_zeckval();
Automaton build_cgval();

/// {0,1,2} words whose two most significant stored digits are 0 (length >= 2).
Automaton build_cg0();
/// Weaker padding: length >= 1 and the most significant stored digit is 0.
Automaton build_cg1();

/// Digitwise equality of two {0,1,2} tracks.
Automaton build_cgeq();

/// Three tracks {0,1,2} x {0,1} x {0,1}; every position is one of
/// [0,0,0], [1,0,1], [2,1,1].
Automaton build_cgsplit();

}  // namespace fibnum
