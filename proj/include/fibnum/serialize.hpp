#pragma once

#include <string>
#include <string_view>

#include "fibnum/automaton.hpp"

namespace fibnum {

enum class Format { native, dot };

/// Line-oriented text form:
///
///     tracks: {0,1} {0,1,2}
///     states: 7
///     initial: 0
///     accepting: 0 2 5
///     dead: 6
///     0 [1,0] -> 3
///
/// When a non-accepting sink exists it is named on the `dead:` line and
/// transitions into it are omitted.
std::string to_native(const Automaton& a);

/// Inverse of to_native. Omitted transitions go to the declared dead state,
/// or to a fresh sink appended after the declared states when none is
/// declared. Throws ParseError.
Automaton from_native(std::string_view text);

/// Graphviz digraph. The dead state and edges into it are not drawn.
std::string to_dot(const Automaton& a, std::string_view name = "automaton");

std::string export_automaton(const Automaton& a, Format format, std::string_view name = "automaton");

}  // namespace fibnum
