#pragma once

#include <filesystem>
#include <string>

#include "hyperdfa/automaton.hpp"

namespace hyperdfa::testing {

std::filesystem::path data_path(const std::string& name);

/// Automaton file loaded as a total DFA with the file's own state numbering.
Dfa load_dfa_verbatim(const std::string& name);

/// The 14-state two-letter example: states 0 A B ... M numbered 0..13.
Dfa m_ex();
State m_ex_state(char name);

/// Unary DFA 0 -> 1 -> 2 -> 2 with finals {0, 2}.
Dfa unary_example();

/// Two-state DFA accepting an even number of a's.
Dfa even_as();

}  // namespace hyperdfa::testing
