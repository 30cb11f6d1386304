#pragma once

// Line-based automaton text format:
//
//   dfa                      (or: nfa)
//   alphabet: a b
//   initial: 0
//   finals: 1 3              (list may be empty)
//   0 a 1                    (one `src symbol dst` per remaining line)
//
// Lines starting with `#` and blank lines are ignored. The state count is one
// more than the largest state index mentioned. Serialization sorts
// transitions by (src, symbol index, dst).

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "hyperdfa/automaton.hpp"

namespace hyperdfa {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

using ParsedAutomaton = std::variant<Nfa, PartialDfa>;

ParsedAutomaton parse_automaton(std::istream& in);
ParsedAutomaton parse_automaton(std::string_view text);
/// Throws std::runtime_error if the file cannot be opened.
ParsedAutomaton load_automaton(const std::filesystem::path& path);

std::string to_text(const Nfa& n);
std::string to_text(const Dfa& d);

}  // namespace hyperdfa
