#include "fixtures.hpp"

#include <stdexcept>
#include <variant>

#include "hyperdfa/text_format.hpp"

namespace hyperdfa::testing {

std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(HYPERDFA_DATA_DIR) / name; }

Dfa load_dfa_verbatim(const std::string& name) {
    auto parsed = load_automaton(data_path(name));
    const auto* p = std::get_if<PartialDfa>(&parsed);
    if (!p) throw std::runtime_error(name + " is not a dfa file");
    return Dfa(p->alphabet, p->initial, p->delta, p->finals);
}

Dfa m_ex() { return load_dfa_verbatim("m_ex.aut"); }

State m_ex_state(char name) { return name == '0' ? 0 : static_cast<State>(name - 'A' + 1); }

Dfa unary_example() { return Dfa({"a"}, 0, {1, 2, 2}, {true, false, true}); }

Dfa even_as() { return Dfa({"a"}, 0, {1, 0}, {true, false}); }

}  // namespace hyperdfa::testing
