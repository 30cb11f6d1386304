#include "hyperdfa/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hyperdfa {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

State parse_state(std::string_view tok, std::size_t line) {
    State v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == kNoState)
        throw ParseError(line, "invalid state index '" + std::string(tok) + "'");
    return v;
}

// Returns the tokens after `key:` or throws.
std::vector<std::string_view> header(std::string_view text, std::string_view key, std::size_t line) {
    auto toks = split_ws(text);
    if (toks.empty() || toks.front().substr(0, key.size()) != key || toks.front().size() < key.size() + 1 ||
        toks.front()[key.size()] != ':')
        throw ParseError(line, "expected '" + std::string(key) + ":'");
    // Allow `key:value` without a space.
    std::string_view rest = toks.front().substr(key.size() + 1);
    toks.erase(toks.begin());
    if (!rest.empty()) toks.insert(toks.begin(), rest);
    return toks;
}

}  // namespace

ParsedAutomaton parse_automaton(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    int stage = 0;  // number of header lines consumed
    bool is_dfa = false;
    Alphabet alphabet;
    std::unordered_map<std::string, Symbol> symbol_index;
    State initial = 0;
    std::vector<State> finals;
    std::vector<Transition> transitions;
    std::vector<std::size_t> transition_lines;
    State max_state = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view text = raw;
        auto toks = split_ws(text);
        if (toks.empty() || toks.front().front() == '#') continue;

        switch (stage) {
            case 0:
                if (toks.size() != 1 || (toks[0] != "dfa" && toks[0] != "nfa"))
                    throw ParseError(line_no, "expected 'dfa' or 'nfa'");
                is_dfa = toks[0] == "dfa";
                break;
            case 1:
                for (auto tok : header(text, "alphabet", line_no)) {
                    std::string label(tok);
                    if (!symbol_index.emplace(label, static_cast<Symbol>(alphabet.size())).second)
                        throw ParseError(line_no, "duplicate symbol '" + label + "'");
                    alphabet.push_back(std::move(label));
                }
                if (alphabet.empty()) throw ParseError(line_no, "alphabet is empty");
                break;
            case 2: {
                auto toks2 = header(text, "initial", line_no);
                if (toks2.size() != 1) throw ParseError(line_no, "expected exactly one initial state");
                initial = parse_state(toks2[0], line_no);
                max_state = std::max(max_state, initial);
                break;
            }
            case 3:
                for (auto tok : header(text, "finals", line_no)) {
                    finals.push_back(parse_state(tok, line_no));
                    max_state = std::max(max_state, finals.back());
                }
                break;
            default: {
                if (toks.size() != 3) throw ParseError(line_no, "expected 'src symbol dst'");
                State src = parse_state(toks[0], line_no);
                auto it = symbol_index.find(std::string(toks[1]));
                if (it == symbol_index.end())
                    throw ParseError(line_no, "unknown symbol '" + std::string(toks[1]) + "'");
                State dst = parse_state(toks[2], line_no);
                max_state = std::max({max_state, src, dst});
                transitions.push_back(Transition{src, it->second, dst});
                transition_lines.push_back(line_no);
            }
        }
        if (stage < 4) ++stage;
    }
    if (stage < 4) throw ParseError(line_no + 1, "unexpected end of input in header");

    const std::size_t n = static_cast<std::size_t>(max_state) + 1;
    if (!is_dfa) {
        Nfa nfa{n, std::move(alphabet), initial, std::move(transitions), std::move(finals)};
        nfa.normalize();
        return nfa;
    }

    PartialDfa d;
    d.state_count = n;
    d.initial = initial;
    d.delta.assign(n * alphabet.size(), kNoState);
    d.finals.assign(n, false);
    for (State f : finals) d.finals[f] = true;
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto& t = transitions[i];
        State& slot = d.delta[t.src * alphabet.size() + t.symbol];
        if (slot != kNoState && slot != t.dst)
            throw ParseError(transition_lines[i], "nondeterministic transition in dfa");
        slot = t.dst;
    }
    d.alphabet = std::move(alphabet);
    return d;
}

ParsedAutomaton parse_automaton(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_automaton(in);
}

ParsedAutomaton load_automaton(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_automaton(in);
}

namespace {

void write_header(std::ostringstream& os, std::string_view kind, const Alphabet& alphabet, State initial,
                  const std::vector<State>& finals) {
    os << kind << "\nalphabet:";
    for (const auto& s : alphabet) os << ' ' << s;
    os << "\ninitial: " << initial << "\nfinals:";
    for (State f : finals) os << ' ' << f;
    os << '\n';
}

}  // namespace

std::string to_text(const Nfa& n) {
    Nfa sorted = n;
    sorted.normalize();
    std::ostringstream os;
    write_header(os, "nfa", sorted.alphabet, sorted.initial, sorted.finals);
    for (const auto& t : sorted.transitions) os << t.src << ' ' << sorted.alphabet[t.symbol] << ' ' << t.dst << '\n';
    return os.str();
}

std::string to_text(const Dfa& d) {
    std::vector<State> finals;
    for (State q = 0; q < d.state_count(); ++q)
        if (d.is_final(q)) finals.push_back(q);
    std::ostringstream os;
    write_header(os, "dfa", d.alphabet(), d.initial(), finals);
    for (State q = 0; q < d.state_count(); ++q)
        for (Symbol a = 0; a < d.alphabet_size(); ++a) os << q << ' ' << d.alphabet()[a] << ' ' << d.next(q, a) << '\n';
    return os.str();
}

}  // namespace hyperdfa
