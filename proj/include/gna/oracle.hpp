#pragma once

#include <map>
#include <set>

#include "gna/automata.hpp"

namespace gna {

// Brute-force reference implementations for property tests. These share only
// the basic automaton types with the rest of the library; no succinct
// structures, no shared traversal code.
namespace oracle {

/// Exact SMLG: all original states reached by some full-label path from the
/// initial state whose spelled string is suffixed by alpha. Computed by
/// character-frontier simulation over a locally built chain expansion,
/// starting from every state.
std::set<State> naive_smlg(const Gnfa& g, const Label& alpha);

/// Exact membership by direct frontier simulation.
bool naive_member(const Gnfa& g, const Label& alpha);

/// Exact G-below set for a Wheeler automaton with the given state sequence
/// (position 1 first): states all of whose arriving strings are strictly
/// co-lex below alpha. Computed by the prefix recursion over incoming-label
/// maxima, with explicit sets.
std::set<State> naive_g_prec(const Gnfa& g, const std::vector<State>& order, const Label& alpha);

/// All arriving strings of each state up to max_len, by breadth-first
/// enumeration of full-edge-label decompositions.
std::map<State, std::set<Label>> enumerate_I(const Gnfa& g, int max_len);

/// Textbook Moore minimization of a trimmed DFA (completion with a sink,
/// iterated signature splitting, sink removal).
Gnfa moore_minimize_dfa(const Gnfa& d);

/// Classical forward search on a Wheeler DFA: start from all states, advance
/// one character at a time through explicit edge scans, keeping the interval
/// of reached positions. Returns positions (1-based in the order) as a set.
std::set<int> wheeler_dfa_forward_search(const Gnfa& d, const std::vector<State>& order,
                                         const Label& alpha);

/// Plain DFA run from the initial state.
bool dfa_run_member(const Gnfa& d, const Label& alpha);

}  // namespace oracle
}  // namespace gna
