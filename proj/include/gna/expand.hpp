#pragma once

#include <map>
#include <optional>
#include <set>

#include "gna/automata.hpp"

namespace gna {

struct ExpandResult {
    Gnfa nfa;               // labels of length <= 1; original states keep their ids 1..n
    int original_states;    // = input n; expansion states are original_states+1 .. nfa.n
};

/// Replace every string edge by a character path. For a GDFA the outgoing
/// labels of each state are shared in a trie, so the result is a DFA and
/// every original state keeps its arriving-string set I_u. For other inputs
/// each edge expands into its own chain; epsilon edges pass through.
ExpandResult expand(const Gnfa& g);

/// I_alpha: states reached from the initial state by concatenations of full
/// edge labels spelling alpha (epsilon edges traversed freely).
std::set<State> reachable_states(const Gnfa& g, const Label& alpha);

/// Character-labeled NFA recognizing W(g): expand(g) with the original states
/// as the final set.
Gnfa w_language_automaton(const Gnfa& g);

/// Prefix-free kernel: members of the input none of whose strict prefixes are
/// in the input.
std::set<Label> kernel(const std::set<Label>& labels);

/// K(T_alpha) on a trimmed GDFA: the outgoing edge labels of the unique state
/// I_alpha. Throws std::domain_error when alpha is not in W(g).
std::set<Label> kernel_at(const Gnfa& g, const Label& alpha);

/// Exact membership by expansion + character-frontier simulation.
bool language_member_naive(const Gnfa& g, const Label& alpha);

struct EquivResult {
    bool equal;
    Label witness;  // a shortest distinguishing string when !equal
};

/// Exact language equality via subset construction over the expansions and a
/// breadth-first product difference search.
EquivResult language_equiv(const Gnfa& a, const Gnfa& b);

}  // namespace gna
