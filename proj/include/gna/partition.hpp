#pragma once

#include "gna/automata.hpp"

namespace gna {

struct StatePartition {
    std::vector<int> block_of;               // index 1..n -> block id (0-based)
    std::vector<std::vector<State>> blocks;  // block id -> sorted member states

    static StatePartition singletons(int n);
    static StatePartition finals_split(const Gnfa& g);
    static StatePartition from_block_of(std::vector<int> block_of);  // normalizes block ids
    int num_blocks() const { return static_cast<int>(blocks.size()); }
};

/// Coarsest partition refining `initial` in which states of one block have
/// identical outgoing label sets and, per shared label, successors in one
/// block. Moore-style iteration to fixpoint. Requires a trimmed GDFA.
StatePartition refine_partition(const Gnfa& g, const StatePartition& initial);

/// Quotient automaton: one state per block, edges taken blockwise. The
/// partition must be right-invariant (an output of refine_partition) and must
/// not mix final with non-final states; violations raise std::invalid_argument.
Gnfa quotient(const Gnfa& g, const StatePartition& p);

/// The unique minimal automaton with the same language and the same W:
/// quotient(g, refine_partition(g, finals/non-finals split)).
Gnfa minimize(const Gnfa& g);

/// Isomorphism of trimmed GDFAs via canonical BFS renaming (outgoing edges
/// visited in co-lex label order).
bool gdfa_isomorphic(const Gnfa& a, const Gnfa& b);

struct RightInvarianceReport {
    bool holds = true;
    Label alpha, beta, phi;  // counterexample when !holds
};

/// Bounded right-invariance check of the state-reachability equivalence:
/// enumerate W(g) to max_len, group strings by I-set, and look for equivalent
/// alpha, beta and an extension phi with diverging behavior. Refutation is
/// exact; confirmation holds only up to the bound.
RightInvarianceReport check_right_invariance(const Gnfa& g, int max_len);

}  // namespace gna
