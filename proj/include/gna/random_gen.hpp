#pragma once

#include <optional>
#include <random>

#include "gna/automata.hpp"

namespace gna {

struct GenParams {
    int max_states = 10;
    int max_label_len = 4;
    std::string alphabet = "abcd";
};

/// Random Wheeler DFA constructed to satisfy the local order properties
/// (monotone incoming characters, strictly increasing same-character sources)
/// with the identity order, then trimmed; re-verified before returning.
Gnfa random_wheeler_dfa(std::mt19937_64& rng, const GenParams& p);

/// Random Wheeler GDFA: a random Wheeler DFA whose unary non-branching states
/// are partially contracted into string edges. Kept states keep their
/// arriving-string sets, so Wheelerness is preserved; states are renumbered so
/// the identity is the Wheeler order.
Gnfa random_wheeler_gdfa(std::mt19937_64& rng, const GenParams& p);

/// Random trimmed GDFA with nonempty language (no Wheelerness guarantee).
Gnfa random_gdfa(std::mt19937_64& rng, const GenParams& p);

/// Random trimmed character-labeled NFA with nonempty language.
Gnfa random_nfa(std::mt19937_64& rng, const GenParams& p);

/// Rejection sampling as exposed by the CLI: random trimmed GDFAs are drawn
/// until one passes the Wheeler test; nullopt after max_attempts.
std::optional<Gnfa> rejection_sample_wheeler_gdfa(std::mt19937_64& rng, const GenParams& p,
                                                  int max_attempts);

/// Language- and W-preserving unrolling: duplicate a non-initial state with at
/// least two incoming edges, splitting its incoming edges between the copies
/// and duplicating its outgoing edges. Returns nullopt when no state
/// qualifies.
std::optional<Gnfa> unroll_duplicate_state(std::mt19937_64& rng, const Gnfa& g);

/// Random pattern mixing walks through the automaton with uniform strings.
Label random_pattern(std::mt19937_64& rng, const Gnfa& g, int max_len);

}  // namespace gna
