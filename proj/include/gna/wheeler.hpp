#pragma once

#include "gna/automata.hpp"
#include "gna/expand.hpp"

namespace gna {

struct StateOrder {
    std::vector<State> sequence;  // position 1 = sequence[0] = least state

    int n() const { return static_cast<int>(sequence.size()); }
    /// positions[u] = 1-based rank of state u
    std::vector<int> positions() const;
    static StateOrder identity(int n);
};

/// Strict partial order as a pair matrix; pairs (u,v) with u strictly below v.
struct PartialOrderRelation {
    int n = 0;
    std::vector<char> less_;  // (u-1)*n + (v-1)

    explicit PartialOrderRelation(int n_) : n(n_), less_(static_cast<std::size_t>(n_) * n_, 0) {}
    bool strictly_less(State u, State v) const { return less_[idx(u, v)] != 0; }
    void set(State u, State v, bool b) { less_[idx(u, v)] = b ? 1 : 0; }
    /// throws std::logic_error if not irreflexive/antisymmetric/transitive
    void validate() const;

private:
    std::size_t idx(State u, State v) const {
        return static_cast<std::size_t>(u - 1) * n + (v - 1);
    }
};

/// The co-lex partial order on a trimmed character-labeled DFA, computed by a
/// greatest fixpoint: start from all ordered pairs and delete pairs that the
/// arriving-string comparison rules out, propagating along shared incoming
/// characters. Epsilon arriving at the initial state acts as a virtual minimum
/// incoming symbol.
PartialOrderRelation dfa_colex_order(const Gnfa& d);

struct WheelerResult {
    bool wheeler = false;
    StateOrder order;                       // when wheeler
    std::pair<State, State> witness{0, 0};  // an incomparable pair otherwise
};

/// Wheelerness of a trimmed GDFA: expand to the character DFA, compute the
/// co-lex partial order there, restrict to the original states, and demand
/// totality.
WheelerResult gdfa_wheeler_order(const Gnfa& g);

enum class CheckVerdict { exact_pass, bounded_pass, fail };

struct OrderCheckReport {
    bool s_first = false;
    CheckVerdict p1 = CheckVerdict::fail;  // order contained in the co-lex preorder
    bool p2 = false;                       // arriving labels monotone (suffix exemption)
    bool p3 = false;                       // equal labels: sources weakly monotone
    std::string detail;                    // human-readable witness on failure

    bool all_hold() const { return s_first && p1 != CheckVerdict::fail && p2 && p3; }
    bool exact() const { return s_first && p1 == CheckVerdict::exact_pass && p2 && p3; }
};

/// Verify a proposed Wheeler order on an epsilon-free GNFA. The two local edge
/// properties and initial-first are exact; the containment property is exact
/// for GDFAs (via gdfa_wheeler_order) and bounded by I-set enumeration
/// otherwise.
OrderCheckReport check_wheeler_order(const Gnfa& g, const StateOrder& order, int bound);

/// Restriction of a verified Wheeler order on expand(g) to the original
/// states. Throws std::invalid_argument if the order does not cover the
/// expansion's states.
StateOrder induced_gnfa_order(const Gnfa& g, const StateOrder& nfa_order);

}  // namespace gna
