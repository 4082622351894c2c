#pragma once

#include "gna/automata.hpp"

// Shared hand-built automata used across the test binaries.
namespace fixtures {

inline gna::Gnfa make(std::string_view sigma, int n, gna::State initial,
                      std::vector<gna::State> finals, std::vector<gna::Edge> edges) {
    gna::Gnfa g;
    g.alphabet = gna::Alphabet(sigma);
    g.n = n;
    g.initial = initial;
    g.finals = std::move(finals);
    g.edges = std::move(edges);
    g.check_well_formed();
    return g;
}

// L = {abc}; two spellings of the same word.
inline gna::Gnfa fig1() {
    return make("abc", 4, 1, {4},
                {{1, 2, "ab"}, {2, 4, "c"}, {1, 3, "a"}, {3, 4, "bc"}});
}

// A pair accepting the same language but with different prefix sets; neither
// is a W-preserving copy of the other.
inline gna::Gnfa fig2_left() {
    return make("ab", 3, 1, {3},
                {{1, 2, "aaa"}, {1, 2, "baa"}, {2, 2, "baa"}, {2, 2, "aba"}, {2, 3, "aa"}});
}

inline gna::Gnfa fig2_right() {
    return make("ab", 3, 1, {3},
                {{1, 2, "aa"}, {1, 2, "ba"}, {2, 2, "aba"}, {2, 2, "aab"}, {2, 3, "aaa"}});
}

// Right-extension closure fails for its prefix set: a,b share every
// arriving-string class yet extend differently.
inline gna::Gnfa fig3() {
    return make("abc", 4, 1, {3, 4},
                {{1, 2, "a"}, {1, 2, "b"}, {2, 3, "c"}, {1, 4, "ac"}});
}

// Wheeler GDFA whose transform is pinned down in golden tests
// (order u1, u2, u3).
inline gna::Gnfa fig4() {
    return make("abc", 3, 1, {2, 3},
                {{1, 2, "ab"}, {1, 2, "b"}, {1, 3, "ac"}, {1, 3, "c"},
                 {2, 2, "b"}, {3, 3, "bc"}});
}

// Wheeler with order u1, u2, u3, u4 (positions matter: u4 sits between).
inline gna::Gnfa fig5_left() {
    return make("abc", 4, 1, {2, 3},
                {{1, 2, "ba"}, {1, 4, "c"}, {4, 3, "a"}});
}

// Not Wheeler: u2 and u3 are order-incomparable.
inline gna::Gnfa fig5_right() {
    return make("abc", 3, 1, {2, 3},
                {{1, 2, "ac"}, {1, 2, "b"}, {1, 3, "c"}});
}

// Nondeterministic: containment holds for the identity order but the two
// monotonicity properties fail.
inline gna::Gnfa fig7_center() {
    return make("abc", 5, 1, {4, 5},
                {{1, 2, "a"}, {1, 2, "b"}, {1, 3, "a"}, {1, 3, "b"},
                 {2, 5, "c"}, {3, 4, "c"}});
}

// Deterministic: monotonicity holds for the identity order but containment
// fails (u3's arriving strings interleave with u4's).
inline gna::Gnfa fig7_right() {
    return make("abc", 4, 1, {3, 4},
                {{1, 2, "b"}, {2, 3, "c"}, {1, 4, "ac"}});
}

// Single state, initial and final, one string self-loop.
inline gna::Gnfa aa() {
    return make("a", 1, 1, {1}, {{1, 1, "aa"}});
}

// Minimizes from 4 states to 3 (u2, u3 merge).
inline gna::Gnfa diamond() {
    return make("abc", 4, 1, {4},
                {{1, 2, "a"}, {1, 3, "b"}, {2, 4, "c"}, {3, 4, "c"}});
}

}  // namespace fixtures
