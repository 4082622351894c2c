#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "gna/expand.hpp"
#include "gna/oracle.hpp"
#include "gna/partition.hpp"
#include "gna/random_gen.hpp"

using namespace gna;

TEST_CASE("partition constructors") {
    StatePartition s = StatePartition::singletons(3);
    CHECK(s.num_blocks() == 3);
    CHECK(s.block_of[1] != s.block_of[2]);

    StatePartition f = StatePartition::finals_split(fixtures::fig4());
    CHECK(f.num_blocks() == 2);
    CHECK(f.block_of[2] == f.block_of[3]);
    CHECK(f.block_of[1] != f.block_of[2]);

    // ids are normalized by first occurrence
    StatePartition p = StatePartition::from_block_of({0, 7, 3, 7});
    CHECK(p.block_of[1] == 0);
    CHECK(p.block_of[2] == 1);
    CHECK(p.block_of[3] == 0);
    CHECK(p.blocks[0] == std::vector<State>{1, 3});
}

TEST_CASE("the diamond merges its middle states") {
    Gnfa g = fixtures::diamond();
    StatePartition p = refine_partition(g, StatePartition::finals_split(g));
    CHECK(p.num_blocks() == 3);
    CHECK(p.block_of[2] == p.block_of[3]);

    Gnfa m = minimize(g);
    CHECK(m.n == 3);
    CHECK(m.edges.size() == 3);  // a and b converge, then one c
    CHECK(language_equiv(m, g).equal);

    // but a diamond with distinct continuations must not merge
    Gnfa h = fixtures::make("abc", 5, 1, {4, 5},
                            {{1, 2, "a"}, {1, 3, "b"}, {2, 4, "c"}, {3, 5, "c"}, {4, 4, "a"}});
    CHECK(minimize(h).n == 5);
}

TEST_CASE("quotient validates its partition") {
    Gnfa g = fixtures::diamond();
    // mixing final and non-final states
    CHECK_THROWS_AS(quotient(g, StatePartition::from_block_of({0, 0, 0, 0})),
                    std::invalid_argument);
    // not right-invariant: merges 1 with 2 though their label sets differ
    CHECK_THROWS_AS(quotient(g, StatePartition::from_block_of({0, 0, 1, 2})),
                    std::invalid_argument);
    // singletons are always fine and give the automaton back
    Gnfa q = quotient(g, StatePartition::singletons(g.n));
    CHECK(gdfa_isomorphic(q, g));
}

TEST_CASE("minimize requires a usable input") {
    Gnfa empty = fixtures::make("a", 1, 1, {}, {});
    empty.finals.clear();
    CHECK_THROWS_AS(minimize(empty), std::domain_error);
    CHECK_THROWS_AS(minimize(fixtures::fig3()), std::domain_error);  // not a GDFA
}

TEST_CASE("minimize trims first") {
    Gnfa g = fixtures::make("ab", 4, 1, {2},
                            {{1, 2, "a"}, {2, 2, "ab"}, {3, 2, "b"}, {1, 4, "b"}});
    Gnfa m = minimize(g);
    CHECK(m.n == 2);
}

TEST_CASE("the language-equal pair stays distinct") {
    Gnfa l = fixtures::fig2_left(), r = fixtures::fig2_right();
    CHECK(gdfa_isomorphic(minimize(l), l));
    CHECK(gdfa_isomorphic(minimize(r), r));
    CHECK(language_equiv(l, r).equal);
    CHECK_FALSE(gdfa_isomorphic(l, r));
    // the prefix sets differ although the languages agree
    CHECK_FALSE(language_equiv(w_language_automaton(l), w_language_automaton(r)).equal);
}

TEST_CASE("isomorphism is structural, not positional") {
    Gnfa g = fixtures::fig4();
    // relabel the states 1,2,3 -> 1,3,2
    Gnfa h = fixtures::make("abc", 3, 1, {2, 3},
                            {{1, 3, "ab"}, {1, 3, "b"}, {1, 2, "ac"}, {1, 2, "c"},
                             {3, 3, "b"}, {2, 2, "bc"}});
    CHECK(gdfa_isomorphic(g, h));
    CHECK_FALSE(gdfa_isomorphic(g, fixtures::diamond()));
    CHECK_FALSE(gdfa_isomorphic(g, fixtures::fig5_left()));

    // same shape, different final sets
    Gnfa f = fixtures::fig4();
    f.finals = {2};
    CHECK_FALSE(gdfa_isomorphic(trim(f), g));
}

TEST_CASE("right-invariance counterexample on the overlapping automaton") {
    RightInvarianceReport rep = check_right_invariance(fixtures::fig3(), 4);
    CHECK_FALSE(rep.holds);
    CHECK(((rep.alpha == "a" && rep.beta == "b") || (rep.alpha == "b" && rep.beta == "a")));
    CHECK(rep.phi == "c");
}

TEST_CASE("right-invariance holds for deterministic and character automata") {
    CHECK(check_right_invariance(fixtures::fig4(), 8).holds);
    CHECK(check_right_invariance(fixtures::diamond(), 8).holds);
    CHECK(check_right_invariance(fixtures::fig2_left(), 8).holds);
    CHECK(check_right_invariance(fixtures::fig7_center(), 8).holds);  // character NFA
    CHECK(check_right_invariance(fixtures::aa(), 8).holds);
}

TEST_CASE("minimize preserves language and prefix set on random automata") {
    std::mt19937_64 rng(333111);
    GenParams p{10, 3, "abc"};
    for (int t = 0; t < 500; ++t) {
        Gnfa g = random_gdfa(rng, p);
        Gnfa m = minimize(g);
        CHECK(language_equiv(m, g).equal);
        CHECK(language_equiv(w_language_automaton(m), w_language_automaton(g)).equal);
        CHECK(m.n <= g.n);
    }
}

TEST_CASE("unrolling does not change the minimal automaton") {
    std::mt19937_64 rng(333222);
    GenParams p{10, 3, "ab"};
    int done = 0;
    for (int t = 0; t < 300 && done < 100; ++t) {
        Gnfa g = random_gdfa(rng, p);
        std::optional<Gnfa> u = unroll_duplicate_state(rng, g);
        if (!u) continue;
        ++done;
        CHECK(language_equiv(g, *u).equal);
        CHECK(language_equiv(w_language_automaton(g), w_language_automaton(*u)).equal);
        CHECK(gdfa_isomorphic(minimize(g), minimize(*u)));
    }
    CHECK(done == 100);
}
