#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "gna/expand.hpp"
#include "gna/random_gen.hpp"
#include "gna/wheeler.hpp"

using namespace gna;

namespace {
void check_usable(const Gnfa& g, const GenParams& p) {
    g.check_well_formed();
    CHECK(g.n >= 1);
    CHECK(g.n <= p.max_states);
    CHECK_FALSE(g.language_empty());
    // already trimmed: trimming changes nothing
    CHECK(serialize_automaton(trim(g)) == serialize_automaton(g));
    for (const Edge& e : g.edges) {
        CHECK_FALSE(e.label.empty());
        CHECK(e.label.size() <= static_cast<std::size_t>(p.max_label_len));
    }
}
}  // namespace

TEST_CASE("character generators produce ordered automata") {
    std::mt19937_64 rng(1001);
    GenParams p{15, 1, "abc"};
    for (int t = 0; t < 100; ++t) {
        Gnfa g = random_wheeler_dfa(rng, p);
        check_usable(g, p);
        CHECK(classify(g).is_dfa);
        CHECK(check_wheeler_order(g, StateOrder::identity(g.n), 8).exact());
    }
}

TEST_CASE("string-labeled generator contracts within the length budget") {
    std::mt19937_64 rng(1002);
    GenParams p{20, 3, "abc"};
    bool saw_long_label = false;
    for (int t = 0; t < 100; ++t) {
        Gnfa g = random_wheeler_gdfa(rng, p);
        check_usable(g, p);
        CHECK(classify(g).is_gdfa);
        CHECK(check_wheeler_order(g, StateOrder::identity(g.n), 8).exact());
        if (g.max_label_len() > 1) saw_long_label = true;
    }
    CHECK(saw_long_label);  // contraction actually happens
}

TEST_CASE("unconstrained generators stay within their class") {
    std::mt19937_64 rng(1003);
    GenParams p{12, 3, "ab"};
    for (int t = 0; t < 100; ++t) {
        Gnfa g = random_gdfa(rng, p);
        check_usable(g, p);
        CHECK(classify(g).is_gdfa);
    }
    GenParams q{10, 1, "abc"};
    for (int t = 0; t < 100; ++t) {
        Gnfa g = random_nfa(rng, q);
        check_usable(g, q);
        for (const Edge& e : g.edges) CHECK(e.label.size() == 1);
    }
}

TEST_CASE("generation is reproducible from the seed") {
    std::mt19937_64 a(77), b(77);
    GenParams p{14, 3, "abc"};
    for (int t = 0; t < 20; ++t)
        CHECK(serialize_automaton(random_wheeler_gdfa(a, p)) ==
              serialize_automaton(random_wheeler_gdfa(b, p)));
}

TEST_CASE("rejection sampling returns only ordered automata") {
    std::mt19937_64 rng(1004);
    GenParams p{6, 2, "ab"};
    int hits = 0;
    for (int t = 0; t < 20; ++t) {
        std::optional<Gnfa> g = rejection_sample_wheeler_gdfa(rng, p, 200);
        if (!g) continue;
        ++hits;
        check_usable(*g, p);
        CHECK(gdfa_wheeler_order(*g).wheeler);
    }
    CHECK(hits > 0);
    CHECK(rejection_sample_wheeler_gdfa(rng, p, 0) == std::nullopt);
}

TEST_CASE("unrolling duplicates one state") {
    std::mt19937_64 rng(1005);
    Gnfa g = fixtures::fig4();
    std::optional<Gnfa> u = unroll_duplicate_state(rng, g);
    REQUIRE(u.has_value());
    CHECK(u->n == g.n + 1);
    CHECK(language_equiv(*u, g).equal);
    CHECK(language_equiv(w_language_automaton(*u), w_language_automaton(g)).equal);

    // no non-initial state with two incoming edges: nothing to duplicate
    Gnfa chain = fixtures::make("a", 2, 1, {2}, {{1, 2, "a"}});
    CHECK(unroll_duplicate_state(rng, chain) == std::nullopt);
}

TEST_CASE("patterns stay within the alphabet and length bound") {
    std::mt19937_64 rng(1006);
    GenParams p{10, 3, "abc"};
    Gnfa g = random_wheeler_gdfa(rng, p);
    bool saw_empty = false, saw_nonempty = false;
    for (int t = 0; t < 500; ++t) {
        Label alpha = random_pattern(rng, g, 6);
        CHECK(alpha.size() <= 6);
        CHECK(g.alphabet.covers(alpha));
        (alpha.empty() ? saw_empty : saw_nonempty) = true;
    }
    CHECK(saw_empty);
    CHECK(saw_nonempty);
}

TEST_CASE("single-state budget still works") {
    std::mt19937_64 rng(1007);
    GenParams p{1, 2, "ab"};
    for (int t = 0; t < 10; ++t) {
        Gnfa g = random_wheeler_gdfa(rng, p);
        CHECK(g.n == 1);
        CHECK_FALSE(g.language_empty());
    }
}
