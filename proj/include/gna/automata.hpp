#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gna {

using State = int;              // dense ids 1..n
using Label = std::string;      // possibly empty (epsilon)

/// Ordered character set. The comparison order is declaration order,
/// which for files parsed from disk is the order in the `alphabet` line.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view chars);

    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    int index(char c) const;    // throws std::invalid_argument on foreign characters
    char max_char() const;      // largest character in the declared order
    const std::string& chars() const { return chars_; }
    std::size_t size() const { return chars_.size(); }

    bool covers(std::string_view text) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.chars_ == b.chars_; }

private:
    std::string chars_;
    std::array<int, 256> index_{};  // -1 when absent
};

/// Valid characters for alphabets: printable ASCII, no whitespace,
/// and '#' is reserved (comments / membership sentinel).
bool is_valid_alphabet_char(char c);

/// Co-lexicographic comparison: compare reversed strings lexicographically.
/// A proper suffix precedes its superstring. Returns <0, 0, >0.
int colex_compare(const Alphabet& sigma, const Label& a, const Label& b);

struct ColexLess {
    const Alphabet* sigma;
    bool operator()(const Label& a, const Label& b) const { return colex_compare(*sigma, a, b) < 0; }
};

struct Edge {
    State src;
    State dst;
    Label label;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.src == b.src && a.dst == b.dst && a.label == b.label;
    }
};

/// Generalized NFA: string-labeled edges over a fixed alphabet.
/// GDFA / NFA / DFA are restrictions detected by classify().
struct Gnfa {
    int n = 0;
    std::vector<Edge> edges;
    State initial = 1;
    std::vector<State> finals;  // sorted, distinct
    Alphabet alphabet;

    bool is_final(State u) const;
    int max_label_len() const;

    /// Outgoing edge indices per state (1-based state -> indices into edges).
    std::vector<std::vector<int>> out_index() const;
    std::vector<std::vector<int>> in_index() const;

    /// True when the final set is empty (language is empty); produced by trim
    /// when no final state survives. Most downstream operations refuse these.
    bool language_empty() const { return finals.empty(); }

    void check_well_formed() const;  // throws std::invalid_argument
};

struct GdfaViolation {
    State state;
    Label a;
    Label b;          // empty when not a pair-violation
    std::string reason;
};

struct AutomatonClass {
    bool has_epsilon_edge = false;
    bool is_nfa = false;    // all labels length exactly 1
    bool is_gdfa = false;
    bool is_dfa = false;
    std::vector<GdfaViolation> violations;
};

AutomatonClass classify(const Gnfa& g);

/// Keep exactly the states reachable from the initial state and co-reachable
/// from some final state. State ids are re-packed densely preserving relative
/// order. If the initial state dies the result is the flagged empty-language
/// automaton (one state, no edges, no finals).
Gnfa trim(const Gnfa& g);

/// requires a GDFA flagged input for callers that need determinism
void require_gdfa(const Gnfa& g, const char* who);

// ---- text format ----------------------------------------------------------
//
//   alphabet abc
//   states 3
//   initial 1
//   final 2 3
//   edge 1 2 ab
//   ...
//
// '#' starts a comment only at line start; epsilon labels are written as `""`.

Gnfa parse_automaton(std::istream& in);          // throws std::runtime_error on format errors
Gnfa parse_automaton_file(const std::string& path);
std::string serialize_automaton(const Gnfa& g);  // canonical: edges sorted by (src, dst, colex label)
void write_automaton_file(const std::string& path, const Gnfa& g);

}  // namespace gna
