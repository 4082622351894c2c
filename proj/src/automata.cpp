#include "gna/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gna {

bool is_valid_alphabet_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f && c != '#';
}

Alphabet::Alphabet(std::string_view chars) {
    index_.fill(-1);
    for (char c : chars) {
        if (!is_valid_alphabet_char(c))
            throw std::invalid_argument("alphabet: invalid character");
        unsigned char u = static_cast<unsigned char>(c);
        if (index_[u] >= 0)
            throw std::invalid_argument("alphabet: duplicate character");
        index_[u] = static_cast<int>(chars_.size());
        chars_.push_back(c);
    }
}

int Alphabet::index(char c) const {
    int i = index_[static_cast<unsigned char>(c)];
    if (i < 0)
        throw std::invalid_argument(std::string("character outside alphabet: '") + c + "'");
    return i;
}

char Alphabet::max_char() const {
    if (chars_.empty())
        throw std::invalid_argument("empty alphabet has no maximum character");
    return chars_.back();  // comparison order is declaration order
}

bool Alphabet::covers(std::string_view text) const {
    for (char c : text)
        if (!contains(c)) return false;
    return true;
}

int colex_compare(const Alphabet& sigma, const Label& a, const Label& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        int da = sigma.index(*ia), db = sigma.index(*ib);
        if (da != db) return da < db ? -1 : 1;
    }
    if (ia == a.rend() && ib == b.rend()) return 0;
    return ia == a.rend() ? -1 : 1;  // proper suffix precedes
}

bool Gnfa::is_final(State u) const {
    return std::binary_search(finals.begin(), finals.end(), u);
}

int Gnfa::max_label_len() const {
    std::size_t r = 0;
    for (const Edge& e : edges) r = std::max(r, e.label.size());
    return static_cast<int>(r);
}

std::vector<std::vector<int>> Gnfa::out_index() const {
    std::vector<std::vector<int>> idx(n + 1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) idx[edges[i].src].push_back(i);
    return idx;
}

std::vector<std::vector<int>> Gnfa::in_index() const {
    std::vector<std::vector<int>> idx(n + 1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) idx[edges[i].dst].push_back(i);
    return idx;
}

void Gnfa::check_well_formed() const {
    if (n < 1) throw std::invalid_argument("automaton must have at least one state");
    if (initial < 1 || initial > n) throw std::invalid_argument("initial state out of range");
    for (State f : finals)
        if (f < 1 || f > n) throw std::invalid_argument("final state out of range");
    if (!std::is_sorted(finals.begin(), finals.end()) ||
        std::adjacent_find(finals.begin(), finals.end()) != finals.end())
        throw std::invalid_argument("final set must be sorted and distinct");
    std::set<std::tuple<State, State, Label>> seen;
    for (const Edge& e : edges) {
        if (e.src < 1 || e.src > n || e.dst < 1 || e.dst > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!alphabet.covers(e.label))
            throw std::invalid_argument("edge label uses character outside alphabet");
        if (!seen.insert({e.src, e.dst, e.label}).second)
            throw std::invalid_argument("duplicate edge triple");
    }
}

AutomatonClass classify(const Gnfa& g) {
    AutomatonClass c;
    bool all_len1 = true;
    bool per_state_ok = true;
    auto out = g.out_index();
    for (State u = 1; u <= g.n; ++u) {
        // sort this state's labels co-lexicographically; prefix conflicts and
        // duplicates are then adjacent-checkable in one pass over all pairs
        std::vector<const Label*> labels;
        for (int ei : out[u]) labels.push_back(&g.edges[ei].label);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i]->empty()) {
                c.has_epsilon_edge = true;
                per_state_ok = false;
                c.violations.push_back({u, *labels[i], "", "epsilon-labeled edge"});
            }
            if (labels[i]->size() != 1) all_len1 = false;
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                const Label &a = *labels[i], &b = *labels[j];
                if (a == b) {
                    // distinct targets with one label: nondeterminism
                    per_state_ok = false;
                    c.violations.push_back({u, a, b, "duplicate label on distinct edges"});
                } else if (a.size() < b.size() && b.compare(0, a.size(), a) == 0) {
                    per_state_ok = false;
                    c.violations.push_back({u, a, b, "label is a prefix of a sibling label"});
                } else if (b.size() < a.size() && a.compare(0, b.size(), b) == 0) {
                    per_state_ok = false;
                    c.violations.push_back({u, b, a, "label is a prefix of a sibling label"});
                }
            }
        }
    }
    c.is_nfa = all_len1;
    c.is_gdfa = per_state_ok && !c.has_epsilon_edge;
    c.is_dfa = c.is_gdfa && c.is_nfa;
    return c;
}

void require_gdfa(const Gnfa& g, const char* who) {
    if (!classify(g).is_gdfa)
        throw std::domain_error(std::string(who) + ": input is not a GDFA");
}

Gnfa trim(const Gnfa& g) {
    g.check_well_formed();
    auto out = g.out_index();
    auto in = g.in_index();
    std::vector<char> reach(g.n + 1, 0), coreach(g.n + 1, 0);
    std::deque<State> q{g.initial};
    reach[g.initial] = 1;
    while (!q.empty()) {
        State u = q.front();
        q.pop_front();
        for (int ei : out[u])
            if (!reach[g.edges[ei].dst]) {
                reach[g.edges[ei].dst] = 1;
                q.push_back(g.edges[ei].dst);
            }
    }
    for (State f : g.finals)
        if (!coreach[f]) {
            coreach[f] = 1;
            q.push_back(f);
        }
    while (!q.empty()) {
        State u = q.front();
        q.pop_front();
        for (int ei : in[u])
            if (!coreach[g.edges[ei].src]) {
                coreach[g.edges[ei].src] = 1;
                q.push_back(g.edges[ei].src);
            }
    }
    std::vector<State> remap(g.n + 1, 0);
    int kept = 0;
    for (State u = 1; u <= g.n; ++u)
        if (reach[u] && coreach[u]) remap[u] = ++kept;
    Gnfa out_g;
    out_g.alphabet = g.alphabet;
    if (!remap[g.initial]) {
        // language is empty: flagged one-state, edge-free representation
        out_g.n = 1;
        out_g.initial = 1;
        return out_g;
    }
    out_g.n = kept;
    out_g.initial = remap[g.initial];
    for (const Edge& e : g.edges)
        if (remap[e.src] && remap[e.dst]) out_g.edges.push_back({remap[e.src], remap[e.dst], e.label});
    for (State f : g.finals)
        if (remap[f]) out_g.finals.push_back(remap[f]);
    std::sort(out_g.finals.begin(), out_g.finals.end());
    return out_g;
}

// ---- text format ----------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void format_error(int lineno, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Gnfa parse_automaton(std::istream& in) {
    Gnfa g;
    bool saw_alphabet = false, saw_states = false, saw_initial = false, saw_final = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "alphabet") {
            if (saw_alphabet) format_error(lineno, "duplicate alphabet line");
            if (toks.size() != 2) format_error(lineno, "alphabet expects one token");
            try {
                g.alphabet = Alphabet(toks[1]);
            } catch (const std::exception& e) {
                format_error(lineno, e.what());
            }
            saw_alphabet = true;
        } else if (kw == "states") {
            if (saw_states || toks.size() != 2) format_error(lineno, "bad states line");
            try {
                g.n = std::stoi(toks[1]);
            } catch (...) {
                format_error(lineno, "states expects an integer");
            }
            saw_states = true;
        } else if (kw == "initial") {
            if (saw_initial || toks.size() != 2) format_error(lineno, "bad initial line");
            try {
                g.initial = std::stoi(toks[1]);
            } catch (...) {
                format_error(lineno, "initial expects an integer");
            }
            saw_initial = true;
        } else if (kw == "final") {
            if (saw_final) format_error(lineno, "duplicate final line");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                try {
                    g.finals.push_back(std::stoi(toks[i]));
                } catch (...) {
                    format_error(lineno, "final expects integers");
                }
            }
            saw_final = true;
        } else if (kw == "edge") {
            if (toks.size() != 4) format_error(lineno, "edge expects: edge <src> <dst> <label>");
            Edge e;
            try {
                e.src = std::stoi(toks[1]);
                e.dst = std::stoi(toks[2]);
            } catch (...) {
                format_error(lineno, "edge endpoints must be integers");
            }
            e.label = toks[3] == "\"\"" ? Label{} : toks[3];
            g.edges.push_back(std::move(e));
        } else {
            format_error(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!saw_alphabet || !saw_states || !saw_initial)
        throw std::runtime_error("missing alphabet/states/initial line");
    std::sort(g.finals.begin(), g.finals.end());
    g.finals.erase(std::unique(g.finals.begin(), g.finals.end()), g.finals.end());
    try {
        g.check_well_formed();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("invalid automaton: ") + e.what());
    }
    return g;
}

Gnfa parse_automaton_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_automaton(f);
}

std::string serialize_automaton(const Gnfa& g) {
    std::vector<Edge> es = g.edges;
    std::sort(es.begin(), es.end(), [&](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return colex_compare(g.alphabet, a.label, b.label) < 0;
    });
    std::ostringstream out;
    out << "alphabet " << g.alphabet.chars() << "\n";
    out << "states " << g.n << "\n";
    out << "initial " << g.initial << "\n";
    out << "final";
    for (State f : g.finals) out << ' ' << f;
    out << "\n";
    for (const Edge& e : es)
        out << "edge " << e.src << ' ' << e.dst << ' ' << (e.label.empty() ? "\"\"" : e.label) << "\n";
    return out.str();
}

void write_automaton_file(const std::string& path, const Gnfa& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << serialize_automaton(g);
}

}  // namespace gna
