#include "gna/expand.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gna {

namespace {

// Trie-shared expansion of one GDFA state's outgoing labels.
void expand_state_trie(const Gnfa& g, const std::vector<int>& out_edges, State u, Gnfa& nfa) {
    // node -> (char -> node); node 0 is the root (= u itself)
    struct Node {
        std::map<char, int> next;
        std::optional<State> leaf;
    };
    std::vector<Node> trie(1);
    for (int ei : out_edges) {
        const Edge& e = g.edges[ei];
        int node = 0;
        for (char c : e.label) {
            auto it = trie[node].next.find(c);
            if (it == trie[node].next.end()) {
                trie[node].next[c] = static_cast<int>(trie.size());
                node = static_cast<int>(trie.size());
                trie.emplace_back();
            } else {
                node = it->second;
            }
        }
        trie[node].leaf = e.dst;  // prefix-freeness: leaves are never internal
    }
    // materialize: internal trie nodes become fresh states; edges into a node
    // that is a leaf go straight to the original destination
    std::vector<State> node_state(trie.size(), 0);
    node_state[0] = u;
    for (std::size_t i = 1; i < trie.size(); ++i)
        if (!trie[i].leaf) node_state[i] = ++nfa.n;
    for (std::size_t i = 0; i < trie.size(); ++i)
        for (auto& [c, j] : trie[i].next) {
            State dst = trie[j].leaf ? *trie[j].leaf : node_state[j];
            nfa.edges.push_back({node_state[i], dst, Label(1, c)});
        }
}

}  // namespace

ExpandResult expand(const Gnfa& g) {
    g.check_well_formed();
    ExpandResult res;
    res.original_states = g.n;
    Gnfa& nfa = res.nfa;
    nfa.n = g.n;
    nfa.initial = g.initial;
    nfa.finals = g.finals;
    nfa.alphabet = g.alphabet;
    auto out = g.out_index();
    if (classify(g).is_gdfa) {
        for (State u = 1; u <= g.n; ++u)
            if (!out[u].empty()) expand_state_trie(g, out[u], u, nfa);
    } else {
        for (const Edge& e : g.edges) {
            if (e.label.size() <= 1) {
                nfa.edges.push_back(e);
                continue;
            }
            State prev = e.src;
            for (std::size_t i = 0; i + 1 < e.label.size(); ++i) {
                State z = ++nfa.n;
                nfa.edges.push_back({prev, z, Label(1, e.label[i])});
                prev = z;
            }
            nfa.edges.push_back({prev, e.dst, Label(1, e.label.back())});
        }
    }
    return res;
}

namespace {

void epsilon_close(const Gnfa& g, const std::vector<std::vector<int>>& out, std::set<State>& states) {
    std::deque<State> q(states.begin(), states.end());
    while (!q.empty()) {
        State u = q.front();
        q.pop_front();
        for (int ei : out[u])
            if (g.edges[ei].label.empty() && states.insert(g.edges[ei].dst).second)
                q.push_back(g.edges[ei].dst);
    }
}

}  // namespace

std::set<State> reachable_states(const Gnfa& g, const Label& alpha) {
    auto out = g.out_index();
    std::size_t m = alpha.size();
    std::vector<std::set<State>> at(m + 1);
    at[0].insert(g.initial);
    epsilon_close(g, out, at[0]);
    for (std::size_t pos = 0; pos <= m; ++pos) {
        if (at[pos].empty()) continue;
        epsilon_close(g, out, at[pos]);
        for (State u : at[pos])
            for (int ei : out[u]) {
                const Label& rho = g.edges[ei].label;
                if (rho.empty() || pos + rho.size() > m) continue;
                if (alpha.compare(pos, rho.size(), rho) == 0)
                    at[pos + rho.size()].insert(g.edges[ei].dst);
            }
    }
    epsilon_close(g, out, at[m]);
    return at[m];
}

Gnfa w_language_automaton(const Gnfa& g) {
    for (const Edge& e : g.edges)
        if (e.label.empty())
            throw std::domain_error("w_language_automaton: epsilon edges not supported");
    ExpandResult ex = expand(g);
    Gnfa nfa = std::move(ex.nfa);
    nfa.finals.clear();
    for (State u = 1; u <= ex.original_states; ++u) nfa.finals.push_back(u);
    return nfa;
}

std::set<Label> kernel(const std::set<Label>& labels) {
    std::set<Label> out;
    for (const Label& s : labels) {
        bool has_prefix = false;
        for (std::size_t len = 0; len < s.size() && !has_prefix; ++len)
            if (labels.count(s.substr(0, len))) has_prefix = true;
        if (!has_prefix) out.insert(s);
    }
    return out;
}

std::set<Label> kernel_at(const Gnfa& g, const Label& alpha) {
    require_gdfa(g, "kernel_at");
    std::set<State> ia = reachable_states(g, alpha);
    if (ia.empty()) throw std::domain_error("kernel_at: string not in W(g)");
    std::set<Label> out;
    for (const Edge& e : g.edges)
        if (ia.count(e.src)) out.insert(e.label);
    return out;
}

bool language_member_naive(const Gnfa& g, const Label& alpha) {
    for (char c : alpha)
        if (!g.alphabet.contains(c)) return false;
    Gnfa nfa = expand(g).nfa;
    auto out = nfa.out_index();
    std::set<State> frontier{nfa.initial};
    epsilon_close(nfa, out, frontier);
    for (char c : alpha) {
        std::set<State> next;
        for (State u : frontier)
            for (int ei : out[u])
                if (nfa.edges[ei].label.size() == 1 && nfa.edges[ei].label[0] == c)
                    next.insert(nfa.edges[ei].dst);
        epsilon_close(nfa, out, next);
        frontier = std::move(next);
        if (frontier.empty()) return false;
    }
    for (State u : frontier)
        if (nfa.is_final(u)) return true;
    return false;
}

namespace {

struct SubsetStepper {
    const Gnfa& nfa;
    std::vector<std::vector<int>> out;

    explicit SubsetStepper(const Gnfa& g) : nfa(g), out(g.out_index()) {}

    std::vector<State> start() const {
        std::set<State> s{nfa.initial};
        epsilon_close(nfa, out, s);
        return {s.begin(), s.end()};
    }
    std::vector<State> step(const std::vector<State>& from, char c) const {
        std::set<State> next;
        for (State u : from)
            for (int ei : out[u])
                if (nfa.edges[ei].label.size() == 1 && nfa.edges[ei].label[0] == c)
                    next.insert(nfa.edges[ei].dst);
        epsilon_close(nfa, out, next);
        return {next.begin(), next.end()};
    }
    bool accepting(const std::vector<State>& s) const {
        for (State u : s)
            if (nfa.is_final(u)) return true;
        return false;
    }
};

}  // namespace

EquivResult language_equiv(const Gnfa& a, const Gnfa& b) {
    Gnfa ea = expand(a).nfa, eb = expand(b).nfa;
    SubsetStepper sa(ea), sb(eb);

    // characters considered: union of both alphabets, first automaton's
    // declaration order first, so witnesses are deterministic
    std::string chars = ea.alphabet.chars();
    for (char c : eb.alphabet.chars())
        if (chars.find(c) == std::string::npos) chars.push_back(c);

    struct Item {
        std::vector<State> sa, sb;
        int parent;
        char via;
    };
    std::vector<Item> items;
    std::map<std::pair<std::vector<State>, std::vector<State>>, int> seen;
    auto push = [&](std::vector<State> x, std::vector<State> y, int parent, char via) -> int {
        auto key = std::make_pair(x, y);
        auto it = seen.find(key);
        if (it != seen.end()) return -1;
        int id = static_cast<int>(items.size());
        seen.emplace(std::move(key), id);
        items.push_back({std::move(x), std::move(y), parent, via});
        return id;
    };
    push(sa.start(), sb.start(), -1, '\0');
    for (std::size_t head = 0; head < items.size(); ++head) {
        // copy: items may reallocate during the loop body
        Item cur = items[head];
        if (sa.accepting(cur.sa) != sb.accepting(cur.sb)) {
            Label w;
            for (int at = static_cast<int>(head); items[at].parent >= 0; at = items[at].parent)
                w.push_back(items[at].via);
            std::reverse(w.begin(), w.end());
            return {false, w};
        }
        if (cur.sa.empty() && cur.sb.empty()) continue;  // joint sink
        for (char c : chars) push(sa.step(cur.sa, c), sb.step(cur.sb, c), static_cast<int>(head), c);
    }
    return {true, {}};
}

}  // namespace gna
