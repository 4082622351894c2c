#include "gna/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gna/expand.hpp"

namespace gna {

StatePartition StatePartition::singletons(int n) {
    StatePartition p;
    p.block_of.assign(n + 1, 0);
    for (State u = 1; u <= n; ++u) {
        p.block_of[u] = u - 1;
        p.blocks.push_back({u});
    }
    return p;
}

StatePartition StatePartition::finals_split(const Gnfa& g) {
    std::vector<int> bo(g.n + 1, 0);
    for (State u = 1; u <= g.n; ++u) bo[u] = g.is_final(u) ? 1 : 0;
    return from_block_of(std::move(bo));
}

StatePartition StatePartition::from_block_of(std::vector<int> block_of) {
    // renumber blocks by first occurrence so representations are canonical
    StatePartition p;
    int n = static_cast<int>(block_of.size()) - 1;
    p.block_of.assign(n + 1, -1);
    std::map<int, int> renum;
    for (State u = 1; u <= n; ++u) {
        auto [it, fresh] = renum.try_emplace(block_of[u], static_cast<int>(p.blocks.size()));
        if (fresh) p.blocks.emplace_back();
        p.block_of[u] = it->second;
        p.blocks[it->second].push_back(u);
    }
    return p;
}

StatePartition refine_partition(const Gnfa& g, const StatePartition& initial) {
    require_gdfa(g, "refine_partition");
    if (static_cast<int>(initial.block_of.size()) != g.n + 1)
        throw std::invalid_argument("refine_partition: partition does not cover the states");
    auto out = g.out_index();
    std::vector<int> bo(initial.block_of);
    int blocks = StatePartition::from_block_of(bo).num_blocks();
    for (;;) {
        // signature: old block + sorted (label, successor block) pairs
        std::map<std::pair<int, std::vector<std::pair<Label, int>>>, int> sig_ids;
        std::vector<int> next(g.n + 1, 0);
        for (State u = 1; u <= g.n; ++u) {
            std::vector<std::pair<Label, int>> trans;
            for (int ei : out[u]) trans.emplace_back(g.edges[ei].label, bo[g.edges[ei].dst]);
            std::sort(trans.begin(), trans.end());
            auto key = std::make_pair(bo[u], std::move(trans));
            auto [it, fresh] = sig_ids.try_emplace(std::move(key), static_cast<int>(sig_ids.size()));
            (void)fresh;
            next[u] = it->second;
        }
        int next_blocks = static_cast<int>(sig_ids.size());
        bo = std::move(next);
        if (next_blocks == blocks) break;
        blocks = next_blocks;
    }
    return StatePartition::from_block_of(std::move(bo));
}

Gnfa quotient(const Gnfa& g, const StatePartition& p) {
    require_gdfa(g, "quotient");
    if (static_cast<int>(p.block_of.size()) != g.n + 1)
        throw std::invalid_argument("quotient: partition does not cover the states");
    auto out = g.out_index();
    // consistency: a block must not mix finals with non-finals, and all its
    // members must agree on labels and successor blocks
    for (const auto& block : p.blocks) {
        bool fin = g.is_final(block.front());
        std::map<Label, int> ref;
        for (int ei : out[block.front()]) ref[g.edges[ei].label] = p.block_of[g.edges[ei].dst];
        for (State u : block) {
            if (g.is_final(u) != fin)
                throw std::invalid_argument("quotient: partition mixes final and non-final states");
            std::map<Label, int> mine;
            for (int ei : out[u]) mine[g.edges[ei].label] = p.block_of[g.edges[ei].dst];
            if (mine != ref)
                throw std::invalid_argument("quotient: partition is not right-invariant");
        }
    }
    Gnfa q;
    q.alphabet = g.alphabet;
    q.n = p.num_blocks();
    q.initial = p.block_of[g.initial] + 1;
    std::set<std::tuple<State, State, Label>> es;
    for (const Edge& e : g.edges)
        es.insert({p.block_of[e.src] + 1, p.block_of[e.dst] + 1, e.label});
    for (auto& [s, d, l] : es) q.edges.push_back({s, d, l});
    for (int b = 0; b < p.num_blocks(); ++b)
        if (g.is_final(p.blocks[b].front())) q.finals.push_back(b + 1);
    return q;
}

Gnfa minimize(const Gnfa& g) {
    Gnfa t = trim(g);
    if (t.language_empty()) throw std::domain_error("minimize: empty language");
    require_gdfa(t, "minimize");
    return quotient(t, refine_partition(t, StatePartition::finals_split(t)));
}

namespace {

// canonical relabeling: BFS from the initial state, outgoing edges in co-lex
// label order; returns (edges under new names, new finals) or nothing if the
// automaton is not fully reachable (callers pass trimmed automata)
struct Canon {
    std::vector<Edge> edges;
    std::vector<State> finals;
    int n;
    bool operator==(const Canon& o) const { return n == o.n && edges == o.edges && finals == o.finals; }
};

Canon canonical_form(const Gnfa& g) {
    auto out = g.out_index();
    std::vector<State> newid(g.n + 1, 0);
    std::vector<State> order;
    newid[g.initial] = 1;
    order.push_back(g.initial);
    Canon c;
    for (std::size_t head = 0; head < order.size(); ++head) {
        State u = order[head];
        std::vector<int> eis = out[u];
        std::sort(eis.begin(), eis.end(), [&](int a, int b) {
            return colex_compare(g.alphabet, g.edges[a].label, g.edges[b].label) < 0;
        });
        for (int ei : eis) {
            State v = g.edges[ei].dst;
            if (!newid[v]) {
                newid[v] = static_cast<State>(order.size()) + 1;
                order.push_back(v);
            }
            c.edges.push_back({newid[u], newid[v], g.edges[ei].label});
        }
    }
    c.n = static_cast<int>(order.size());
    for (State u = 1; u <= g.n; ++u)
        if (newid[u] && g.is_final(u)) c.finals.push_back(newid[u]);
    std::sort(c.finals.begin(), c.finals.end());
    std::sort(c.edges.begin(), c.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
    });
    return c;
}

}  // namespace

bool gdfa_isomorphic(const Gnfa& a, const Gnfa& b) {
    require_gdfa(a, "gdfa_isomorphic");
    require_gdfa(b, "gdfa_isomorphic");
    if (a.n != b.n || a.edges.size() != b.edges.size() || a.finals.size() != b.finals.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

RightInvarianceReport check_right_invariance(const Gnfa& g, int max_len) {
    for (const Edge& e : g.edges)
        if (e.label.empty())
            throw std::domain_error("check_right_invariance: epsilon edges not supported");
    auto out = g.out_index();
    // enumerate W(g) with I-sets strictly by length: every string is extended
    // only once all of its (shorter) parents are complete
    std::map<Label, std::set<State>> isets;
    isets[{}].insert(g.initial);
    std::vector<std::vector<Label>> levels(max_len + 1);
    levels[0].push_back({});
    for (int len = 0; len <= max_len; ++len)
        for (const Label& alpha : levels[len])
            for (State u : isets.at(alpha))
                for (int ei : out[u]) {
                    const Edge& e = g.edges[ei];
                    int elen = len + static_cast<int>(e.label.size());
                    if (elen > max_len) continue;
                    auto [it, fresh] = isets.try_emplace(alpha + e.label);
                    if (fresh) levels[elen].push_back(it->first);
                    it->second.insert(e.dst);
                }
    // classes of the state-reachability equivalence: same I-set
    std::vector<Label> words;
    words.reserve(isets.size());
    for (auto& [w, iset] : isets) words.push_back(w);
    std::sort(words.begin(), words.end());  // lexicographic: prefix ranges are contiguous
    std::map<std::set<State>, std::vector<Label>> classes;
    std::vector<Label> by_len(words);
    std::stable_sort(by_len.begin(), by_len.end(),
                     [](const Label& a, const Label& b) { return a.size() < b.size(); });
    for (const Label& w : by_len) classes[isets[w]].push_back(w);

    auto extensions_of = [&](const Label& alpha, auto&& fn) {
        auto it = std::lower_bound(words.begin(), words.end(), alpha);
        for (; it != words.end() && it->compare(0, alpha.size(), alpha) == 0; ++it)
            if (it->size() > alpha.size()) fn(it->substr(alpha.size()));
    };
    for (auto& [iset, members] : classes) {
        if (members.size() < 2) continue;
        const Label& ref = members.front();
        for (std::size_t i = 1; i < members.size(); ++i) {
            const Label& other = members[i];
            RightInvarianceReport bad;
            auto probe = [&](const Label& alpha, const Label& beta) {
                extensions_of(alpha, [&](const Label& phi) {
                    if (!bad.holds) return;
                    if (beta.size() + phi.size() > static_cast<std::size_t>(max_len)) return;
                    auto it = isets.find(beta + phi);
                    if (it == isets.end() || it->second != isets.at(alpha + phi))
                        bad = {false, alpha, beta, phi};
                });
            };
            probe(ref, other);
            if (bad.holds) probe(other, ref);
            if (!bad.holds) return bad;
        }
    }
    return {};
}

}  // namespace gna
