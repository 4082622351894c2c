#include "gna/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gna {
namespace oracle {

namespace {

// chain expansion used only inside this module: every string edge becomes its
// own character path (no sharing)
struct CharGraph {
    int original;
    int n;
    std::vector<std::array<int, 3>> edges;  // src, dst, char (as byte)

    explicit CharGraph(const Gnfa& g) : original(g.n), n(g.n) {
        for (const Edge& e : g.edges) {
            if (e.label.empty())
                throw std::domain_error("oracle: epsilon edges not supported");
            int prev = e.src;
            for (std::size_t i = 0; i + 1 < e.label.size(); ++i) {
                edges.push_back({prev, ++n, e.label[i]});
                prev = n;
            }
            edges.push_back({prev, e.dst, e.label.back()});
        }
    }
    std::set<int> step(const std::set<int>& from, char c) const {
        std::set<int> next;
        for (const auto& [s, d, ch] : edges)
            if (ch == c && from.count(s)) next.insert(d);
        return next;
    }
};

}  // namespace

std::set<State> naive_smlg(const Gnfa& g, const Label& alpha) {
    CharGraph cg(g);
    std::set<int> frontier;
    for (int u = 1; u <= cg.n; ++u) frontier.insert(u);
    for (char c : alpha) frontier = cg.step(frontier, c);
    std::set<State> res;
    for (int u : frontier)
        if (u <= cg.original) res.insert(u);
    return res;
}

bool naive_member(const Gnfa& g, const Label& alpha) {
    CharGraph cg(g);
    std::set<int> frontier{g.initial};
    for (char c : alpha) frontier = cg.step(frontier, c);
    for (int u : frontier)
        if (u <= cg.original && g.is_final(u)) return true;
    return false;
}

std::set<State> naive_g_prec(const Gnfa& g, const std::vector<State>& order, const Label& alpha) {
    (void)order;  // the set does not depend on the order, only on arriving strings
    const int m = static_cast<int>(alpha.size());
    std::vector<std::vector<int>> in(g.n + 1);
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei)
        in[g.edges[ei].dst].push_back(ei);
    std::vector<std::set<State>> gp(m + 1);  // gp[j] for the length-j prefix
    for (int j = 1; j <= m; ++j) {
        Label prefix = alpha.substr(0, j);
        for (State u = 1; u <= g.n; ++u) {
            bool ok = true;
            for (int ei : in[u]) {
                const Label& rho = g.edges[ei].label;
                if (colex_compare(g.alphabet, rho, prefix) >= 0) {
                    ok = false;
                    break;
                }
                // labels that are proper suffixes of the prefix additionally
                // need their source below the complementary prefix
                int k = static_cast<int>(rho.size());
                if (k < j && prefix.compare(j - k, k, rho) == 0 &&
                    !gp[j - k].count(g.edges[ei].src)) {
                    ok = false;
                    break;
                }
            }
            // epsilon arrives at the initial state; it is below any nonempty prefix
            if (ok) gp[j].insert(u);
        }
    }
    return gp[m];
}

std::map<State, std::set<Label>> enumerate_I(const Gnfa& g, int max_len) {
    std::vector<std::vector<int>> out(g.n + 1);
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei)
        out[g.edges[ei].src].push_back(ei);
    std::map<Label, std::set<State>> by_string;
    by_string[{}].insert(g.initial);
    std::vector<std::vector<Label>> levels(max_len + 1);
    levels[0].push_back({});
    for (int len = 0; len <= max_len; ++len)
        for (const Label& alpha : levels[len])
            for (State u : by_string.at(alpha))
                for (int ei : out[u]) {
                    const Edge& e = g.edges[ei];
                    if (e.label.empty())
                        throw std::domain_error("oracle: epsilon edges not supported");
                    int elen = len + static_cast<int>(e.label.size());
                    if (elen > max_len) continue;
                    auto [it, fresh] = by_string.try_emplace(alpha + e.label);
                    if (fresh) levels[elen].push_back(it->first);
                    it->second.insert(e.dst);
                }
    std::map<State, std::set<Label>> res;
    for (State u = 1; u <= g.n; ++u) res[u];  // every state present
    for (auto& [alpha, states] : by_string)
        for (State u : states) res[u].insert(alpha);
    return res;
}

Gnfa moore_minimize_dfa(const Gnfa& d) {
    for (const Edge& e : d.edges)
        if (e.label.size() != 1)
            throw std::domain_error("moore_minimize_dfa: input must be character-labeled");
    const int sigma = static_cast<int>(d.alphabet.size());
    const int sink = d.n + 1;
    // completed transition table
    std::vector<std::vector<int>> delta(d.n + 2, std::vector<int>(sigma, sink));
    for (const Edge& e : d.edges) {
        int c = d.alphabet.index(e.label[0]);
        if (delta[e.src][c] != sink)
            throw std::domain_error("moore_minimize_dfa: input is not deterministic");
        delta[e.src][c] = e.dst;
    }
    std::vector<int> block(d.n + 2, 0);
    for (State u = 1; u <= d.n; ++u) block[u] = d.is_final(u) ? 1 : 0;
    block[sink] = 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(d.n + 2, 0);
        for (int u = 1; u <= sink; ++u) {
            std::vector<int> sig{block[u]};
            for (int c = 0; c < sigma; ++c) sig.push_back(block[delta[u][c]]);
            auto [it, fresh] = sig_ids.try_emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            (void)fresh;
            next[u] = it->second;
        }
        bool stable = true;
        for (int u = 1; u <= sink && stable; ++u)
            for (int v = u + 1; v <= sink; ++v)
                if ((block[u] == block[v]) != (next[u] == next[v])) {
                    stable = false;
                    break;
                }
        block = std::move(next);
        if (stable) break;
    }
    // quotient, then drop everything that behaves like the sink
    std::map<int, State> newid;
    for (int u = 1; u <= sink; ++u)
        if (u != sink && block[u] != block[sink]) newid.try_emplace(block[u], 0);
    int count = 0;
    for (auto& [b, id] : newid) id = ++count;
    Gnfa q;
    q.alphabet = d.alphabet;
    q.n = count;
    q.initial = newid.at(block[d.initial]);
    std::set<std::tuple<State, State, Label>> es;
    for (State u = 1; u <= d.n; ++u) {
        if (block[u] == block[sink]) continue;
        for (int c = 0; c < sigma; ++c) {
            int v = delta[u][c];
            if (v == sink || block[v] == block[sink]) continue;
            es.insert({newid.at(block[u]), newid.at(block[v]), Label(1, d.alphabet.chars()[c])});
        }
    }
    for (auto& [s, dd, l] : es) q.edges.push_back({s, dd, l});
    std::set<State> fs;
    for (State u = 1; u <= d.n; ++u)
        if (d.is_final(u)) fs.insert(newid.at(block[u]));
    q.finals.assign(fs.begin(), fs.end());
    return q;
}

std::set<int> wheeler_dfa_forward_search(const Gnfa& d, const std::vector<State>& order,
                                         const Label& alpha) {
    std::vector<int> pos(d.n + 1, 0);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i + 1;
    std::set<int> cur;
    for (int p = 1; p <= d.n; ++p) cur.insert(p);
    for (char c : alpha) {
        std::set<int> next;
        for (const Edge& e : d.edges)
            if (e.label.size() == 1 && e.label[0] == c && cur.count(pos[e.src]))
                next.insert(pos[e.dst]);
        cur = std::move(next);
    }
    return cur;
}

bool dfa_run_member(const Gnfa& d, const Label& alpha) {
    std::map<std::pair<State, char>, State> delta;
    for (const Edge& e : d.edges) delta[{e.src, e.label.at(0)}] = e.dst;
    State u = d.initial;
    for (char c : alpha) {
        auto it = delta.find({u, c});
        if (it == delta.end()) return false;
        u = it->second;
    }
    return d.is_final(u);
}

}  // namespace oracle
}  // namespace gna
