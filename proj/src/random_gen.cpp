#include "gna/random_gen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gna/wheeler.hpp"

namespace gna {

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Gnfa renumber_by_order(const Gnfa& g, const std::vector<State>& sequence) {
    std::vector<State> newid(g.n + 1, 0);
    for (int i = 0; i < static_cast<int>(sequence.size()); ++i) newid[sequence[i]] = i + 1;
    Gnfa out;
    out.alphabet = g.alphabet;
    out.n = g.n;
    out.initial = newid[g.initial];
    for (const Edge& e : g.edges) out.edges.push_back({newid[e.src], newid[e.dst], e.label});
    for (State f : g.finals) out.finals.push_back(newid[f]);
    std::sort(out.finals.begin(), out.finals.end());
    return out;
}

std::optional<Gnfa> try_wheeler_dfa(std::mt19937_64& rng, const GenParams& p) {
    Alphabet sigma(p.alphabet);
    const int asz = static_cast<int>(sigma.size());
    int n = rand_int(rng, 1, p.max_states);
    Gnfa g;
    g.alphabet = sigma;
    g.n = n;
    g.initial = 1;
    if (n == 1) {
        for (char c : sigma.chars())
            if (rand_int(rng, 0, 1)) g.edges.push_back({1, 1, Label(1, c)});
        g.finals = {1};
        return g;
    }
    // incoming character per state, nondecreasing along the identity order
    std::vector<int> chr(n + 1, 0);
    for (State v = 2; v <= n; ++v) chr[v] = rand_int(rng, 0, asz - 1);
    std::sort(chr.begin() + 2, chr.end());
    // one spanning edge per state: strictly increasing sources within each
    // character group, each below its target (reachability)
    std::map<int, std::vector<State>> group;  // char -> targets, increasing
    for (State v = 2; v <= n; ++v) group[chr[v]].push_back(v);
    // sources[c][v] = set of sources of c-edges into v; used[c] = sources taken
    std::map<int, std::map<State, std::vector<State>>> sources;
    std::map<int, std::set<State>> used;
    for (auto& [c, targets] : group) {
        State prev = 0;
        for (State v : targets) {
            if (prev + 1 > v - 1) return std::nullopt;  // no legal source
            State u = rand_int(rng, prev + 1, v - 1);
            sources[c][v].push_back(u);
            used[c].insert(u);
            prev = u;
        }
    }
    // extra edges (cycles and joins), inserted only where the same-character
    // source monotonicity and determinism stay intact
    int extras = rand_int(rng, 0, 2 * n);
    for (int t = 0; t < extras; ++t) {
        int c = rand_int(rng, 0, asz - 1);
        if (!group.count(c)) continue;
        const auto& targets = group[c];
        State v = targets[rand_int(rng, 0, static_cast<int>(targets.size()) - 1)];
        State u = rand_int(rng, 1, n);
        if (used[c].count(u)) continue;
        bool ok = true;
        for (State w : targets) {
            for (State src : sources[c][w]) {
                if (w < v && src >= u) ok = false;
                if (w > v && src <= u) ok = false;
            }
            if (!ok) break;
        }
        if (!ok) continue;
        sources[c][v].push_back(u);
        used[c].insert(u);
    }
    for (auto& [c, per_target] : sources)
        for (auto& [v, srcs] : per_target)
            for (State u : srcs) g.edges.push_back({u, v, Label(1, sigma.chars()[c])});
    for (State v = 1; v <= n; ++v)
        if (rand_int(rng, 0, 2) == 0) g.finals.push_back(v);
    if (g.finals.empty()) g.finals.push_back(rand_int(rng, 1, n));
    std::sort(g.finals.begin(), g.finals.end());
    g.finals.erase(std::unique(g.finals.begin(), g.finals.end()), g.finals.end());
    Gnfa t = trim(g);
    if (t.language_empty()) return std::nullopt;
    WheelerResult wr = gdfa_wheeler_order(t);
    if (!wr.wheeler) return std::nullopt;
    return renumber_by_order(t, wr.order.sequence);
}

}  // namespace

Gnfa random_wheeler_dfa(std::mt19937_64& rng, const GenParams& p) {
    for (int attempt = 0; attempt < 10000; ++attempt)
        if (auto g = try_wheeler_dfa(rng, p)) return *g;
    throw std::runtime_error("random_wheeler_dfa: generation failed");
}

Gnfa random_wheeler_gdfa(std::mt19937_64& rng, const GenParams& p) {
    Gnfa g = random_wheeler_dfa(rng, p);
    // contract unary pass-through states into string edges; kept states keep
    // their arriving strings, so the (identity) Wheeler order survives
    for (;;) {
        auto out = g.out_index();
        auto in = g.in_index();
        std::vector<State> candidates;
        for (State z = 1; z <= g.n; ++z) {
            if (z == g.initial || g.is_final(z)) continue;
            if (in[z].size() != 1 || out[z].size() != 1) continue;
            const Edge& ein = g.edges[in[z][0]];
            const Edge& eout = g.edges[out[z][0]];
            if (ein.src == z || eout.dst == z) continue;  // self loop
            if (static_cast<int>(ein.label.size() + eout.label.size()) > p.max_label_len) continue;
            candidates.push_back(z);
        }
        if (candidates.empty() || rand_int(rng, 0, 3) == 0) break;
        State z = candidates[rand_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
        auto out2 = g.out_index();
        auto in2 = g.in_index();
        const Edge ein = g.edges[in2[z][0]];
        const Edge eout = g.edges[out2[z][0]];
        Gnfa h;
        h.alphabet = g.alphabet;
        h.initial = 0;
        std::vector<State> newid(g.n + 1, 0);
        int count = 0;
        for (State u = 1; u <= g.n; ++u)
            if (u != z) newid[u] = ++count;
        h.n = count;
        h.initial = newid[g.initial];
        for (const Edge& e : g.edges) {
            if (e.dst == z || e.src == z) continue;
            h.edges.push_back({newid[e.src], newid[e.dst], e.label});
        }
        h.edges.push_back({newid[ein.src], newid[eout.dst], ein.label + eout.label});
        for (State f : g.finals) h.finals.push_back(newid[f]);
        std::sort(h.finals.begin(), h.finals.end());
        g = std::move(h);
    }
    return g;
}

Gnfa random_gdfa(std::mt19937_64& rng, const GenParams& p) {
    Alphabet sigma(p.alphabet);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int n = rand_int(rng, 1, p.max_states);
        Gnfa g;
        g.alphabet = sigma;
        g.n = n;
        g.initial = 1;
        for (State u = 1; u <= n; ++u) {
            int deg = rand_int(rng, 0, 3);
            std::vector<Label> labels;
            for (int d = 0; d < deg; ++d) {
                int len = rand_int(rng, 1, p.max_label_len);
                Label l;
                for (int i = 0; i < len; ++i)
                    l.push_back(sigma.chars()[rand_int(rng, 0, static_cast<int>(sigma.size()) - 1)]);
                bool clash = false;
                for (const Label& have : labels) {
                    const Label& shorter = have.size() <= l.size() ? have : l;
                    const Label& longer = have.size() <= l.size() ? l : have;
                    if (longer.compare(0, shorter.size(), shorter) == 0) clash = true;
                }
                if (clash) continue;
                labels.push_back(l);
                g.edges.push_back({u, rand_int(rng, 1, n), l});
            }
        }
        for (State v = 1; v <= n; ++v)
            if (rand_int(rng, 0, 2) == 0) g.finals.push_back(v);
        if (g.finals.empty()) g.finals.push_back(rand_int(rng, 1, n));
        std::sort(g.finals.begin(), g.finals.end());
        g.finals.erase(std::unique(g.finals.begin(), g.finals.end()), g.finals.end());
        Gnfa t = trim(g);
        if (t.language_empty()) continue;
        return t;
    }
    throw std::runtime_error("random_gdfa: generation failed");
}

Gnfa random_nfa(std::mt19937_64& rng, const GenParams& p) {
    Alphabet sigma(p.alphabet);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int n = rand_int(rng, 1, p.max_states);
        Gnfa g;
        g.alphabet = sigma;
        g.n = n;
        g.initial = 1;
        std::set<std::tuple<State, State, Label>> es;
        int m = rand_int(rng, n, 3 * n);
        for (int t = 0; t < m; ++t)
            es.insert({rand_int(rng, 1, n), rand_int(rng, 1, n),
                       Label(1, sigma.chars()[rand_int(rng, 0, static_cast<int>(sigma.size()) - 1)])});
        for (auto& [s, d, l] : es) g.edges.push_back({s, d, l});
        for (State v = 1; v <= n; ++v)
            if (rand_int(rng, 0, 2) == 0) g.finals.push_back(v);
        if (g.finals.empty()) g.finals.push_back(rand_int(rng, 1, n));
        std::sort(g.finals.begin(), g.finals.end());
        g.finals.erase(std::unique(g.finals.begin(), g.finals.end()), g.finals.end());
        Gnfa t = trim(g);
        if (t.language_empty()) continue;
        return t;
    }
    throw std::runtime_error("random_nfa: generation failed");
}

std::optional<Gnfa> rejection_sample_wheeler_gdfa(std::mt19937_64& rng, const GenParams& p,
                                                  int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Gnfa g = random_gdfa(rng, p);
        WheelerResult wr = gdfa_wheeler_order(g);
        if (wr.wheeler) return renumber_by_order(g, wr.order.sequence);
    }
    return std::nullopt;
}

std::optional<Gnfa> unroll_duplicate_state(std::mt19937_64& rng, const Gnfa& g) {
    auto in = g.in_index();
    std::vector<State> candidates;
    for (State v = 1; v <= g.n; ++v)
        if (v != g.initial && in[v].size() >= 2) candidates.push_back(v);
    if (candidates.empty()) return std::nullopt;
    State v = candidates[rand_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
    Gnfa h = g;
    State v2 = ++h.n;
    // split incoming edges: at least one each side
    std::vector<int> inc = in[v];
    std::shuffle(inc.begin(), inc.end(), rng);
    for (std::size_t i = 0; i < inc.size(); ++i) {
        bool to_copy = (i == 1) || (i >= 2 && rand_int(rng, 0, 1));
        if (to_copy) h.edges[inc[i]].dst = v2;
    }
    // duplicate outgoing edges; self loops re-enter the original copy
    for (const Edge& e : g.edges)
        if (e.src == v) h.edges.push_back({v2, e.dst, e.label});
    if (g.is_final(v)) {
        h.finals.push_back(v2);
        std::sort(h.finals.begin(), h.finals.end());
    }
    return h;
}

Label random_pattern(std::mt19937_64& rng, const Gnfa& g, int max_len) {
    const std::string& chars = g.alphabet.chars();
    auto uniform_string = [&](int len) {
        Label l;
        for (int i = 0; i < len; ++i)
            l.push_back(chars[rand_int(rng, 0, static_cast<int>(chars.size()) - 1)]);
        return l;
    };
    auto walk = [&]() {
        auto out = g.out_index();
        Label l;
        State u = g.initial;
        while (static_cast<int>(l.size()) < max_len) {
            if (out[u].empty() || rand_int(rng, 0, 4) == 0) break;
            const Edge& e = g.edges[out[u][rand_int(rng, 0, static_cast<int>(out[u].size()) - 1)]];
            l += e.label;
            u = e.dst;
        }
        if (static_cast<int>(l.size()) > max_len) l.resize(max_len);
        return l;
    };
    switch (rand_int(rng, 0, 5)) {
        case 0: return {};
        case 1: return uniform_string(1);
        case 2: {  // substring of a spelled string: often occurring
            Label w = walk();
            if (w.empty()) return {};
            int b = rand_int(rng, 0, static_cast<int>(w.size()) - 1);
            int e = rand_int(rng, b + 1, static_cast<int>(w.size()));
            return w.substr(b, e - b);
        }
        case 3: return uniform_string(rand_int(rng, 1, max_len));
        case 4: {  // walk with one mutation: often non-occurring
            Label w = walk();
            if (w.empty()) return uniform_string(1);
            w[rand_int(rng, 0, static_cast<int>(w.size()) - 1)] =
                chars[rand_int(rng, 0, static_cast<int>(chars.size()) - 1)];
            return w;
        }
        default: return uniform_string(max_len);
    }
}

}  // namespace gna
