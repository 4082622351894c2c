#include "gna/gbwt.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gna {

std::size_t GeneralizedBwt::total_edges() const {
    std::size_t e = 0;
    for (const LabelSequence& s : labels) e += s.size();
    return e;
}

std::size_t GeneralizedBwt::payload_bits() const {
    std::size_t bits_per_char = 1;
    while ((std::size_t{1} << bits_per_char) < alphabet.size()) ++bits_per_char;
    std::size_t total = fin.size();
    for (int i = 1; i <= r; ++i) {
        total += edge_count(i) * i * bits_per_char;          // LAB_i
        total += 2 * (edge_count(i) + static_cast<std::size_t>(n));  // OUT_i + IN_i
    }
    return total;
}

GeneralizedBwt build_bwt(const Gnfa& g, const StateOrder& order) {
    g.check_well_formed();
    for (const Edge& e : g.edges)
        if (e.label.empty()) throw std::invalid_argument("build_bwt: epsilon edges not supported");
    if (g.language_empty()) throw std::invalid_argument("build_bwt: empty language");
    OrderCheckReport rep = check_wheeler_order(g, order, 8);
    bool gdfa = classify(g).is_gdfa;
    bool ok = rep.s_first && rep.p2 && rep.p3 &&
              (gdfa ? rep.p1 == CheckVerdict::exact_pass : rep.p1 != CheckVerdict::fail);
    if (!ok) throw std::invalid_argument("build_bwt: order fails verification: " + rep.detail);

    std::vector<int> pos = order.positions();
    GeneralizedBwt b;
    b.alphabet = g.alphabet;
    b.n = g.n;
    b.r = std::max(1, g.max_label_len());
    for (int i = 1; i <= b.r; ++i) {
        std::vector<Edge> ei;
        for (const Edge& e : g.edges)
            if (static_cast<int>(e.label.size()) == i) ei.push_back(e);
        // source-major, co-lex-label-minor
        std::sort(ei.begin(), ei.end(), [&](const Edge& a, const Edge& c) {
            if (pos[a.src] != pos[c.src]) return pos[a.src] < pos[c.src];
            int cmp = colex_compare(g.alphabet, a.label, c.label);
            if (cmp != 0) return cmp < 0;
            return pos[a.dst] < pos[c.dst];
        });
        std::vector<Label> labs;
        std::vector<std::size_t> outdeg(b.n + 1, 0), indeg(b.n + 1, 0);
        for (const Edge& e : ei) {
            labs.push_back(e.label);
            ++outdeg[pos[e.src]];
            ++indeg[pos[e.dst]];
        }
        std::vector<bool> outb, inb;
        for (int p = 1; p <= b.n; ++p) {
            outb.insert(outb.end(), outdeg[p], false);
            outb.push_back(true);
            inb.insert(inb.end(), indeg[p], false);
            inb.push_back(true);
        }
        b.out_bits.emplace_back(outb);
        b.in_bits.emplace_back(inb);
        b.labels.emplace_back(i, std::move(labs));
    }
    std::vector<bool> finb(b.n, false);
    for (State f : g.finals) finb[pos[f] - 1] = true;
    b.fin = RankSelectBitVector(finb);
    return b;
}

IndexAux derive_aux(const GeneralizedBwt& b) {
    IndexAux aux;
    for (int i = 1; i <= b.r; ++i) {
        // edges sorted by (target, label) carry labels in plain co-lex order,
        // so the run structure is recoverable from the label multiset alone
        std::vector<Label> sorted = b.labels[i - 1].items();
        std::sort(sorted.begin(), sorted.end(), ColexLess{&b.alphabet});
        std::vector<bool> bits(sorted.size(), false);
        for (std::size_t k = 0; k < sorted.size(); ++k)
            bits[k] = (k == 0) || sorted[k] != sorted[k - 1];
        aux.aux.emplace_back(bits);
        std::vector<Label> distinct = sorted;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        aux.dicts.emplace_back(b.alphabet, i, std::move(distinct));
    }
    return aux;
}

DecodeResult decode_bwt(const GeneralizedBwt& b) {
    if (b.n < 1 || b.r < 1 || static_cast<int>(b.fin.size()) != b.n ||
        static_cast<int>(b.out_bits.size()) != b.r || static_cast<int>(b.in_bits.size()) != b.r ||
        static_cast<int>(b.labels.size()) != b.r)
        throw std::runtime_error("gbwt: inconsistent component counts");
    DecodeResult res;
    Gnfa& g = res.automaton;
    g.alphabet = b.alphabet;
    g.n = b.n;
    g.initial = 1;
    for (int p = 1; p <= b.n; ++p)
        if (b.fin.get(p)) g.finals.push_back(p);
    res.order = StateOrder::identity(b.n);

    for (int i = 1; i <= b.r; ++i) {
        const LabelSequence& lab = b.labels[i - 1];
        const RankSelectBitVector& outv = b.out_bits[i - 1];
        const RankSelectBitVector& inv = b.in_bits[i - 1];
        std::size_t e = lab.size();
        if (outv.size() != e + b.n || inv.size() != e + b.n ||
            outv.count(true) != static_cast<std::size_t>(b.n) ||
            inv.count(true) != static_cast<std::size_t>(b.n))
            throw std::runtime_error("gbwt: unary degree sums do not match label counts");
        // sources in label-sequence order
        std::map<Label, std::vector<State>, ColexLess> srcs{ColexLess{&b.alphabet}};
        for (std::size_t k = 1; k <= e; ++k) {
            std::size_t at = outv.select(k, false);
            srcs[lab.access(k)].push_back(static_cast<State>(outv.rank(at, true)) + 1);
        }
        // targets: the k-th edge in target-major order carries the k-th
        // co-lex-smallest label
        std::vector<Label> sorted = lab.items();
        std::sort(sorted.begin(), sorted.end(), ColexLess{&b.alphabet});
        std::map<Label, std::vector<State>, ColexLess> tgts{ColexLess{&b.alphabet}};
        for (std::size_t k = 1; k <= e; ++k) {
            std::size_t at = inv.select(k, false);
            tgts[sorted[k - 1]].push_back(static_cast<State>(inv.rank(at, true)) + 1);
        }
        // monotone pairing: j-th source of rho with j-th target of rho
        for (auto& [rho, ss] : srcs) {
            auto& tt = tgts[rho];
            if (ss.size() != tt.size())
                throw std::runtime_error("gbwt: per-label source/target counts differ");
            for (std::size_t j = 0; j < ss.size(); ++j) g.edges.push_back({ss[j], tt[j], rho});
        }
    }
    try {
        g.check_well_formed();
    } catch (const std::exception& ex) {
        throw std::runtime_error(std::string("gbwt: decoded automaton invalid: ") + ex.what());
    }
    return res;
}

void write_gbwt(std::ostream& out, const GeneralizedBwt& b) {
    out << "gbwt v1\n";
    out << "n " << b.n << "\n";
    out << "r " << b.r << "\n";
    out << "alphabet " << b.alphabet.chars() << "\n";
    for (int i = 1; i <= b.r; ++i) {
        out << "OUT" << i << ' ' << b.out_bits[i - 1].to_string() << "\n";
        out << "IN" << i << ' ' << b.in_bits[i - 1].to_string() << "\n";
        out << "LAB" << i;
        for (std::size_t k = 1; k <= b.labels[i - 1].size(); ++k)
            out << ' ' << b.labels[i - 1].access(k);
        out << "\n";
    }
    out << "FIN " << b.fin.to_string() << "\n";
}

GeneralizedBwt read_gbwt(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return line;
        }
        throw std::runtime_error("gbwt: unexpected end of file");
    };
    if (next_line() != "gbwt v1") throw std::runtime_error("gbwt: missing 'gbwt v1' header");
    GeneralizedBwt b;
    auto parse_kv = [&](const std::string& key) -> std::string {
        std::istringstream ss(next_line());
        std::string k, v;
        ss >> k >> v;
        if (k != key) throw std::runtime_error("gbwt: expected '" + key + "' line");
        return v;
    };
    try {
        b.n = std::stoi(parse_kv("n"));
        b.r = std::stoi(parse_kv("r"));
        b.alphabet = Alphabet(parse_kv("alphabet"));
        if (b.n < 1 || b.r < 1) throw std::runtime_error("gbwt: n and r must be positive");
        for (int i = 1; i <= b.r; ++i) {
            b.out_bits.push_back(RankSelectBitVector::from_string(parse_kv("OUT" + std::to_string(i))));
            b.in_bits.push_back(RankSelectBitVector::from_string(parse_kv("IN" + std::to_string(i))));
            std::istringstream ss(next_line());
            std::string k;
            ss >> k;
            if (k != "LAB" + std::to_string(i)) throw std::runtime_error("gbwt: expected LAB line");
            std::vector<Label> labs;
            std::string t;
            while (ss >> t) labs.push_back(t);
            for (const Label& l : labs)
                if (!b.alphabet.covers(l))
                    throw std::runtime_error("gbwt: label uses character outside alphabet");
            b.labels.emplace_back(i, std::move(labs));
        }
        b.fin = RankSelectBitVector::from_string(parse_kv("FIN"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("gbwt: ") + e.what());
    }
    if (static_cast<int>(b.fin.size()) != b.n)
        throw std::runtime_error("gbwt: FIN length differs from n");
    for (int i = 1; i <= b.r; ++i)
        if (b.out_bits[i - 1].size() != b.labels[i - 1].size() + b.n ||
            b.in_bits[i - 1].size() != b.labels[i - 1].size() + b.n)
            throw std::runtime_error("gbwt: unary bitvector lengths inconsistent with labels");
    return b;
}

}  // namespace gna
