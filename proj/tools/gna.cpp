#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gna/expand.hpp"
#include "gna/fm_index.hpp"
#include "gna/gbwt.hpp"
#include "gna/oracle.hpp"
#include "gna/partition.hpp"
#include "gna/random_gen.hpp"
#include "gna/wheeler.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string state_name(gna::State u) { return "u" + std::to_string(u); }

gna::State parse_state_name(const std::string& tok) {
    std::string body = (!tok.empty() && tok[0] == 'u') ? tok.substr(1) : tok;
    try {
        return std::stoi(body);
    } catch (...) {
        throw std::runtime_error("bad state name '" + tok + "'");
    }
}

gna::StateOrder read_order_file(const std::string& path, int n) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    gna::StateOrder o;
    std::string tok;
    while (f >> tok) o.sequence.push_back(parse_state_name(tok));
    if (o.n() != n) throw std::runtime_error("order file must list every state exactly once");
    o.positions();  // permutation check
    return o;
}

std::vector<gna::Label> read_patterns_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<gna::Label> pats;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        pats.push_back(line == "\"\"" ? gna::Label{} : line);
    }
    return pats;
}

void write_index_file(const std::string& path, const gna::GeneralizedBwt& bwt,
                      const std::vector<std::string>& names) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    gna::write_gbwt(f, bwt);
    f << "order";
    for (const std::string& nm : names) f << ' ' << nm;
    f << "\n";
}

gna::FmIndex read_index_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    gna::GeneralizedBwt bwt = gna::read_gbwt(f);
    std::string line;
    std::vector<std::string> names;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw != "order") throw std::runtime_error("index: expected 'order' line");
        std::string tok;
        while (ss >> tok) names.push_back(tok);
        break;
    }
    if (static_cast<int>(names.size()) != bwt.n)
        throw std::runtime_error("index: order line must name every state");
    return gna::FmIndex(std::move(bwt), std::move(names));
}

int cmd_validate(const std::string& file) {
    gna::Gnfa g = gna::parse_automaton_file(file);
    gna::AutomatonClass cls = gna::classify(g);
    gna::Gnfa t = gna::trim(g);
    std::cout << "states " << g.n << " edges " << g.edges.size() << "\n";
    std::cout << "epsilon-edges " << (cls.has_epsilon_edge ? "yes" : "no") << "\n";
    std::cout << "nfa " << (cls.is_nfa ? "yes" : "no") << "\n";
    std::cout << "gdfa " << (cls.is_gdfa ? "yes" : "no") << "\n";
    std::cout << "dfa " << (cls.is_dfa ? "yes" : "no") << "\n";
    for (const auto& v : cls.violations)
        std::cout << "violation state " << state_name(v.state) << ": " << v.reason << " ('" << v.a
                  << "'" << (v.b.empty() ? "" : ", '" + v.b + "'") << ")\n";
    if (t.language_empty()) {
        std::cout << "language empty\n";
        return kNegative;
    }
    if (t.n != g.n) std::cout << "trim would remove " << (g.n - t.n) << " state(s)\n";
    return cls.is_gdfa ? kOk : kNegative;
}

int cmd_trim(const std::string& in, const std::string& out) {
    gna::Gnfa t = gna::trim(gna::parse_automaton_file(in));
    gna::write_automaton_file(out, t);
    if (t.language_empty()) {
        std::cout << "language empty\n";
        return kNegative;
    }
    return kOk;
}

int cmd_expand(const std::string& in, const std::string& out) {
    gna::ExpandResult ex = gna::expand(gna::parse_automaton_file(in));
    gna::write_automaton_file(out, ex.nfa);
    std::cout << "original states keep ids 1.." << ex.original_states << ", expansion added "
              << (ex.nfa.n - ex.original_states) << " state(s)\n";
    return kOk;
}

int cmd_minimize(const std::string& in, const std::string& out) {
    gna::Gnfa m = gna::minimize(gna::parse_automaton_file(in));
    gna::write_automaton_file(out, m);
    std::cout << "states " << m.n << "\n";
    return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
    bool iso = gna::gdfa_isomorphic(gna::parse_automaton_file(a), gna::parse_automaton_file(b));
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return iso ? kOk : kNegative;
}

int cmd_wheeler(const std::string& in, const std::string& emit_order) {
    gna::Gnfa g = gna::parse_automaton_file(in);
    gna::WheelerResult wr = gna::gdfa_wheeler_order(g);
    if (!wr.wheeler) {
        std::cout << "not wheeler: witness " << state_name(wr.witness.first) << " "
                  << state_name(wr.witness.second) << "\n";
        return kNegative;
    }
    std::ostringstream names;
    for (int i = 0; i < wr.order.n(); ++i)
        names << (i ? " " : "") << state_name(wr.order.sequence[i]);
    std::cout << names.str() << "\n";
    if (!emit_order.empty()) {
        std::ofstream f(emit_order);
        if (!f) throw std::runtime_error("cannot open " + emit_order + " for writing");
        f << names.str() << "\n";
    }
    return kOk;
}

int cmd_check_order(const std::string& in, const std::string& order_file, int bound) {
    gna::Gnfa g = gna::parse_automaton_file(in);
    gna::StateOrder o = read_order_file(order_file, g.n);
    gna::OrderCheckReport rep = gna::check_wheeler_order(g, o, bound);
    std::cout << "initial-first " << (rep.s_first ? "yes" : "no") << "\n";
    std::cout << "containment "
              << (rep.p1 == gna::CheckVerdict::exact_pass
                      ? "holds"
                      : rep.p1 == gna::CheckVerdict::bounded_pass
                            ? "holds up to bound " + std::to_string(bound)
                            : "fails")
              << "\n";
    std::cout << "label-monotonicity " << (rep.p2 ? "holds" : "fails") << "\n";
    std::cout << "source-monotonicity " << (rep.p3 ? "holds" : "fails") << "\n";
    if (!rep.detail.empty()) std::cout << "detail: " << rep.detail << "\n";
    return rep.all_hold() ? kOk : kNegative;
}

int cmd_bwt_build(const std::string& in, const std::string& order_file, const std::string& out) {
    gna::Gnfa g = gna::parse_automaton_file(in);
    gna::StateOrder o = read_order_file(order_file, g.n);
    gna::GeneralizedBwt b = gna::build_bwt(g, o);
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    gna::write_gbwt(f, b);
    std::cout << "payload bits " << b.payload_bits() << "\n";
    return kOk;
}

int cmd_bwt_decode(const std::string& in, const std::string& out) {
    std::ifstream f(in);
    if (!f) throw std::runtime_error("cannot open " + in);
    gna::DecodeResult res = gna::decode_bwt(gna::read_gbwt(f));
    gna::write_automaton_file(out, res.automaton);
    return kOk;
}

int cmd_index_build(const std::string& in, const std::string& order_file, const std::string& out) {
    gna::Gnfa g = gna::parse_automaton_file(in);
    gna::StateOrder o;
    if (order_file.empty()) {
        gna::WheelerResult wr = gna::gdfa_wheeler_order(g);
        if (!wr.wheeler) {
            std::cout << "not wheeler: witness " << state_name(wr.witness.first) << " "
                      << state_name(wr.witness.second) << "\n";
            return kNegative;
        }
        o = wr.order;
    } else {
        o = read_order_file(order_file, g.n);
        if (!gna::classify(g).is_gdfa)
            std::cerr << "note: containment property of the supplied order is confirmed only up to "
                         "a bounded enumeration\n";
    }
    gna::FmIndex idx = gna::FmIndex::build(g, o);
    write_index_file(out, idx.bwt(), idx.state_names());
    std::cout << "indexed " << idx.n() << " states, payload bits " << idx.bwt().payload_bits()
              << "\n";
    return kOk;
}

int cmd_query(const std::string& idx_file, const std::string& pattern, const std::string& patterns,
              bool member, bool as_json) {
    gna::FmIndex idx = read_index_file(idx_file);
    std::vector<gna::Label> pats;
    if (!patterns.empty()) pats = read_patterns_file(patterns);
    if (!pattern.empty() || patterns.empty())
        pats.insert(pats.begin(), pattern == "\"\"" ? gna::Label{} : pattern);
    bool any_nonmember = false;
    for (const gna::Label& p : pats) {
        gna::StateInterval iv = idx.smlg(p);
        std::vector<std::string> states;
        for (int q = iv.lo; q <= iv.hi; ++q) states.push_back(idx.state_names()[q - 1]);
        bool is_member = member ? idx.member(p) : false;
        if (member && !is_member) any_nonmember = true;
        if (as_json) {
            json j{{"pattern", p}, {"interval", {iv.lo, iv.hi}}, {"states", states},
                   {"count", iv.count()}};
            if (member) j["member"] = is_member;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "pattern '" << p << "' interval [" << iv.lo << "," << iv.hi << "] states";
            for (const std::string& s : states) std::cout << ' ' << s;
            if (member) std::cout << " member " << (is_member ? "yes" : "no");
            std::cout << "\n";
        }
    }
    return member && any_nonmember ? kNegative : kOk;
}

int cmd_xcheck(const std::string& in, const std::string& patterns, std::uint64_t seed,
               bool have_seed) {
    gna::Gnfa g = gna::parse_automaton_file(in);
    gna::WheelerResult wr = gna::gdfa_wheeler_order(g);
    if (!wr.wheeler) {
        std::cout << "not wheeler\n";
        return kNegative;
    }
    gna::FmIndex idx = gna::FmIndex::build(g, wr.order);
    std::vector<int> pos = wr.order.positions();
    std::vector<gna::Label> pats = read_patterns_file(patterns);
    if (have_seed) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 100; ++i) pats.push_back(gna::random_pattern(rng, g, 12));
    }
    int failures = 0;
    for (const gna::Label& p : pats) {
        gna::StateInterval iv = idx.smlg(p);
        std::set<gna::State> expect = gna::oracle::naive_smlg(g, p);
        std::set<int> expect_pos;
        for (gna::State u : expect) expect_pos.insert(pos[u]);
        std::set<int> got;
        for (int q = iv.lo; q <= iv.hi; ++q) got.insert(q);
        bool ok = got == expect_pos && idx.member(p) == gna::oracle::naive_member(g, p);
        if (!ok) {
            ++failures;
            std::cout << "MISMATCH pattern '" << p << "'\n";
        }
    }
    std::cout << pats.size() << " patterns, " << failures << " mismatches\n";
    return failures ? kNegative : kOk;
}

int cmd_gen(int states, int max_label, const std::string& alphabet, std::uint64_t seed,
            const std::string& out) {
    gna::GenParams p{states, max_label, alphabet};
    std::mt19937_64 rng(seed);
    std::optional<gna::Gnfa> g = gna::rejection_sample_wheeler_gdfa(rng, p, 100000);
    if (!g) {
        std::cout << "no wheeler automaton found within the attempt cap\n";
        return kNegative;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << "# gen states=" << states << " max-label=" << max_label << " alphabet=" << alphabet
      << " seed=" << seed << "\n";
    f << gna::serialize_automaton(*g);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-automaton toolkit: validation, minimization, Wheeler orders, "
                 "transform and index queries"};
    app.require_subcommand(1);

    std::string file_a, file_b, out, order_file, pattern, patterns, alphabet = "abcd";
    int bound = 8, states = 10, max_label = 4;
    std::uint64_t seed = 0;
    bool member = false, as_json = false;

    auto* validate = app.add_subcommand("validate", "classify an automaton file");
    validate->add_option("file", file_a)->required();

    auto* trim_cmd = app.add_subcommand("trim", "remove unreachable and dead states");
    trim_cmd->add_option("file", file_a)->required();
    trim_cmd->add_option("-o,--output", out)->required();

    auto* expand_cmd = app.add_subcommand("expand", "expand string edges to character edges");
    expand_cmd->add_option("file", file_a)->required();
    expand_cmd->add_option("-o,--output", out)->required();

    auto* minimize_cmd = app.add_subcommand("minimize", "minimal equivalent automaton");
    minimize_cmd->add_option("file", file_a)->required();
    minimize_cmd->add_option("-o,--output", out)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism of two automata");
    iso->add_option("a", file_a)->required();
    iso->add_option("b", file_b)->required();

    auto* wheeler = app.add_subcommand("wheeler", "Wheelerness test and order");
    wheeler->add_option("file", file_a)->required();
    wheeler->add_option("--emit-order", order_file);

    auto* check_order = app.add_subcommand("check-order", "verify a proposed order");
    check_order->add_option("file", file_a)->required();
    check_order->add_option("--order", order_file)->required();
    check_order->add_option("--bound", bound);

    auto* bwt = app.add_subcommand("bwt", "transform build/decode");
    auto* bwt_build = bwt->add_subcommand("build");
    bwt_build->add_option("file", file_a)->required();
    bwt_build->add_option("--order", order_file)->required();
    bwt_build->add_option("-o,--output", out)->required();
    auto* bwt_decode = bwt->add_subcommand("decode");
    bwt_decode->add_option("file", file_a)->required();
    bwt_decode->add_option("-o,--output", out)->required();
    bwt->require_subcommand(1);

    auto* index = app.add_subcommand("index", "index construction");
    auto* index_build = index->add_subcommand("build");
    index_build->add_option("file", file_a)->required();
    index_build->add_option("--order", order_file);
    index_build->add_option("-o,--output", out)->required();
    index->require_subcommand(1);

    auto* query = app.add_subcommand("query", "pattern queries against an index");
    query->add_option("index", file_a)->required();
    query->add_option("--pattern", pattern);
    query->add_option("--patterns", patterns);
    query->add_flag("--member", member);
    query->add_flag("--json", as_json);

    auto* xcheck = app.add_subcommand("xcheck", "cross-check index answers against brute force");
    xcheck->add_option("file", file_a)->required();
    xcheck->add_option("--patterns", patterns)->required();
    auto* seed_opt = xcheck->add_option("--seed", seed);

    auto* gen = app.add_subcommand("gen", "sample a random Wheeler automaton");
    gen->add_option("--states", states);
    gen->add_option("--max-label", max_label);
    gen->add_option("--alphabet", alphabet);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(file_a);
        if (*trim_cmd) return cmd_trim(file_a, out);
        if (*expand_cmd) return cmd_expand(file_a, out);
        if (*minimize_cmd) return cmd_minimize(file_a, out);
        if (*iso) return cmd_iso(file_a, file_b);
        if (*wheeler) return cmd_wheeler(file_a, order_file);
        if (*check_order) return cmd_check_order(file_a, order_file, bound);
        if (*bwt_build) return cmd_bwt_build(file_a, order_file, out);
        if (*bwt_decode) return cmd_bwt_decode(file_a, out);
        if (*index_build) return cmd_index_build(file_a, order_file, out);
        if (*query) {
            if (pattern.empty() && patterns.empty())
                throw std::invalid_argument("query needs --pattern or --patterns");
            return cmd_query(file_a, pattern, patterns, member, as_json);
        }
        if (*xcheck) return cmd_xcheck(file_a, patterns, seed, seed_opt->count() > 0);
        if (*gen) return cmd_gen(states, max_label, alphabet, seed, out);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
