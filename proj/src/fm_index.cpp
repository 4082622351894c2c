#include "gna/fm_index.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gna {

FmIndex::FmIndex(GeneralizedBwt bwt, std::vector<std::string> state_names)
    : bwt_(std::move(bwt)), aux_(derive_aux(bwt_)), names_(std::move(state_names)) {
    if (static_cast<int>(names_.size()) != bwt_.n)
        throw std::invalid_argument("fm index: one external name per state required");
}

FmIndex FmIndex::build(const Gnfa& g, const StateOrder& order) {
    GeneralizedBwt b = build_bwt(g, order);
    std::vector<std::string> names;
    for (State u : order.sequence) names.push_back("u" + std::to_string(u));
    return FmIndex(std::move(b), std::move(names));
}

int FmIndex::op1_out_prefix(int k, const Label& rho) const {
    if (k < 0 || k > bwt_.n) throw std::out_of_range("op1: position out of range");
    int i = static_cast<int>(rho.size());
    if (k == 0 || i < 1 || i > bwt_.r) return 0;
    const RankSelectBitVector& outv = bwt_.out_bits[i - 1];
    std::size_t d = outv.rank(outv.select(k, true), false);
    return static_cast<int>(bwt_.labels[i - 1].rank(d, rho));
}

int FmIndex::op2_max_prefix_with_in_at_most(const Label& rho, int h) const {
    int i = static_cast<int>(rho.size());
    if (i < 1 || i > bwt_.r) return bwt_.n;  // no such edges at all
    const LabelSequence& lab = bwt_.labels[i - 1];
    int t = static_cast<int>(lab.rank(lab.size(), rho));
    if (t <= h) return bwt_.n;
    // position of the (h+1)-th rho-edge in the target-major edge order, via
    // the run-start bitvector, then map that edge to its target state
    std::size_t run = aux_.dicts[i - 1].rank(rho);            // rho's run index
    std::size_t g = aux_.aux[i - 1].select(run, true) + h;    // edge position
    const RankSelectBitVector& inv = bwt_.in_bits[i - 1];
    std::size_t f = inv.rank(inv.select(g, false), true) + 1; // its target
    return static_cast<int>(f) - 1;
}

std::optional<int> FmIndex::op3_min_prefix_with_in_at_least(const Label& rho, int z) const {
    if (z < 1) throw std::invalid_argument("op3: z must be at least 1");
    int k = op2_max_prefix_with_in_at_most(rho, z - 1);
    if (k == bwt_.n) return std::nullopt;
    return k + 1;
}

int FmIndex::op4_max_prefix_all_incoming_below(int i, const Label& q, bool tie_below) const {
    if (i < 1 || i > bwt_.r) throw std::out_of_range("op4: length out of range");
    if (bwt_.edge_count(i) == 0) return bwt_.n;
    std::optional<Label> y =
        tie_below ? aux_.dicts[i - 1].succ_strict(q) : aux_.dicts[i - 1].succ_or_equal(q);
    if (!y) return bwt_.n;
    // equal-length incoming labels are monotone along the order, so the first
    // state receiving y is the first receiving anything >= q
    return op2_max_prefix_with_in_at_most(*y, 0);
}

int FmIndex::op5_max_state_with_incoming_suffixed(int i, const Label& alpha) const {
    if (i < 1 || i > bwt_.r || static_cast<int>(alpha.size()) > i)
        throw std::out_of_range("op5: length out of range");
    if (bwt_.edge_count(i) == 0) return 0;
    // length-i strings suffixed by alpha form a co-lex-contiguous range whose
    // top is c^(i-|alpha|) alpha with c the largest character
    Label padded = Label(i - alpha.size(), bwt_.alphabet.max_char()) + alpha;
    std::optional<Label> a = aux_.dicts[i - 1].pred_or_equal(padded);
    if (!a || a->size() < alpha.size() ||
        a->compare(a->size() - alpha.size(), alpha.size(), alpha) != 0)
        return 0;
    const LabelSequence& lab = bwt_.labels[i - 1];
    int d = static_cast<int>(lab.rank(lab.size(), *a));
    std::optional<int> t = op3_min_prefix_with_in_at_least(*a, d);
    return t ? *t : 0;
}

GCounts FmIndex::g_counts(const Label& alpha, bool anchored) const {
    // Unanchored: counts for alpha itself, matches may start anywhere (op5
    // admits matches inside a single long label, op4 compares against alpha
    // as-is). Anchored: counts for alpha with a start-of-path marker in front,
    // smaller than every character. The marker occurs in no label, so the
    // single-label terms disappear, ties in op4 fall below the marked pattern,
    // and the decomposition terms reach k = m (whole prefix as one label,
    // extending the one-state seed interval).
    const int n = bwt_.n, r = bwt_.r;
    const int m_total = static_cast<int>(alpha.size());
    GCounts gc;
    gc.a.push_back(0);
    gc.b.push_back(anchored ? 1 : n);
    for (int m = 1; m <= m_total; ++m) {
        Label prefix = alpha.substr(0, m);
        int a_m = n;
        std::vector<std::pair<Label, int>> pending_ge;  // (suffix, g_k) with g_k > f_k
        int k_max = anchored ? std::min(r, m) : std::min(r, m - 1);
        for (int k = 1; k <= k_max; ++k) {
            Label s = alpha.substr(m - k, k);
            int f_k = op1_out_prefix(gc.a[m - k], s);
            int g_k = op1_out_prefix(gc.b[m - k], s);
            assert(g_k >= f_k);
            a_m = std::min(a_m, op2_max_prefix_with_in_at_most(s, f_k));
            if (g_k > f_k) pending_ge.emplace_back(std::move(s), g_k);
        }
        for (int i = 1; i <= r; ++i)
            a_m = std::min(a_m, op4_max_prefix_all_incoming_below(i, prefix, anchored));
        int b_m = a_m;
        if (!anchored)
            for (int i = m; i <= r; ++i)
                b_m = std::max(b_m, op5_max_state_with_incoming_suffixed(i, prefix));
        for (auto& [s, g_k] : pending_ge) {
            std::optional<int> t = op3_min_prefix_with_in_at_least(s, g_k);
            b_m = std::max(b_m, t ? *t : 0);
        }
        gc.a.push_back(a_m);
        gc.b.push_back(b_m);
    }
    return gc;
}

StateInterval FmIndex::smlg(const Label& alpha) const {
    if (!bwt_.alphabet.covers(alpha)) return {};  // no path can spell alpha
    GCounts gc = g_counts(alpha);
    return {gc.a.back() + 1, gc.b.back()};
}

bool FmIndex::member(const Label& alpha) const {
    if (!bwt_.alphabet.covers(alpha)) return false;
    GCounts gc = g_counts(alpha, /*anchored=*/true);
    int a = gc.a.back(), b = gc.b.back();
    if (a >= b) return false;
    return bwt_.fin.rank(b, true) > bwt_.fin.rank(a, true);
}

}  // namespace gna
