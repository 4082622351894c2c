#pragma once

#include "gna/gbwt.hpp"

namespace gna {

struct StateInterval {
    int lo = 1, hi = 0;  // empty iff lo > hi
    bool empty() const { return lo > hi; }
    int count() const { return empty() ? 0 : hi - lo + 1; }
    friend bool operator==(const StateInterval& a, const StateInterval& b) {
        return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
    }
};

struct GCounts {
    std::vector<int> a;  // a[m] = |G_below(prefix of length m)|
    std::vector<int> b;  // b[m] = |G_below_or_matched(prefix of length m)|
};

/// Query engine over the transform: elementary rank/select arithmetic plus the
/// per-prefix counting recursion, answering SMLG intervals and membership.
class FmIndex {
public:
    FmIndex(GeneralizedBwt bwt, std::vector<std::string> state_names);
    static FmIndex build(const Gnfa& g, const StateOrder& order);  // names "u<id>"

    const GeneralizedBwt& bwt() const { return bwt_; }
    const IndexAux& aux() const { return aux_; }
    int n() const { return bwt_.n; }
    int r() const { return bwt_.r; }
    const std::vector<std::string>& state_names() const { return names_; }

    /// edges labeled rho leaving the first k states
    int op1_out_prefix(int k, const Label& rho) const;
    /// largest k with at most h rho-edges entering the first k states
    int op2_max_prefix_with_in_at_most(const Label& rho, int h) const;
    /// smallest t with at least z rho-edges entering the first t states
    std::optional<int> op3_min_prefix_with_in_at_least(const Label& rho, int z) const;
    /// largest h such that every length-i label entering the first h states is
    /// strictly co-lex below q. With tie_below=true a label equal to q also
    /// counts as below, as needed when q carries an implicit start-of-path
    /// marker in front (anchored queries).
    int op4_max_prefix_all_incoming_below(int i, const Label& q, bool tie_below = false) const;
    /// largest position whose state has an incoming length-i label suffixed by
    /// alpha; 0 if none
    int op5_max_state_with_incoming_suffixed(int i, const Label& alpha) const;

    GCounts g_counts(const Label& alpha, bool anchored = false) const;
    StateInterval smlg(const Label& alpha) const;
    bool member(const Label& alpha) const;

private:
    GeneralizedBwt bwt_;
    IndexAux aux_;
    std::vector<std::string> names_;  // [position-1] -> external name
};

}  // namespace gna
