#pragma once

#include <iosfwd>

#include "gna/succinct.hpp"
#include "gna/wheeler.hpp"

namespace gna {

/// The transform of a Wheeler automaton under a fixed order: per label length
/// i, unary out/in-degree bitvectors and the source-major label sequence, plus
/// the final-state bitvector. States are identified with their order position.
struct GeneralizedBwt {
    int n = 0;  // states
    int r = 0;  // max label length
    Alphabet alphabet;
    std::vector<RankSelectBitVector> out_bits;  // [i-1], length e_i + n
    std::vector<RankSelectBitVector> in_bits;   // [i-1], length e_i + n
    std::vector<LabelSequence> labels;          // [i-1], e_i items
    RankSelectBitVector fin;                    // length n

    std::size_t edge_count(int i) const { return labels[i - 1].size(); }
    std::size_t total_edges() const;
    /// informational payload size in bits (labels + unary degrees + finals)
    std::size_t payload_bits() const;
};

/// Per-length helper structures rederived from the transform: the run-start
/// bitvector over edges sorted by (target, label) and the dictionary of
/// distinct labels.
struct IndexAux {
    std::vector<RankSelectBitVector> aux;   // [i-1], e_i bits
    std::vector<LabelDictionary> dicts;     // [i-1]
};

/// Build the transform. The order is verified first: the two local edge
/// properties and initial-first must hold exactly; for GDFAs the containment
/// property is verified exactly as well. Throws std::invalid_argument when
/// verification fails.
GeneralizedBwt build_bwt(const Gnfa& g, const StateOrder& order);

IndexAux derive_aux(const GeneralizedBwt& b);

struct DecodeResult {
    Gnfa automaton;   // states renamed to order positions 1..n
    StateOrder order; // the identity on those positions
};

/// Invert the transform: recover the automaton (up to the renaming by order
/// position). Throws std::runtime_error on inconsistent components.
DecodeResult decode_bwt(const GeneralizedBwt& b);

// text serialization: `gbwt v1` header, then n/r/alphabet, then per-length
// OUTi/INi/LABi lines, then FIN
void write_gbwt(std::ostream& out, const GeneralizedBwt& b);
GeneralizedBwt read_gbwt(std::istream& in);  // throws std::runtime_error

}  // namespace gna
