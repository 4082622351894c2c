#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "gna/automata.hpp"

namespace gna {

/// Bitvector with rank/select; 1-based positions throughout, matching the
/// arithmetic of the index formulas. Rank directory sampled per 64-bit word.
class RankSelectBitVector {
public:
    RankSelectBitVector() = default;
    explicit RankSelectBitVector(const std::vector<bool>& bits);
    static RankSelectBitVector from_string(std::string_view bits);  // '0'/'1'

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const;                    // 1-based
    std::size_t count(bool c) const;
    std::size_t rank(std::size_t i, bool c) const;    // occurrences of c in [1..i]; rank(0)=0
    std::size_t select(std::size_t j, bool c) const;  // position of j-th c; throws std::out_of_range
    std::string to_string() const;

    friend bool operator==(const RankSelectBitVector& a, const RankSelectBitVector& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> rank1_;  // ones before each word
};

/// Sequence of equal-length labels with access/rank/select.
class LabelSequence {
public:
    LabelSequence() = default;
    LabelSequence(int label_len, std::vector<Label> items);

    int label_len() const { return len_; }
    std::size_t size() const { return items_.size(); }
    const Label& access(std::size_t k) const;                    // 1-based
    std::size_t rank(std::size_t k, const Label& rho) const;     // occurrences in [1..k]
    std::size_t select(std::size_t j, const Label& rho) const;   // throws std::out_of_range
    const std::vector<Label>& items() const { return items_; }

    friend bool operator==(const LabelSequence& a, const LabelSequence& b) {
        return a.len_ == b.len_ && a.items_ == b.items_;
    }

private:
    int len_ = 0;
    std::vector<Label> items_;
    std::unordered_map<Label, std::vector<std::uint32_t>> positions_;
};

/// Fully indexable dictionary of distinct equal-length labels, sorted
/// co-lexicographically. Queries may have any length; comparisons use the
/// global mixed-length co-lex order (a proper suffix precedes its
/// superstring).
class LabelDictionary {
public:
    LabelDictionary() = default;
    LabelDictionary(const Alphabet& sigma, int label_len, std::vector<Label> members);

    int label_len() const { return len_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Label>& members() const { return members_; }
    bool member(const Label& q) const;
    std::size_t rank(const Label& q) const;  // number of members co-lex <= q
    const Label& select(std::size_t j) const;
    std::optional<Label> pred_strict(const Label& q) const;    // largest member < q
    std::optional<Label> pred_or_equal(const Label& q) const;  // largest member <= q
    std::optional<Label> succ_or_equal(const Label& q) const;  // smallest member >= q
    std::optional<Label> succ_strict(const Label& q) const;    // smallest member > q

private:
    Alphabet sigma_;
    int len_ = 0;
    std::vector<Label> members_;
};

}  // namespace gna
