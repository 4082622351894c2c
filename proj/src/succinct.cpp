#include "gna/succinct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gna {

RankSelectBitVector::RankSelectBitVector(const std::vector<bool>& bits) : n_(bits.size()) {
    words_.assign((n_ + 63) / 64, 0);
    for (std::size_t i = 0; i < n_; ++i)
        if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    rank1_.assign(words_.size() + 1, 0);
    for (std::size_t w = 0; w < words_.size(); ++w)
        rank1_[w + 1] = rank1_[w] + std::popcount(words_[w]);
}

RankSelectBitVector RankSelectBitVector::from_string(std::string_view bits) {
    std::vector<bool> v;
    v.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
        v.push_back(c == '1');
    }
    return RankSelectBitVector(v);
}

bool RankSelectBitVector::get(std::size_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("bitvector position");
    --i;
    return (words_[i / 64] >> (i % 64)) & 1;
}

std::size_t RankSelectBitVector::count(bool c) const {
    std::size_t ones = rank1_.empty() ? 0 : rank1_.back();
    return c ? ones : n_ - ones;
}

std::size_t RankSelectBitVector::rank(std::size_t i, bool c) const {
    if (i > n_) throw std::out_of_range("bitvector rank position");
    if (i == 0) return 0;
    std::size_t w = i / 64, rem = i % 64;
    std::size_t ones = rank1_[w];
    if (rem) ones += std::popcount(words_[w] & ((std::uint64_t{1} << rem) - 1));
    return c ? ones : i - ones;
}

std::size_t RankSelectBitVector::select(std::size_t j, bool c) const {
    if (j < 1 || j > count(c)) throw std::out_of_range("bitvector select argument");
    // binary search the word containing the j-th c, then scan its bits
    std::size_t lo = 0, hi = words_.size();
    auto ranked = [&](std::size_t w) { return c ? rank1_[w] : w * 64 - rank1_[w]; };
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (ranked(mid) < j)
            lo = mid;
        else
            hi = mid;
    }
    std::size_t seen = ranked(lo);
    std::uint64_t word = words_[lo];
    for (std::size_t b = 0; b < 64; ++b) {
        bool bit = (word >> b) & 1;
        if (bit == c && ++seen == j) return lo * 64 + b + 1;
    }
    throw std::logic_error("bitvector select: inconsistent directory");
}

std::string RankSelectBitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if ((words_[i / 64] >> (i % 64)) & 1) s[i] = '1';
    return s;
}

LabelSequence::LabelSequence(int label_len, std::vector<Label> items)
    : len_(label_len), items_(std::move(items)) {
    for (std::size_t k = 0; k < items_.size(); ++k) {
        if (static_cast<int>(items_[k].size()) != len_)
            throw std::invalid_argument("label sequence: wrong-length item");
        positions_[items_[k]].push_back(static_cast<std::uint32_t>(k + 1));
    }
}

const Label& LabelSequence::access(std::size_t k) const {
    if (k < 1 || k > items_.size()) throw std::out_of_range("label sequence position");
    return items_[k - 1];
}

std::size_t LabelSequence::rank(std::size_t k, const Label& rho) const {
    if (static_cast<int>(rho.size()) != len_)
        throw std::domain_error("label sequence rank: wrong-length label");
    if (k > items_.size()) throw std::out_of_range("label sequence rank position");
    auto it = positions_.find(rho);
    if (it == positions_.end()) return 0;
    const auto& pos = it->second;
    return std::upper_bound(pos.begin(), pos.end(), static_cast<std::uint32_t>(k)) - pos.begin();
}

std::size_t LabelSequence::select(std::size_t j, const Label& rho) const {
    if (static_cast<int>(rho.size()) != len_)
        throw std::domain_error("label sequence select: wrong-length label");
    auto it = positions_.find(rho);
    if (it == positions_.end() || j < 1 || j > it->second.size())
        throw std::out_of_range("label sequence select argument");
    return it->second[j - 1];
}

LabelDictionary::LabelDictionary(const Alphabet& sigma, int label_len, std::vector<Label> members)
    : sigma_(sigma), len_(label_len), members_(std::move(members)) {
    for (const Label& m : members_)
        if (static_cast<int>(m.size()) != len_)
            throw std::invalid_argument("label dictionary: wrong-length member");
    std::sort(members_.begin(), members_.end(), ColexLess{&sigma_});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool LabelDictionary::member(const Label& q) const {
    return static_cast<int>(q.size()) == len_ &&
           std::binary_search(members_.begin(), members_.end(), q, ColexLess{&sigma_});
}

std::size_t LabelDictionary::rank(const Label& q) const {
    return std::upper_bound(members_.begin(), members_.end(), q, ColexLess{&sigma_}) -
           members_.begin();
}

const Label& LabelDictionary::select(std::size_t j) const {
    if (j < 1 || j > members_.size()) throw std::out_of_range("label dictionary select");
    return members_[j - 1];
}

std::optional<Label> LabelDictionary::pred_strict(const Label& q) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), q, ColexLess{&sigma_});
    if (it == members_.begin()) return std::nullopt;
    return *std::prev(it);
}

std::optional<Label> LabelDictionary::pred_or_equal(const Label& q) const {
    auto it = std::upper_bound(members_.begin(), members_.end(), q, ColexLess{&sigma_});
    if (it == members_.begin()) return std::nullopt;
    return *std::prev(it);
}

std::optional<Label> LabelDictionary::succ_or_equal(const Label& q) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), q, ColexLess{&sigma_});
    if (it == members_.end()) return std::nullopt;
    return *it;
}

std::optional<Label> LabelDictionary::succ_strict(const Label& q) const {
    auto it = std::upper_bound(members_.begin(), members_.end(), q, ColexLess{&sigma_});
    if (it == members_.end()) return std::nullopt;
    return *it;
}

}  // namespace gna
