#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "helberg/channel.hpp"
#include "helberg/codebook.hpp"

namespace helberg {

/// Every codeword that can yield xd by deleting exactly n - len(xd) symbols,
/// found by inserting all possible symbol tuples at all position choices and
/// filtering on membership. Independent of the sequential decoders; by the
/// code's correction guarantee the result is a singleton whenever xd really
/// came from a codeword through at most d deletions.
std::set<Word> brute_decode_deletions(const CodeParams& params, const Word& xd);

/// Every codeword within total insertion+deletion distance d of y, found by
/// sweeping the whole codebook. len(y) may differ from n by at most d.
std::set<Word> brute_decode_indels(const CodeParams& params, const Word& y,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Fewest insertions+deletions turning x into y: |x| + |y| - 2 LCS(x, y).
std::size_t indel_distance(const Word& x, const Word& y);

/// Two distinct members reaching the same shortened word.
struct Counterexample {
    Word x;
    Word y;
    DeletionPattern from_x;
    DeletionPattern from_y;
};

struct VerificationReport {
    unsigned q = 0;
    unsigned d = 0;
    std::size_t n = 0;
    Int m;
    Int r;
    std::uint64_t members = 0;        ///< codewords enumerated
    std::uint64_t deleted_words = 0;  ///< (member, pattern) instances checked
    std::vector<Counterexample> counterexamples;

    bool pass() const noexcept { return counterexamples.empty(); }
};

/// Exhaustively confirms the d-deletion correction guarantee: no two
/// distinct members may share a common subsequence reachable by deleting
/// up to d symbols from each. Implemented by bucketing every deleted word
/// of every member; a bucket collision across members is a counterexample.
VerificationReport verify_code(const CodeParams& params,
                               std::uint64_t budget = kDefaultEnumerationBudget);

/// Same check over an explicit word list (all words must have length n and
/// valid symbols). verify_code is this applied to enumerate(params).
VerificationReport verify_members(const CodeParams& params,
                                  const std::vector<Word>& members);

}  // namespace helberg
