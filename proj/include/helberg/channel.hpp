#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "helberg/codeword.hpp"

namespace helberg {

/// A set of 1-based deletion positions, kept sorted. Two patterns compare
/// equal iff they denote the same position set.
class DeletionPattern {
public:
    DeletionPattern() = default;

    /// Sorts the positions; throws std::invalid_argument on duplicates or
    /// on a position of zero.
    explicit DeletionPattern(std::vector<std::size_t> positions);

    /// Parses "3,5". Empty text yields the empty pattern.
    static DeletionPattern parse(const std::string& text);

    const std::vector<std::size_t>& positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }

    /// "3,5"; empty string for the empty pattern.
    std::string to_string() const;

    friend bool operator==(const DeletionPattern&, const DeletionPattern&) = default;

private:
    std::vector<std::size_t> positions_;
};

/// x with the symbols at the pattern's positions removed, order preserved.
/// Throws std::invalid_argument if any position exceeds the length.
Word delete_at(const Word& x, const DeletionPattern& pattern);

/// One insertion step: place symbol at the 1-based position, shifting the
/// tail right. Position len(word)+1 appends.
struct Insertion {
    std::size_t position;
    Symbol symbol;
};

/// Applies the insertions left to right, each against the grown word.
Word insert_at(const Word& x, const std::vector<Insertion>& entries, unsigned q);

/// Deletes a uniformly random c-subset of positions. Deterministic for a
/// given seed; returns the shortened word and the pattern that was applied.
std::pair<Word, DeletionPattern> random_deletions(const Word& x, std::size_t c,
                                                  std::uint64_t seed);

/// Deletion index I = M(x) - M(xd). The caller guarantees xd arose from x
/// by deletions; this just weighs both words.
Int index_of(const CodeParams& params, const Word& x, const Word& xd);

}  // namespace helberg
