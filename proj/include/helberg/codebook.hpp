#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "helberg/codeword.hpp"

namespace helberg {

/// Default cap on exhaustive q^n enumerations.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// True iff x has length n, valid symbols, and M(x) = r (mod m).
bool contains(const CodeParams& params, const Word& x);

/// Visits all q^n words of length n in lexicographic order together with
/// their moments (weights[i] is w_{i+1}; at least n entries required). The
/// moment is maintained incrementally, so the whole sweep costs O(q^n)
/// big-integer additions rather than O(n q^n). Throws budget_error up front
/// if q^n exceeds the budget.
void for_each_word(unsigned q, std::size_t n, const std::vector<Int>& weights,
                   std::uint64_t budget,
                   const std::function<void(const Word&, const Int&)>& visit);

/// All members of C_n(q, d, m, r) in lexicographic order.
std::vector<Word> enumerate(const CodeParams& params,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// |C_n(q, d, m, r)| by exhaustive count.
std::uint64_t code_size(const CodeParams& params,
                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Outcome of a best-residue search at m = w_{n+1}.
struct SizeSearchResult {
    unsigned q = 0;
    unsigned d = 0;
    std::size_t n = 0;
    Int m;
    std::uint64_t max_size = 0;        ///< N_n(q,d)
    std::vector<Int> argmax_residues;  ///< R_n(q,d), ascending
    /// Full residue -> size histogram (ascending by residue, zero-count
    /// residues omitted); only populated on request.
    std::optional<std::vector<std::pair<Int, std::uint64_t>>> per_residue_sizes;
};

/// Single pass over all q^n words bucketing moments mod w_{n+1}: yields the
/// largest codebook size and every residue that attains it.
SizeSearchResult max_size_search(unsigned q, unsigned d, std::size_t n,
                                 bool with_histogram = false,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace helberg
