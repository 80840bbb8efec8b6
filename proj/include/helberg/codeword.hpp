#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helberg/params.hpp"

namespace helberg {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Throws std::invalid_argument if any symbol lies outside {0..q-1}.
void validate_symbols(unsigned q, const Word& w);

/// True iff needle can be obtained from haystack by deleting symbols.
bool is_subsequence(const Word& needle, const Word& haystack);

/// Moment M(w) = sum_i w_i(q,d) * symbol_i. Accepts any length up to n, so
/// deleted words can be weighed against the prefix weights directly.
Int moment(const CodeParams& params, const Word& w);

/// Moment of the first k symbols only; k may not exceed the word length.
Int truncated_moment(const CodeParams& params, const Word& w, std::size_t k);

/// Delta(x, y) = M(x) - M(y) for two words of length n.
Int delta(const CodeParams& params, const Word& x, const Word& y);

/// True iff M(x) = M(y) (mod m).
bool congruent(const CodeParams& params, const Word& x, const Word& y);

/// Parses "12202212" (one digit per symbol) or "1,2,20,12" (comma separated
/// decimal). The digit form is only unambiguous for q <= 10 but both forms
/// are accepted whenever every symbol fits the alphabet. Empty text parses
/// to the empty word.
Word parse_word(unsigned q, const std::string& text);

/// Inverse of parse_word: digit string for q <= 10, comma separated above.
std::string format_word(unsigned q, const Word& w);

}  // namespace helberg
