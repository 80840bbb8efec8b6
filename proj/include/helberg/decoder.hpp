#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "helberg/codeword.hpp"

namespace helberg {

/// One decoding step. A shift moves the received symbol left of the
/// placeholder block past it (position is the scan position P, symbol the
/// moved symbol, placeholder zero). A resolve pins down placeholder number
/// `placeholder` (1-based from the left) to `symbol` at `position`.
/// index_after is the deletion index I once the step has been applied.
struct TraceStep {
    enum class Kind { Shift, Resolve };
    Kind kind = Kind::Shift;
    std::size_t position = 0;
    Symbol symbol = 0;
    std::size_t placeholder = 0;
    Int index_after;
};

struct DecodeTrace {
    Int initial_index;
    std::vector<TraceStep> steps;

    /// One step per line:
    ///   shift P=8 sym=2 I=706
    ///   resolve k=1 val=2 P=6 I=0
    std::string to_text() const;
};

struct DecodeResult {
    Word codeword;
    DecodeTrace trace;
};

/// Recovers the full moment of the transmitted codeword from a deleted word:
/// M(x) = r + m if M(xd) > r, else r. Sound because deletions only lower the
/// moment and M(x) < 2m whenever m >= w_{n+1}. Requires d >= 2 and a
/// deletion count between 1 and d.
Int recover_moment(const CodeParams& params, const Word& xd);

/// Corrects a single deletion (any q) given the deletion index. Scans
/// P = n..1, resolving as soon as I is a multiple sigma * w_P with
/// sigma <= q-1, otherwise shifting the symbol left of the placeholder past
/// it and deducting sigma * (w_P - w_{P-1}).
DecodeResult decode_one(const CodeParams& params, const Word& xd, const Int& index);

/// Corrects two deletions for q = 2 by the dedicated binary case analysis;
/// once the right placeholder is pinned the remaining deletion is handed to
/// the single-deletion scan.
DecodeResult decode_two_binary(const CodeParams& params, const Word& xd, const Int& index);

/// Corrects c deletions, 2 <= c <= d, for any q: the general recursive case
/// analysis, bottoming out in the single-deletion scan.
DecodeResult decode_multi(const CodeParams& params, const Word& xd, const Int& index);

/// Front door: recovers the moment, dispatches on the deletion count
/// (identity for c = 0, the single-deletion scan for c = 1, the general
/// algorithm for 2 <= c <= d), and verifies that the output is a codeword
/// containing xd as a subsequence. Throws decode_error when the received
/// word cannot be explained by at most d deletions from a codeword, and
/// std::invalid_argument for words longer than n or for d < 2 codebooks.
DecodeResult decode(const CodeParams& params, const Word& xd);

}  // namespace helberg
