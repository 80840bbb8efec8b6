#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "helberg/bigint.hpp"

namespace helberg {

/// Weight sequence w_i = 1 + (q-1) * (w_{i-1} + ... + w_{i-d}) with w_i = 0
/// for i <= 0. Returns w_1..w_count. For q = 2, d = 1 this degenerates to
/// the Varshamov-Tenengolts weights 1, 2, 3, ...
std::vector<Int> weight_sequence(unsigned q, unsigned d, std::size_t count);

/// Parameters of one codebook C_n(q, d, m, r): the length-n words over
/// {0..q-1} whose moments are congruent to r mod m. Immutable after
/// construction; the weights w_1..w_{n+1} are memoized up front.
class CodeParams {
public:
    /// Validates q >= 2, d >= 1, n >= 1, m >= w_{n+1} and 0 <= r < m.
    /// When m is omitted it defaults to w_{n+1}, the smallest modulus for
    /// which the code corrects d deletions. d = 1 is accepted here but the
    /// decoders and the closed-form weight sum require d >= 2.
    CodeParams(unsigned q, unsigned d, std::size_t n, Int r,
               std::optional<Int> m = std::nullopt);

    unsigned q() const noexcept { return q_; }
    unsigned p() const noexcept { return q_ - 1; }
    unsigned d() const noexcept { return d_; }
    std::size_t n() const noexcept { return n_; }
    const Int& modulus() const noexcept { return m_; }
    const Int& residue() const noexcept { return r_; }

    /// w_1..w_{n+1}
    const std::vector<Int>& weights() const noexcept { return weights_; }

    /// w_i for 1 <= i <= n+1; table lookup, no allocation.
    const Int& weight_at(std::size_t i) const;

    /// w_i for any i: zero for i <= 0, recomputed past the table.
    Int weight(long long i) const;

private:
    unsigned q_;
    unsigned d_;
    std::size_t n_;
    Int m_;
    Int r_;
    std::vector<Int> weights_;
};

/// Sum_{i=1..n} w_i evaluated through the closed form
///   (p * sum_{i=0..d-1} (d-i) * w_{n-i} - n) / (pd - 1),
/// which divides exactly. Requires d >= 2; throws std::logic_error if the
/// division ever leaves a remainder (it cannot for a valid sequence).
Int weight_sum_closed_form(const CodeParams& params, std::size_t n);

/// Checks (pd - 1) * sum_{i=1..n} w_i < d * w_{n+1} in exact arithmetic,
/// summing the weights directly. Requires d >= 2.
bool verify_weight_sum_bound(const CodeParams& params, std::size_t n);

}  // namespace helberg
