#include "helberg/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace helberg {

namespace {

/// Advances idx (k ascending indices into {0..n-1}) to the next
/// k-combination in lexicographic order; false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

std::set<Word> brute_decode_deletions(const CodeParams& params, const Word& xd) {
    const std::size_t n = params.n();
    if (xd.size() > n) {
        throw std::invalid_argument("received word longer than the code length");
    }
    validate_symbols(params.q(), xd);
    const std::size_t c = n - xd.size();
    std::set<Word> out;
    if (c == 0) {
        if (contains(params, xd)) {
            out.insert(xd);
        }
        return out;
    }
    // Choose the c candidate positions that take fresh symbols, weave xd
    // around them, try all q^c fillings, keep the members. Generate-and-
    // filter on purpose: no shared logic with the sequential decoders.
    std::vector<std::size_t> slots(c);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    do {
        Word candidate(n, 0);
        std::size_t src = 0;
        std::size_t next_slot = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (next_slot < c && slots[next_slot] == i) {
                ++next_slot;
            } else {
                candidate[i] = xd[src++];
            }
        }
        Word fill(c, 0);
        for (;;) {
            for (std::size_t i = 0; i < c; ++i) {
                candidate[slots[i]] = fill[i];
            }
            if (contains(params, candidate)) {
                out.insert(candidate);
            }
            std::size_t j = c;
            while (j > 0 && fill[j - 1] == params.q() - 1) {
                fill[j - 1] = 0;
                --j;
            }
            if (j == 0) {
                break;
            }
            ++fill[j - 1];
        }
    } while (next_combination(slots, n));
    return out;
}

std::size_t indel_distance(const Word& x, const Word& y) {
    // |x| + |y| - 2 LCS(x, y); two-row dynamic program
    std::vector<std::size_t> prev(y.size() + 1, 0);
    std::vector<std::size_t> cur(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1
                                          : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    const std::size_t lcs = prev[y.size()];
    return x.size() + y.size() - 2 * lcs;
}

std::set<Word> brute_decode_indels(const CodeParams& params, const Word& y,
                                   std::uint64_t budget) {
    validate_symbols(params.q(), y);
    const std::size_t n = params.n();
    const std::size_t gap = y.size() > n ? y.size() - n : n - y.size();
    if (gap > params.d()) {
        throw std::invalid_argument(
            "received length differs from n by more than d");
    }
    std::set<Word> out;
    const Int& m = params.modulus();
    const Int& r = params.residue();
    const unsigned d = params.d();
    for_each_word(params.q(), n, params.weights(), budget,
                  [&](const Word& w, const Int& mom) {
                      if (mom % m == r && indel_distance(w, y) <= d) {
                          out.insert(w);
                      }
                  });
    return out;
}

VerificationReport verify_members(const CodeParams& params,
                                  const std::vector<Word>& members) {
    VerificationReport report;
    report.q = params.q();
    report.d = params.d();
    report.n = params.n();
    report.m = params.modulus();
    report.r = params.residue();
    report.members = members.size();
    for (const Word& x : members) {
        if (x.size() != params.n()) {
            throw std::invalid_argument("member word of the wrong length");
        }
        validate_symbols(params.q(), x);
    }

    const std::size_t n = params.n();
    const std::size_t max_c = std::min<std::size_t>(params.d(), n);
    // Every shortened word maps to its first producer; a second, different
    // producer is exactly a violated correction guarantee. Colliding words
    // always have equal length, hence equal deletion counts.
    std::map<Word, std::pair<std::size_t, DeletionPattern>> seen;
    for (std::size_t xi = 0; xi < members.size(); ++xi) {
        const Word& x = members[xi];
        for (std::size_t c = 1; c <= max_c; ++c) {
            std::vector<std::size_t> idx(c);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            do {
                std::vector<std::size_t> positions(c);
                for (std::size_t i = 0; i < c; ++i) {
                    positions[i] = idx[i] + 1;
                }
                DeletionPattern pattern(std::move(positions));
                Word shortened = delete_at(x, pattern);
                ++report.deleted_words;
                auto [it, inserted] =
                    seen.try_emplace(std::move(shortened), xi, pattern);
                if (!inserted && it->second.first != xi) {
                    report.counterexamples.push_back({members[it->second.first],
                                                      x, it->second.second,
                                                      pattern});
                }
            } while (next_combination(idx, n));
        }
    }
    return report;
}

VerificationReport verify_code(const CodeParams& params, std::uint64_t budget) {
    return verify_members(params, enumerate(params, budget));
}

}  // namespace helberg
