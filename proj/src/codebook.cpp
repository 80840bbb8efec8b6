#include "helberg/codebook.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "helberg/errors.hpp"

namespace helberg {

bool contains(const CodeParams& params, const Word& x) {
    if (x.size() != params.n()) {
        throw std::invalid_argument("membership test expects a word of length n");
    }
    return mod_floor(moment(params, x), params.modulus()) == params.residue();
}

void for_each_word(unsigned q, std::size_t n, const std::vector<Int>& weights,
                   std::uint64_t budget,
                   const std::function<void(const Word&, const Int&)>& visit) {
    if (q < 2) {
        throw std::invalid_argument("alphabet size q must be at least 2");
    }
    if (weights.size() < n) {
        throw std::invalid_argument("need at least n weights to enumerate");
    }
    const Int total = boost::multiprecision::pow(Int(q), static_cast<unsigned>(n));
    if (total > budget) {
        throw budget_error("enumeration of q^n = " + total.str() +
                           " words exceeds the budget of " +
                           std::to_string(budget) +
                           "; raise the budget to proceed");
    }

    // Odometer over {0..q-1}^n in lexicographic order. Incrementing position
    // i adds w_{i+1} to the moment; rolling a position over from q-1 to 0
    // subtracts (q-1) w_{i+1}. Amortized O(1) weight updates per word.
    Word word(n, 0);
    Int m = 0;
    const Int p = q - 1;
    for (;;) {
        visit(word, m);
        std::size_t i = n;
        while (i > 0 && word[i - 1] == q - 1) {
            word[i - 1] = 0;
            m -= p * weights[i - 1];
            --i;
        }
        if (i == 0) {
            return;
        }
        ++word[i - 1];
        m += weights[i - 1];
    }
}

std::vector<Word> enumerate(const CodeParams& params, std::uint64_t budget) {
    std::vector<Word> members;
    const Int& m = params.modulus();
    const Int& r = params.residue();
    for_each_word(params.q(), params.n(), params.weights(), budget,
                  [&](const Word& w, const Int& mom) {
                      if (mom % m == r) {
                          members.push_back(w);
                      }
                  });
    return members;
}

std::uint64_t code_size(const CodeParams& params, std::uint64_t budget) {
    std::uint64_t count = 0;
    const Int& m = params.modulus();
    const Int& r = params.residue();
    for_each_word(params.q(), params.n(), params.weights(), budget,
                  [&](const Word&, const Int& mom) {
                      if (mom % m == r) {
                          ++count;
                      }
                  });
    return count;
}

SizeSearchResult max_size_search(unsigned q, unsigned d, std::size_t n,
                                 bool with_histogram, std::uint64_t budget) {
    if (n < 1) {
        throw std::invalid_argument("size search needs n >= 1");
    }
    const std::vector<Int> weights = weight_sequence(q, d, n + 1);
    const Int m = weights.back();

    std::unordered_map<Int, std::uint64_t, boost::hash<Int>> histogram;
    for_each_word(q, n, weights, budget, [&](const Word&, const Int& mom) {
        ++histogram[mom % m];
    });

    SizeSearchResult result;
    result.q = q;
    result.d = d;
    result.n = n;
    result.m = m;
    for (const auto& [residue, count] : histogram) {
        result.max_size = std::max(result.max_size, count);
    }
    for (const auto& [residue, count] : histogram) {
        if (count == result.max_size) {
            result.argmax_residues.push_back(residue);
        }
    }
    std::sort(result.argmax_residues.begin(), result.argmax_residues.end());

    if (with_histogram) {
        std::vector<std::pair<Int, std::uint64_t>> rows(histogram.begin(),
                                                        histogram.end());
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        result.per_residue_sizes = std::move(rows);
    }
    return result;
}

}  // namespace helberg
