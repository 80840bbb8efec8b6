#include "helberg/channel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace helberg {

DeletionPattern::DeletionPattern(std::vector<std::size_t> positions)
    : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (positions_[i] == 0) {
            throw std::invalid_argument("deletion positions are 1-based");
        }
        if (i > 0 && positions_[i] == positions_[i - 1]) {
            throw std::invalid_argument("duplicate deletion position " +
                                        std::to_string(positions_[i]));
        }
    }
}

DeletionPattern DeletionPattern::parse(const std::string& text) {
    std::vector<std::size_t> positions;
    std::string cleaned;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            cleaned.push_back(c);
        }
    }
    if (cleaned.empty()) {
        return DeletionPattern{};
    }
    std::istringstream in(cleaned);
    std::string field;
    while (std::getline(in, field, ',')) {
        if (field.empty()) {
            throw std::invalid_argument("empty position in pattern text");
        }
        for (char c : field) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("bad character in pattern text");
            }
        }
        positions.push_back(std::stoull(field));
    }
    if (cleaned.back() == ',') {
        throw std::invalid_argument("trailing comma in pattern text");
    }
    return DeletionPattern(std::move(positions));
}

std::string DeletionPattern::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(positions_[i]);
    }
    return out;
}

Word delete_at(const Word& x, const DeletionPattern& pattern) {
    if (!pattern.empty() && pattern.positions().back() > x.size()) {
        throw std::invalid_argument("deletion position exceeds the word length");
    }
    Word out;
    out.reserve(x.size() - pattern.size());
    std::size_t next = 0;  // index into the sorted positions
    const auto& pos = pattern.positions();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (next < pos.size() && pos[next] == i + 1) {
            ++next;
        } else {
            out.push_back(x[i]);
        }
    }
    return out;
}

Word insert_at(const Word& x, const std::vector<Insertion>& entries, unsigned q) {
    Word out = x;
    for (const Insertion& e : entries) {
        if (e.symbol >= q) {
            throw std::invalid_argument("inserted symbol outside the alphabet");
        }
        if (e.position < 1 || e.position > out.size() + 1) {
            throw std::invalid_argument("insertion position outside 1..len+1");
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(e.position - 1),
                   e.symbol);
    }
    return out;
}

std::pair<Word, DeletionPattern> random_deletions(const Word& x, std::size_t c,
                                                  std::uint64_t seed) {
    if (c > x.size()) {
        throw std::invalid_argument("cannot delete more symbols than the word has");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> positions(x.size());
    std::iota(positions.begin(), positions.end(), std::size_t{1});
    // Partial Fisher-Yates: the first c entries become the sample.
    for (std::size_t i = 0; i < c; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, positions.size() - 1);
        std::swap(positions[i], positions[pick(rng)]);
    }
    positions.resize(c);
    DeletionPattern pattern(std::move(positions));
    return {delete_at(x, pattern), pattern};
}

Int index_of(const CodeParams& params, const Word& x, const Word& xd) {
    return moment(params, x) - moment(params, xd);
}

}  // namespace helberg
