#include "helberg/codeword.hpp"

#include <sstream>
#include <stdexcept>

namespace helberg {

void validate_symbols(unsigned q, const Word& w) {
    for (Symbol s : w) {
        if (s >= q) {
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " outside alphabet {0.." +
                                        std::to_string(q - 1) + "}");
        }
    }
}

bool is_subsequence(const Word& needle, const Word& haystack) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < needle.size() && j < haystack.size(); ++j) {
        if (needle[i] == haystack[j]) {
            ++i;
        }
    }
    return i == needle.size();
}

Int moment(const CodeParams& params, const Word& w) {
    if (w.size() > params.n()) {
        throw std::invalid_argument("word longer than the code length n");
    }
    validate_symbols(params.q(), w);
    Int acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) {
            acc += Int(w[i]) * params.weight_at(i + 1);
        }
    }
    return acc;
}

Int truncated_moment(const CodeParams& params, const Word& w, std::size_t k) {
    if (k > w.size()) {
        throw std::invalid_argument("truncation point exceeds the word length");
    }
    Word prefix(w.begin(), w.begin() + k);
    return moment(params, prefix);
}

Int delta(const CodeParams& params, const Word& x, const Word& y) {
    if (x.size() != params.n() || y.size() != params.n()) {
        throw std::invalid_argument("delta expects two words of length n");
    }
    return moment(params, x) - moment(params, y);
}

bool congruent(const CodeParams& params, const Word& x, const Word& y) {
    return mod_floor(delta(params, x, y), params.modulus()) == 0;
}

namespace {

Symbol parse_symbol(unsigned q, const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty symbol in word text");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad character '" + std::string(1, c) +
                                        "' in word text");
        }
    }
    unsigned long v = std::stoul(text);
    if (v >= q) {
        throw std::invalid_argument("symbol " + text + " outside alphabet {0.." +
                                    std::to_string(q - 1) + "}");
    }
    return static_cast<Symbol>(v);
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Word parse_word(unsigned q, const std::string& text) {
    if (q < 2) {
        throw std::invalid_argument("alphabet size q must be at least 2");
    }
    Word out;
    const std::string trimmed = strip(text);
    if (trimmed.empty()) {
        return out;
    }
    if (trimmed.find(',') != std::string::npos) {
        std::istringstream in(trimmed);
        std::string field;
        while (std::getline(in, field, ',')) {
            out.push_back(parse_symbol(q, strip(field)));
        }
        if (!trimmed.empty() && trimmed.back() == ',') {
            throw std::invalid_argument("trailing comma in word text");
        }
    } else {
        out.reserve(trimmed.size());
        for (char c : trimmed) {
            out.push_back(parse_symbol(q, std::string(1, c)));
        }
    }
    return out;
}

std::string format_word(unsigned q, const Word& w) {
    validate_symbols(q, w);
    std::string out;
    if (q <= 10) {
        out.reserve(w.size());
        for (Symbol s : w) {
            out.push_back(static_cast<char>('0' + s));
        }
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0) {
                out.push_back(',');
            }
            out += std::to_string(w[i]);
        }
    }
    return out;
}

}  // namespace helberg
