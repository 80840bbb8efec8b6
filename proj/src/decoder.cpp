#include "helberg/decoder.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "helberg/codebook.hpp"
#include "helberg/errors.hpp"

namespace helberg {

std::string DecodeTrace::to_text() const {
    std::ostringstream out;
    for (const TraceStep& s : steps) {
        if (s.kind == TraceStep::Kind::Shift) {
            out << "shift P=" << s.position << " sym=" << s.symbol
                << " I=" << s.index_after << '\n';
        } else {
            out << "resolve k=" << s.placeholder << " val=" << s.symbol
                << " P=" << s.position << " I=" << s.index_after << '\n';
        }
    }
    return out.str();
}

namespace {

void require_decodable_params(const CodeParams& params) {
    if (params.d() < 2) {
        throw std::invalid_argument(
            "this decoder family needs d >= 2; for single-deletion codes "
            "(d = 1) Levenshtein decoding should be used");
    }
}

/// Shared mechanics of the sequential decoders. The received word's prefix
/// received[0 .. P-c-1] is still in place, c placeholders occupy positions
/// P-c+1 .. P, and `tail` holds the settled symbols at positions P+1 .. n.
/// Invariant: I equals M(x) minus the moment contribution of every settled
/// symbol at its current position.
struct Scan {
    const CodeParams& params;
    const Word& received;
    std::size_t P;
    std::size_t c;
    Int I;
    std::deque<Symbol> tail;
    DecodeTrace trace;

    /// Moves the symbol left of the placeholder block past it. Its weight
    /// changes from w_{P-c} to w_P, so the unexplained index shrinks by
    /// sym * (w_P - w_{P-c}).
    void shift() {
        const Symbol sym = received[P - c - 1];
        I -= Int(sym) * (params.weight_at(P) - params.weight_at(P - c));
        trace.steps.push_back({TraceStep::Kind::Shift, P, sym, 0, I});
        tail.push_front(sym);
        --P;
    }

    /// Pins the rightmost open placeholder (number c) to val at position P
    /// and deducts its contribution from I.
    void resolve(Symbol val) {
        I -= Int(val) * params.weight_at(P);
        trace.steps.push_back({TraceStep::Kind::Resolve, P, val, c, I});
        tail.push_front(val);
        --c;
        --P;
    }

    Word assemble() const {
        // only valid once c == 0: prefix length is P - c == P
        Word out(received.begin(), received.begin() + static_cast<std::ptrdiff_t>(P));
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }

    /// Resolution test: does I = sigma_c w_P + ... + sigma_1 w_{P-c+1} have
    /// a solution with every sigma in {0..q-1}? The solution is unique when
    /// it exists - (q-1) times any run of up to d-1 consecutive weights
    /// below w_i stays short of w_i by the weight recursion - so the greedy
    /// digit min(q-1, rem / w) from the largest weight down is forced.
    /// Resolves every placeholder (rightmost first) on success.
    bool try_resolve_all(Word& out) {
        if (I < 0) {
            return false;
        }
        const unsigned p = params.p();
        Int rem = I;
        std::vector<Symbol> sigma(c);
        for (std::size_t k = c; k > 0; --k) {
            const Int& w = params.weight_at(P - c + k);
            const Int digit = rem / w;
            const Symbol s =
                digit > p ? static_cast<Symbol>(p) : digit.convert_to<Symbol>();
            sigma[k - 1] = s;
            rem -= Int(s) * w;
        }
        if (rem != 0) {
            return false;
        }
        for (std::size_t k = c; k > 0; --k) {
            resolve(sigma[k - 1]);  // position P, placeholder c, both decrement
        }
        out = assemble();
        return true;
    }

    /// Binary two-deletion resolution test: all four (sigma_1, sigma_2)
    /// combinations, highest first.
    bool try_resolve_binary(Word& out) {
        const Int& w_hi = params.weight_at(P);
        const Int& w_lo = params.weight_at(P - 1);
        for (int s2 = 1; s2 >= 0; --s2) {
            for (int s1 = 1; s1 >= 0; --s1) {
                if (I == Int(s1) * w_lo + Int(s2) * w_hi) {
                    resolve(static_cast<Symbol>(s2));
                    resolve(static_cast<Symbol>(s1));
                    out = assemble();
                    return true;
                }
            }
        }
        return false;
    }

    /// One case-analysis step of the general multi-deletion algorithm
    /// (c >= 2, resolution test already failed, so w_P != I).
    void step_multi() {
        const Int& wP = params.weight_at(P);
        const Int& wPc = params.weight_at(P - c);
        const Symbol sym = received[P - c - 1];
        if (wP > I) {
            if (sym == 0) {
                shift();
            } else if (I < wP - wPc) {
                // the deleted symbol at P cannot be positive: pin it to zero
                // and keep hunting for the remaining c-1 deletions
                resolve(0);
            } else {
                shift();
            }
            return;
        }
        // wP < I: sigma_max = max{sigma <= p : sigma (wP - wPc) <= I}.  The
        // bound must be non-strict: when sym (wP - wPc) == I exactly, no
        // resolution can account for the leftover index (it would overshoot
        // what c-1 deletions left of P can contribute), so the boundary has
        // to fall into the shift branches below.
        const Int spread = wP - wPc;
        const Int cap = I / spread;
        const Symbol sigma_max = cap > params.p()
                                     ? static_cast<Symbol>(params.p())
                                     : cap.convert_to<Symbol>();
        if (sym > sigma_max) {
            resolve(sigma_max);
        } else if (sym < sigma_max) {
            if (Int(sigma_max) * wP <= I) {
                resolve(sigma_max);
            } else {
                shift();
            }
        } else {
            shift();
        }
    }

    /// Runs the scan to completion from the current state: the general
    /// algorithm for c >= 2, plain trial-by-shifting for c == 1.
    Word run() {
        Word out;
        for (;;) {
            if (try_resolve_all(out)) {
                return out;
            }
            if (P == c) {
                throw decode_error(
                    "undecodable: scan exhausted the received word without "
                    "matching the deletion index");
            }
            if (c == 1) {
                shift();
            } else {
                step_multi();
            }
        }
    }
};

Scan make_scan(const CodeParams& params, const Word& received, std::size_t c,
               const Int& index) {
    Scan scan{params, received, params.n(), c, index, {}, {}};
    scan.trace.initial_index = index;
    return scan;
}

}  // namespace

Int recover_moment(const CodeParams& params, const Word& xd) {
    require_decodable_params(params);
    if (xd.size() >= params.n()) {
        throw std::invalid_argument("recover_moment expects a shortened word");
    }
    const std::size_t c = params.n() - xd.size();
    if (c > params.d()) {
        throw std::invalid_argument(
            "word is shorter than n - d; too many deletions to recover");
    }
    // Deletions only lower the moment, and M(x) < 2m for every word of
    // length n once m >= w_{n+1}, so M(x) is r or r + m and the truncated
    // moment picks between them.
    const Int mom = moment(params, xd);
    return mom > params.residue() ? Int(params.residue() + params.modulus())
                                  : params.residue();
}

DecodeResult decode_one(const CodeParams& params, const Word& xd,
                        const Int& index) {
    require_decodable_params(params);
    if (xd.size() + 1 != params.n()) {
        throw std::invalid_argument("decode_one expects a word of length n-1");
    }
    validate_symbols(params.q(), xd);
    Scan scan = make_scan(params, xd, 1, index);
    Word out = scan.run();
    return {std::move(out), std::move(scan.trace)};
}

DecodeResult decode_two_binary(const CodeParams& params, const Word& xd,
                               const Int& index) {
    require_decodable_params(params);
    if (params.q() != 2) {
        throw std::invalid_argument("decode_two_binary requires q = 2");
    }
    if (xd.size() + 2 != params.n()) {
        throw std::invalid_argument(
            "decode_two_binary expects a word of length n-2");
    }
    validate_symbols(2, xd);
    Scan scan = make_scan(params, xd, 2, index);
    Word out;
    for (;;) {
        if (scan.try_resolve_binary(out)) {
            return {std::move(out), std::move(scan.trace)};
        }
        if (scan.P == 2) {
            throw decode_error(
                "undecodable: scan exhausted the received word without "
                "matching the deletion index");
        }
        const Int& wP = params.weight_at(scan.P);
        const Int& wP2 = params.weight_at(scan.P - 2);
        const Symbol sym = xd[scan.P - 3];  // x'_{P-2}
        if (wP > scan.I) {
            if (sym == 0) {
                scan.shift();
            } else if (scan.I < wP - wP2) {
                scan.resolve(0);
            } else {
                scan.shift();
            }
        } else {  // wP < scan.I; equality was caught by the resolution test
            if (sym == 0) {
                scan.resolve(1);
            } else {
                scan.shift();
            }
        }
        if (scan.c == 1) {
            // right deletion pinned; the leftover is a single-deletion scan
            out = scan.run();
            return {std::move(out), std::move(scan.trace)};
        }
    }
}

DecodeResult decode_multi(const CodeParams& params, const Word& xd,
                          const Int& index) {
    require_decodable_params(params);
    if (xd.size() >= params.n()) {
        throw std::invalid_argument("decode_multi expects a shortened word");
    }
    const std::size_t c = params.n() - xd.size();
    if (c < 2 || c > params.d()) {
        throw std::invalid_argument(
            "decode_multi corrects between 2 and d deletions");
    }
    validate_symbols(params.q(), xd);
    Scan scan = make_scan(params, xd, c, index);
    Word out = scan.run();
    return {std::move(out), std::move(scan.trace)};
}

DecodeResult decode(const CodeParams& params, const Word& xd) {
    require_decodable_params(params);
    if (xd.size() > params.n()) {
        throw std::invalid_argument("received word longer than the code length");
    }
    const std::size_t c = params.n() - xd.size();
    if (c > params.d()) {
        throw decode_error("received word lost more symbols than the code corrects");
    }
    if (c == 0) {
        if (!contains(params, xd)) {
            throw decode_error(
                "received word has full length but is not a codeword");
        }
        DecodeResult result;
        result.codeword = xd;
        result.trace.initial_index = 0;
        return result;
    }
    const Int index = recover_moment(params, xd) - moment(params, xd);
    DecodeResult result = c == 1 ? decode_one(params, xd, index)
                                 : decode_multi(params, xd, index);
    if (!contains(params, result.codeword) ||
        !is_subsequence(xd, result.codeword)) {
        throw decode_error(
            "decoder output failed verification; the received word does not "
            "come from this codebook");
    }
    return result;
}

}  // namespace helberg
