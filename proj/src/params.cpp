#include "helberg/params.hpp"

#include <stdexcept>
#include <utility>

namespace helberg {

std::vector<Int> weight_sequence(unsigned q, unsigned d, std::size_t count) {
    if (q < 2) {
        throw std::invalid_argument("alphabet size q must be at least 2");
    }
    if (d < 1) {
        throw std::invalid_argument("deletion capability d must be at least 1");
    }
    const Int p = q - 1;
    std::vector<Int> w;
    w.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        Int window = 0;  // w_{i-1} + ... + w_{i-d}, terms with i-j < 1 vanish
        for (std::size_t j = 1; j <= d && j < i; ++j) {
            window += w[i - 1 - j];
        }
        w.push_back(1 + p * window);
    }
    return w;
}

CodeParams::CodeParams(unsigned q, unsigned d, std::size_t n, Int r,
                       std::optional<Int> m)
    : q_(q), d_(d), n_(n), r_(std::move(r)) {
    if (n < 1) {
        throw std::invalid_argument("codeword length n must be at least 1");
    }
    weights_ = weight_sequence(q, d, n + 1);  // validates q and d
    const Int& w_next = weights_.back();
    m_ = m ? std::move(*m) : w_next;
    if (m_ < w_next) {
        throw std::invalid_argument(
            "modulus m must be at least w_{n+1}; smaller moduli void the "
            "correction guarantee");
    }
    if (r_ < 0 || r_ >= m_) {
        throw std::invalid_argument("residue r must satisfy 0 <= r < m");
    }
}

const Int& CodeParams::weight_at(std::size_t i) const {
    if (i < 1 || i > n_ + 1) {
        throw std::out_of_range("weight index outside 1..n+1");
    }
    return weights_[i - 1];
}

Int CodeParams::weight(long long i) const {
    if (i <= 0) {
        return 0;
    }
    const auto idx = static_cast<std::size_t>(i);
    if (idx <= weights_.size()) {
        return weights_[idx - 1];
    }
    return weight_sequence(q_, d_, idx).back();
}

Int weight_sum_closed_form(const CodeParams& params, std::size_t n) {
    if (params.d() < 2) {
        throw std::invalid_argument("closed-form weight sum requires d >= 2");
    }
    if (n < 1) {
        throw std::invalid_argument("weight sum needs n >= 1");
    }
    const Int p = params.p();
    const auto d = params.d();
    Int acc = 0;
    for (unsigned i = 0; i < d; ++i) {
        acc += Int(d - i) * params.weight(static_cast<long long>(n) - i);
    }
    const Int numerator = p * acc - n;
    const Int denominator = p * d - 1;
    Int quotient;
    Int remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error("closed-form weight sum did not divide exactly");
    }
    return quotient;
}

bool verify_weight_sum_bound(const CodeParams& params, std::size_t n) {
    if (params.d() < 2) {
        throw std::invalid_argument("weight sum bound requires d >= 2");
    }
    if (n < 1) {
        throw std::invalid_argument("weight sum bound needs n >= 1");
    }
    Int direct = 0;  // independent of the closed form on purpose
    for (std::size_t i = 1; i <= n; ++i) {
        direct += params.weight(static_cast<long long>(i));
    }
    const Int lhs = (Int(params.p()) * params.d() - 1) * direct;
    const Int rhs = Int(params.d()) * params.weight(static_cast<long long>(n) + 1);
    return lhs < rhs;
}

}  // namespace helberg
