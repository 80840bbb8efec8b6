// Command line front end: weight tables, membership checks, best-residue
// searches, channel simulation, decoding and codebook verification.
//
// Exit codes: 0 on success, 1 when a word is undecodable / not a member /
// verification fails, 2 on usage errors (bad arguments, exceeded budgets).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "helberg/channel.hpp"
#include "helberg/codebook.hpp"
#include "helberg/codeword.hpp"
#include "helberg/decoder.hpp"
#include "helberg/errors.hpp"
#include "helberg/oracle.hpp"
#include "helberg/serialize.hpp"

namespace {

using helberg::CodeParams;
using helberg::DeletionPattern;
using helberg::Int;
using helberg::Word;
using nlohmann::json;

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + text + "'");
    }
}

/// "1..16" or "7" -> inclusive range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("bad length range '" + text +
                                     "'; expected N or A..B");
    };
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const std::size_t v = std::stoull(text);
            return std::make_pair(v, v);
        }
        const std::size_t a = std::stoull(text.substr(0, dots));
        const std::size_t b = std::stoull(text.substr(dots + 2));
        if (a < 1 || b < a) {
            throw bad();
        }
        return std::make_pair(a, b);
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Options shared by the codebook-bound subcommands.
struct ParamArgs {
    unsigned q = 0;
    unsigned d = 0;
    std::size_t n = 0;
    std::string r = "0";
    std::string m;

    void attach(CLI::App* cmd, bool with_residue) {
        cmd->add_option("--q", q, "alphabet size")->required();
        cmd->add_option("--d", d, "deletions corrected")->required();
        cmd->add_option("--n", n, "codeword length")->required();
        auto* ropt = cmd->add_option("--r", r, "target residue");
        if (with_residue) {
            ropt->required();
        }
        cmd->add_option("--m", m, "modulus (defaults to w_{n+1})");
    }

    CodeParams make() const {
        std::optional<Int> modulus;
        if (!m.empty()) {
            modulus = parse_int(m);
        }
        return CodeParams(q, d, n, parse_int(r), modulus);
    }
};

int run_weights(unsigned q, unsigned d, std::size_t count,
                const std::string& format, const std::string& out_path) {
    const std::vector<Int> weights = helberg::weight_sequence(q, d, count);
    std::string text;
    if (format == "json") {
        json j{{"q", q}, {"d", d}};
        auto rows = json::array();
        for (const Int& w : weights) {
            rows.push_back(helberg::to_decimal(w));
        }
        j["weights"] = std::move(rows);
        text = dump(j);
    } else {
        std::ostringstream os;
        for (const Int& w : weights) {
            os << w << '\n';
        }
        text = os.str();
    }
    write_output(out_path, text);
    return 0;
}

int run_check(const ParamArgs& args, const std::string& word_text,
              const std::string& format, const std::string& out_path) {
    const CodeParams params = args.make();
    const Word word = helberg::parse_word(params.q(), word_text);
    if (word.size() != params.n()) {
        throw std::invalid_argument("word length does not match n");
    }
    const Int mom = helberg::moment(params, word);
    const Int residue = helberg::mod_floor(mom, params.modulus());
    const bool member = residue == params.residue();
    std::string text;
    if (format == "json") {
        text = dump(json{{"q", params.q()},
                         {"d", params.d()},
                         {"n", params.n()},
                         {"m", helberg::to_decimal(params.modulus())},
                         {"r", helberg::to_decimal(params.residue())},
                         {"word", helberg::format_word(params.q(), word)},
                         {"moment", helberg::to_decimal(mom)},
                         {"residue", helberg::to_decimal(residue)},
                         {"member", member}});
    } else {
        std::ostringstream os;
        os << "word: " << helberg::format_word(params.q(), word) << '\n'
           << "moment: " << mom << '\n'
           << "residue: " << residue << '\n'
           << "member: " << (member ? "yes" : "no") << '\n';
        text = os.str();
    }
    write_output(out_path, text);
    return member ? 0 : 1;
}

int run_sizes(unsigned q, unsigned d, const std::string& range_text,
              bool histogram, std::uint64_t budget, const std::string& format,
              const std::string& out_path) {
    const auto [lo, hi] = parse_range(range_text);
    std::vector<helberg::SizeSearchResult> rows;
    rows.reserve(hi - lo + 1);
    for (std::size_t n = lo; n <= hi; ++n) {
        rows.push_back(helberg::max_size_search(q, d, n, histogram, budget));
    }
    std::string text;
    if (format == "json") {
        json j{{"q", q}, {"d", d}};
        auto arr = json::array();
        for (const auto& row : rows) {
            arr.push_back(helberg::to_json(row));
        }
        j["rows"] = std::move(arr);
        text = dump(j);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "n,N_n,R_n\n";
        for (const auto& row : rows) {
            os << helberg::to_csv_row(row) << '\n';
        }
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& row : rows) {
            os << "n=" << row.n << " N=" << row.max_size << " R=";
            for (std::size_t i = 0; i < row.argmax_residues.size(); ++i) {
                os << (i ? "," : "") << row.argmax_residues[i];
            }
            os << '\n';
            if (row.per_residue_sizes) {
                for (const auto& [residue, count] : *row.per_residue_sizes) {
                    os << "  r=" << residue << " size=" << count << '\n';
                }
            }
        }
        text = os.str();
    }
    write_output(out_path, text);
    return 0;
}

int run_corrupt(const ParamArgs& args, bool residue_given,
                const std::string& word_text, const std::string& pattern_text,
                std::optional<std::size_t> random_count, std::uint64_t seed,
                const std::string& format, const std::string& out_path) {
    const CodeParams params = args.make();
    const Word word = helberg::parse_word(params.q(), word_text);
    if (word.size() != params.n()) {
        throw std::invalid_argument("word length does not match n");
    }
    if (residue_given &&
        helberg::mod_floor(helberg::moment(params, word), params.modulus()) !=
            params.residue()) {
        throw std::invalid_argument(
            "word is not a member of the codebook; omit --r to corrupt "
            "arbitrary words");
    }
    Word received;
    DeletionPattern pattern;
    if (random_count) {
        std::tie(received, pattern) =
            helberg::random_deletions(word, *random_count, seed);
    } else {
        pattern = DeletionPattern::parse(pattern_text);
        received = helberg::delete_at(word, pattern);
    }
    const Int index = helberg::index_of(params, word, received);
    std::string text;
    if (format == "json") {
        auto positions = json::array();
        for (std::size_t pos : pattern.positions()) {
            positions.push_back(pos);
        }
        text = dump(json{{"word", helberg::format_word(params.q(), word)},
                         {"received", helberg::format_word(params.q(), received)},
                         {"pattern", std::move(positions)},
                         {"index", helberg::to_decimal(index)}});
    } else {
        std::ostringstream os;
        os << "received: " << helberg::format_word(params.q(), received) << '\n'
           << "pattern: " << pattern.to_string() << '\n'
           << "index: " << index << '\n';
        text = os.str();
    }
    write_output(out_path, text);
    return 0;
}

int run_decode(const ParamArgs& args, const std::string& received_text,
               const std::string& algorithm, bool with_trace,
               const std::string& format, const std::string& out_path) {
    const CodeParams params = args.make();
    const Word received = helberg::parse_word(params.q(), received_text);

    if (algorithm == "oracle") {
        const std::set<Word> candidates =
            helberg::brute_decode_deletions(params, received);
        if (candidates.size() != 1) {
            std::ostringstream os;
            os << "error: " << (candidates.empty() ? "no" : "several")
               << " codewords can produce the received word";
            for (const Word& w : candidates) {
                os << "\ncandidate: " << helberg::format_word(params.q(), w);
            }
            os << '\n';
            std::cerr << os.str();
            return 1;
        }
        const Word& decoded = *candidates.begin();
        std::string text;
        if (format == "json") {
            text = dump(json{
                {"received", helberg::format_word(params.q(), received)},
                {"decoded", helberg::format_word(params.q(), decoded)},
                {"algorithm", "oracle"}});
        } else {
            text = "decoded: " + helberg::format_word(params.q(), decoded) +
                   "\nalgorithm: oracle\n";
        }
        write_output(out_path, text);
        return 0;
    }

    helberg::DecodeResult result;
    std::string used = algorithm;
    if (algorithm == "auto") {
        result = helberg::decode(params, received);
        const std::size_t c = params.n() - received.size();
        used = c == 0 ? "identity" : (c == 1 ? "d1" : "dm");
    } else {
        const Int index =
            helberg::recover_moment(params, received) - helberg::moment(params, received);
        if (algorithm == "d1") {
            result = helberg::decode_one(params, received, index);
        } else if (algorithm == "d2") {
            result = helberg::decode_two_binary(params, received, index);
        } else {  // dm
            result = helberg::decode_multi(params, received, index);
        }
        // the front-door decode() verifies; give forced algorithms the same
        // safety net so a garbage result cannot masquerade as success
        if (!helberg::contains(params, result.codeword) ||
            !helberg::is_subsequence(received, result.codeword)) {
            throw helberg::decode_error(
                "decoder output failed verification; the received word does "
                "not come from this codebook");
        }
    }

    std::string text;
    if (format == "json") {
        json j{{"received", helberg::format_word(params.q(), received)},
               {"decoded", helberg::format_word(params.q(), result.codeword)},
               {"index", helberg::to_decimal(result.trace.initial_index)},
               {"algorithm", used}};
        if (with_trace) {
            j["trace"] = helberg::to_json(result.trace);
        }
        text = dump(j);
    } else {
        std::ostringstream os;
        os << "decoded: " << helberg::format_word(params.q(), result.codeword)
           << '\n'
           << "index: " << result.trace.initial_index << '\n'
           << "algorithm: " << used << '\n';
        if (with_trace) {
            os << result.trace.to_text();
        }
        text = os.str();
    }
    write_output(out_path, text);
    return 0;
}

struct VerifyBlock {
    helberg::VerificationReport report;
    std::uint64_t roundtrip_total = 0;
    std::uint64_t roundtrip_failures = 0;

    bool pass() const {
        return report.pass() && roundtrip_failures == 0;
    }
};

VerifyBlock verify_one(const CodeParams& params, std::uint64_t budget) {
    VerifyBlock block;
    const std::vector<Word> members = helberg::enumerate(params, budget);
    block.report = helberg::verify_members(params, members);

    // decode roundtrip: every member, every deletion pattern of size 1..d
    const std::size_t n = params.n();
    const std::size_t max_c = std::min<std::size_t>(params.d(), n);
    for (const Word& x : members) {
        for (std::size_t c = 1; c <= max_c; ++c) {
            std::vector<std::size_t> idx(c);
            for (std::size_t i = 0; i < c; ++i) {
                idx[i] = i + 1;
            }
            for (;;) {
                DeletionPattern pattern{std::vector<std::size_t>(idx)};
                ++block.roundtrip_total;
                try {
                    const auto result =
                        helberg::decode(params, helberg::delete_at(x, pattern));
                    if (result.codeword != x) {
                        ++block.roundtrip_failures;
                    }
                } catch (const helberg::decode_error&) {
                    ++block.roundtrip_failures;
                }
                // next pattern (1-based combination odometer)
                std::size_t i = c;
                while (i > 0 && idx[i - 1] == n - (c - i)) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++idx[i - 1];
                for (std::size_t j = i; j < c; ++j) {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }
    return block;
}

int run_verify(unsigned q, unsigned d, const std::string& range_text,
               const std::string& r_text, const std::string& m_text,
               std::uint64_t budget, const std::string& format,
               const std::string& out_path) {
    const auto [lo, hi] = parse_range(range_text);
    if (!r_text.empty() && lo != hi) {
        throw std::invalid_argument(
            "--r only applies to a single length; drop it to use the best "
            "residue per length");
    }
    bool all_pass = true;
    std::ostringstream os;
    auto blocks = json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
        Int r;
        if (r_text.empty()) {
            r = helberg::max_size_search(q, d, n, false, budget)
                    .argmax_residues.front();
        } else {
            r = parse_int(r_text);
        }
        std::optional<Int> m;
        if (!m_text.empty()) {
            m = parse_int(m_text);
        }
        const CodeParams params(q, d, n, r, m);
        const VerifyBlock block = verify_one(params, budget);
        all_pass = all_pass && block.pass();
        if (format == "json") {
            json j = helberg::to_json(block.report);
            j["roundtrip_total"] = block.roundtrip_total;
            j["roundtrip_failures"] = block.roundtrip_failures;
            j["pass"] = block.pass();
            blocks.push_back(std::move(j));
        } else {
            os << "codebook: q=" << q << " d=" << d << " n=" << n
               << " m=" << params.modulus() << " r=" << params.residue() << '\n'
               << "members: " << block.report.members << '\n'
               << "deleted words: " << block.report.deleted_words << '\n'
               << "counterexamples: " << block.report.counterexamples.size()
               << '\n'
               << "roundtrip: "
               << (block.roundtrip_total - block.roundtrip_failures) << "/"
               << block.roundtrip_total << '\n'
               << "verdict: " << (block.pass() ? "pass" : "FAIL") << '\n';
            if (n != hi) {
                os << '\n';
            }
        }
    }
    std::string text;
    if (format == "json") {
        text = dump(json{{"codebooks", std::move(blocks)}, {"pass", all_pass}});
    } else {
        text = os.str();
    }
    write_output(out_path, text);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Helberg deletion-correcting codes"};
    app.require_subcommand(1);

    int exit_code = 0;

    // weights
    auto* weights = app.add_subcommand("weights", "print the weight sequence");
    unsigned w_q = 0;
    unsigned w_d = 0;
    std::size_t w_count = 0;
    std::string w_format = "text";
    std::string w_out;
    weights->add_option("--q", w_q, "alphabet size")->required();
    weights->add_option("--d", w_d, "deletions corrected")->required();
    weights->add_option("--count", w_count, "how many weights")->required();
    weights->add_option("--format", w_format)
        ->check(CLI::IsMember({"text", "json"}));
    weights->add_option("--out", w_out, "write to file instead of stdout");
    weights->callback(
        [&] { exit_code = run_weights(w_q, w_d, w_count, w_format, w_out); });

    // check
    auto* check = app.add_subcommand("check", "membership test for one word");
    ParamArgs check_args;
    check_args.attach(check, /*with_residue=*/true);
    std::string check_word;
    std::string check_format = "text";
    std::string check_out;
    check->add_option("word", check_word, "word to test")->required();
    check->add_option("--format", check_format)
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--out", check_out, "write to file instead of stdout");
    check->callback([&] {
        exit_code = run_check(check_args, check_word, check_format, check_out);
    });

    // sizes
    auto* sizes =
        app.add_subcommand("sizes", "best-residue search over a length range");
    unsigned s_q = 0;
    unsigned s_d = 0;
    std::string s_range;
    bool s_hist = false;
    std::uint64_t s_budget = helberg::kDefaultEnumerationBudget;
    std::string s_format = "text";
    std::string s_out;
    sizes->add_option("--q", s_q, "alphabet size")->required();
    sizes->add_option("--d", s_d, "deletions corrected")->required();
    sizes->add_option("--n", s_range, "length or range A..B")->required();
    sizes->add_flag("--histogram", s_hist, "include per-residue sizes");
    sizes->add_option("--budget", s_budget, "enumeration budget");
    sizes->add_option("--format", s_format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sizes->add_option("--out", s_out, "write to file instead of stdout");
    sizes->callback([&] {
        exit_code =
            run_sizes(s_q, s_d, s_range, s_hist, s_budget, s_format, s_out);
    });

    // corrupt
    auto* corrupt =
        app.add_subcommand("corrupt", "apply deletions to a codeword");
    ParamArgs corrupt_args;
    corrupt_args.attach(corrupt, /*with_residue=*/false);
    std::string corrupt_word;
    std::string corrupt_pattern;
    std::optional<std::size_t> corrupt_random;
    std::uint64_t corrupt_seed = 0;
    std::string corrupt_format = "text";
    std::string corrupt_out;
    corrupt->add_option("word", corrupt_word, "word to corrupt")->required();
    auto* pattern_opt = corrupt->add_option("--pattern", corrupt_pattern,
                                            "1-based positions, e.g. 3,5");
    auto* random_opt = corrupt->add_option(
        "--random", corrupt_random, "delete this many positions at random");
    pattern_opt->excludes(random_opt);
    random_opt->excludes(pattern_opt);
    corrupt->add_option("--seed", corrupt_seed, "random seed");
    corrupt->add_option("--format", corrupt_format)
        ->check(CLI::IsMember({"text", "json"}));
    corrupt->add_option("--out", corrupt_out, "write to file instead of stdout");
    corrupt->callback([&] {
        if (pattern_opt->empty() && random_opt->empty()) {
            throw CLI::RequiredError("--pattern or --random");
        }
        exit_code = run_corrupt(corrupt_args, corrupt->count("--r") > 0,
                                corrupt_word, corrupt_pattern, corrupt_random,
                                corrupt_seed, corrupt_format, corrupt_out);
    });

    // decode
    auto* decode = app.add_subcommand("decode", "decode a deleted word");
    ParamArgs decode_args;
    decode_args.attach(decode, /*with_residue=*/true);
    std::string decode_word;
    std::string decode_algorithm = "auto";
    bool decode_trace = false;
    std::string decode_format = "text";
    std::string decode_out;
    decode->add_option("received", decode_word, "received word")->required();
    decode->add_option("--algorithm", decode_algorithm)
        ->check(CLI::IsMember({"auto", "d1", "d2", "dm", "oracle"}));
    decode->add_flag("--trace", decode_trace, "print the decoding steps");
    decode->add_option("--format", decode_format)
        ->check(CLI::IsMember({"text", "json"}));
    decode->add_option("--out", decode_out, "write to file instead of stdout");
    decode->callback([&] {
        exit_code = run_decode(decode_args, decode_word, decode_algorithm,
                               decode_trace, decode_format, decode_out);
    });

    // verify
    auto* verify = app.add_subcommand(
        "verify", "exhaustive correction guarantee + decode roundtrip");
    unsigned v_q = 0;
    unsigned v_d = 0;
    std::string v_range;
    std::string v_r;
    std::string v_m;
    std::uint64_t v_budget = helberg::kDefaultEnumerationBudget;
    std::string v_format = "text";
    std::string v_out;
    verify->add_option("--q", v_q, "alphabet size")->required();
    verify->add_option("--d", v_d, "deletions corrected")->required();
    verify->add_option("--n", v_range, "length or range A..B")->required();
    verify->add_option("--r", v_r, "residue (default: best per length)");
    verify->add_option("--m", v_m, "modulus (defaults to w_{n+1})");
    verify->add_option("--budget", v_budget, "enumeration budget");
    verify->add_option("--format", v_format)
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", v_out, "write to file instead of stdout");
    verify->callback([&] {
        exit_code =
            run_verify(v_q, v_d, v_range, v_r, v_m, v_budget, v_format, v_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const helberg::decode_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const helberg::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
