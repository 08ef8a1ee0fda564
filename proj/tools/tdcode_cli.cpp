// tdcode: batch front end for duplication-free codes.
//
//   tdcode enumerate --n 6 --q 3 --L 2,5 --mode disjoint --out code.txt
//   tdcode corrupt   --q 3 --mode equal_length --L 2 --t 3 --seed 7 --in code.txt
//   tdcode decode    --q 6 --mode uniform --l 2 --n 6 054545421313
//   tdcode verify    --theorem 2 --n 6 --q 3 --L 2
//   tdcode transform --phi --l 2 --q 6 054213
//
// Exit status: 0 success/pass, 1 decode or verify failure, 2 invalid
// configuration, 3 resource cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdcode/tdcode.hpp"

namespace {

using namespace tdcode;

enum exit_code : int { ok = 0, failed = 1, bad_config = 2, over_cap = 3 };

struct CommandConfig {
    std::optional<std::size_t> n;
    std::optional<unsigned> q;
    std::optional<std::string> lengths;    // --L
    std::optional<std::string> forbidden;  // --F
    std::string mode;
    std::optional<std::size_t> l;
    std::size_t t = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_len;
    std::optional<std::size_t> cap;
    std::string in;
    std::string out;
    std::string trace_out;
    std::vector<std::string> words;

    bool count_only = false;
    int theorem = 0;
    bool negative_control = false;
    std::size_t lemma_budget = 0;
    bool phi = false;
    bool inverse = false;
    bool parse = false;
    bool verify_all = false;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
T need(const std::optional<T>& v, const char* flag) {
    if (!v) throw config_error(std::string("missing required flag ") + flag);
    return *v;
}

Alphabet alphabet_of(const CommandConfig& c) { return Alphabet(need(c.q, "--q")); }

LengthSet lengths_of(const CommandConfig& c) {
    if (c.mode == "uniform") return {need(c.l, "--l")};
    return parse_lengths(need(c.lengths, "--L"));
}

/// Forbidden set: --F if given, else the construction matching --mode.
LengthSet forbidden_of(const CommandConfig& c) {
    if (c.forbidden) return parse_lengths(*c.forbidden);
    const LengthSet L = lengths_of(c);
    if (c.mode == "disjoint") return make_length_spec(L, Construction::disjoint).forbidden;
    if (c.mode == "equal_length") return make_length_spec(L, Construction::equal_length).forbidden;
    if (c.mode == "disjoint_equal_length") return make_length_spec(L, Construction::combined).forbidden;
    if (c.mode == "uniform" || c.mode == "unrestricted") return make_length_spec(L, Construction::combined).forbidden;
    throw config_error("give --F, or --L with --mode");
}

std::vector<std::string> read_lines(std::istream& is) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<Word> input_words(const CommandConfig& c, const Alphabet& a) {
    std::vector<std::string> text = c.words;
    if (text.empty()) {
        if (!c.in.empty()) {
            std::ifstream f(c.in);
            if (!f) throw config_error("cannot open " + c.in);
            text = read_lines(f);
        } else {
            text = read_lines(std::cin);
        }
    }
    std::vector<Word> words;
    words.reserve(text.size());
    for (const auto& s : text) words.push_back(parse_word(s, a));
    return words;
}

/// Writes to --out when given, else stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw config_error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_enumerate(const CommandConfig& c) {
    const Alphabet a = alphabet_of(c);
    const std::size_t n = need(c.n, "--n");
    const LengthSet F = forbidden_of(c);
    if (c.count_only) {
        std::cout << count_record(n, a.size(), F, count_code(n, a, F)) << '\n';
        return ok;
    }
    const Code code = enumerate_code(n, a, F, c.cap.value_or(default_member_cap));
    Output out(c.out);
    write_code(out.stream(), code);
    std::cout << count_record(n, a.size(), F, code.members.size()) << '\n';
    return ok;
}

int cmd_corrupt(const CommandConfig& c) {
    const Alphabet a = alphabet_of(c);
    const Model model = c.mode == "uniform" ? Model::equal_length : parse_model(c.mode);
    const LengthSet L = lengths_of(c);
    const auto words = input_words(c, a);

    Output out(c.out);
    std::ofstream traces;
    const std::string trace_path = !c.trace_out.empty() ? c.trace_out : (c.out.empty() ? "" : c.out + ".trace");
    if (!trace_path.empty()) {
        traces.open(trace_path);
        if (!traces) throw config_error("cannot write " + trace_path);
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
        const std::uint64_t seed = c.seed + k;
        try {
            const Corruption r = sample_corruption(words[k], model, L, c.t, seed);
            out.stream() << format_word(r.word, a) << '\n';
            if (traces.is_open()) write_trace(traces, r.trace, seed, a, r.plan ? &*r.plan : nullptr);
        } catch (const error& e) {
            if (e.kind() != errc::infeasible_plan) throw;
            out.stream() << "# infeasible: " << format_word(words[k], a) << '\n';
            std::cerr << "word " << k + 1 << ": " << e.what() << '\n';
        }
    }
    return ok;
}

int cmd_decode(const CommandConfig& c) {
    const Alphabet a = alphabet_of(c);
    const std::size_t n = need(c.n, "--n");
    std::vector<DecodeResult> results;
    const auto words = input_words(c, a);

    if (c.mode == "uniform") {
        const std::size_t l = need(c.l, "--l");
        for (const Word& z : words) results.push_back(decode_uniform(z, l, n, a));
    } else if (c.mode == "equal_length") {
        LengthSpec spec = make_length_spec(lengths_of(c), Construction::equal_length);
        if (c.forbidden) spec.forbidden = parse_lengths(*c.forbidden);
        const auto mode = c.verify_all ? DecodeMode::verify : DecodeMode::fast;
        for (const Word& z : words) results.push_back(decode_equal_length(z, spec, n, a, mode));
    } else if (c.mode == "disjoint" || c.mode == "disjoint_equal_length") {
        const Model model = parse_model(c.mode);
        LengthSpec spec = make_length_spec(
            lengths_of(c), model == Model::disjoint ? Construction::disjoint : Construction::combined);
        if (c.forbidden) spec.forbidden = parse_lengths(*c.forbidden);
        const std::size_t budget = c.cap.value_or(default_search_budget);
        for (const Word& z : words) results.push_back(decode_bruteforce(z, spec, n, model, budget));
    } else {
        throw config_error("decode --mode must be uniform, equal_length, disjoint or disjoint_equal_length");
    }

    Output out(c.out);
    bool all_unique = true;
    for (const DecodeResult& r : results) {
        auto& os = out.stream();
        if (r.status == DecodeStatus::unique) {
            os << format_word(r.codeword, a) << ' ' << to_string(r.status);
            if (r.length_used) os << " l=" << *r.length_used;
        } else {
            all_unique = false;
            os << "- " << to_string(r.status);
            if (!r.candidates.empty()) {
                os << " candidates=";
                for (std::size_t i = 0; i < r.candidates.size(); ++i)
                    os << (i ? "," : "") << format_word(r.candidates[i], a);
            }
        }
        os << '\n';
    }
    return all_unique ? ok : failed;
}

int cmd_verify(const CommandConfig& c) {
    const LengthSet L = parse_lengths(need(c.lengths, "--L"));
    if (c.negative_control) {
        // no construction applies; nothing to validate beyond L
    } else if (c.theorem == 2) {
        check_separation(L);
    } else if (c.theorem != 1 && c.theorem != 3) {
        throw config_error("verify needs --theorem 1|2|3 or --negative-control");
    }
    const std::size_t n = need(c.n, "--n");
    const unsigned q = need(c.q, "--q");
    const std::size_t max_len = c.max_len.value_or(default_max_len(n, L));
    VerifyOptions opt;
    if (c.t) opt.max_events = c.t;
    if (c.cap) opt.cone_cap = *c.cap;
    opt.seed = c.seed;

    VerificationReport rep = c.negative_control ? negative_control(n, q, L, max_len, opt)
                                                : verify_theorem(c.theorem, n, q, L, max_len, opt);
    if (c.lemma_budget) {
        rep.lemma_checks.push_back(check_lemma_eqmidcover(c.lemma_budget));
        rep.lemma_checks.push_back(check_lemma_neqmidcover(c.lemma_budget));
    }
    Output out(c.out);
    write_report(out.stream(), rep);
    return rep.passed() ? ok : failed;
}

int cmd_transform(const CommandConfig& c) {
    const Alphabet a = alphabet_of(c);
    const std::size_t l = need(c.l, "--l");
    if (int(c.phi) + int(c.inverse) + int(c.parse) != 1)
        throw config_error("transform needs exactly one of --phi, --inverse, --parse");
    Output out(c.out);
    for (const Word& w : input_words(c, a)) {
        auto& os = out.stream();
        if (c.phi) {
            os << format_word(phi(w, l, a), a) << '\n';
        } else if (c.inverse) {
            os << format_word(phi_inverse(w, l, a), a) << '\n';
        } else {
            const auto d = zero_run_decompose(w, l);
            os << "prefix=" << format_word(d.prefix, a) << " runs=";
            for (std::size_t i = 0; i < d.zero_runs.size(); ++i) os << (i ? "," : "") << d.zero_runs[i];
            os << " blocks=";
            for (std::size_t i = 0; i < d.blocks.size(); ++i) os << (i ? "," : "") << format_word(d.blocks[i], a);
            os << " reduced=" << format_word(reduce_runs_mod(d, l), a) << '\n';
        }
    }
    return ok;
}

void add_shared(CLI::App* sub, CommandConfig& c) {
    sub->add_option("--n", c.n, "codeword length");
    sub->add_option("--q", c.q, "alphabet size");
    sub->add_option("--L", c.lengths, "allowed duplication lengths, comma separated");
    sub->add_option("--F", c.forbidden, "forbidden square lengths, comma separated");
    sub->add_option("--mode", c.mode, "unrestricted|disjoint|equal_length|disjoint_equal_length|uniform");
    sub->add_option("--l", c.l, "single duplication length");
    sub->add_option("--t", c.t, "number of duplications");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--max-len", c.max_len, "descendant length bound");
    sub->add_option("--cap", c.cap, "member / search budget cap");
    sub->add_option("--in", c.in, "input file, one word per line");
    sub->add_option("--out", c.out, "output file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Duplication-free codes for tandem-duplication channels"};
    app.require_subcommand(1);
    CommandConfig c;

    auto* en = app.add_subcommand("enumerate", "list C_F and report its size and rate");
    add_shared(en, c);
    en->add_flag("--count-only", c.count_only, "count without materializing");

    auto* co = app.add_subcommand("corrupt", "apply seeded channel corruptions");
    add_shared(co, c);
    co->add_option("--trace-out", c.trace_out, "trace file (default <out>.trace)");
    co->add_option("words", c.words, "input words");

    auto* de = app.add_subcommand("decode", "decode channel outputs");
    add_shared(de, c);
    de->add_flag("--verify-all", c.verify_all, "try every length and report ambiguity");
    de->add_option("words", c.words, "input words");

    auto* ve = app.add_subcommand("verify", "exhaustively check a code construction");
    add_shared(ve, c);
    ve->add_option("--theorem", c.theorem, "1 disjoint, 2 equal-length, 3 disjoint equal-length");
    ve->add_flag("--negative-control", c.negative_control, "run on all of Sigma^n; passes iff collisions are found");
    ve->add_option("--lemma-budget", c.lemma_budget, "also run the mid-cover checks up to this word length");

    auto* tr = app.add_subcommand("transform", "phi_l transform, inverse, zero-run parse");
    add_shared(tr, c);
    tr->add_flag("--phi", c.phi);
    tr->add_flag("--inverse", c.inverse);
    tr->add_flag("--parse", c.parse);
    tr->add_option("words", c.words, "input words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : bad_config;
    }

    try {
        if (*en) return cmd_enumerate(c);
        if (*co) return cmd_corrupt(c);
        if (*de) return cmd_decode(c);
        if (*ve) return cmd_verify(c);
        if (*tr) return cmd_transform(c);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_config;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == errc::resource_limit ? over_cap : bad_config;
    }
    return bad_config;
}
