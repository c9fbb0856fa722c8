/*
   Copyright 2026 The fqcodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FQCODES_CLI_HPP
#define FQCODES_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "decode.hpp"
#include "evaluation_code.hpp"
#include "families.hpp"
#include "galois.hpp"
#include "io.hpp"
#include "linear_code.hpp"
#include "lrc.hpp"
#include "multipoly.hpp"
#include "unipoly.hpp"

namespace fqcodes {

/// Exit codes of the command line tool.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kUncorrectable = 3,
    kConstraint = 4,
};

namespace cli_detail {

class usage_error : public std::runtime_error {
   public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Vector parse_vector(const Field& f, const std::string& text) {
    try {
        std::vector<rep_t> reps;
        for (const auto& tok : split(text, ',')) reps.push_back(parse_element(f, tok).rep());
        return Vector(f, std::move(reps));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad vector '") + text + "': " + e.what());
    }
}

inline std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const auto& tok : split(text, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + tok + "'");
        }
    }
    return out;
}

inline std::vector<std::vector<long long>> parse_int_rows(const std::string& text) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : split(text, ';')) out.push_back(parse_int_list(row));
    return out;
}

/// Field-element list: each entry may be a rep or an `a`-form like "a+1".
inline std::vector<long long> parse_element_list(const Field& f, const std::string& text) {
    std::vector<long long> out;
    for (const auto& tok : split(text, ',')) {
        try {
            out.push_back(static_cast<long long>(parse_element(f, tok).rep()));
        } catch (const std::invalid_argument& e) {
            throw parse_error(std::string("bad element '") + tok + "': " + e.what());
        }
    }
    return out;
}

inline std::vector<std::vector<long long>> parse_element_rows(const Field& f,
                                                              const std::string& text) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : split(text, ';')) out.push_back(parse_element_list(f, row));
    return out;
}

inline std::vector<std::size_t> parse_position_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (long long v : parse_int_list(text)) {
        if (v < 0) throw parse_error("positions must be nonnegative");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

/// Recursive-descent parser for the human polynomial form, e.g.
/// "x+y+z", "a+y*z^2", "2*x1^2*x3-1", "(a+1)*x". Integer literals are
/// element reps; `a` is the field generator; variables are x1..xm with
/// x, y, z accepted as aliases for the first three.
class PolyParser {
   public:
    PolyParser(const Field& f, std::size_t nvars, const std::string& text)
        : f_(f), nvars_(nvars), s_(text) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

   private:
    MultiPoly expr() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        MultiPoly acc = term();
        if (negate) acc = acc.negated();
        while (true) {
            skip_space();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            const std::uint64_t e = integer();
            if (e > 1024) fail("exponent too large");
            MultiPoly out = MultiPoly::constant(f_, nvars_, 1);
            for (std::uint64_t i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    MultiPoly atom() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c >= '0' && c <= '9')
            return MultiPoly::constant(f_, nvars_, f_.coerce(static_cast<long long>(integer())));
        if (c == 'a' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
            ++pos_;
            return MultiPoly::constant(f_, nvars_, f_.generator().rep());
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            std::size_t index;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                if (c != 'x') fail("numbered variables are written x1..xm");
                const std::uint64_t one_based = integer();
                if (one_based < 1) fail("variable index starts at 1");
                index = static_cast<std::size_t>(one_based - 1);
            } else {
                index = static_cast<std::size_t>(c - 'x');
            }
            if (index >= nvars_) fail("variable index exceeds the number of variables");
            return MultiPoly::variable(f_, nvars_, index);
        }
        fail("unexpected character");
        return MultiPoly::zero(f_, nvars_);  // unreachable
    }

    std::uint64_t integer() {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
    }
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("bad polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    const Field& f_;
    std::size_t nvars_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

inline MultiPoly parse_poly(const Field& f, std::size_t nvars, const std::string& text) {
    try {
        return PolyParser(f, nvars, text).parse();
    } catch (const parse_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw parse_error("bad polynomial '" + text + "': " + e.what());
    }
}

/// Univariate polynomial argument: either a comma-separated coefficient
/// list "c0,c1,..." or the human form "x^4-1".
inline UniPoly parse_unipoly(const Field& f, const std::string& text) {
    bool has_alpha = false;
    for (char c : text)
        if (std::isalpha(static_cast<unsigned char>(c))) has_alpha = true;
    if (!has_alpha) return UniPoly::from_ints(f, parse_int_list(text));
    MultiPoly p = parse_poly(f, 1, text);
    std::vector<rep_t> coeffs;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] >= coeffs.size()) coeffs.resize(e[0] + 1, 0);
        coeffs[e[0]] = c;
    }
    return UniPoly(f, std::move(coeffs));
}

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void emit(const std::string& data, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << data;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
    file << data;
}

inline std::string alphabet_string(const Field& f) {
    std::string s = "{";
    bool first = true;
    for (const auto& e : f.elements()) {
        if (!first) s += ", ";
        first = false;
        s += to_string(e);
    }
    return s + "}";
}

}  // namespace cli_detail

/// Runs the command line interface on the given arguments (program name
/// excluded). All data goes to `out`, diagnostics to `err`; the return
/// value is the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"linear and evaluation codes over finite fields"};
    app.require_subcommand(1);

    // build
    std::string family, out_path;
    std::uint64_t q = 0, seed = 0;
    unsigned ext_degree = 0;
    std::size_t n = 0, k = 0, d = 0, m = 0, row_weight = 0, ell = 0;
    std::string points_arg, subsets_arg, vectors_arg, exponents_arg, g_arg, blocks_arg, polys_arg;

    CLI::App* build = app.add_subcommand("build", "construct a code and print its file");
    build->add_option("family", family,
                      "one of: hamming cyclic quasicyclic ldpc rs rm cartesian toric "
                      "repetition zerosum universe zero random lrc eval")
        ->required();
    build->add_option("--q", q, "field order (prime power)");
    build->add_option("--r", ext_degree, "redundancy (hamming)");
    build->add_option("--n", n, "length");
    build->add_option("--k", k, "dimension");
    build->add_option("--d", d, "degree bound");
    build->add_option("--m", m, "number of variables");
    build->add_option("--seed", seed, "seed for randomized constructions");
    build->add_option("--row-weight", row_weight, "ones per parity row (ldpc)");
    build->add_option("--ell", ell, "locality (lrc)");
    build->add_option("--points", points_arg, "comma list of scalars, or ;-separated tuples");
    build->add_option("--subsets", subsets_arg, ";-separated comma lists (cartesian)");
    build->add_option("--vectors", vectors_arg, ";-separated comma lists (quasicyclic)");
    build->add_option("--exponents", exponents_arg, ";-separated exponent rows (toric, eval)");
    build->add_option("--g", g_arg, "polynomial: coefficient list c0,c1,... or e.g. x^4");
    build->add_option("--blocks", blocks_arg, ";-separated blocks of field elements (lrc)");
    build->add_option("--polys", polys_arg, ";-separated polynomials (eval)");
    build->add_option("--out", out_path, "write the code file here instead of stdout");

    // info
    std::string code_path;
    bool want_minweight = false, pretty = false;
    CLI::App* info = app.add_subcommand("info", "report the parameters of a code file");
    info->add_option("--code", code_path, "code file ('-' for stdin)")->required();
    info->add_flag("--minweight", want_minweight, "also compute the exact minimum weight");

    // encode / decode
    std::string message_arg, received_arg;
    std::size_t distance = 0;
    bool have_distance = false;
    CLI::App* encode = app.add_subcommand("encode", "multiply a message by the generator matrix");
    encode->add_option("--code", code_path, "code file ('-' for stdin)")->required();
    encode->add_option("--message", message_arg, "comma-separated message of length k")->required();
    encode->add_flag("--pretty", pretty, "render elements as polynomials in a");

    CLI::App* decode = app.add_subcommand("decode", "syndrome-decode a received word");
    decode->add_option("--code", code_path, "code file ('-' for stdin)")->required();
    decode->add_option("--received", received_arg, "comma-separated word of length n")->required();
    decode->add_option("--distance", distance, "known minimum distance (default: computed)")
        ->each([&](const std::string&) { have_distance = true; });
    decode->add_flag("--pretty", pretty, "render elements as polynomials in a");

    // transforms
    std::string positions_arg;
    CLI::App* dual = app.add_subcommand("dual", "emit the dual code");
    dual->add_option("--code", code_path, "code file ('-' for stdin)")->required();
    dual->add_option("--out", out_path, "write the code file here instead of stdout");

    CLI::App* shorten_cmd = app.add_subcommand("shorten", "shorten at the given coordinates");
    shorten_cmd->add_option("--code", code_path, "code file ('-' for stdin)")->required();
    shorten_cmd->add_option("--positions", positions_arg, "comma-separated coordinates")->required();
    shorten_cmd->add_option("--out", out_path, "write the code file here instead of stdout");

    // local repair
    std::string word_arg;
    std::size_t erase_pos = 0;
    CLI::App* recover = app.add_subcommand("recover", "repair one erased symbol of an LRC word");
    recover->add_option("--code", code_path, "LRC code file ('-' for stdin)")->required();
    recover->add_option("--word", word_arg, "length-n word; the erased entry is ignored")->required();
    recover->add_option("--erase", erase_pos, "erased coordinate")->required();
    recover->add_flag("--pretty", pretty, "render the symbol as a polynomial in a");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw usage_error("missing or invalid " + what + " for family '" + family + "'");
    };

    try {
        if (build->parsed()) {
            Field f = q ? field_from_order(q) : field_build(2, 1);
            std::string data;
            if (family == "hamming") {
                need(q && ext_degree, "--q/--r");
                data = serialize(hamming_code(q, ext_degree));
            } else if (family == "cyclic") {
                need(q && n && !g_arg.empty(), "--q/--n/--g");
                data = serialize(cyclic_code(f, parse_unipoly(f, g_arg), n));
            } else if (family == "quasicyclic") {
                need(q && !vectors_arg.empty(), "--q/--vectors");
                data = serialize(quasi_cyclic_code(f, parse_element_rows(f, vectors_arg)));
            } else if (family == "ldpc") {
                need(n && k && row_weight, "--n/--k/--row-weight");
                data = serialize(rand_ldpc(n, k, row_weight, seed));
            } else if (family == "rs") {
                need(q && k && !points_arg.empty(), "--q/--points/--k");
                data = serialize(rs_code(f, parse_element_list(f, points_arg), k));
            } else if (family == "rm") {
                need(q && m, "--q/--m (and --d)");
                data = serialize(rm_code(q, m, d));
            } else if (family == "cartesian") {
                need(q && !subsets_arg.empty(), "--q/--subsets (and --d)");
                data = serialize(cartesian_code(f, parse_element_rows(f, subsets_arg), d));
            } else if (family == "toric") {
                need(q && !exponents_arg.empty(), "--q/--exponents");
                if (q == 2) err << "note: over GF(2) the torus has a single point\n";
                data = serialize(toric_code(f, parse_int_rows(exponents_arg)));
            } else if (family == "repetition") {
                need(q && n, "--q/--n");
                data = serialize(repetition_code(f, n));
            } else if (family == "zerosum") {
                need(q && n, "--q/--n");
                data = serialize(zero_sum_code(f, n));
            } else if (family == "universe") {
                need(q && n, "--q/--n");
                data = serialize(universe_code(f, n));
            } else if (family == "zero") {
                need(q && n, "--q/--n");
                data = serialize(zero_code(f, n));
            } else if (family == "random") {
                need(q && n && k, "--q/--n/--k");
                data = serialize(random_code(f, n, k, seed));
            } else if (family == "lrc") {
                need(q && k && ell && !blocks_arg.empty() && !g_arg.empty(),
                     "--q/--k/--ell/--blocks/--g");
                auto blocks = parse_element_rows(f, blocks_arg);
                std::size_t total = 0;
                for (const auto& b : blocks) total += b.size();
                if (n && n != total)
                    throw std::invalid_argument("--n disagrees with the total block size");
                LRCParams params{q, total, k, ell};
                data = serialize(LRCode::build(params, blocks, parse_unipoly(f, g_arg)));
            } else if (family == "eval") {
                need(q && m && !points_arg.empty(), "--q/--m/--points");
                auto pts = parse_element_rows(f, points_arg);
                if (!polys_arg.empty()) {
                    std::vector<MultiPoly> polys;
                    for (const auto& text : split(polys_arg, ';'))
                        polys.push_back(parse_poly(f, m, text));
                    data = serialize(EvaluationCode::build(f, pts, polys));
                } else if (!exponents_arg.empty()) {
                    std::vector<std::vector<std::uint32_t>> exps;
                    for (const auto& row : parse_int_rows(exponents_arg)) {
                        std::vector<std::uint32_t> e;
                        for (long long v : row) {
                            if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
                            e.push_back(static_cast<std::uint32_t>(v));
                        }
                        exps.push_back(std::move(e));
                    }
                    data = serialize(EvaluationCode::from_monomial_matrix(f, pts, exps));
                } else {
                    throw usage_error("eval needs --polys or --exponents");
                }
            } else {
                throw usage_error("unknown family '" + family + "'");
            }
            emit(data, out_path, out);
            return kOk;
        }

        if (info->parsed()) {
            CodeFile file = parse_code_file(read_input(code_path));
            LinearCode code = file.to_linear_code();
            const Field& f = code.field();
            out << "field " << f.label() << " p=" << f.characteristic() << " r=" << f.degree();
            if (f.degree() > 1) out << " modulus " << f.modulus_string();
            out << "\n";
            auto params = code.parameters();
            out << "n=" << params.length << " k=" << params.dimension
                << " rate=" << to_string(params.rate) << "\n";
            out << "alphabet " << alphabet_string(f) << "\n";
            if (want_minweight) out << "d=" << code.minimum_weight() << "\n";
            out << "dual: n=" << code.length() << " k=" << (code.length() - code.dim()) << "\n";
            return kOk;
        }

        if (encode->parsed()) {
            LinearCode code = parse_code_file(read_input(code_path)).to_linear_code();
            Vector msg = parse_vector(code.field(), message_arg);
            out << to_string(code.encode(msg), pretty) << "\n";
            return kOk;
        }

        if (decode->parsed()) {
            LinearCode code = parse_code_file(read_input(code_path)).to_linear_code();
            Vector received = parse_vector(code.field(), received_arg);
            const std::size_t dist = have_distance ? distance : code.minimum_weight();
            out << to_string(syndrome_decode(code, received, dist), pretty) << "\n";
            return kOk;
        }

        if (dual->parsed()) {
            LinearCode code = parse_code_file(read_input(code_path)).to_linear_code();
            emit(serialize(dual_code(code)), out_path, out);
            return kOk;
        }

        if (shorten_cmd->parsed()) {
            LinearCode code = parse_code_file(read_input(code_path)).to_linear_code();
            emit(serialize(shorten(code, parse_position_list(positions_arg))), out_path, out);
            return kOk;
        }

        if (recover->parsed()) {
            CodeFile file = parse_code_file(read_input(code_path));
            LRCode code = file.to_lrc();
            Vector word = parse_vector(code.field(), word_arg);
            const FieldElement symbol = code.local_recover(word, erase_pos);
            out << (pretty ? to_string(symbol) : std::to_string(symbol.rep())) << "\n";
            return kOk;
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const decoding_failure& e) {
        err << "decoding failure: " << e.what() << "\n";
        return kUncorrectable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kConstraint;
    }

    return kUsage;
}

}  // namespace fqcodes

#endif  // FQCODES_CLI_HPP
