#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "escode/codec.hpp"
#include "escode/coder.hpp"
#include "escode/demo.hpp"
#include "escode/distribution.hpp"
#include "escode/entropy.hpp"
#include "escode/errors.hpp"
#include "escode/lengths.hpp"
#include "escode/numeric.hpp"
#include "escode/verify.hpp"

namespace {

using escode::format_sig12;

// "-" means stdin/stdout throughout; binary payloads use unformatted I/O.

std::vector<std::uint8_t> read_binary(const std::string& path) {
    if (path == "-") {
        return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(std::cin),
                                         std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw escode::Error("cannot open input file: " + path);
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_binary(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw escode::Error("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw escode::Error("cannot open output file: " + path);
    out << text;
}

escode::Distribution load_distribution(const std::string& path, bool normalize,
                                       double tolerance) {
    if (path == "-") return escode::read_distribution_tsv(std::cin, normalize, tolerance);
    return escode::read_distribution_file(path, normalize, tolerance);
}

// A symbol label maps to a byte either as a single literal character or as
// a decimal value 0..255; that ties text streams to codebook entries.
std::optional<unsigned> label_byte(const std::string& label) {
    if (label.size() == 1) return static_cast<unsigned char>(label[0]);
    if (label.empty() || label.size() > 3) return std::nullopt;
    unsigned v = 0;
    for (char c : label) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    if (v > 255) return std::nullopt;
    return v;
}

std::map<unsigned, std::size_t> byte_to_symbol(const escode::Codebook& book) {
    std::map<unsigned, std::size_t> map;
    for (std::size_t i = 0; i < book.size(); ++i) {
        const std::string label = book.label(i);
        const auto b = label_byte(label);
        if (!b)
            throw escode::Error("label '" + label +
                                "' does not name a byte (single character or 0..255)");
        if (!map.emplace(*b, i).second)
            throw escode::Error("two labels name the same byte value " +
                                std::to_string(*b));
    }
    return map;
}

std::string report_table(const std::vector<escode::BoundReport>& reports,
                         double tolerance) {
    std::ostringstream out;
    out << "# bound reports (tolerance=" << format_sig12(tolerance) << ")\n";
    out << "measure\tvalue\tbound\tvalue\tslack\tsatisfied\tequality\n";
    for (const escode::BoundReport& r : reports) {
        out << r.measure_name << '\t';
        if (r.applicable) {
            out << format_sig12(r.measure_value) << '\t' << r.bound_name << '\t'
                << format_sig12(r.bound_value) << '\t' << format_sig12(r.slack) << '\t'
                << (r.satisfied ? "yes" : "NO") << '\t'
                << (r.equality_within_tolerance ? "yes" : "no") << '\n';
        } else {
            out << "n/a\t" << r.bound_name << "\tn/a\tn/a\tn/a\tn/a\n";
        }
    }
    return out.str();
}

// Sniff a file's kind: a codebook starts with the #D= header.
bool looks_like_codebook(const std::string& path) {
    if (path == "-") return false;
    std::ifstream in(path);
    if (!in) throw escode::Error("cannot open file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        return line.rfind("#D=", 0) == 0;
    }
    return false;
}

struct CommonFlags {
    double q = 1.0;
    unsigned base = 2;
    bool normalize = false;
    double tolerance = 1e-9;
    std::string output = "-";
};

int cmd_entropy(const std::string& dist_path, const CommonFlags& f) {
    const escode::Distribution p = load_distribution(dist_path, f.normalize, f.tolerance);
    std::ostringstream out;
    out << "q\t" << format_sig12(f.q) << '\n';
    out << "base\t" << f.base << '\n';
    out << "H_1\t" << format_sig12(escode::shannon_entropy(p, f.base)) << '\n';
    out << "H_q\t" << format_sig12(escode::renyi_entropy(p, f.q, f.base)) << '\n';
    out << "S_q\t" << format_sig12(escode::tsallis_entropy_normalized(p, f.q)) << '\n';
    out << "# escort distribution\n";
    const escode::Distribution esc = escode::escort(p, f.q);
    for (std::size_t i = 0; i < esc.size(); ++i)
        out << esc.label(i) << '\t' << format_sig12(esc[i]) << '\n';
    write_text(f.output, out.str());
    return 0;
}

int cmd_escort(const std::string& dist_path, const CommonFlags& f) {
    const escode::Distribution p = load_distribution(dist_path, f.normalize, f.tolerance);
    std::ostringstream out;
    escode::write_distribution_tsv(out, escode::escort(p, f.q));
    write_text(f.output, out.str());
    return 0;
}

int cmd_codebook(const std::string& dist_path, const std::string& method,
                 const CommonFlags& f) {
    const escode::Distribution p = load_distribution(dist_path, f.normalize, f.tolerance);
    escode::Codebook book = [&]() {
        if (method == "huffman") return escode::escort_huffman(p, f.q, f.base);
        const escode::Distribution esc = escode::escort(p, f.q);
        return escode::code_from_lengths(
            escode::ideal_lengths_shannon(esc, f.base, /*integer_rounding=*/true),
            f.base, esc.labels());
    }();
    std::ostringstream out;
    escode::write_codebook_tsv(out, book);
    write_text(f.output, out.str());
    return 0;
}

int cmd_measure(const std::string& dist_path, const std::string& book_path,
                std::optional<double> beta, const CommonFlags& f) {
    const escode::Distribution p = load_distribution(dist_path, f.normalize, f.tolerance);
    const escode::Codebook book = escode::read_codebook_file(book_path);
    const escode::LengthVector l = book.lengths();
    const unsigned base = book.alphabet_size();
    std::ostringstream out;
    out << "q\t" << format_sig12(f.q) << '\n';
    out << "base\t" << base << '\n';
    out << "L_bar\t" << format_sig12(escode::expected_length(p, l)) << '\n';
    if (beta) {
        out << "C_beta\t" << format_sig12(escode::campbell_length(p, l, *beta, base))
            << "\tbeta=" << format_sig12(*beta) << '\n';
    }
    out << "M_q\t" << format_sig12(escode::escort_mean_length(p, l, f.q)) << '\n';
    out << "L_q\t"
        << format_sig12(escode::escort_exponential_length(p, l, f.q, base)) << '\n';
    out << report_table(escode::verify_bounds(p, l, f.q, base, f.tolerance),
                        f.tolerance);
    write_text(f.output, out.str());
    return 0;
}

int cmd_verify(const escode::VerifyOptions& opts, const std::string& output) {
    const escode::VerifySummary summary = escode::run_verification(opts);
    std::ostringstream out;
    out << "trials\t" << summary.trials << '\n';
    out << "seed\t" << opts.seed << '\n';
    for (const escode::InequalityTally& t : summary.tallies) {
        out << t.name << "\tchecked=" << t.checked << "\tviolations=" << t.violations
            << "\tworst_slack=" << format_sig12(t.worst_slack) << '\n';
    }
    out << "RESULT\t" << (summary.all_satisfied() ? "PASS" : "FAIL") << '\n';
    write_text(output, out.str());
    return summary.all_satisfied() ? 0 : 1;
}

int cmd_encode(const std::string& model_path, const std::string& input_path,
               const CommonFlags& f) {
    const escode::Codebook book = [&]() {
        if (looks_like_codebook(model_path)) return escode::read_codebook_file(model_path);
        const escode::Distribution p =
            load_distribution(model_path, f.normalize, f.tolerance);
        return escode::escort_huffman(p, f.q, f.base);
    }();
    const std::map<unsigned, std::size_t> to_symbol = byte_to_symbol(book);
    const std::vector<std::uint8_t> input = read_binary(input_path);
    std::vector<std::size_t> symbols;
    symbols.reserve(input.size());
    for (std::uint8_t b : input) {
        const auto it = to_symbol.find(b);
        if (it == to_symbol.end())
            throw escode::UnknownSymbol("input byte " + std::to_string(b) +
                                        " has no codebook entry");
        symbols.push_back(it->second);
    }
    const escode::EncodedStream stream = escode::encode(symbols, book);
    write_binary(f.output, escode::serialize(stream));
    return 0;
}

int cmd_decode(const std::string& input_path, const std::string& output) {
    const std::vector<std::uint8_t> bytes = read_binary(input_path);
    const escode::EncodedStream stream =
        escode::parse_stream(std::span<const std::uint8_t>(bytes));
    const std::vector<std::size_t> symbols = escode::decode(stream);
    std::vector<std::uint8_t> out;
    out.reserve(symbols.size());
    for (std::size_t s : symbols) {
        const std::string label = stream.book.label(s);
        const auto b = label_byte(label);
        if (!b)
            throw escode::Error("label '" + label + "' does not name a byte");
        out.push_back(static_cast<std::uint8_t>(*b));
    }
    write_binary(output, out);
    return 0;
}

int cmd_paper_table(const std::string& output) {
    const std::vector<escode::DemoColumn> table = escode::demo_table();
    std::ostringstream out;
    bool all_pass = true;
    for (const escode::DemoColumn& col : table) {
        out << "q\t" << format_sig12(col.q) << '\n';
        for (std::size_t i = 0; i < col.book.size(); ++i)
            out << "codeword\t" << col.book.label(i) << '\t' << col.book.codeword(i)
                << '\n';
        auto join = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
            return s;
        };
        out << "lengths\t" << join(col.built_lengths) << '\n';
        out << "reference\t" << join(col.reference_lengths) << '\n';
        out << "M_q\t" << format_sig12(col.m_q_built) << '\n';
        out << "M_q_reference\t" << format_sig12(col.m_q_reference) << '\n';
        out << "column\t" << (col.pass ? "PASS" : "FAIL") << '\n';
        all_pass = all_pass && col.pass;
    }
    write_text(output, out.str());
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Escort-coding toolkit: generalized entropies, codeword-length "
                 "measures, optimal prefix codes, and a bit-exact codec"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string dist_path, book_path, model_path;
    std::string input_path = "-";
    std::string method = "huffman";
    std::optional<double> beta;
    escode::VerifyOptions vopts;

    auto add_common = [&](CLI::App* sub, bool with_q, bool with_base) {
        if (with_q)
            sub->add_option("--q", flags.q, "escort / entropy order q >= 0")
                ->check(CLI::NonNegativeNumber);
        if (with_base)
            sub->add_option("-D,--base", flags.base, "code alphabet size (2..62)");
        sub->add_option("--tolerance", flags.tolerance, "numeric tolerance");
        sub->add_option("-o,--output", flags.output, "output file ('-' = stdout)");
    };

    CLI::App* entropy = app.add_subcommand(
        "entropy", "Shannon, order-q, and normalized Tsallis entropies plus the "
                   "escort distribution of a distribution file");
    entropy->add_option("dist", dist_path, "distribution TSV file ('-' = stdin)")
        ->required();
    entropy->add_flag("--normalize", flags.normalize, "rescale probabilities to sum 1");
    add_common(entropy, true, true);

    CLI::App* escort_cmd = app.add_subcommand(
        "escort", "escort transform of a distribution file, as distribution TSV");
    escort_cmd->add_option("dist", dist_path, "distribution TSV file ('-' = stdin)")
        ->required();
    escort_cmd->add_flag("--normalize", flags.normalize,
                         "rescale probabilities to sum 1");
    add_common(escort_cmd, true, false);

    CLI::App* codebook = app.add_subcommand(
        "codebook", "build a prefix codebook for a distribution");
    codebook->add_option("dist", dist_path, "distribution TSV file ('-' = stdin)")
        ->required();
    codebook->add_option("--method", method, "huffman | shannon")
        ->check(CLI::IsMember({"huffman", "shannon"}));
    codebook->add_flag("--normalize", flags.normalize,
                       "rescale probabilities to sum 1");
    add_common(codebook, true, true);

    CLI::App* measure = app.add_subcommand(
        "measure", "length measures and bound reports for a distribution under a "
                   "codebook (the codebook fixes the alphabet size)");
    measure->add_option("dist", dist_path, "distribution TSV file ('-' = stdin)")
        ->required();
    measure->add_option("codebook", book_path, "codebook TSV file")->required();
    measure->add_option("--beta", beta,
                        "also print the Campbell length at this beta > 0");
    measure->add_flag("--normalize", flags.normalize,
                      "rescale probabilities to sum 1");
    add_common(measure, true, false);

    CLI::App* verify = app.add_subcommand(
        "verify", "randomized check of every length-measure lower bound");
    verify->add_option("--trials", vopts.trials, "number of random instances")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopts.seed, "master seed");
    verify->add_option("--n-min", vopts.n_min, "smallest alphabet size")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n-max", vopts.n_max, "largest alphabet size")
        ->check(CLI::PositiveNumber);
    verify->add_option("-D,--base", vopts.base, "code alphabet size");
    verify->add_option("--q-grid", vopts.q_grid, "orders to check at")
        ->delimiter(',');
    verify->add_option("--tolerance", vopts.tolerance, "slack tolerance");
    std::string verify_output = "-";
    verify->add_option("-o,--output", verify_output, "output file ('-' = stdout)");

    CLI::App* encode = app.add_subcommand(
        "encode", "encode raw bytes into an ESCC container (model file is a "
                  "distribution or a codebook; labels name bytes)");
    encode->add_option("model", model_path, "distribution or codebook TSV file")
        ->required();
    encode->add_option("input", input_path, "raw input file ('-' = stdin)");
    encode->add_flag("--normalize", flags.normalize, "rescale probabilities to sum 1");
    add_common(encode, true, true);

    CLI::App* decode = app.add_subcommand(
        "decode", "decode an ESCC container back to raw bytes");
    decode->add_option("input", input_path, "container file ('-' = stdin)");
    decode->add_option("-o,--output", flags.output, "output file ('-' = stdout)");

    CLI::App* paper_table = app.add_subcommand(
        "paper-table", "reproduce the reference comparison of escort-Huffman codes "
                       "at q = 1, 0.7, 0.4 on the 7-symbol example");
    paper_table->add_option("-o,--output", flags.output, "output file ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(entropy)) return cmd_entropy(dist_path, flags);
        if (app.got_subcommand(escort_cmd)) return cmd_escort(dist_path, flags);
        if (app.got_subcommand(codebook)) return cmd_codebook(dist_path, method, flags);
        if (app.got_subcommand(measure))
            return cmd_measure(dist_path, book_path, beta, flags);
        if (app.got_subcommand(verify)) return cmd_verify(vopts, verify_output);
        if (app.got_subcommand(encode)) return cmd_encode(model_path, input_path, flags);
        if (app.got_subcommand(decode)) return cmd_decode(input_path, flags.output);
        if (app.got_subcommand(paper_table)) return cmd_paper_table(flags.output);
    } catch (const escode::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
