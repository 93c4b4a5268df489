#include "aronberner/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "aronberner/battery.hpp"
#include "aronberner/catalog.hpp"
#include "aronberner/report.hpp"
#include "aronberner/tensor_io.hpp"

namespace aronberner {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

std::string superscript(const std::string& letters) { return letters.empty() ? "f" : "f^" + letters; }

int cmd_signature(const std::string& text, std::ostream& out) {
    const Word w = Word::parse(text);
    Signature sig = Signature::trilinear();
    out << "f : " << to_string(sig) << "\n";
    for (std::size_t k = 0; k < w.size(); ++k) {
        const char letter = w.letters()[k];
        sig = letter == '*' ? star_signature(sig) : flip_signature(sig, Flip::from_letter(letter));
        const std::string prefix = w.letters().substr(0, k);
        out << superscript(w.letters().substr(0, k + 1)) << " = (" << superscript(prefix) << ")^" << letter << " : "
            << to_string(sig) << "\n";
    }
    out << "permutation: " << to_string(word_to_axis_permutation(w)) << "\n";
    if (is_canonical_extension_word(w)) out << "order: " << extension_order(w).greek() << "\n";
    return exit_ok;
}

int cmd_word_check(const std::string& a, const std::string& b, std::ostream& out) {
    const Word wa = Word::parse(a);
    const Word wb = Word::parse(b);
    const auto sa = word_signature(Signature::trilinear(), wa);
    const auto sb = word_signature(Signature::trilinear(), wb);
    const auto pa = word_to_axis_permutation(wa);
    const auto pb = word_to_axis_permutation(wb);
    const bool sig_match = sa == sb;
    const bool perm_match = pa.same_rearrangement(pb);
    out << a << " : " << to_string(sa) << "  " << to_string(pa) << "\n";
    out << b << " : " << to_string(sb) << "  " << to_string(pb) << "\n";
    out << "signatures: " << (sig_match ? "match" : "mismatch") << "\n";
    out << "permutations: " << (perm_match ? "match" : "mismatch") << "\n";
    out << (sig_match && perm_match ? "equal" : "not equal") << "\n";
    return sig_match && perm_match ? exit_ok : exit_failure;
}

int cmd_limits(const std::string& example, const LimitParams& params, const std::string& format, std::ostream& out) {
    params.validate();
    const auto spec = example_by_name(example);
    const auto report = six_extensions(spec.sequence_instance, spec.probe_nets(), params);
    out << (format == "structured" ? render_report_structured(report, spec.construction)
                                   : render_report_human(report, spec.construction));
    return report.all_succeeded() ? exit_ok : exit_failure;
}

std::array<std::size_t, 4> parse_dims(const std::string& text) {
    std::array<std::size_t, 4> dims{};
    std::stringstream in(text);
    std::string item;
    std::size_t count = 0;
    while (std::getline(in, item, ',')) {
        if (count == 4 || item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 6) {
            throw std::invalid_argument("invalid dims: " + text);
        }
        dims[count++] = std::stoul(item);
    }
    if (count != 4) throw std::invalid_argument("invalid dims: " + text);
    validate_battery_dims(dims);
    return dims;
}

int cmd_tensor_test(const std::string& dims_text, std::uint64_t seed, std::size_t trials, const std::string& input,
                    std::ostream& out) {
    BatteryResult result;
    if (!input.empty()) {
        const auto tensor = read_tensor_file(input);
        result = std::visit([&](const auto& t) { return run_identity_battery(t, seed, trials); }, tensor);
    } else {
        result = run_identity_battery(parse_dims(dims_text), seed, trials);
    }
    out << render_battery(result);
    return result.ok() ? exit_ok : exit_failure;
}

int cmd_apply_word(const std::string& input, const std::string& text, const std::string& output, std::ostream& out) {
    const Word w = Word::parse(text);
    const auto result = std::visit([&](const auto& t) { return AnyTensor(apply_word(t, w)); }, read_tensor_file(input));
    if (output.empty()) {
        out << to_json(result) << "\n";
    } else {
        write_tensor_file(output, result);
    }
    return exit_ok;
}

int cmd_report(std::ostream& out) {
    const auto outcomes = run_acceptance_battery();
    out << render_acceptance(outcomes);
    const bool ok = std::all_of(outcomes.begin(), outcomes.end(), [](const CriterionOutcome& c) { return c.passed; });
    return ok ? exit_ok : exit_failure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adjoint and flip calculus of multilinear maps and their Aron-Berner extensions", "aronberner"};
    app.require_subcommand(1);

    std::string word, word_b;
    auto* signature = app.add_subcommand("signature", "Print the signature after each letter of a word");
    signature->add_option("word", word, "Word over * i j r t s")->required();

    auto* word_check = app.add_subcommand("word-check", "Compare two words by signature and axis permutation");
    word_check->add_option("first", word, "First word")->required();
    word_check->add_option("second", word_b, "Second word")->required();

    std::string example, format = "human";
    LimitParams params;
    auto* limits = app.add_subcommand("limits", "Evaluate the six iterated limits of a catalog example");
    limits->add_option("--example", example, "Catalog example name")->required();
    limits->add_option("--trunc", params.truncation, "Truncation N");
    limits->add_option("--horizon", params.horizon, "Stabilization horizon H");
    limits->add_option("--tol", params.tol, "Convergence tolerance");
    limits->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}));

    std::string dims = "2,2,2,2", input, output;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    auto* tensor_test = app.add_subcommand("tensor-test", "Run the finite-dimensional identity battery");
    tensor_test->add_option("--dims", dims, "Tensor dims a,b,c,d, each in 1..16");
    tensor_test->add_option("--seed", seed, "Random seed");
    tensor_test->add_option("--trials", trials, "Number of random trials");
    tensor_test->add_option("--input", input, "Tensor file to test instead of random tensors");

    auto* apply = app.add_subcommand("apply-word", "Apply a word to a tensor file");
    apply->add_option("--input", input, "Tensor file")->required();
    apply->add_option("--word", word, "Word over * i j r t s")->required();
    apply->add_option("--output", output, "Output file (default: stdout)");

    bool all = false;
    auto* report = app.add_subcommand("report", "Run the acceptance battery");
    report->add_flag("--all", all, "Run every criterion")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*signature) return cmd_signature(word, out);
        if (*word_check) return cmd_word_check(word, word_b, out);
        if (*limits) return cmd_limits(example, params, format, out);
        if (*tensor_test) return cmd_tensor_test(dims, seed, trials, input, out);
        if (*apply) return cmd_apply_word(input, word, output, out);
        if (*report) return cmd_report(out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace aronberner
