#include "codecomp/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "codecomp/approx.hpp"
#include "codecomp/code_model.hpp"
#include "codecomp/feasibility.hpp"
#include "codecomp/fixfree_builder.hpp"
#include "codecomp/prefix_builder.hpp"
#include "codecomp/text_format.hpp"

namespace codecomp::cli {

namespace {

constexpr int kOk = 0;        // success / feasible / true
constexpr int kNegative = 1;  // infeasible / false / build failure
constexpr int kUsage = 2;     // usage or parse error

std::string counts_line(const Composition& comp) {
    std::string out;
    for (std::size_t i = 0; i < comp.alphabet_size(); ++i) {
        if (i) out += " ";
        out += std::to_string(comp.count(i));
    }
    return out;
}

CompositionMultiset read_composition_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    return textio::parse_composition_file(file);
}

Code read_code_file(const std::string& path, std::optional<std::size_t> alphabet) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    return textio::parse_code_file(file, alphabet);
}

int run_check_feasible(const std::string& path, std::ostream& out, std::ostream& err) {
    auto verdict = check_prefix_feasibility(read_composition_file(path));
    if (verdict.feasible) {
        out << "FEASIBLE\n";
        return kOk;
    }
    out << "INFEASIBLE\n";
    const auto& row = *verdict.witness;
    err << "witness composition: " << counts_line(row.composition) << " (" << row.lhs << " < "
        << row.rhs << ")\n";
    return kNegative;
}

int run_build_prefix(const std::string& path, std::ostream& out, std::ostream& err) {
    auto outcome = build_prefix_free(read_composition_file(path));
    if (outcome.ok()) {
        out << textio::format_code(*outcome.code);
        return kOk;
    }
    out << "INFEASIBLE\n";
    err << "infeasible at step " << outcome.failed_step + 1 << ": composition "
        << counts_line(*outcome.failed_composition) << "\n";
    return kNegative;
}

int run_build_fixfree(const std::string& path, std::ostream& out, std::ostream& err) {
    auto outcome = build_fix_free(read_composition_file(path));
    switch (outcome.status) {
        case FixFreeOutcome::Status::Success:
            out << textio::format_code(*outcome.code);
            return kOk;
        case FixFreeOutcome::Status::Infeasible:
            out << "INFEASIBLE\n";
            err << "infeasible at step " << outcome.failed_step + 1 << ": composition "
                << counts_line(*outcome.failed_composition) << "\n";
            return kNegative;
        case FixFreeOutcome::Status::NotApplicable:
        default:
            out << "NOT-APPLICABLE\n";
            err << outcome.reason << "\n";
            return kNegative;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prefix-free and fix-free codes with prescribed codeword compositions",
                 "codecomp"};
    app.require_subcommand(1);

    std::string comp_path;
    auto* check = app.add_subcommand("check-feasible",
                                     "decide whether a prefix-free code with the given "
                                     "composition multiset exists");
    check->add_option("file", comp_path, "composition file")->required();

    std::string prefix_path;
    auto* build_prefix =
        app.add_subcommand("build-prefix", "construct a binary prefix-free code");
    build_prefix->add_option("file", prefix_path, "composition file")->required();

    std::string fixfree_path;
    auto* build_fixfree =
        app.add_subcommand("build-fixfree", "construct a binary fix-free code");
    build_fixfree->add_option("file", fixfree_path, "composition file")->required();

    std::string n_text, m_text = "1", eps_text = "1/100";
    bool approx_decimal = false;
    auto* approx = app.add_subcommand("approx",
                                      "near-optimal fix-free code for n codewords under "
                                      "letter costs (1, m)");
    approx->add_option("--n", n_text, "number of codewords (>= 2)")->required();
    approx->add_option("--m", m_text, "cost of symbol 1 (rational >= 1)");
    approx->add_option("--epsilon", eps_text, "budget precision (rational > 0)");
    approx->add_flag("--decimal", approx_decimal, "render costs as decimals on stderr");

    std::string verify_path, property;
    std::size_t verify_alphabet = 0;
    auto* verify = app.add_subcommand("verify", "test a code property");
    verify->add_option("--property", property, "prefix | suffix | fixfree | ud")
        ->required()
        ->check(CLI::IsMember({"prefix", "suffix", "fixfree", "ud"}));
    verify->add_option("file", verify_path, "code file")->required();
    verify->add_option("--alphabet", verify_alphabet, "alphabet size override (2..10)")
        ->check(CLI::Range(2, 10));

    std::string cost_path, costs_text, probs_text;
    bool cost_decimal = false;
    auto* cost = app.add_subcommand("cost", "average codeword cost of a code");
    cost->add_option("file", cost_path, "code file")->required();
    cost->add_option("--costs", costs_text, "comma-separated letter costs c1,...,cD")->required();
    cost->add_option("--probs", probs_text, "comma-separated probabilities (default uniform)");
    cost->add_flag("--decimal", cost_decimal, "render the result as a decimal");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (*check) return run_check_feasible(comp_path, out, err);
        if (*build_prefix) return run_build_prefix(prefix_path, out, err);
        if (*build_fixfree) return run_build_fixfree(fixfree_path, out, err);

        if (*approx) {
            auto n = std::stoull(n_text);
            auto result = approx_optimal(n, textio::parse_rational(m_text),
                                         textio::parse_rational(eps_text));
            out << textio::format_code(result.code);
            auto render = [&](const Rational& v) {
                return approx_decimal ? textio::format_decimal(v) : textio::format_rational(v);
            };
            err << "cost: " << render(result.achieved_cost) << "\n";
            err << "budget: " << render(result.budget_used) << "\n";
            err << "ratio-bound: " << render(result.ratio_bound) << "\n";
            return kOk;
        }

        if (*verify) {
            std::optional<std::size_t> alphabet;
            if (verify_alphabet) alphabet = verify_alphabet;
            Code code = read_code_file(verify_path, alphabet);
            bool result = property == "prefix"    ? is_prefix_free(code)
                          : property == "suffix"  ? is_suffix_free(code)
                          : property == "fixfree" ? is_fix_free(code)
                                                  : is_uniquely_decodable(code);
            out << (result ? "TRUE" : "FALSE") << "\n";
            return result ? kOk : kNegative;
        }

        if (*cost) {
            CostModel cm(textio::parse_rational_list(costs_text));
            Code code = read_code_file(cost_path, cm.alphabet_size());
            Distribution dist = probs_text.empty()
                                    ? Distribution::uniform(code.size())
                                    : Distribution(textio::parse_rational_list(probs_text));
            Rational value = average_cost(code, dist, cm);
            out << (cost_decimal ? textio::format_decimal(value) : textio::format_rational(value))
                << "\n";
            return kOk;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kUsage;
    } catch (const textio::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace codecomp::cli
