// lindeg: supports of linear degenerations of flag varieties.
//
//   lindeg motzkin <n>          Motzkin paths of length n
//   lindeg expand <n>           canonical-basis expansion of M
//   lindeg supports <n>         support set with cross-checks
//   lindeg verify <n>           same, exit status 1 on any failed check
//   lindeg asymptotics <max_n>  M_n, B_n and M_n/B_n
//   lindeg dual <multisegment>  dual rank tuple, e.g. "1,1=2;1,2=1;2,2=2" or 1,1=2 1,2=1 2,2=2
//
// Exit status: 0 success, 1 failed verification or internal error, 2 usage error.

#include "lindeg/combinatorics.hpp"
#include "lindeg/expansion.hpp"
#include "lindeg/format.hpp"
#include "lindeg/supports.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  int motzkin = 16;
  int expansion = lindeg::kDefaultMaxExpansionN;
  int asymptotics = 1000;
  int dual = 8;
};

int checked_n(int n, int lower, int default_cap, std::optional<int> override_cap, const char* what) {
  const int cap = override_cap.value_or(default_cap);
  if (n < lower || n > cap) {
    throw UsageError(std::string(what) + ": n=" + std::to_string(n) + " outside the supported range [" +
                     std::to_string(lower) + ", " + std::to_string(cap) + "]" +
                     (n > cap ? "; pass --max-n to raise the limit" : ""));
  }
  if (override_cap && n > default_cap) {
    std::cerr << "warning: n=" << n << " exceeds the default limit " << default_cap << " for " << what
              << "; runtime and memory grow steeply with n\n";
  }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supports of linear degenerations of flag varieties via canonical-basis expansion"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::optional<int> max_n;
  bool expanded = false;
  app.add_option("--format", format_name, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-n", max_n, "Raise the size limit of the chosen subcommand")->check(CLI::PositiveNumber);
  app.add_flag("--expanded", expanded, "Print coefficients as expanded Laurent polynomials");

  int n = 0;
  auto* motzkin = app.add_subcommand("motzkin", "List Motzkin paths of length n");
  motzkin->add_option("n", n, "Path length")->required();
  auto* expand = app.add_subcommand("expand", "Expand M in the canonical basis");
  expand->add_option("n", n, "Rank n of sl_{n+1}")->required();
  auto* supports = app.add_subcommand("supports", "Support set of the family, with cross-checks");
  supports->add_option("n", n, "Rank n of sl_{n+1}")->required();
  auto* verify = app.add_subcommand("verify", "Cross-check computed and predicted supports");
  verify->add_option("n", n, "Rank n of sl_{n+1}")->required();
  auto* asymptotics = app.add_subcommand("asymptotics", "Motzkin/Bell table up to max_n");
  asymptotics->add_option("max_n", n, "Largest n")->required();
  std::vector<std::string> multisegment_parts;
  std::optional<int> dual_n;
  auto* dual = app.add_subcommand("dual", "Rank tuple of the Knight-Zelevinsky dual");
  dual->add_option("multisegment", multisegment_parts, "Entries i,j=mult, separated by ; or given as separate arguments")
      ->required();
  dual->add_option("--n", dual_n, "Rank n (default: largest j in the input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Limits limits;
  try {
    const lindeg::OutputFormat fmt = lindeg::parse_output_format(format_name);
    if (*motzkin) {
      checked_n(n, 1, limits.motzkin, max_n, "motzkin");
      std::cout << lindeg::format_motzkin(n, lindeg::enumerate_motzkin(n), fmt);
      return kExitOk;
    }
    if (*expand) {
      checked_n(n, 1, limits.expansion, max_n, "expand");
      std::cout << lindeg::format_expansion(lindeg::expansion_terms(n), n, fmt, expanded);
      return kExitOk;
    }
    if (*supports || *verify) {
      checked_n(n, 1, limits.expansion, max_n, *verify ? "verify" : "supports");
      const lindeg::SupportReport report = lindeg::verify_theorem(n, n);
      std::cout << lindeg::format_report(report, fmt);
      return report.all_pass() ? kExitOk : kExitFailed;
    }
    if (*asymptotics) {
      checked_n(n, 1, limits.asymptotics, max_n, "asymptotics");
      std::cout << lindeg::format_asymptotics(lindeg::asymptotics_report(n), fmt);
      return kExitOk;
    }
    if (*dual) {
      lindeg::Multisegment m = [&] {
        try {
          std::string text;
          for (const auto& part : multisegment_parts) text += part + ";";
          return lindeg::parse_multisegment(text, dual_n);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      checked_n(m.n(), 1, limits.dual, max_n, "dual");
      const lindeg::DualResult result = lindeg::compute_dual(m);
      std::cout << lindeg::format_dual(result, fmt);
      return result.consistent ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  std::cerr << app.help();
  return kExitUsage;
}
