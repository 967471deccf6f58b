#pragma once

// Text, JSON and CSV renderings shared by the CLI and the golden tests.

#include "lindeg/combinatorics.hpp"
#include "lindeg/supports.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lindeg {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& s);

/// [[exponent, "coefficient"], ...] ascending by exponent.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

/// {"n": n, "r": [[i, j, value], ...]} with (i, j) ascending.
nlohmann::json to_json(const RankTuple& r);
RankTuple rank_from_json(const nlohmann::json& j);

/// [[i, j, multiplicity], ...] for the nonzero entries.
nlohmann::json to_json(const Multisegment& m);

/// Product of quantum integers (and at most one quantum binomial) times
/// +-v^e, e.g. "[4][3][2][2]", "[5]!", "[4 choose 2]"; nullopt when the
/// polynomial has no such factorisation.
std::optional<std::string> factored_form(const LaurentPoly& p);

/// Factored form when available unless `expanded`, otherwise to_string(p).
std::string render_coefficient(const LaurentPoly& p, bool expanded);

/// Parses "i,j=mult;i,j=mult;...". n defaults to the largest j seen.
/// Throws std::invalid_argument on malformed input.
Multisegment parse_multisegment(const std::string& text, std::optional<int> n = std::nullopt);

std::string format_expansion(const std::vector<ExpansionTerm>& terms, int n, OutputFormat fmt, bool expanded);
std::string format_report(const SupportReport& report, OutputFormat fmt);
std::string format_motzkin(int n, const std::vector<MotzkinPath>& paths, OutputFormat fmt);
std::string format_asymptotics(const std::vector<AsymptoticsRow>& rows, OutputFormat fmt);

struct DualResult {
  Multisegment input;
  RankTuple general;
  std::optional<RankTuple> near_simple;
  std::optional<PTuple> path;            // when input = x' for x in the parameter set
  std::optional<RankTuple> closed_form;  // closed form on x'
  bool consistent = true;
};

DualResult compute_dual(const Multisegment& m);
std::string format_dual(const DualResult& d, OutputFormat fmt);

}  // namespace lindeg
