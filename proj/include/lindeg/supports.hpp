#pragma once

// Support sets of the linear degeneration family, computed two independent
// ways and cross-checked:
//   predicted: rank tuples r(x) of Motzkin paths (combinatorics only);
//   computed:  parameters y with mu_y != 0, mapped through the general
//              Knight-Zelevinsky min-formula and filtered by r >= r^1.

#include "lindeg/combinatorics.hpp"
#include "lindeg/expansion.hpp"

#include <string>
#include <vector>

namespace lindeg {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// One parameter of the canonical expansion with everything attached to it.
struct ExpansionTerm {
  PTuple y;
  Multisegment multisegment;
  RankTuple rank;  // r(dual(y'))
  LaurentPoly mu;
};

struct SupportReport {
  int n = 0;
  BigInt motzkin_count;
  std::vector<RankTuple> supports;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// Rank tuples sorted by off-diagonal vector, duplicates removed.
std::vector<RankTuple> canonical_rank_set(std::vector<RankTuple> tuples);

std::vector<RankTuple> predicted_supports(int n);

/// Nonzero canonical coefficients of M, in descending lexicographic order of y.
std::vector<ExpansionTerm> expansion_terms(int n);
std::vector<ExpansionTerm> expansion_terms(const Expansion& mu);

std::vector<RankTuple> computed_supports(int n);
std::vector<RankTuple> computed_supports(const std::vector<ExpansionTerm>& terms);

/// Runs every cross-check; `max_n` bounds the algebraic pipeline.
SupportReport verify_theorem(int n, int max_n = kDefaultMaxExpansionN);

struct AsymptoticsRow {
  int n = 0;
  BigInt motzkin;
  BigInt bell;
  std::string ratio;  // 20 significant digits
};

std::vector<AsymptoticsRow> asymptotics_report(int max_n);

/// num/den (both positive) rounded half-up to `digits` significant digits.
/// Fixed notation for 1e-5 <= value < 1e20, otherwise "d.ddd...e-XX".
std::string decimal_ratio(const BigInt& num, const BigInt& den, int digits = 20);

}  // namespace lindeg
