#include "lindeg/supports.hpp"

#include "lindeg/duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lindeg {
namespace {

std::string join_tuples(const std::vector<RankTuple>& ts, std::size_t limit = 6) {
  std::string s;
  for (std::size_t i = 0; i < ts.size() && i < limit; ++i) {
    if (i) s += ' ';
    s += ts[i].to_string();
  }
  if (ts.size() > limit) s += " ...";
  return s;
}

std::vector<RankTuple> set_difference(const std::vector<RankTuple>& a, const std::vector<RankTuple>& b) {
  std::vector<RankTuple> out;
  for (const auto& r : a)
    if (std::find(b.begin(), b.end(), r) == b.end()) out.push_back(r);
  return out;
}

Check compare_sets(std::string name, const std::vector<RankTuple>& lhs, const std::vector<RankTuple>& rhs,
                   const char* lhs_name, const char* rhs_name) {
  Check c{std::move(name), lhs == rhs, ""};
  if (c.pass) {
    c.detail = std::to_string(lhs.size()) + " tuples agree";
  } else {
    c.detail = std::string("only in ") + lhs_name + ": [" + join_tuples(set_difference(lhs, rhs)) + "]; only in " +
               rhs_name + ": [" + join_tuples(set_difference(rhs, lhs)) + "]";
  }
  return c;
}

bool next_neighbor_filter(const RankTuple& r) {
  for (int i = 1; i < r.n(); ++i)
    if (r.at(i, i + 1) < r.n()) return false;
  return true;
}

}  // namespace

bool SupportReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<RankTuple> canonical_rank_set(std::vector<RankTuple> tuples) {
  auto key_less = [](const RankTuple& a, const RankTuple& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    const auto ka = a.off_diagonal();
    const auto kb = b.off_diagonal();
    if (ka != kb) return ka < kb;
    return a.flat() < b.flat();
  };
  std::sort(tuples.begin(), tuples.end(), key_less);
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return tuples;
}

std::vector<RankTuple> predicted_supports(int n) {
  std::vector<RankTuple> out;
  for (const auto& x : enumerate_motzkin(n)) out.push_back(rank_from_motzkin(x));
  return canonical_rank_set(std::move(out));
}

std::vector<ExpansionTerm> expansion_terms(int n) { return expansion_terms(mu_coeffs(n)); }

std::vector<ExpansionTerm> expansion_terms(const Expansion& mu) {
  std::vector<ExpansionTerm> out;
  for (auto it = mu.coeffs().rbegin(); it != mu.coeffs().rend(); ++it) {
    Multisegment m = path_to_multisegment(it->first);
    RankTuple r = kz_dual_rank_general(m);
    out.push_back(ExpansionTerm{it->first, std::move(m), std::move(r), it->second});
  }
  return out;
}

std::vector<RankTuple> computed_supports(int n) { return computed_supports(expansion_terms(n)); }

std::vector<RankTuple> computed_supports(const std::vector<ExpansionTerm>& terms) {
  std::vector<RankTuple> out;
  for (const auto& t : terms)
    if (geq_r1(t.rank)) out.push_back(t.rank);
  return canonical_rank_set(std::move(out));
}

SupportReport verify_theorem(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("verify_theorem: n must be >= 1");
  if (n > max_n) {
    throw std::out_of_range("verify_theorem: n=" + std::to_string(n) + " exceeds the supported maximum " +
                            std::to_string(max_n));
  }
  SupportReport report;
  report.n = n;
  report.motzkin_count = motzkin_number(n);

  const std::vector<MotzkinPath> paths = enumerate_motzkin(n);
  const std::vector<RankTuple> predicted = predicted_supports(n);
  const std::vector<ExpansionTerm> terms = expansion_terms(n);
  const std::vector<RankTuple> computed = computed_supports(terms);
  report.supports = computed;

  report.checks.push_back(compare_sets("computed_equals_predicted", computed, predicted, "computed", "predicted"));

  {
    Check c{"motzkin_count", predicted.size() == static_cast<std::size_t>(report.motzkin_count) &&
                                 paths.size() == predicted.size(),
            ""};
    c.detail = "|supports|=" + std::to_string(predicted.size()) + ", |paths|=" + std::to_string(paths.size()) +
               ", M_n=" + report.motzkin_count.str();
    report.checks.push_back(std::move(c));
  }

  {
    // The per-parameter statement: the surviving parameters are exactly the Motzkin paths.
    std::set<PTuple> surviving;
    for (const auto& t : terms)
      if (geq_r1(t.rank)) surviving.insert(t.y);
    std::set<PTuple> motzkin;
    for (const auto& x : paths) motzkin.insert(x.as_ptuple());
    Check c{"surviving_parameters_are_motzkin", surviving == motzkin, ""};
    c.detail = std::to_string(surviving.size()) + " surviving parameters, " + std::to_string(motzkin.size()) +
               " Motzkin paths";
    report.checks.push_back(std::move(c));
  }

  {
    std::size_t missing = 0;
    std::string first;
    for (const auto& x : paths) {
      const bool found = std::any_of(terms.begin(), terms.end(), [&](const ExpansionTerm& t) { return t.y == x.as_ptuple(); });
      if (!found) {
        if (missing++ == 0) first = x.to_string();
      }
    }
    report.checks.push_back(Check{"mu_nonzero_on_motzkin", missing == 0,
                                  missing == 0 ? "all " + std::to_string(paths.size()) + " nonzero"
                                               : std::to_string(missing) + " zero, first " + first});
  }

  {
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for (const auto& y : enumerate_ptuples(n)) {
      const RankTuple r = kz_dual_rank_general(path_to_multisegment(y));
      ++checked;
      if (geq_r1(r) != next_neighbor_filter(r)) ++mismatches;
    }
    report.checks.push_back(Check{"filter_reduces_to_next_neighbor", mismatches == 0,
                                  std::to_string(checked) + " parameters, " + std::to_string(mismatches) +
                                      " mismatches"});
  }

  {
    std::vector<RankTuple> hatted;
    for (const auto& r : predicted) hatted.push_back(hat(r));
    hatted = canonical_rank_set(std::move(hatted));
    const bool all_geq = std::all_of(predicted.begin(), predicted.end(), [](const RankTuple& r) { return geq_r1(r); });
    report.checks.push_back(Check{"hat_invariance", hatted == predicted && all_geq,
                                  all_geq ? "hat maps the support set onto itself" : "a predicted tuple fails r >= r1"});
  }

  if (n >= 2) {
    const std::vector<RankTuple> pbw = pbw_locus_ranks(n);
    const std::vector<RankTuple> missing = set_difference(pbw, predicted);
    report.checks.push_back(Check{"pbw_locus_in_supports", missing.empty(),
                                  missing.empty() ? std::to_string(pbw.size()) + " PBW-locus tuples all supports"
                                                  : "missing: " + join_tuples(missing)});

    const std::vector<MotzkinPath> peaks = enumerate_single_peak(n);
    std::vector<RankTuple> images;
    for (const auto& x : peaks) images.push_back(rank_from_motzkin(x));
    const std::vector<RankTuple> image_set = canonical_rank_set(images);
    const bool bijective = image_set.size() == peaks.size() && image_set == canonical_rank_set(pbw);
    report.checks.push_back(Check{"single_peak_bijection", bijective,
                                  std::to_string(peaks.size()) + " single-peak paths, " +
                                      std::to_string(image_set.size()) + " distinct images, " +
                                      std::to_string(pbw.size()) + " PBW-locus tuples"});
  } else {
    report.checks.push_back(Check{"pbw_locus_in_supports", true, "n = 1: vacuous"});
    report.checks.push_back(Check{"single_peak_bijection", enumerate_single_peak(n).size() == 1, "n = 1: one path"});
  }
  return report;
}

std::vector<AsymptoticsRow> asymptotics_report(int max_n) {
  if (max_n < 1) throw std::invalid_argument("asymptotics_report: max_n must be >= 1");
  std::vector<AsymptoticsRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    AsymptoticsRow row{n, motzkin_number(n), bell_number(n), ""};
    row.ratio = decimal_ratio(row.motzkin, row.bell);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string decimal_ratio(const BigInt& num, const BigInt& den, int digits) {
  if (num <= 0 || den <= 0) throw std::invalid_argument("decimal_ratio: operands must be positive");
  if (digits < 1) throw std::invalid_argument("decimal_ratio: digits must be >= 1");
  // Find e with 10^e <= num/den < 10^{e+1}.
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto pow10 = [](int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
  };
  auto scaled_cmp = [&](int exp) {  // sign of num - den * 10^exp
    const BigInt lhs = exp < 0 ? BigInt(num * pow10(-exp)) : num;
    const BigInt rhs = exp < 0 ? den : BigInt(den * pow10(exp));
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
  };
  while (scaled_cmp(e) < 0) --e;
  while (scaled_cmp(e + 1) >= 0) ++e;

  // scaled = round(num/den * 10^{digits-1-e})
  const int shift = digits - 1 - e;
  BigInt n2 = num;
  BigInt d2 = den;
  if (shift >= 0) {
    n2 *= pow10(shift);
  } else {
    d2 *= pow10(-shift);
  }
  BigInt q = n2 / d2;
  const BigInt r = n2 % d2;
  if (2 * r >= d2) ++q;
  if (q == pow10(digits)) {
    q /= 10;
    ++e;
  }
  std::string ds = q.str();

  if (e >= -5 && e < 20) {
    if (e >= 0) {
      const std::size_t int_len = static_cast<std::size_t>(e + 1);
      if (ds.size() <= int_len) return ds + std::string(int_len - ds.size(), '0');
      return ds.substr(0, int_len) + "." + ds.substr(int_len);
    }
    return "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  std::string out = ds.substr(0, 1);
  if (ds.size() > 1) out += "." + ds.substr(1);
  out += "e";
  out += e < 0 ? "-" : "+";
  const int ae = e < 0 ? -e : e;
  if (ae < 10) out += "0";
  out += std::to_string(ae);
  return out;
}

}  // namespace lindeg
