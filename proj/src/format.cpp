#include "lindeg/format.hpp"

#include "lindeg/duality.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace lindeg {
namespace {

using nlohmann::json;

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// c * v^e with c = +-1, or nullopt.
std::optional<std::pair<int, int>> as_unit(const LaurentPoly& p) {
  if (p.size() != 1) return std::nullopt;
  const auto& [e, c] = p.terms().front();
  if (c == 1) return std::make_pair(1, e);
  if (c == -1) return std::make_pair(-1, e);
  return std::nullopt;
}

// Greedy division by [k], largest k first. Returns the factor list
// (descending) and the cofactor.
std::pair<std::vector<int>, LaurentPoly> peel_quantum_integers(LaurentPoly p) {
  std::vector<int> factors;
  if (p.is_zero()) return {factors, p};
  int k = (p.degree() - p.low_degree()) / 2 + 1;
  for (; k >= 2; --k) {
    const LaurentPoly qk = qint(k);
    while (p.degree() - p.low_degree() >= 2 * (k - 1)) {
      auto q = p.exact_div(qk);
      if (!q) break;
      factors.push_back(k);
      p = *std::move(q);
    }
  }
  return {factors, p};
}

std::string render_factors(const std::vector<int>& factors) {
  // Exactly [k][k-1]...[2] prints as [k]!.
  bool factorial = !factors.empty();
  for (std::size_t i = 0; i < factors.size() && factorial; ++i) {
    factorial = factors[i] == factors.front() - static_cast<int>(i);
  }
  if (factorial && factors.back() == 2) return "[" + std::to_string(factors.front()) + "]!";
  std::string s;
  for (int k : factors) s += "[" + std::to_string(k) + "]";
  return s;
}

std::string with_unit(const std::pair<int, int>& unit, const std::string& body) {
  std::string prefix = unit.first < 0 ? "-" : "";
  if (unit.second != 0) {
    prefix += "v";
    if (unit.second != 1) prefix += "^" + std::to_string(unit.second);
    prefix += " ";
  }
  return prefix + body;
}

int parse_int(std::string_view s, const char* what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

json rank_offdiag_json(const RankTuple& r) { return json(r.off_diagonal()); }

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

std::string rank_header(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!s.empty()) s += ',';
      s += "r_" + std::to_string(i) + "_" + std::to_string(j);
    }
  return s;
}

std::string csv_row(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, json or csv)");
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.str()}));
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), BigInt(t.at(1).get<std::string>()));
  return LaurentPoly::from_terms(std::move(terms));
}

json to_json(const RankTuple& r) {
  json entries = json::array();
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i; j <= r.n(); ++j) entries.push_back(json::array({i, j, r.at(i, j)}));
  return {{"n", r.n()}, {"r", entries}};
}

RankTuple rank_from_json(const json& j) {
  RankTuple r(j.at("n").get<int>());
  for (const auto& e : j.at("r")) r.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
  return r;
}

json to_json(const Multisegment& m) {
  json out = json::array();
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i; j <= m.n(); ++j)
      if (m.at(i, j) != 0) out.push_back(json::array({i, j, m.at(i, j)}));
  return out;
}

std::optional<std::string> factored_form(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  {
    auto [factors, rest] = peel_quantum_integers(p);
    if (auto unit = as_unit(rest); unit && !factors.empty()) return with_unit(*unit, render_factors(factors));
  }
  const int span_limit = (p.degree() - p.low_degree()) / 2 + 2;
  for (int k = 4; k <= span_limit + 2; ++k) {
    for (int m = 2; 2 * m <= k; ++m) {
      const LaurentPoly b = qbinom(k, m);
      auto q = p.exact_div(b);
      if (!q) continue;
      auto [factors, rest] = peel_quantum_integers(*q);
      if (auto unit = as_unit(rest)) {
        return with_unit(*unit, "[" + std::to_string(k) + " choose " + std::to_string(m) + "]" + render_factors(factors));
      }
    }
  }
  return std::nullopt;
}

std::string render_coefficient(const LaurentPoly& p, bool expanded) {
  if (!expanded) {
    if (auto f = factored_form(p)) return *f;
  }
  return to_string(p);
}

Multisegment parse_multisegment(const std::string& text, std::optional<int> n) {
  struct Entry {
    int i, j, mult;
  };
  std::vector<Entry> entries;
  int max_j = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    const auto eq = item.find('=');
    const auto comma = item.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq) {
      throw std::invalid_argument("malformed multisegment entry '" + item + "' (expected i,j=mult)");
    }
    Entry e{parse_int(std::string_view(item).substr(0, comma), "index"),
            parse_int(std::string_view(item).substr(comma + 1, eq - comma - 1), "index"),
            parse_int(std::string_view(item).substr(eq + 1), "multiplicity")};
    if (e.i < 1 || e.j < e.i) throw std::invalid_argument("multisegment entry needs 1 <= i <= j: '" + item + "'");
    if (e.mult < 0) throw std::invalid_argument("negative multiplicity in '" + item + "'");
    max_j = std::max(max_j, e.j);
    entries.push_back(e);
  }
  const int size = n.value_or(max_j);
  if (size < 1) throw std::invalid_argument("empty multisegment needs an explicit n");
  if (max_j > size) throw std::invalid_argument("multisegment index exceeds n=" + std::to_string(size));
  Multisegment m(size);
  for (const auto& e : entries) m.set(e.i, e.j, m.at(e.i, e.j) + e.mult);
  return m;
}

std::string format_expansion(const std::vector<ExpansionTerm>& terms, int n, OutputFormat fmt, bool expanded) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json out{{"n", n}, {"terms", json::array()}};
      for (const auto& t : terms) {
        out["terms"].push_back({{"y", t.y.coords()},
                                {"multisegment", to_json(t.multisegment)},
                                {"rank", to_json(t.rank)},
                                {"rank_offdiag", rank_offdiag_json(t.rank)},
                                {"mu", to_json(t.mu)},
                                {"mu_text", render_coefficient(t.mu, expanded)}});
      }
      os << out.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << "y,multisegment,rank,mu\n";
      for (const auto& t : terms) {
        os << csv_quote(t.y.to_string()) << ',' << csv_quote(t.multisegment.to_string()) << ','
           << csv_quote(t.rank.to_string()) << ',' << csv_quote(render_coefficient(t.mu, expanded)) << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      os << "n = " << n << ", " << terms.size() << " nonzero canonical coefficients\n";
      std::size_t wy = 1, wm = 12, wr = 4;
      for (const auto& t : terms) {
        wy = std::max(wy, t.y.to_string().size());
        wm = std::max(wm, t.multisegment.to_string().size());
        wr = std::max(wr, t.rank.to_string().size());
      }
      os << pad("#", 4) << pad("y", wy + 2) << pad("multisegment", wm + 2) << pad("rank", wr + 2) << "mu\n";
      std::size_t idx = 1;
      for (const auto& t : terms) {
        os << pad(std::to_string(idx++), 4) << pad(t.y.to_string(), wy + 2) << pad(t.multisegment.to_string(), wm + 2)
           << pad(t.rank.to_string(), wr + 2) << render_coefficient(t.mu, expanded) << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string format_report(const SupportReport& report, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json supports = json::array();
      for (const auto& r : report.supports) supports.push_back(to_json(r));
      json out{{"n", report.n},
               {"motzkin_count", report.motzkin_count.str()},
               {"supports", supports},
               {"checks", checks_json(report.checks)}};
      os << out.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << rank_header(report.n) << '\n';
      for (const auto& r : report.supports) os << csv_row(r.off_diagonal()) << '\n';
      break;
    }
    case OutputFormat::Text: {
      os << "n = " << report.n << "\n";
      os << "Motzkin number: " << report.motzkin_count.str() << "\n";
      os << "supports (" << report.supports.size() << "), off-diagonal order " << "(" << rank_header(report.n)
         << "):\n";
      for (const auto& r : report.supports) os << "  " << r.to_string() << '\n';
      os << "checks:\n";
      for (const auto& c : report.checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
      }
      os << (report.all_pass() ? "all checks passed\n" : "VERIFICATION FAILED\n");
      break;
    }
  }
  return os.str();
}

std::string format_motzkin(int n, const std::vector<MotzkinPath>& paths, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json list = json::array();
      for (const auto& p : paths) list.push_back(p.coords());
      os << json{{"n", n}, {"count", paths.size()}, {"paths", list}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      std::string header;
      for (int k = 1; k < n; ++k) header += (k > 1 ? ",x_" : "x_") + std::to_string(k);
      os << header << '\n';
      for (const auto& p : paths) os << csv_row(p.coords()) << '\n';
      break;
    }
    case OutputFormat::Text: {
      os << "n = " << n << ", " << paths.size() << " Motzkin paths\n";
      for (const auto& p : paths) os << "  " << p.to_string() << '\n';
      break;
    }
  }
  return os.str();
}

std::string format_asymptotics(const std::vector<AsymptoticsRow>& rows, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      json list = json::array();
      for (const auto& r : rows) {
        list.push_back({{"n", r.n}, {"motzkin", r.motzkin.str()}, {"bell", r.bell.str()}, {"ratio", r.ratio}});
      }
      os << list.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << "n,motzkin,bell,ratio\n";
      for (const auto& r : rows) os << r.n << ',' << r.motzkin.str() << ',' << r.bell.str() << ',' << r.ratio << '\n';
      break;
    }
    case OutputFormat::Text: {
      std::size_t wm = 3, wb = 3;
      for (const auto& r : rows) {
        wm = std::max(wm, r.motzkin.str().size());
        wb = std::max(wb, r.bell.str().size());
      }
      os << pad("n", 5) << pad("M_n", wm + 2) << pad("B_n", wb + 2) << "M_n/B_n\n";
      for (const auto& r : rows) {
        os << pad(std::to_string(r.n), 5) << pad(r.motzkin.str(), wm + 2) << pad(r.bell.str(), wb + 2) << r.ratio
           << '\n';
      }
      break;
    }
  }
  return os.str();
}

DualResult compute_dual(const Multisegment& m) {
  DualResult d{m, kz_dual_rank_general(m), std::nullopt, std::nullopt, std::nullopt, true};
  if (m.is_near_simple()) {
    d.near_simple = kz_dual_rank_near_simple(m);
    d.consistent = d.consistent && *d.near_simple == d.general;
  }
  if (auto x = as_path_multisegment(m)) {
    d.path = *x;
    d.closed_form = kz_dual_rank_simple(*x);
    d.consistent = d.consistent && *d.closed_form == d.general;
  }
  return d;
}

std::string format_dual(const DualResult& d, OutputFormat fmt) {
  std::ostringstream os;
  // The dual multisegment itself is recovered from its rank tuple.
  std::optional<Multisegment> dual_ms;
  try {
    dual_ms = rank_to_multisegment(d.general);
  } catch (const std::invalid_argument&) {
  }
  switch (fmt) {
    case OutputFormat::Json: {
      json out{{"n", d.input.n()},
               {"input", to_json(d.input)},
               {"general", to_json(d.general)},
               {"consistent", d.consistent}};
      out["dual_multisegment"] = dual_ms ? to_json(*dual_ms) : json(nullptr);
      out["near_simple"] = d.near_simple ? to_json(*d.near_simple) : json(nullptr);
      out["path"] = d.path ? json(d.path->coords()) : json(nullptr);
      out["closed_form"] = d.closed_form ? to_json(*d.closed_form) : json(nullptr);
      os << out.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << "route," << rank_header(d.input.n()) << '\n';
      os << "general," << csv_row(d.general.off_diagonal()) << '\n';
      if (d.near_simple) os << "near_simple," << csv_row(d.near_simple->off_diagonal()) << '\n';
      if (d.closed_form) os << "closed_form," << csv_row(d.closed_form->off_diagonal()) << '\n';
      break;
    }
    case OutputFormat::Text: {
      os << "n = " << d.input.n() << "\n";
      os << "input multisegment: " << d.input.to_string() << "\n";
      os << "dual rank tuple (general formula): " << d.general.to_string() << "\n";
      os << "  diagonal: (";
      for (int i = 1; i <= d.input.n(); ++i) os << (i > 1 ? "," : "") << d.general.at(i, i);
      os << ")\n";
      if (dual_ms) os << "dual multisegment: " << dual_ms->to_string() << "\n";
      if (d.near_simple) os << "dual rank tuple (near-simple formula): " << d.near_simple->to_string() << "\n";
      if (d.closed_form) {
        os << "input is x' for x = " << d.path->to_string() << "\n";
        os << "dual rank tuple (closed form): " << d.closed_form->to_string() << "\n";
      }
      os << (d.consistent ? "routes agree\n" : "INTERNAL ERROR: routes disagree\n");
      break;
    }
  }
  return os.str();
}

}  // namespace lindeg
