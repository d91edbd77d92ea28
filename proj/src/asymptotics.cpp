#include "lpg/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lpg/errors.hpp"
#include "lpg/gfpaths.hpp"
#include "lpg/gftrees.hpp"
#include "lpg/numkernel.hpp"

namespace lpg {

namespace {

struct LawEntry {
  LawKind kind;
  const char* name;
};

constexpr LawEntry kLaws[] = {
    {LawKind::horton_avg, "horton_avg"},       {LawKind::node_count_growth, "node_count_growth"},
    {LawKind::marked_leaves, "marked_leaves"}, {LawKind::marked_height, "marked_height"},
    {LawKind::red_edges, "red_edges"},         {LawKind::retakh_height, "retakh_height"},
    {LawKind::retakh_leaves, "retakh_leaves"}, {LawKind::motzkin_height, "motzkin_height"},
    {LawKind::amplitude_avg, "amplitude_avg"}, {LawKind::amplitude_split, "amplitude_split"},
    {LawKind::kemp_valley, "kemp_valley"},     {LawKind::kemp_gap, "kemp_gap"},
};

// Average height in edges: sum over h >= 1 of P(height in nodes > h).
std::vector<Rational> marked_heights(const std::vector<int>& ns) {
  const int N = *std::max_element(ns.begin(), ns.end());
  const PowerSeries total = marked_count_series(N);
  const PowerSeries z = PowerSeries::identity(Var::z, N);
  const PowerSeries num = PowerSeries::polynomial(Var::z, N, {0, 2, -1});
  const PowerSeries one = PowerSeries::constant(Var::z, N, 1);
  std::vector<Rational> above(static_cast<std::size_t>(N) + 1, 0);
  PowerSeries p = z;  // height <= 1
  for (int h = 1; h < N; ++h) {
    for (int n = h + 1; n <= N; ++n) above[n] += total.scalar(n) - p.scalar(n);
    p = num / (one - p) - z;
  }
  std::vector<Rational> r;
  for (int n : ns) r.push_back(n < 1 ? Rational(0) : above[n] / total.scalar(n));
  return r;
}

std::vector<Rational> motzkin_heights(const std::vector<int>& ns) {
  const int N = *std::max_element(ns.begin(), ns.end());
  std::vector<PowerSeries> bounded;
  for (int h = 0; h < N; ++h) bounded.push_back(motzkin_bounded(h, MotzkinVariant::all, N));
  std::vector<Rational> r;
  for (int n : ns) {
    const auto row = trinomial_row_recurrence(n, 1);
    Integer count = row[static_cast<std::size_t>(n)];
    if (n >= 2) count -= row[static_cast<std::size_t>(n + 2)];
    Integer s = 0;
    for (int h = 0; h < n; ++h) s += count - bounded[h].integer(n);
    r.push_back(ratio(s, count));
  }
  return r;
}

std::vector<Rational> kemp_coeffs(LawKind kind, const std::vector<int>& ms) {
  const int M = *std::max_element(ms.begin(), ms.end());
  PowerSeries s = kemp_valley_series(M);
  if (kind == LawKind::kemp_gap) s = kemp_peak_series(M) - s;
  std::vector<Rational> r;
  for (int m : ms) r.push_back(s.scalar(m));
  return r;
}

}  // namespace

LawKind parse_law(const std::string& name) {
  for (const auto& e : kLaws)
    if (name == e.name) return e.kind;
  throw UsageError("unknown asymptotic law: " + name);
}

std::string law_name(LawKind kind) {
  for (const auto& e : kLaws)
    if (e.kind == kind) return e.name;
  throw UsageError("unknown asymptotic law");
}

std::vector<LawKind> all_laws() {
  std::vector<LawKind> r;
  for (const auto& e : kLaws) r.push_back(e.kind);
  return r;
}

double eval_law(LawKind kind, double n, const LawParams& params) {
  using std::numbers::pi;
  if (n < 1) throw DomainError("eval_law: n must be >= 1");
  const double ln2 = std::numbers::ln2;
  switch (kind) {
    case LawKind::horton_avg: {
      const double A = 4.0 + params.a;
      return std::log(n) / std::log(4.0) - std::numbers::egamma / (2 * ln2) - 1 / ln2 + 1.5 +
             std::log(pi) / ln2 - std::log(A) / (2 * ln2);
    }
    case LawKind::node_count_growth: {
      const double A = 4.0 + params.a;
      return std::pow(A, n + 0.5) / (2 * std::sqrt(pi) * std::pow(n, 1.5));
    }
    case LawKind::marked_leaves:
      return n / 10;
    case LawKind::marked_height:
      return 2 / std::sqrt(5.0) * std::sqrt(pi * n);
    case LawKind::red_edges:
      return n / 5;
    case LawKind::retakh_height:
      return 2 * std::sqrt(pi * n / 3);
    case LawKind::retakh_leaves:
      return 4 * n / 9;
    case LawKind::motzkin_height:
      return std::sqrt(pi * n / 3);
    case LawKind::amplitude_avg:
      return 2 * std::sqrt(pi * n / 3);
    case LawKind::amplitude_split:
      return 0.5;
    case LawKind::kemp_valley:
      return 4 * std::sqrt(2.0) * std::sqrt(n / pi) - 2 + 5 * std::sqrt(2.0) / (8 * std::sqrt(pi * n));
    case LawKind::kemp_gap:
      return 2 - std::sqrt(2.0) / std::sqrt(pi * n);
  }
  throw UsageError("unknown asymptotic law");
}

bool has_exact(LawKind kind) { return kind != LawKind::retakh_height; }

std::vector<Rational> exact_ladder(LawKind kind, const std::vector<int>& ns, const LawParams& params) {
  if (ns.empty()) return {};
  if (*std::min_element(ns.begin(), ns.end()) < 1) throw DomainError("exact_ladder: n must be >= 1");
  std::vector<Rational> r;
  switch (kind) {
    case LawKind::horton_avg:
      for (int n : ns) r.push_back(horton_average(n, params.a));
      return r;
    case LawKind::node_count_growth:
      for (int n : ns) r.push_back(Rational(unary_binary_count(n, params.a)));
      return r;
    case LawKind::marked_leaves:
      for (int n : ns) r.push_back(marked_leaf_average(n));
      return r;
    case LawKind::marked_height:
      return marked_heights(ns);
    case LawKind::red_edges:
      for (int n : ns) r.push_back(skew_red_average(n));
      return r;
    case LawKind::retakh_leaves:
      for (int n : ns) r.push_back(retakh_leaf_average(n));
      return r;
    case LawKind::motzkin_height:
      return motzkin_heights(ns);
    case LawKind::amplitude_avg:
      for (int n : ns) r.push_back(amplitude_average(n));
      return r;
    case LawKind::amplitude_split:
      for (int n : ns) r.push_back(amplitude_horiz_fraction(n));
      return r;
    case LawKind::kemp_valley:
    case LawKind::kemp_gap:
      return kemp_coeffs(kind, ns);
    case LawKind::retakh_height:
      break;
  }
  throw UsageError("no exact values for law " + law_name(kind));
}

TrendReport trend_check(LawKind kind, const std::vector<std::pair<long, Rational>>& exact,
                        const LawParams& params, double slack) {
  TrendReport rep{{}, slack, true};
  for (const auto& [n, value] : exact) {
    const double e = value.get_d();
    const double a = eval_law(kind, static_cast<double>(n), params);
    rep.rows.push_back({n, e, a, std::abs(e / a - 1)});
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].rel_dev > (1 + slack) * rep.rows[i - 1].rel_dev) rep.decreasing = false;
  return rep;
}

std::string TrendReport::csv() const {
  std::ostringstream out;
  out.precision(10);
  out << "n,exact,asymptotic,rel_dev\n";
  for (const auto& r : rows) out << r.n << ',' << r.exact << ',' << r.asymptotic << ',' << r.rel_dev << '\n';
  return out.str();
}

}  // namespace lpg
