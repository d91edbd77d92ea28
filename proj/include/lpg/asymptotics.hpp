#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpg/markerpoly.hpp"

namespace lpg {

enum class LawKind {
  horton_avg,
  node_count_growth,
  marked_leaves,
  marked_height,
  red_edges,
  retakh_height,
  retakh_leaves,
  motzkin_height,
  amplitude_avg,
  amplitude_split,
  kemp_valley,
  kemp_gap,
};

// Unary colours for the Horton laws; other kinds ignore it.
struct LawParams {
  int a = 0;
};

LawKind parse_law(const std::string& name);  // UsageError on unknown names
std::string law_name(LawKind kind);
std::vector<LawKind> all_laws();

// Leading terms only; periodic fluctuations are left out. For the Kemp laws n is m.
double eval_law(LawKind kind, double n, const LawParams& params = {});

// Exact finite-n counterpart of the law, where the library has one.
bool has_exact(LawKind kind);
std::vector<Rational> exact_ladder(LawKind kind, const std::vector<int>& ns, const LawParams& params = {});

struct TrendRow {
  long n;
  double exact;
  double asymptotic;
  double rel_dev;  // |exact/asymptotic - 1|
};

struct TrendReport {
  std::vector<TrendRow> rows;
  double slack;
  // rel_dev[i] <= (1 + slack) rel_dev[i-1] at every step of the ladder
  bool decreasing;
  std::string csv() const;
};

TrendReport trend_check(LawKind kind, const std::vector<std::pair<long, Rational>>& exact,
                        const LawParams& params = {}, double slack = 0.2);

}  // namespace lpg
