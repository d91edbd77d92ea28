// pathgarden: sequences, cross-checks, bijection tables and asymptotic reports.
#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lpg/asymptotics.hpp"
#include "lpg/biject.hpp"
#include "lpg/errors.hpp"
#include "lpg/gfpaths.hpp"
#include "lpg/gftrees.hpp"
#include "lpg/numkernel.hpp"

using namespace lpg;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family;
  std::optional<int> n, j, k, a, w_power, m, t, max;
  std::string format = "tsv";
  std::vector<int> ladder;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

int need_nonneg(const std::optional<int>& v, const char* flag) {
  int x = need(v, flag);
  if (x < 0) throw UsageError(std::string(flag) + " must be >= 0");
  return x;
}

int opt_or(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

// ---- output ------------------------------------------------------------------

// A value is a number (integer or rational), a list of numbers, or a polynomial.
struct Value {
  std::vector<std::string> items;
  bool list = false;
  bool numeric = true;
};

Value num(const Integer& x) { return {{x.get_str()}, false, true}; }
Value num(const Rational& x) { return {{x.get_str()}, false, true}; }
Value text(const std::string& s) { return {{s}, false, false}; }
Value row(const std::vector<Integer>& xs) {
  Value v{{}, true, true};
  for (const auto& x : xs) v.items.push_back(x.get_str());
  return v;
}

class Emitter {
 public:
  explicit Emitter(const std::string& format) : format_(format) {
    if (format_ != "tsv" && format_ != "csv" && format_ != "json-lines")
      throw UsageError("unknown format: " + format_);
    if (format_ == "csv") std::cout << "n,value\n";
  }

  void operator()(long n, const Value& v) const {
    if (format_ == "json-lines") {
      std::cout << "{\"n\":" << n << ",\"value\":" << json(v) << "}\n";
      return;
    }
    const char sep = format_ == "tsv" ? '\t' : ',';
    std::cout << n << sep << join(v.items, format_ == "tsv" ? " " : ";") << '\n';
  }

 private:
  static std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string r;
    for (std::size_t i = 0; i < xs.size(); ++i) r += (i ? sep : "") + xs[i];
    return r;
  }
  static std::string json_atom(const std::string& s, bool numeric) {
    // integers go out as bare numbers; rationals and polynomials as strings
    if (numeric && s.find('/') == std::string::npos) return s;
    return "\"" + s + "\"";
  }
  static std::string json(const Value& v) {
    if (!v.list) return json_atom(v.items.at(0), v.numeric);
    std::string r = "[";
    for (std::size_t i = 0; i < v.items.size(); ++i) r += (i ? "," : "") + json_atom(v.items[i], v.numeric);
    return r + "]";
  }

  std::string format_;
};

void emit_series(const Emitter& out, const PowerSeries& s, int from, int step = 1) {
  for (int n = from; n <= s.order(); n += step) {
    if (s.is_scalar()) out(n, num(s.scalar(n)));
    else out(n, text(s[n].str()));
  }
}

// ---- seq -----------------------------------------------------------------------

int cmd_seq(const Options& o) {
  const Emitter out(o.format);
  const std::string& f = o.family;
  if (f == "a002212") {
    const int N = need_nonneg(o.n, "--n");
    for (int n = 0; n <= N; ++n) out(n, num(unary_binary_count(n, 1)));
  } else if (f == "skew-sj" || f == "dual-gj") {
    const int N = need_nonneg(o.n, "--n"), j = need_nonneg(o.j, "--j");
    // only n = j mod 2 carries paths
    for (int n = j; n <= N; n += 2)
      out(n, num(f == "skew-sj" ? skew_sj_coeff(n, j) : dual_skew_coeff((n - j) / 2, j)));
  } else if (f == "skew-red") {
    const int N = need_nonneg(o.n, "--n");
    if (o.w_power) {
      if (*o.w_power < 0) throw UsageError("--w-power must be >= 0");
      emit_series(out, skew_red_fixed_power(*o.w_power, N), 0);
    } else {
      emit_series(out, skew_red_series(N), 0);
    }
  } else if (f == "hoppy-neg") {
    const int N = need_nonneg(o.n, "--n"), k = need(o.k, "--k");
    if (k < 1) throw UsageError("--k must be >= 1");
    emit_series(out, hoppy_negative_series(k, N), 1);
  } else if (f == "ternary-T") {
    const int N = need_nonneg(o.n, "--n");
    for (int n = 1; n <= N; ++n) {
      std::vector<Integer> r;
      for (int k = 0; k < n; ++k) r.push_back(ternary_T(n, k));
      out(n, row(r));
    }
  } else if (f == "deutsch-phi") {
    const int N = need_nonneg(o.n, "--n");
    const int t = need_nonneg(o.t, "--t"), j = need_nonneg(o.j, "--j");
    const int m = o.m ? *o.m : kUnbounded;
    if (o.m && (t >= m || j >= m)) throw UsageError("--t and --j must be < --m");
    emit_series(out, deutsch_phi(t, j, m, N), 0);
  } else if (f == "amplitude") {
    // paths of length n by amplitude 0..n
    const int N = need_nonneg(o.n, "--n");
    for (int n = 0; n <= N; ++n) {
      std::vector<Integer> r(static_cast<std::size_t>(n) + 1, 0);
      for (int h = 0; 2 * h <= n; ++h) {
        r[2 * h] = amplitude_coeff(n, h, AmplitudeKind::no_horiz);
        if (2 * h + 1 <= n) r[2 * h + 1] = amplitude_coeff(n, h, AmplitudeKind::horiz);
      }
      out(n, row(r));
    }
  } else if (f == "kemp-valley" || f == "kemp-peak") {
    const int N = need_nonneg(o.n, "--n");
    emit_series(out, f == "kemp-valley" ? kemp_valley_series(N) : kemp_peak_series(N), 1);
  } else if (f == "horton-Rp") {
    const int N = need_nonneg(o.n, "--n");
    emit_series(out, horton_Rp(need_nonneg(o.k, "--k"), opt_or(o.a, 0), N), 0);
  } else if (f == "marked-ph") {
    const int N = need_nonneg(o.n, "--n"), h = need(o.k, "--k");
    if (h < 1) throw UsageError("--k must be >= 1");
    emit_series(out, marked_height_ph(h, N), 0);
  } else if (f == "retakh") {
    const int N = need_nonneg(o.n, "--n");
    if (o.k) {
      if (*o.k < 1) throw UsageError("--k must be >= 1");
      emit_series(out, retakh_Gk(*o.k, N), 0);
    } else {
      emit_series(out, retakh_full(N), 1);
    }
  } else {
    throw UsageError("unknown seq family: " + f);
  }
  return 0;
}

// ---- check ---------------------------------------------------------------------

class Report {
 public:
  void operator()(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
    failed_ = failed_ || !ok;
  }
  int exit_code() const { return failed_ ? kExitCheckFailed : 0; }

 private:
  bool failed_ = false;
};

std::string label(const std::string& head, std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream s;
  s << head;
  for (const auto& [k, v] : kv) s << ' ' << k << '=' << v;
  return s.str();
}

void check_skew(Report& rep, int max) {
  for (int j = 0; j <= max; ++j) {
    const PowerSeries s = skew_sj_series(j, max), g = dual_skew_Gj_series(j, max);
    bool ok_s = true, ok_g = true;
    for (int n = 0; n <= max; ++n) {
      const Integer c = count_skew(n, j);
      ok_s = ok_s && s.integer(n) == c && skew_sj_coeff(n, j) == c;
      const Integer d = count_dual_skew(n, j);
      const Integer formula = (n >= j && (n - j) % 2 == 0) ? dual_skew_coeff((n - j) / 2, j) : Integer(0);
      ok_g = ok_g && g.integer(n) == d && formula == d;
    }
    rep(ok_s, label("skew s_j formula=series=oracle", {{"j", j}, {"max", max}}));
    rep(ok_g, label("dual skew G_j formula=series=oracle", {{"j", j}, {"max", max}}));
  }
}

void check_deutsch(Report& rep, int m, int max) {
  if (m < 1) throw UsageError("--m must be >= 1");
  const PowerSeries d = deutsch_det(m, max), db = deutsch_det_band(m, max);
  rep(d == db, label("deutsch determinant closed=band", {{"m", m}}));
  for (int t = 0; t < m; ++t)
    for (int j = 0; j < m; ++j) {
      const PowerSeries closed = deutsch_phi(t, j, m, max);
      bool ok = closed == deutsch_phi_band(t, j, m, max);
      for (int n = 0; n <= max && ok; ++n) ok = closed.integer(n) == count_deutsch(n, t, 0, m - 1, j);
      rep(ok, label("deutsch phi closed=band=oracle", {{"m", m}, {"t", t}, {"j", j}, {"max", max}}));
    }
}

template <class From, class To, class Fwd, class Back, class Key>
bool round_trip_onto(const std::vector<From>& dom, const std::vector<To>& cod, Fwd fwd, Back back, Key key,
                     std::function<bool(const From&, const To&)> stat) {
  std::set<std::string> image, target;
  for (const auto& x : cod) target.insert(key(x));
  for (const auto& x : dom) {
    To y = fwd(x);
    if (!tree_equal(back(y), x) || !stat(x, y)) return false;
    image.insert(key(y));
  }
  return image.size() == dom.size() && image == target;
}

void check_bijections(Report& rep, int max) {
  auto pkey = [](const LatticePath& p) { return p.str(); };
  auto tkey = [](const Tree& t) { return tree_str(t); };
  for (int w = 1; w <= max; ++w) {
    bool ok = round_trip_onto<Tree, LatticePath>(
        gen_multiedge(w), gen_motzkin(w - 1, 3), multiedge_to_3motzkin, motzkin3_to_multiedge, pkey,
        [](const Tree& t, const LatticePath& p) { return tree_stats(t).heavy_edge_excess == path_stats(p).blue_count; });
    rep(ok, label("multi-edge <-> 3-Motzkin", {{"weight", w}}));
    ok = round_trip_onto<Tree, Tree>(gen_multiedge(w), gen_unary_binary(w, 1), rotation_multiedge_to_unarybinary,
                                     rotation_unarybinary_to_multiedge, tkey,
                                     [](const Tree&, const Tree&) { return true; });
    rep(ok, label("rotation multi-edge <-> unary-binary", {{"weight", w}}));
  }
  for (int n = 1; n <= max + 1; ++n) {
    bool ok = round_trip_onto<Tree, LatticePath>(
        gen_marked(n), gen_skew(2 * n - 2, 0), marked_to_skew, skew_to_marked, pkey,
        [](const Tree& t, const LatticePath& p) { return tree_stats(t).mark_count == path_stats(p).red_count; });
    rep(ok, label("marked <-> skew", {{"nodes", n}}));
  }
}

int cmd_check(const Options& o) {
  Report rep;
  const int max = need_nonneg(o.max, "--max");
  if (o.family == "skew") check_skew(rep, max);
  else if (o.family == "deutsch-strip") check_deutsch(rep, need(o.m, "--m"), max);
  else if (o.family == "bijections") check_bijections(rep, max);
  else throw UsageError("unknown check family: " + o.family);
  return rep.exit_code();
}

// ---- bij -------------------------------------------------------------------------

int cmd_bij(const Options& o) {
  const int n = need(o.n, "--n");
  if (n < 1) throw UsageError("--n must be >= 1");
  if (o.family == "multiedge-motzkin") {
    for (const auto& t : gen_multiedge(n)) std::cout << tree_str(t) << '\t' << multiedge_to_3motzkin(t).str() << '\n';
  } else if (o.family == "marked-skew") {
    for (const auto& t : gen_marked(n)) std::cout << tree_str(t) << '\t' << marked_to_skew(t).str() << '\n';
  } else if (o.family == "rotation") {
    for (const auto& t : gen_multiedge(n))
      std::cout << tree_str(t) << '\t' << tree_str(rotation_multiedge_to_unarybinary(t)) << '\n';
  } else {
    throw UsageError("unknown bijection: " + o.family);
  }
  return 0;
}

// ---- asym -------------------------------------------------------------------------

std::vector<int> default_ladder(LawKind kind) {
  switch (kind) {
    case LawKind::horton_avg: return {256, 512, 1024, 2048, 4096};
    case LawKind::kemp_valley:
    case LawKind::kemp_gap: return {5, 10, 20, 40};
    case LawKind::marked_height:
    case LawKind::motzkin_height: return {25, 50, 100};
    default: return {25, 50, 100, 200};
  }
}

int cmd_asym(const Options& o) {
  const LawKind kind = parse_law(o.family);
  const LawParams params{opt_or(o.a, 0)};
  const std::vector<int> ns = o.ladder.empty() ? default_ladder(kind) : o.ladder;
  std::vector<std::pair<long, Rational>> exact;
  const auto values = exact_ladder(kind, ns, params);
  for (std::size_t i = 0; i < ns.size(); ++i) exact.push_back({ns[i], values[i]});
  const TrendReport rep = trend_check(kind, exact, params);
  std::cout << rep.csv();
  std::cerr << "decreasing=" << (rep.decreasing ? "yes" : "no") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pathgarden: lattice path and tree enumeration"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "family, bijection or law name")->required();
    sub->add_option("--n", o.n, "largest index");
    sub->add_option("--j", o.j, "end level / index j");
    sub->add_option("--k", o.k, "k-Dyck rise, or p / h / k for the tree families");
    sub->add_option("--a", o.a, "unary colours for Horton");
    sub->add_option("--w-power", o.w_power, "fixed power of w for skew-red");
    sub->add_option("--m", o.m, "strip width");
    sub->add_option("--t", o.t, "start level");
    sub->add_option("--max", o.max, "size budget for checks");
    sub->add_option("--format", o.format, "tsv, csv or json-lines")
        ->check(CLI::IsMember({"tsv", "csv", "json-lines"}));
  };
  CLI::App* seq = app.add_subcommand("seq", "print a sequence as n<TAB>value lines");
  CLI::App* check = app.add_subcommand("check", "formula = series = oracle agreement");
  CLI::App* bij = app.add_subcommand("bij", "table of (preimage, image) pairs");
  CLI::App* asym = app.add_subcommand("asym", "exact values against an asymptotic law, as CSV");
  for (CLI::App* sub : {seq, check, bij, asym}) add_common(sub);
  asym->add_option("--ladder", o.ladder, "comma-separated n values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*seq) return cmd_seq(o);
    if (*check) return cmd_check(o);
    if (*bij) return cmd_bij(o);
    return cmd_asym(o);
  } catch (const UsageError& e) {
    std::cerr << "pathgarden: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "pathgarden: " << e.what() << '\n';
  }
  return kExitUsage;
}
