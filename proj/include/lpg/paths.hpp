#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lpg/markerpoly.hpp"

namespace lpg {

enum class StepKind : int { up, down, horizontal };
enum class Color : int { black, red, green, blue };

struct Step {
  StepKind kind = StepKind::up;
  int size = 1;  // rise or drop; 0 for horizontal
  Color color = Color::black;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

Step up_step(int rise = 1, Color c = Color::black);
Step down_step(int drop = 1, Color c = Color::black);
// color index 0,1,2 -> red, green, blue
Step horizontal_step(int color_index);
int horizontal_index(const Step& s);

enum class Family { kdyck, skew, dual_skew, motzkin, deutsch, retakh };

struct LatticePath {
  Family family = Family::motzkin;
  int start = 0;
  std::vector<Step> steps;

  int end_level() const;
  // U, d, r, b, H0/H1/H2, D<n>; k-Dyck rises print as U.
  std::string str() const;
  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.family == b.family && a.start == b.start && a.steps == b.steps;
  }
  friend bool operator<(const LatticePath& a, const LatticePath& b) {
    return a.steps < b.steps;
  }
};

// Inverse of LatticePath::str; k is the k-Dyck rise.
LatticePath parse_path(Family family, const std::string& text, int start = 0, int k = 1);

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

struct PathStats {
  int height = 0;
  int amplitude = 0;
  int red_count = 0;
  int blue_count = 0;
  int last_downrun_len = 0;
  std::vector<int> peak_heights;
  std::vector<int> valley_heights;
};

PathStats path_stats(const LatticePath& p);

// Legality rules shared by the exhaustive generator and the DP counter.
// `last` is nullptr at the start of the path.
class PathRules {
 public:
  virtual ~PathRules() = default;
  virtual Family family() const = 0;
  virtual std::vector<Step> next(int level, const Step* last) const = 0;
  // Can `end` still be reached from `level` in exactly `remaining` steps?
  virtual bool feasible(int level, int remaining, int end) const = 0;
  virtual bool accept(int level, const Step* last, int end) const {
    (void)last;
    return level == end;
  }
};

std::vector<LatticePath> generate(const PathRules& rules, int n_steps, int start, int end);
std::vector<LatticePath> generate_serial(const PathRules& rules, int n_steps, int start, int end);
Integer count_paths(const PathRules& rules, int n_steps, int start, int end);

// Rule sets for the families.
class KDyckRules : public PathRules {
 public:
  KDyckRules(int k, int floor, bool require_last_up) : k_(k), floor_(floor), last_up_(require_last_up) {}
  Family family() const override { return Family::kdyck; }
  std::vector<Step> next(int level, const Step* last) const override;
  bool feasible(int level, int remaining, int end) const override;
  bool accept(int level, const Step* last, int end) const override;

 private:
  int k_, floor_;
  bool last_up_;
};

class SkewRules : public PathRules {
 public:
  Family family() const override { return Family::skew; }
  std::vector<Step> next(int level, const Step* last) const override;
  bool feasible(int level, int remaining, int end) const override;
};

class DualSkewRules : public PathRules {
 public:
  Family family() const override { return Family::dual_skew; }
  std::vector<Step> next(int level, const Step* last) const override;
  bool feasible(int level, int remaining, int end) const override;
};

class MotzkinRules : public PathRules {
 public:
  MotzkinRules(int colors, int max_height) : colors_(colors), max_height_(max_height) {}
  Family family() const override { return Family::motzkin; }
  std::vector<Step> next(int level, const Step* last) const override;
  bool feasible(int level, int remaining, int end) const override;

 private:
  int colors_, max_height_;
};

class DeutschRules : public PathRules {
 public:
  DeutschRules(int floor, int ceiling) : floor_(floor), ceiling_(ceiling) {}
  Family family() const override { return Family::deutsch; }
  std::vector<Step> next(int level, const Step* last) const override;
  bool feasible(int level, int remaining, int end) const override;

 private:
  int floor_, ceiling_;
};

class RetakhRules : public PathRules {
 public:
  Family family() const override { return Family::retakh; }
  std::vector<Step> next(int level, const Step* last) const override;
  bool feasible(int level, int remaining, int end) const override;
};

std::vector<LatticePath> gen_kdyck(int k, int n_up, int end_level, int floor, bool require_last_up);
Integer count_kdyck(int k, int n_up, int end_level, int floor, bool require_last_up);
std::vector<LatticePath> gen_skew(int n_steps, int end_level);
Integer count_skew(int n_steps, int end_level);
std::vector<LatticePath> gen_dual_skew(int n_steps, int end_level);
Integer count_dual_skew(int n_steps, int end_level);
std::vector<LatticePath> gen_motzkin(int n, int horiz_colors, int max_height = kUnbounded);
Integer count_motzkin(int n, int horiz_colors, int max_height = kUnbounded);
std::vector<LatticePath> gen_deutsch(int n, int start, int floor, int ceiling, int end);
Integer count_deutsch(int n, int start, int floor, int ceiling, int end);
std::vector<LatticePath> gen_retakh(int n_pairs);
Integer count_retakh(int n_pairs);

}  // namespace lpg
