#include "lpg/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "lpg/errors.hpp"

namespace lpg {

Step up_step(int rise, Color c) { return {StepKind::up, rise, c}; }
Step down_step(int drop, Color c) { return {StepKind::down, drop, c}; }

Step horizontal_step(int color_index) {
  static constexpr Color colors[] = {Color::red, Color::green, Color::blue};
  if (color_index < 0 || color_index > 2) throw UsageError("horizontal color index out of range");
  return {StepKind::horizontal, 0, colors[color_index]};
}

int horizontal_index(const Step& s) {
  switch (s.color) {
    case Color::red: return 0;
    case Color::green: return 1;
    case Color::blue: return 2;
    default: return 0;
  }
}

int LatticePath::end_level() const {
  int level = start;
  for (const auto& s : steps) {
    if (s.kind == StepKind::up) level += s.size;
    if (s.kind == StepKind::down) level -= s.size;
  }
  return level;
}

std::string LatticePath::str() const {
  std::string out;
  for (const auto& s : steps) {
    switch (s.kind) {
      case StepKind::up: out += s.color == Color::blue ? "b" : "U"; break;
      case StepKind::horizontal: out += "H" + std::to_string(horizontal_index(s)); break;
      case StepKind::down:
        if (family == Family::deutsch)
          out += "D" + std::to_string(s.size);
        else
          out += s.color == Color::red ? "r" : "d";
        break;
    }
  }
  return out;
}

LatticePath parse_path(Family family, const std::string& text, int start, int k) {
  LatticePath p{family, start, {}};
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    auto number = [&]() {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw DomainError("path text: missing number after " + std::string(1, c));
      int v = std::atoi(text.substr(i + 1, j - i - 1).c_str());
      i = j - 1;
      return v;
    };
    switch (c) {
      case 'U': p.steps.push_back(up_step(family == Family::kdyck ? k : 1)); break;
      case 'b': p.steps.push_back(up_step(1, Color::blue)); break;
      case 'd': p.steps.push_back(down_step(1)); break;
      case 'r': p.steps.push_back(down_step(1, Color::red)); break;
      case 'H': p.steps.push_back(horizontal_step(number())); break;
      case 'D': p.steps.push_back(down_step(number())); break;
      default: throw DomainError("path text: unknown step '" + std::string(1, c) + "'");
    }
  }
  return p;
}

PathStats path_stats(const LatticePath& p) {
  PathStats st;
  int level = p.start;
  st.height = level;
  std::vector<int> levels{level};
  for (const auto& s : p.steps) {
    if (s.kind == StepKind::up) level += s.size;
    if (s.kind == StepKind::down) level -= s.size;
    levels.push_back(level);
    st.height = std::max(st.height, level);
    if (s.color == Color::red) ++st.red_count;
    if (s.color == Color::blue) ++st.blue_count;
  }
  bool horizontal_on_top = false;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i].kind == StepKind::horizontal && levels[i] == st.height) horizontal_on_top = true;
    if (i + 1 < p.steps.size()) {
      const auto& a = p.steps[i];
      const auto& b = p.steps[i + 1];
      if (a.kind == StepKind::up && b.kind == StepKind::down) st.peak_heights.push_back(levels[i + 1]);
      if (a.kind == StepKind::down && b.kind == StepKind::up) st.valley_heights.push_back(levels[i + 1]);
    }
  }
  st.amplitude = 2 * (st.height - p.start) + (horizontal_on_top ? 1 : 0);
  for (auto it = p.steps.rbegin(); it != p.steps.rend() && it->kind == StepKind::down; ++it)
    ++st.last_downrun_len;
  return st;
}

namespace {

void dfs(const PathRules& rules, int remaining, int level, int end, std::vector<Step>& cur,
         LatticePath& proto, std::vector<LatticePath>& out) {
  const Step* last = cur.empty() ? nullptr : &cur.back();
  if (remaining == 0) {
    if (rules.accept(level, last, end)) {
      proto.steps = cur;
      out.push_back(proto);
    }
    return;
  }
  for (const Step& s : rules.next(level, last)) {
    int nl = level + (s.kind == StepKind::up ? s.size : s.kind == StepKind::down ? -s.size : 0);
    if (!rules.feasible(nl, remaining - 1, end)) continue;
    cur.push_back(s);
    dfs(rules, remaining - 1, nl, end, cur, proto, out);
    cur.pop_back();
  }
}

int apply(int level, const Step& s) {
  return level + (s.kind == StepKind::up ? s.size : s.kind == StepKind::down ? -s.size : 0);
}

std::vector<LatticePath> generate_impl(const PathRules& rules, int n_steps, int start, int end,
                                       bool parallel) {
  std::vector<LatticePath> out;
  if (n_steps < 0) return out;
  LatticePath proto{rules.family(), start, {}};
  if (n_steps == 0 || !rules.feasible(start, n_steps, end)) {
    if (n_steps == 0 && rules.accept(start, nullptr, end)) out.push_back(proto);
    return out;
  }
  // split the search by the first step
  std::vector<Step> first;
  for (const Step& s : rules.next(start, nullptr))
    if (rules.feasible(apply(start, s), n_steps - 1, end)) first.push_back(s);
  std::vector<std::vector<LatticePath>> parts(first.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::vector<Step> cur{first[i]};
    LatticePath local = proto;
    dfs(rules, n_steps - 1, apply(start, first[i]), end, cur, local, parts[i]);
  }
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

int step_code(const Step& s) {
  return static_cast<int>(s.kind) * 1000000 + s.size * 10 + static_cast<int>(s.color);
}

Step decode(int code) {
  Step s;
  s.kind = static_cast<StepKind>(code / 1000000);
  s.size = (code % 1000000) / 10;
  s.color = static_cast<Color>(code % 10);
  return s;
}

}  // namespace

std::vector<LatticePath> generate(const PathRules& rules, int n_steps, int start, int end) {
  return generate_impl(rules, n_steps, start, end, true);
}

std::vector<LatticePath> generate_serial(const PathRules& rules, int n_steps, int start, int end) {
  return generate_impl(rules, n_steps, start, end, false);
}

Integer count_paths(const PathRules& rules, int n_steps, int start, int end) {
  if (n_steps < 0) return 0;
  // state: (level, code of last step), -1 before the first step
  std::map<std::pair<int, int>, Integer> cur{{{start, -1}, 1}};
  for (int pos = 0; pos < n_steps; ++pos) {
    std::map<std::pair<int, int>, Integer> nxt;
    for (const auto& [state, count] : cur) {
      Step last;
      const Step* lp = nullptr;
      if (state.second >= 0) {
        last = decode(state.second);
        lp = &last;
      }
      for (const Step& s : rules.next(state.first, lp)) {
        int nl = apply(state.first, s);
        if (!rules.feasible(nl, n_steps - pos - 1, end)) continue;
        nxt[{nl, step_code(s)}] += count;
      }
    }
    cur = std::move(nxt);
  }
  Integer total = 0;
  for (const auto& [state, count] : cur) {
    Step last;
    const Step* lp = nullptr;
    if (state.second >= 0) {
      last = decode(state.second);
      lp = &last;
    }
    if (rules.accept(state.first, lp, end)) total += count;
  }
  return total;
}

// --- k-Dyck

std::vector<Step> KDyckRules::next(int level, const Step*) const {
  std::vector<Step> r{up_step(k_)};
  if (level - 1 >= floor_) r.push_back(down_step(1));
  return r;
}

bool KDyckRules::feasible(int level, int remaining, int end) const {
  // x ups and y downs with x + y = remaining, k x - y = end - level
  int num = remaining + end - level;
  if (num < 0 || num % (k_ + 1)) return false;
  int ups = num / (k_ + 1);
  if (remaining - ups < 0) return false;
  if (last_up_ && remaining > 0 && ups == 0) return false;
  return true;
}

bool KDyckRules::accept(int level, const Step* last, int end) const {
  if (level != end) return false;
  if (!last_up_) return true;
  return last && last->kind == StepKind::up;
}

// --- skew (decorated): red down never adjacent to an up-step

std::vector<Step> SkewRules::next(int level, const Step* last) const {
  std::vector<Step> r;
  bool after_red = last && last->kind == StepKind::down && last->color == Color::red;
  bool after_up = last && last->kind == StepKind::up;
  if (!after_red) r.push_back(up_step());
  if (level >= 1) {
    r.push_back(down_step());
    if (!after_up) r.push_back(down_step(1, Color::red));
  }
  return r;
}

bool SkewRules::feasible(int level, int remaining, int end) const {
  int gap = std::abs(level - end);
  return level >= 0 && gap <= remaining && (remaining - gap) % 2 == 0;
}

// --- dual skew: automaton with states a (black up / start), c (blue up), b (down)

std::vector<Step> DualSkewRules::next(int level, const Step* last) const {
  bool state_c = last && last->kind == StepKind::up && last->color == Color::blue;
  bool state_b = last && last->kind == StepKind::down;
  std::vector<Step> r{up_step()};
  if (!state_b) r.push_back(up_step(1, Color::blue));
  if (level >= 1 && !state_c) r.push_back(down_step());
  return r;
}

bool DualSkewRules::feasible(int level, int remaining, int end) const {
  int gap = std::abs(level - end);
  return level >= 0 && gap <= remaining && (remaining - gap) % 2 == 0;
}

// --- Motzkin with c horizontal colors, height bound

std::vector<Step> MotzkinRules::next(int level, const Step*) const {
  std::vector<Step> r;
  if (max_height_ == kUnbounded || level < max_height_) r.push_back(up_step());
  if (level >= 1) r.push_back(down_step());
  for (int c = 0; c < colors_; ++c) r.push_back(horizontal_step(c));
  return r;
}

bool MotzkinRules::feasible(int level, int remaining, int end) const {
  return level >= 0 && std::abs(level - end) <= remaining;
}

// --- Deutsch: +1 or any drop, inside [floor, ceiling]

std::vector<Step> DeutschRules::next(int level, const Step*) const {
  std::vector<Step> r;
  if (ceiling_ == kUnbounded || level + 1 <= ceiling_) r.push_back(up_step());
  for (int d = 1; level - d >= floor_; ++d) r.push_back(down_step(d));
  return r;
}

bool DeutschRules::feasible(int level, int remaining, int end) const {
  if (level < floor_ || (ceiling_ != kUnbounded && level > ceiling_)) return false;
  if (remaining == 0) return level == end;
  return end - level <= remaining;
}

// --- Retakh: Dyck paths, peaks only at height 1 or at even heights

std::vector<Step> RetakhRules::next(int level, const Step* last) const {
  std::vector<Step> r{up_step()};
  bool peak = last && last->kind == StepKind::up;
  if (level >= 1 && (!peak || level == 1 || level % 2 == 0)) r.push_back(down_step());
  return r;
}

bool RetakhRules::feasible(int level, int remaining, int end) const {
  int gap = std::abs(level - end);
  return level >= 0 && gap <= remaining && (remaining - gap) % 2 == 0;
}

// --- family entry points

namespace {
int kdyck_length(int k, int n_up, int end_level) { return n_up * (k + 1) - end_level; }
}  // namespace

std::vector<LatticePath> gen_kdyck(int k, int n_up, int end_level, int floor, bool require_last_up) {
  if (k < 1 || n_up < 0) throw DomainError("gen_kdyck: need k >= 1, n_up >= 0");
  int len = kdyck_length(k, n_up, end_level);
  if (len < 0 || len < n_up) return {};
  return generate(KDyckRules(k, floor, require_last_up), len, 0, end_level);
}

Integer count_kdyck(int k, int n_up, int end_level, int floor, bool require_last_up) {
  if (k < 1 || n_up < 0) throw DomainError("count_kdyck: need k >= 1, n_up >= 0");
  int len = kdyck_length(k, n_up, end_level);
  if (len < 0 || len < n_up) return 0;
  return count_paths(KDyckRules(k, floor, require_last_up), len, 0, end_level);
}

std::vector<LatticePath> gen_skew(int n_steps, int end_level) {
  return generate(SkewRules(), n_steps, 0, end_level);
}
Integer count_skew(int n_steps, int end_level) {
  return count_paths(SkewRules(), n_steps, 0, end_level);
}

std::vector<LatticePath> gen_dual_skew(int n_steps, int end_level) {
  return generate(DualSkewRules(), n_steps, 0, end_level);
}
Integer count_dual_skew(int n_steps, int end_level) {
  return count_paths(DualSkewRules(), n_steps, 0, end_level);
}

std::vector<LatticePath> gen_motzkin(int n, int horiz_colors, int max_height) {
  if (horiz_colors < 1 || horiz_colors > 3) throw DomainError("gen_motzkin: 1..3 colors");
  return generate(MotzkinRules(horiz_colors, max_height), n, 0, 0);
}
Integer count_motzkin(int n, int horiz_colors, int max_height) {
  if (horiz_colors < 1 || horiz_colors > 3) throw DomainError("count_motzkin: 1..3 colors");
  return count_paths(MotzkinRules(horiz_colors, max_height), n, 0, 0);
}

std::vector<LatticePath> gen_deutsch(int n, int start, int floor, int ceiling, int end) {
  if (start < floor || (ceiling != kUnbounded && start > ceiling))
    throw DomainError("gen_deutsch: start outside the strip");
  return generate(DeutschRules(floor, ceiling), n, start, end);
}
Integer count_deutsch(int n, int start, int floor, int ceiling, int end) {
  if (start < floor || (ceiling != kUnbounded && start > ceiling))
    throw DomainError("count_deutsch: start outside the strip");
  return count_paths(DeutschRules(floor, ceiling), n, start, end);
}

std::vector<LatticePath> gen_retakh(int n_pairs) { return generate(RetakhRules(), 2 * n_pairs, 0, 0); }
Integer count_retakh(int n_pairs) { return count_paths(RetakhRules(), 2 * n_pairs, 0, 0); }

}  // namespace lpg
