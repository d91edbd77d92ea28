#include <doctest.h>

#include <map>
#include <set>

#include "lpg/errors.hpp"
#include "lpg/numkernel.hpp"
#include "lpg/trees.hpp"

using namespace lpg;

namespace {

// coefficients of M = 1 + z(M - 1) + z M^2 by direct recurrence
std::vector<long> a002212(int n) {
  std::vector<long> m(static_cast<std::size_t>(n + 1), 0);
  m[0] = 1;
  for (int k = 1; k <= n; ++k) {
    long s = (k == 1 ? 0 : m[k - 1]);
    for (int i = 0; i <= k - 1; ++i) s += m[i] * m[k - 1 - i];
    m[k] = s;
  }
  return m;
}

std::set<std::string> strs(const std::vector<Tree>& ts) {
  std::set<std::string> r;
  for (const auto& t : ts) r.insert(tree_str(t));
  return r;
}

}  // namespace

TEST_CASE("binary trees are Catalan") {
  std::vector<long> cat{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) CHECK(gen_binary(n).size() == static_cast<std::size_t>(cat[n]));
}

TEST_CASE("hex, marked and multi-edge trees follow A002212") {
  auto a = a002212(8);
  CHECK(a[5] == 137);
  for (int n = 1; n <= 8; ++n) {
    CHECK(gen_hex(n).size() == static_cast<std::size_t>(a[n]));
    CHECK(gen_marked(n).size() == static_cast<std::size_t>(a[n - 1]));
    CHECK(gen_multiedge(n).size() == static_cast<std::size_t>(a[n]));
    CHECK(gen_unary_binary(n, 1).size() == static_cast<std::size_t>(a[n]));
  }
  CHECK(gen_multiedge(0).size() == 1);
  CHECK(gen_hex(0).size() == 1);
}

TEST_CASE("hex trees equal unary-binary trees with a = 1 in number") {
  for (int n = 0; n <= 9; ++n) CHECK(gen_hex(n).size() == gen_unary_binary(n, 1).size());
}

TEST_CASE("generators are duplicate free") {
  CHECK(strs(gen_marked(6)).size() == gen_marked(6).size());
  CHECK(strs(gen_multiedge(5)).size() == gen_multiedge(5).size());
  CHECK(strs(gen_unary_binary(5, 2)).size() == gen_unary_binary(5, 2).size());
  CHECK(strs(gen_ternary(5)).size() == gen_ternary(5).size());
  CHECK(strs(gen_hex(6)).size() == gen_hex(6).size());
}

TEST_CASE("ternary trees with middle-edge refinement") {
  std::vector<long> total{1, 1, 3, 12, 55};
  for (int n = 0; n <= 4; ++n) CHECK(gen_ternary(n).size() == static_cast<std::size_t>(total[n]));
  std::map<int, long> dist;
  for (const auto& t : gen_ternary(4)) ++dist[tree_stats(t).middle_edges];
  CHECK(dist == std::map<int, long>{{0, 14}, {1, 28}, {2, 12}, {3, 1}});
  dist.clear();
  for (const auto& t : gen_ternary(3)) ++dist[tree_stats(t).middle_edges];
  CHECK(dist == std::map<int, long>{{0, 5}, {1, 6}, {2, 1}});
  for (int n = 1; n <= 8; ++n)
    CHECK(Integer(static_cast<long>(gen_ternary(n).size())) * n == binomial(3 * n, n - 1));
}

TEST_CASE("reg examples") {
  CHECK(reg(nullptr) == 0);
  CHECK(reg(make_binary(nullptr, nullptr)) == 1);
  std::vector<long> ones{0, 1, 2, 4, 8};
  for (int n = 1; n <= 4; ++n) {
    long c = 0;
    for (const auto& t : gen_binary(n)) c += reg(t) == 1;
    CHECK(c == ones[n]);
  }
  CHECK_THROWS_AS(reg(make_ordered({})), UsageError);
}

TEST_CASE("reg is bounded by floor(log2(n+1))") {
  for (int n = 0; n <= 10; ++n) {
    int bound = 0;
    while ((2 << bound) <= n + 1) ++bound;
    for (const auto& t : gen_binary(n)) CHECK(reg(t) <= bound);
  }
}

TEST_CASE("tree_stats examples") {
  Tree single = make_ordered({});
  auto st = tree_stats(single);
  CHECK(st.leaves == 1);
  CHECK(st.height_nodes == 1);
  CHECK(st.height_edges == 0);
  std::map<int, long> leaves;
  for (const auto& t : gen_marked(4)) ++leaves[tree_stats(t).leaves];
  CHECK(leaves == std::map<int, long>{{1, 4}, {2, 5}, {3, 1}});
}

TEST_CASE("serialization") {
  Tree leaf = make_ordered({}, true);
  Tree mid = make_ordered({Edge{leaf, 1}, Edge{leaf, 2}}, true);
  Tree root = make_ordered({Edge{mid, 3}}, true);
  CHECK(tree_str(root) == "(3(1)(2))");
  CHECK(tree_str(leaf) == ".");
  CHECK(tree_str(make_binary(make_binary(nullptr, nullptr), nullptr)) == "((.,.),.)");
  CHECK(tree_str(make_unary(2, make_binary(nullptr, nullptr))) == "[2:(.,.)]");
  Tree chain = make_ordered({Edge{make_ordered({Edge{make_ordered({})}}), 1, true}});
  CHECK(tree_str(chain) == "[()]");
}
