#include <doctest.h>

#include <set>

#include "lpg/biject.hpp"
#include "lpg/errors.hpp"

using namespace lpg;

namespace {

std::set<std::string> path_set(const std::vector<LatticePath>& ps) {
  std::set<std::string> r;
  for (const auto& p : ps) r.insert(p.str());
  return r;
}

std::set<std::string> tree_set(const std::vector<Tree>& ts) {
  std::set<std::string> r;
  for (const auto& t : ts) r.insert(tree_str(t));
  return r;
}

}  // namespace

TEST_CASE("multi-edge to 3-Motzkin small cases") {
  Tree leaf = make_ordered({}, true);
  Tree one = make_ordered({Edge{leaf, 1}}, true);
  CHECK(multiedge_to_3motzkin(one).steps.empty());
  Tree heavy = make_ordered({Edge{leaf, 3}}, true);
  CHECK(multiedge_to_3motzkin(heavy).str() == "H2H2");
  CHECK_THROWS_AS(multiedge_to_3motzkin(leaf), DomainError);
  CHECK(tree_str(motzkin3_to_multiedge(parse_path(Family::motzkin, "H2H2"))) == "(3)");
}

TEST_CASE("weight-3 multi-edge trees hit all ten 3-Motzkin paths of length 2") {
  std::set<std::string> image;
  for (const auto& t : gen_multiedge(3)) image.insert(multiedge_to_3motzkin(t).str());
  CHECK(image.size() == 10);
  CHECK(image == path_set(gen_motzkin(2, 3)));
}

TEST_CASE("multi-edge bijection: round trip, image set, blue transport") {
  for (int w = 1; w <= 6; ++w) {
    std::set<std::string> image;
    for (const auto& t : gen_multiedge(w)) {
      LatticePath p = multiedge_to_3motzkin(t);
      CHECK(static_cast<int>(p.steps.size()) == w - 1);
      CHECK(tree_equal(motzkin3_to_multiedge(p), t));
      CHECK(path_stats(p).blue_count == tree_stats(t).heavy_edge_excess);
      image.insert(p.str());
    }
    CHECK(image.size() == gen_multiedge(w).size());
    CHECK(image == path_set(gen_motzkin(w - 1, 3)));
  }
}

TEST_CASE("marked trees to skew paths") {
  Tree chain = make_ordered({Edge{make_ordered({})}});
  CHECK(marked_to_skew(chain).str() == "Ud");
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> image;
    for (const auto& t : gen_marked(n)) {
      LatticePath p = marked_to_skew(t);
      CHECK(static_cast<int>(p.steps.size()) == 2 * n - 2);
      CHECK(path_stats(p).red_count == tree_stats(t).mark_count);
      CHECK(tree_equal(skew_to_marked(p), t));
      image.insert(p.str());
    }
    CHECK(image.size() == gen_marked(n).size());
    CHECK(image == path_set(gen_skew(2 * n - 2, 0)));
  }
  CHECK_THROWS_AS(skew_to_marked(parse_path(Family::skew, "UUdrUd")), DomainError);
}

TEST_CASE("rotation correspondence") {
  Tree one = make_ordered({Edge{make_ordered({}, true), 1}}, true);
  CHECK(tree_str(rotation_multiedge_to_unarybinary(one)) == "(.,.)");
  for (int w = 1; w <= 6; ++w) {
    std::set<std::string> image;
    for (const auto& t : gen_multiedge(w)) {
      Tree b = rotation_multiedge_to_unarybinary(t);
      CHECK(tree_equal(rotation_unarybinary_to_multiedge(b), t));
      image.insert(tree_str(b));
    }
    CHECK(image.size() == gen_multiedge(w).size());
    CHECK(image == tree_set(gen_unary_binary(w, 1)));
  }
}
