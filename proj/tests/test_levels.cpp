#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posets/io.hpp"
#include "posets/levels.hpp"
#include "posets/oracle.hpp"
#include "posets/poset.hpp"
#include "support/naive_checks.hpp"

using namespace posets;

namespace {

// {a<c, b<c, b<d}: the four-element "N".
Poset n_poset() { return parse_poset_text("a < c\nb < c\nb < d"); }

}  // namespace

TEST_CASE("level decomposition of the N poset") {
  const auto ld = level_decomposition(n_poset());
  CHECK(ld.height() == 2);
  CHECK(ld.level("a") == 0);
  CHECK(ld.level("b") == 0);
  CHECK(ld.level("c") == 1);
  CHECK(ld.level("d") == 1);
  const Poset& p = ld.poset();
  CHECK(ld.levels()[0] == std::vector<int>{p.index("a"), p.index("b")});
  // Last overwrite wins: both a and b are below c, b is processed second.
  CHECK(ld.pred_ref("c") == "b");
  CHECK(ld.pred_ref("d") == "b");
  CHECK_FALSE(ld.pred_ref("a").has_value());
}

TEST_CASE("level decomposition of a chain walks pred_ref to the bottom") {
  const Poset p = chain_poset({"v", "w", "x", "y", "z"});
  const auto ld = level_decomposition(p);
  CHECK(ld.height() == 5);
  for (int i = 0; i < 5; ++i) CHECK(ld.level(i) == i);
  CHECK(ld.pred_ref("z") == "y");
  CHECK(ld.pred_ref("w") == "v");
}

TEST_CASE("empty poset has height 0") {
  const auto ld = level_decomposition(Poset());
  CHECK(ld.height() == 0);
  CHECK(ld.levels().empty());
}

TEST_CASE("gap and set_gap") {
  const auto ld = level_decomposition(n_poset());
  CHECK(gap(ld, "a", "a") == 0);
  CHECK(gap(ld, "a", "d") == 1);
  CHECK(gap(ld, "d", "a") == 1);

  const auto chain = level_decomposition(chain_poset({"a", "b", "c", "d", "e"}));
  CHECK(gap(chain, "a", "e") == 4);
  CHECK(set_gap(chain, {"a", "b", "c", "d", "e"}) == 4);
  CHECK(set_gap(ld, {"a", "b"}) == 0);
  CHECK(set_gap(ld, {"a", "b", "d"}) == 1);
  CHECK_THROWS_AS(set_gap(ld, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(gap(ld, "a", "nope"), ParseError);
}

TEST_CASE("identity map classifies as consecutive level-induced") {
  const Poset p = n_poset();
  ElementMap identity;
  for (const auto& id : p.elements()) identity.emplace_back(id, id);
  const auto r = classify_embedding(p, p, identity);
  REQUIRE(r.accepted());
  CHECK(*r.kind == EmbeddingKind::ConsecutiveLevelInduced);
}

TEST_CASE("chain-plus-point into a level-aligned host") {
  // Host {x<y, x<z, t<z}: levels computed independently below.
  const Poset host = parse_poset_text("x < y\nx < z\nt < z");
  const auto host_levels = naive::levels(host);
  CHECK(host_levels[static_cast<std::size_t>(host.index("t"))] == 0);
  CHECK(host_levels[static_cast<std::size_t>(host.index("x"))] == 0);

  const Poset pattern = disjoint_sum({chain_poset({"a", "b"}), antichain_poset({"p"})});
  const ElementMap map{{"0.a", "x"}, {"0.b", "y"}, {"1.p", "t"}};
  const auto r = classify_embedding(pattern, host, map);
  REQUIRE(r.accepted());
  CHECK(*r.kind == EmbeddingKind::ConsecutiveLevelInduced);
}

TEST_CASE("rejection reports a witness pair") {
  const Poset pattern = antichain_poset({"a", "b"});
  const Poset host = chain_poset({"a", "b"});
  const auto r = classify_embedding(pattern, host, {{"a", "a"}, {"b", "b"}});
  CHECK_FALSE(r.accepted());
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == std::pair<std::string, std::string>{"a", "b"});
}

TEST_CASE("bad maps are errors, not rejections") {
  const Poset pattern = antichain_poset({"a", "b"});
  const Poset host = antichain_poset({"x", "y"});
  CHECK_THROWS_AS(classify_embedding(pattern, host, {{"a", "x"}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_embedding(pattern, host, {{"a", "x"}, {"b", "x"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_embedding(pattern, host, {{"a", "x"}, {"a", "y"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_embedding(pattern, host, {{"a", "x"}, {"b", "nope"}}), ParseError);
}

TEST_CASE("sweep levels equal the recursive definition, small sizes") {
  for (int n = 0; n <= 5; ++n) {
    PosetEnumeration(n).for_each([&](const Poset& p) {
      const auto ld = level_decomposition(p);
      const auto expected = naive::levels(p);
      for (int x = 0; x < p.size(); ++x) CHECK(ld.level(x) == expected[static_cast<std::size_t>(x)]);
      // Same level implies incomparable; pred_ref sits one level down.
      for (int x = 0; x < p.size(); ++x) {
        for (int y = x + 1; y < p.size(); ++y) {
          if (ld.level(x) == ld.level(y)) CHECK_FALSE(p.comparable(x, y));
        }
        if (ld.level(x) > 0) {
          const int pr = ld.pred_ref(x);
          REQUIRE(pr >= 0);
          CHECK(p.less(pr, x));
          CHECK(ld.level(pr) == ld.level(x) - 1);
        } else {
          CHECK(ld.pred_ref(x) == -1);
        }
      }
      // Height is the size of a maximum chain.
      int longest = 0;
      for (int x = 0; x < p.size(); ++x) {
        longest = std::max(longest, expected[static_cast<std::size_t>(x)] + 1);
      }
      CHECK(ld.height() == longest);
    });
  }
}

TEST_CASE("classification agrees with the table-driven reference, all maps up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    PosetEnumeration(n).for_each([&](const Poset& host) {
      // Patterns: every induced subposet of the host.
      for (unsigned mask = 1; mask < (1u << host.size()); ++mask) {
        std::vector<std::string> subset;
        for (int i = 0; i < host.size(); ++i) {
          if ((mask >> i) & 1u) subset.push_back(host.id(i));
        }
        const Poset pattern = induced(host, subset);
        naive::for_each_injective_map(
            pattern.size(), host.size(), [&](const std::vector<int>& assignment) {
              ElementMap map;
              for (int i = 0; i < pattern.size(); ++i) {
                map.emplace_back(pattern.id(i), host.id(assignment[static_cast<std::size_t>(i)]));
              }
              const auto got = classify_embedding(pattern, host, map);
              const auto expected = naive::classify(pattern, host, assignment);
              CHECK(got.kind == expected);
            });
      }
    });
  }
}
