#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "planrank/catalog.hpp"
#include "planrank/rank.hpp"

using namespace planrank;

namespace {
  RankVerdict rank_of(char const* label) {
    auto const v = planarity_rank(parse_instance_label(label));
    for (auto const& s : v.steps) {
      CHECK(s.certificate_verified);
    }
    CHECK(v.anomalies.empty());
    return v;
  }
}  // namespace

TEST_CASE("ranks of single instances") {
  CHECK(rank_of("m1_1").rank == std::optional<unsigned>(2));
  CHECK(rank_of("m14_(123)").rank == std::optional<unsigned>(3));
  CHECK(rank_of("m43").rank == std::optional<unsigned>(1));
  CHECK(rank_of("m44").rank == std::optional<unsigned>(2));
  CHECK(rank_of("m46").rank == std::optional<unsigned>(2));
}

TEST_CASE("m5, m6 and m7 over all permutations") {
  for (auto const& inst : enumerate_instances({5, 6, 7}, {})) {
    CAPTURE(inst.label());
    auto const v = planarity_rank(inst);
    CHECK(v.rank == std::optional<unsigned>(1));
    CHECK(v.match);
  }
}

TEST_CASE("m2 for small exponents") {
  auto const r = reproduce_table(enumerate_instances({2}, {1, 2, 3}));
  REQUIRE(r.verdicts.size() == 3);
  CHECK(r.verdicts[0].rank == std::optional<unsigned>(2));
  CHECK(r.verdicts[1].rank == std::optional<unsigned>(2));
  CHECK(r.verdicts[2].rank == std::optional<unsigned>(1));
  CHECK(r.all_match());
  CHECK_FALSE(r.verdicts[0].spot_check);
  CHECK(r.verdicts[2].spot_check);
}

TEST_CASE("report formats") {
  auto const r = reproduce_table(enumerate_instances({20}, {}));
  CHECK(r.verdicts.size() == 6);
  CHECK(r.matches == 6);
  auto const j = nlohmann::json::parse(to_json(r));
  CHECK(j["instances"].size() == 6);
  CHECK(j["instances"][0]["computed"] == 1);
  CHECK(j.contains("spot_check_statement"));
  auto const t = to_text_table(r);
  CHECK(t.find("m20_") != std::string::npos);
}

TEST_CASE("options are checked") {
  RankOptions o;
  o.n_max = 1;
  CHECK_THROWS_AS(planarity_rank(parse_instance_label("m43"), o), std::invalid_argument);
}

TEST_CASE("without partial witnesses a large F_n stays undecided") {
  RankOptions o;
  o.partial_witnesses  = false;
  o.caps.max_elements  = 200;
  auto const v = planarity_rank(parse_instance_label("m1_3"), o);
  CHECK(v.indeterminate());
  CHECK_FALSE(v.match);
}
