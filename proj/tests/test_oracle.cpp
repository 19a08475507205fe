#include "doctest.h"
#include "planrank/catalog.hpp"
#include "planrank/oracle.hpp"

using namespace planrank;

TEST_CASE("abbaba = ababba in m1_2, with a proof that replays") {
  auto const sys = instantiate(1, 2);
  auto const u   = Word::parse("abbaba");
  auto const v   = Word::parse("ababba");
  auto const r   = decide_equal(u, v, sys);
  REQUIRE(r.kind() == EqVerdict::Kind::equal);
  CHECK(r.proof().start == u);
  CHECK(r.proof().end == v);
  CHECK(replay_proof(r.proof(), sys));

  auto const text = to_text(r.proof(), sys);
  auto const back = parse_proof(text);
  CHECK(back.steps == r.proof().steps);
  CHECK(replay_proof(back, sys));
}

TEST_CASE("a = a has the empty proof") {
  auto const r = decide_equal(Word::parse("a"), Word::parse("a"), instantiate(1, 2));
  REQUIRE(r.kind() == EqVerdict::Kind::equal);
  CHECK(r.proof().steps.empty());
}

TEST_CASE("ab and ba differ in m4_1_(123), by a verified model") {
  auto const sys = instantiate(parse_instance_label("m4_1_(123)"));
  auto const u   = Word::parse("ab");
  auto const v   = Word::parse("ba");
  auto const r   = decide_equal(u, v, sys);
  REQUIRE(r.kind() == EqVerdict::Kind::distinct);
  CHECK(verify_counter_model(r.model(), u, v, sys));
  CHECK(r.model().evaluate(u) != r.model().evaluate(v));
  auto const back = parse_model(to_text(r.model()));
  CHECK(back.table == r.model().table);
  CHECK(back.assignment == r.model().assignment);
}

TEST_CASE("tampered proofs and models are rejected") {
  auto const sys = instantiate(1, 2);
  auto       r   = decide_equal(Word::parse("abbaba"), Word::parse("ababba"), sys);
  REQUIRE(r.kind() == EqVerdict::Kind::equal);
  auto p = r.proof();
  REQUIRE(!p.steps.empty());
  auto q = p;
  q.steps[0].position += 1;
  CHECK_FALSE(replay_proof(q, sys));
  q = p;
  q.steps[0].identity = 99;
  CHECK(replay_proof(q, sys).status == ReplayResult::Status::malformed);
  q     = p;
  q.end = Word::parse("ab");
  CHECK(replay_proof(q, sys).status == ReplayResult::Status::invalid);

  auto const sys4 = instantiate(parse_instance_label("m4_1_(123)"));
  auto       m    = decide_equal(Word::parse("ab"), Word::parse("ba"), sys4);
  REQUIRE(m.kind() == EqVerdict::Kind::distinct);
  auto bad = m.model();
  bad.assignment = {0, 0};
  CHECK_FALSE(verify_counter_model(bad, Word::parse("ab"), Word::parse("ba"), sys4));
}

TEST_CASE("each rewrite step is a single identity application") {
  auto const sys = instantiate(1, 2);
  auto const w   = Word::parse("abab");
  for (auto const& [r, step] : rewrite_steps(w, sys, 12)) {
    DerivationProof p{w, r, {step}};
    CHECK(replay_proof(p, sys));
  }
}

TEST_CASE("models of small order satisfy the system") {
  auto const sys = instantiate(1, 2);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (auto const& t : models_of_order(sys, k)) {
      CounterModel m{k, t, {0}};
      // x^2 = x^6 in every model of m1_2
      for (element_type a = 0; a < k; ++a) {
        m.assignment = {a};
        CHECK(m.evaluate(Word::parse("a^2")) == m.evaluate(Word::parse("a^6")));
      }
    }
  }
}
