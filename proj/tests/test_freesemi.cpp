#include <stdexcept>

#include "doctest.h"
#include "planrank/catalog.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/oracle.hpp"

using namespace planrank;

namespace {
  FiniteSemigroup free_of(Instance const& inst, std::size_t gens) {
    auto o = enumerate(instantiate(inst), gens);
    REQUIRE(o.converged());
    return *o.semigroup;
  }
}  // namespace

TEST_CASE("F_3 of m14 has 34 elements for every permutation") {
  for (auto const& inst : enumerate_instances({14}, {})) {
    CAPTURE(inst.label());
    auto const S = free_of(inst, 3);
    CHECK(S.size() == 34);
    CHECK(is_associative(S));
    CHECK(verify_free(S, instantiate(inst)));
  }
}

TEST_CASE("F_1 of m4_1 is a, a^2, a^3") {
  auto const S = free_of(parse_instance_label("m4_1_(123)"), 1);
  CHECK(S.size() == 3);
  CHECK(S.element_of(Word::parse("a^4")) == S.element_of(Word::parse("a^3")));
}

TEST_CASE("representatives are shortlex least and the oracle agrees") {
  auto const inst = parse_instance_label("m2_2");
  auto const sys  = instantiate(inst);
  auto const S    = free_of(inst, 2);
  CHECK(verify_free(S, sys));
  for (element_type e = 1; e < S.size(); ++e) {
    CHECK(shortlex_less(S.rep(e - 1), S.rep(e)));
  }
  // neighbours of a representative under one rewrite stay in its class and
  // are never shorter-lex
  for (element_type e = 0; e < S.size(); e += 3) {
    for (auto const& [r, step] : rewrite_steps(Word(S.rep(e)), sys, S.rep(e).size() + 4)) {
      CHECK(S.element_of(r) == e);
      CHECK_FALSE(shortlex_less(r.letters(), S.rep(e)));
    }
  }
  // distinct elements are distinct words of the variety
  auto const a = Word(S.rep(1)), b = Word(S.rep(2));
  CHECK(decide_equal(a, b, sys).kind() == EqVerdict::Kind::distinct);
}

TEST_CASE("F_n sits inside F_{n+1}") {
  auto const inst = parse_instance_label("m3_2");
  auto const S2   = free_of(inst, 2);
  auto const S3   = free_of(inst, 3);
  CHECK(S2.size() < S3.size());
  for (element_type e = 0; e < S2.size(); ++e) {
    auto const f = S3.element_of(S2.rep(e));
    CHECK(S3.rep(f) == S2.rep(e));
  }
}

TEST_CASE("tabular format round-trips") {
  auto const inst = parse_instance_label("m14_(123)");
  auto const S    = free_of(inst, 2);
  auto const text = to_text(S, inst);
  auto const back = parse_semigroup(text);
  CHECK(back.instance == inst);
  CHECK(back.semigroup.size() == S.size());
  CHECK(back.semigroup.right_action() == S.right_action());
  CHECK(back.semigroup.reps() == S.reps());
  CHECK_THROWS_AS(parse_semigroup("SEMIGROUP\nfamily m14\n"), std::invalid_argument);
}

TEST_CASE("a corrupted right action is caught") {
  auto const inst = parse_instance_label("m2_2");
  auto       S    = free_of(inst, 2);
  element_type const e = S.size() - 1;
  S.corrupt_right_action(e, 0, 0);
  bool const assoc = is_associative(S);
  bool const freev = static_cast<bool>(verify_free(S, instantiate(inst)));
  CHECK_FALSE((assoc && freev));
}

TEST_CASE("caps give INDETERMINATE, never a wrong size") {
  EnumerationCaps caps;
  caps.max_elements = 10;
  auto const o = enumerate(instantiate(parse_instance_label("m14_(123)")), 3, caps);
  CHECK_FALSE(o.converged());
  CHECK(!o.reason.empty());
  CHECK(!o.partial_reps.empty());
}

TEST_CASE("sampled associativity") {
  auto const S = free_of(parse_instance_label("m14_(123)"), 3);
  CHECK(is_associative_sampled(S, 2000, 1));
}

TEST_CASE("both readings of the permutation identity give the same F_n") {
  for (auto const& inst : enumerate_instances({14, 24}, {})) {
    CAPTURE(inst.label());
    auto const a = enumerate(instantiate(inst, PermutationReading::positional), 3);
    auto const b = enumerate(instantiate(inst, PermutationReading::relabelling), 3);
    REQUIRE(a.converged());
    REQUIRE(b.converged());
    CHECK(a.semigroup->reps() == b.semigroup->reps());
    CHECK(a.semigroup->right_action() == b.semigroup->right_action());
  }
}
