#include <set>

#include "doctest.h"
#include "planrank/catalog.hpp"

using namespace planrank;

TEST_CASE("permutation sets") {
  CHECK(permutation_set(1).size() == 7);
  CHECK(permutation_set(2).size() == 6);
  CHECK(permutation_set(3).size() == 5);
  for (unsigned k = 1; k <= 3; ++k) {
    std::set<std::string> seen;
    for (auto const& p : permutation_set(k)) {
      CHECK(Permutation4::parse(p.to_string()) == p);
      CHECK(seen.insert(p.to_string()).second);
      CHECK(p.inverse().inverse() == p);
    }
  }
  auto p = Permutation4::parse("(123)");
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(3) == 3);
  CHECK_THROWS(Permutation4::parse("(125)"));
  CHECK_THROWS(Permutation4::parse("(11)"));
}

TEST_CASE("every family instantiates") {
  CHECK(catalog_records().size() == number_of_families);
  CHECK(enumerate_instances({}, {1, 2, 3}).empty());
  CHECK(enumerate_instances({1}, {}).empty());
  CHECK(enumerate_instances({14}, {}).size() == 7);
  std::vector<unsigned> all;
  for (unsigned f = 1; f <= number_of_families; ++f) {
    all.push_back(f);
  }
  auto const insts = enumerate_instances(all, {1, 2, 3, 4, 5});
  CHECK(insts.size() == 196);
  for (auto const& inst : insts) {
    auto sys = instantiate(inst);
    CHECK(!sys.identities.empty());
    CHECK(parse_instance_label(inst.label()) == inst);
    auto r = expected_rank(inst);
    CHECK(r >= 1);
    CHECK(r <= 3);
  }
}

TEST_CASE("parameters are checked") {
  CHECK_THROWS(instantiate(1));
  CHECK_THROWS(instantiate(5));
  CHECK_THROWS(instantiate(21, 2));
  CHECK_THROWS(instantiate(20, {}, Permutation4::parse("(14)(23)")));
  CHECK_THROWS(instantiate(48));
  CHECK_NOTHROW(instantiate(4, 1, Permutation4::parse("(123)")));
}

TEST_CASE("expected ranks of the table") {
  auto rank = [](std::string const& label) {
    return expected_rank(parse_instance_label(label));
  };
  CHECK(rank("m1_1") == 2);
  CHECK(rank("m1_2") == 1);
  CHECK(rank("m2_1") == 2);
  CHECK(rank("m2_2") == 2);
  CHECK(rank("m2_3") == 1);
  CHECK(rank("m3_1") == 2);
  CHECK(rank("m3_2") == 1);
  CHECK(rank("m4_1_(123)") == 2);
  CHECK(rank("m4_2_(123)") == 1);
  CHECK(rank("m14_(123)") == 3);
  CHECK(rank("m14_(14)(23)") == 3);
  CHECK(rank("m43") == 1);
  CHECK(rank("m44") == 2);
  CHECK(rank("m46") == 2);
  for (auto f : {5u, 6u, 7u, 9u, 10u}) {
    for (auto const& inst : enumerate_instances({f}, {})) {
      CHECK(expected_rank(inst) == 1);
    }
  }
  for (unsigned f = 26; f <= 42; ++f) {
    CHECK(expected_rank(Instance{f, {}, {}}) == 2);
  }
}

TEST_CASE("permutation identity, positional reading") {
  auto id = permutation_identity(Permutation4::parse("(123)"));
  CHECK(id.lhs().symbols() == std::vector<letter_type>{0, 1, 2, 3});
  CHECK(id.rhs().symbols() == std::vector<letter_type>{1, 2, 0, 3});
}
