#include <set>

#include "doctest.h"
#include "planrank/catalog.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/separators.hpp"

using namespace planrank;

TEST_CASE("satisfies on small tables") {
  auto const sys = instantiate(parse_instance_label("m1_1"));
  // left zero band: xy = x, so (xy)^2 = x = xy
  std::vector<element_type> lz{0, 0, 1, 1};
  CHECK(satisfies(lz, 2, sys) == std::optional<bool>(true));
  // Z/3 violates xy = (xy)^2
  std::vector<element_type> z3{0, 1, 2, 1, 2, 0, 2, 0, 1};
  CHECK(satisfies(z3, 3, sys) == std::optional<bool>(false));
  CHECK(satisfies(z3, 3, instantiate(parse_instance_label("m1_3"))) == std::optional<bool>(true));
}

TEST_CASE("membership by derivation") {
  CHECK(derivable(clifford_system(2), instantiate(parse_instance_label("m1_2"))));
  CHECK(derivable(completely_regular_system(3), instantiate(parse_instance_label("m1_3"))));
  CHECK_FALSE(derivable(instantiate(parse_instance_label("m1_1")), clifford_system(2)));
}

TEST_CASE("every separator respects F_n") {
  for (auto label : {"m1_2", "m2_2", "m3_3"}) {
    CAPTURE(std::string(label));
    auto const sys  = instantiate(parse_instance_label(label));
    auto const seps = separators(sys, 2);
    REQUIRE(!seps.empty());
    auto o = enumerate(sys, 2);
    REQUIRE(o.converged());
    auto const& S = *o.semigroup;
    // equal words have equal images: u x and rep(right(u, x)) agree
    for (element_type e = 0; e < S.size(); ++e) {
      for (letter_type x = 0; x < 2; ++x) {
        auto w = S.rep(e);
        w.push_back(x);
        CHECK(signature(seps, w) == signature(seps, S.rep(S.right(e, x))));
      }
    }
  }
}

TEST_CASE("separated witnesses of small partial runs are real") {
  // converged instances whose SCay(F_n) is nonplanar, the partial run
  // stopped at a fraction of |F_n|
  struct Case {
    char const* label;
    std::size_t gens;
    double      fraction;
  };
  std::size_t witnesses = 0;
  for (auto [label, gens, fraction] :
       {Case{"m1_2", 2, 0.5}, Case{"m2_2", 3, 0.7}, Case{"m3_3", 2, 0.5}}) {
    CAPTURE(std::string(label));
    auto const sys = instantiate(parse_instance_label(label));
    auto const full = enumerate(sys, gens);
    REQUIRE(full.converged());
    auto const& S = *full.semigroup;

    auto const      seps = separators(sys, gens);
    EnumerationCaps caps;
    caps.strategy         = EnumerationCaps::Strategy::hlt;
    caps.max_subst_length = 3;
    caps.max_elements     = static_cast<std::size_t>(S.size() * fraction);
    auto const partial = enumerate(sys, gens, caps);
    REQUIRE_FALSE(partial.converged());
    auto const sw = separated_witness(partial, gens, seps, 20'000);
    if (!sw) {
      MESSAGE("no witness in the partial run of " << label);
      continue;
    }
    ++witnesses;
    CHECK(verify_separated(*sw, seps));
    // the vertices are distinct elements and the edges are real edges
    std::set<element_type> seen;
    std::vector<element_type> el;
    for (auto const& w : sw->words) {
      el.push_back(S.element_of(w));
    }
    for (auto v : sw->witness.branch) {
      CHECK(seen.insert(el[v]).second);
    }
    for (auto const& p : sw->witness.paths) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0 && i + 1 < p.size()) {
          CHECK(seen.insert(el[p[i]]).second);
        }
        if (i > 0) {
          auto const a = el[p[i - 1]], b = el[p[i]];
          bool arc = false;
          for (letter_type x = 0; x < gens; ++x) {
            arc = arc || S.right(a, x) == b || S.right(b, x) == a;
          }
          CHECK(arc);
        }
      }
    }
  }
  CHECK(witnesses == 3);
}
