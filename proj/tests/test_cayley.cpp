#include <stdexcept>

#include "doctest.h"
#include "planrank/catalog.hpp"
#include "planrank/cayley.hpp"
#include "planrank/free_semigroup.hpp"

using namespace planrank;

namespace {
  FiniteSemigroup free_of(char const* label, std::size_t gens) {
    auto o = enumerate(instantiate(parse_instance_label(label)), gens);
    REQUIRE(o.converged());
    return *o.semigroup;
  }
}  // namespace

TEST_CASE("Cay and SCay of F_1 of m4_1") {
  auto const S   = free_of("m4_1_(123)", 1);
  auto const cay = cayley_digraph(S);
  CHECK(cay.number_of_vertices() == 3);
  CHECK(cay.number_of_arcs() == 3);
  CHECK(cay.number_of_loops() == 1);  // a^3 a = a^3
  auto const g = simplify(cay);
  // a - a^2 - a^3
  CHECK(g.number_of_edges() == 2);
  CHECK(g.name(0) == "a");
}

TEST_CASE("SCay edge count") {
  for (auto label : {"m2_2", "m14_(123)", "m20_(123)", "m44"}) {
    CAPTURE(label);
    auto const S   = free_of(label, 2);
    auto const cay = cayley_digraph(S);
    auto const g   = simplify(cay);
    CHECK(cay.number_of_arcs() == S.size() * 2);
    CHECK(g.number_of_edges() <= cay.number_of_arcs() - cay.number_of_loops());
    CHECK(g.number_of_vertices() == S.size());
    for (auto const& [u, v] : g.edges()) {
      CHECK(u != v);
      bool arc = false;
      for (letter_type x = 0; x < 2; ++x) {
        arc = arc || cay.target(u, x) == v || cay.target(v, x) == u;
      }
      CHECK(arc);
    }
  }
}

TEST_CASE("DOT and JSON round-trip") {
  auto const S   = free_of("m14_(123)", 2);
  auto const cay = cayley_digraph(S);
  auto const g   = simplify(cay);
  for (auto const& text : {to_dot(g), to_json(g), to_dot(cay), to_json(cay)}) {
    auto const h = parse_graph(text);
    CHECK(h.number_of_vertices() == g.number_of_vertices());
    CHECK(h.number_of_edges() == g.number_of_edges());
    for (auto const& [u, v] : g.edges()) {
      CHECK(h.has_edge(u, v));
    }
  }
  CHECK_THROWS_AS(parse_graph("graph { a -- }"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("{\"vertices\": [\"a\"], \"edges\": [[0, 3]]}"),
                  std::invalid_argument);
}

TEST_CASE("the restriction of SCay(F_3) to two letters is SCay(F_2)") {
  auto const S2 = free_of("m14_(123)", 2);
  auto const S3 = free_of("m14_(123)", 3);
  std::vector<vertex_type> kept;
  auto const r = induced_restriction(cayley_digraph(S3), 2, &kept);
  auto const g = simplify(cayley_digraph(S2));
  REQUIRE(r.number_of_vertices() == g.number_of_vertices());
  CHECK(r.number_of_edges() == g.number_of_edges());
  auto const to2 = [&](vertex_type v) { return S2.element_of(S3.rep(kept[v])); };
  for (vertex_type v = 0; v < kept.size(); ++v) {
    CHECK(S2.rep(to2(v)) == S3.rep(kept[v]));
  }
  for (auto const& [u, v] : r.edges()) {
    CHECK(g.has_edge(to2(u), to2(v)));
  }
}
