#include <stdexcept>

#include <string>

#include "doctest.h"
#include "planrank/catalog.hpp"
#include "planrank/cayley.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/planarity.hpp"
#include "support/brute_planarity.hpp"
#include "support/route_corpus.hpp"

using namespace planrank;

namespace {
  SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (vertex_type u = 0; u < n; ++u) {
      for (vertex_type v = u + 1; v < n; ++v) {
        g.add_edge(u, v);
      }
    }
    return g;
  }

  SimpleGraph k33() {
    SimpleGraph g(6);
    for (vertex_type u = 0; u < 3; ++u) {
      for (vertex_type v = 3; v < 6; ++v) {
        g.add_edge(u, v);
      }
    }
    return g;
  }
}  // namespace

TEST_CASE("small graphs") {
  auto const k4 = complete(4);
  auto const c4 = decide_planar(k4);
  REQUIRE(c4.is_planar());
  auto const chk = verify_certificate(k4, c4);
  CHECK(chk);
  CHECK(chk.faces == 4);

  for (auto const& g : {complete(5), k33()}) {
    auto const c = decide_planar(g);
    REQUIRE_FALSE(c.is_planar());
    CHECK(verify_certificate(g, c));
  }
  CHECK(decide_planar(complete(5)).witness().kind == KuratowskiWitness::Kind::K5);
  CHECK(decide_planar(k33()).witness().kind == KuratowskiWitness::Kind::K33);
  CHECK(is_planar(SimpleGraph(0)));
  CHECK(is_planar(SimpleGraph(1)));
  CHECK_THROWS_AS(kuratowski_witness(k4), std::invalid_argument);
}

TEST_CASE("agreement with exhaustive subdivision search on random graphs") {
  std::size_t nonplanar = 0;
  for (auto const& g : testing::random_graphs(1200, 7, 0)) {
    auto const c = decide_planar(g);
    CHECK(verify_certificate(g, c));
    CHECK(c.is_planar() == !testing::brute_force_nonplanar(g));
    CHECK(is_planar(g) == c.is_planar());
    nonplanar += c.is_planar() ? 0 : 1;
  }
  CHECK(nonplanar > 50);
}

TEST_CASE("tampered certificates are rejected") {
  auto const k4 = complete(4);
  auto       c  = decide_planar(k4);
  auto       e  = c.embedding();
  std::swap(e.rotation[0][0], e.rotation[0][1]);
  CHECK(verify_embedding(k4, e).status == CertificateCheck::Status::invalid);
  e.rotation[0].pop_back();
  CHECK(verify_embedding(k4, e).status == CertificateCheck::Status::malformed);

  auto g = complete(5);
  auto w = decide_planar(g).witness();
  g.remove_edge(w.paths[0][0], w.paths[0][1]);
  CHECK_FALSE(verify_witness(g, w));
  w.paths.pop_back();
  CHECK(verify_witness(complete(5), w).status == CertificateCheck::Status::malformed);
}

TEST_CASE("certificate text round-trips") {
  auto const g = simplify(cayley_digraph(
      *enumerate(instantiate(parse_instance_label("m8_(123)")), 2).semigroup));
  for (auto const& h : {g, complete(5), k33()}) {
    auto const c    = decide_planar(h);
    auto const back = parse_certificate(h, to_text(h, c));
    CHECK(verify_certificate(h, back));
    CHECK(back.is_planar() == c.is_planar());
  }
}

TEST_CASE("Kuratowski route systems from the corpus") {
  auto const corpus = testing::read_route_corpus(PLANRANK_TEST_DATA "/route_systems.txt");
  REQUIRE(corpus.size() > 30);
  std::size_t checked = 0;
  for (auto const& rs : corpus) {
    for (auto const& inst : rs.instances) {
      CAPTURE(rs.header);
      CAPTURE(inst.label());
      auto o = enumerate(instantiate(inst), rs.gens);
      REQUIRE(o.converged());
      auto const& S = *o.semigroup;
      auto const  g = simplify(cayley_digraph(S));
      auto routes = rs.routes;
      if (!rs.walk_note.empty()) {
        CHECK_FALSE(verify_route_witness(S, g, rs.part_a, rs.part_b, routes));
        routes = testing::shortcut_routes(S, routes);
      }
      auto const r = verify_route_witness(S, g, rs.part_a, rs.part_b, routes);
      CHECK_MESSAGE(r, r.detail);
      auto const w = route_witness_to_kuratowski(S, g, rs.part_a, rs.part_b, routes);
      CHECK(w);
      if (w) {
        CHECK(verify_witness(g, *w));
      }
      CHECK_FALSE(is_planar(g));
      ++checked;
    }
  }
  MESSAGE(checked << " instance route systems checked");
}
