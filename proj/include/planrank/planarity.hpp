// Planarity testing with certificates both ways, and checking of
// hand-written disjoint-route witnesses.

#ifndef PLANRANK_PLANARITY_HPP_
#define PLANRANK_PLANARITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planrank/cayley.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/word.hpp"

namespace planrank {

  //! For each vertex, its neighbours in clockwise order.
  struct RotationEmbedding {
    std::vector<std::vector<vertex_type>> rotation;
  };

  //! A subdivision of K5 or K3,3 in a host graph. For K5, `branch` has five
  //! vertices and `paths` holds ten paths, one per pair; for K3,3, `branch`
  //! lists the first part then the second and `paths` holds nine paths, one
  //! per cross pair. Each path runs from one branch vertex to another.
  struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind                                  kind = Kind::K33;
    std::vector<vertex_type>              branch;
    std::vector<std::vector<vertex_type>> paths;
  };

  struct PlanarityCertificate {
    std::variant<RotationEmbedding, KuratowskiWitness> value;

    [[nodiscard]] bool is_planar() const noexcept {
      return std::holds_alternative<RotationEmbedding>(value);
    }
    [[nodiscard]] RotationEmbedding const& embedding() const {
      return std::get<RotationEmbedding>(value);
    }
    [[nodiscard]] KuratowskiWitness const& witness() const {
      return std::get<KuratowskiWitness>(value);
    }
  };

  //! Left-right planarity test; no certificate.
  bool is_planar(SimpleGraph const& g);

  //! A rotation system if g is planar, otherwise none.
  std::optional<RotationEmbedding> planar_embedding(SimpleGraph const& g);

  //! A Kuratowski subdivision of a nonplanar g, by shrinking g to a
  //! minimal nonplanar subgraph. Throws std::invalid_argument if g is planar.
  KuratowskiWitness kuratowski_witness(SimpleGraph const& g);

  //! Decides planarity; deterministic for a fixed input.
  PlanarityCertificate decide_planar(SimpleGraph const& g);

  struct CertificateCheck {
    enum class Status { valid, malformed, invalid };
    Status      status = Status::valid;
    std::string detail;
    //! Number of faces traced, for rotation systems.
    std::size_t faces = 0;

    explicit operator bool() const noexcept {
      return status == Status::valid;
    }
  };

  //! Rotation system: every vertex lists exactly its neighbours (else
  //! malformed), and face tracing gives V - E + F = 2 on every component with
  //! an edge (else invalid); `faces` counts the faces with the outer face
  //! counted once. Witness: well-formed kind and sizes (else malformed),
  //! paths of host edges joining the right branch pairs and internally
  //! disjoint (else invalid).
  CertificateCheck verify_certificate(SimpleGraph const& g, PlanarityCertificate const& c);
  CertificateCheck verify_embedding(SimpleGraph const& g, RotationEmbedding const& e);
  CertificateCheck verify_witness(SimpleGraph const& g, KuratowskiWitness const& w);

  struct RouteCheck {
    bool        ok = true;
    std::string detail;
    //! Route index and position of the first non-adjacent step, if any.
    std::optional<std::pair<std::size_t, std::size_t>> bad_step;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks a route system written with words: part_b empty means a K5
  //! system on the five words of part_a with ten routes, otherwise a K3,3
  //! system with three words per part and nine routes. Words are mapped to
  //! vertices of g through element_of in S (vertex ids of g are element ids
  //! of S). Every route must join a correct branch pair through adjacent
  //! vertices, every branch pair must be joined exactly once, routes must be
  //! internally disjoint from each other and from the branch vertices, and
  //! the branch vertices must be distinct elements.
  RouteCheck verify_route_witness(FiniteSemigroup const&              S,
                                  SimpleGraph const&                  g,
                                  std::vector<Word> const&            part_a,
                                  std::vector<Word> const&            part_b,
                                  std::vector<std::vector<Word>> const& routes);

  //! The witness as vertex paths, when verify_route_witness accepts it.
  std::optional<KuratowskiWitness>
  route_witness_to_kuratowski(FiniteSemigroup const&                S,
                              SimpleGraph const&                    g,
                              std::vector<Word> const&              part_a,
                              std::vector<Word> const&              part_b,
                              std::vector<std::vector<Word>> const& routes);

  //! Text format: "PLANAR" then one line "v: w1 w2 ..." per vertex, or
  //! "NONPLANAR K33" / "NONPLANAR K5", a "branch ..." line and one
  //! "path ..." line per path. Vertex names are taken from g.
  std::string to_text(SimpleGraph const& g, PlanarityCertificate const& c);

  //! Parses the text format against g (names resolved through g.names, or
  //! vertex numbers when g has no names). Throws std::invalid_argument.
  PlanarityCertificate parse_certificate(SimpleGraph const& g, std::string const& text);

}  // namespace planrank

#endif  // PLANRANK_PLANARITY_HPP_
