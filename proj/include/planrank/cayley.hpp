// Cayley digraphs of finite semigroups, their simplified undirected graphs,
// and the DOT / JSON graph formats.

#ifndef PLANRANK_CAYLEY_HPP_
#define PLANRANK_CAYLEY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planrank/free_semigroup.hpp"
#include "planrank/word.hpp"

namespace planrank {

  using vertex_type = std::uint32_t;

  //! Undirected graph without loops or parallel edges. Vertices are
  //! 0..number_of_vertices()-1; names are optional display labels.
  class SimpleGraph {
   public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : adj_(n) {}

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return adj_.size();
    }
    [[nodiscard]] std::size_t number_of_edges() const noexcept {
      return nr_edges_;
    }

    //! Adds {u, v}; returns false for a loop or an edge already present.
    bool add_edge(vertex_type u, vertex_type v);
    //! Removes {u, v}; returns false if absent.
    bool remove_edge(vertex_type u, vertex_type v);
    vertex_type add_vertex();

    [[nodiscard]] bool has_edge(vertex_type u, vertex_type v) const;
    //! Sorted neighbour list.
    [[nodiscard]] std::vector<vertex_type> const& neighbours(vertex_type v) const {
      return adj_.at(v);
    }
    [[nodiscard]] std::size_t degree(vertex_type v) const {
      return adj_.at(v).size();
    }
    //! Edges {u, v} with u < v, sorted.
    [[nodiscard]] std::vector<std::pair<vertex_type, vertex_type>> edges() const;

    //! Subgraph induced on `keep` (in that order), vertices renumbered
    //! 0..keep.size()-1; names follow.
    [[nodiscard]] SimpleGraph induced(std::vector<vertex_type> const& keep) const;

    //! Display labels; empty, or one per vertex.
    std::vector<std::string> names;
    [[nodiscard]] std::string name(vertex_type v) const;

    friend bool operator==(SimpleGraph const& g, SimpleGraph const& h) {
      return g.adj_ == h.adj_;
    }

   private:
    std::vector<std::vector<vertex_type>> adj_;
    std::size_t                           nr_edges_ = 0;
  };

  //! Cay(S, X): one arc v -> v x labelled x for every vertex v and generator
  //! x, loops included.
  class LabeledDigraph {
   public:
    LabeledDigraph(std::size_t nr_vertices, std::size_t nr_labels);

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return nr_vertices_;
    }
    [[nodiscard]] std::size_t number_of_labels() const noexcept {
      return nr_labels_;
    }
    [[nodiscard]] std::size_t number_of_arcs() const noexcept {
      return nr_vertices_ * nr_labels_;
    }
    [[nodiscard]] vertex_type target(vertex_type v, letter_type x) const {
      return target_.at(v * nr_labels_ + x);
    }
    void set_target(vertex_type v, letter_type x, vertex_type w) {
      target_.at(v * nr_labels_ + x) = w;
    }

    struct Arc {
      vertex_type source;
      vertex_type target;
      letter_type label;
    };
    //! All arcs, by source then label.
    [[nodiscard]] std::vector<Arc> arcs() const;
    [[nodiscard]] std::size_t       number_of_loops() const;

    //! Representative word of each vertex; empty if unknown.
    std::vector<word_type> words;
    [[nodiscard]] std::string name(vertex_type v) const;

   private:
    std::size_t              nr_vertices_;
    std::size_t              nr_labels_;
    std::vector<vertex_type> target_;
  };

  //! Cay(S, X) for the generators of S, vertices are element ids.
  LabeledDigraph cayley_digraph(FiniteSemigroup const& S);

  //! SCay: loops and labels dropped, arcs between a pair merged to one edge.
  //! Vertex set and names are kept.
  SimpleGraph simplify(LabeledDigraph const& g);

  //! The subgraph of the simplified graph on the vertices whose words use only
  //! the first n letters, with only the edges witnessed by arcs labelled by
  //! those letters. `kept` receives the original vertex of each new vertex.
  SimpleGraph induced_restriction(LabeledDigraph const&     cay,
                                  std::size_t               n,
                                  std::vector<vertex_type>* kept = nullptr);

  //! DOT subset: `digraph` with one `label` per arc, or `graph`. Vertex
  //! names are the plain representative words.
  std::string to_dot(LabeledDigraph const& g);
  std::string to_dot(SimpleGraph const& g);

  //! {"directed": bool, "vertices": [names], "edges": [[u, v] or [u, v, "x"]]}
  std::string to_json(LabeledDigraph const& g);
  std::string to_json(SimpleGraph const& g);

  //! Parses the DOT subset or the JSON schema above (auto-detected) into a
  //! simple graph; arcs become edges and loops are dropped. Throws
  //! std::invalid_argument with a position on malformed input.
  SimpleGraph parse_graph(std::string_view text);

}  // namespace planrank

#endif  // PLANRANK_CAYLEY_HPP_
