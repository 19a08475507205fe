// Exhaustive search for a subdivision of K5 or K3,3 in a small graph, used
// as an independent planarity oracle.

#ifndef PLANRANK_TESTS_BRUTE_PLANARITY_HPP_
#define PLANRANK_TESTS_BRUTE_PLANARITY_HPP_

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "planrank/cayley.hpp"

namespace planrank::testing {

  class SubdivisionSearch {
   public:
    explicit SubdivisionSearch(SimpleGraph const& g)
        : n_(g.number_of_vertices()), adj_(n_, std::vector<bool>(n_, false)) {
      for (auto [u, v] : g.edges()) {
        adj_[u][v] = adj_[v][u] = true;
      }
    }

    //! True iff some subdivision of K5 or K3,3 is a subgraph.
    bool found() {
      // K5: every 5-set as branch vertices.
      for (auto const& b : subsets(5)) {
        std::vector<std::pair<vertex_type, vertex_type>> pairs;
        for (std::size_t i = 0; i < 5; ++i) {
          for (std::size_t j = i + 1; j < 5; ++j) {
            pairs.emplace_back(b[i], b[j]);
          }
        }
        if (route(b, pairs)) {
          return true;
        }
      }
      // K3,3: every 6-set, every split into two triples.
      for (auto const& b : subsets(6)) {
        for (std::size_t mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) != 3 || !(mask & 1)) {
            continue;
          }
          std::vector<vertex_type> x, y;
          for (std::size_t i = 0; i < 6; ++i) {
            ((mask >> i) & 1 ? x : y).push_back(b[i]);
          }
          std::vector<std::pair<vertex_type, vertex_type>> pairs;
          for (auto u : x) {
            for (auto v : y) {
              pairs.emplace_back(u, v);
            }
          }
          if (route(b, pairs)) {
            return true;
          }
        }
      }
      return false;
    }

   private:
    std::vector<std::vector<vertex_type>> subsets(std::size_t k) const {
      std::vector<std::vector<vertex_type>> out;
      if (k > n_) {
        return out;
      }
      std::vector<bool> pick(n_, false);
      std::fill(pick.begin(), pick.begin() + k, true);
      do {
        std::vector<vertex_type> s;
        for (vertex_type v = 0; v < n_; ++v) {
          if (pick[v]) {
            s.push_back(v);
          }
        }
        out.push_back(s);
      } while (std::prev_permutation(pick.begin(), pick.end()));
      return out;
    }

    // Joins every pair by internally disjoint paths avoiding branch vertices.
    bool route(std::vector<vertex_type> const&                         branch,
               std::vector<std::pair<vertex_type, vertex_type>> const& pairs) {
      used_.assign(n_, false);
      for (auto v : branch) {
        used_[v] = true;
      }
      return join(pairs, 0);
    }

    bool join(std::vector<std::pair<vertex_type, vertex_type>> const& pairs, std::size_t i) {
      if (i == pairs.size()) {
        return true;
      }
      auto [s, t] = pairs[i];
      return extend(s, t, pairs, i);
    }

    // Grows a path from u towards t through unused vertices.
    bool extend(vertex_type u, vertex_type t,
                std::vector<std::pair<vertex_type, vertex_type>> const& pairs, std::size_t i) {
      if (adj_[u][t] && join(pairs, i + 1)) {
        return true;
      }
      for (vertex_type w = 0; w < n_; ++w) {
        if (!used_[w] && adj_[u][w]) {
          used_[w] = true;
          bool ok  = extend(w, t, pairs, i);
          used_[w] = false;
          if (ok) {
            return true;
          }
        }
      }
      return false;
    }

    std::size_t                    n_;
    std::vector<std::vector<bool>> adj_;
    std::vector<bool>              used_;
  };

  inline bool brute_force_nonplanar(SimpleGraph const& g) {
    return SubdivisionSearch(g).found();
  }

  //! count graphs on 1..max_n vertices, edge densities spread over (0, 1),
  //! from a fixed seed.
  inline std::vector<SimpleGraph> random_graphs(std::size_t count, std::size_t max_n,
                                                std::uint64_t seed) {
    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<SimpleGraph>               out;
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t const n = 1 + rng() % max_n;
      double const      p = 0.2 + 0.8 * unit(rng);
      SimpleGraph       g(n);
      for (vertex_type u = 0; u < n; ++u) {
        for (vertex_type v = u + 1; v < n; ++v) {
          if (unit(rng) < p) {
            g.add_edge(u, v);
          }
        }
      }
      out.push_back(std::move(g));
    }
    return out;
  }

}  // namespace planrank::testing

#endif  // PLANRANK_TESTS_BRUTE_PLANARITY_HPP_
