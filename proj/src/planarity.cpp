#include "planrank/planarity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace planrank {

  namespace {

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    ////////////////////////////////////////////////////////////////////////
    // Left-right planarity (Brandes' formulation of de Fraysseix and
    // Rosenstiehl's criterion), with embedding.
    ////////////////////////////////////////////////////////////////////////

    struct Interval {
      std::size_t low  = none;
      std::size_t high = none;

      [[nodiscard]] bool empty() const noexcept {
        return low == none && high == none;
      }
    };

    struct ConflictPair {
      Interval left, right;

      void swap() noexcept {
        std::swap(left, right);
      }
    };

    class LeftRight {
     public:
      explicit LeftRight(SimpleGraph const& g)
          : g_(g), n_(g.number_of_vertices()), height_(n_, none), parent_edge_(n_, none) {}

      bool run(bool want_embedding) {
        auto const m = g_.number_of_edges();
        if (n_ > 2 && m > 3 * n_ - 6) {
          return false;
        }
        out_.assign(n_, {});
        edge_at_.resize(n_);
        for (vertex_type v = 0; v < n_; ++v) {
          edge_at_[v].assign(g_.degree(v), none);
        }
        for (vertex_type v = 0; v < n_; ++v) {
          if (height_[v] == none) {
            height_[v] = 0;
            roots_.push_back(v);
            orient(v);
          }
        }
        ordered_.resize(n_);
        for (vertex_type v = 0; v < n_; ++v) {
          sort_by_nesting(v);
        }
        ref_.assign(src_.size(), none);
        side_.assign(src_.size(), 1);
        lowpt_edge_.assign(src_.size(), none);
        stack_bottom_.assign(src_.size(), 0);
        for (auto r : roots_) {
          if (!test(r)) {
            return false;
          }
        }
        if (!want_embedding) {
          return true;
        }
        for (std::size_t e = 0; e < src_.size(); ++e) {
          nesting_[e] *= sign(e);
        }
        first_.assign(n_, none);
        rot_.assign(n_, {});
        for (vertex_type v = 0; v < n_; ++v) {
          sort_by_nesting(v);
          std::size_t prev = none;
          for (auto e : ordered_[v]) {
            add_cw(v, dst_[e], prev);
            prev = dst_[e];
          }
        }
        left_ref_.assign(n_, none);
        right_ref_.assign(n_, none);
        for (auto r : roots_) {
          embed(r);
        }
        return true;
      }

      RotationEmbedding embedding() const {
        RotationEmbedding out;
        out.rotation.resize(n_);
        for (vertex_type v = 0; v < n_; ++v) {
          if (first_[v] == none) {
            continue;
          }
          auto w = first_[v];
          do {
            out.rotation[v].push_back(static_cast<vertex_type>(w));
            w = rot_[v].at(w).first;
          } while (w != first_[v]);
        }
        return out;
      }

     private:
      std::size_t position(vertex_type v, vertex_type w) const {
        auto const& nb = g_.neighbours(v);
        return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
      }

      void sort_by_nesting(vertex_type v) {
        ordered_[v] = out_[v];
        std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                         [this](auto a, auto b) { return nesting_[a] < nesting_[b]; });
      }

      void orient(vertex_type v) {
        auto const e  = parent_edge_[v];
        auto const& nb = g_.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          auto const w = nb[i];
          if (edge_at_[v][i] != none) {
            continue;
          }
          auto const vw = src_.size();
          src_.push_back(v);
          dst_.push_back(w);
          lowpt_.push_back(height_[v]);
          lowpt2_.push_back(height_[v]);
          nesting_.push_back(0);
          edge_at_[v][i]              = vw;
          edge_at_[w][position(w, v)] = vw;
          out_[v].push_back(vw);
          if (height_[w] == none) {
            parent_edge_[w] = vw;
            height_[w]      = height_[v] + 1;
            orient(w);
          } else {
            lowpt_[vw] = height_[w];
          }
          nesting_[vw] = 2 * static_cast<long>(lowpt_[vw]);
          if (lowpt2_[vw] < height_[v]) {
            nesting_[vw] += 1;
          }
          if (e != none) {
            if (lowpt_[vw] < lowpt_[e]) {
              lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
              lowpt_[e]  = lowpt_[vw];
            } else if (lowpt_[vw] > lowpt_[e]) {
              lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
            } else {
              lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
            }
          }
        }
      }

      bool conflicting(Interval const& i, std::size_t b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
      }

      std::size_t lowest(ConflictPair const& p) const {
        if (p.left.empty()) {
          return lowpt_[p.right.low];
        }
        if (p.right.empty()) {
          return lowpt_[p.left.low];
        }
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
      }

      bool test(vertex_type v) {
        auto const e = parent_edge_[v];
        for (auto ei : ordered_[v]) {
          auto const w      = dst_[ei];
          stack_bottom_[ei] = stack_.size();
          if (ei == parent_edge_[w]) {
            if (!test(w)) {
              return false;
            }
          } else {
            lowpt_edge_[ei] = ei;
            stack_.push_back({{}, {ei, ei}});
          }
          if (lowpt_[ei] < height_[v]) {
            if (ei == ordered_[v].front()) {
              lowpt_edge_[e] = lowpt_edge_[ei];
            } else if (!add_constraints(ei, e)) {
              return false;
            }
          }
        }
        if (e != none) {
          remove_back_edges(e);
        }
        return true;
      }

      bool add_constraints(std::size_t ei, std::size_t e) {
        ConflictPair p;
        do {
          auto q = stack_.back();
          stack_.pop_back();
          if (!q.left.empty()) {
            q.swap();
          }
          if (!q.left.empty()) {
            return false;
          }
          if (lowpt_[q.right.low] > lowpt_[e]) {
            if (p.right.empty()) {
              p.right = q.right;
            } else {
              ref_[p.right.low] = q.right.high;
            }
            p.right.low = q.right.low;
          } else {
            ref_[q.right.low] = lowpt_edge_[e];
          }
        } while (stack_.size() != stack_bottom_[ei]);

        while (!stack_.empty()
               && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
          auto q = stack_.back();
          stack_.pop_back();
          if (conflicting(q.right, ei)) {
            q.swap();
          }
          if (conflicting(q.right, ei)) {
            return false;
          }
          if (p.right.low != none) {
            ref_[p.right.low] = q.right.high;
          }
          if (q.right.low != none) {
            p.right.low = q.right.low;
          }
          if (p.left.empty()) {
            p.left = q.left;
          } else {
            ref_[p.left.low] = q.left.high;
          }
          p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) {
          stack_.push_back(p);
        }
        return true;
      }

      void remove_back_edges(std::size_t e) {
        auto const u = src_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
          auto p = stack_.back();
          stack_.pop_back();
          if (p.left.low != none) {
            side_[p.left.low] = -1;
          }
        }
        if (!stack_.empty()) {
          auto p = stack_.back();
          stack_.pop_back();
          while (p.left.high != none && dst_[p.left.high] == u) {
            p.left.high = ref_[p.left.high];
          }
          if (p.left.high == none && p.left.low != none) {
            ref_[p.left.low]  = p.right.low;
            side_[p.left.low] = -1;
            p.left.low        = none;
          }
          while (p.right.high != none && dst_[p.right.high] == u) {
            p.right.high = ref_[p.right.high];
          }
          if (p.right.high == none && p.right.low != none) {
            ref_[p.right.low]  = p.left.low;
            side_[p.right.low] = -1;
            p.right.low        = none;
          }
          stack_.push_back(p);
        }
        if (lowpt_[e] < height_[u] && !stack_.empty()) {
          auto const hl = stack_.back().left.high;
          auto const hr = stack_.back().right.high;
          if (hl != none && (hr == none || lowpt_[hl] > lowpt_[hr])) {
            ref_[e] = hl;
          } else {
            ref_[e] = hr;
          }
        }
      }

      int sign(std::size_t e) {
        std::vector<std::size_t> chain;
        for (auto f = e; ref_[f] != none; f = ref_[f]) {
          chain.push_back(f);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
          side_[*it] *= side_[ref_[*it]];
          ref_[*it] = none;
        }
        return side_[e];
      }

      // Rotations as circular lists: rot_[v][w] = {cw successor, ccw successor}.
      void add_cw(std::size_t start, std::size_t end, std::size_t reference) {
        auto& r = rot_[start];
        if (reference == none) {
          r[end]        = {end, end};
          first_[start] = end;
          return;
        }
        auto const cw_ref = r.at(reference).first;
        r[end]            = {cw_ref, reference};
        r[reference].first = end;
        r[cw_ref].second   = end;
      }

      void add_ccw(std::size_t start, std::size_t end, std::size_t reference) {
        if (reference == none) {
          add_cw(start, end, none);
          return;
        }
        add_cw(start, end, rot_[start].at(reference).second);
        if (reference == first_[start]) {
          first_[start] = end;
        }
      }

      void embed(vertex_type v) {
        for (auto ei : ordered_[v]) {
          auto const w = dst_[ei];
          if (ei == parent_edge_[w]) {
            add_ccw(w, v, first_[w]);
            left_ref_[v]  = w;
            right_ref_[v] = w;
            embed(w);
          } else if (side_[ei] == 1) {
            add_cw(w, v, right_ref_[w]);
          } else {
            add_ccw(w, v, left_ref_[w]);
            left_ref_[w] = v;
          }
        }
      }

      SimpleGraph const&                    g_;
      std::size_t                           n_;
      std::vector<std::size_t>              height_;
      std::vector<std::size_t>              parent_edge_;
      std::vector<vertex_type>              roots_;
      std::vector<std::vector<std::size_t>> out_, ordered_, edge_at_;
      std::vector<vertex_type>              src_, dst_;
      std::vector<std::size_t>              lowpt_, lowpt2_;
      std::vector<long>                     nesting_;
      std::vector<std::size_t>              ref_;
      std::vector<int>                      side_;
      std::vector<std::size_t>              lowpt_edge_;
      std::vector<std::size_t>              stack_bottom_;
      std::vector<ConflictPair>             stack_;
      std::vector<std::size_t>              first_, left_ref_, right_ref_;
      std::vector<std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>>> rot_;
    };

    ////////////////////////////////////////////////////////////////////////
    // Witness extraction helpers
    ////////////////////////////////////////////////////////////////////////

    std::vector<vertex_type> bfs_order(SimpleGraph const& g) {
      std::vector<vertex_type> order;
      std::vector<bool>        seen(g.number_of_vertices(), false);
      for (vertex_type s = 0; s < g.number_of_vertices(); ++s) {
        if (seen[s]) {
          continue;
        }
        seen[s] = true;
        std::deque<vertex_type> queue{s};
        while (!queue.empty()) {
          auto v = queue.front();
          queue.pop_front();
          order.push_back(v);
          for (auto w : g.neighbours(v)) {
            if (!seen[w]) {
              seen[w] = true;
              queue.push_back(w);
            }
          }
        }
      }
      return order;
    }

    // Reads off the branch vertices and paths of a graph that is a bare
    // subdivision of K5 or K3,3 plus isolated vertices.
    KuratowskiWitness read_subdivision(SimpleGraph const& h) {
      std::vector<vertex_type> branch;
      for (vertex_type v = 0; v < h.number_of_vertices(); ++v) {
        if (h.degree(v) >= 3) {
          branch.push_back(v);
        } else if (h.degree(v) == 1) {
          throw std::logic_error("minimal nonplanar subgraph has a vertex of degree 1");
        }
      }
      KuratowskiWitness w;
      if (branch.size() == 5 && std::all_of(branch.begin(), branch.end(), [&](auto v) {
            return h.degree(v) == 4;
          })) {
        w.kind = KuratowskiWitness::Kind::K5;
      } else if (branch.size() == 6 && std::all_of(branch.begin(), branch.end(), [&](auto v) {
                   return h.degree(v) == 3;
                 })) {
        w.kind = KuratowskiWitness::Kind::K33;
      } else {
        throw std::logic_error("minimal nonplanar subgraph is not a Kuratowski subdivision");
      }
      std::set<vertex_type> is_branch(branch.begin(), branch.end());
      std::map<std::pair<vertex_type, vertex_type>, std::vector<vertex_type>> paths;
      for (auto b : branch) {
        for (auto first : h.neighbours(b)) {
          std::vector<vertex_type> path{b};
          vertex_type              prev = b, cur = first;
          while (!is_branch.count(cur)) {
            path.push_back(cur);
            auto const& nb  = h.neighbours(cur);
            auto        nxt = nb[0] == prev ? nb[1] : nb[0];
            prev            = cur;
            cur             = nxt;
          }
          path.push_back(cur);
          if (b < cur) {
            paths.emplace(std::make_pair(b, cur), std::move(path));
          }
        }
      }
      if (w.kind == KuratowskiWitness::Kind::K5) {
        w.branch = branch;
        for (auto& [key, p] : paths) {
          w.paths.push_back(p);
        }
        return w;
      }
      std::vector<vertex_type> part_b;
      for (auto& [key, p] : paths) {
        if (key.first == branch[0]) {
          part_b.push_back(key.second);
        }
      }
      std::vector<vertex_type> part_a;
      for (auto b : branch) {
        if (std::find(part_b.begin(), part_b.end(), b) == part_b.end()) {
          part_a.push_back(b);
        }
      }
      w.branch = part_a;
      w.branch.insert(w.branch.end(), part_b.begin(), part_b.end());
      for (auto a : part_a) {
        for (auto b : part_b) {
          auto key = std::minmax(a, b);
          auto p   = paths.at({key.first, key.second});
          if (p.front() != a) {
            std::reverse(p.begin(), p.end());
          }
          w.paths.push_back(std::move(p));
        }
      }
      return w;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Deciding
  ////////////////////////////////////////////////////////////////////////

  bool is_planar(SimpleGraph const& g) {
    return LeftRight(g).run(false);
  }

  std::optional<RotationEmbedding> planar_embedding(SimpleGraph const& g) {
    LeftRight lr(g);
    if (!lr.run(true)) {
      return std::nullopt;
    }
    return lr.embedding();
  }

  KuratowskiWitness kuratowski_witness(SimpleGraph const& g) {
    if (is_planar(g)) {
      throw std::invalid_argument("the graph is planar");
    }
    // Shortest nonplanar prefix of a breadth-first order.
    auto        order = bfs_order(g);
    std::size_t lo = 1, hi = order.size();
    while (lo < hi) {
      auto mid = lo + (hi - lo) / 2;
      if (is_planar(g.induced({order.begin(), order.begin() + mid}))) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    std::vector<vertex_type> keep(order.begin(), order.begin() + lo);
    auto                     h = g.induced(keep);
    // Drop whole vertices, then single edges, while nonplanarity remains.
    for (vertex_type v = 0; v < h.number_of_vertices(); ++v) {
      auto nb = h.neighbours(v);
      for (auto w : nb) {
        h.remove_edge(v, w);
      }
      if (is_planar(h)) {
        for (auto w : nb) {
          h.add_edge(v, w);
        }
      }
    }
    for (auto [u, v] : h.edges()) {
      h.remove_edge(u, v);
      if (is_planar(h)) {
        h.add_edge(u, v);
      }
    }
    auto w = read_subdivision(h);
    for (auto& b : w.branch) {
      b = keep[b];
    }
    for (auto& p : w.paths) {
      for (auto& v : p) {
        v = keep[v];
      }
    }
    return w;
  }

  PlanarityCertificate decide_planar(SimpleGraph const& g) {
    if (auto e = planar_embedding(g)) {
      return {std::move(*e)};
    }
    return {kuratowski_witness(g)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  CertificateCheck verify_embedding(SimpleGraph const& g, RotationEmbedding const& e) {
    CertificateCheck out;
    auto const       n = g.number_of_vertices();
    if (e.rotation.size() != n) {
      return {CertificateCheck::Status::malformed, "rotation system has wrong vertex count", 0};
    }
    // pos[v][i]: place in v's rotation of the i-th (sorted) neighbour.
    std::vector<std::vector<std::size_t>> pos(n);
    for (vertex_type v = 0; v < n; ++v) {
      auto sorted = e.rotation[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != g.neighbours(v)) {
        return {CertificateCheck::Status::malformed,
                "rotation of vertex " + g.name(v) + " does not list its neighbours", 0};
      }
      pos[v].resize(sorted.size());
      for (std::size_t k = 0; k < e.rotation[v].size(); ++k) {
        auto const& nb = g.neighbours(v);
        auto i = std::lower_bound(nb.begin(), nb.end(), e.rotation[v][k]) - nb.begin();
        pos[v][static_cast<std::size_t>(i)] = k;
      }
    }
    auto index_of = [&](vertex_type v, vertex_type w) {
      auto const& nb = g.neighbours(v);
      return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    };
    // Components.
    std::vector<std::size_t> comp(n, none);
    std::size_t              nr_comp = 0;
    for (vertex_type s = 0; s < n; ++s) {
      if (comp[s] != none) {
        continue;
      }
      std::vector<vertex_type> stack{s};
      comp[s] = nr_comp;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbours(v)) {
          if (comp[w] == none) {
            comp[w] = nr_comp;
            stack.push_back(w);
          }
        }
      }
      ++nr_comp;
    }
    std::vector<long> vertices(nr_comp, 0), edges(nr_comp, 0), faces(nr_comp, 0);
    for (vertex_type v = 0; v < n; ++v) {
      vertices[comp[v]] += 1;
      edges[comp[v]] += static_cast<long>(g.degree(v));
    }
    // Face tracing: from the dart v -> w continue with w -> (successor of v
    // in the rotation at w). Each dart lies on exactly one face.
    std::vector<std::vector<bool>> used(n);
    for (vertex_type v = 0; v < n; ++v) {
      used[v].assign(g.degree(v), false);
    }
    for (vertex_type v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < g.degree(v); ++i) {
        if (used[v][i]) {
          continue;
        }
        faces[comp[v]] += 1;
        vertex_type a = v;
        std::size_t ai = i;
        while (!used[a][ai]) {
          used[a][ai]   = true;
          vertex_type b = g.neighbours(a)[ai];
          auto const& rb = e.rotation[b];
          auto        k  = pos[b][index_of(b, a)];
          vertex_type c  = rb[(k + 1) % rb.size()];
          a              = b;
          ai             = index_of(b, c);
        }
      }
    }
    std::size_t total = 1;
    for (std::size_t c = 0; c < nr_comp; ++c) {
      edges[c] /= 2;
      if (edges[c] == 0) {
        continue;
      }
      if (vertices[c] - edges[c] + faces[c] != 2) {
        return {CertificateCheck::Status::invalid,
                "Euler relation fails on a component: V=" + std::to_string(vertices[c])
                    + " E=" + std::to_string(edges[c]) + " F=" + std::to_string(faces[c]),
                0};
      }
      total += static_cast<std::size_t>(faces[c]) - 1;
    }
    out.faces = total;
    return out;
  }

  CertificateCheck verify_witness(SimpleGraph const& g, KuratowskiWitness const& w) {
    using S        = CertificateCheck::Status;
    bool const k5  = w.kind == KuratowskiWitness::Kind::K5;
    auto const nb  = k5 ? 5u : 6u;
    auto const np  = k5 ? 10u : 9u;
    if (w.branch.size() != nb || w.paths.size() != np) {
      return {S::malformed, "wrong number of branch vertices or paths", 0};
    }
    for (auto v : w.branch) {
      if (v >= g.number_of_vertices()) {
        return {S::malformed, "branch vertex out of range", 0};
      }
    }
    for (auto const& p : w.paths) {
      if (p.size() < 2) {
        return {S::malformed, "path with fewer than two vertices", 0};
      }
      for (auto v : p) {
        if (v >= g.number_of_vertices()) {
          return {S::malformed, "path vertex out of range", 0};
        }
      }
    }
    std::set<vertex_type> branch(w.branch.begin(), w.branch.end());
    if (branch.size() != nb) {
      return {S::invalid, "branch vertices are not distinct", 0};
    }
    std::set<std::pair<vertex_type, vertex_type>> wanted;
    if (k5) {
      for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
          wanted.insert(std::minmax(w.branch[i], w.branch[j]));
        }
      }
    } else {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 3; j < 6; ++j) {
          wanted.insert(std::minmax(w.branch[i], w.branch[j]));
        }
      }
    }
    std::set<vertex_type> internal;
    for (std::size_t k = 0; k < w.paths.size(); ++k) {
      auto const& p   = w.paths[k];
      auto        key = std::minmax(p.front(), p.back());
      if (wanted.erase(key) != 1) {
        return {S::invalid, "path " + std::to_string(k) + " does not join a new branch pair",
                0};
      }
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) {
          return {S::invalid,
                  "path " + std::to_string(k) + " uses a non-edge " + g.name(p[i]) + " - "
                      + g.name(p[i + 1]),
                  0};
        }
      }
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (branch.count(p[i]) || !internal.insert(p[i]).second) {
          return {S::invalid,
                  "path " + std::to_string(k) + " is not internally disjoint at "
                      + g.name(p[i]),
                  0};
        }
      }
    }
    return {};
  }

  CertificateCheck verify_certificate(SimpleGraph const& g, PlanarityCertificate const& c) {
    return c.is_planar() ? verify_embedding(g, c.embedding()) : verify_witness(g, c.witness());
  }

  ////////////////////////////////////////////////////////////////////////
  // Route witnesses
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct RouteResult {
      RouteCheck        check;
      KuratowskiWitness witness;
    };

    RouteResult check_routes(FiniteSemigroup const&                S,
                             SimpleGraph const&                    g,
                             std::vector<Word> const&              part_a,
                             std::vector<Word> const&              part_b,
                             std::vector<std::vector<Word>> const& routes) {
      RouteResult out;
      auto        fail = [&](std::string msg) {
        out.check.ok     = false;
        out.check.detail = std::move(msg);
        return out;
      };
      bool const k5 = part_b.empty();
      if (k5 ? (part_a.size() != 5 || routes.size() != 10)
             : (part_a.size() != 3 || part_b.size() != 3 || routes.size() != 9)) {
        return fail("expected 5 vertices and 10 routes, or 3 + 3 vertices and 9 routes");
      }
      auto element = [&](Word const& w) -> std::optional<vertex_type> {
        if (w.min_generators() > S.number_of_generators()) {
          return std::nullopt;
        }
        auto e = S.element_of(w);
        if (e >= g.number_of_vertices()) {
          return std::nullopt;
        }
        return e;
      };
      out.witness.kind = k5 ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33;
      for (auto const* part : {&part_a, &part_b}) {
        for (auto const& w : *part) {
          auto e = element(w);
          if (!e) {
            return fail("branch word " + w.to_pretty_string() + " is not a vertex");
          }
          out.witness.branch.push_back(*e);
        }
      }
      std::set<vertex_type> branch(out.witness.branch.begin(), out.witness.branch.end());
      if (branch.size() != out.witness.branch.size()) {
        return fail("branch words do not name distinct elements");
      }
      for (std::size_t r = 0; r < routes.size(); ++r) {
        if (routes[r].size() < 2) {
          return fail("route " + std::to_string(r) + " has fewer than two words");
        }
        std::vector<vertex_type> path;
        for (auto const& w : routes[r]) {
          auto e = element(w);
          if (!e) {
            return fail("route " + std::to_string(r) + ": word " + w.to_pretty_string()
                        + " is not a vertex");
          }
          path.push_back(*e);
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          if (!g.has_edge(path[i], path[i + 1])) {
            out.check.bad_step = std::make_pair(r, i);
            return fail("route " + std::to_string(r) + ", step " + std::to_string(i) + ": "
                        + routes[r][i].to_pretty_string() + " and "
                        + routes[r][i + 1].to_pretty_string() + " are not adjacent");
          }
        }
        out.witness.paths.push_back(std::move(path));
      }
      auto c = verify_witness(g, out.witness);
      if (!c) {
        return fail(c.detail);
      }
      return out;
    }

  }  // namespace

  RouteCheck verify_route_witness(FiniteSemigroup const&                S,
                                  SimpleGraph const&                    g,
                                  std::vector<Word> const&              part_a,
                                  std::vector<Word> const&              part_b,
                                  std::vector<std::vector<Word>> const& routes) {
    return check_routes(S, g, part_a, part_b, routes).check;
  }

  std::optional<KuratowskiWitness>
  route_witness_to_kuratowski(FiniteSemigroup const&                S,
                              SimpleGraph const&                    g,
                              std::vector<Word> const&              part_a,
                              std::vector<Word> const&              part_b,
                              std::vector<std::vector<Word>> const& routes) {
    auto r = check_routes(S, g, part_a, part_b, routes);
    if (!r.check) {
      return std::nullopt;
    }
    return std::move(r.witness);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  std::string to_text(SimpleGraph const& g, PlanarityCertificate const& c) {
    std::ostringstream out;
    if (c.is_planar()) {
      out << "PLANAR\n";
      auto const& rot = c.embedding().rotation;
      for (vertex_type v = 0; v < rot.size(); ++v) {
        out << g.name(v) << ":";
        for (auto w : rot[v]) {
          out << ' ' << g.name(w);
        }
        out << '\n';
      }
      return out.str();
    }
    auto const& w = c.witness();
    out << "NONPLANAR " << (w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33") << '\n';
    out << "branch";
    for (auto v : w.branch) {
      out << ' ' << g.name(v);
    }
    out << '\n';
    for (auto const& p : w.paths) {
      out << "path";
      for (auto v : p) {
        out << ' ' << g.name(v);
      }
      out << '\n';
    }
    return out.str();
  }

  PlanarityCertificate parse_certificate(SimpleGraph const& g, std::string const& text) {
    std::unordered_map<std::string, vertex_type> ids;
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      ids.emplace(g.name(v), v);
    }
    auto vertex = [&](std::string const& name) {
      auto it = ids.find(name);
      if (it == ids.end()) {
        throw std::invalid_argument("unknown vertex '" + name + "' in certificate");
      }
      return it->second;
    };
    std::istringstream in(text);
    std::string        line;
    if (!std::getline(in, line)) {
      throw std::invalid_argument("empty certificate");
    }
    if (line == "PLANAR") {
      RotationEmbedding e;
      e.rotation.resize(g.number_of_vertices());
      while (std::getline(in, line)) {
        if (line.empty()) {
          continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) {
          throw std::invalid_argument("rotation line without ':'");
        }
        auto               v = vertex(line.substr(0, colon));
        std::istringstream rest(line.substr(colon + 1));
        std::string        name;
        while (rest >> name) {
          e.rotation[v].push_back(vertex(name));
        }
      }
      return {std::move(e)};
    }
    KuratowskiWitness w;
    if (line == "NONPLANAR K5") {
      w.kind = KuratowskiWitness::Kind::K5;
    } else if (line == "NONPLANAR K33") {
      w.kind = KuratowskiWitness::Kind::K33;
    } else {
      throw std::invalid_argument("unknown certificate header '" + line + "'");
    }
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string        tag, name;
      if (!(ls >> tag)) {
        continue;
      }
      std::vector<vertex_type> vs;
      while (ls >> name) {
        vs.push_back(vertex(name));
      }
      if (tag == "branch") {
        w.branch = std::move(vs);
      } else if (tag == "path") {
        w.paths.push_back(std::move(vs));
      } else {
        throw std::invalid_argument("unknown certificate line '" + tag + "'");
      }
    }
    return {std::move(w)};
  }

}  // namespace planrank
