// Enumeration of relatively free semigroups.
//
// Correctness of a CONVERGED result (the quotient sandwich). Let T be the
// semigroup returned for the system sys on generators X, and F = F_n(var sys)
// the relatively free semigroup. Every coincidence imposed during the
// construction is either
//   (a) p u(s) = p v(s) for an identity u = v of sys, a substitution s of
//       words for its variables and a possibly empty word p,
//   (b) p u(s) = p v(s) for a violated instance found by a verification
//       pass, again with s a substitution of words, or
//   (c) forced by (a) and (b) through right multiplication.
// All of these hold in F, so F maps onto T fixing X. The final verification
// pass checks, exhaustively over T, that T satisfies every identity of sys,
// so T lies in var sys and, being generated by X, is a quotient of F fixing
// X as well. Two surjections fixing generators between finite semigroups
// make T and F isomorphic, with X mapped identically.
//
// The construction is coset enumeration in the style of Haselgrove, Leech
// and Trotter over the free monoid. Node 0 is the empty word. Nodes are
// scanned in creation order; at each node p every identity is applied with
// the left context p and with substitutions drawn from the classes of the
// words of length <= max_subst_length, defining nodes as needed; then the
// missing right edges of p are defined. When the scan finishes, the right
// Cayley graph is complete, its classes form a two-sided congruence, and the
// verification pass decides whether further relations are needed.

#include "planrank/free_semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "planrank/detail/identity_eval.hpp"

namespace planrank {

  namespace {
    constexpr element_type undefined = std::numeric_limits<element_type>::max();
    static_assert(undefined == detail::undefined_elem);
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(std::size_t               nr_gens,
                                   std::vector<element_type> right,
                                   std::vector<element_type> generators)
      : nr_gens_(nr_gens) {
    if (nr_gens == 0 || generators.size() != nr_gens
        || right.size() % nr_gens != 0) {
      throw std::invalid_argument("inconsistent right action dimensions");
    }
    std::size_t const         n = right.size() / nr_gens;
    std::vector<element_type> renum(n, undefined);
    std::vector<element_type> order;
    order.reserve(n);
    for (std::size_t x = 0; x < nr_gens; ++x) {
      auto g = generators[x];
      if (g >= n) {
        throw std::invalid_argument("generator out of range");
      }
      if (renum[g] == undefined) {
        renum[g] = static_cast<element_type>(order.size());
        order.push_back(g);
        reps_.push_back({static_cast<letter_type>(x)});
      }
    }
    if (order.size() != nr_gens) {
      throw std::invalid_argument("generators must be distinct elements");
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < nr_gens; ++x) {
        auto t = right[order[i] * nr_gens + x];
        if (t >= n) {
          throw std::invalid_argument("right action entry out of range");
        }
        if (renum[t] == undefined) {
          renum[t] = static_cast<element_type>(order.size());
          order.push_back(t);
          auto w = reps_[i];
          w.push_back(static_cast<letter_type>(x));
          reps_.push_back(std::move(w));
        }
      }
    }
    if (order.size() != n) {
      throw std::invalid_argument("some elements are not generated");
    }
    right_.resize(n * nr_gens);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t x = 0; x < nr_gens; ++x) {
        right_[i * nr_gens + x] = renum[right[order[i] * nr_gens + x]];
      }
    }
  }

  element_type FiniteSemigroup::element_of(word_type const& w) const {
    if (w.empty()) {
      throw std::invalid_argument("cannot evaluate the empty word");
    }
    element_type e = undefined;
    for (auto x : w) {
      if (x >= nr_gens_) {
        throw std::invalid_argument("letter out of range for "
                                    + std::to_string(nr_gens_) + " generators");
      }
      e = e == undefined ? generator(x) : right(e, x);
    }
    return e;
  }

  element_type FiniteSemigroup::product(element_type a, element_type b) const noexcept {
    if (!table_.empty()) {
      return table_[a * size() + b];
    }
    for (auto x : reps_[b]) {
      a = right(a, x);
    }
    return a;
  }

  std::vector<element_type> const& FiniteSemigroup::multiplication_table() const {
    if (table_.empty()) {
      std::size_t const         n = size();
      std::vector<element_type> t(n * n);
      // reps are prefix closed, so rep(b) minus its last letter is rep(b').
      std::vector<element_type> prefix(n, undefined);
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t x = 0; x < nr_gens_; ++x) {
          auto c = right(static_cast<element_type>(b), static_cast<letter_type>(x));
          if (prefix[c] == undefined && reps_[c].size() == reps_[b].size() + 1
              && reps_[c].back() == x
              && std::equal(reps_[b].cbegin(), reps_[b].cend(), reps_[c].cbegin())) {
            prefix[c] = static_cast<element_type>(b);
          }
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const& r = reps_[b];
          t[a * n + b]  = r.size() == 1
                              ? right(static_cast<element_type>(a), r[0])
                              : right(t[a * n + prefix[b]], r.back());
        }
      }
      table_ = std::move(t);
    }
    return table_;
  }

  void FiniteSemigroup::corrupt_right_action(element_type e,
                                             letter_type  x,
                                             element_type value) {
    right_.at(e * nr_gens_ + x) = value;
    table_.clear();
  }

  ////////////////////////////////////////////////////////////////////////
  // Caps
  ////////////////////////////////////////////////////////////////////////

  EnumerationCaps default_caps() {
    EnumerationCaps caps;
    auto            env = [](char const* name, std::size_t& slot) {
      if (char const* v = std::getenv(name)) {
        char* end = nullptr;
        auto  k   = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && k > 0) {
          slot = static_cast<std::size_t>(k);
        }
      }
    };
    env("PLANRANK_MAX_ELEMENTS", caps.max_elements);
    env("PLANRANK_MAX_WORD_LENGTH", caps.max_word_length);
    env("PLANRANK_MAX_SUBST_LENGTH", caps.max_subst_length);
    env("PLANRANK_MAX_NODES", caps.max_nodes);
    return caps;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumerator
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Node 0 stands for the empty word; it is never a target of an edge and
    // so never takes part in a coincidence.
    constexpr element_type empty_node = 0;
    constexpr letter_type  undefined_letter = std::numeric_limits<letter_type>::max();

    // Variables renamed in order of first occurrence, lhs first. The
    // evaluator assigns variables by index, and early variables that sit
    // next to each other keep its state space small.
    Identity first_occurrence_order(Identity const& id) {
      std::vector<letter_type> name(id.number_of_variables() + 26, undefined_letter);
      letter_type              next = 0;
      auto rename = [&](Pattern const& p) {
        std::vector<letter_type> out;
        for (auto v : p.symbols()) {
          if (v >= name.size()) {
            name.resize(v + 1, undefined_letter);
          }
          if (name[v] == undefined_letter) {
            name[v] = next++;
          }
          out.push_back(name[v]);
        }
        return Pattern(std::move(out));
      };
      auto lhs = rename(id.lhs());
      return Identity(std::move(lhs), rename(id.rhs()));
    }

    class Enumerator {
     public:
      Enumerator(IdentitySystem const& sys, std::size_t n, EnumerationCaps const& caps)
          : n_(n), caps_(caps), subst_length_(caps.max_subst_length) {
        for (auto const& id : sys.identities) {
          auto const norm = first_occurrence_order(id);
          evals_.emplace_back(norm, true);
          identities_.push_back(norm);
        }
        node_limit_ = caps_.max_nodes != 0 ? caps_.max_nodes : 16 * caps_.max_elements;
        new_node(undefined, 0);
        next_lookahead_ = caps_.strategy == EnumerationCaps::Strategy::hlt
                              ? std::max<std::size_t>(4096, 2 * caps_.max_elements)
                              : 1024;
      }

      EnumerationOutcome run() {
        EnumerationOutcome out;
        if (!define_short_words()) {
          return stop(std::move(out), element_cap_reason());
        }
        std::size_t full_from   = 0;  // nodes below this were fully scanned
        std::size_t extras_from = 0;  // extra relations already applied there
        while (true) {
          for (element_type c = 0; c < parent_.size(); ++c) {
            if (parent_[c] != c) {
              continue;
            }
            if (length_[c] > caps_.max_word_length) {
              return stop(std::move(out),
                          "word length cap " + std::to_string(caps_.max_word_length)
                              + " reached");
            }
            if (c >= full_from && caps_.strategy == EnumerationCaps::Strategy::hlt) {
              scan_identities(c);
            }
            scan_extras(c, c >= full_from ? 0 : extras_from);
            if (find(c) == c) {
              for (std::size_t x = 0; x < n_; ++x) {
                if (right_[c * n_ + x] == undefined) {
                  right_[c * n_ + x] = new_node(c, static_cast<letter_type>(x));
                }
              }
            }
            if (scan_cut_) {
              return stop(std::move(out),
                          "node limit " + std::to_string(node_limit_) + " reached");
            }
            // A lookahead pass costs a relation scan per live node; far past
            // the cap it is not worth it.
            bool const near_cap = live_ - 1 <= 2 * caps_.max_elements;
            if (live_ > next_lookahead_ && near_cap) {
              lookahead();
              next_lookahead_ = std::max(next_lookahead_, 2 * live_);
            }
            if (live_ - 1 > caps_.max_elements) {
              if (near_cap) {
                lookahead();
              }
              if (live_ - 1 > caps_.max_elements) {
                return stop(std::move(out), element_cap_reason());
              }
            }
          }
          // The table is complete; close it under the relations.
          for (auto before = live_ + 1; live_ < before;) {
            before = live_;
            lookahead();
          }
          auto S = snapshot();
          ++out.stats.verification_rounds;
          auto const added = violations(S);
          if (added == 0) {
            out.status    = EnumerationOutcome::Status::converged;
            out.semigroup = std::move(S);
            fill_stats(out);
            return out;
          }
          out.stats.refinement_merges += added;
          full_from   = parent_.size();
          extras_from = extras_.size() - added;
        }
      }

     private:
      //////////////////////////////////////////////////////////////////
      // Nodes and coincidences
      //////////////////////////////////////////////////////////////////

      element_type new_node(element_type prefix, letter_type x) {
        auto id = static_cast<element_type>(parent_.size());
        parent_.push_back(id);
        prefix_.push_back(prefix);
        last_.push_back(x);
        length_.push_back(prefix == undefined ? 0 : length_[prefix] + 1);
        right_.insert(right_.end(), n_, undefined);
        ++live_;
        return id;
      }

      element_type find(element_type a) {
        while (parent_[a] != a) {
          parent_[a] = parent_[parent_[a]];
          a          = parent_[a];
        }
        return a;
      }

      void coincidence(element_type a, element_type b) {
        pending_.emplace_back(a, b);
        while (!pending_.empty()) {
          auto [u, v] = pending_.back();
          pending_.pop_back();
          u = find(u);
          v = find(v);
          if (u == v) {
            continue;
          }
          if (v < u) {
            std::swap(u, v);
          }
          parent_[v] = u;
          length_[u] = std::min(length_[u], length_[v]);
          --live_;
          for (std::size_t x = 0; x < n_; ++x) {
            auto ev = right_[v * n_ + x];
            if (ev == undefined) {
              continue;
            }
            auto& eu = right_[u * n_ + x];
            if (eu == undefined) {
              eu = ev;
            } else {
              pending_.emplace_back(eu, ev);
            }
          }
        }
      }

      // c * x, creating the node if needed.
      element_type step(element_type c, letter_type x) {
        c      = find(c);
        auto t = right_[c * n_ + x];
        if (t == undefined) {
          t                  = new_node(c, x);
          right_[c * n_ + x] = t;
        }
        return find(t);
      }

      element_type trace(element_type c, word_type const& w) {
        for (auto x : w) {
          c = step(c, x);
        }
        return c;
      }

      // c * x, or undefined.
      element_type peek(element_type c, letter_type x) {
        auto t = right_[find(c) * n_ + x];
        return t == undefined ? undefined : find(t);
      }

      //////////////////////////////////////////////////////////////////
      // Relations
      //////////////////////////////////////////////////////////////////

      // Every word of length <= subst_length_ gets a node; their classes
      // are the substitution domain.
      bool define_short_words() {
        std::vector<element_type> level{empty_node};
        for (std::size_t len = 1; len <= subst_length_; ++len) {
          std::vector<element_type> next;
          for (auto c : level) {
            for (std::size_t x = 0; x < n_; ++x) {
              next.push_back(step(c, static_cast<letter_type>(x)));
            }
          }
          short_words_.insert(short_words_.end(), next.begin(), next.end());
          if (live_ - 1 > caps_.max_elements) {
            return false;
          }
          level = std::move(next);
        }
        return true;
      }

      std::vector<element_type> domain() {
        std::vector<element_type> d;
        for (auto w : short_words_) {
          d.push_back(find(w));
        }
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        return d;
      }

      // Every instance c u(s) = c v(s) with s drawn from the domain.
      template <typename Mul>
      void apply_identities(std::span<element_type const> context, Mul&& mul) {
        auto const d = domain();
        for (auto const& ev : evals_) {
          ev.run(context, d, 2 * parent_.size(), mul,
                 [this](element_type l, element_type r) {
                   if (l != r && find(l) != find(r)) {
                     coincidence(l, r);
                   }
                   return true;
                 });
        }
      }

      // Live nodes may pass the element cap during a scan and fall back
      // through coincidences; past the node limit the scan stops growing
      // the table and the caller gives up, since c was only partly scanned.
      void scan_identities(element_type c) {
        element_type const ctx[] = {c};
        apply_identities(ctx, [this](element_type a, element_type b) {
          if (parent_.size() > node_limit_) {
            scan_cut_ = true;
            return undefined;
          }
          return trace(a, word_of(b));
        });
      }

      void scan_extras(element_type c, std::size_t from) {
        for (std::size_t i = from; i < extras_.size() && find(c) == c; ++i) {
          auto l = trace(c, extras_[i].first);
          auto r = trace(c, extras_[i].second);
          if (find(l) != find(r)) {
            coincidence(l, r);
          }
        }
      }

      // Applies the relations at every live node without defining new
      // nodes.
      void lookahead() {
        for (element_type c = 0; c < parent_.size(); ++c) {
          if (parent_[c] != c) {
            continue;
          }
          element_type const ctx[] = {c};
          apply_identities(ctx, [this](element_type a, element_type b) {
            for (auto x : word_of(b)) {
              a = peek(a, x);
              if (a == undefined) {
                break;
              }
            }
            return a;
          });
        }
      }

      // The word node b was created for; it stays in b's class.
      word_type const& word_of(element_type b) {
        auto it = word_of_.find(b);
        if (it != word_of_.end()) {
          return it->second;
        }
        word_type w;
        for (auto c = b; c != empty_node; c = prefix_[c]) {
          w.push_back(last_[c]);
        }
        std::reverse(w.begin(), w.end());
        return word_of_.emplace(b, std::move(w)).first->second;
      }

      //////////////////////////////////////////////////////////////////
      // Verification
      //////////////////////////////////////////////////////////////////

      FiniteSemigroup snapshot() {
        std::vector<element_type> roots;
        std::vector<element_type> index(parent_.size(), undefined);
        for (element_type c = 1; c < parent_.size(); ++c) {
          if (parent_[c] == c) {
            index[c] = static_cast<element_type>(roots.size());
            roots.push_back(c);
          }
        }
        std::vector<element_type> right(roots.size() * n_);
        for (std::size_t i = 0; i < roots.size(); ++i) {
          for (std::size_t x = 0; x < n_; ++x) {
            right[i * n_ + x] = index[peek(roots[i], static_cast<letter_type>(x))];
          }
        }
        std::vector<element_type> gens;
        for (std::size_t x = 0; x < n_; ++x) {
          gens.push_back(index[peek(empty_node, static_cast<letter_type>(x))]);
        }
        return FiniteSemigroup(n_, std::move(right), std::move(gens));
      }

      // Runs the exhaustive check on a complete candidate. Every violated
      // instance becomes an extra relation u(s) = v(s) over the
      // representatives s. Returns the number of relations added.
      std::size_t violations(FiniteSemigroup const& S) {
        if (S.size() <= 4096) {
          (void) S.multiplication_table();
        }
        std::vector<element_type> all(S.size());
        for (std::size_t e = 0; e < S.size(); ++e) {
          all[e] = static_cast<element_type>(e);
        }
        auto mul = [&S](element_type a, element_type b) {
          return S.product(a, b);
        };
        std::size_t added = 0;
        for (auto const& id : identities_) {
          detail::IdentityEvaluator ev(id);
          ev.run(all, S.size(), mul,
                 [&](element_type l, element_type r, std::span<element_type const> s) {
                   if (l != r) {
                     Substitution sub;
                     for (std::size_t v = 0; v < s.size(); ++v) {
                       sub.assign(static_cast<letter_type>(v), Word(S.rep(s[v])));
                     }
                     extras_.emplace_back(substitute(id.lhs(), sub).letters(),
                                          substitute(id.rhs(), sub).letters());
                     ++added;
                   }
                   return added < max_extras_per_round;
                 });
        }
        return added;
      }

      std::string element_cap_reason() const {
        return "element cap " + std::to_string(caps_.max_elements) + " exceeded";
      }

      EnumerationOutcome stop(EnumerationOutcome out, std::string reason) {
        out.status = EnumerationOutcome::Status::indeterminate;
        out.reason = std::move(reason);
        // Shortest known word of each live class, by breadth-first search
        // over the defined edges; then the defined part of the right action
        // between those classes.
        std::unordered_map<element_type, element_type> index;
        std::vector<element_type>                      nodes;
        std::deque<std::pair<element_type, word_type>> queue;
        queue.emplace_back(empty_node, word_type{});
        index.emplace(empty_node, undefined);
        while (!queue.empty()) {
          auto [c, w] = std::move(queue.front());
          queue.pop_front();
          for (std::size_t x = 0; x < n_; ++x) {
            auto t = peek(c, static_cast<letter_type>(x));
            if (t != undefined && !index.count(t)) {
              index.emplace(t, static_cast<element_type>(nodes.size()));
              nodes.push_back(t);
              auto v = w;
              v.push_back(static_cast<letter_type>(x));
              out.partial_reps.push_back(v);
              queue.emplace_back(t, std::move(v));
            }
          }
        }
        out.partial_right.assign(nodes.size() * n_, EnumerationOutcome::unknown);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          for (std::size_t x = 0; x < n_; ++x) {
            auto t = peek(nodes[i], static_cast<letter_type>(x));
            if (t != undefined) {
              out.partial_right[i * n_ + x] = index.at(t);
            }
          }
        }
        fill_stats(out);
        return out;
      }

      void fill_stats(EnumerationOutcome& out) const {
        out.stats.nodes_created      = parent_.size();
        out.stats.final_subst_length = subst_length_;
      }

      static constexpr std::size_t max_extras_per_round = 64;

      std::size_t                            n_;
      EnumerationCaps                        caps_;
      std::size_t                            subst_length_;
      std::vector<detail::IdentityEvaluator> evals_;
      std::vector<Identity>                  identities_;
      std::vector<element_type>              parent_;
      std::vector<std::uint32_t>             length_;
      std::vector<element_type>              right_;
      std::vector<std::pair<element_type, element_type>> pending_;
      std::vector<element_type>              short_words_;
      std::vector<element_type>              prefix_;
      std::vector<letter_type>               last_;
      std::unordered_map<element_type, word_type> word_of_;
      std::vector<std::pair<word_type, word_type>> extras_;
      std::size_t                            live_           = 0;
      std::size_t                            next_lookahead_ = 0;
      bool                                   scan_cut_       = false;
      std::size_t                            node_limit_     = 0;
    };

  }  // namespace

  EnumerationOutcome enumerate(IdentitySystem const&  sys,
                               std::size_t            n_gens,
                               EnumerationCaps const& caps) {
    if (n_gens == 0 || n_gens > 26) {
      throw std::invalid_argument("number of generators must be in 1..26");
    }
    if (caps.strategy != EnumerationCaps::Strategy::automatic) {
      return Enumerator(sys, n_gens, caps).run();
    }
    auto first             = caps;
    first.strategy         = EnumerationCaps::Strategy::breadth_first;
    first.max_subst_length = std::min<std::size_t>(2, caps.max_subst_length);
    auto out               = Enumerator(sys, n_gens, first).run();
    if (out.converged()) {
      return out;
    }
    auto second     = caps;
    second.strategy = EnumerationCaps::Strategy::hlt;
    auto again      = Enumerator(sys, n_gens, second).run();
    if (!again.converged()) {
      again.reason = "breadth-first: " + out.reason + "; hlt: " + again.reason;
    }
    return again;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  VerifyResult verify_free(FiniteSemigroup const& S,
                           IdentitySystem const&  sys,
                           std::uint64_t          check_budget) {
    if (S.size() <= 4096) {
      (void) S.multiplication_table();
    }
    std::vector<element_type> domain(S.size());
    for (std::size_t e = 0; e < S.size(); ++e) {
      domain[e] = static_cast<element_type>(e);
    }
    for (auto const& id : sys.identities) {
      detail::IdentityEvaluator ev(id);
      std::uint64_t             steps    = 0;
      bool                      exceeded = false;
      auto mul = [&](element_type a, element_type b) {
        if (check_budget != 0 && ++steps > check_budget) {
          exceeded = true;
          return undefined;
        }
        return S.product(a, b);
      };
      VerifyResult bad;
      bool         ok = ev.run(domain, S.size(), mul, [&](element_type l, element_type r) {
        if (exceeded) {
          return false;
        }
        if (l != r) {
          bad.status = VerifyResult::Status::violated;
          bad.detail = id.to_string() + " fails: sides evaluate to "
                       + to_string(S.rep(l)) + " and " + to_string(S.rep(r));
          return false;
        }
        return true;
      });
      if (exceeded) {
        return {VerifyResult::Status::budget_exceeded,
                "check budget exhausted on " + id.to_string()};
      }
      if (!ok) {
        return bad;
      }
    }
    return {};
  }

  bool is_associative(FiniteSemigroup const& S) {
    auto const& t = S.multiplication_table();
    auto const  n = S.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_associative_sampled(FiniteSemigroup const& S,
                              std::size_t            samples,
                              std::uint64_t          seed) {
    std::mt19937_64                             rng(seed);
    std::uniform_int_distribution<element_type> pick(
        0, static_cast<element_type>(S.size() - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (S.product(S.product(a, b), c) != S.product(a, S.product(b, c))) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::vector<element_type>>
  monotone_embedding(FiniteSemigroup const& small, FiniteSemigroup const& big) {
    if (big.number_of_generators() < small.number_of_generators()) {
      return std::nullopt;
    }
    std::vector<element_type> map(small.size());
    std::vector<bool>         hit(big.size(), false);
    for (std::size_t e = 0; e < small.size(); ++e) {
      map[e] = big.element_of(small.rep(static_cast<element_type>(e)));
      if (hit[map[e]]) {
        return std::nullopt;
      }
      hit[map[e]] = true;
    }
    for (std::size_t e = 0; e < small.size(); ++e) {
      for (std::size_t x = 0; x < small.number_of_generators(); ++x) {
        auto lx = static_cast<letter_type>(x);
        if (map[small.right(static_cast<element_type>(e), lx)]
            != big.right(map[e], lx)) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  std::string to_text(FiniteSemigroup const& S, Instance const& inst) {
    std::ostringstream os;
    os << "SEMIGROUP\nfamily m" << inst.family << "\nn "
       << (inst.n ? std::to_string(*inst.n) : "-") << "\npi "
       << (inst.pi ? inst.pi->to_string() : "-") << "\ngens " << S.number_of_generators()
       << "\nsize " << S.size() << "\n";
    for (element_type e = 0; e < S.size(); ++e) {
      os << e << " " << to_string(S.rep(e)) << " |";
      for (letter_type x = 0; x < S.number_of_generators(); ++x) {
        os << " " << S.right(e, x);
      }
      os << "\n";
    }
    return os.str();
  }

  SemigroupFile parse_semigroup(std::string const& text) {
    std::istringstream is(text);
    std::string        line;
    auto fail = [](std::string const& what) {
      throw std::invalid_argument("semigroup text: " + what);
    };
    auto header = [&](std::string const& key) {
      if (!std::getline(is, line)) {
        fail("missing " + key);
      }
      std::istringstream ls(line);
      std::string        k, v;
      if (!(ls >> k >> v) || k != key) {
        fail("expected '" + key + " <value>', got '" + line + "'");
      }
      return v;
    };
    if (!std::getline(is, line) || line != "SEMIGROUP") {
      fail("first line must be SEMIGROUP");
    }
    Instance inst;
    auto     fam = header("family");
    if (fam.size() < 2 || fam[0] != 'm') {
      fail("bad family '" + fam + "'");
    }
    inst.family = static_cast<unsigned>(std::stoul(fam.substr(1)));
    if (auto n = header("n"); n != "-") {
      inst.n = static_cast<unsigned>(std::stoul(n));
    }
    if (auto pi = header("pi"); pi != "-") {
      // cycle notation may contain no spaces, e.g. (12)(34)
      inst.pi = Permutation4::parse(pi);
    }
    auto const gens = std::stoul(header("gens"));
    auto const size = std::stoul(header("size"));
    if (gens == 0 || size == 0) {
      fail("gens and size must be positive");
    }
    std::vector<word_type>    reps(size);
    std::vector<element_type> right(size * gens);
    for (std::size_t e = 0; e < size; ++e) {
      if (!std::getline(is, line)) {
        fail("expected " + std::to_string(size) + " element lines");
      }
      std::istringstream ls(line);
      std::size_t        id;
      std::string        w, bar;
      if (!(ls >> id >> w >> bar) || id != e || bar != "|") {
        fail("bad element line '" + line + "'");
      }
      reps[e] = Word::parse(w).letters();
      for (std::size_t x = 0; x < gens; ++x) {
        std::size_t t;
        if (!(ls >> t) || t >= size) {
          fail("bad right action in '" + line + "'");
        }
        right[e * gens + x] = static_cast<element_type>(t);
      }
    }
    std::vector<element_type> generators(gens);
    for (std::size_t x = 0; x < gens; ++x) {
      generators[x] = static_cast<element_type>(x);
    }
    FiniteSemigroup S(gens, std::move(right), std::move(generators));
    if (S.reps() != reps) {
      fail("representatives do not match the right action");
    }
    return {inst, std::move(S)};
  }

}  // namespace planrank
