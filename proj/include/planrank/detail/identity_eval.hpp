// Evaluation of an identity under every assignment of its variables drawn
// from a finite domain of semigroup elements.
//
// Variables are assigned in index order. After assigning x_0..x_{j-1}, every
// maximal run of assigned symbols on either side has a single value, so two
// partial assignments giving the same run values behave identically for the
// rest of the search. States are deduplicated per level, which bounds the
// work by (number of distinct states) * |domain| per level instead of
// |domain|^k.
//
// With a left context the identity is read as p u = p v for a fresh first
// variable p, whose values are drawn from a separate domain.

#ifndef PLANRANK_DETAIL_IDENTITY_EVAL_HPP_
#define PLANRANK_DETAIL_IDENTITY_EVAL_HPP_

#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "planrank/word.hpp"

namespace planrank::detail {

  using elem_type                   = std::uint32_t;
  constexpr elem_type undefined_elem = std::numeric_limits<elem_type>::max();

  class IdentityEvaluator {
   public:
    explicit IdentityEvaluator(Identity const& id, bool left_context = false)
        : nr_vars_(id.number_of_variables() + (left_context ? 1 : 0)),
          left_context_(left_context) {
      build(id);
    }

    //! Calls visit(lhs_value, rhs_value) once per distinct final state that
    //! is reachable with fully defined products; visit may also take a third
    //! argument, the assignment (one domain element per variable, the left
    //! context first). mul(a, b) returns undefined_elem when the product is
    //! unknown; such branches are dropped. visit returns false to stop the
    //! search. Returns false iff stopped. Values below universe are packed
    //! into compact keys; larger ones are still handled.
    template <typename Mul, typename Visit>
    bool run(std::span<elem_type const> domain,
             std::size_t                universe,
             Mul&&                      mul,
             Visit&&                    visit) const {
      return run(domain, domain, universe, mul, visit);
    }

    //! As above, with the left context drawn from `context`.
    template <typename Mul, typename Visit>
    bool run(std::span<elem_type const> context,
             std::span<elem_type const> domain,
             std::size_t                universe,
             Mul&&                      mul,
             Visit&&                    visit) const {
      Search<Mul, Visit> s{context, domain, mul, visit, {}, {}, {}, 1};
      s.seen64.resize(nr_vars_ + 1);
      s.seen.resize(nr_vars_ + 1);
      while (s.bits < 32 && (std::uint64_t(1) << s.bits) <= universe) {
        ++s.bits;
      }
      std::vector<elem_type> state;
      return dfs(0, state, s);
    }

    [[nodiscard]] std::size_t number_of_variables() const noexcept {
      return nr_vars_;
    }

   private:
    // A recipe builds one slot of level j+1 from slots of level j and the
    // value of the newly assigned variable (encoded as new_value).
    static constexpr std::uint32_t new_value = std::numeric_limits<std::uint32_t>::max();

    struct Token {
      bool     is_var;
      unsigned index;  // variable index or slot index
      friend bool operator==(Token const&, Token const&) = default;
    };

    struct Level {
      std::vector<Token>                      lhs, rhs;
      std::vector<std::vector<std::uint32_t>> recipe;  // for the *next* level
      std::size_t                             nr_slots = 0;
    };

    template <typename Mul, typename Visit>
    struct Search {
      std::span<elem_type const>                     context;
      std::span<elem_type const>                     domain;
      Mul&                                           mul;
      Visit&                                         visit;
      std::vector<std::unordered_set<std::uint64_t>> seen64;
      std::vector<std::set<std::vector<elem_type>>>  seen;
      std::vector<elem_type>                         assignment;
      std::uint64_t                                  bits;
    };

    void build(Identity const& id) {
      levels_.resize(nr_vars_ + 1);
      unsigned const shift = left_context_ ? 1 : 0;
      for (auto const* side : {&id.lhs(), &id.rhs()}) {
        auto& out = side == &id.lhs() ? levels_[0].lhs : levels_[0].rhs;
        if (left_context_) {
          out.push_back({true, 0});
        }
        for (auto v : side->symbols()) {
          out.push_back({true, v + shift});
        }
      }
      for (std::size_t j = 0; j < nr_vars_; ++j) {
        auto& cur  = levels_[j];
        auto& next = levels_[j + 1];
        auto  step = [&](std::vector<Token> const& in, std::vector<Token>& out) {
          bool open = false;
          for (auto const& t : in) {
            bool fused = !t.is_var || t.index == j;
            if (!fused) {
              out.push_back(t);
              open = false;
              continue;
            }
            std::uint32_t src = t.is_var ? new_value : t.index;
            if (open) {
              cur.recipe.back().push_back(src);
            } else {
              cur.recipe.push_back({src});
              out.push_back({false, static_cast<unsigned>(next.nr_slots++)});
              open = true;
            }
          }
        };
        step(cur.lhs, next.lhs);
        step(cur.rhs, next.rhs);
      }
    }

    // True if both sides are the same token sequence with equal slot values,
    // in which case every extension satisfies the identity.
    bool trivially_equal(Level const& lv, std::vector<elem_type> const& st) const {
      if (lv.lhs.size() != lv.rhs.size()) {
        return false;
      }
      for (std::size_t i = 0; i < lv.lhs.size(); ++i) {
        auto const& a = lv.lhs[i];
        auto const& b = lv.rhs[i];
        if (a.is_var != b.is_var) {
          return false;
        }
        if (a.is_var ? a.index != b.index : st[a.index] != st[b.index]) {
          return false;
        }
      }
      return true;
    }

    template <typename S>
    bool dfs(std::size_t j, std::vector<elem_type> const& state, S& s) const {
      auto const& lv = levels_[j];
      if (j == nr_vars_) {
        auto l = state[lv.lhs[0].index];
        auto r = state[lv.rhs[0].index];
        using A = std::span<elem_type const>;
        if constexpr (std::is_invocable_v<decltype(s.visit), elem_type, elem_type, A>) {
          return s.visit(l, r, A(s.assignment));
        } else {
          return s.visit(l, r);
        }
      }
      if (j > 0) {
        bool packable = lv.nr_slots * s.bits <= 64;
        for (std::size_t k = 0; k < state.size() && packable; ++k) {
          packable = (std::uint64_t(state[k]) >> s.bits) == 0;
        }
        if (packable) {
          std::uint64_t key = 0;
          for (auto e : state) {
            key = (key << s.bits) | e;
          }
          if (!s.seen64[j].insert(key).second) {
            return true;
          }
        } else if (!s.seen[j].insert(state).second) {
          return true;
        }
        if (trivially_equal(lv, state)) {
          return true;
        }
      }
      auto const domain = j == 0 && left_context_ ? s.context : s.domain;
      std::vector<elem_type> next(levels_[j + 1].nr_slots);
      for (auto e : domain) {
        bool ok = true;
        for (std::size_t k = 0; k < lv.recipe.size() && ok; ++k) {
          auto const& r   = lv.recipe[k];
          elem_type   acc = r[0] == new_value ? e : state[r[0]];
          for (std::size_t i = 1; i < r.size(); ++i) {
            acc = s.mul(acc, r[i] == new_value ? e : state[r[i]]);
            if (acc == undefined_elem) {
              ok = false;
              break;
            }
          }
          next[k] = acc;
        }
        if (!ok) {
          continue;
        }
        s.assignment.push_back(e);
        bool const go_on = dfs(j + 1, next, s);
        s.assignment.pop_back();
        if (!go_on) {
          return false;
        }
      }
      return true;
    }

    std::size_t        nr_vars_;
    bool               left_context_;
    std::vector<Level> levels_;
  };

}  // namespace planrank::detail

#endif  // PLANRANK_DETAIL_IDENTITY_EVAL_HPP_
