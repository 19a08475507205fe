// Enumeration of the n-generated relatively free semigroup F_n(V) of a
// variety V given by a finite system of identities.

#ifndef PLANRANK_FREE_SEMIGROUP_HPP_
#define PLANRANK_FREE_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planrank/catalog.hpp"
#include "planrank/word.hpp"

namespace planrank {

  using element_type = std::uint32_t;

  //! A finite semigroup generated by its first `number_of_generators()`
  //! elements, presented by its right Cayley graph. Element i has the
  //! shortlex-minimal representative reps()[i]; elements are numbered in
  //! shortlex order of their representatives, so generator x is element x.
  class FiniteSemigroup {
   public:
    //! Builds from a right action right[e * nr_gens + x]. Representatives are
    //! recomputed by breadth-first search from the generators and elements
    //! renumbered accordingly; `generators` gives the element of each
    //! generator in the input numbering. Throws std::invalid_argument if some
    //! element is unreachable from the generators.
    FiniteSemigroup(std::size_t                 nr_gens,
                    std::vector<element_type>   right,
                    std::vector<element_type>   generators);

    [[nodiscard]] std::size_t size() const noexcept {
      return reps_.size();
    }
    [[nodiscard]] std::size_t number_of_generators() const noexcept {
      return nr_gens_;
    }
    [[nodiscard]] element_type generator(std::size_t x) const noexcept {
      return static_cast<element_type>(x);
    }
    [[nodiscard]] element_type right(element_type e, letter_type x) const noexcept {
      return right_[e * nr_gens_ + x];
    }
    [[nodiscard]] std::vector<element_type> const& right_action() const noexcept {
      return right_;
    }
    [[nodiscard]] word_type const& rep(element_type e) const noexcept {
      return reps_[e];
    }
    [[nodiscard]] std::vector<word_type> const& reps() const noexcept {
      return reps_;
    }

    //! Folds w through the right action. Throws std::invalid_argument if w
    //! uses a letter >= number_of_generators() or is empty.
    [[nodiscard]] element_type element_of(word_type const& w) const;
    [[nodiscard]] element_type element_of(Word const& w) const {
      return element_of(w.letters());
    }

    //! a * b, by tracing the representative of b from a.
    [[nodiscard]] element_type product(element_type a, element_type b) const noexcept;

    //! Full size x size table, row-major; tables are built on first use.
    [[nodiscard]] std::vector<element_type> const& multiplication_table() const;

    //! Replaces one right-action entry; for mutation tests only.
    void corrupt_right_action(element_type e, letter_type x, element_type value);

   private:
    std::size_t                               nr_gens_;
    std::vector<element_type>                 right_;
    std::vector<word_type>                    reps_;
    mutable std::vector<element_type>         table_;
  };

  struct EnumerationCaps {
    std::size_t max_elements     = 50'000;
    std::size_t max_word_length  = 24;
    std::size_t max_subst_length = 4;
    //! Nodes created over the whole run, live or merged; 0 means
    //! 16 * max_elements.
    std::size_t max_nodes = 0;
    //! hlt: relations are traced at each node as it is scanned, defining
    //! nodes along the way. breadth_first: nodes are defined in
    //! breadth-first order only and relations are applied in passes over
    //! all nodes without defining any. automatic: breadth_first with
    //! substitution words of length at most 2, then hlt if that did not
    //! converge; the partial data are then those of the hlt run.
    enum class Strategy { automatic, hlt, breadth_first };
    Strategy strategy = Strategy::automatic;
  };

  //! Default caps, optionally overridden by the environment variables
  //! PLANRANK_MAX_ELEMENTS, PLANRANK_MAX_WORD_LENGTH, PLANRANK_MAX_SUBST_LENGTH,
  //! PLANRANK_MAX_NODES.
  EnumerationCaps default_caps();

  struct EnumerationStats {
    std::size_t nodes_created      = 0;
    std::size_t verification_rounds = 0;
    std::size_t refinement_merges  = 0;
    std::size_t final_subst_length = 0;
  };

  struct EnumerationOutcome {
    enum class Status { converged, indeterminate };

    Status                         status = Status::indeterminate;
    std::optional<FiniteSemigroup> semigroup;  // set iff converged
    //! Why the run stopped early, e.g. "element cap 50000 exceeded".
    std::string reason;
    //! Representatives of the classes known when the run stopped, and the
    //! known part of the right action between them (row-major by class then
    //! generator, `unknown` where undefined). Words in one class are equal
    //! in F_n; distinct classes need not be distinct elements.
    std::vector<word_type>    partial_reps;
    std::vector<element_type> partial_right;
    static constexpr element_type unknown = static_cast<element_type>(-1);
    EnumerationStats       stats;

    [[nodiscard]] bool converged() const noexcept {
      return status == Status::converged;
    }
  };

  //! Computes F_{n_gens}(var sys). CONVERGED results are exactly the
  //! relatively free semigroup; see the comment in free_semigroup.cpp.
  EnumerationOutcome enumerate(IdentitySystem const& sys,
                               std::size_t           n_gens,
                               EnumerationCaps const& caps = default_caps());

  struct VerifyResult {
    enum class Status { holds, violated, budget_exceeded };
    Status      status = Status::holds;
    std::string detail;  // which identity failed, with a witness when known

    explicit operator bool() const noexcept {
      return status == Status::holds;
    }
  };

  //! Checks that every identity of sys holds under every substitution of
  //! elements of S. The search deduplicates partial evaluations and is
  //! always exhaustive; check_budget bounds the number of evaluation steps
  //! per identity (0 = unbounded).
  VerifyResult verify_free(FiniteSemigroup const& S,
                           IdentitySystem const&  sys,
                           std::uint64_t          check_budget = 0);

  //! Checks (xy)z = x(yz) for all triples. Exhaustive.
  bool is_associative(FiniteSemigroup const& S);

  //! Checks associativity on `samples` random triples drawn with `seed`.
  bool is_associative_sampled(FiniteSemigroup const& S,
                              std::size_t            samples,
                              std::uint64_t          seed);

  //! Tabular text format:
  //!   SEMIGROUP
  //!   family m14
  //!   n -
  //!   pi (123)
  //!   gens 3
  //!   size 34
  //! then one line "<id> <representative> | <right(id, a)> <right(id, b)> ..."
  //! per element, ids in order.
  std::string to_text(FiniteSemigroup const& S, Instance const& inst);

  struct SemigroupFile {
    Instance        instance;
    FiniteSemigroup semigroup;
  };
  //! Parses the format above. The representatives must be those the right
  //! action determines. Throws std::invalid_argument.
  SemigroupFile parse_semigroup(std::string const& text);

  //! The map F_n -> F_{n+1} sending the class of each representative of
  //! `small` to its class in `big`, provided it is an injective map that
  //! commutes with right multiplication by the first n generators.
  std::optional<std::vector<element_type>>
  monotone_embedding(FiniteSemigroup const& small, FiniteSemigroup const& big);

}  // namespace planrank

#endif  // PLANRANK_FREE_SEMIGROUP_HPP_
