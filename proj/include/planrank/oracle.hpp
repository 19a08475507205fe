// Equality of words modulo an identity system: a bidirectional derivation
// search producing replayable proofs, and a finite model search producing
// counter-models.

#ifndef PLANRANK_ORACLE_HPP_
#define PLANRANK_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planrank/catalog.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/word.hpp"

namespace planrank {

  //! One rewriting step: at `position` of the current word, the instance of
  //! one side of identity `identity` under `substitution` is replaced by the
  //! instance of the other side. `forward` means lhs -> rhs.
  struct ProofStep {
    std::size_t  position = 0;
    std::size_t  identity = 0;
    bool         forward  = true;
    Substitution substitution;

    friend bool operator==(ProofStep const&, ProofStep const&) = default;
  };

  struct DerivationProof {
    Word                   start;
    Word                   end;
    std::vector<ProofStep> steps;
  };

  //! A finite semigroup of order `order` given by its table (row-major,
  //! table[a * order + b] = ab) and the image of each generator.
  struct CounterModel {
    std::size_t               order = 0;
    std::vector<element_type> table;
    std::vector<element_type> assignment;

    //! Value of w under the assignment.
    [[nodiscard]] element_type evaluate(Word const& w) const;
  };

  struct OracleBudget {
    //! Longest word the derivation search visits; 0 means
    //! max(|u|, |v|) + 2 * (longest identity side).
    std::size_t length_cap = 0;
    //! The cap doubles while the search is undecided, up to this value;
    //! 0 means twice the starting cap.
    std::size_t length_ceiling = 0;
    //! Words visited per derivation search, both directions together.
    std::size_t node_cap = 1'000'000;
    //! Largest model order tried.
    std::size_t model_order_cap = 4;
  };

  struct EqVerdict {
    enum class Kind { equal, distinct, undecided };
    std::variant<DerivationProof, CounterModel, std::monostate> value;

    [[nodiscard]] Kind kind() const noexcept {
      return static_cast<Kind>(value.index());
    }
    [[nodiscard]] DerivationProof const& proof() const {
      return std::get<DerivationProof>(value);
    }
    [[nodiscard]] CounterModel const& model() const {
      return std::get<CounterModel>(value);
    }
  };

  //! Every word other than w obtained by one replacement of an instance of
  //! one side of an identity by the other side, of length at most
  //! length_cap. Sorted shortlex.
  std::vector<Word> rewrite_neighbors(Word const&           w,
                                      IdentitySystem const& sys,
                                      std::size_t           length_cap);

  //! The same, with the step producing each word (one step per distinct
  //! word, the first found).
  std::vector<std::pair<Word, ProofStep>> rewrite_steps(Word const&           w,
                                                        IdentitySystem const& sys,
                                                        std::size_t length_cap);

  //! Derivation search first, then the model search, then the derivation
  //! search again with doubled length caps. Deterministic.
  EqVerdict decide_equal(Word const&           u,
                         Word const&           v,
                         IdentitySystem const& sys,
                         OracleBudget const&   budget = {});

  //! Only the derivation search, at one length cap.
  std::optional<DerivationProof> find_derivation(Word const&           u,
                                                 Word const&           v,
                                                 IdentitySystem const& sys,
                                                 std::size_t           length_cap,
                                                 std::size_t           node_cap);

  //! Smallest model separating u and v: orders 1..max_order, tables in
  //! lexicographic order, one table per isomorphism class (the
  //! lexicographically least relabelling), then assignments in
  //! lexicographic order.
  std::optional<CounterModel> find_counter_model(Word const&           u,
                                                 Word const&           v,
                                                 IdentitySystem const& sys,
                                                 std::size_t           max_order);

  //! Every semigroup of the given order satisfying sys, one per isomorphism
  //! class (the lexicographically least table), as row-major tables.
  std::vector<std::vector<element_type>> models_of_order(IdentitySystem const& sys,
                                                         std::size_t           order);

  struct ReplayResult {
    enum class Status { valid, malformed, invalid };
    Status      status = Status::valid;
    std::string detail;
    //! Index of the offending step, when there is one.
    std::optional<std::size_t> step;

    explicit operator bool() const noexcept {
      return status == Status::valid;
    }
  };

  //! Replays the steps from the start word. Malformed: identity index,
  //! position or substitution out of range or incomplete. Invalid: a factor
  //! does not match the source side, or the chain does not end at `end`.
  ReplayResult replay_proof(DerivationProof const& p, IdentitySystem const& sys);

  //! Table well-formed and associative, every identity of sys holds under
  //! every substitution, and u, v evaluate differently. Exhaustive.
  ReplayResult verify_counter_model(CounterModel const&   m,
                                    Word const&           u,
                                    Word const&           v,
                                    IdentitySystem const& sys);

  //! "PROOF", "start w", "end w", then one line per step:
  //! "step <position> <identity> -> x=ab y=b => <word after the step>",
  //! with "<-" for rhs -> lhs.
  std::string     to_text(DerivationProof const& p, IdentitySystem const& sys);
  DerivationProof parse_proof(std::string const& text);

  //! "MODEL <order>", one "row ..." line per table row, then
  //! "assign a=0 b=1 ...".
  std::string  to_text(CounterModel const& m);
  CounterModel parse_model(std::string const& text);

}  // namespace planrank

#endif  // PLANRANK_ORACLE_HPP_
