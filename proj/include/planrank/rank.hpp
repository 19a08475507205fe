// Planarity ranks of catalog varieties and the reproduction of the rank
// table.

#ifndef PLANRANK_RANK_HPP_
#define PLANRANK_RANK_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planrank/catalog.hpp"
#include "planrank/cayley.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/planarity.hpp"
#include "planrank/separators.hpp"

namespace planrank {

  //! How a planarity decision for SCay(F_n) was obtained.
  enum class Evidence {
    //! F_n converged; decide_planar on the whole graph.
    full_graph,
    //! F_n did not converge; a Kuratowski subdivision among separated
    //! classes of a partial enumeration (see separated_witness).
    separated_partial,
    //! Nothing decided.
    none
  };

  std::string to_string(Evidence e);

  struct StepRecord {
    std::size_t                n_gens = 0;
    EnumerationOutcome::Status status = EnumerationOutcome::Status::indeterminate;
    //! |F_n| when converged, otherwise the number of known classes.
    std::size_t                         size  = 0;
    std::size_t                         edges = 0;
    std::optional<bool>                 planar;
    Evidence                            evidence = Evidence::none;
    std::optional<PlanarityCertificate> certificate;
    //! The certificate as text, vertex names being representative words.
    std::string certificate_text;
    bool        certificate_verified = false;
    //! For separated_partial evidence: the graph the witness lives in.
    std::optional<SeparatedWitness> separated;
    //! Faces of the embedding, for planar steps.
    std::size_t faces = 0;
    //! Why the enumeration stopped, or other remarks.
    std::string note;
    double      seconds = 0;
  };

  struct RankVerdict {
    Instance                instance;
    std::vector<StepRecord> steps;
    //! Largest n with SCay(F_n) planar, when a nonplanar n was reached and
    //! every step before it was decided.
    std::optional<unsigned> rank;
    //! Set when all n up to n_max were planar: the rank is at least this.
    std::optional<unsigned> lower_bound;
    unsigned                expected = 0;
    bool                    match    = false;
    std::vector<std::string> anomalies;
    //! The family claims this rank for every exponent from some bound on;
    //! this instance is one representative of that claim.
    bool spot_check = false;

    //! A step could not be decided.
    [[nodiscard]] bool indeterminate() const noexcept {
      return !rank && !lower_bound;
    }
  };

  //! HLT runs with long words and substitution words of length 3, 4, 2, at
  //! most 20000 classes each.
  std::vector<EnumerationCaps> default_witness_caps();

  struct RankOptions {
    std::size_t     n_max = 4;
    EnumerationCaps caps  = default_caps();
    //! Allow separated_partial evidence when F_n does not converge.
    bool partial_witnesses = true;
    //! Partial enumerations tried in turn for a separated witness.
    std::vector<EnumerationCaps> witness_caps = default_witness_caps();
    //! Classes of each partial enumeration considered.
    std::size_t witness_ball = 20'000;
    //! Check each converged pair F_n, F_{n+1} with monotone_embedding and
    //! induced_restriction.
    bool check_restrictions = true;
    //! Called by planarity_rank with every F_n that converged.
    std::function<void(Instance const&, FiniteSemigroup const&, StepRecord const&)> on_converged;
  };

  //! One step: enumerate F_n, build SCay and decide planarity, every
  //! certificate being verified before it is recorded.
  StepRecord planarity_step(IdentitySystem const& sys,
                            std::size_t           n_gens,
                            RankOptions const&    opts = {});

  //! SCay(F_n) for n = 1, 2, ... until the first nonplanar n, or n_max.
  //! Throws std::invalid_argument if n_max < 2.
  RankVerdict planarity_rank(Instance const& inst, RankOptions const& opts = {});

  struct TableReport {
    std::vector<RankVerdict> verdicts;
    std::size_t              matches       = 0;
    std::size_t              mismatches    = 0;
    std::size_t              indeterminate = 0;
    [[nodiscard]] bool       all_match() const noexcept {
      return mismatches == 0 && indeterminate == 0;
    }
  };

  //! One verdict per instance, in the given order. `progress`, when set, is
  //! called after each verdict.
  TableReport reproduce_table(std::vector<Instance> const&                   instances,
                              RankOptions const&                             opts = {},
                              std::function<void(RankVerdict const&)> const& progress = {});

  //! Printed with every report: families whose claim covers all exponents
  //! beyond a bound are only checked at representatives.
  extern char const* const spot_check_statement;

  //! {"instances": [{"instance", "family", "n", "pi", "expected",
  //! "computed", "lower_bound", "match", "spot_check", "anomalies",
  //! "steps": [{"n", "status", "size", "edges", "planar", "evidence",
  //! "certificate_verified", "faces", "witness", "note", "seconds"}]}],
  //! "summary": {...}, "spot_check_statement"}.
  std::string to_json(TableReport const& r);
  std::string to_text_table(TableReport const& r);

}  // namespace planrank

#endif  // PLANRANK_RANK_HPP_
