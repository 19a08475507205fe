// Finite semigroups of a variety used to tell elements of F_n apart when F_n
// itself is out of reach, and nonplanarity certificates built on them.

#ifndef PLANRANK_SEPARATORS_HPP_
#define PLANRANK_SEPARATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planrank/catalog.hpp"
#include "planrank/cayley.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/planarity.hpp"

namespace planrank {

  //! A homomorphism from the free semigroup on the generators into a
  //! semigroup T of the variety, given by its value on words. Values are
  //! only compared for equality. Two words with different values are
  //! different in F_n: F_n maps onto the subsemigroup of T generated by the
  //! images of the generators.
  struct Separator {
    std::string                                      description;
    std::function<std::uint64_t(word_type const&)>   image;
  };

  //! True iff every identity of sys holds in the semigroup with the given
  //! row-major table, under every substitution. Exhaustive; nullopt if more
  //! than `budget` products would be needed.
  std::optional<bool> satisfies(std::vector<element_type> const& table,
                                std::size_t                      order,
                                IdentitySystem const&            sys,
                                std::uint64_t                    budget = 50'000'000);

  //! True iff every identity of `target` has a derivation from `from` that
  //! replays, the variables read as letters. Then var(from) lies in
  //! var(target).
  bool derivable(IdentitySystem const& from, IdentitySystem const& target);

  //! {x^{d+1} = x, x^d y = y x^d}: Clifford semigroups whose subgroups have
  //! exponent dividing d. Groups of exponent d are among them.
  IdentitySystem clifford_system(unsigned d);
  //! {x^{d+1} = x}: completely regular semigroups of exponent d, among them
  //! the Rees matrix semigroups over groups of exponent d.
  IdentitySystem completely_regular_system(unsigned d);

  //! Separators for var(sys) on n_gens generators. Each kind enters only
  //! after its membership in var(sys) is established:
  //!   - every model of order at most 4 from the model search;
  //!   - F_{n_gens} of smaller catalog members of the family, by an
  //!     exhaustive identity check of the table;
  //!   - Clifford semigroups and groups of exponent d, Rees matrix
  //!     semigroups over such groups, by derivation of the identities of
  //!     sys from clifford_system(d), resp. completely_regular_system(d);
  //!   - the semigroups recording the first or the last run of letters of a
  //!     word (letter, length mod d, whether the word is one run), by an
  //!     exhaustive identity check.
  //! d is the exponent parameter of the instance, when it has one.
  std::vector<Separator> separators(IdentitySystem const& sys, std::size_t n_gens);

  //! Images of a word under each separator.
  std::vector<std::uint64_t> signature(std::vector<Separator> const& seps,
                                       word_type const&              w);

  //! A Kuratowski subdivision inside SCay(F_n) obtained without computing
  //! F_n. `graph` has one vertex per retained class of a partial
  //! enumeration, named by its representative, and the defined edges
  //! between them. Retained classes have pairwise different signatures, so
  //! they are distinct elements of F_n, and each defined edge joins u to
  //! u x in F_n; a subdivision in `graph` is therefore one in SCay(F_n).
  struct SeparatedWitness {
    SimpleGraph            graph;
    std::vector<word_type> words;  // representative of each vertex
    KuratowskiWitness      witness;
    std::vector<std::string> separators;  // descriptions
  };

  //! Keeps the first class (in the order of partial_reps, at most `ball`
  //! classes) of each signature and searches the resulting graph.
  std::optional<SeparatedWitness> separated_witness(EnumerationOutcome const&     partial,
                                                    std::size_t                   n_gens,
                                                    std::vector<Separator> const& seps,
                                                    std::size_t                   ball);

  //! The witness is a valid subdivision of `graph`, and the signatures of
  //! its vertices are pairwise different.
  CertificateCheck verify_separated(SeparatedWitness const&       sw,
                                    std::vector<Separator> const& seps);

}  // namespace planrank

#endif  // PLANRANK_SEPARATORS_HPP_
