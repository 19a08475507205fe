// The 47 identity-system families characterising modular semigroup
// varieties, their parameters, and the table of expected planarity ranks.

#ifndef PLANRANK_CATALOG_HPP_
#define PLANRANK_CATALOG_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planrank/word.hpp"

namespace planrank {

  //! A permutation of {1,2,3,4}, stored 0-based: images()[i] is the image of
  //! position i.
  class Permutation4 {
   public:
    constexpr Permutation4() noexcept : images_{0, 1, 2, 3} {}
    explicit Permutation4(std::array<letter_type, 4> images);

    //! Cycle notation as printed in the catalog: "(123)", "(12)(34)".
    static Permutation4 parse(std::string_view cycles);

    [[nodiscard]] letter_type operator()(letter_type i) const noexcept {
      return images_[i];
    }
    [[nodiscard]] std::array<letter_type, 4> const& images() const noexcept {
      return images_;
    }
    [[nodiscard]] Permutation4 inverse() const;
    [[nodiscard]] std::string  to_string() const;

    friend bool operator==(Permutation4 const&, Permutation4 const&) = default;

   private:
    std::array<letter_type, 4> images_;
  };

  enum class ParameterKind { none, exponent, permutation, exponent_and_permutation };

  //! Parameter kind of family m1..m47. Throws std::out_of_range otherwise.
  ParameterKind parameter_kind(unsigned family);

  //! Which of the sets Pi_1, Pi_2, Pi_3 the family draws pi from; 0 when the
  //! family has no permutation parameter.
  unsigned permitted_set(unsigned family);

  //! Pi_1 (7 elements), Pi_2 (6), Pi_3 (5), in the order they are listed.
  std::vector<Permutation4> const& permutation_set(unsigned k);

  //! A family with its parameters bound.
  struct Instance {
    unsigned                    family = 0;
    std::optional<unsigned>     n;
    std::optional<Permutation4> pi;

    //! "m1_2", "m4_1_(123)", "m14_(12)(34)", "m21".
    [[nodiscard]] std::string label() const;

    friend bool operator==(Instance const&, Instance const&) = default;
  };

  //! Parses a label as produced by Instance::label.
  Instance parse_instance_label(std::string_view label);

  //! How the position-wise permutation identity is read. The catalog uses
  //! `positional`: position i of the right side carries x_{pi(i)}.
  enum class PermutationReading { positional, relabelling };

  struct IdentitySystem {
    Instance              instance;
    std::vector<Identity> identities;

    [[nodiscard]] std::size_t max_variables() const noexcept;
    [[nodiscard]] std::size_t longest_side() const noexcept;
  };

  //! The system of identities of an instance, with n expanded and pi applied.
  //! Chained identities a=b=c are split into a=b, b=c. Throws
  //! std::invalid_argument on missing, extra or invalid parameters.
  IdentitySystem instantiate(Instance const& inst,
                             PermutationReading reading
                             = PermutationReading::positional);
  IdentitySystem instantiate(unsigned                    family,
                             std::optional<unsigned>     n  = {},
                             std::optional<Permutation4> pi = {});

  //! x1x2x3x4 = x_{1pi}x_{2pi}x_{3pi}x_{4pi}.
  Identity permutation_identity(Permutation4 const& pi,
                                PermutationReading  reading
                                = PermutationReading::positional);

  //! The planarity rank listed for the instance (1, 2 or 3).
  unsigned expected_rank(Instance const& inst);

  //! Instances of the given families in catalog order: family ascending, then
  //! n ascending (families with an exponent only), then pi in listed order.
  std::vector<Instance> enumerate_instances(std::vector<unsigned> const& families,
                                            std::vector<unsigned> const& n_values);

  //! Raw catalog rows, for audit export.
  struct FamilyRecord {
    unsigned                      family;
    ParameterKind                 kind;
    unsigned                      pi_set;
    bool                          permutation_identity;
    std::vector<std::string_view> identities;
  };
  std::vector<FamilyRecord> const& catalog_records();

  constexpr unsigned number_of_families = 47;

}  // namespace planrank

#endif  // PLANRANK_CATALOG_HPP_
