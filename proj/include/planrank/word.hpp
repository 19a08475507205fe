// Words over generators, identity patterns over variables, substitution.

#ifndef PLANRANK_WORD_HPP_
#define PLANRANK_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planrank {

  using letter_type = std::uint8_t;
  using word_type   = std::vector<letter_type>;

  //! Shortlex comparison: shorter words first, then lexicographic.
  bool shortlex_less(word_type const& u, word_type const& v) noexcept;

  //! A nonempty product of generators, letters are 0-based generator indices.
  class Word {
   public:
    Word() = delete;
    explicit Word(word_type letters);
    Word(std::initializer_list<letter_type> letters);

    //! Parses "abc" style text, 'a' is generator 0. Accepts the report forms
    //! "ab^2a", "(ab)^3" and "a^{10}". Throws on empty input or bad syntax.
    static Word parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] letter_type operator[](std::size_t i) const noexcept {
      return letters_[i];
    }
    [[nodiscard]] word_type const& letters() const noexcept {
      return letters_;
    }
    [[nodiscard]] auto begin() const noexcept {
      return letters_.cbegin();
    }
    [[nodiscard]] auto end() const noexcept {
      return letters_.cend();
    }
    //! One more than the largest letter.
    [[nodiscard]] std::size_t min_generators() const noexcept;

    //! Plain letters, "abba".
    [[nodiscard]] std::string to_string() const;
    //! Run-length form used in reports, "ab^2a".
    [[nodiscard]] std::string to_pretty_string() const;

    friend Word operator*(Word const& u, Word const& v);
    friend bool operator==(Word const&, Word const&) = default;
    friend bool operator<(Word const& u, Word const& v) noexcept {
      return shortlex_less(u.letters_, v.letters_);
    }

   private:
    word_type letters_;
  };

  //! Variable sequence, e.g. the side "x^2y" of an identity. Variables are
  //! 0-based: x=0, y=1, z=2, t=3.
  class Pattern {
   public:
    explicit Pattern(std::vector<letter_type> symbols);

    [[nodiscard]] std::vector<letter_type> const& symbols() const noexcept {
      return symbols_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return symbols_.size();
    }
    //! Sorted distinct variables.
    [[nodiscard]] std::vector<letter_type> variables() const;
    [[nodiscard]] std::string to_string() const;

    friend Pattern operator*(Pattern const& p, Pattern const& q);
    friend bool    operator==(Pattern const&, Pattern const&) = default;

   private:
    std::vector<letter_type> symbols_;
  };

  //! lhs = rhs, both sides over the same set of variables.
  class Identity {
   public:
    Identity(Pattern lhs, Pattern rhs);

    [[nodiscard]] Pattern const& lhs() const noexcept {
      return lhs_;
    }
    [[nodiscard]] Pattern const& rhs() const noexcept {
      return rhs_;
    }
    [[nodiscard]] std::size_t number_of_variables() const noexcept {
      return nr_vars_;
    }
    [[nodiscard]] std::size_t longest_side() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Identity const&, Identity const&) = default;

   private:
    Pattern     lhs_;
    Pattern     rhs_;
    std::size_t nr_vars_;
  };

  //! Partial assignment variable -> nonempty word.
  class Substitution {
   public:
    Substitution() = default;
    Substitution(std::initializer_list<std::pair<letter_type, Word>> init);

    void assign(letter_type var, Word w);
    [[nodiscard]] std::optional<Word> const& operator[](letter_type v) const;
    [[nodiscard]] bool        is_assigned(letter_type v) const noexcept;
    [[nodiscard]] std::size_t extent() const noexcept {
      return image_.size();
    }

    friend bool operator==(Substitution const&, Substitution const&) = default;

   private:
    std::vector<std::optional<Word>> image_;
  };

  //! Concatenation of s(v) over the symbols of p. Throws std::invalid_argument
  //! if some variable of p is unassigned.
  Word substitute(Pattern const& p, Substitution const& s);

  //! All start positions of f as a factor of w, ascending, overlaps included.
  std::vector<std::size_t> occurrences(word_type const& w, word_type const& f);
  std::vector<std::size_t> occurrences(Word const& w, Word const& f);

  //! Letter used for variable v in identity strings (x, y, z, t).
  char variable_name(letter_type v);

  //! Parses identity-side syntax: variables x y z t, powers "x^2", grouped
  //! powers "(xy)^3", and a symbolic exponent n with "x^n", "x^{n+2}".
  //! The value of n replaces the symbol; parsing fails on unbound n.
  Pattern parse_pattern(std::string_view text, std::optional<unsigned> n = {});

  std::string to_string(word_type const& w);
  std::string to_pretty_string(word_type const& w);

}  // namespace planrank

#endif  // PLANRANK_WORD_HPP_
