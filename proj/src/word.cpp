#include "planrank/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace planrank {

  bool shortlex_less(word_type const& u, word_type const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.cbegin(), u.cend(), v.cbegin(), v.cend());
  }

  std::string to_string(word_type const& w) {
    std::string out;
    out.reserve(w.size());
    for (auto x : w) {
      out.push_back(static_cast<char>('a' + x));
    }
    return out;
  }

  std::string to_pretty_string(word_type const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      out.push_back(static_cast<char>('a' + w[i]));
      if (j - i > 1) {
        out += "^" + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(word_type letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("a word must be nonempty");
    }
  }

  Word::Word(std::initializer_list<letter_type> letters)
      : Word(word_type(letters)) {}

  namespace {
    // letters, "^k" / "^{k}" powers, parenthesised groups
    class WordParser {
     public:
      explicit WordParser(std::string_view text) : text_(text) {}

      word_type parse() {
        auto out = sequence();
        if (pos_ != text_.size()) {
          fail("unexpected character");
        }
        return out;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_)
                                    + " in word \"" + std::string(text_) + "\"");
      }

      bool at(char c) const {
        return pos_ < text_.size() && text_[pos_] == c;
      }

      word_type sequence() {
        word_type out;
        while (pos_ < text_.size() && !at(')')) {
          word_type a;
          if (at('(')) {
            ++pos_;
            a = sequence();
            if (!at(')')) {
              fail("missing ')'");
            }
            ++pos_;
          } else if (text_[pos_] >= 'a' && text_[pos_] <= 'z') {
            a.push_back(static_cast<letter_type>(text_[pos_++] - 'a'));
          } else {
            fail("invalid generator '" + std::string(1, text_[pos_]) + "'");
          }
          unsigned k = 1;
          if (at('^')) {
            ++pos_;
            bool const brace = at('{');
            pos_ += brace;
            if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
              fail("expected a number");
            }
            k = 0;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
              k = 10 * k + static_cast<unsigned>(text_[pos_++] - '0');
              if (k > 1'000'000) {
                fail("exponent too large");
              }
            }
            if (brace) {
              if (!at('}')) {
                fail("missing '}'");
              }
              ++pos_;
            }
          }
          for (unsigned i = 0; i < k; ++i) {
            out.insert(out.end(), a.cbegin(), a.cend());
          }
        }
        return out;
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Word Word::parse(std::string_view text) {
    return Word(WordParser(text).parse());
  }

  std::size_t Word::min_generators() const noexcept {
    return static_cast<std::size_t>(
               *std::max_element(letters_.cbegin(), letters_.cend()))
           + 1;
  }

  std::string Word::to_string() const {
    return planrank::to_string(letters_);
  }

  std::string Word::to_pretty_string() const {
    return planrank::to_pretty_string(letters_);
  }

  Word operator*(Word const& u, Word const& v) {
    word_type w(u.letters_);
    w.insert(w.end(), v.letters_.cbegin(), v.letters_.cend());
    return Word(std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern / Identity
  ////////////////////////////////////////////////////////////////////////

  char variable_name(letter_type v) {
    static constexpr char names[] = {'x', 'y', 'z', 't'};
    if (v < 4) {
      return names[v];
    }
    return static_cast<char>('p' + (v - 4));
  }

  Pattern::Pattern(std::vector<letter_type> symbols)
      : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
      throw std::invalid_argument("a pattern must be nonempty");
    }
  }

  std::vector<letter_type> Pattern::variables() const {
    std::vector<letter_type> vars(symbols_);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  std::string Pattern::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size();) {
      std::size_t j = i;
      while (j < symbols_.size() && symbols_[j] == symbols_[i]) {
        ++j;
      }
      out.push_back(variable_name(symbols_[i]));
      if (j - i > 1) {
        out += "^" + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  Pattern operator*(Pattern const& p, Pattern const& q) {
    std::vector<letter_type> s(p.symbols_);
    s.insert(s.end(), q.symbols_.cbegin(), q.symbols_.cend());
    return Pattern(std::move(s));
  }

  Identity::Identity(Pattern lhs, Pattern rhs)
      : lhs_(std::move(lhs)), rhs_(std::move(rhs)), nr_vars_(0) {
    auto lv = lhs_.variables();
    if (lv != rhs_.variables()) {
      throw std::invalid_argument("identity " + lhs_.to_string() + " = "
                                  + rhs_.to_string()
                                  + " has different variables on each side");
    }
    nr_vars_ = static_cast<std::size_t>(lv.back()) + 1;
    if (nr_vars_ != lv.size()) {
      throw std::invalid_argument("identity " + lhs_.to_string() + " = "
                                  + rhs_.to_string()
                                  + " does not use variables 0..k-1");
    }
  }

  std::size_t Identity::longest_side() const noexcept {
    return std::max(lhs_.size(), rhs_.size());
  }

  std::string Identity::to_string() const {
    return lhs_.to_string() + "=" + rhs_.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  Substitution::Substitution(
      std::initializer_list<std::pair<letter_type, Word>> init) {
    for (auto const& [v, w] : init) {
      assign(v, w);
    }
  }

  void Substitution::assign(letter_type var, Word w) {
    if (var >= image_.size()) {
      image_.resize(var + 1);
    }
    image_[var] = std::move(w);
  }

  std::optional<Word> const& Substitution::operator[](letter_type v) const {
    static std::optional<Word> const none;
    return v < image_.size() ? image_[v] : none;
  }

  bool Substitution::is_assigned(letter_type v) const noexcept {
    return v < image_.size() && image_[v].has_value();
  }

  Word substitute(Pattern const& p, Substitution const& s) {
    word_type out;
    for (auto v : p.symbols()) {
      auto const& img = s[v];
      if (!img) {
        throw std::invalid_argument(std::string("variable ") + variable_name(v)
                                    + " is not assigned");
      }
      out.insert(out.end(), img->begin(), img->end());
    }
    return Word(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // occurrences
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> occurrences(word_type const& w, word_type const& f) {
    std::vector<std::size_t> out;
    if (f.empty() || f.size() > w.size()) {
      return out;
    }
    auto it = w.cbegin();
    while (true) {
      it = std::search(it, w.cend(), f.cbegin(), f.cend());
      if (it == w.cend()) {
        break;
      }
      out.push_back(static_cast<std::size_t>(it - w.cbegin()));
      ++it;
    }
    return out;
  }

  std::vector<std::size_t> occurrences(Word const& w, Word const& f) {
    return occurrences(w.letters(), f.letters());
  }

  ////////////////////////////////////////////////////////////////////////
  // parse_pattern
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class PatternParser {
     public:
      PatternParser(std::string_view text, std::optional<unsigned> n)
          : text_(text), n_(n) {}

      std::vector<letter_type> parse() {
        auto out = sequence();
        if (pos_ != text_.size()) {
          fail("unexpected character");
        }
        return out;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_)
                                    + " in \"" + std::string(text_) + "\"");
      }

      bool at(char c) const {
        return pos_ < text_.size() && text_[pos_] == c;
      }

      std::vector<letter_type> sequence() {
        std::vector<letter_type> out;
        while (pos_ < text_.size() && !at(')')) {
          auto a = atom();
          auto k = exponent();
          for (unsigned i = 0; i < k; ++i) {
            out.insert(out.end(), a.cbegin(), a.cend());
          }
        }
        return out;
      }

      std::vector<letter_type> atom() {
        if (at('(')) {
          ++pos_;
          auto inner = sequence();
          if (!at(')')) {
            fail("missing ')'");
          }
          ++pos_;
          if (inner.empty()) {
            fail("empty group");
          }
          return inner;
        }
        switch (pos_ < text_.size() ? text_[pos_] : '\0') {
          case 'x':
            ++pos_;
            return {0};
          case 'y':
            ++pos_;
            return {1};
          case 'z':
            ++pos_;
            return {2};
          case 't':
            ++pos_;
            return {3};
          default:
            fail("expected a variable");
        }
      }

      unsigned number() {
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
          fail("expected a number");
        }
        unsigned k = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
          k = 10 * k + static_cast<unsigned>(text_[pos_] - '0');
          ++pos_;
        }
        return k;
      }

      unsigned term() {
        if (at('n')) {
          ++pos_;
          if (!n_) {
            fail("symbolic exponent n is unbound");
          }
          return *n_;
        }
        return number();
      }

      unsigned exponent() {
        if (!at('^')) {
          return 1;
        }
        ++pos_;
        unsigned k = 0;
        if (at('{')) {
          ++pos_;
          k = term();
          while (at('+')) {
            ++pos_;
            k += term();
          }
          if (!at('}')) {
            fail("missing '}'");
          }
          ++pos_;
        } else {
          k = term();
        }
        if (k == 0) {
          fail("zero exponent");
        }
        return k;
      }

      std::string_view        text_;
      std::optional<unsigned> n_;
      std::size_t             pos_ = 0;
    };
  }  // namespace

  Pattern parse_pattern(std::string_view text, std::optional<unsigned> n) {
    return Pattern(PatternParser(text, n).parse());
  }

}  // namespace planrank
