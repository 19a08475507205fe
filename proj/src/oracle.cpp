#include "planrank/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace planrank {

  namespace {

    using Key = std::string;  // letters as raw chars, for hashing

    Key key_of(word_type const& w) {
      return Key(w.begin(), w.end());
    }

    word_type word_of(Key const& k) {
      return word_type(k.begin(), k.end());
    }

    // A factor of the current word bound to each variable: {offset, length}.
    struct Binding {
      std::size_t offset = 0;
      std::size_t length = 0;
    };

    // Calls f(end, bindings) for each way the pattern matches w from
    // position `start` with nonempty images.
    template <typename F>
    void match(std::vector<letter_type> const& pattern,
               word_type const&                w,
               std::size_t                     start,
               F&&                             f) {
      std::array<Binding, 8> bind{};
      std::array<bool, 8>    bound{};
      std::function<void(std::size_t, std::size_t)> go = [&](std::size_t k, std::size_t pos) {
        if (k == pattern.size()) {
          f(pos, bind);
          return;
        }
        auto const v    = pattern[k];
        auto const left = pattern.size() - k - 1;  // symbols still to place
        if (bound[v]) {
          auto const& b = bind[v];
          if (pos + b.length > w.size()) {
            return;
          }
          if (std::equal(w.begin() + static_cast<long>(b.offset),
                         w.begin() + static_cast<long>(b.offset + b.length),
                         w.begin() + static_cast<long>(pos))) {
            go(k + 1, pos + b.length);
          }
          return;
        }
        if (pos + left >= w.size()) {
          return;
        }
        bound[v] = true;
        for (std::size_t len = 1; pos + len + left <= w.size(); ++len) {
          bind[v] = {pos, len};
          go(k + 1, pos + len);
        }
        bound[v] = false;
      };
      go(0, start);
    }

    // Enumerates single rewrites of w within the cap:
    // f(result, position, identity, forward, bindings).
    template <typename F>
    void for_each_rewrite(word_type const&      w,
                          IdentitySystem const& sys,
                          std::size_t           length_cap,
                          F&&                   f) {
      for (std::size_t i = 0; i < sys.identities.size(); ++i) {
        auto const& id = sys.identities[i];
        for (bool forward : {true, false}) {
          auto const& src = (forward ? id.lhs() : id.rhs()).symbols();
          auto const& dst = (forward ? id.rhs() : id.lhs()).symbols();
          for (std::size_t p = 0; p < w.size(); ++p) {
            match(src, w, p, [&](std::size_t end, auto const& bind) {
              std::size_t len = w.size() - (end - p);
              for (auto v : dst) {
                len += bind[v].length;
              }
              if (len > length_cap) {
                return;
              }
              word_type out(w.begin(), w.begin() + static_cast<long>(p));
              out.reserve(len);
              for (auto v : dst) {
                auto b = w.begin() + static_cast<long>(bind[v].offset);
                out.insert(out.end(), b, b + static_cast<long>(bind[v].length));
              }
              out.insert(out.end(), w.begin() + static_cast<long>(end), w.end());
              f(out, p, i, forward, bind);
            });
          }
        }
      }
    }

    Substitution substitution_of(word_type const&              w,
                                 Identity const&               id,
                                 std::array<Binding, 8> const& bind) {
      Substitution s;
      for (auto v : id.lhs().variables()) {
        auto b = w.begin() + static_cast<long>(bind[v].offset);
        s.assign(v, Word(word_type(b, b + static_cast<long>(bind[v].length))));
      }
      return s;
    }

    // The step turning `from` into `to` with the recorded position, identity
    // and direction; the substitution is recovered by matching again.
    ProofStep recover_step(word_type const&      from,
                           word_type const&      to,
                           std::size_t           position,
                           std::size_t           identity,
                           bool                  forward,
                           IdentitySystem const& sys) {
      std::optional<ProofStep> out;
      auto const& id  = sys.identities[identity];
      auto const& src = (forward ? id.lhs() : id.rhs()).symbols();
      auto const& dst = (forward ? id.rhs() : id.lhs()).symbols();
      match(src, from, position, [&](std::size_t end, auto const& bind) {
        if (out) {
          return;
        }
        word_type r(from.begin(), from.begin() + static_cast<long>(position));
        for (auto v : dst) {
          auto b = from.begin() + static_cast<long>(bind[v].offset);
          r.insert(r.end(), b, b + static_cast<long>(bind[v].length));
        }
        r.insert(r.end(), from.begin() + static_cast<long>(end), from.end());
        if (r == to) {
          out = ProofStep{position, identity, forward, substitution_of(from, id, bind)};
        }
      });
      if (!out) {
        throw std::logic_error("recover_step: recorded step does not reproduce the word");
      }
      return *out;
    }

    std::size_t default_cap(Word const& u, Word const& v, IdentitySystem const& sys) {
      return std::max(u.size(), v.size()) + 2 * sys.longest_side();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::pair<Word, ProofStep>> rewrite_steps(Word const&           w,
                                                        IdentitySystem const& sys,
                                                        std::size_t           length_cap) {
    std::vector<std::pair<Word, ProofStep>> out;
    std::set<word_type>                     seen{w.letters()};
    for_each_rewrite(w.letters(), sys, length_cap,
                     [&](word_type const& r, std::size_t p, std::size_t i, bool fwd,
                         auto const& bind) {
                       if (seen.insert(r).second) {
                         out.emplace_back(
                             Word(r),
                             ProofStep{p, i, fwd,
                                       substitution_of(w.letters(), sys.identities[i], bind)});
                       }
                     });
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    return out;
  }

  std::vector<Word> rewrite_neighbors(Word const&           w,
                                      IdentitySystem const& sys,
                                      std::size_t           length_cap) {
    std::set<word_type> seen;
    for_each_rewrite(w.letters(), sys, length_cap,
                     [&](word_type const& r, auto&&...) { seen.insert(r); });
    seen.erase(w.letters());
    std::vector<Word> out;
    for (auto const& r : seen) {
      out.emplace_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivation search
  ////////////////////////////////////////////////////////////////////////

  std::optional<DerivationProof> find_derivation(Word const&           u,
                                                 Word const&           v,
                                                 IdentitySystem const& sys,
                                                 std::size_t           length_cap,
                                                 std::size_t           node_cap) {
    if (u == v) {
      return DerivationProof{u, v, {}};
    }
    struct Node {
      Key         parent;
      std::size_t position;
      std::size_t identity;
      bool        forward;  // of the step parent -> this word
    };
    std::array<std::unordered_map<Key, Node>, 2> seen;
    std::array<std::deque<Key>, 2>               frontier;
    std::array<Key, 2> const                      roots{key_of(u.letters()), key_of(v.letters())};
    for (int s = 0; s < 2; ++s) {
      seen[s].emplace(roots[s], Node{{}, 0, 0, true});
      frontier[s].push_back(roots[s]);
    }
    std::optional<Key> meet;
    while (!meet && (!frontier[0].empty() || !frontier[1].empty())) {
      // Expand one full layer of the smaller nonempty frontier.
      int s = frontier[0].empty()                                   ? 1
              : frontier[1].empty()                                 ? 0
              : frontier[0].size() <= frontier[1].size() ? 0
                                                                    : 1;
      std::deque<Key> next;
      for (auto const& k : frontier[s]) {
        auto const w = word_of(k);
        for_each_rewrite(w, sys, length_cap,
                         [&](word_type const& r, std::size_t p, std::size_t i, bool fwd,
                             auto const&) {
                           if (meet) {
                             return;
                           }
                           auto rk = key_of(r);
                           if (seen[s].count(rk)) {
                             return;
                           }
                           seen[s].emplace(rk, Node{k, p, i, fwd});
                           if (seen[1 - s].count(rk)) {
                             meet = rk;
                             return;
                           }
                           next.push_back(std::move(rk));
                         });
        if (meet || seen[0].size() + seen[1].size() > node_cap) {
          break;
        }
      }
      if (meet) {
        break;
      }
      if (seen[0].size() + seen[1].size() > node_cap) {
        return std::nullopt;
      }
      frontier[s] = std::move(next);
    }
    if (!meet) {
      return std::nullopt;
    }
    DerivationProof proof{u, v, {}};
    // u -> meet: walk back from meet in the u-tree, then reverse.
    std::vector<ProofStep> head;
    for (Key k = *meet; k != roots[0];) {
      auto const& n = seen[0].at(k);
      head.push_back(recover_step(word_of(n.parent), word_of(k), n.position, n.identity,
                                  n.forward, sys));
      k = n.parent;
    }
    std::reverse(head.begin(), head.end());
    proof.steps = std::move(head);
    // meet -> v: each v-tree step parent -> child, inverted.
    for (Key k = *meet; k != roots[1];) {
      auto const& n    = seen[1].at(k);
      auto        step = recover_step(word_of(n.parent), word_of(k), n.position, n.identity,
                               n.forward, sys);
      step.forward     = !step.forward;
      proof.steps.push_back(std::move(step));
      k = n.parent;
    }
    return proof;
  }

  EqVerdict decide_equal(Word const&           u,
                         Word const&           v,
                         IdentitySystem const& sys,
                         OracleBudget const&   budget) {
    auto cap     = budget.length_cap ? budget.length_cap : default_cap(u, v, sys);
    auto ceiling = budget.length_ceiling ? budget.length_ceiling : 2 * cap;
    if (auto p = find_derivation(u, v, sys, cap, budget.node_cap)) {
      return {std::move(*p)};
    }
    if (auto m = find_counter_model(u, v, sys, budget.model_order_cap)) {
      return {std::move(*m)};
    }
    while (2 * cap <= ceiling) {
      cap *= 2;
      if (auto p = find_derivation(u, v, sys, cap, budget.node_cap)) {
        return {std::move(*p)};
      }
    }
    return {std::monostate{}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Models
  ////////////////////////////////////////////////////////////////////////

  element_type CounterModel::evaluate(Word const& w) const {
    element_type e = assignment.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      e = table[e * order + assignment.at(w[i])];
    }
    return e;
  }

  namespace {

    bool satisfies(std::vector<element_type> const& t, std::size_t k, Identity const& id) {
      auto const               m = id.number_of_variables();
      std::vector<element_type> val(m, 0);
      auto eval = [&](Pattern const& p) {
        element_type e = val[p.symbols()[0]];
        for (std::size_t i = 1; i < p.size(); ++i) {
          e = t[e * k + val[p.symbols()[i]]];
        }
        return e;
      };
      while (true) {
        if (eval(id.lhs()) != eval(id.rhs())) {
          return false;
        }
        std::size_t j = 0;
        while (j < m && ++val[j] == k) {
          val[j++] = 0;
        }
        if (j == m) {
          return true;
        }
      }
    }

    constexpr element_type unset = static_cast<element_type>(-1);

    class ModelSearch {
     public:
      ModelSearch(std::size_t k, Word const& u, Word const& v, IdentitySystem const& sys)
          : k_(k), u_(u), v_(v), sys_(sys), t_(k * k, unset) {
        nr_gens_ = std::max(u.min_generators(), v.min_generators());
        std::vector<letter_type> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
          perms_.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        perms_.erase(perms_.begin());  // identity
        for (auto const& q : perms_) {
          std::vector<letter_type> inv(k);
          for (std::size_t i = 0; i < k; ++i) {
            inv[q[i]] = static_cast<letter_type>(i);
          }
          inverses_.push_back(inv);
        }
      }

      std::optional<CounterModel> run() {
        fill(0);
        return std::move(found_);
      }

      std::vector<std::vector<element_type>> all() {
        collect_ = true;
        fill(0);
        return std::move(collected_);
      }

     private:
      bool associative_so_far() const {
        for (std::size_t x = 0; x < k_; ++x) {
          for (std::size_t y = 0; y < k_; ++y) {
            auto xy = t_[x * k_ + y];
            if (xy == unset) {
              continue;
            }
            for (std::size_t z = 0; z < k_; ++z) {
              auto yz = t_[y * k_ + z];
              if (yz == unset) {
                continue;
              }
              auto l = t_[xy * k_ + z];
              auto r = t_[x * k_ + yz];
              if (l != unset && r != unset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      // False when some relabelling makes the filled prefix lexicographically
      // smaller, so this table is not the least of its class.
      bool least_so_far() const {
        for (std::size_t q = 0; q < perms_.size(); ++q) {
          auto const& p   = perms_[q];
          auto const& inv = inverses_[q];
          for (std::size_t c = 0; c < k_ * k_; ++c) {
            auto i = c / k_, j = c % k_;
            auto mine  = t_[c];
            auto other = t_[inv[i] * k_ + inv[j]];
            if (mine == unset || other == unset) {
              break;
            }
            auto img = static_cast<element_type>(p[other]);
            if (img < mine) {
              return false;
            }
            if (img > mine) {
              break;
            }
          }
        }
        return true;
      }

      void fill(std::size_t c) {
        if (found_) {
          return;
        }
        if (c == k_ * k_) {
          examine();
          return;
        }
        for (element_type e = 0; e < k_ && !found_; ++e) {
          t_[c] = e;
          if (associative_so_far() && least_so_far()) {
            fill(c + 1);
          }
        }
        t_[c] = unset;
      }

      void examine() {
        for (auto const& id : sys_.identities) {
          if (!satisfies(t_, k_, id)) {
            return;
          }
        }
        if (collect_) {
          collected_.push_back(t_);
          return;
        }
        CounterModel m{k_, t_, std::vector<element_type>(nr_gens_, 0)};
        while (true) {
          if (m.evaluate(u_) != m.evaluate(v_)) {
            found_ = std::move(m);
            return;
          }
          std::size_t j = nr_gens_;
          while (j > 0 && ++m.assignment[j - 1] == k_) {
            m.assignment[--j] = 0;
          }
          if (j == 0) {
            return;
          }
        }
      }

      std::size_t                           k_;
      Word const&                           u_;
      Word const&                           v_;
      IdentitySystem const&                 sys_;
      std::size_t                           nr_gens_;
      std::vector<element_type>             t_;
      std::vector<std::vector<letter_type>> perms_, inverses_;
      std::optional<CounterModel>           found_;
      bool                                  collect_ = false;
      std::vector<std::vector<element_type>> collected_;
    };

  }  // namespace

  std::optional<CounterModel> find_counter_model(Word const&           u,
                                                 Word const&           v,
                                                 IdentitySystem const& sys,
                                                 std::size_t           max_order) {
    for (std::size_t k = 1; k <= max_order; ++k) {
      if (auto m = ModelSearch(k, u, v, sys).run()) {
        return m;
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<element_type>> models_of_order(IdentitySystem const& sys,
                                                         std::size_t           order) {
    Word const a{0};
    return ModelSearch(order, a, a, sys).all();
  }

  ////////////////////////////////////////////////////////////////////////
  // Checking
  ////////////////////////////////////////////////////////////////////////

  ReplayResult replay_proof(DerivationProof const& p, IdentitySystem const& sys) {
    using S      = ReplayResult::Status;
    word_type w  = p.start.letters();
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
      auto const& st = p.steps[k];
      auto        at = [&](S s, std::string msg) {
        return ReplayResult{s, "step " + std::to_string(k) + ": " + std::move(msg), k};
      };
      if (st.identity >= sys.identities.size()) {
        return at(S::malformed, "identity index out of range");
      }
      auto const& id = sys.identities[st.identity];
      for (auto var : id.lhs().variables()) {
        if (!st.substitution.is_assigned(var)) {
          return at(S::malformed, std::string("variable ") + variable_name(var) + " unassigned");
        }
      }
      if (st.position > w.size()) {
        return at(S::malformed, "position out of range");
      }
      auto src = substitute(st.forward ? id.lhs() : id.rhs(), st.substitution).letters();
      auto dst = substitute(st.forward ? id.rhs() : id.lhs(), st.substitution).letters();
      if (st.position + src.size() > w.size()
          || !std::equal(src.begin(), src.end(), w.begin() + static_cast<long>(st.position))) {
        return at(S::invalid, "the factor at the position is not the source instance");
      }
      word_type next(w.begin(), w.begin() + static_cast<long>(st.position));
      next.insert(next.end(), dst.begin(), dst.end());
      next.insert(next.end(), w.begin() + static_cast<long>(st.position + src.size()), w.end());
      w = std::move(next);
    }
    if (w != p.end.letters()) {
      return {S::invalid, "the steps end at " + to_pretty_string(w) + ", not at "
                              + p.end.to_pretty_string(),
              std::nullopt};
    }
    return {};
  }

  ReplayResult verify_counter_model(CounterModel const&   m,
                                    Word const&           u,
                                    Word const&           v,
                                    IdentitySystem const& sys) {
    using S      = ReplayResult::Status;
    auto const k = m.order;
    if (k == 0 || m.table.size() != k * k
        || std::any_of(m.table.begin(), m.table.end(), [k](auto e) { return e >= k; })) {
      return {S::malformed, "table is not a total operation on the order", std::nullopt};
    }
    if (m.assignment.size() < std::max(u.min_generators(), v.min_generators())
        || std::any_of(m.assignment.begin(), m.assignment.end(),
                       [k](auto e) { return e >= k; })) {
      return {S::malformed, "assignment does not cover the generators", std::nullopt};
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t z = 0; z < k; ++z) {
          if (m.table[m.table[x * k + y] * k + z] != m.table[x * k + m.table[y * k + z]]) {
            return {S::invalid, "table is not associative", std::nullopt};
          }
        }
      }
    }
    for (auto const& id : sys.identities) {
      if (!satisfies(m.table, k, id)) {
        return {S::invalid, "identity " + id.to_string() + " fails in the model", std::nullopt};
      }
    }
    if (m.evaluate(u) == m.evaluate(v)) {
      return {S::invalid, "the words have the same value", std::nullopt};
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  std::string to_text(DerivationProof const& p, IdentitySystem const& sys) {
    std::ostringstream out;
    out << "PROOF\nstart " << p.start.to_string() << "\nend " << p.end.to_string() << '\n';
    word_type w = p.start.letters();
    for (auto const& st : p.steps) {
      auto const& id = sys.identities.at(st.identity);
      out << "step " << st.position << ' ' << st.identity << (st.forward ? " ->" : " <-");
      for (auto var : id.lhs().variables()) {
        out << ' ' << variable_name(var) << '=' << st.substitution[var]->to_string();
      }
      auto src = substitute(st.forward ? id.lhs() : id.rhs(), st.substitution).letters();
      auto dst = substitute(st.forward ? id.rhs() : id.lhs(), st.substitution).letters();
      word_type next(w.begin(), w.begin() + static_cast<long>(st.position));
      next.insert(next.end(), dst.begin(), dst.end());
      next.insert(next.end(), w.begin() + static_cast<long>(std::min(w.size(), st.position + src.size())),
                  w.end());
      w = std::move(next);
      out << " => " << to_string(w) << '\n';
    }
    return out.str();
  }

  DerivationProof parse_proof(std::string const& text) {
    std::istringstream in(text);
    std::string        line, tag;
    auto               fail = [](std::string const& msg) {
      throw std::invalid_argument("proof parse error: " + msg);
    };
    if (!std::getline(in, line) || line != "PROOF") {
      fail("missing PROOF header");
    }
    std::optional<Word>    start, end;
    std::vector<ProofStep> steps;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      if (!(ls >> tag)) {
        continue;
      }
      if (tag == "start" || tag == "end") {
        std::string w;
        ls >> w;
        (tag == "start" ? start : end) = Word::parse(w);
      } else if (tag == "step") {
        ProofStep   st;
        std::string dir, item;
        if (!(ls >> st.position >> st.identity >> dir) || (dir != "->" && dir != "<-")) {
          fail("bad step line '" + line + "'");
        }
        st.forward = dir == "->";
        while (ls >> item && item != "=>") {
          auto eq = item.find('=');
          if (eq != 1) {
            fail("bad assignment '" + item + "'");
          }
          letter_type var = 0;
          while (var < 4 && variable_name(var) != item[0]) {
            ++var;
          }
          if (var == 4) {
            fail("unknown variable in '" + item + "'");
          }
          st.substitution.assign(var, Word::parse(item.substr(2)));
        }
        steps.push_back(std::move(st));
      } else {
        fail("unknown line '" + tag + "'");
      }
    }
    if (!start || !end) {
      fail("missing start or end");
    }
    return {*start, *end, std::move(steps)};
  }

  std::string to_text(CounterModel const& m) {
    std::ostringstream out;
    out << "MODEL " << m.order << '\n';
    for (std::size_t a = 0; a < m.order; ++a) {
      out << "row";
      for (std::size_t b = 0; b < m.order; ++b) {
        out << ' ' << m.table[a * m.order + b];
      }
      out << '\n';
    }
    out << "assign";
    for (std::size_t x = 0; x < m.assignment.size(); ++x) {
      out << ' ' << static_cast<char>('a' + x) << '=' << m.assignment[x];
    }
    out << '\n';
    return out.str();
  }

  CounterModel parse_model(std::string const& text) {
    std::istringstream in(text);
    std::string        tag, line;
    CounterModel       m;
    auto               fail = [](std::string const& msg) {
      throw std::invalid_argument("model parse error: " + msg);
    };
    if (!(in >> tag >> m.order) || tag != "MODEL" || m.order == 0) {
      fail("missing MODEL header");
    }
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      if (!(ls >> tag)) {
        continue;
      }
      if (tag == "row") {
        element_type e;
        std::size_t  count = 0;
        while (ls >> e) {
          m.table.push_back(e);
          ++count;
        }
        if (count != m.order) {
          fail("row of wrong length");
        }
      } else if (tag == "assign") {
        std::string item;
        while (ls >> item) {
          if (item.size() < 3 || item[1] != '=' || static_cast<std::size_t>(item[0] - 'a') != m.assignment.size()) {
            fail("bad assignment '" + item + "'");
          }
          m.assignment.push_back(static_cast<element_type>(std::stoul(item.substr(2))));
        }
      } else {
        fail("unknown line '" + tag + "'");
      }
    }
    if (m.table.size() != m.order * m.order) {
      fail("wrong number of rows");
    }
    return m;
  }

}  // namespace planrank
