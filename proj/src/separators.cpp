#include "planrank/separators.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>

#include "planrank/detail/identity_eval.hpp"
#include "planrank/oracle.hpp"

namespace planrank {

  namespace {

    struct Table {
      std::vector<element_type> t;
      std::size_t               k;
    };

    Separator table_separator(std::string                  description,
                              std::shared_ptr<Table const> T,
                              std::vector<element_type>    images) {
      return {std::move(description),
              [T, images = std::move(images)](word_type const& w) -> std::uint64_t {
                element_type e = images[w[0]];
                for (std::size_t i = 1; i < w.size(); ++i) {
                  e = T->t[e * T->k + images[w[i]]];
                }
                return e;
              }};
    }

    Separator semigroup_separator(std::string                            description,
                                  std::shared_ptr<FiniteSemigroup const> S) {
      return {std::move(description),
              [S](word_type const& w) -> std::uint64_t { return S->element_of(w); }};
    }

    std::string assignment_string(std::vector<element_type> const& a) {
      std::string s;
      for (std::size_t x = 0; x < a.size(); ++x) {
        s += (x ? " " : "") + std::string(1, char('a' + x)) + "=" + std::to_string(a[x]);
      }
      return s;
    }

    // Every assignment of the generators in a table of order k, lexicographic.
    std::vector<std::vector<element_type>> assignments(std::size_t k, std::size_t n_gens) {
      std::vector<std::vector<element_type>> out;
      std::vector<element_type>              a(n_gens, 0);
      while (true) {
        out.push_back(a);
        std::size_t i = n_gens;
        while (i > 0 && a[i - 1] + 1 == k) {
          a[--i] = 0;
        }
        if (i == 0) {
          return out;
        }
        ++a[i - 1];
      }
    }

    std::optional<unsigned> exponent_of(Instance const& inst) {
      auto const kind = inst.family >= 1 && inst.family <= number_of_families
                            ? parameter_kind(inst.family)
                            : ParameterKind::none;
      if (kind == ParameterKind::exponent || kind == ParameterKind::exponent_and_permutation) {
        return inst.n;
      }
      return std::nullopt;
    }

    bool is_prime(unsigned p) {
      if (p < 2) {
        return false;
      }
      for (unsigned q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
          return false;
        }
      }
      return true;
    }

    EnumerationCaps helper_caps(std::size_t max_elements) {
      EnumerationCaps c;
      c.max_elements    = max_elements;
      c.max_word_length = 200;
      return c;
    }

    // The group part of a Rees matrix semigroup M[G; {0,1}, {0,1}; P] with
    // P = (e e; e q), and where each generator sits.
    struct ReesData {
      std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
      std::vector<std::uint64_t>                                 gens;
      std::uint64_t                                              e;
      std::uint64_t                                              q;
    };

    // (i, g, l)(j, h, m) = (i, g p_{lj} h, m). Placement k puts generator x
    // at row/column (x mod 2, x mod 2), (0, x mod 2), (x mod 2, 1 - x mod 2)
    // or (x mod 2, 0).
    Separator rees_separator(std::string description, ReesData const& d, unsigned placement) {
      auto place = [placement](letter_type x) -> std::pair<unsigned, unsigned> {
        unsigned const r = x % 2;
        switch (placement) {
          case 0: return {r, r};
          case 1: return {0, r};
          case 2: return {r, 1 - r};
          default: return {r, 0};
        }
      };
      return {std::move(description), [d, place](word_type const& w) -> std::uint64_t {
                auto [i, l]     = place(w[0]);
                std::uint64_t g = d.gens[w[0]];
                for (std::size_t k = 1; k < w.size(); ++k) {
                  auto [j, m] = place(w[k]);
                  if (l == 1 && j == 1) {
                    g = d.mul(g, d.q);
                  }
                  g = d.mul(g, d.gens[w[k]]);
                  l = m;
                }
                return (g << 2) | (i << 1) | l;
              }};
    }

    // Upper unitriangular k x k matrices over Z/p, packed as base-p digits
    // of the entries above the diagonal.
    struct UnitriangularGroup {
      unsigned k;
      unsigned p;

      std::vector<unsigned> unpack(std::uint64_t c) const {
        std::vector<unsigned> m(k * k, 0);
        for (unsigned i = k; i-- > 0;) {
          m[i * k + i] = 1;
        }
        for (unsigned i = k; i-- > 0;) {
          for (unsigned j = k; j-- > i + 1;) {
            m[i * k + j] = c % p;
            c /= p;
          }
        }
        return m;
      }

      std::uint64_t pack(std::vector<unsigned> const& m) const {
        std::uint64_t c = 0;
        for (unsigned i = 0; i < k; ++i) {
          for (unsigned j = i + 1; j < k; ++j) {
            c = c * p + m[i * k + j];
          }
        }
        return c;
      }

      std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        auto const A = unpack(a);
        auto const B = unpack(b);
        std::vector<unsigned> C(k * k, 0);
        for (unsigned i = 0; i < k; ++i) {
          for (unsigned j = i; j < k; ++j) {
            unsigned s = 0;
            for (unsigned l = i; l <= j; ++l) {
              s += A[i * k + l] * B[l * k + j];
            }
            C[i * k + j] = s % p;
          }
        }
        return pack(C);
      }
    };

    // Last run (first = false) or first run (first = true) of a word: its
    // letter, its length mod d, and whether it is the whole word.
    std::shared_ptr<Table> run_table(std::size_t n_gens, unsigned d, bool first) {
      auto const K   = n_gens * d * 2;
      auto       enc = [d](std::size_t l, std::size_t k, std::size_t s) {
        return static_cast<element_type>((l * d + k) * 2 + s);
      };
      auto T = std::make_shared<Table>(Table{std::vector<element_type>(K * K), K});
      for (std::size_t x = 0; x < K; ++x) {
        for (std::size_t y = 0; y < K; ++y) {
          std::size_t const l1 = x / 2 / d, k1 = x / 2 % d, s1 = x % 2;
          std::size_t const l2 = y / 2 / d, k2 = y / 2 % d, s2 = y % 2;
          element_type&     r  = T->t[x * K + y];
          if (!first) {
            r = s2 == 1 && l1 == l2 ? enc(l1, (k1 + k2) % d, s1) : enc(l2, k2, 0);
          } else {
            r = s1 == 1 && l1 == l2 ? enc(l1, (k1 + k2) % d, s2) : enc(l1, k1, 0);
          }
        }
      }
      return T;
    }

    IdentitySystem system_of(std::vector<Identity> ids) {
      IdentitySystem s;
      s.identities = std::move(ids);
      return s;
    }

    Pattern power(letter_type x, unsigned k) {
      return Pattern(std::vector<letter_type>(k, x));
    }

  }  // namespace

  std::optional<bool> satisfies(std::vector<element_type> const& table,
                                std::size_t                      order,
                                IdentitySystem const&            sys,
                                std::uint64_t                    budget) {
    if (table.size() != order * order) {
      return false;
    }
    for (auto e : table) {
      if (e >= order) {
        return false;
      }
    }
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        auto const ab = table[a * order + b];
        for (std::size_t c = 0; c < order; ++c) {
          if (table[ab * order + c] != table[a * order + table[b * order + c]]) {
            return false;
          }
        }
      }
    }
    std::vector<detail::elem_type> domain(order);
    for (std::size_t e = 0; e < order; ++e) {
      domain[e] = static_cast<detail::elem_type>(e);
    }
    std::uint64_t steps = 0;
    bool          out   = false;
    auto mul = [&](detail::elem_type a, detail::elem_type b) {
      if (++steps > budget) {
        out = true;
        return detail::undefined_elem;
      }
      return table[a * order + b];
    };
    for (auto const& id : sys.identities) {
      detail::IdentityEvaluator ev(id);
      bool const ok = ev.run(domain, order, mul, [&](detail::elem_type l, detail::elem_type r) {
        return !out && l == r;
      });
      if (out) {
        return std::nullopt;
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  bool derivable(IdentitySystem const& from, IdentitySystem const& target) {
    for (auto const& id : target.identities) {
      Word const u(id.lhs().symbols());
      Word const v(id.rhs().symbols());
      auto const cap   = std::max(u.size(), v.size()) + 2 * from.longest_side();
      auto const proof = find_derivation(u, v, from, cap, 200'000);
      if (!proof || !replay_proof(*proof, from)) {
        return false;
      }
    }
    return true;
  }

  IdentitySystem clifford_system(unsigned d) {
    return system_of({Identity(power(0, d + 1), power(0, 1)),
                      Identity(power(0, d) * power(1, 1), power(1, 1) * power(0, d))});
  }

  IdentitySystem completely_regular_system(unsigned d) {
    return system_of({Identity(power(0, d + 1), power(0, 1))});
  }

  std::vector<Separator> separators(IdentitySystem const& sys, std::size_t n_gens) {
    std::vector<Separator> out;
    if (n_gens == 0) {
      return out;
    }

    // Small models, each under every assignment of the generators.
    constexpr std::size_t max_model_separators = 4096;
    for (std::size_t order = 2; order <= 4; ++order) {
      auto const models = models_of_order(sys, order);
      for (std::size_t i = 0; i < models.size(); ++i) {
        auto T = std::make_shared<Table const>(Table{models[i], order});
        for (auto const& a : assignments(order, n_gens)) {
          if (out.size() >= max_model_separators) {
            break;
          }
          out.push_back(table_separator("model of order " + std::to_string(order) + " #"
                                            + std::to_string(i) + ", " + assignment_string(a),
                                        T, a));
        }
      }
    }

    auto const d = exponent_of(sys.instance);
    if (!d) {
      return out;
    }

    // Relatively free semigroups of smaller members of the family.
    for (unsigned m = 1; m < *d; ++m) {
      Instance smaller = sys.instance;
      smaller.n        = m;
      auto       o     = enumerate(instantiate(smaller), n_gens, helper_caps(2000));
      if (!o.converged() || o.semigroup->size() > 512) {
        continue;
      }
      auto S = std::make_shared<FiniteSemigroup const>(std::move(*o.semigroup));
      if (satisfies(S->multiplication_table(), S->size(), sys) == true) {
        out.push_back(semigroup_separator("F_" + std::to_string(n_gens) + " of "
                                              + smaller.label(),
                                          S));
      }
    }

    // Semigroups recording the first or the last run.
    for (bool first : {false, true}) {
      auto T = run_table(n_gens, *d, first);
      if (satisfies(T->t, T->k, sys) == true) {
        std::vector<element_type> a;
        for (std::size_t x = 0; x < n_gens; ++x) {
          a.push_back(static_cast<element_type>((x * *d + 1 % *d) * 2 + 1));
        }
        out.push_back(table_separator(std::string(first ? "first" : "last") + " run mod "
                                          + std::to_string(*d),
                                      T, a));
      }
    }

    bool const clifford = derivable(clifford_system(*d), sys);
    bool const rees     = derivable(completely_regular_system(*d), sys);
    if (!clifford && !rees) {
      return out;
    }

    // Relatively free Clifford semigroups of exponent d, and Rees matrix
    // semigroups over their maximal subgroup at e = (x_1 ... x_k)^d. That
    // subgroup has exponent dividing d because the semigroup satisfies
    // x^{d+1} = x, and so every M[G; 2, 2; P] over it does:
    // (i, g, l)^{d+1} = (i, g (p g)^d, l) with p g in G.
    for (std::size_t extra : {0, 1}) {
      auto o = enumerate(clifford_system(*d), n_gens + extra, helper_caps(50000));
      if (!o.converged()) {
        continue;
      }
      auto S = std::make_shared<FiniteSemigroup const>(std::move(*o.semigroup));
      if (extra == 0 && clifford) {
        out.push_back(semigroup_separator("free Clifford semigroup of exponent "
                                              + std::to_string(*d),
                                          S));
      }
      if (!rees || n_gens < 2) {
        continue;
      }
      word_type ew;
      for (unsigned i = 0; i < *d; ++i) {
        for (std::size_t x = 0; x < n_gens + extra; ++x) {
          ew.push_back(static_cast<letter_type>(x));
        }
      }
      auto const e = S->element_of(ew);
      ReesData   data;
      data.mul = [S](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        return S->product(static_cast<element_type>(a), static_cast<element_type>(b));
      };
      data.e = e;
      for (std::size_t x = 0; x < n_gens; ++x) {
        data.gens.push_back(S->product(S->element_of(word_type{static_cast<letter_type>(x)}), e));
      }
      std::vector<word_type> qs{{0, 0, 1}, {0, 1, 1}, {0, 1, 0, 0, 1}};
      if (extra) {
        qs = {{static_cast<letter_type>(n_gens)}};
      }
      for (auto const& qw : qs) {
        data.q = S->product(S->element_of(qw), e);
        for (unsigned p = 0; p < 4; ++p) {
          out.push_back(rees_separator("Rees matrix over the subgroup of the free Clifford "
                                       "semigroup of exponent "
                                           + std::to_string(*d) + " on "
                                           + std::to_string(n_gens + extra) + " generators, q = "
                                           + to_pretty_string(qw) + "e, placement "
                                           + std::to_string(p),
                                       data, p));
        }
      }
    }

    // Unitriangular groups UT(k, p), p = d prime, k <= p: (1 + N)^p = 1 + N^p
    // = 1, so they have exponent p.
    if (is_prime(*d)) {
      UnitriangularGroup const G{std::min(*d, 5u), *d};
      std::mt19937             rng(7);
      auto random_element = [&] {
        std::vector<unsigned> m(G.k * G.k, 0);
        for (unsigned i = 0; i < G.k; ++i) {
          m[i * G.k + i] = 1;
          for (unsigned j = i + 1; j < G.k; ++j) {
            m[i * G.k + j] = rng() % G.p;
          }
        }
        return G.pack(m);
      };
      for (int trial = 0; trial < 3; ++trial) {
        ReesData data;
        data.mul = [G](std::uint64_t a, std::uint64_t b) { return G.mul(a, b); };
        for (std::size_t x = 0; x < n_gens; ++x) {
          data.gens.push_back(random_element());
        }
        data.q = random_element();
        data.e = G.pack(G.unpack(0));
        std::string const name = "UT(" + std::to_string(G.k) + ", " + std::to_string(G.p)
                                 + ") #" + std::to_string(trial);
        if (clifford) {
          out.push_back({name, [data](word_type const& w) -> std::uint64_t {
                           std::uint64_t g = data.gens[w[0]];
                           for (std::size_t i = 1; i < w.size(); ++i) {
                             g = data.mul(g, data.gens[w[i]]);
                           }
                           return g;
                         }});
        }
        if (rees && n_gens >= 2) {
          for (unsigned p = 0; p < 4; ++p) {
            out.push_back(rees_separator("Rees matrix over " + name + ", placement "
                                             + std::to_string(p),
                                         data, p));
          }
        }
      }
    }
    return out;
  }

  std::vector<std::uint64_t> signature(std::vector<Separator> const& seps,
                                       word_type const&              w) {
    std::vector<std::uint64_t> s;
    s.reserve(seps.size());
    for (auto const& f : seps) {
      s.push_back(f.image(w));
    }
    return s;
  }

  std::optional<SeparatedWitness> separated_witness(EnumerationOutcome const&     partial,
                                                    std::size_t                   n_gens,
                                                    std::vector<Separator> const& seps,
                                                    std::size_t                   ball) {
    auto const& reps = partial.partial_reps;
    auto const  N    = std::min(reps.size(), ball);
    std::map<std::vector<std::uint64_t>, std::size_t> first;
    std::vector<std::size_t>                          vertex(N, SIZE_MAX);
    std::vector<std::size_t>                          kept;
    for (std::size_t i = 0; i < N; ++i) {
      if (first.emplace(signature(seps, reps[i]), kept.size()).second) {
        vertex[i] = kept.size();
        kept.push_back(i);
      }
    }
    SeparatedWitness sw{SimpleGraph(kept.size()), {}, {}, {}};
    for (std::size_t v = 0; v < kept.size(); ++v) {
      sw.words.push_back(reps[kept[v]]);
      sw.graph.names.push_back(to_string(reps[kept[v]]));
      for (std::size_t x = 0; x < n_gens; ++x) {
        auto const t = partial.partial_right[kept[v] * n_gens + x];
        if (t != EnumerationOutcome::unknown && t < N && vertex[t] != SIZE_MAX) {
          sw.graph.add_edge(static_cast<vertex_type>(v), static_cast<vertex_type>(vertex[t]));
        }
      }
    }
    if (is_planar(sw.graph)) {
      return std::nullopt;
    }
    sw.witness = kuratowski_witness(sw.graph);
    for (auto const& f : seps) {
      sw.separators.push_back(f.description);
    }
    return sw;
  }

  CertificateCheck verify_separated(SeparatedWitness const&       sw,
                                    std::vector<Separator> const& seps) {
    auto check = verify_witness(sw.graph, sw.witness);
    if (!check) {
      return check;
    }
    if (sw.words.size() != sw.graph.number_of_vertices()) {
      return {CertificateCheck::Status::malformed, "one word per vertex expected", 0};
    }
    std::set<vertex_type> used;
    for (auto const& p : sw.witness.paths) {
      used.insert(p.begin(), p.end());
    }
    std::map<std::vector<std::uint64_t>, vertex_type> seen;
    for (auto v : used) {
      auto [it, fresh] = seen.emplace(signature(seps, sw.words[v]), v);
      if (!fresh) {
        return {CertificateCheck::Status::invalid,
                "vertices " + to_pretty_string(sw.words[it->second]) + " and "
                    + to_pretty_string(sw.words[v]) + " are not separated",
                0};
      }
    }
    return check;
  }

}  // namespace planrank
