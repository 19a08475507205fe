#include "planrank/rank.hpp"

#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace planrank {

  namespace {

    // Largest vertex degree and connectivity: SCay(F_1) is a path, possibly
    // closed into a cycle at its far end, so it is connected, has at most
    // as many edges as vertices and at most one vertex of degree 3.
    bool is_monogenic_shape(SimpleGraph const& g) {
      auto const n = g.number_of_vertices();
      if (n == 0 || g.number_of_edges() > n) {
        return false;
      }
      std::size_t deg3 = 0;
      for (vertex_type v = 0; v < n; ++v) {
        if (g.degree(v) > 3) {
          return false;
        }
        deg3 += g.degree(v) == 3;
      }
      std::vector<bool>        seen(n, false);
      std::vector<vertex_type> stack{0};
      seen[0]           = true;
      std::size_t count = 1;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbours(v)) {
          if (!seen[w]) {
            seen[w] = true;
            ++count;
            stack.push_back(w);
          }
        }
      }
      return deg3 <= 1 && count == n;
    }

    std::size_t witness_vertices(KuratowskiWitness const& w) {
      std::set<vertex_type> vs;
      for (auto const& p : w.paths) {
        vs.insert(p.begin(), p.end());
      }
      return vs.size();
    }

    void decide_full(FiniteSemigroup const& S, StepRecord& rec) {
      auto const g    = simplify(cayley_digraph(S));
      auto const cert = decide_planar(g);
      auto const chk  = verify_certificate(g, cert);
      rec.size                 = S.size();
      rec.edges                = g.number_of_edges();
      rec.planar               = cert.is_planar();
      rec.evidence             = Evidence::full_graph;
      rec.certificate_verified = static_cast<bool>(chk);
      rec.faces                = chk.faces;
      rec.certificate_text     = to_text(g, cert);
      rec.certificate          = cert;
      if (!chk) {
        rec.note = "certificate rejected: " + chk.detail;
      }
      if (S.number_of_generators() == 1 && !is_monogenic_shape(g)) {
        rec.note += (rec.note.empty() ? "" : "; ")
                    + std::string("SCay(F_1) is not a path closing into a cycle");
      }
    }

    StepRecord step(IdentitySystem const&           sys,
                    std::size_t                     n_gens,
                    RankOptions const&              opts,
                    std::optional<FiniteSemigroup>& keep) {
      auto const t0 = std::chrono::steady_clock::now();
      StepRecord rec;
      rec.n_gens = n_gens;
      auto out   = enumerate(sys, n_gens, opts.caps);
      rec.status = out.status;
      if (out.converged()) {
        decide_full(*out.semigroup, rec);
        keep = std::move(out.semigroup);
      } else {
        keep.reset();
        rec.size = out.partial_reps.size();
        rec.note = out.reason;
        if (opts.partial_witnesses) {
          auto const seps = separators(sys, n_gens);
          for (auto const& caps : opts.witness_caps) {
            auto part = enumerate(sys, n_gens, caps);
            if (part.converged()) {
              // The helper run finished where the main one did not.
              rec.status = part.status;
              rec.note   = "converged under witness caps; main run: " + out.reason;
              decide_full(*part.semigroup, rec);
              keep = std::move(part.semigroup);
              break;
            }
            auto sw = separated_witness(part, n_gens, seps, opts.witness_ball);
            if (!sw) {
              continue;
            }
            auto const chk           = verify_separated(*sw, seps);
            PlanarityCertificate cert{sw->witness};
            rec.planar               = false;
            rec.evidence             = Evidence::separated_partial;
            rec.edges                = sw->graph.number_of_edges();
            rec.certificate_verified = static_cast<bool>(chk);
            rec.certificate_text     = to_text(sw->graph, cert);
            rec.certificate          = std::move(cert);
            rec.note += "; witness among " + std::to_string(sw->graph.number_of_vertices())
                        + " separated classes, " + std::to_string(seps.size())
                        + " separators";
            if (!chk) {
              rec.note += "; certificate rejected: " + chk.detail;
            }
            rec.separated = std::move(sw);
            break;
          }
        }
      }
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return rec;
    }

    // SCay(F_n) and the restriction of SCay(F_{n+1}) to the first n
    // generators agree through the monotone embedding.
    std::optional<std::string> restriction_mismatch(FiniteSemigroup const& small,
                                                    FiniteSemigroup const& big) {
      auto const emb = monotone_embedding(small, big);
      if (!emb) {
        return "no monotone embedding of F_" + std::to_string(small.number_of_generators())
               + " into F_" + std::to_string(big.number_of_generators());
      }
      std::vector<vertex_type> kept;
      auto const r = induced_restriction(cayley_digraph(big), small.number_of_generators(), &kept);
      auto const g = simplify(cayley_digraph(small));
      if (r.number_of_vertices() != g.number_of_vertices()
          || r.number_of_edges() != g.number_of_edges()) {
        return "restriction of SCay(F_" + std::to_string(big.number_of_generators())
               + ") differs in size from SCay(F_" + std::to_string(small.number_of_generators())
               + ")";
      }
      std::vector<vertex_type> index(big.size(), static_cast<vertex_type>(-1));
      for (std::size_t i = 0; i < kept.size(); ++i) {
        index[kept[i]] = static_cast<vertex_type>(i);
      }
      for (auto [u, v] : g.edges()) {
        auto const a = index[(*emb)[u]];
        auto const b = index[(*emb)[v]];
        if (a == static_cast<vertex_type>(-1) || b == static_cast<vertex_type>(-1)
            || !r.has_edge(a, b)) {
          return "edge " + g.name(u) + " - " + g.name(v) + " missing from the restriction";
        }
      }
      return std::nullopt;
    }

    // Families with an exponent whose claim covers every exponent from a
    // bound on, and that bound.
    std::optional<unsigned> spot_check_bound(unsigned family) {
      switch (family) {
        case 1: return 2;
        case 2: return 3;
        case 3: return 2;
        case 4: return 2;
        default: return std::nullopt;
      }
    }

    std::string computed_string(RankVerdict const& v) {
      if (v.rank) {
        return std::to_string(*v.rank);
      }
      if (v.lower_bound) {
        return ">=" + std::to_string(*v.lower_bound);
      }
      return "INDETERMINATE";
    }

  }  // namespace

  std::string to_string(Evidence e) {
    switch (e) {
      case Evidence::full_graph: return "full graph";
      case Evidence::separated_partial: return "separated partial";
      default: return "none";
    }
  }

  std::vector<EnumerationCaps> default_witness_caps() {
    std::vector<EnumerationCaps> out;
    for (std::size_t s : {3, 4, 2}) {
      EnumerationCaps c;
      c.max_elements     = 20'000;
      c.max_word_length  = 200;
      c.max_subst_length = s;
      c.strategy         = EnumerationCaps::Strategy::hlt;
      out.push_back(c);
    }
    return out;
  }

  StepRecord planarity_step(IdentitySystem const& sys,
                            std::size_t           n_gens,
                            RankOptions const&    opts) {
    std::optional<FiniteSemigroup> keep;
    return step(sys, n_gens, opts, keep);
  }

  RankVerdict planarity_rank(Instance const& inst, RankOptions const& opts) {
    if (opts.n_max < 2) {
      throw std::invalid_argument("n_max must be at least 2");
    }
    RankVerdict v;
    v.instance = inst;
    v.expected = expected_rank(inst);
    if (auto b = spot_check_bound(inst.family); b && inst.n && *inst.n >= *b) {
      v.spot_check = true;
    }
    auto const                     sys = instantiate(inst);
    std::optional<FiniteSemigroup> previous;
    bool                           decided_all = true;
    for (std::size_t n = 1; n <= opts.n_max; ++n) {
      std::optional<FiniteSemigroup> current;
      auto rec = step(sys, n, opts, current);
      if (current && opts.on_converged) {
        opts.on_converged(inst, *current, rec);
      }
      if (rec.certificate && !rec.certificate_verified) {
        v.anomalies.push_back("n=" + std::to_string(n) + ": " + rec.note);
      }
      if (n == 1 && rec.note.find("not a path") != std::string::npos) {
        v.anomalies.push_back("n=1: SCay(F_1) is not a path closing into a cycle");
      }
      if (opts.check_restrictions && previous && current) {
        if (auto bad = restriction_mismatch(*previous, *current)) {
          v.anomalies.push_back("n=" + std::to_string(n) + ": " + *bad);
        }
      }
      previous = std::move(current);
      auto const planar = rec.planar;
      v.steps.push_back(std::move(rec));
      if (!planar || !v.steps.back().certificate_verified) {
        decided_all = false;
        break;
      }
      if (!*planar) {
        v.rank = static_cast<unsigned>(n - 1);
        break;
      }
    }
    if (decided_all && !v.rank) {
      v.lower_bound = static_cast<unsigned>(opts.n_max);
    }
    if (v.rank && *v.rank == 0) {
      v.anomalies.push_back("SCay(F_1) is nonplanar");
    }
    if (v.rank && *v.rank > 3) {
      v.anomalies.push_back("rank above 3");
    }
    v.match = v.rank && *v.rank == v.expected;
    return v;
  }

  TableReport reproduce_table(std::vector<Instance> const&                   instances,
                              RankOptions const&                             opts,
                              std::function<void(RankVerdict const&)> const& progress) {
    TableReport r;
    for (auto const& inst : instances) {
      auto v = planarity_rank(inst, opts);
      if (v.indeterminate()) {
        ++r.indeterminate;
      } else if (v.match) {
        ++r.matches;
      } else {
        ++r.mismatches;
      }
      if (progress) {
        progress(v);
      }
      r.verdicts.push_back(std::move(v));
    }
    return r;
  }

  char const* const spot_check_statement
      = "Families m1-m4 claim their rank for every exponent from a bound on "
        "(m1, m3, m4: n >= 2; m2: n >= 3). Only the exponents listed are "
        "computed; rows marked as spot checks are representatives of those "
        "claims, not proofs of them.";

  std::string to_json(TableReport const& r) {
    using nlohmann::json;
    json rows = json::array();
    for (auto const& v : r.verdicts) {
      json steps = json::array();
      for (auto const& s : v.steps) {
        json js{{"n", s.n_gens},
                {"status", s.status == EnumerationOutcome::Status::converged ? "CONVERGED"
                                                                             : "INDETERMINATE"},
                {"size", s.size},
                {"edges", s.edges},
                {"planar", s.planar ? json(*s.planar) : json(nullptr)},
                {"evidence", to_string(s.evidence)},
                {"certificate_verified", s.certificate_verified},
                {"note", s.note},
                {"seconds", s.seconds}};
        if (s.certificate && s.certificate->is_planar()) {
          js["faces"] = s.faces;
        }
        if (s.certificate && !s.certificate->is_planar()) {
          auto const& w = s.certificate->witness();
          js["witness"] = {{"kind", w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33"},
                           {"vertices", witness_vertices(w)},
                           {"certificate", s.certificate_text}};
        }
        steps.push_back(std::move(js));
      }
      json row{{"instance", v.instance.label()},
               {"family", v.instance.family},
               {"n", v.instance.n ? json(*v.instance.n) : json(nullptr)},
               {"pi", v.instance.pi ? json(v.instance.pi->to_string()) : json(nullptr)},
               {"expected", v.expected},
               {"computed", v.rank ? json(*v.rank) : json(nullptr)},
               {"lower_bound", v.lower_bound ? json(*v.lower_bound) : json(nullptr)},
               {"indeterminate", v.indeterminate()},
               {"match", v.match},
               {"spot_check", v.spot_check},
               {"anomalies", v.anomalies},
               {"steps", std::move(steps)}};
      rows.push_back(std::move(row));
    }
    json out{{"instances", std::move(rows)},
             {"summary",
              {{"instances", r.verdicts.size()},
               {"matches", r.matches},
               {"mismatches", r.mismatches},
               {"indeterminate", r.indeterminate},
               {"all_match", r.all_match()}}},
             {"spot_check_statement", spot_check_statement}};
    return out.dump(2) + "\n";
  }

  std::string to_text_table(TableReport const& r) {
    std::ostringstream os;
    os << std::left << std::setw(16) << "instance" << std::setw(9) << "expected"
       << std::setw(15) << "computed" << std::setw(7) << "match"
       << "|F_n| (n = 1, 2, ...)\n";
    bool partial = false;
    for (auto const& v : r.verdicts) {
      std::string sizes;
      for (auto const& s : v.steps) {
        if (!sizes.empty()) {
          sizes += " ";
        }
        if (s.status == EnumerationOutcome::Status::converged) {
          sizes += std::to_string(s.size);
        } else {
          sizes += "?";
        }
        if (s.planar) {
          sizes += *s.planar ? "" : "(N";
          if (!*s.planar) {
            sizes += s.evidence == Evidence::separated_partial ? "*)" : ")";
          }
        }
        partial = partial || s.evidence == Evidence::separated_partial;
      }
      std::string label = v.instance.label() + (v.spot_check ? " s" : "");
      os << std::setw(16) << label << std::setw(9) << v.expected << std::setw(15)
         << computed_string(v) << std::setw(7) << (v.match ? "yes" : "NO") << sizes << "\n";
      for (auto const& a : v.anomalies) {
        os << "    anomaly: " << a << "\n";
      }
    }
    os << "\n"
       << r.verdicts.size() << " instances: " << r.matches << " match, " << r.mismatches
       << " mismatch, " << r.indeterminate << " indeterminate\n"
       << "(N) nonplanar, from the whole simplified Cayley graph.\n";
    if (partial) {
      os << "(N*) nonplanar, from a Kuratowski subdivision among classes of a partial "
            "enumeration told apart by finite semigroups of the variety.\n";
    }
    os << "s: spot check. " << spot_check_statement << "\n";
    return os.str();
  }

}  // namespace planrank
