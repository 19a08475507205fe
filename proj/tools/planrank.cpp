// planrank: command-line access to enumeration, word problems, Cayley graphs,
// planarity and the rank table.
//
// Exit codes: 0 success / match / equal / planar, 1 negative result,
// 2 undecided or indeterminate, 64 usage error, 70 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planrank/catalog.hpp"
#include "planrank/cayley.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/oracle.hpp"
#include "planrank/planarity.hpp"
#include "planrank/rank.hpp"

using namespace planrank;

namespace {

  constexpr int exit_ok        = 0;
  constexpr int exit_negative  = 1;
  constexpr int exit_undecided = 2;
  constexpr int exit_usage     = 64;
  constexpr int exit_internal  = 70;

  struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct InstanceArgs {
    std::string family;
    unsigned    n = 0;
    std::string perm;

    void add_to(CLI::App* app) {
      app->add_option("--family", family, "family, m1 ... m47")->required();
      app->add_option("--n", n, "exponent parameter");
      app->add_option("--perm", perm, "permutation in cycle notation, e.g. \"(123)\"");
    }

    Instance instance() const {
      std::string f = family;
      if (!f.empty() && f[0] == 'm') {
        f.erase(0, 1);
      }
      Instance inst;
      try {
        std::size_t used = 0;
        inst.family      = static_cast<unsigned>(std::stoul(f, &used));
        if (used != f.size()) {
          throw std::invalid_argument("trailing characters");
        }
      } catch (std::exception const&) {
        throw usage_error("bad family '" + family + "'");
      }
      if (n != 0) {
        inst.n = n;
      }
      try {
        if (!perm.empty()) {
          inst.pi = Permutation4::parse(perm);
        }
        (void) instantiate(inst);
      } catch (std::exception const& e) {
        throw usage_error(e.what());
      }
      return inst;
    }
  };

  struct CapsArgs {
    EnumerationCaps caps = default_caps();

    void add_to(CLI::App* app) {
      app->add_option("--max-elements", caps.max_elements, "element cap");
      app->add_option("--max-word-length", caps.max_word_length, "word length cap");
      app->add_option("--max-subst-length", caps.max_subst_length,
                      "longest substitution word");
    }
  };

  void write_or_print(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) {
      throw usage_error("cannot write " + path);
    }
    f << text;
  }

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream f(path);
    if (!f) {
      throw usage_error("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(f), {}};
  }

  Word parse_word(std::string const& text) {
    try {
      auto w = Word::parse(text);
      if (w.min_generators() > 26) {
        throw usage_error("more than 26 generators");
      }
      return w;
    } catch (std::invalid_argument const& e) {
      throw usage_error("bad word '" + text + "': " + e.what());
    }
  }

  std::vector<unsigned> parse_list(std::string const& text) {
    std::vector<unsigned> out;
    std::stringstream     ss(text);
    std::string           item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(static_cast<unsigned>(std::stoul(item)));
      } catch (std::exception const&) {
        throw usage_error("bad list '" + text + "'");
      }
    }
    return out;
  }

  std::vector<Instance> parse_scope(std::string const& scope, std::vector<unsigned> const& ns) {
    if (scope == "all") {
      std::vector<unsigned> all;
      for (unsigned f = 1; f <= number_of_families; ++f) {
        all.push_back(f);
      }
      return enumerate_instances(all, ns);
    }
    std::vector<Instance> out;
    std::stringstream     ss(scope);
    std::string           item;
    while (std::getline(ss, item, ',')) {
      try {
        if (item.find('_') != std::string::npos) {
          out.push_back(parse_instance_label(item));
          continue;
        }
        auto f = item[0] == 'm' ? item.substr(1) : item;
        auto v = enumerate_instances({static_cast<unsigned>(std::stoul(f))}, ns);
        out.insert(out.end(), v.begin(), v.end());
      } catch (std::exception const&) {
        throw usage_error("bad scope entry '" + item + "'");
      }
    }
    return out;
  }

  int cmd_free(InstanceArgs const& ia, CapsArgs const& ca, std::size_t gens,
               std::string const& out) {
    auto const inst = ia.instance();
    auto       o    = enumerate(instantiate(inst), gens, ca.caps);
    if (!o.converged()) {
      std::cerr << "INDETERMINATE: " << o.reason << " (" << o.partial_reps.size()
                << " classes known)\n";
      return exit_undecided;
    }
    std::cout << "size " << o.semigroup->size() << "\n";
    if (!out.empty()) {
      write_or_print(out, to_text(*o.semigroup, inst));
    }
    return exit_ok;
  }

  int cmd_prove(InstanceArgs const& ia, std::string const& lhs, std::string const& rhs,
                OracleBudget const& budget) {
    auto const inst = ia.instance();
    auto const sys  = instantiate(inst);
    auto const u    = parse_word(lhs);
    auto const v    = parse_word(rhs);
    auto const r    = decide_equal(u, v, sys, budget);
    switch (r.kind()) {
      case EqVerdict::Kind::equal:
        if (!replay_proof(r.proof(), sys)) {
          std::cerr << "internal error: proof does not replay\n";
          return exit_internal;
        }
        std::cout << "EQUAL\n" << to_text(r.proof(), sys);
        return exit_ok;
      case EqVerdict::Kind::distinct:
        if (!verify_counter_model(r.model(), u, v, sys)) {
          std::cerr << "internal error: counter-model does not verify\n";
          return exit_internal;
        }
        std::cout << "DISTINCT\n" << to_text(r.model());
        return exit_negative;
      default: std::cout << "UNDECIDED\n"; return exit_undecided;
    }
  }

  int cmd_cayley(InstanceArgs const& ia, CapsArgs const& ca, std::size_t gens,
                 std::string const& graph, std::string const& format, std::string const& out) {
    auto const inst = ia.instance();
    auto       o    = enumerate(instantiate(inst), gens, ca.caps);
    if (!o.converged()) {
      std::cerr << "INDETERMINATE: " << o.reason << "\n";
      return exit_undecided;
    }
    auto const cay  = cayley_digraph(*o.semigroup);
    bool const json = format == "json";
    if (graph == "cay") {
      write_or_print(out, json ? to_json(cay) : to_dot(cay));
    } else {
      auto const g = simplify(cay);
      write_or_print(out, json ? to_json(g) : to_dot(g));
    }
    return exit_ok;
  }

  int cmd_planar(std::string const& in, std::string const& cert_out) {
    SimpleGraph g(0);
    try {
      g = parse_graph(read_input(in));
    } catch (std::invalid_argument const& e) {
      throw usage_error(std::string("graph parse error: ") + e.what());
    }
    auto const cert = decide_planar(g);
    auto const chk  = verify_certificate(g, cert);
    if (!chk) {
      std::cerr << "internal error: certificate does not verify: " << chk.detail << "\n";
      return exit_internal;
    }
    auto const text = to_text(g, cert);
    std::cout << (cert.is_planar() ? "PLANAR" : "NONPLANAR") << " " << g.number_of_vertices()
              << " vertices, " << g.number_of_edges() << " edges";
    if (cert.is_planar()) {
      std::cout << ", " << chk.faces << " faces";
    }
    std::cout << "\n";
    if (!cert_out.empty()) {
      write_or_print(cert_out, text);
    }
    return cert.is_planar() ? exit_ok : exit_negative;
  }

  int cmd_table(std::string const& scope, std::string const& ns, RankOptions const& opts,
                std::string const& json_out, std::string const& text_out, bool quiet) {
    auto const instances = parse_scope(scope, parse_list(ns));
    auto const report    = reproduce_table(instances, opts, [&](RankVerdict const& v) {
      if (!quiet) {
        std::cerr << v.instance.label() << ": "
                  << (v.rank ? std::to_string(*v.rank)
                             : v.lower_bound ? ">=" + std::to_string(*v.lower_bound)
                                             : std::string("INDETERMINATE"))
                  << " (expected " << v.expected << ")\n";
      }
    });
    auto const table = to_text_table(report);
    std::cout << table;
    if (!json_out.empty()) {
      write_or_print(json_out, to_json(report));
    }
    if (!text_out.empty()) {
      write_or_print(text_out, table);
    }
    if (report.mismatches > 0) {
      return exit_negative;
    }
    return report.indeterminate > 0 ? exit_undecided : exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relatively free semigroups of modular varieties and their planarity ranks"};
  app.require_subcommand(1);

  InstanceArgs free_ia, prove_ia, cayley_ia;
  CapsArgs     free_ca, cayley_ca, table_ca;

  std::size_t free_gens = 2;
  std::string free_out;
  auto*       free = app.add_subcommand("free", "enumerate F_n and print its size");
  free_ia.add_to(free);
  free_ca.add_to(free);
  free->add_option("--gens", free_gens, "number of generators")->check(CLI::Range(1, 26));
  free->add_option("--out", free_out, "write the tabular semigroup format here ('-' = stdout)");

  std::string  lhs, rhs;
  OracleBudget budget;
  auto*        prove = app.add_subcommand("prove", "decide u = v in the variety");
  prove_ia.add_to(prove);
  prove->add_option("lhs", lhs, "left word")->required();
  prove->add_option("rhs", rhs, "right word")->required();
  prove->add_option("--node-cap", budget.node_cap, "words visited per derivation search");
  prove->add_option("--model-order", budget.model_order_cap, "largest counter-model order");

  std::size_t cayley_gens = 2;
  std::string cayley_graph = "scay", cayley_format = "dot", cayley_out;
  auto*       cayley = app.add_subcommand("cayley", "Cayley graph of F_n");
  cayley_ia.add_to(cayley);
  cayley_ca.add_to(cayley);
  cayley->add_option("--gens", cayley_gens, "number of generators")->check(CLI::Range(1, 26));
  cayley->add_option("--graph", cayley_graph, "cay (labelled digraph) or scay (simplified)")
      ->check(CLI::IsMember({"cay", "scay"}));
  cayley->add_option("--format", cayley_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  cayley->add_option("--out", cayley_out, "output file ('-' = stdout)");

  std::string planar_in, planar_cert;
  auto*       planar = app.add_subcommand("planar", "decide planarity of a DOT or JSON graph");
  planar->add_option("graph", planar_in, "graph file, '-' for stdin")->required();
  planar->add_option("--cert", planar_cert, "write the certificate here ('-' = stdout)");

  std::string scope = "all", ns = "1,2,3,4,5", json_out, text_out;
  RankOptions ropts;
  bool        no_partial = false, quiet = false;
  auto*       table = app.add_subcommand("table", "planarity ranks against the catalog");
  table->add_option("--scope", scope, "all, or families / labels separated by commas");
  table->add_option("--n", ns, "exponents tried for families with one, e.g. 1,2,3");
  table->add_option("--nmax", ropts.n_max, "largest number of generators")
      ->check(CLI::Range(2, 26));
  table_ca.add_to(table);
  table->add_option("--json", json_out, "write the JSON report here");
  table->add_option("--text", text_out, "write the text table here");
  table->add_flag("--no-partial", no_partial, "never use separated partial witnesses");
  table->add_flag("--quiet", quiet, "no progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*free) {
      return cmd_free(free_ia, free_ca, free_gens, free_out);
    }
    if (*prove) {
      return cmd_prove(prove_ia, lhs, rhs, budget);
    }
    if (*cayley) {
      return cmd_cayley(cayley_ia, cayley_ca, cayley_gens, cayley_graph, cayley_format,
                        cayley_out);
    }
    if (*planar) {
      return cmd_planar(planar_in, planar_cert);
    }
    ropts.caps              = table_ca.caps;
    ropts.partial_witnesses = !no_partial;
    return cmd_table(scope, ns, ropts, json_out, text_out, quiet);
  } catch (usage_error const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
