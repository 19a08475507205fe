#include "planrank/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace planrank {

  ////////////////////////////////////////////////////////////////////////
  // SimpleGraph
  ////////////////////////////////////////////////////////////////////////

  bool SimpleGraph::add_edge(vertex_type u, vertex_type v) {
    if (u >= adj_.size() || v >= adj_.size()) {
      throw std::out_of_range("vertex out of range");
    }
    if (u == v) {
      return false;
    }
    auto& nu = adj_[u];
    auto  it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) {
      return false;
    }
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++nr_edges_;
    return true;
  }

  bool SimpleGraph::remove_edge(vertex_type u, vertex_type v) {
    if (!has_edge(u, v)) {
      return false;
    }
    auto& nu = adj_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --nr_edges_;
    return true;
  }

  vertex_type SimpleGraph::add_vertex() {
    adj_.emplace_back();
    if (!names.empty()) {
      names.emplace_back(std::to_string(adj_.size() - 1));
    }
    return static_cast<vertex_type>(adj_.size() - 1);
  }

  bool SimpleGraph::has_edge(vertex_type u, vertex_type v) const {
    if (u >= adj_.size() || v >= adj_.size()) {
      return false;
    }
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::vector<std::pair<vertex_type, vertex_type>> SimpleGraph::edges() const {
    std::vector<std::pair<vertex_type, vertex_type>> out;
    out.reserve(nr_edges_);
    for (vertex_type u = 0; u < adj_.size(); ++u) {
      for (auto v : adj_[u]) {
        if (u < v) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  SimpleGraph SimpleGraph::induced(std::vector<vertex_type> const& keep) const {
    constexpr auto absent = static_cast<vertex_type>(-1);
    std::vector<vertex_type> index(adj_.size(), absent);
    for (vertex_type i = 0; i < keep.size(); ++i) {
      index.at(keep[i]) = i;
    }
    SimpleGraph h(keep.size());
    for (vertex_type i = 0; i < keep.size(); ++i) {
      for (auto w : adj_[keep[i]]) {
        if (index[w] != absent) {
          h.add_edge(i, index[w]);
        }
      }
    }
    if (!names.empty()) {
      for (auto v : keep) {
        h.names.push_back(names[v]);
      }
    }
    return h;
  }

  std::string SimpleGraph::name(vertex_type v) const {
    return names.empty() ? std::to_string(v) : names.at(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // LabeledDigraph
  ////////////////////////////////////////////////////////////////////////

  LabeledDigraph::LabeledDigraph(std::size_t nr_vertices, std::size_t nr_labels)
      : nr_vertices_(nr_vertices),
        nr_labels_(nr_labels),
        target_(nr_vertices * nr_labels, 0) {}

  std::vector<LabeledDigraph::Arc> LabeledDigraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(number_of_arcs());
    for (vertex_type v = 0; v < nr_vertices_; ++v) {
      for (std::size_t x = 0; x < nr_labels_; ++x) {
        out.push_back({v, target_[v * nr_labels_ + x], static_cast<letter_type>(x)});
      }
    }
    return out;
  }

  std::size_t LabeledDigraph::number_of_loops() const {
    std::size_t loops = 0;
    for (vertex_type v = 0; v < nr_vertices_; ++v) {
      for (std::size_t x = 0; x < nr_labels_; ++x) {
        loops += target_[v * nr_labels_ + x] == v;
      }
    }
    return loops;
  }

  std::string LabeledDigraph::name(vertex_type v) const {
    if (v < words.size() && !words[v].empty()) {
      return planrank::to_string(words[v]);
    }
    return std::to_string(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  LabeledDigraph cayley_digraph(FiniteSemigroup const& S) {
    LabeledDigraph g(S.size(), S.number_of_generators());
    for (element_type e = 0; e < S.size(); ++e) {
      for (std::size_t x = 0; x < S.number_of_generators(); ++x) {
        g.set_target(e, static_cast<letter_type>(x), S.right(e, static_cast<letter_type>(x)));
      }
    }
    g.words = S.reps();
    return g;
  }

  SimpleGraph simplify(LabeledDigraph const& g) {
    SimpleGraph h(g.number_of_vertices());
    for (auto const& a : g.arcs()) {
      h.add_edge(a.source, a.target);
    }
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      h.names.push_back(g.name(v));
    }
    return h;
  }

  SimpleGraph induced_restriction(LabeledDigraph const&     cay,
                                  std::size_t               n,
                                  std::vector<vertex_type>* kept) {
    if (cay.words.size() != cay.number_of_vertices()) {
      throw std::invalid_argument("induced_restriction needs representative words");
    }
    constexpr auto           absent = static_cast<vertex_type>(-1);
    std::vector<vertex_type> index(cay.number_of_vertices(), absent);
    std::vector<vertex_type> keep;
    for (vertex_type v = 0; v < cay.number_of_vertices(); ++v) {
      auto const& w = cay.words[v];
      if (std::all_of(w.begin(), w.end(), [n](letter_type x) { return x < n; })) {
        index[v] = static_cast<vertex_type>(keep.size());
        keep.push_back(v);
      }
    }
    SimpleGraph h(keep.size());
    for (auto v : keep) {
      h.names.push_back(cay.name(v));
      for (std::size_t x = 0; x < n && x < cay.number_of_labels(); ++x) {
        auto w = cay.target(v, static_cast<letter_type>(x));
        if (index[w] != absent) {
          h.add_edge(index[v], index[w]);
        }
      }
    }
    if (kept != nullptr) {
      *kept = std::move(keep);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT and JSON output
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  std::string to_dot(LabeledDigraph const& g) {
    std::string out = "digraph Cay {\n";
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      out += "  " + quoted(g.name(v)) + ";\n";
    }
    for (auto const& a : g.arcs()) {
      out += "  " + quoted(g.name(a.source)) + " -> " + quoted(g.name(a.target))
             + " [label=" + quoted(std::string(1, static_cast<char>('a' + a.label)))
             + "];\n";
    }
    return out + "}\n";
  }

  std::string to_dot(SimpleGraph const& g) {
    std::string out = "graph SCay {\n";
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      out += "  " + quoted(g.name(v)) + ";\n";
    }
    for (auto [u, v] : g.edges()) {
      out += "  " + quoted(g.name(u)) + " -- " + quoted(g.name(v)) + ";\n";
    }
    return out + "}\n";
  }

  std::string to_json(LabeledDigraph const& g) {
    nlohmann::json j;
    j["directed"] = true;
    j["vertices"] = nlohmann::json::array();
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      j["vertices"].push_back(g.name(v));
    }
    j["edges"] = nlohmann::json::array();
    for (auto const& a : g.arcs()) {
      j["edges"].push_back({a.source, a.target, std::string(1, static_cast<char>('a' + a.label))});
    }
    return j.dump(1) + "\n";
  }

  std::string to_json(SimpleGraph const& g) {
    nlohmann::json j;
    j["directed"] = false;
    j["vertices"] = nlohmann::json::array();
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      j["vertices"].push_back(g.name(v));
    }
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
      j["edges"].push_back({u, v});
    }
    return j.dump(1) + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    [[noreturn]] void parse_error(std::size_t pos, std::string const& what) {
      throw std::invalid_argument("graph parse error at offset " + std::to_string(pos)
                                  + ": " + what);
    }

    struct Token {
      enum Kind { id, punct, end } kind;
      std::string text;
      std::size_t pos;
    };

    std::vector<Token> tokenize_dot(std::string_view s) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
          while (i < s.size() && s[i] != '\n') {
            ++i;
          }
        } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
          auto close = s.find("*/", i + 2);
          if (close == std::string_view::npos) {
            parse_error(i, "unterminated comment");
          }
          i = close + 2;
        } else if (c == '"') {
          std::size_t start = i++;
          std::string text;
          while (i < s.size() && s[i] != '"') {
            if (s[i] == '\\' && i + 1 < s.size()) {
              ++i;
            }
            text += s[i++];
          }
          if (i == s.size()) {
            parse_error(start, "unterminated string");
          }
          ++i;
          out.push_back({Token::id, text, start});
        } else if (c == '-' && i + 1 < s.size() && (s[i + 1] == '-' || s[i + 1] == '>')) {
          out.push_back({Token::punct, std::string(s.substr(i, 2)), i});
          i += 2;
        } else if (std::string_view("{}[];=,").find(c) != std::string_view::npos) {
          out.push_back({Token::punct, std::string(1, c), i});
          ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^'
                   || c == '.') {
          std::size_t start = i;
          while (i < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'
                     || s[i] == '^' || s[i] == '.')) {
            ++i;
          }
          out.push_back({Token::id, std::string(s.substr(start, i - start)), start});
        } else {
          parse_error(i, std::string("unexpected character '") + c + "'");
        }
      }
      out.push_back({Token::end, "", s.size()});
      return out;
    }

    SimpleGraph parse_dot(std::string_view text) {
      auto        toks = tokenize_dot(text);
      std::size_t k    = 0;
      auto        peek = [&]() -> Token const& { return toks[k]; };
      auto        next = [&]() -> Token const& { return toks[k == toks.size() - 1 ? k : k++]; };
      auto        is   = [&](char const* p) {
        return peek().kind == Token::punct && peek().text == p;
      };
      auto expect = [&](char const* p) {
        if (!is(p)) {
          parse_error(peek().pos, std::string("expected '") + p + "'");
        }
        next();
      };
      auto skip_attrs = [&]() {
        while (is("[")) {
          next();
          while (!is("]")) {
            if (peek().kind == Token::end) {
              parse_error(peek().pos, "unterminated attribute list");
            }
            next();
          }
          next();
        }
      };

      if (peek().kind == Token::id && peek().text == "strict") {
        next();
      }
      if (peek().kind != Token::id || (peek().text != "graph" && peek().text != "digraph")) {
        parse_error(peek().pos, "expected 'graph' or 'digraph'");
      }
      bool const directed = next().text == "digraph";
      if (peek().kind == Token::id) {
        next();
      }
      expect("{");

      SimpleGraph                                  g;
      std::unordered_map<std::string, vertex_type> ids;
      auto vertex = [&](std::string const& name) {
        auto it = ids.find(name);
        if (it != ids.end()) {
          return it->second;
        }
        auto v = g.add_vertex();
        g.names.resize(g.number_of_vertices());
        g.names[v] = name;
        ids.emplace(name, v);
        return v;
      };

      while (!is("}")) {
        if (peek().kind == Token::end) {
          parse_error(peek().pos, "expected '}'");
        }
        if (is(";")) {
          next();
          continue;
        }
        if (peek().kind != Token::id) {
          parse_error(peek().pos, "expected a statement");
        }
        auto const& first = next();
        if (first.text == "node" || first.text == "edge" || first.text == "graph") {
          if (is("[")) {
            skip_attrs();
            continue;
          }
        }
        if (is("=")) {
          next();
          if (peek().kind != Token::id) {
            parse_error(peek().pos, "expected a value");
          }
          next();
          continue;
        }
        vertex_type prev = vertex(first.text);
        while (is("--") || is("->")) {
          if (is("--") == directed) {
            parse_error(peek().pos, directed ? "'--' in a digraph" : "'->' in a graph");
          }
          next();
          if (peek().kind != Token::id) {
            parse_error(peek().pos, "expected a vertex name");
          }
          vertex_type cur = vertex(next().text);
          g.add_edge(prev, cur);
          prev = cur;
        }
        skip_attrs();
      }
      next();
      if (peek().kind != Token::end) {
        parse_error(peek().pos, "trailing input");
      }
      return g;
    }

    SimpleGraph parse_json(std::string_view text) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        parse_error(e.byte, e.what());
      }
      if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")
          || !j["vertices"].is_array() || !j["edges"].is_array()) {
        parse_error(0, "expected an object with arrays 'vertices' and 'edges'");
      }
      SimpleGraph g(j["vertices"].size());
      for (auto const& v : j["vertices"]) {
        g.names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
      for (auto const& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2 || !e[0].is_number_unsigned()
            || !e[1].is_number_unsigned()) {
          parse_error(0, "edge entries must be [u, v] or [u, v, label]");
        }
        auto u = e[0].get<std::size_t>();
        auto v = e[1].get<std::size_t>();
        if (u >= g.number_of_vertices() || v >= g.number_of_vertices()) {
          parse_error(0, "edge endpoint out of range");
        }
        g.add_edge(static_cast<vertex_type>(u), static_cast<vertex_type>(v));
      }
      return g;
    }

  }  // namespace

  SimpleGraph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      return parse_json(text);
    }
    return parse_dot(text);
  }

}  // namespace planrank
