// Reader for tests/data/route_systems.txt.

#ifndef PLANRANK_TESTS_ROUTE_CORPUS_HPP_
#define PLANRANK_TESTS_ROUTE_CORPUS_HPP_

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "planrank/catalog.hpp"
#include "planrank/free_semigroup.hpp"
#include "planrank/word.hpp"

namespace planrank::testing {

  struct RouteSystem {
    std::vector<Instance>          instances;
    std::size_t                    gens = 0;
    std::vector<Word>              part_a;
    std::vector<Word>              part_b;
    std::vector<std::vector<Word>> routes;
    std::string                    header;
    //! Set by a "W:" line: some route, as printed, revisits an element.
    std::string walk_note;
  };

  inline std::string trim(std::string s) {
    auto const b = s.find_first_not_of(" \t");
    auto const e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }

  inline std::vector<std::string> split(std::string const& s, char sep) {
    std::vector<std::string> out;
    std::stringstream        ss(s);
    std::string              item;
    while (std::getline(ss, item, sep)) {
      if (auto t = trim(item); !t.empty()) {
        out.push_back(t);
      }
    }
    return out;
  }

  inline std::vector<Instance> expand_label(std::string const& label) {
    if (label.size() > 2 && label.substr(label.size() - 2) == "_*") {
      auto const family = static_cast<unsigned>(std::stoul(label.substr(1, label.size() - 3)));
      return enumerate_instances({family}, {});
    }
    return {parse_instance_label(label)};
  }

  inline std::vector<RouteSystem> read_route_corpus(std::string const& path) {
    std::ifstream f(path);
    if (!f) {
      throw std::runtime_error("cannot open " + path);
    }
    std::vector<RouteSystem> out;
    std::string              line;
    while (std::getline(f, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') {
        continue;
      }
      if (line[0] == '[') {
        auto const close = line.find(']');
        RouteSystem rs;
        rs.header = line;
        for (auto const& l : split(line.substr(1, close - 1), ' ')) {
          auto v = expand_label(l);
          rs.instances.insert(rs.instances.end(), v.begin(), v.end());
        }
        rs.gens = std::stoul(line.substr(line.find("gens=") + 5));
        out.push_back(std::move(rs));
        continue;
      }
      auto& rs   = out.back();
      auto  body = trim(line.substr(2));
      if (line.rfind("A:", 0) == 0 || line.rfind("B:", 0) == 0) {
        auto& part = line[0] == 'A' ? rs.part_a : rs.part_b;
        for (auto const& w : split(body, ' ')) {
          part.push_back(Word::parse(w));
        }
      } else if (line.rfind("R:", 0) == 0) {
        for (auto const& r : split(body, ';')) {
          std::vector<Word> route;
          for (auto const& w : split(r, '-')) {
            route.push_back(Word::parse(w));
          }
          rs.routes.push_back(std::move(route));
        }
      } else if (line.rfind("W:", 0) == 0) {
        rs.walk_note = body;
      } else {
        throw std::runtime_error("bad corpus line: " + line);
      }
    }
    return out;
  }

  //! Each route with the stretch between two visits of one element cut out.
  inline std::vector<std::vector<Word>> shortcut_routes(FiniteSemigroup const&                S,
                                                        std::vector<std::vector<Word>> const& routes) {
    std::vector<std::vector<Word>> out;
    for (auto const& r : routes) {
      std::vector<Word> path;
      for (auto const& w : r) {
        auto const e  = S.element_of(w);
        auto       it = std::find_if(path.begin(), path.end(),
                               [&](Word const& u) { return S.element_of(u) == e; });
        if (it != path.end()) {
          path.erase(it + 1, path.end());
        } else {
          path.push_back(w);
        }
      }
      out.push_back(std::move(path));
    }
    return out;
  }

}  // namespace planrank::testing

#endif  // PLANRANK_TESTS_ROUTE_CORPUS_HPP_
