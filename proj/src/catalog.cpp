#include "planrank/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace planrank {

  ////////////////////////////////////////////////////////////////////////
  // Permutation4
  ////////////////////////////////////////////////////////////////////////

  Permutation4::Permutation4(std::array<letter_type, 4> images)
      : images_(images) {
    std::array<bool, 4> seen{};
    for (auto i : images_) {
      if (i > 3 || seen[i]) {
        throw std::invalid_argument("not a permutation of {1,2,3,4}");
      }
      seen[i] = true;
    }
  }

  Permutation4 Permutation4::parse(std::string_view cycles) {
    std::array<letter_type, 4> img{0, 1, 2, 3};
    std::array<bool, 4>        used{};
    std::size_t                pos = 0;
    auto bad = [&cycles](std::string const& why) {
      return std::invalid_argument("bad permutation \"" + std::string(cycles)
                                   + "\": " + why);
    };
    while (pos < cycles.size()) {
      if (cycles[pos] == ' ') {
        ++pos;
        continue;
      }
      if (cycles[pos] != '(') {
        throw bad("expected '('");
      }
      ++pos;
      std::vector<letter_type> cyc;
      while (pos < cycles.size() && cycles[pos] != ')') {
        char c = cycles[pos++];
        if (c == ' ' || c == ',') {
          continue;
        }
        if (c < '1' || c > '4') {
          throw bad("points must be 1..4");
        }
        auto p = static_cast<letter_type>(c - '1');
        if (used[p]) {
          throw bad("point repeated");
        }
        used[p] = true;
        cyc.push_back(p);
      }
      if (pos == cycles.size()) {
        throw bad("missing ')'");
      }
      ++pos;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        img[cyc[i]] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation4(img);
  }

  Permutation4 Permutation4::inverse() const {
    std::array<letter_type, 4> inv{};
    for (letter_type i = 0; i < 4; ++i) {
      inv[images_[i]] = i;
    }
    return Permutation4(inv);
  }

  std::string Permutation4::to_string() const {
    std::string         out;
    std::array<bool, 4> done{};
    for (letter_type i = 0; i < 4; ++i) {
      if (done[i] || images_[i] == i) {
        continue;
      }
      out.push_back('(');
      for (letter_type j = i; !done[j]; j = images_[j]) {
        done[j] = true;
        out.push_back(static_cast<char>('1' + j));
      }
      out.push_back(')');
    }
    return out.empty() ? "()" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The catalog table
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using PK = ParameterKind;

    // clang-format off
    std::vector<FamilyRecord> const catalog = {
      {1,  PK::exponent, 0, false, {"xy=(xy)^{n+1}"}},
      {2,  PK::exponent, 0, false, {"xy=x^{n+1}y", "(xy)^{n+1}=xy^{n+1}", "xyzt=xyx^nzt"}},
      {3,  PK::exponent, 0, false, {"xy=xy^{n+1}", "(xy)^{n+1}=x^{n+1}y", "xyzt=xyt^nzt"}},
      {4,  PK::exponent_and_permutation, 1, true, {"x^2y=xyx=yx^2=x^{n+2}y"}},
      {5,  PK::permutation, 1, true, {"x^2y=xyx=yx^2", "x^3yz=xy^3z", "x^6=x^7"}},
      {6,  PK::permutation, 1, true, {"x^2y=xyx=yx^2", "x^2y^2z=xy^2z^2"}},
      {7,  PK::permutation, 1, true, {"x^2y=xyx=yx^2", "x^3yz=xy^2z^2"}},
      {8,  PK::permutation, 1, true, {"x^2y=xyx", "xy^2=yx^2"}},
      {9,  PK::permutation, 1, true, {"x^2y=y^2x", "xy^2=yxy"}},
      {10, PK::permutation, 1, true, {"x^2y=yxy", "xy^2=yx^2"}},
      {11, PK::permutation, 1, true, {"x^2y=y^2x", "xy^2=xyx"}},
      {12, PK::permutation, 1, true, {"x^2y=xy^2", "xyx=yxy"}},
      {13, PK::permutation, 1, true, {"x^2y=yxy=yx^2"}},
      {14, PK::permutation, 1, true, {"x^2y=xyx=xy^2", "x^4y=yx^4"}},
      {15, PK::permutation, 1, true, {"x^2y=yxy=xy^2", "x^4y=yx^4"}},
      {16, PK::permutation, 1, true, {"x^2y=y^2x", "xyx=x^2yx", "x^3y=yx^3"}},
      {17, PK::permutation, 1, true, {"xy^2=yx^2", "xyx=xyx^2", "x^3y=yx^3"}},
      {18, PK::permutation, 1, true, {"x^2y=x^3y", "xyx=yxy", "x^3y=yx^3"}},
      {19, PK::permutation, 1, true, {"xy^2=xy^3", "xyx=yxy", "x^3y=yx^3"}},
      {20, PK::permutation, 2, true, {"x^2y=yx^2", "xyx=yxy"}},
      {21, PK::none, 0, false, {"xyzt=tzyx", "x^2y=yx^2", "xyx=yxy", "x^2yz=y^2zx"}},
      {22, PK::none, 0, false, {"xyzt=tzyx", "x^2y=yx^2", "xyx=yxy", "x^2yz=yzyx"}},
      {23, PK::none, 0, false, {"xyzt=tzyx", "x^2y=yx^2", "xyx=yxy", "xyxz=yzyx"}},
      {24, PK::permutation, 3, true, {"x^2y=x^3y", "xy^2=yx^2", "x^3y=yx^3"}},
      {25, PK::permutation, 3, true, {"x^2y=y^2x", "xy^2=xy^3", "x^3y=yx^3"}},
      {26, PK::none, 0, false, {"xyzt=ztxy", "x^2y=x^3y", "xy^2=yx^2", "xyxz=yxzx"}},
      {27, PK::none, 0, false, {"xyzt=ztxy", "x^2y=x^3y", "xy^2=yx^2", "xyxz=yxyz"}},
      {28, PK::none, 0, false, {"xyzt=ztxy", "x^2y=x^3y", "xy^2=yx^2", "xyzy=xzyz"}},
      {29, PK::none, 0, false, {"xyzt=ztxy", "x^2y=y^2x", "xy^2=xy^3", "xyxz=yxzx"}},
      {30, PK::none, 0, false, {"xyzt=ztxy", "x^2y=y^2x", "xy^2=xy^3", "xyxz=yxyz"}},
      {31, PK::none, 0, false, {"xyzt=ztxy", "x^2y=y^2x", "xy^2=xy^3", "xyzy=xzyz"}},
      {32, PK::none, 0, false, {"xyzt=tzyx", "x^2y=x^3y", "xy^2=yx^2", "xyxz=xyzx"}},
      {33, PK::none, 0, false, {"xyzt=tzyx", "x^2y=x^3y", "xy^2=yx^2", "xyxz=yxzy"}},
      {34, PK::none, 0, false, {"xyzt=tzyx", "x^2y=x^3y", "xy^2=yx^2", "xyxz=zxyz"}},
      {35, PK::none, 0, false, {"xyzt=tzyx", "x^2y=x^3y", "xy^2=yx^2", "xyxz=yzyx"}},
      {36, PK::none, 0, false, {"xyzt=tzyx", "x^2y=x^3y", "xy^2=yx^2", "xyzx=yxzy"}},
      {37, PK::none, 0, false, {"xyzt=tzyx", "x^2y=y^2x", "xy^2=xy^3", "xyxz=xyzx"}},
      {38, PK::none, 0, false, {"xyzt=tzyx", "x^2y=y^2x", "xy^2=xy^3", "xyxz=yxzy"}},
      {39, PK::none, 0, false, {"xyzt=tzyx", "x^2y=y^2x", "xy^2=xy^3", "xyxz=zxyz"}},
      {40, PK::none, 0, false, {"xyzt=tzyx", "x^2y=y^2x", "xy^2=xy^3", "xyxz=yzyx"}},
      {41, PK::none, 0, false, {"xyzt=tzyx", "x^2y=y^2x", "xy^2=xy^3", "xyzx=yxzy"}},
      {42, PK::none, 0, false, {"xyzt=yxtz", "x^2y=y^2x", "xy^2=(xy)^2"}},
      {43, PK::none, 0, false, {"xyzt=yxtz", "x^2y=(xy)^2", "xy^2=yx^2"}},
      {44, PK::none, 0, false, {"xyzt=ztxy", "x^2y=y^2x", "xy^2=(xy)^2", "xyxz=yxzx"}},
      {45, PK::none, 0, false, {"xyzt=ztxy", "x^2y=(xy)^2", "xy^2=yx^2", "xyxz=yxzx"}},
      {46, PK::none, 0, false, {"xyzt=tzyx", "x^2y=y^2x", "xy^2=(xy)^2", "xyzx=yxzy"}},
      {47, PK::none, 0, false, {"xyzt=tzyx", "x^2y=(xy)^2", "xy^2=yx^2", "xyzx=yxzy"}},
    };
    // clang-format on

    FamilyRecord const& record(unsigned family) {
      if (family < 1 || family > number_of_families) {
        throw std::out_of_range("no catalog family m" + std::to_string(family));
      }
      return catalog[family - 1];
    }

    std::vector<Permutation4> make_set(std::vector<std::string_view> const& cyc) {
      std::vector<Permutation4> out;
      for (auto c : cyc) {
        out.push_back(Permutation4::parse(c));
      }
      return out;
    }

    bool has_exponent(ParameterKind k) {
      return k == PK::exponent || k == PK::exponent_and_permutation;
    }

    bool has_permutation(ParameterKind k) {
      return k == PK::permutation || k == PK::exponent_and_permutation;
    }
  }  // namespace

  std::vector<FamilyRecord> const& catalog_records() {
    return catalog;
  }

  ParameterKind parameter_kind(unsigned family) {
    return record(family).kind;
  }

  unsigned permitted_set(unsigned family) {
    return record(family).pi_set;
  }

  std::vector<Permutation4> const& permutation_set(unsigned k) {
    static std::vector<Permutation4> const pi1 = make_set(
        {"(123)", "(124)", "(134)", "(234)", "(12)(34)", "(13)(24)", "(14)(23)"});
    static std::vector<Permutation4> const pi2 = make_set(
        {"(123)", "(124)", "(134)", "(234)", "(12)(34)", "(13)(24)"});
    static std::vector<Permutation4> const pi3
        = make_set({"(123)", "(124)", "(134)", "(234)", "(12)(34)"});
    switch (k) {
      case 1:
        return pi1;
      case 2:
        return pi2;
      case 3:
        return pi3;
      default:
        throw std::out_of_range("permutation sets are numbered 1..3");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Instance
  ////////////////////////////////////////////////////////////////////////

  std::string Instance::label() const {
    std::string out = "m" + std::to_string(family);
    if (n) {
      out += "_" + std::to_string(*n);
    }
    if (pi) {
      out += "_" + pi->to_string();
    }
    return out;
  }

  Instance parse_instance_label(std::string_view label) {
    auto bad = [&label]() {
      return std::invalid_argument("bad instance label \"" + std::string(label)
                                   + "\"");
    };
    if (label.size() < 2 || label[0] != 'm') {
      throw bad();
    }
    Instance    inst;
    auto        rest = label.substr(1);
    auto        us   = rest.find('_');
    auto        head = rest.substr(0, us);
    auto [p, ec]     = std::from_chars(head.data(), head.data() + head.size(),
                                   inst.family);
    if (ec != std::errc() || p != head.data() + head.size()) {
      throw bad();
    }
    auto kind = parameter_kind(inst.family);
    rest      = us == std::string_view::npos ? std::string_view{}
                                             : rest.substr(us + 1);
    if (has_exponent(kind)) {
      auto     us2 = rest.find('_');
      auto     num = rest.substr(0, us2);
      unsigned n   = 0;
      auto [q, ec2] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec2 != std::errc() || q != num.data() + num.size()) {
        throw bad();
      }
      inst.n = n;
      rest   = us2 == std::string_view::npos ? std::string_view{}
                                             : rest.substr(us2 + 1);
    }
    if (has_permutation(kind)) {
      if (rest.empty()) {
        throw bad();
      }
      inst.pi = Permutation4::parse(rest);
    } else if (!rest.empty()) {
      throw bad();
    }
    return inst;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity systems
  ////////////////////////////////////////////////////////////////////////

  std::size_t IdentitySystem::max_variables() const noexcept {
    std::size_t k = 0;
    for (auto const& id : identities) {
      k = std::max(k, id.number_of_variables());
    }
    return k;
  }

  std::size_t IdentitySystem::longest_side() const noexcept {
    std::size_t k = 0;
    for (auto const& id : identities) {
      k = std::max(k, id.longest_side());
    }
    return k;
  }

  Identity permutation_identity(Permutation4 const& pi,
                                PermutationReading  reading) {
    std::vector<letter_type> lhs{0, 1, 2, 3};
    std::vector<letter_type> rhs(4);
    auto const& p = reading == PermutationReading::positional ? pi : pi.inverse();
    for (letter_type i = 0; i < 4; ++i) {
      rhs[i] = p(i);
    }
    return Identity(Pattern(lhs), Pattern(rhs));
  }

  IdentitySystem instantiate(Instance const& inst, PermutationReading reading) {
    auto const& rec  = record(inst.family);
    auto const  name = "m" + std::to_string(inst.family);
    if (has_exponent(rec.kind) != inst.n.has_value()) {
      throw std::invalid_argument(name + (inst.n ? " takes no exponent n"
                                                 : " requires an exponent n"));
    }
    if (inst.n && *inst.n == 0) {
      throw std::invalid_argument(name + ": n must be a positive integer");
    }
    if (has_permutation(rec.kind) != inst.pi.has_value()) {
      throw std::invalid_argument(
          name + (inst.pi ? " takes no permutation" : " requires a permutation"));
    }
    if (inst.pi) {
      auto const& allowed = permutation_set(rec.pi_set);
      if (std::find(allowed.cbegin(), allowed.cend(), *inst.pi) == allowed.cend()) {
        throw std::invalid_argument(name + ": permutation " + inst.pi->to_string()
                                    + " is not in Pi_"
                                    + std::to_string(rec.pi_set));
      }
    }

    IdentitySystem sys{inst, {}};
    if (rec.permutation_identity) {
      sys.identities.push_back(permutation_identity(*inst.pi, reading));
    }
    for (auto chain : rec.identities) {
      std::vector<Pattern> terms;
      std::size_t          start = 0;
      while (true) {
        auto eq = chain.find('=', start);
        terms.push_back(parse_pattern(chain.substr(start, eq - start), inst.n));
        if (eq == std::string_view::npos) {
          break;
        }
        start = eq + 1;
      }
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        sys.identities.emplace_back(terms[i], terms[i + 1]);
      }
    }
    return sys;
  }

  IdentitySystem instantiate(unsigned                    family,
                             std::optional<unsigned>     n,
                             std::optional<Permutation4> pi) {
    return instantiate(Instance{family, n, pi});
  }

  unsigned expected_rank(Instance const& inst) {
    auto const f = inst.family;
    record(f);
    auto const n = inst.n.value_or(1);
    switch (f) {
      case 1:
      case 3:
      case 4:
        return n == 1 ? 2 : 1;
      case 2:
        return n <= 2 ? 2 : 1;
      case 14:
        return 3;
      case 5:
      case 6:
      case 7:
      case 9:
      case 10:
      case 20:
      case 21:
      case 22:
      case 23:
      case 43:
      case 45:
      case 47:
        return 1;
      default:
        return 2;
    }
  }

  std::vector<Instance> enumerate_instances(std::vector<unsigned> const& families,
                                            std::vector<unsigned> const& n_values) {
    std::vector<unsigned> fams(families);
    std::sort(fams.begin(), fams.end());
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
    std::vector<unsigned> ns(n_values);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    std::vector<Instance> out;
    for (auto f : fams) {
      auto const& rec = record(f);
      std::vector<std::optional<unsigned>> nn{std::nullopt};
      if (has_exponent(rec.kind)) {
        nn.clear();
        for (auto n : ns) {
          nn.emplace_back(n);
        }
      }
      for (auto n : nn) {
        if (has_permutation(rec.kind)) {
          for (auto const& p : permutation_set(rec.pi_set)) {
            out.push_back(Instance{f, n, p});
          }
        } else {
          out.push_back(Instance{f, n, std::nullopt});
        }
      }
    }
    return out;
  }

}  // namespace planrank
