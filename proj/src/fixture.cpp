#include "ordvi/fixture.hpp"

#include <fstream>
#include <sstream>

#include "ordvi/errors.hpp"

namespace ordvi {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

int index_of(const std::vector<std::string>& names, const std::string& n,
             const std::string& ctx) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  throw config_error(ctx, "unknown element '" + n + "'");
}

ExtValue parse_value(const std::string& s) {
  if (s == "inf" || s == "+inf") return ExtValue::infinity();
  auto slash = s.find('/');
  if (slash == std::string::npos) return ExtValue(std::stoll(s), 1);
  return ExtValue(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
  Fixture fx;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  enum class Block { none, carrier, multifunction, functional };
  Block block = Block::none;
  std::string block_name, over;
  bool as_lattice = false;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  std::vector<ElemSet> values;
  std::vector<ExtValue> fvals;

  auto ctx = [&] { return "fixture:" + std::to_string(lineno); };

  auto close_block = [&] {
    switch (block) {
      case Block::none:
        break;
      case Block::carrier: {
        Poset p = Poset::from_covers(static_cast<int>(names.size()), covers, names);
        if (as_lattice) fx.lattices.emplace(block_name, Lattice(p));
        fx.posets.emplace(block_name, std::move(p));
        break;
      }
      case Block::multifunction: {
        auto it = fx.posets.find(over);
        if (it == fx.posets.end()) throw config_error(ctx(), "unknown carrier '" + over + "'");
        fx.multifunctions.emplace(block_name, Multifunction(it->second, values));
        break;
      }
      case Block::functional:
        fx.functionals.emplace(block_name, Functional(fvals));
        break;
    }
    block = Block::none;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "poset" || kw == "lattice" || kw == "multifunction" || kw == "functional") {
      close_block();
      if (tok.size() < 2) throw config_error(ctx(), "missing name after '" + kw + "'");
      block_name = tok[1];
      if (kw == "poset" || kw == "lattice") {
        block = Block::carrier;
        as_lattice = kw == "lattice";
        names.clear();
        covers.clear();
      } else {
        if (tok.size() != 4 || tok[2] != "over")
          throw config_error(ctx(), kw + " requires: " + kw + " <name> over <carrier>");
        over = tok[3];
        auto it = fx.posets.find(over);
        if (it == fx.posets.end()) throw config_error(ctx(), "unknown carrier '" + over + "'");
        if (kw == "multifunction") {
          block = Block::multifunction;
          values.assign(it->second.size(), {});
        } else {
          block = Block::functional;
          fvals.assign(it->second.size(), ExtValue::infinity());
        }
      }
    } else if (kw == "elements") {
      if (block != Block::carrier) throw config_error(ctx(), "'elements' outside carrier block");
      names.assign(tok.begin() + 1, tok.end());
    } else if (kw == "cover") {
      if (block != Block::carrier || tok.size() != 3)
        throw config_error(ctx(), "'cover' requires two elements inside a carrier block");
      covers.emplace_back(index_of(names, tok[1], ctx()), index_of(names, tok[2], ctx()));
    } else if (kw == "map") {
      if (block != Block::multifunction || tok.size() < 3 || tok[2] != "->")
        throw config_error(ctx(), "'map' requires: map <elem> -> [elems...]");
      const auto& carrier_names = fx.posets.at(over).names();
      int from = index_of(carrier_names, tok[1], ctx());
      ElemSet vs;
      for (size_t i = 3; i < tok.size(); ++i)
        vs.push_back(index_of(carrier_names, tok[i], ctx()));
      values[from] = set_normalize(std::move(vs));
    } else if (kw == "value") {
      if (block != Block::functional || tok.size() != 3)
        throw config_error(ctx(), "'value' requires: value <elem> <rational|inf>");
      const auto& carrier_names = fx.posets.at(over).names();
      fvals[index_of(carrier_names, tok[1], ctx())] = parse_value(tok[2]);
    } else if (kw == "end") {
      close_block();
    } else {
      throw config_error(ctx(), "unknown keyword '" + kw + "'");
    }
  }
  close_block();
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path, "cannot open fixture file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::string format_poset(const std::string& name, const Poset& p, bool as_lattice) {
  std::ostringstream out;
  out << (as_lattice ? "lattice " : "poset ") << name << "\n";
  out << "elements";
  for (int i = 0; i < p.size(); ++i) out << " " << p.name(i);
  out << "\n";
  for (auto [a, b] : p.covers()) out << "cover " << p.name(a) << " " << p.name(b) << "\n";
  out << "end\n";
  return out.str();
}

std::string format_multifunction(const std::string& name, const std::string& over,
                                 const Multifunction& s) {
  std::ostringstream out;
  out << "multifunction " << name << " over " << over << "\n";
  for (int v = 0; v < s.ambient().size(); ++v) {
    out << "map " << s.ambient().name(v) << " ->";
    for (int w : s(v)) out << " " << s.ambient().name(w);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string format_functional(const std::string& name, const std::string& over,
                              const Poset& carrier, const Functional& f) {
  std::ostringstream out;
  out << "functional " << name << " over " << over << "\n";
  for (int u = 0; u < f.carrier_size(); ++u)
    out << "value " << carrier.name(u) << " " << f(u).str() << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace ordvi
