#include "cmrees/registry.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace cmrees {

namespace {

CycMatrix mat2(const Cyc& a, const Cyc& b, const Cyc& c, const Cyc& d) {
  CycMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

GroupPtr build_registry_group(const std::string& name) {
  if (name.rfind("Cyc", 0) == 0) {
    int d = std::stoi(name.substr(3));
    if (d < 1 || d > 12) throw std::runtime_error("registry: Cyc d supports 1 <= d <= 12");
    CycMatrix m(1, 1);
    m.at(0, 0) = Cyc::zeta(d);
    return ReflGroup::generate({m}, name);
  }
  if (name == "S3") {
    // reflection representation on {x in C^3 : sum x_i = 0}
    return ReflGroup::generate(
        {mat2(Cyc(-1), Cyc(1), Cyc(0), Cyc(1)), mat2(Cyc(1), Cyc(0), Cyc(1), Cyc(-1))}, name);
  }
  if (name == "G4") {
    Cyc z = Cyc::zeta(3);
    return ReflGroup::generate(
        {mat2(z, Cyc(0), z * z, Cyc(1)), mat2(Cyc(1), -(z * z), Cyc(0), z)}, name);
  }
  if (name.size() == 6 && name[0] == 'G' && name.substr(2) == "_1_2") {
    int d = name[1] - '0';
    if (d < 2 || d > 4) throw std::runtime_error("registry: G(d,1,2) supports 2 <= d <= 4");
    Cyc zd = Cyc::zeta(d);
    return ReflGroup::generate({mat2(Cyc(0), Cyc(1), Cyc(1), Cyc(0)),
                                mat2(zd, Cyc(0), Cyc(0), Cyc(1))},
                               name);
  }
  throw std::runtime_error("registry: unknown group '" + name + "'");
}

}  // namespace

GroupPtr registry_group(const std::string& name) {
  static std::map<std::string, GroupPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  GroupPtr g = build_registry_group(name);
  cache[name] = g;
  return g;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (int d = 1; d <= 12; ++d) names.push_back("Cyc" + std::to_string(d));
  names.push_back("G2_1_2");
  names.push_back("G3_1_2");
  names.push_back("G4_1_2");
  names.push_back("S3");
  names.push_back("G4");
  return names;
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string name = "unnamed";
  int conductor = 1, dim = 0;
  std::vector<CycMatrix> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "name") {
      ls >> name;
    } else if (kw == "conductor") {
      ls >> conductor;
    } else if (kw == "dim") {
      ls >> dim;
    } else if (kw == "generator") {
      if (dim <= 0) throw std::runtime_error("group file: dim must precede generators");
      std::string rest;
      std::getline(ls, rest);
      std::vector<std::vector<Cyc>> rows;
      std::istringstream rs(rest);
      std::string row;
      while (std::getline(rs, row, ';')) {
        std::vector<Cyc> entries;
        std::istringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ',')) entries.push_back(parse_cyc(entry, conductor));
        rows.push_back(std::move(entries));
      }
      CycMatrix m(dim, dim);
      if ((int)rows.size() != dim) throw std::runtime_error("group file: wrong row count");
      for (int i = 0; i < dim; ++i) {
        if ((int)rows[i].size() != dim) throw std::runtime_error("group file: wrong column count");
        for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
      }
      gens.push_back(std::move(m));
    } else {
      throw std::runtime_error("group file: unknown keyword '" + kw + "'");
    }
  }
  if (gens.empty()) throw std::runtime_error("group file: no generators");
  return ReflGroup::generate(gens, name);
}

GroupPtr resolve_group(const std::string& selector) {
  for (const auto& n : registry_names())
    if (n == selector) return registry_group(selector);
  return load_group_file(selector);
}

}  // namespace cmrees
