#include "liekv/lie_algebra.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace liekv {

void LieAlgebra::set(int i, int j, int k, const Rat& v) {
  c[(i * dim + j) * dim + k] = v;
  c[(j * dim + i) * dim + k] = -v;
}

std::vector<Rat> LieAlgebra::bracket_rat(const std::vector<Rat>& a,
                                         const std::vector<Rat>& b) const {
  std::vector<Rat> out(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(b[j])) continue;
      for (int k = 0; k < dim; ++k) {
        const Rat& s = sc(i, j, k);
        if (!is_zero(s)) out[k] += a[i] * b[j] * s;
      }
    }
  }
  return out;
}

void LieAlgebra::finalize() {
  if (dim < 1) throw std::invalid_argument("algebra '" + name + "': dimension must be >= 1");
  c.resize(static_cast<std::size_t>(dim) * dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (sc(i, j, k) != -sc(j, i, k))
          throw std::invalid_argument("algebra '" + name + "': antisymmetry fails");
  // Jacobi, exactly: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
  auto basis = [&](int i) {
    std::vector<Rat> v(dim);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        std::vector<Rat> acc(dim);
        auto add = [&](int a, int b, int e) {
          auto t = bracket_rat(bracket_rat(basis(a), basis(b)), basis(e));
          for (int l = 0; l < dim; ++l) acc[l] += t[l];
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (int l = 0; l < dim; ++l)
          if (!is_zero(acc[l]))
            throw std::invalid_argument("algebra '" + name + "': Jacobi identity fails");
      }
  cd.resize(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) cd[n] = to_double(c[n]);
}

LieAlgebra load_algebra(std::istream& in, const std::string& name) {
  LieAlgebra alg;
  alg.name = name;
  std::string line;
  bool have_dim = false;
  std::map<std::tuple<int, int, int>, Rat> given;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_dim) {
      int d;
      if (ls >> d) {
        alg.dim = d;
        if (d < 1 || d > 64)
          throw std::invalid_argument(name + ": bad dimension at line " + std::to_string(lineno));
        alg.c.assign(static_cast<std::size_t>(d) * d * d, Rat());
        have_dim = true;
      }
      continue;
    }
    int i, j, k;
    std::string val;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j >> k >> val))
      throw std::invalid_argument(name + ": malformed line " + std::to_string(lineno));
    if (i < 1 || j < 1 || k < 1 || i > alg.dim || j > alg.dim || k > alg.dim)
      throw std::invalid_argument(name + ": index out of range at line " + std::to_string(lineno));
    given[{i - 1, j - 1, k - 1}] = rat_from_string(val);
  }
  if (!have_dim) throw std::invalid_argument(name + ": missing dimension line");
  for (const auto& [idx, v] : given) {
    auto [i, j, k] = idx;
    auto mirror = given.find({j, i, k});
    if (mirror != given.end() && mirror->second != -v)
      throw std::invalid_argument(name + ": inconsistent antisymmetric entries");
    alg.set(i, j, k, v);
  }
  alg.finalize();
  return alg;
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file '" + path + "'");
  return load_algebra(in, path);
}

static LieAlgebra make_bundled(const std::string& name) {
  LieAlgebra a;
  a.name = name;
  if (name == "abelian2") {
    a.dim = 2;
    a.nilpotent = true;
    a.c.assign(8, Rat());
  } else if (name == "heisenberg") {
    a.dim = 3;
    a.nilpotent = true;
    a.c.assign(27, Rat());
    a.set(0, 1, 2, Rat(1));  // [e, f] = z
  } else if (name == "aff1") {
    a.dim = 2;
    a.c.assign(8, Rat());
    a.set(0, 1, 1, Rat(1));  // [a, b] = b; solvable, tr(ad a) != 0
  } else if (name == "sl2") {
    a.dim = 3;  // basis (h, e, f)
    a.c.assign(27, Rat());
    a.set(0, 1, 1, Rat(2));   // [h, e] = 2e
    a.set(0, 2, 2, Rat(-2));  // [h, f] = -2f
    a.set(1, 2, 0, Rat(1));   // [e, f] = h
  } else if (name == "so3") {
    a.dim = 3;
    a.c.assign(27, Rat());
    a.set(0, 1, 2, Rat(1));  // [e1, e2] = e3
    a.set(1, 2, 0, Rat(1));  // [e2, e3] = e1
    a.set(2, 0, 1, Rat(1));  // [e3, e1] = e2
  } else {
    throw std::invalid_argument("unknown bundled algebra '" + name + "'");
  }
  a.finalize();
  return a;
}

const LieAlgebra& bundled_algebra(const std::string& name) {
  static std::map<std::string, LieAlgebra> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  return cache.emplace(name, make_bundled(name)).first->second;
}

std::vector<std::string> bundled_algebra_names() {
  return {"abelian2", "heisenberg", "aff1", "sl2", "so3"};
}

}  // namespace liekv
