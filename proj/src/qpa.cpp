#include "grascat/qpa.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "grascat/error.hpp"

namespace grascat {

namespace {

using Combination = std::map<Path, Rational>;

Path concat(const Path& first, const Path& second) {
  Path out{first.source, first.arrows};
  out.arrows.insert(out.arrows.end(), second.arrows.begin(), second.arrows.end());
  return out;
}

// Reduced ideal and quotient basis for the paths of one degree between a
// fixed source and target.
struct Block {
  std::vector<Path> paths;
  std::map<Path, int> index;
  Matrix<Rational> rows;        // reduced row echelon basis of the ideal
  std::vector<int> pivots;      // pivot column per row
  std::vector<int> basis_cols;  // non-pivot columns, i.e. the quotient basis
};

struct Engine {
  const QuiverWithPotential& qp;
  // degree -> (source, target) -> block
  std::vector<std::map<std::pair<int, int>, Block>> degrees;

  // Coefficients of p in the quotient basis of its block.
  std::vector<Rational> normal_form(const Path& p) const {
    const std::size_t d = p.arrows.size();
    if (d >= degrees.size()) return {};
    auto it = degrees[d].find({p.source, path_target(qp, p)});
    if (it == degrees[d].end()) return {};
    const Block& block = it->second;
    const int col = block.index.at(p);
    std::vector<Rational> out(block.basis_cols.size(), Rational(0));
    auto direct = std::find(block.basis_cols.begin(), block.basis_cols.end(), col);
    if (direct != block.basis_cols.end()) {
      out[direct - block.basis_cols.begin()] = 1;
      return out;
    }
    auto piv = std::find(block.pivots.begin(), block.pivots.end(), col);
    const auto& row = block.rows[piv - block.pivots.begin()];
    for (std::size_t q = 0; q < block.basis_cols.size(); ++q) out[q] = -row[block.basis_cols[q]];
    return out;
  }
};

}  // namespace

int QuiverWithPotential::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  require(it != vertices.end(), ErrorCode::BadParameters, "unknown vertex '" + name + "'");
  return static_cast<int>(it - vertices.begin());
}

int QuiverWithPotential::arrow_index(const std::string& id) const {
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    if (arrows[a].id == id) return static_cast<int>(a);
  }
  fail(ErrorCode::BadParameters, "unknown arrow '" + id + "'");
}

void validate(const QuiverWithPotential& qp) {
  const int nv = static_cast<int>(qp.vertices.size());
  for (const QPArrow& a : qp.arrows) {
    require(a.from >= 0 && a.from < nv && a.to >= 0 && a.to < nv, ErrorCode::BadParameters,
            "arrow '" + a.id + "' has an invalid endpoint");
  }
  for (const PotentialTerm& term : qp.potential) {
    require(!term.cycle.empty(), ErrorCode::BadParameters, "empty potential term");
    require(term.sign == 1 || term.sign == -1, ErrorCode::BadParameters, "potential signs must be +1 or -1");
    for (std::size_t p = 0; p < term.cycle.size(); ++p) {
      int a = term.cycle[p];
      int b = term.cycle[(p + 1) % term.cycle.size()];
      require(a >= 0 && a < static_cast<int>(qp.arrows.size()) && b >= 0 && b < static_cast<int>(qp.arrows.size()),
              ErrorCode::BadParameters, "potential term refers to an unknown arrow");
      require(qp.arrows[a].to == qp.arrows[b].from, ErrorCode::BadParameters,
              "potential term through '" + qp.arrows[a].id + "' is not a cycle");
    }
  }
}

int path_target(const QuiverWithPotential& qp, const Path& p) {
  return p.arrows.empty() ? p.source : qp.arrows[p.arrows.back()].to;
}

std::string path_label(const QuiverWithPotential& qp, const Path& p) {
  if (p.arrows.empty()) return "e" + qp.vertices[p.source];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0) out += ' ';
    out += qp.arrows[p.arrows[i]].id;
  }
  return out;
}

std::vector<Relation> potential_relations(const QuiverWithPotential& qp) {
  validate(qp);
  std::vector<Relation> out;
  for (std::size_t a = 0; a < qp.arrows.size(); ++a) {
    Relation rel;
    rel.arrow = static_cast<int>(a);
    rel.source = qp.arrows[a].to;
    rel.target = qp.arrows[a].from;
    Combination combo;
    for (const PotentialTerm& term : qp.potential) {
      const std::size_t len = term.cycle.size();
      for (std::size_t p = 0; p < len; ++p) {
        if (term.cycle[p] != static_cast<int>(a)) continue;
        Path rest{rel.source, {}};
        for (std::size_t t = 1; t < len; ++t) rest.arrows.push_back(term.cycle[(p + t) % len]);
        combo[rest] += term.sign;
      }
    }
    for (auto& [path, coeff] : combo) {
      if (!is_zero(coeff)) rel.terms.emplace_back(coeff, path);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

int Algebra::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  require(it != vertices_.end(), ErrorCode::BadParameters, "unknown vertex '" + name + "'");
  return static_cast<int>(it - vertices_.begin());
}

const std::vector<Rational>& Algebra::compose(int i, int j, int l, int x, int y) const {
  auto it = comp_.find({i, j, l});
  if (it == comp_.end()) return zero_;
  return it->second[x][y];
}

Algebra Algebra::from_table(std::vector<std::string> vertices, std::vector<std::vector<std::vector<std::string>>> basis,
                            std::vector<std::vector<std::vector<int>>> degrees, std::vector<int> identity,
                            std::map<std::tuple<int, int, int>, Tensor> comp) {
  const std::size_t nv = vertices.size();
  require(basis.size() == nv && degrees.size() == nv && identity.size() == nv, ErrorCode::BadParameters,
          "table algebra has inconsistent vertex counts");
  Algebra a;
  a.vertices_ = std::move(vertices);
  a.basis_ = std::move(basis);
  a.degrees_ = std::move(degrees);
  a.identity_ = std::move(identity);
  for (std::size_t i = 0; i < nv; ++i) {
    require(a.basis_[i].size() == nv && a.degrees_[i].size() == nv, ErrorCode::BadParameters, "table row size");
    for (std::size_t j = 0; j < nv; ++j) {
      require(a.basis_[i][j].size() == a.degrees_[i][j].size(), ErrorCode::BadParameters, "degree table size");
    }
    require(a.identity_[i] >= 0 && a.identity_[i] < a.hom_dim(static_cast<int>(i), static_cast<int>(i)),
            ErrorCode::BadParameters, "identity index out of range");
  }
  for (auto& [key, tensor] : comp) {
    auto [i, j, l] = key;
    require(static_cast<int>(tensor.size()) == a.hom_dim(i, j), ErrorCode::BadParameters, "composition tensor shape");
    for (auto& row : tensor) {
      require(static_cast<int>(row.size()) == a.hom_dim(j, l), ErrorCode::BadParameters, "composition tensor shape");
      for (auto& coeffs : row) {
        if (coeffs.empty()) coeffs.assign(a.hom_dim(i, l), Rational(0));
        require(static_cast<int>(coeffs.size()) == a.hom_dim(i, l), ErrorCode::BadParameters, "composition tensor shape");
      }
    }
  }
  a.comp_ = std::move(comp);
  return a;
}

Algebra build_algebra(const QuiverWithPotential& qp, int cap) {
  std::vector<Relation> relations = potential_relations(qp);
  const int nv = static_cast<int>(qp.vertices.size());
  std::map<std::size_t, std::vector<const Relation*>> rel_by_degree;
  for (const Relation& r : relations) {
    if (r.terms.empty()) continue;
    const std::size_t d = r.terms.front().second.arrows.size();
    for (const auto& term : r.terms) {
      require(term.second.arrows.size() == d, ErrorCode::BadParameters,
              "relation for arrow '" + qp.arrows[r.arrow].id + "' is not homogeneous");
    }
    rel_by_degree[d].push_back(&r);
  }

  Engine engine{qp, {}};
  std::vector<Path> frontier;
  for (int v = 0; v < nv; ++v) frontier.push_back(Path{v, {}});
  std::map<std::pair<int, int>, std::vector<Combination>> generators;

  for (int d = 0;; ++d) {
    require(d <= cap, ErrorCode::NotFiniteDimensional,
            "quotient is still nonzero in degree " + std::to_string(cap));
    std::map<std::pair<int, int>, Block> blocks;
    for (const Path& p : frontier) {
      Block& b = blocks[{p.source, path_target(qp, p)}];
      b.index[p] = static_cast<int>(b.paths.size());
      b.paths.push_back(p);
    }
    for (const Relation* r : rel_by_degree[static_cast<std::size_t>(d)]) {
      Combination c;
      for (const auto& [coeff, path] : r->terms) c[path] += coeff;
      generators[{r->source, r->target}].push_back(std::move(c));
    }
    long long quotient_dim = 0;
    for (auto& [key, block] : blocks) {
      const int cols = static_cast<int>(block.paths.size());
      for (const Combination& c : generators[key]) {
        std::vector<Rational> row(cols, Rational(0));
        for (const auto& [path, coeff] : c) row[block.index.at(path)] += coeff;
        block.rows.push_back(std::move(row));
      }
      block.pivots = rref(block.rows, cols);
      std::set<int> pivot_set(block.pivots.begin(), block.pivots.end());
      for (int c = 0; c < cols; ++c) {
        if (!pivot_set.count(c)) block.basis_cols.push_back(c);
      }
      quotient_dim += static_cast<long long>(block.basis_cols.size());
    }
    if (quotient_dim == 0) break;

    // Ideal generators for the next degree: multiply the reduced basis of
    // this degree by one arrow on either side.
    generators.clear();
    for (const auto& [key, block] : blocks) {
      for (const auto& row : block.rows) {
        Combination c;
        for (std::size_t col = 0; col < row.size(); ++col) {
          if (!is_zero(row[col])) c[block.paths[col]] = row[col];
        }
        for (std::size_t a = 0; a < qp.arrows.size(); ++a) {
          const QPArrow& arr = qp.arrows[a];
          if (arr.to == key.first) {
            Combination left;
            for (const auto& [path, coeff] : c) left[concat(Path{arr.from, {static_cast<int>(a)}}, path)] = coeff;
            generators[{arr.from, key.second}].push_back(std::move(left));
          }
          if (arr.from == key.second) {
            Combination right;
            for (const auto& [path, coeff] : c) right[concat(path, Path{arr.from, {static_cast<int>(a)}})] = coeff;
            generators[{key.first, arr.to}].push_back(std::move(right));
          }
        }
      }
    }
    engine.degrees.push_back(std::move(blocks));

    std::vector<Path> next;
    for (const Path& p : frontier) {
      const int t = path_target(qp, p);
      for (std::size_t a = 0; a < qp.arrows.size(); ++a) {
        if (qp.arrows[a].from != t) continue;
        Path ext = p;
        ext.arrows.push_back(static_cast<int>(a));
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  Algebra alg;
  alg.vertices_ = qp.vertices;
  alg.basis_.assign(nv, std::vector<std::vector<std::string>>(nv));
  alg.degrees_.assign(nv, std::vector<std::vector<int>>(nv));
  alg.identity_.assign(nv, 0);
  // basis paths[i][j]: representatives of Hom(P_i, P_j), i.e. paths j -> i.
  std::vector<std::vector<std::vector<Path>>> reps(nv, std::vector<std::vector<Path>>(nv));
  // offset of each (degree, source, target) block inside its Hom basis
  std::map<std::tuple<std::size_t, int, int>, int> offset;
  for (std::size_t d = 0; d < engine.degrees.size(); ++d) {
    for (const auto& [key, block] : engine.degrees[d]) {
      const int i = key.second;
      const int j = key.first;
      offset[{d, key.first, key.second}] = static_cast<int>(reps[i][j].size());
      for (int col : block.basis_cols) {
        reps[i][j].push_back(block.paths[col]);
        alg.basis_[i][j].push_back(path_label(qp, block.paths[col]));
        alg.degrees_[i][j].push_back(static_cast<int>(d));
      }
    }
  }
  for (int i = 0; i < nv; ++i) {
    auto it = std::find(reps[i][i].begin(), reps[i][i].end(), Path{i, {}});
    alg.identity_[i] = static_cast<int>(it - reps[i][i].begin());
  }
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (reps[i][j].empty()) continue;
      for (int l = 0; l < nv; ++l) {
        if (reps[j][l].empty() || reps[i][l].empty()) continue;
        Algebra::Tensor tensor(reps[i][j].size(),
                               std::vector<std::vector<Rational>>(reps[j][l].size(),
                                                                  std::vector<Rational>(reps[i][l].size(), Rational(0))));
        bool nonzero = false;
        for (std::size_t x = 0; x < reps[i][j].size(); ++x) {
          for (std::size_t y = 0; y < reps[j][l].size(); ++y) {
            Path prod = concat(reps[j][l][y], reps[i][j][x]);
            std::vector<Rational> nf = engine.normal_form(prod);
            if (nf.empty()) continue;
            const int base = offset.at({prod.arrows.size(), l, i});
            for (std::size_t q = 0; q < nf.size(); ++q) {
              if (is_zero(nf[q])) continue;
              tensor[x][y][base + q] = nf[q];
              nonzero = true;
            }
          }
        }
        if (nonzero) alg.comp_[{i, j, l}] = std::move(tensor);
      }
    }
  }
  return alg;
}

bool check_associativity(const Algebra& a) {
  const int nv = a.vertex_count();
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      for (int l = 0; l < nv; ++l) {
        for (int t = 0; t < nv; ++t) {
          const int dij = a.hom_dim(i, j);
          const int djl = a.hom_dim(j, l);
          const int dlt = a.hom_dim(l, t);
          const int dit = a.hom_dim(i, t);
          if (dij == 0 || djl == 0 || dlt == 0 || dit == 0) continue;
          for (int x = 0; x < dij; ++x) {
            for (int y = 0; y < djl; ++y) {
              for (int z = 0; z < dlt; ++z) {
                // z o (y o x) versus (z o y) o x
                std::vector<Rational> lhs(dit, Rational(0));
                std::vector<Rational> rhs(dit, Rational(0));
                const auto& yx = a.compose(i, j, l, x, y);
                for (std::size_t q = 0; q < yx.size(); ++q) {
                  if (is_zero(yx[q])) continue;
                  const auto& part = a.compose(i, l, t, static_cast<int>(q), z);
                  for (std::size_t s = 0; s < part.size(); ++s) lhs[s] += yx[q] * part[s];
                }
                const auto& zy = a.compose(j, l, t, y, z);
                for (std::size_t q = 0; q < zy.size(); ++q) {
                  if (is_zero(zy[q])) continue;
                  const auto& part = a.compose(i, j, t, x, static_cast<int>(q));
                  for (std::size_t s = 0; s < part.size(); ++s) rhs[s] += zy[q] * part[s];
                }
                if (lhs != rhs) return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool check_identity_laws(const Algebra& a) {
  const int nv = a.vertex_count();
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      for (int x = 0; x < a.hom_dim(i, j); ++x) {
        std::vector<Rational> unit(a.hom_dim(i, j), Rational(0));
        unit[x] = 1;
        if (a.compose(i, i, j, a.identity(i), x) != unit) return false;
        if (a.compose(i, j, j, x, a.identity(j)) != unit) return false;
      }
    }
  }
  return true;
}

QuiverWithPotential triangle_potential_opposite(const Quiver& q, const std::vector<std::string>& names) {
  const Quiver mq = mutable_part(q);
  const int nv = mq.m;
  require(static_cast<int>(names.size()) >= nv, ErrorCode::BadParameters, "not enough vertex names");
  QuiverWithPotential qp;
  qp.vertices.assign(names.begin(), names.begin() + nv);
  std::map<std::pair<int, int>, int> arrow_of;  // opposite arrow (from, to)
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      require(mq.b[i][j] <= 1, ErrorCode::BadParameters, "triangle potentials need simple arrows");
      if (mq.b[i][j] == 1) {
        arrow_of[{j, i}] = static_cast<int>(qp.arrows.size());
        qp.arrows.push_back(QPArrow{names[j] + ">" + names[i], j, i});
      }
    }
  }
  // Oriented 3-cycles of the opposite quiver, each listed once.
  std::vector<std::vector<int>> triangles;
  for (const auto& [ab, x] : arrow_of) {
    for (const auto& [bc, y] : arrow_of) {
      if (bc.first != ab.second) continue;
      auto back = arrow_of.find({bc.second, ab.first});
      if (back == arrow_of.end()) continue;
      const int z = back->second;
      if (x < y && x < z) triangles.push_back({x, y, z});
    }
  }
  std::vector<std::vector<int>> containing(qp.arrows.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (int a : triangles[t]) containing[a].push_back(static_cast<int>(t));
  }
  std::vector<int> sign(triangles.size(), 0);
  for (std::size_t start = 0; start < triangles.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int a : triangles[t]) {
        for (int u : containing[a]) {
          if (u == t) continue;
          if (sign[u] == 0) {
            sign[u] = -sign[t];
            queue.push_back(u);
          }
          require(sign[u] == -sign[t], ErrorCode::BadParameters, "triangles cannot be signed consistently");
        }
      }
    }
  }
  for (std::size_t t = 0; t < triangles.size(); ++t) qp.potential.push_back(PotentialTerm{sign[t], triangles[t]});
  return qp;
}

}  // namespace grascat
