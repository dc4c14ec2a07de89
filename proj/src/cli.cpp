#include "grascat/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "grascat/braid.hpp"
#include "grascat/einv.hpp"
#include "grascat/error.hpp"
#include "grascat/hl.hpp"
#include "grascat/io.hpp"

namespace grascat {

namespace {

// "1 2 3/4 5 6/7 8 9" or a JSON array of rows.
std::vector<std::vector<int>> parse_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  const auto first = text.find_first_not_of(' ');
  if (first != std::string::npos && text[first] == '[') {
    try {
      return Json::parse(text).get<std::vector<std::vector<int>>>();
    } catch (const std::exception& e) {
      fail(ErrorCode::ParseError, std::string("bad tableau JSON: ") + e.what());
    }
  }
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, '/')) {
    std::stringstream in(row);
    std::vector<int> r;
    std::string tok;
    while (in >> tok) {
      try {
        r.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad tableau entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// "1,-5;1,-3" or "1,-5,2;..." with optional multiplicity.
DominantMonomial parse_monomial(const std::string& text, int k, int ell) {
  DominantMonomial m;
  m.k = k;
  m.ell = ell;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    if (part.find_first_not_of(' ') == std::string::npos) continue;
    std::vector<int> v;
    std::stringstream in(part);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad monomial factor '" + part + "'");
      }
    }
    require(v.size() == 2 || v.size() == 3, ErrorCode::ParseError, "factor must be i,s or i,s,multiplicity");
    m.factors[{v[0], v[1]}] += v.size() == 3 ? v[2] : 1;
  }
  validate(m);
  return m;
}

std::vector<std::vector<int>> parse_profile_text(const std::string& text, int n) {
  std::vector<std::vector<int>> out;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, '|')) out.push_back(parse_ksubset(n, part).elems);
  return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << line << '\n';
  }
  return out.str();
}

std::string join(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t q = 0; q < v.size(); ++q) {
    if (q > 0) s += ", ";
    s += std::to_string(v[q]);
  }
  return s + ")";
}

Json to_json(const EValueReport& r) {
  return Json{{"value", r.value},
              {"certified", r.certified},
              {"samples", r.samples},
              {"witness_sample", r.witness},
              {"field", r.field},
              {"status", r.certified ? "certified zero" : "high-confidence lower bound estimate"}};
}

Json to_json(const Verdict& v) {
  return Json{{"value", v.value}, {"conjectural", v.conjectural}, {"report", to_json(v.report)}};
}

Algebra algebra_for(const std::string& name, const Seed& seed) {
  if (name == "generated") {
    std::vector<std::string> names;
    for (const auto& t : seed.labels) {
      require(t.columns() == 1, ErrorCode::BadParameters, "generated algebras need one-column seed labels");
      names.push_back(label(make_ksubset(t.n, t.column(0))));
    }
    return build_algebra(triangle_potential_opposite(seed.quiver, names));
  }
  return build_algebra(qp_from_json(load_fixture(name)));
}

std::string default_algebra(const std::string& seed_name) {
  if (seed_name == "gr3_9") return "qp_gr39";
  if (seed_name == "gr4_8") return "qp_gr48";
  return "generated";
}

Json hom_table_json(const Algebra& a, const std::vector<std::string>& order) {
  Json dims = Json::array();
  for (const auto& r : order) {
    Json row = Json::array();
    for (const auto& c : order) row.push_back(a.hom_dim(a.vertex_index(r), a.vertex_index(c)));
    dims.push_back(row);
  }
  return Json{{"convention", "entry (r, c) is dim Hom(P_r, P_c)"}, {"vertices", order}, {"dims", dims}};
}

std::string hom_table_text(const Algebra& a, const std::vector<std::string>& order) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"Hom"};
  head.insert(head.end(), order.begin(), order.end());
  cells.push_back(head);
  for (const auto& r : order) {
    std::vector<std::string> row{r};
    for (const auto& c : order) row.push_back(std::to_string(a.hom_dim(a.vertex_index(r), a.vertex_index(c))));
    cells.push_back(row);
  }
  return render_table(cells);
}

struct Options {
  std::string format = "json";
  int k = 0;
  int n = 0;
  int ell = -1;
  std::string rows;
  std::string other;
  std::string op;
  std::string seed;
  std::string path;
  std::string file;
  std::string file2;
  std::string algebra;
  std::string field = "rational";
  std::string profile;
  std::string which;
  std::string monomial;
  std::string subset;
  int samples = 20;
  int workers = 1;
  int trials = 100;
  int index = 0;
  int i = 0;
  int j = 0;
  int m = 0;
  int m2 = 0;
  int v = 0;
  int v2 = 0;
  int max_depth = 6;
  int max_seeds = 2000;
  long long rng_seed = -1;
};

int require_n(const Options& o) {
  if (o.n > 0) return o.n;
  require(o.ell >= 0, ErrorCode::BadParameters, "give --n or --ell");
  return o.k + o.ell + 1;
}

Tableau tableau_option(const Options& o, const std::string& rows) {
  require(!rows.empty(), ErrorCode::BadParameters, "missing --rows");
  return make_tableau(o.k, require_n(o), parse_rows(rows));
}

void cmd_tableau(const Options& o, std::ostream& out) {
  const int n = o.op == "from-monomial" ? 0 : require_n(o);
  Json j;
  if (o.op == "reduce") {
    const Tableau t = tableau_option(o, o.rows);
    j = Json{{"input", to_json(t)}, {"reduced", to_json(reduce(t))}, {"trivial_columns", trivial_factor_size(t)}};
  } else if (o.op == "monomial") {
    const Tableau t = tableau_option(o, o.rows);
    const DominantMonomial m = tableau_to_monomial(t);
    j = Json{{"monomial", to_json(m)}, {"text", to_string(m)}};
  } else if (o.op == "from-monomial") {
    require(o.ell >= 0 || o.n > 0, ErrorCode::BadParameters, "give --ell or --n");
    const int ell = o.ell >= 0 ? o.ell : o.n - o.k - 1;
    const DominantMonomial m = parse_monomial(o.monomial, o.k, ell);
    j = Json{{"monomial", to_string(m)}, {"tableau", to_json(monomial_to_tableau(m))}};
  } else if (o.op == "promote") {
    j = Json{{"promotion", to_json(promote(tableau_option(o, o.rows)))}};
  } else if (o.op == "bk") {
    j = Json{{"bender_knuth", to_json(bender_knuth(tableau_option(o, o.rows), o.i))}};
  } else if (o.op == "compare") {
    j = Json{{"dominance", to_string(dominance_compare(tableau_option(o, o.rows), tableau_option(o, o.other)))}};
  } else if (o.op == "union") {
    j = Json{{"union", to_json(tableau_union(tableau_option(o, o.rows), tableau_option(o, o.other)))}};
  } else if (o.op == "quotient") {
    j = Json{{"quotient", to_json(tableau_quotient(tableau_option(o, o.rows), tableau_option(o, o.other)))}};
  } else {
    fail(ErrorCode::BadParameters, "unknown tableau operation '" + o.op + "'");
  }
  (void)n;
  out << j.dump(2) << '\n';
}

Seed seed_option(const Options& o) {
  if (!o.file.empty()) return seed_from_json(load_json_file(o.file));
  if (!o.seed.empty()) return named_seed(o.seed);
  return grassmannian_initial_seed(o.k, require_n(o));
}

void cmd_seed(const Options& o, std::ostream& out) {
  Seed s = seed_option(o);
  if (o.op == "show") {
    out << to_json(s).dump(2) << '\n';
  } else if (o.op == "mutate") {
    std::string path = o.path;
    std::replace(path.begin(), path.end(), ',', ' ');
    std::stringstream in(path);
    int v = 0;
    while (in >> v) s = mutate_seed(s, v);
    out << to_json(s).dump(2) << '\n';
  } else if (o.op == "explore") {
    const ExploreResult r = explore(s, o.max_depth, o.max_seeds);
    Json vars = Json::array();
    for (const auto& [t, g] : r.variables) vars.push_back(Json{{"tableau", to_json(t)}, {"g", g.coords}});
    out << Json{{"seeds_visited", r.seeds_visited},
                {"budget_exceeded", r.budget_exceeded},
                {"variable_count", r.variables.size()},
                {"variables", vars}}
               .dump(2)
        << '\n';
  } else {
    fail(ErrorCode::BadParameters, "unknown seed operation '" + o.op + "'");
  }
}

void cmd_gvec(const Options& o, std::ostream& out) {
  const Seed s = o.seed.empty() ? grassmannian_initial_seed(o.k, require_n(o)) : named_seed(o.seed);
  const Tableau t = make_tableau(s.k(), s.n(), parse_rows(o.rows));
  const GVector g = g_vector(t, s);
  if (o.format == "table") {
    out << join(g.coords) << '\n';
    return;
  }
  Json j = to_json(g, s);
  j["tableau"] = to_json(t);
  j["cone"] = to_json(cone_presentation(g, s));
  out << j.dump(2) << '\n';
}

GVector gvector_option(const Options& o, const std::string& file, const std::string& rows) {
  if (!file.empty()) return gvector_from_json(load_json_file(file));
  require(!rows.empty(), ErrorCode::BadParameters, "give --g FILE or --rows");
  const Seed s = o.seed.empty() ? grassmannian_initial_seed(o.k, require_n(o)) : named_seed(o.seed);
  return g_vector(make_tableau(s.k(), s.n(), parse_rows(rows)), s);
}

void cmd_einv(const Options& o, std::ostream& out) {
  const GVector g = gvector_option(o, o.file, o.rows);
  require(!g.seed_name.empty(), ErrorCode::BadParameters, "the g-vector names no seed");
  const Seed s = named_seed(g.seed_name);
  const Algebra a = algebra_for(o.algebra.empty() ? default_algebra(g.seed_name) : o.algebra, s);
  SamplingOptions opt;
  opt.samples = o.samples;
  opt.field = field_from_string(o.field);
  opt.workers = o.workers;
  opt.master_seed = o.rng_seed >= 0 ? static_cast<std::uint64_t>(o.rng_seed) : master_seed_from_env();
  Json j{{"g", g.coords}, {"seed", g.seed_name}, {"conjectural_predicates", true}};
  const bool pair = !o.file2.empty() || !o.other.empty();
  if (pair) {
    const GVector h = gvector_option(o, o.file2, o.other);
    j["h"] = h.coords;
    j["e_pair"] = to_json(generic_e_pair(g, h, s, a, opt));
    j["compatible"] = to_json(are_compatible(g, h, s, a, opt));
    j["exchange_pair"] = to_json(is_exchange_pair(g, h, s, a, opt));
  } else {
    const Verdict real = is_real_g(g, s, a, opt);
    j["e"] = to_json(real.report);
    j["real"] = to_json(real);
  }
  if (o.format == "table") {
    const Json& r = pair ? j["e_pair"] : j["e"];
    out << (pair ? "e(g,h) = " : "e(g) = ") << r["value"].get<int>() << "  ["
        << r["status"].get<std::string>() << ", " << r["samples"].get<int>() << " samples, "
        << r["field"].get<std::string>() << "]\n";
    return;
  }
  out << j.dump(2) << '\n';
}

std::string kgrid_text(int k, int ell) {
  std::vector<std::vector<std::string>> cells;
  for (int r = 1; r <= ell + 1; ++r) {
    std::vector<std::string> row;
    for (int i = 1; i <= k - 1; ++i) row.push_back(kr_subset_notation(i, i % 2 == 1 ? -2 * r : -2 * r + 1, k, ell));
    cells.push_back(row);
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c > 0 ? " & " : "") << row[c];
    out << '\n';
  }
  return out.str();
}

Json kgrid_json(int k, int ell) {
  Json rows = Json::array();
  for (int r = 1; r <= ell + 1; ++r) {
    Json row = Json::array();
    for (int i = 1; i <= k - 1; ++i) {
      const int m = i % 2 == 1 ? -2 * r : -2 * r + 1;
      row.push_back(Json{{"i", i}, {"m", m}, {"subset", label(kr_subset(i, m, k, ell))},
                         {"intervals", kr_subset_notation(i, m, k, ell)}});
    }
    rows.push_back(row);
  }
  return Json{{"k", k}, {"ell", ell}, {"rows", rows}};
}

void cmd_hl(const Options& o, std::ostream& out) {
  require(o.ell >= 0, ErrorCode::BadParameters, "missing --ell");
  const int n = o.k + o.ell + 1;
  Json j;
  if (o.op == "kr") {
    j = Json{{"subset", label(kr_subset(o.i, o.m, o.k, o.ell))}, {"intervals", kr_subset_notation(o.i, o.m, o.k, o.ell)}};
  } else if (o.op == "kernel") {
    const KSubset s = kernel_subset(o.i, o.m, o.v, o.k, o.ell);
    j = Json{{"kernel_subset", label(s)}, {"tau", label(tau_kernel_subset(o.i, o.m, o.v, o.k, n))}};
  } else if (o.op == "compat") {
    SamplingOptions opt;
    opt.samples = o.samples;
    opt.field = field_from_string(o.field);
    opt.workers = o.workers;
    opt.master_seed = o.rng_seed >= 0 ? static_cast<std::uint64_t>(o.rng_seed) : master_seed_from_env();
    j = to_json(kr_compatible(o.v, o.m, o.i, o.v2, o.m2, o.j, o.k, o.ell, opt));
  } else if (o.op == "grid") {
    if (o.format == "table") {
      out << kgrid_text(o.k, o.ell);
      return;
    }
    j = kgrid_json(o.k, o.ell);
  } else if (o.op == "sequence") {
    Json seq = Json::array();
    for (auto [i, a] : hl_mutation_sequence(o.k, o.ell)) seq.push_back({i, a});
    j = Json{{"sequence", seq}};
  } else if (o.op == "quiver") {
    j = Json{{"q_ell", to_json(q_ell_quiver(o.k, o.ell))}, {"gamma", to_json(gamma_quiver(o.k, -2 * o.ell - 2))}};
  } else if (o.op == "qp") {
    const Seed s = gamma_seed(o.k, o.ell);
    std::vector<std::string> names;
    for (const auto& t : s.labels) names.push_back(label(make_ksubset(n, t.column(0))));
    j = to_json(triangle_potential_opposite(s.quiver, names));
    j["k"] = o.k;
    j["ell"] = o.ell;
    j["hom_convention"] = "Hom(P_i, P_j) is spanned by the paths from j to i";
  } else {
    fail(ErrorCode::BadParameters, "unknown hl operation '" + o.op + "'");
  }
  out << j.dump(2) << '\n';
}

Json tuple_json(const VectorTuple<Rational>& t) {
  Json vecs = Json::array();
  for (const auto& v : t.vectors) {
    Json col = Json::array();
    for (const auto& x : v) col.push_back(to_string(x));
    vecs.push_back(col);
  }
  return Json{{"k", t.k}, {"n", t.n}, {"field", "rational"}, {"vectors", vecs}};
}

VectorTuple<Rational> tuple_from_json(const Json& j) {
  VectorTuple<Rational> t;
  t.k = j.at("k").get<int>();
  t.n = j.at("n").get<int>();
  for (const auto& v : j.at("vectors")) {
    std::vector<Rational> col;
    for (const auto& x : v) col.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
    for (auto& x : col) x.canonicalize();
    t.vectors.push_back(col);
  }
  check_shape(t);
  return t;
}

void cmd_braid(const Options& o, std::ostream& out) {
  if (o.op == "check") {
    const std::uint64_t master = o.rng_seed >= 0 ? static_cast<std::uint64_t>(o.rng_seed) : master_seed_from_env();
    std::map<std::string, std::pair<int, int>> tally;
    int generic = 0;
    for (int s = 0; s < o.trials; ++s) {
      const BraidReport r = braid_property_check(random_rational_tuple(o.k, o.n, master, s));
      generic += r.generic_preserved ? 1 : 0;
      for (const auto& v : r.verdicts) {
        auto& slot = tally[v.relation + "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")"];
        slot.first += v.exact ? 1 : 0;
        slot.second += v.projective ? 1 : 0;
      }
    }
    Json rel = Json::object();
    for (const auto& [name, c] : tally) rel[name] = Json{{"exact", c.first}, {"projective", c.second}};
    out << Json{{"k", o.k}, {"n", o.n}, {"d", braid_period(o.k, o.n)}, {"trials", o.trials},
                {"generic_preserved", generic}, {"relations", rel}}
               .dump(2)
        << '\n';
  } else if (o.op == "apply") {
    VectorTuple<Rational> t = tuple_from_json(load_json_file(o.file));
    out << tuple_json(sigma(o.i, t)).dump(2) << '\n';
  } else if (o.op == "shift") {
    out << tuple_json(twisted_shift(tuple_from_json(load_json_file(o.file)))).dump(2) << '\n';
  } else {
    fail(ErrorCode::BadParameters, "unknown braid operation '" + o.op + "'");
  }
}

void cmd_profile(const Options& o, std::ostream& out) {
  const int n = require_n(o);
  if (o.op == "check") {
    const Seed s = grassmannian_initial_seed(o.k, n);
    const Tableau t = make_tableau(o.k, n, parse_rows(o.rows));
    const Profile p = make_profile(o.k, n, parse_profile_text(o.profile, n));
    const ConePresentation cp = cone_presentation(g_vector(t, s), s);
    out << Json{{"profile", to_string(p)}, {"cone", to_json(cp)}, {"balanced", profile_balance_check(p, cp)}}.dump(2)
        << '\n';
  } else if (o.op == "tau") {
    const KSubset s = parse_ksubset(n, o.subset);
    out << Json{{"subset", label(s)}, {"tau", label(tau_two_interval(s))},
                {"tau_inverse", label(tau_inverse_two_interval(s))}}
               .dump(2)
        << '\n';
  } else if (o.op == "shift") {
    out << Json{{"shifted", to_string(cyclic_shift_profile(make_profile(o.k, n, parse_profile_text(o.profile, n)),
                                                         o.i))}}
               .dump(2)
        << '\n';
  } else {
    fail(ErrorCode::BadParameters, "unknown profile operation '" + o.op + "'");
  }
}

void cmd_reference_tables(const Options& o, std::ostream& out) {
  const bool text = o.format == "table";
  if (o.which == "hom39" || o.which == "hom48") {
    const bool first = o.which == "hom39";
    const Algebra a = build_algebra(qp_from_json(load_fixture(first ? "qp_gr39" : "qp_gr48")));
    const std::vector<std::string> order = first ? std::vector<std::string>{"125", "126", "134", "128", "156", "167"}
                                                 : std::vector<std::string>{"1236", "1245", "1267", "1456"};
    if (text) {
      out << hom_table_text(a, order);
    } else {
      out << hom_table_json(a, order).dump(2) << '\n';
    }
  } else if (o.which == "kgrid") {
    if (text) {
      out << kgrid_text(5, 3);
    } else {
      out << kgrid_json(5, 3).dump(2) << '\n';
    }
  } else if (o.which == "gvectors") {
    const Json d = load_fixture("printed_gvectors");
    Json list = Json::array();
    std::vector<std::vector<std::string>> cells;
    for (const auto& e : d.at("entries")) {
      const int k = e.at("k").get<int>(), n = e.at("n").get<int>();
      const Seed s = grassmannian_initial_seed(k, n);
      const GVector g = g_vector(make_tableau(k, n, e.at("tableau").get<std::vector<std::vector<int>>>()), s);
      list.push_back(Json{{"name", e.at("name")}, {"g", g.coords}});
      cells.push_back({e.at("name").get<std::string>(), join(g.coords)});
    }
    if (text) {
      for (const auto& c : cells) out << c[0] << ' ' << c[1] << '\n';
    } else {
      out << Json{{"gvectors", list}}.dump(2) << '\n';
    }
  } else {
    fail(ErrorCode::BadParameters, "unknown table '" + o.which + "' (hom39, hom48, kgrid, gvectors)");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in Grassmannian cluster categories", "grascat"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_kn = [&](CLI::App* c) {
    c->add_option("--k", o.k, "rows / subset size");
    c->add_option("--n", o.n, "ambient size");
    c->add_option("--ell", o.ell, "level l with n = k + l + 1");
  };
  auto add_sampling = [&](CLI::App* c) {
    c->add_option("--samples", o.samples, "number of random maps")->check(CLI::PositiveNumber);
    c->add_option("--field", o.field, "rational or prime")->check(CLI::IsMember({"rational", "prime"}));
    c->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--rng-seed", o.rng_seed, "master seed (overrides GRASCAT_SEED)");
  };

  auto* tab = app.add_subcommand("tableau", "tableau operations");
  tab->add_option("op", o.op, "reduce, monomial, from-monomial, promote, bk, compare, union, quotient")->required();
  add_kn(tab);
  tab->add_option("--rows", o.rows, "rows such as \"1 2 3/4 5 6/7 8 9\"");
  tab->add_option("--other", o.other, "second tableau");
  tab->add_option("--i", o.i, "Bender-Knuth index");
  tab->add_option("--monomial", o.monomial, "factors i,s[,mult] separated by ';'");
  tab->callback([&] { action = [&] { cmd_tableau(o, out); }; });

  auto* seed = app.add_subcommand("seed", "seeds and mutation");
  seed->add_option("op", o.op, "show, mutate, explore")->required();
  add_kn(seed);
  seed->add_option("--name", o.seed, "named seed such as gr3_9");
  seed->add_option("--input", o.file, "seed JSON file");
  seed->add_option("--path", o.path, "vertex indices to mutate at, in order, such as \"0 4 6\" or 0,4,6");
  seed->add_option("--max-depth", o.max_depth, "exploration depth");
  seed->add_option("--max-seeds", o.max_seeds, "exploration budget");
  seed->callback([&] { action = [&] { cmd_seed(o, out); }; });

  auto* gvec = app.add_subcommand("gvec", "g-vector of a tableau");
  add_kn(gvec);
  add_format(gvec);
  gvec->add_option("--seed", o.seed, "named seed (default: initial seed of Gr(k,n))");
  gvec->add_option("--rows", o.rows, "tableau rows")->required();
  gvec->callback([&] { action = [&] { cmd_gvec(o, out); }; });

  auto* einv = app.add_subcommand("einv", "generic E-invariants");
  add_kn(einv);
  add_format(einv);
  add_sampling(einv);
  einv->add_option("--g", o.file, "g-vector JSON file");
  einv->add_option("--g2", o.file2, "second g-vector JSON file");
  einv->add_option("--rows", o.rows, "tableau whose g-vector is used");
  einv->add_option("--other", o.other, "second tableau");
  einv->add_option("--seed", o.seed, "named seed for --rows");
  einv->add_option("--algebra", o.algebra, "fixture name or 'generated'");
  einv->callback([&] { action = [&] { cmd_einv(o, out); }; });

  auto* hl = app.add_subcommand("hl", "Hernandez-Leclerc subsets and quivers");
  hl->add_option("op", o.op, "kr, kernel, compat, grid, sequence, quiver, qp")->required();
  add_kn(hl);
  add_format(hl);
  add_sampling(hl);
  hl->add_option("--i", o.i, "Dynkin index");
  hl->add_option("--m", o.m, "level");
  hl->add_option("--v", o.v, "kernel length");
  hl->add_option("--j", o.j, "second Dynkin index");
  hl->add_option("--m2", o.m2, "second level");
  hl->add_option("--v2", o.v2, "second kernel length");
  hl->callback([&] { action = [&] { cmd_hl(o, out); }; });

  auto* braid = app.add_subcommand("braid", "braid group action on vector tuples");
  braid->add_option("op", o.op, "check, apply, shift")->required();
  add_kn(braid);
  braid->add_option("--trials", o.trials, "random tuples")->check(CLI::PositiveNumber);
  braid->add_option("--seed", o.rng_seed, "master seed (overrides GRASCAT_SEED)");
  braid->add_option("--input", o.file, "tuple JSON file");
  braid->add_option("--i", o.i, "generator index");
  braid->callback([&] { action = [&] { cmd_braid(o, out); }; });

  auto* prof = app.add_subcommand("profile", "profiles and rank-one modules");
  prof->add_option("op", o.op, "check, tau, shift")->required();
  add_kn(prof);
  prof->add_option("--rows", o.rows, "tableau rows");
  prof->add_option("--profile", o.profile, "factors top to bottom such as 369|258|147");
  prof->add_option("--subset", o.subset, "k-subset such as 3678");
  prof->add_option("--by", o.i, "cyclic shift amount");
  prof->callback([&] { action = [&] { cmd_profile(o, out); }; });

  auto* tables = app.add_subcommand("paper-tables", "regenerate the reference tables");
  tables->add_option("--which", o.which, "hom39, hom48, kgrid, gvectors")->required();
  add_format(tables);
  tables->callback([&] { action = [&] { cmd_reference_tables(o, out); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    out << Json{{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}}.dump(2) << '\n';
    return 1;
  } catch (const std::exception& e) {
    out << Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump(2) << '\n';
    return 1;
  }
}

}  // namespace grascat
