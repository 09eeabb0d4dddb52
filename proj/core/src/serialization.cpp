#include "greenlie/serialization.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace greenlie {

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw ParseError(msg);
}

const Json& field(const Json& doc, const char* key) {
  expect(doc.is_object(), "expected an object with field \"" + std::string(key) + "\"");
  auto it = doc.find(key);
  expect(it != doc.end(), "missing field \"" + std::string(key) + "\"");
  return *it;
}

std::size_t size_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  expect(v.is_number_unsigned(), "field \"" + std::string(key) +
                                     "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Rational scalar(const Json& v, const std::string& where) {
  expect(v.is_string(), where + ": scalars are strings like \"2\" or \"-1/3\"");
  return parse_rational(v.get<std::string>());
}

std::size_t index_value(const std::string& text, const std::string& where) {
  expect(!text.empty(), where + ": empty index");
  for (char ch : text)
    expect(ch >= '0' && ch <= '9', where + ": invalid index '" + text + "'");
  return std::stoull(text);
}

Json dump_morphism(const GreenLieMorphism& f) {
  Json doc = Json::object();
  doc["top"] = dump_matrix(f.top);
  doc["bottom"] = dump_matrix(f.bottom);
  return doc;
}

GreenLieMorphism load_morphism(const Json& doc, std::size_t top_rows, std::size_t top_cols,
                               std::size_t bottom_rows, std::size_t bottom_cols,
                               const std::string& name) {
  return GreenLieMorphism{load_matrix(field(doc, "top"), top_rows, top_cols, name + ".top"),
                          load_matrix(field(doc, "bottom"), bottom_rows, bottom_cols,
                                      name + ".bottom")};
}

std::string tuple_key(const std::vector<std::size_t>& tuple) {
  std::string key;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(tuple[i]);
  }
  return key;
}

Json dump_level(const AltMap& f) {
  TupleTable tuples(f.source_dim, f.degree);
  Json doc = Json::object();
  for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
    bool nonzero = false;
    for (std::size_t k = 0; k < f.module_dim && !nonzero; ++k)
      nonzero = !f.coeff[idx * f.module_dim + k].is_zero();
    if (!nonzero) continue;
    Json coords = Json::array();
    for (std::size_t k = 0; k < f.module_dim; ++k)
      coords.push_back(to_string(f.coeff[idx * f.module_dim + k]));
    doc[tuple_key(tuples[idx])] = coords;
  }
  return doc;
}

AltMap load_level(const Json& doc, std::size_t degree, std::size_t source_dim,
                  std::size_t module_dim, const std::string& name) {
  expect(doc.is_object(), name + ": cochain level must be an object keyed by index tuples");
  AltMap out = AltMap::zero(degree, source_dim, module_dim);
  TupleTable tuples(source_dim, degree);
  for (const auto& [key, value] : doc.items()) {
    std::vector<std::size_t> tuple;
    std::stringstream parts(key);
    std::string piece;
    while (std::getline(parts, piece, ','))
      tuple.push_back(index_value(piece, name + " key \"" + key + "\""));
    expect(tuple.size() == degree,
           name + " key \"" + key + "\": expected " + std::to_string(degree) + " indices");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      expect(tuple[i] < source_dim,
             name + " key \"" + key + "\": index out of range");
      expect(i == 0 || tuple[i - 1] < tuple[i],
             name + " key \"" + key + "\": indices must be strictly increasing");
    }
    expect(value.is_array() && value.size() == module_dim,
           name + " key \"" + key + "\": expected " + std::to_string(module_dim) +
               " module coordinates");
    std::size_t idx = tuples.index_of(tuple);
    for (std::size_t k = 0; k < module_dim; ++k)
      out.coeff[idx * module_dim + k] = scalar(value[k], name + " key \"" + key + "\"");
  }
  return out;
}

} // namespace

Json dump_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix load_matrix(const Json& doc, std::size_t rows, std::size_t cols,
                   const std::string& name) {
  expect(doc.is_array() && doc.size() == rows,
         name + ": expected " + std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = doc[r];
    expect(row.is_array() && row.size() == cols,
           name + " row " + std::to_string(r) + ": expected " + std::to_string(cols) +
               " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out.at(r, c) = scalar(row[c], name + " entry (" + std::to_string(r) + "," +
                                        std::to_string(c) + ")");
  }
  return out;
}

Json dump_lie_algebra(const LieAlgebra& g) {
  Json doc = Json::object();
  doc["dim"] = g.dim();
  doc["basis"] = g.basis_names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!g.c(i, j, k).is_zero()) coeffs[std::to_string(k)] = to_string(g.c(i, j, k));
      if (coeffs.empty()) continue;
      Json entry = Json::object();
      entry["i"] = i;
      entry["j"] = j;
      entry["coeffs"] = std::move(coeffs);
      brackets.push_back(std::move(entry));
    }
  doc["brackets"] = std::move(brackets);
  return doc;
}

LieAlgebra load_lie_algebra(const Json& doc) {
  std::size_t dim = size_field(doc, "dim");
  const Json& basis = field(doc, "basis");
  expect(basis.is_array() && (basis.empty() || basis.size() == dim),
         "field \"basis\" must list no names or one per basis vector");
  std::vector<std::string> names;
  for (const Json& n : basis) {
    expect(n.is_string(), "basis names must be strings");
    names.push_back(n.get<std::string>());
  }

  const Json& brackets = field(doc, "brackets");
  expect(brackets.is_array(), "field \"brackets\" must be an array");
  std::map<std::pair<std::size_t, std::size_t>, Vec> given;
  for (const Json& entry : brackets) {
    std::size_t i = size_field(entry, "i"), j = size_field(entry, "j");
    expect(i < dim && j < dim, "bracket entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") is out of range");
    const std::string where =
        "bracket (" + std::to_string(i) + "," + std::to_string(j) + ")";
    const Json& coeffs = field(entry, "coeffs");
    expect(coeffs.is_object(), where + ": \"coeffs\" must be an object");
    Vec v = zero_vec(dim);
    for (const auto& [key, value] : coeffs.items()) {
      std::size_t k = index_value(key, where);
      expect(k < dim, where + ": coefficient index " + key + " is out of range");
      v[k] = scalar(value, where);
    }
    if (i == j)
      expect(is_zero(v), where + ": a bracket with itself must vanish");
    auto [it, fresh] = given.emplace(std::make_pair(i, j), v);
    expect(fresh ? true : it->second == v, where + ": conflicting duplicate entry");
  }

  std::vector<Rational> structure(dim * dim * dim);
  for (const auto& [pair, v] : given) {
    auto [i, j] = pair;
    auto mirror = given.find({j, i});
    if (i != j && mirror != given.end()) {
      Vec negated = scaled(v, Rational(-1));
      expect(mirror->second == negated,
             "bracket (" + std::to_string(j) + "," + std::to_string(i) +
                 ") conflicts with the antisymmetric completion of (" +
                 std::to_string(i) + "," + std::to_string(j) + ")");
    }
    for (std::size_t k = 0; k < dim; ++k) {
      structure[(i * dim + j) * dim + k] = v[k];
      if (i != j) structure[(j * dim + i) * dim + k] = -v[k];
    }
  }
  return LieAlgebra::unchecked(dim, std::move(structure), std::move(names));
}

Json dump_functor(const GreenLieFunctor& g) {
  Json doc = Json::object();
  doc["p"] = g.p();
  doc["top"] = dump_lie_algebra(g.top());
  doc["bottom"] = dump_lie_algebra(g.bottom());
  doc["r"] = dump_matrix(g.r());
  doc["t"] = dump_matrix(g.t());
  doc["c"] = dump_matrix(g.c());
  return doc;
}

GreenLieFunctor load_functor(const Json& doc) {
  CpMackey mk;
  mk.p = size_field(doc, "p");
  LieAlgebra top = load_lie_algebra(field(doc, "top"));
  LieAlgebra bottom = load_lie_algebra(field(doc, "bottom"));
  mk.top_dim = top.dim();
  mk.bottom_dim = bottom.dim();
  mk.r = load_matrix(field(doc, "r"), mk.bottom_dim, mk.top_dim, "r");
  mk.t = load_matrix(field(doc, "t"), mk.top_dim, mk.bottom_dim, "t");
  mk.c = load_matrix(field(doc, "c"), mk.bottom_dim, mk.bottom_dim, "c");
  return GreenLieFunctor::unchecked(std::move(mk), std::move(top), std::move(bottom));
}

Json dump_bimodule(const LieBimodule& m) {
  Json doc = Json::object();
  doc["module_top_dim"] = m.top_dim();
  doc["module_bottom_dim"] = m.bottom_dim();
  doc["r"] = dump_matrix(m.underlying.r);
  doc["t"] = dump_matrix(m.underlying.t);
  doc["c"] = dump_matrix(m.underlying.c);
  Json action_top = Json::array();
  for (const Matrix& op : m.action_top.action) action_top.push_back(dump_matrix(op));
  doc["action_top"] = std::move(action_top);
  Json action_bottom = Json::array();
  for (const Matrix& op : m.action_bottom.action) action_bottom.push_back(dump_matrix(op));
  doc["action_bottom"] = std::move(action_bottom);
  if (m.bracket_top) doc["bracket_top"] = dump_lie_algebra(*m.bracket_top);
  if (m.bracket_bottom) doc["bracket_bottom"] = dump_lie_algebra(*m.bracket_bottom);
  return doc;
}

LieBimodule load_bimodule(const Json& doc, const GreenLieFunctor& L) {
  CpMackey mk;
  mk.p = L.p();
  mk.top_dim = size_field(doc, "module_top_dim");
  mk.bottom_dim = size_field(doc, "module_bottom_dim");
  mk.r = load_matrix(field(doc, "r"), mk.bottom_dim, mk.top_dim, "r");
  mk.t = load_matrix(field(doc, "t"), mk.top_dim, mk.bottom_dim, "t");
  mk.c = load_matrix(field(doc, "c"), mk.bottom_dim, mk.bottom_dim, "c");

  auto load_action = [&](const char* key, const LieAlgebra& algebra, std::size_t mdim) {
    const Json& ops = field(doc, key);
    expect(ops.is_array() && ops.size() == algebra.dim(),
           "field \"" + std::string(key) + "\" must hold one matrix per basis vector (" +
               std::to_string(algebra.dim()) + ")");
    Representation rho{algebra, mdim, {}};
    for (std::size_t i = 0; i < ops.size(); ++i)
      rho.action.push_back(
          load_matrix(ops[i], mdim, mdim, std::string(key) + "[" + std::to_string(i) + "]"));
    return rho;
  };
  Representation top_action = load_action("action_top", L.top(), mk.top_dim);
  Representation bottom_action = load_action("action_bottom", L.bottom(), mk.bottom_dim);
  LieBimodule out{std::move(mk), std::move(top_action), std::move(bottom_action),
                  std::nullopt, std::nullopt};
  if (doc.contains("bracket_top")) out.bracket_top = load_lie_algebra(doc["bracket_top"]);
  if (doc.contains("bracket_bottom"))
    out.bracket_bottom = load_lie_algebra(doc["bracket_bottom"]);
  return out;
}

Json dump_cochain(const EquivCochain& f) {
  Json doc = Json::object();
  doc["degree"] = f.degree;
  doc["top"] = dump_level(f.top);
  doc["bottom"] = dump_level(f.bottom);
  return doc;
}

EquivCochain load_cochain(const Json& doc, const GreenLieFunctor& L, const LieBimodule& M) {
  std::size_t degree = size_field(doc, "degree");
  return EquivCochain{
      degree, load_level(field(doc, "top"), degree, L.top_dim(), M.top_dim(), "top"),
      load_level(field(doc, "bottom"), degree, L.bottom_dim(), M.bottom_dim(), "bottom")};
}

Json dump_report(const ValidationReport& report) {
  Json doc = Json::object();
  doc["ok"] = report.ok();
  Json findings = Json::array();
  for (const Finding& f : report.findings()) {
    Json entry = Json::object();
    entry["check"] = f.check;
    entry["indices"] = f.indices;
    entry["detail"] = f.detail;
    findings.push_back(std::move(entry));
  }
  doc["findings"] = std::move(findings);
  return doc;
}

Json dump_cohomology(const GreenLieFunctor& L, const LieBimodule& M,
                     const CohomologyResult& h) {
  Json doc = Json::object();
  doc["degree"] = h.degree;
  doc["dim_top"] = h.dim_top;
  doc["dim_bottom"] = h.dim_bottom;
  Json reps = Json::array();
  for (const Vec& v : h.representatives_top)
    reps.push_back(dump_cochain(pair_to_cochain(L, M, h.degree, v)));
  doc["representatives"] = std::move(reps);
  Json reps_bottom = Json::array();
  for (const Vec& v : h.representatives_bottom)
    reps_bottom.push_back(
        dump_level(AltMap{h.degree, L.bottom_dim(), M.bottom_dim(), v}));
  doc["representatives_bottom"] = std::move(reps_bottom);
  doc["induced_r"] = dump_matrix(h.induced_r);
  doc["induced_t"] = dump_matrix(h.induced_t);
  doc["induced_c"] = dump_matrix(h.induced_c);
  return doc;
}

Json dump_product_table(const GreenLieFunctor& L, const LieBimodule& M,
                        const GradedCohomologyTable& table) {
  Json doc = Json::object();
  doc["max_degree"] = table.max_degree;
  Json groups = Json::array();
  for (const CohomologyResult& h : table.groups) groups.push_back(dump_cohomology(L, M, h));
  doc["groups"] = std::move(groups);
  Json products = Json::object();
  for (const GradedProductEntry& e : table.products) {
    Json entry = Json::object();
    entry["top"] = dump_matrix(e.top);
    entry["bottom"] = dump_matrix(e.bottom);
    entry["top_defect_entries"] = e.top_defect_entries;
    entry["bottom_defect_entries"] = e.bottom_defect_entries;
    products[std::to_string(e.m) + "," + std::to_string(e.n)] = std::move(entry);
  }
  doc["products"] = std::move(products);
  return doc;
}

Json dump_extension(const Extension& E, const EquivCochain* cocycle) {
  Json doc = dump_functor(E.B);
  doc["i"] = dump_morphism(E.i);
  doc["j"] = dump_morphism(E.j);
  if (E.s) {
    Json s = Json::object();
    s["top"] = dump_matrix(E.s->top);
    s["bottom"] = dump_matrix(E.s->bottom);
    doc["s"] = std::move(s);
  }
  doc["quotient"] = dump_functor(E.L);
  doc["module"] = dump_bimodule(E.M);
  Json provenance = Json::object();
  if (cocycle) {
    provenance["construction"] = "twisted direct sum by a degree-2 cocycle";
    provenance["cocycle"] = dump_cochain(*cocycle);
  } else {
    provenance["construction"] = "singular extension with abelian kernel";
  }
  doc["provenance"] = std::move(provenance);
  return doc;
}

Extension load_extension(const Json& doc) {
  GreenLieFunctor B = load_functor(doc);
  GreenLieFunctor L = load_functor(field(doc, "quotient"));
  LieBimodule M = load_bimodule(field(doc, "module"), L);
  GreenLieMorphism i = load_morphism(field(doc, "i"), B.top_dim(), M.top_dim(),
                                     B.bottom_dim(), M.bottom_dim(), "i");
  GreenLieMorphism j = load_morphism(field(doc, "j"), L.top_dim(), B.top_dim(),
                                     L.bottom_dim(), B.bottom_dim(), "j");
  std::optional<SectionPair> s;
  if (doc.contains("s")) {
    const Json& sd = doc["s"];
    s = SectionPair{load_matrix(field(sd, "top"), B.top_dim(), L.top_dim(), "s.top"),
                    load_matrix(field(sd, "bottom"), B.bottom_dim(), L.bottom_dim(),
                                "s.bottom")};
  }
  return Extension{std::move(L), std::move(M), std::move(B), std::move(i), std::move(j),
                   std::move(s)};
}

std::string render_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_document(const std::string& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PrecondError("OutputUnwritable", "cannot open \"" + path + "\" for writing");
  out << render_document(doc);
  if (!out) throw PrecondError("OutputUnwritable", "failed writing \"" + path + "\"");
}

} // namespace greenlie
