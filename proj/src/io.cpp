#include "psg/io.hpp"

#include <fstream>
#include <sstream>

namespace psg {

namespace {

std::string dotted(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json& need(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError("missing field '" + dotted(path, key) + "'");
  return obj.at(key);
}

int need_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_number_integer())
    throw ParseError("field '" + dotted(path, key) + "' must be an integer");
  return v.get<int>();
}

Vec parse_vec(const json& arr, int length, int p, const std::string& path) {
  if (!arr.is_array())
    throw ParseError("field '" + path + "' must be an array of residues");
  if (static_cast<int>(arr.size()) != length)
    throw RangeError(path, "expected " + std::to_string(length) + " entries, got " +
                               std::to_string(arr.size()));
  Vec out;
  for (size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number_integer())
      throw ParseError("field '" + path + "[" + std::to_string(i) +
                       "]' must be an integer");
    int r = arr[i].get<int>();
    if (r < 0 || r >= p)
      throw RangeError(path + "[" + std::to_string(i) + "]",
                       "residue " + std::to_string(r) + " out of range mod " +
                           std::to_string(p));
    out.push_back(static_cast<uint8_t>(r));
  }
  return out;
}

Mat parse_mat(const json& arr, int length, int p, const std::string& path) {
  if (!arr.is_array())
    throw ParseError("field '" + path + "' must be an array of vectors");
  Mat out;
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_vec(arr[i], length, p, path + "[" + std::to_string(i) + "]"));
  return out;
}

FiniteAlgebra parse_algebra(const json& spec, int p, const std::string& path) {
  if (spec.is_string() && spec.get<std::string>() == "field")
    return field_algebra(p);
  if (!spec.is_object())
    throw ParseError("field '" + path +
                     "' must be \"field\" or an algebra description object");
  if (spec.contains("structure_constants")) {
    const json& sc = spec.at("structure_constants");
    if (!sc.is_array()) throw ParseError("field '" + dotted(path, "structure_constants") +
                                         "' must be a [d][d][d] array");
    int d = static_cast<int>(sc.size());
    std::vector<uint8_t> flat;
    flat.reserve(static_cast<size_t>(d) * d * d);
    for (int i = 0; i < d; ++i) {
      const json& row = sc[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw RangeError(dotted(path, "structure_constants"),
                         "expected a " + std::to_string(d) + "-cube");
      for (int j = 0; j < d; ++j) {
        Vec prod = parse_vec(row[j], d, p,
                             dotted(path, "structure_constants") + "[" +
                                 std::to_string(i) + "][" + std::to_string(j) + "]");
        flat.insert(flat.end(), prod.begin(), prod.end());
      }
    }
    FiniteAlgebra probe(p, d, flat, std::nullopt, {},
                        FiniteAlgebra::Check::SkipAssociativity);
    if (auto viol = probe.associativity_violation())
      throw RangeError(dotted(path, "structure_constants"),
                       "multiplication is not associative on basis triple (" +
                           std::to_string((*viol)[0]) + "," +
                           std::to_string((*viol)[1]) + "," +
                           std::to_string((*viol)[2]) + ")");
    return FiniteAlgebra(p, d, std::move(flat), find_identity(probe));
  }
  if (spec.contains("matrix")) {
    int n = need_int(spec, "matrix", path);
    if (n < 1 || n > 4) throw RangeError(dotted(path, "matrix"), "size must be 1..4");
    return matrix_algebra(p, n);
  }
  if (spec.contains("product")) {
    const json& factors = spec.at("product");
    if (!factors.is_array() || factors.empty())
      throw ParseError("field '" + dotted(path, "product") +
                       "' must be a non-empty array");
    std::vector<FiniteAlgebra> fs;
    for (size_t i = 0; i < factors.size(); ++i)
      fs.push_back(parse_algebra(factors[i], p,
                                 dotted(path, "product") + "[" + std::to_string(i) + "]"));
    return product_algebra(fs);
  }
  if (spec.contains("function_ring")) {
    const json& fr = spec.at("function_ring");
    int points = need_int(fr, "points", dotted(path, "function_ring"));
    if (points < 1)
      throw RangeError(dotted(path, "function_ring.points"), "must be positive");
    return function_algebra(points,
                            parse_algebra(need(fr, "coeff", dotted(path, "function_ring")),
                                          p, dotted(path, "function_ring.coeff")));
  }
  throw ParseError("field '" + path +
                   "' must contain one of structure_constants, matrix, product, "
                   "function_ring");
}

FiniteGroup parse_group(const json& spec, const std::string& path) {
  if (!spec.is_object())
    throw ParseError("field '" + path + "' must be a group description object");
  try {
    if (spec.contains("cyclic")) {
      int n = need_int(spec, "cyclic", path);
      if (n < 1 || n > 64) throw RangeError(dotted(path, "cyclic"), "order must be 1..64");
      return FiniteGroup::cyclic(n);
    }
    if (spec.contains("table")) {
      const json& t = spec.at("table");
      if (!t.is_array()) throw ParseError("field '" + dotted(path, "table") +
                                          "' must be a square array");
      std::vector<std::vector<int>> table;
      for (const auto& row : t) {
        if (!row.is_array())
          throw ParseError("field '" + dotted(path, "table") + "' rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
          if (!v.is_number_integer())
            throw ParseError("field '" + dotted(path, "table") +
                             "' entries must be integers");
          r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
      }
      return FiniteGroup::from_table(std::move(table));
    }
  } catch (const BadShape& e) {
    throw RangeError(path, e.what());
  }
  throw ParseError("field '" + path + "' must contain cyclic or table");
}

// Maps keyed by group-element index, "1".."n-1".
int parse_group_key(const std::string& key, const FiniteGroup& G,
                    const std::string& path) {
  int g;
  try {
    size_t pos = 0;
    g = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ParseError("field '" + path + "': key '" + key +
                     "' is not a group element index");
  }
  if (g < 0 || g >= G.order())
    throw RangeError(dotted(path, key), "group element index out of range");
  if (g == G.identity())
    throw RangeError(dotted(path, key),
                     "the identity element is implicit and must not be listed");
  return g;
}

PartialRingAction parse_ring_action(const json& block, FiniteGroup G, FiniteAlgebra A,
                                    const std::string& path) {
  int p = A.characteristic();
  int d = A.dim();
  const json& jdomains = need(block, "domains", path);
  const json& jmaps = need(block, "maps", path);
  if (!jdomains.is_object() || !jmaps.is_object())
    throw ParseError("fields '" + dotted(path, "domains") + "' and '" +
                     dotted(path, "maps") + "' must be objects keyed by group element");
  int n = G.order();
  std::vector<Mat> listed(n);           // domain basis exactly as listed
  std::vector<bool> have_domain(n, false);
  for (auto it = jdomains.begin(); it != jdomains.end(); ++it) {
    int g = parse_group_key(it.key(), G, dotted(path, "domains"));
    listed[g] = parse_mat(it.value(), d, p, dotted(path, "domains") + "." + it.key());
    have_domain[g] = true;
  }
  for (int g = 0; g < n; ++g)
    if (g != G.identity() && !have_domain[g])
      throw ParseError("field '" + dotted(path, "domains") + "' is missing element " +
                       std::to_string(g));
  std::vector<IdealHandle> domains;
  for (int g = 0; g < n; ++g) {
    if (g == G.identity()) {
      domains.push_back(IdealHandle{Subspace::full(p, d), true, true});
      continue;
    }
    Subspace s = Subspace::span(p, d, listed[g]);
    if (s.dim() != static_cast<int>(listed[g].size()))
      throw RangeError(dotted(path, "domains") + "." + std::to_string(g),
                       "listed basis is not linearly independent");
    domains.push_back(make_ideal(A, s));
  }
  // maps.<g> rows are the ambient images under alpha_g of the listed basis
  // of D_{g^-1}; re-express on the reduced basis actually stored.
  std::vector<std::optional<IdealIso>> maps(n);
  maps[G.identity()] = IdealIso::identity(A, domains[G.identity()]);
  for (int g = 0; g < n; ++g) {
    if (g == G.identity()) continue;
    std::string key = std::to_string(g);
    if (!jmaps.contains(key))
      throw ParseError("field '" + dotted(path, "maps") + "' is missing element " + key);
    int gi = G.inv(g);
    const Mat& src_listed = gi == G.identity()
                                ? mat_identity(d)
                                : listed[gi];
    Mat images = parse_mat(jmaps.at(key), d, p, dotted(path, "maps") + "." + key);
    if (images.size() != src_listed.size())
      throw RangeError(dotted(path, "maps") + "." + key,
                       "expected one image per basis vector of the domain of element " +
                           std::to_string(gi));
    // System matrix with the listed vectors as columns.
    Mat cols(d, Vec(src_listed.size(), 0));
    for (size_t c = 0; c < src_listed.size(); ++c)
      for (int r = 0; r < d; ++r) cols[r][c] = src_listed[c][r];
    Mat reduced_images;
    for (const auto& bv : domains[gi].space.basis()) {
      auto coeffs = solve(cols, bv, static_cast<int>(src_listed.size()), p);
      if (!coeffs)
        throw RangeError(dotted(path, "maps") + "." + key,
                         "listed basis does not span the domain");
      Vec img(d, 0);
      for (size_t c = 0; c < coeffs->size(); ++c)
        vec_axpy(img, (*coeffs)[c], images[c], p);
      reduced_images.push_back(std::move(img));
    }
    maps[g] = IdealIso(A, domains[gi], domains[g], std::move(reduced_images));
  }
  std::vector<IdealIso> flat;
  for (auto& m : maps) flat.push_back(std::move(*m));
  return PartialRingAction{std::move(G), std::move(A), std::move(domains),
                           std::move(flat)};
}

GlobalAction parse_global_action(const json& block, FiniteGroup G, FiniteAlgebra A,
                                 const std::string& path) {
  int p = A.characteristic();
  int d = A.dim();
  const json& jmaps = need(block, "maps", path);
  if (!jmaps.is_object())
    throw ParseError("field '" + dotted(path, "maps") +
                     "' must be an object keyed by group element");
  std::vector<Mat> ops(G.order(), mat_identity(d));
  std::vector<bool> have(G.order(), false);
  have[G.identity()] = true;
  for (auto it = jmaps.begin(); it != jmaps.end(); ++it) {
    int g = parse_group_key(it.key(), G, dotted(path, "maps"));
    Mat rows = parse_mat(it.value(), d, p, dotted(path, "maps") + "." + it.key());
    if (static_cast<int>(rows.size()) != d)
      throw RangeError(dotted(path, "maps") + "." + it.key(),
                       "expected one image per basis vector");
    Mat op(d, Vec(d, 0));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) op[c][r] = rows[r][c];
    ops[g] = std::move(op);
    have[g] = true;
  }
  for (int g = 0; g < G.order(); ++g)
    if (!have[g])
      throw ParseError("field '" + dotted(path, "maps") + "' is missing element " +
                       std::to_string(g));
  return GlobalAction{std::move(G), std::move(A), std::move(ops)};
}

SetPartialAction parse_set_action(const json& block, FiniteGroup G,
                                  const std::string& path) {
  int points = need_int(block, "points", path);
  if (points < 1 || points > 16)
    throw RangeError(dotted(path, "points"), "must be 1..16");
  const json& jsubsets = need(block, "subsets", path);
  const json& jtheta = need(block, "theta", path);
  if (!jsubsets.is_object() || !jtheta.is_object())
    throw ParseError("fields '" + dotted(path, "subsets") + "' and '" +
                     dotted(path, "theta") + "' must be objects keyed by group element");
  int n = G.order();
  std::vector<std::vector<int>> subsets(n), theta(n);
  std::vector<int> everything(points), id_map(points);
  for (int x = 0; x < points; ++x) everything[x] = id_map[x] = x;
  subsets[G.identity()] = everything;
  theta[G.identity()] = id_map;
  std::vector<bool> have(n, false);
  have[G.identity()] = true;
  for (auto it = jsubsets.begin(); it != jsubsets.end(); ++it) {
    int g = parse_group_key(it.key(), G, dotted(path, "subsets"));
    if (!it.value().is_array())
      throw ParseError("field '" + dotted(path, "subsets") + "." + it.key() +
                       "' must be an array of points");
    for (const auto& v : it.value()) {
      if (!v.is_number_integer())
        throw ParseError("field '" + dotted(path, "subsets") + "." + it.key() +
                         "' entries must be integers");
      int x = v.get<int>();
      if (x < 0 || x >= points)
        throw RangeError(dotted(path, "subsets") + "." + it.key(),
                         "point " + std::to_string(x) + " out of range");
      subsets[g].push_back(x);
    }
    have[g] = true;
  }
  for (int g = 0; g < n; ++g)
    if (!have[g])
      throw ParseError("field '" + dotted(path, "subsets") + "' is missing element " +
                       std::to_string(g));
  for (int g = 0; g < n; ++g) {
    if (g == G.identity()) continue;
    std::string key = std::to_string(g);
    if (!jtheta.contains(key))
      throw ParseError("field '" + dotted(path, "theta") + "' is missing element " + key);
    const json& arr = jtheta.at(key);
    if (!arr.is_array() || static_cast<int>(arr.size()) != points)
      throw RangeError(dotted(path, "theta") + "." + key,
                       "expected " + std::to_string(points) +
                           " entries (image point or -1)");
    for (const auto& v : arr) {
      if (!v.is_number_integer())
        throw ParseError("field '" + dotted(path, "theta") + "." + key +
                         "' entries must be integers");
      int y = v.get<int>();
      if (y < -1 || y >= points)
        throw RangeError(dotted(path, "theta") + "." + key,
                         "image " + std::to_string(y) + " out of range");
      theta[g].push_back(y);
    }
  }
  return SetPartialAction{points, std::move(G), std::move(subsets), std::move(theta)};
}

json serialize_algebra(const FiniteAlgebra& A) {
  json cube = json::array();
  for (int i = 0; i < A.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.dim(); ++j) {
      json prod = json::array();
      for (int k = 0; k < A.dim(); ++k) prod.push_back(A.constant(i, j, k));
      row.push_back(std::move(prod));
    }
    cube.push_back(std::move(row));
  }
  return json{{"structure_constants", std::move(cube)}};
}

json serialize_vec(const Vec& v) {
  json out = json::array();
  for (uint8_t x : v) out.push_back(static_cast<int>(x));
  return out;
}

json serialize_mat(const Mat& m) {
  json out = json::array();
  for (const auto& r : m) out.push_back(serialize_vec(r));
  return out;
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') { ++line; col = 1; } else ++col;
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  int schema = need_int(doc, "schema_version", "");
  if (schema != 1)
    throw RangeError("schema_version", "unsupported version " + std::to_string(schema));
  int p = need_int(doc, "characteristic", "");
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw RangeError("characteristic", "must be a small prime (2, 3, 5, or 7)");
  FiniteGroup G = parse_group(need(doc, "group", ""), "group");
  Guards guards;
  if (doc.contains("guards")) {
    const json& jg = doc.at("guards");
    if (!jg.is_object()) throw ParseError("field 'guards' must be an object");
    if (jg.contains("dim")) guards.dim = need_int(jg, "dim", "guards");
    if (jg.contains("pairs")) guards.pairs = need_int(jg, "pairs", "guards");
    if (guards.dim < 0 || guards.pairs == 0)
      throw RangeError("guards", "guards must be positive");
  }
  int blocks = doc.contains("ring_action") + doc.contains("global_action") +
               doc.contains("set_action");
  if (blocks != 1)
    throw ParseError(
        "exactly one of ring_action, global_action, set_action is required");
  if (doc.contains("set_action")) {
    return InstanceFile{parse_set_action(doc.at("set_action"), std::move(G),
                                         "set_action"),
                        guards};
  }
  FiniteAlgebra A = parse_algebra(need(doc, "algebra", ""), p, "algebra");
  if (doc.contains("ring_action"))
    return InstanceFile{parse_ring_action(doc.at("ring_action"), std::move(G),
                                          std::move(A), "ring_action"),
                        guards};
  return InstanceFile{parse_global_action(doc.at("global_action"), std::move(G),
                                          std::move(A), "global_action"),
                      guards};
}

InstanceFile parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

json serialize_instance(const InstanceFile& file) {
  json out;
  out["schema_version"] = 1;
  if (const auto* ra = std::get_if<PartialRingAction>(&file.instance)) {
    out["characteristic"] = ra->algebra.characteristic();
    out["group"] = json{{"table", ra->group.table()}};
    out["algebra"] = serialize_algebra(ra->algebra);
    json domains = json::object(), maps = json::object();
    for (int g = 0; g < ra->group.order(); ++g) {
      if (g == ra->group.identity()) continue;
      domains[std::to_string(g)] = serialize_mat(ra->domains[g].space.basis());
      maps[std::to_string(g)] = serialize_mat(ra->maps[g].images());
    }
    out["ring_action"] = json{{"domains", std::move(domains)}, {"maps", std::move(maps)}};
  } else if (const auto* ga = std::get_if<GlobalAction>(&file.instance)) {
    out["characteristic"] = ga->algebra.characteristic();
    out["group"] = json{{"table", ga->group.table()}};
    out["algebra"] = serialize_algebra(ga->algebra);
    json maps = json::object();
    int d = ga->algebra.dim();
    for (int g = 0; g < ga->group.order(); ++g) {
      if (g == ga->group.identity()) continue;
      Mat rows(d, Vec(d, 0));  // back to row-per-basis-image form
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rows[r][c] = ga->maps[g][c][r];
      maps[std::to_string(g)] = serialize_mat(rows);
    }
    out["global_action"] = json{{"maps", std::move(maps)}};
  } else {
    const auto& sa = std::get<SetPartialAction>(file.instance);
    out["characteristic"] = 2;  // set actions carry no coefficient ring
    out["group"] = json{{"table", sa.group.table()}};
    json subsets = json::object(), theta = json::object();
    for (int g = 0; g < sa.group.order(); ++g) {
      if (g == sa.group.identity()) continue;
      subsets[std::to_string(g)] = sa.subsets[g];
      theta[std::to_string(g)] = sa.theta[g];
    }
    out["set_action"] = json{{"points", sa.points},
                             {"subsets", std::move(subsets)},
                             {"theta", std::move(theta)}};
  }
  json guards;
  guards["dim"] = file.guards.dim;
  guards["pairs"] = file.guards.pairs;
  out["guards"] = std::move(guards);
  return out;
}

namespace {

bool algebras_equal(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.characteristic() != b.characteristic() || a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (a.constant(i, j, k) != b.constant(i, j, k)) return false;
  return true;
}

}  // namespace

bool instances_equal(const ParsedInstance& a, const ParsedInstance& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ra = std::get_if<PartialRingAction>(&a)) {
    const auto& rb = std::get<PartialRingAction>(b);
    if (ra->group.table() != rb.group.table()) return false;
    if (!algebras_equal(ra->algebra, rb.algebra)) return false;
    for (int g = 0; g < ra->group.order(); ++g) {
      if (!(ra->domains[g].space == rb.domains[g].space)) return false;
      if (ra->maps[g].images() != rb.maps[g].images()) return false;
    }
    return true;
  }
  if (const auto* ga = std::get_if<GlobalAction>(&a)) {
    const auto& gb = std::get<GlobalAction>(b);
    return ga->group.table() == gb.group.table() &&
           algebras_equal(ga->algebra, gb.algebra) && ga->maps == gb.maps;
  }
  const auto& sa = std::get<SetPartialAction>(a);
  const auto& sb = std::get<SetPartialAction>(b);
  return sa.points == sb.points && sa.group.table() == sb.group.table() &&
         sa.subsets == sb.subsets && sa.theta == sb.theta;
}

}  // namespace psg
