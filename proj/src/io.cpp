#include "weakhopf/io.hpp"

#include <fstream>
#include <sstream>

#include "weakhopf/zoo.hpp"

namespace weakhopf {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(Errc::ParseError, (path.empty() ? std::string("/") : path) + ": " + msg);
}

// message of e without its error-code prefix
std::string bare(const Error& e) {
  std::string m = e.what();
  std::string prefix = std::string(errc_name(e.code())) + ": ";
  return m.rfind(prefix, 0) == 0 ? m.substr(prefix.size()) : m;
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

Scalar scalar_at(Field f, const Json& j, const std::string& path) {
  try {
    return scalar_from_json(f, j);
  } catch (const Error& e) {
    fail(path, bare(e));
  }
}

const Json& array_of(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::size_t count_at(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

// n x m matrix from a nested array indexed [outer][inner...] via an index map.
Mat vector_at(Field f, const Json& j, std::size_t n, const std::string& path) {
  array_of(j, n, path);
  Mat v(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) v(i, 0) = scalar_at(f, j[i], at(path, i));
  return v;
}

Structure from_recipe(const Json& j, Field field, const std::string& path, const std::filesystem::path& base);

Structure load_at(const Json& j, Field field, const std::filesystem::path& base, const std::string& path) {
  if (j.is_string()) {
    std::filesystem::path p = base / j.get<std::string>();
    Json file = read_json_file(p);
    return structure_from_json(file);
  }
  if (j.is_object() && j.contains("example")) return from_recipe(j, field, path, base);
  if (j.is_object()) {
    try {
      return structure_from_json(j);
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError && !path.empty()) throw Error(Errc::ParseError, path + bare(e));
      throw;
    }
  }
  fail(path, "expected a file name, a recipe or a structure");
}

WeakHopfAlgebra as_hopf(const Structure& s) {
  if (s.antipode) return {s.wb, *s.antipode};
  return {s.wb, solve_antipode(s.wb)};
}

Structure from_recipe(const Json& j, Field field, const std::string& path, const std::filesystem::path& base) {
  if (j.contains("field")) field = field_from_json(j["field"]);
  std::string kind = string_at(member(j, "example", path), path + "/example");
  auto group = [&](const char* key) {
    std::string spec = string_at(member(j, key, path), path + "/" + key);
    try {
      return FiniteGroupTable::parse(spec);
    } catch (const Error& e) {
      throw Error(Errc::BadParams, std::string("group \"") + spec + "\": " + bare(e));
    }
  };
  auto wrap = [](const WeakHopfAlgebra& h) { return Structure{h.wb, h.antipode}; };
  if (kind == "groupoid") {
    const Json& g = member(j, "groups", path);
    GroupoidSpec spec;
    std::vector<std::string> names;
    if (g.is_string()) {
      names = split(g.get<std::string>(), ',');
    } else if (g.is_array()) {
      for (std::size_t i = 0; i < g.size(); ++i) names.push_back(string_at(g[i], at(path + "/groups", i)));
    } else {
      fail(path + "/groups", "expected a list of groups");
    }
    if (names.empty()) throw Error(Errc::BadParams, "groupoid needs at least one group");
    for (const auto& n : names) spec.push_back(FiniteGroupTable::parse(n));
    return wrap(build_groupoid_algebra(spec, field));
  }
  if (kind == "group") return wrap(build_group_algebra(group("group"), field));
  if (kind == "hg") {
    try {
      return wrap(build_HG(group("group"), field));
    } catch (const Error& e) {
      if (e.code() == Errc::BadCharacteristic || e.code() == Errc::NotAbelian) throw Error(Errc::BadParams, bare(e));
      throw;
    }
  }
  if (kind == "union") {
    const Json& parts = member(j, "parts", path);
    if (!parts.is_array() || parts.empty()) fail(path + "/parts", "expected a nonempty array");
    std::vector<WeakHopfAlgebra> hs;
    for (std::size_t i = 0; i < parts.size(); ++i)
      hs.push_back(as_hopf(load_at(parts[i], field, base, at(path + "/parts", i))));
    return wrap(build_disjoint_union(hs));
  }
  if (kind == "kaplansky") {
    Structure s = load_at(member(j, "of", path), field, base, path + "/of");
    try {
      return wrap(build_kaplansky(as_hopf(s)));
    } catch (const Error& e) {
      if (e.code() == Errc::NotHopf) throw Error(Errc::BadParams, bare(e));
      throw;
    }
  }
  if (kind == "dual") {
    Structure s = load_at(member(j, "of", path), field, base, path + "/of");
    Structure d{build_dual(s.wb), std::nullopt};
    if (s.antipode) d.antipode = s.antipode->transpose();
    return d;
  }
  throw Error(Errc::UnknownExample, "unknown example \"" + kind + "\"");
}

Mat action_matrix(Field f, const Json& j, std::size_t dh, std::size_t da, const std::string& path) {
  array_of(j, dh, path);
  Mat act(f, da, dh * da);
  for (std::size_t h = 0; h < dh; ++h) {
    array_of(j[h], da, at(path, h));
    for (std::size_t x = 0; x < da; ++x) {
      std::string p = at(at(path, h), x);
      array_of(j[h][x], da, p);
      for (std::size_t y = 0; y < da; ++y) act(y, h * da + x) = scalar_at(f, j[h][x][y], at(p, y));
    }
  }
  return act;
}

Mat coaction_matrix(Field f, const Json& j, std::size_t dh, std::size_t da, const std::string& path) {
  array_of(j, dh, path);
  Mat co(f, dh * da, dh);
  for (std::size_t h = 0; h < dh; ++h) {
    array_of(j[h], dh, at(path, h));
    for (std::size_t k = 0; k < dh; ++k) {
      std::string p = at(at(path, h), k);
      array_of(j[h][k], da, p);
      for (std::size_t x = 0; x < da; ++x) co(k * da + x, h) = scalar_at(f, j[h][k][x], at(p, x));
    }
  }
  return co;
}

MatchedPairData pair_at(const Json& j, Field field, const std::filesystem::path& base, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("field")) field = field_from_json(j["field"]);
  if (j.contains("kaplansky_of")) {
    MatchedPairData b = pair_at(j["kaplansky_of"], field, base, path + "/kaplansky_of");
    WeakHopfAlgebra bh{b.h(), b.s_h ? *b.s_h : solve_antipode(b.h())};
    WeakHopfAlgebra ba{b.a(), b.s_a ? *b.s_a : solve_antipode(b.a())};
    WeakHopfAlgebra kh, ka;
    try {
      kh = build_kaplansky(bh);
      ka = build_kaplansky(ba);
    } catch (const Error& e) {
      if (e.code() == Errc::NotHopf) throw Error(Errc::BadParams, bare(e));
      throw;
    }
    StructurePtr H = share(kh.wb), A = share(ka.wb);
    return make_matched_pair(kaplansky_action(b.act, H, A), kaplansky_coaction(b.co, H, A), kh.antipode,
                             ka.antipode);
  }
  Structure hs = load_at(member(j, "H", path), field, base, path + "/H");
  Structure as = load_at(member(j, "A", path), field, base, path + "/A");
  if (!(hs.wb.field() == as.wb.field())) throw Error(Errc::FieldMismatch, "H and A are over different fields");
  Field f = hs.wb.field();
  StructurePtr H = share(hs.wb);
  StructurePtr A = share(as.wb);
  if (hs.wb.alg.mult == as.wb.alg.mult && hs.wb.alg.unit == as.wb.alg.unit && hs.wb.coalg.comult == as.wb.coalg.comult &&
      hs.wb.coalg.counit == as.wb.coalg.counit)
    A = H;
  std::size_t dh = H->dim(), da = A->dim();

  const Json& aj = member(j, "action", path);
  ActionData act;
  if (aj.is_string()) {
    if (aj.get<std::string>() != "multiplication") fail(path + "/action", "unknown action \"" + aj.get<std::string>() + "\"");
    if (A != H) throw Error(Errc::BadParams, "the multiplication action needs A equal to H");
    act = multiplication_action(H);
  } else if (aj.is_object() && aj.contains("lambda")) {
    Mat lam = vector_at(f, aj["lambda"], dh, path + "/action/lambda").transpose();
    act = make_lambda_action(H, A, lam);
  } else {
    act = ActionData{H, A, action_matrix(f, aj, dh, da, path + "/action"), Side::Left};
  }

  const Json& cj = member(j, "coaction", path);
  CoactionData co;
  if (cj.is_string()) {
    if (cj.get<std::string>() != "comultiplication")
      fail(path + "/coaction", "unknown coaction \"" + cj.get<std::string>() + "\"");
    if (A != H) throw Error(Errc::BadParams, "the comultiplication coaction needs A equal to H");
    co = comultiplication_coaction(H);
  } else if (cj.is_object() && cj.contains("z")) {
    co = make_z_coaction(H, A, vector_at(f, cj["z"], da, path + "/coaction/z"));
  } else {
    co = CoactionData{H, A, coaction_matrix(f, cj, dh, da, path + "/coaction"), Side::Right};
  }
  return make_matched_pair(std::move(act), std::move(co), hs.antipode, as.antipode);
}

}  // namespace

WeakHopfAlgebra Structure::hopf() const {
  if (!antipode) throw Error(Errc::NoAntipode, "structure has no antipode");
  return {wb, *antipode};
}

Field field_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Field::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail("/field", bare(e));
    }
  }
  if (j.is_object() && j.contains("Fp")) {
    const Json& p = j["Fp"];
    if (!p.is_number_integer() || p.get<std::int64_t>() < 2) fail("/field/Fp", "expected a prime");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      fail("/field/Fp", bare(e));
    }
  }
  fail("/field", "expected \"Q\" or {\"Fp\": p}");
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  Json j;
  j["Fp"] = f.characteristic();
  return j;
}

Scalar scalar_from_json(Field f, const Json& j) {
  if (f.is_rational()) {
    if (j.is_number_integer()) return Scalar(f, j.get<std::int64_t>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw Error(Errc::ParseError, "expected an integer or a string \"a/b\"");
  }
  if (!j.is_number_integer()) throw Error(Errc::ParseError, "expected an integer residue");
  std::int64_t v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= f.characteristic())
    throw Error(Errc::ParseError, "residue " + std::to_string(v) + " is outside 0.." + std::to_string(f.characteristic() - 1));
  return Scalar(f, v);
}

Json scalar_to_json(const Scalar& s) {
  if (!s.field().is_rational()) return s.residue();
  if (s.is_small() && s.small_den() == 1) return s.small_num();
  return s.to_string();
}

Structure structure_from_json(const Json& j) {
  Field f = field_from_json(member(j, "field", ""));
  std::size_t n = count_at(member(j, "dim", ""), "/dim");
  if (n == 0) fail("/dim", "dimension must be positive");
  Structure s;
  WeakBialgebra& wb = s.wb;
  wb.alg.dim = wb.coalg.dim = n;
  wb.alg.mult = Mat(f, n, n * n);
  wb.coalg.comult = Mat(f, n * n, n);
  const Json& m = array_of(member(j, "mult", ""), n, "/mult");
  const Json& d = array_of(member(j, "comult", ""), n, "/comult");
  for (std::size_t i = 0; i < n; ++i) {
    array_of(m[i], n, at("/mult", i));
    array_of(d[i], n, at("/comult", i));
    for (std::size_t a = 0; a < n; ++a) {
      std::string pm = at(at("/mult", i), a), pd = at(at("/comult", i), a);
      array_of(m[i][a], n, pm);
      array_of(d[i][a], n, pd);
      for (std::size_t k = 0; k < n; ++k) {
        wb.alg.mult(k, i * n + a) = scalar_at(f, m[i][a][k], at(pm, k));
        wb.coalg.comult(a * n + k, i) = scalar_at(f, d[i][a][k], at(pd, k));
      }
    }
  }
  wb.alg.unit = vector_at(f, member(j, "unit", ""), n, "/unit");
  wb.coalg.counit = vector_at(f, member(j, "counit", ""), n, "/counit").transpose();
  if (j.contains("antipode")) {
    const Json& a = array_of(j["antipode"], n, "/antipode");
    Mat S(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      array_of(a[i], n, at("/antipode", i));
      for (std::size_t k = 0; k < n; ++k) S(k, i) = scalar_at(f, a[i][k], at(at("/antipode", i), k));
    }
    s.antipode = std::move(S);
  }
  if (j.contains("labels")) {
    const Json& l = array_of(j["labels"], n, "/labels");
    for (std::size_t i = 0; i < n; ++i) wb.labels.push_back(string_at(l[i], at("/labels", i)));
  } else {
    for (std::size_t i = 0; i < n; ++i) wb.labels.push_back("e" + std::to_string(i));
  }
  return s;
}

Json structure_to_json(const WeakBialgebra& wb, const std::optional<Mat>& antipode) {
  std::size_t n = wb.dim();
  Json j;
  j["field"] = field_to_json(wb.field());
  j["dim"] = n;
  Json mult = Json::array(), comult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json mi = Json::array(), di = Json::array();
    for (std::size_t a = 0; a < n; ++a) {
      Json mia = Json::array(), dia = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        mia.push_back(scalar_to_json(wb.alg.mult(k, i * n + a)));
        dia.push_back(scalar_to_json(wb.coalg.comult(a * n + k, i)));
      }
      mi.push_back(std::move(mia));
      di.push_back(std::move(dia));
    }
    mult.push_back(std::move(mi));
    comult.push_back(std::move(di));
  }
  j["mult"] = std::move(mult);
  Json unit = Json::array(), counit = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    unit.push_back(scalar_to_json(wb.alg.unit(i, 0)));
    counit.push_back(scalar_to_json(wb.coalg.counit(0, i)));
  }
  j["unit"] = std::move(unit);
  j["comult"] = std::move(comult);
  j["counit"] = std::move(counit);
  if (antipode) j["antipode"] = matrix_to_json(antipode->transpose());
  if (!wb.labels.empty()) j["labels"] = wb.labels;
  return j;
}

Structure structure_from_recipe(const Json& j, Field field) { return from_recipe(j, field, "", "."); }

Structure load_structure(const Json& j, Field field, const std::filesystem::path& base_dir) {
  return load_at(j, field, base_dir, "");
}

MatchedPairData pair_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return pair_at(j, Field::rationals(), base_dir, "");
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(Errc::ParseError, p.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, p.string() + ": " + e.what());
  }
}

Json report_to_json(const CheckReport& r) {
  Json out = Json::array();
  for (const auto& it : r.items()) {
    Json j;
    j["id"] = it.id;
    j["pass"] = it.pass;
    if (it.witness) j["witness"] = *it.witness;
    if (it.residual) {
      Json res = Json::array();
      for (const auto& s : *it.residual) res.push_back(scalar_to_json(s));
      j["residual"] = std::move(res);
    }
    out.push_back(std::move(j));
  }
  return out;
}

Json matrix_to_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace weakhopf
