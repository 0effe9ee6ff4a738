#include "dgsep/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "dgsep/demos.hpp"
#include "dgsep/examples.hpp"

namespace dgsep {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing key '") + key + "'");
  return doc.at(key);
}

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(std::string(what) + ": " + e.what());
  } catch (const DivisionByZero&) {
    fail(std::string(what) + ": zero denominator");
  }
}

Scalar parseNumber(const Json& v, std::uint32_t p) {
  if (v.is_number_integer()) return Scalar(v.get<long>()).in(p);
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), p);
  fail("coefficient must be an integer or a string");
}

Json number(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

int parseLabel(const Json& k, const GradedBasis& basis) {
  if (k.is_number_integer()) {
    int i = k.get<int>();
    if (i < 0 || i >= basis.size()) fail("label index " + std::to_string(i) + " out of range");
    return i;
  }
  if (k.is_string()) return basis.indexOf(k.get<std::string>());
  fail("label must be an index or a name");
}

GradedBasis parseBasis(const Json& doc, std::optional<int> period) {
  const Json& list = require(doc, "basis");
  if (!list.is_array()) fail("basis must be a list");
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (const auto& entry : list) {
    if (entry.is_array() && entry.size() == 2) {
      labels.push_back(entry[0].get<std::string>());
      degrees.push_back(entry[1].get<int>());
    } else {
      labels.push_back(require(entry, "label").get<std::string>());
      degrees.push_back(require(entry, "degree").get<int>());
    }
  }
  return GradedBasis(labels, degrees, period);
}

Json basisToJson(const GradedBasis& b) {
  Json out = Json::array();
  for (int i = 0; i < b.size(); ++i) out.push_back({{"label", b.label(i)}, {"degree", b.degree(i)}});
  return out;
}

/// One vector per label, from a list or from an object keyed by label.
std::vector<GradedVector> parseLabelVectors(const Json& doc, const GradedBasis& source, const GradedBasis& target,
                                            std::uint32_t p, const char* what) {
  std::vector<GradedVector> out(static_cast<std::size_t>(source.size()));
  if (doc.is_null()) return out;
  if (doc.is_array()) {
    if (static_cast<int>(doc.size()) != source.size())
      fail(std::string(what) + ": expected " + std::to_string(source.size()) + " entries");
    for (int i = 0; i < source.size(); ++i) out[i] = parseVector(doc[i], target, p);
  } else if (doc.is_object()) {
    for (const auto& [label, terms] : doc.items()) out[source.indexOf(label)] = parseVector(terms, target, p);
  } else {
    fail(std::string(what) + " must be a list or an object");
  }
  return out;
}

Json labelVectorsToJson(const std::vector<GradedVector>& vs, const FieldSpec& field) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(toJson(v, field));
  return out;
}

/// Entries {"i", "j", "terms"} or [i, j, terms] into a square table.
std::vector<std::vector<GradedVector>> parseTable(const Json& doc, const GradedBasis& rows, const GradedBasis& cols,
                                                  const GradedBasis& values, std::uint32_t p, const char* ik,
                                                  const char* jk) {
  std::vector<std::vector<GradedVector>> out(rows.size(), std::vector<GradedVector>(cols.size()));
  if (doc.is_null()) return out;
  if (!doc.is_array()) fail("product table must be a list");
  for (const auto& e : doc) {
    int i, j;
    const Json* terms;
    if (e.is_array()) {
      if (e.size() != 3) fail("table entry must be [i, j, terms]");
      i = parseLabel(e[0], rows);
      j = parseLabel(e[1], cols);
      terms = &e[2];
    } else {
      i = parseLabel(require(e, ik), rows);
      j = parseLabel(require(e, jk), cols);
      terms = &require(e, "terms");
    }
    out[i][j] += parseVector(*terms, values, p);
  }
  return out;
}

Json tableToJson(const std::vector<std::vector<GradedVector>>& table, const FieldSpec& field, const char* ik,
                 const char* jk) {
  Json out = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table[i].size(); ++j)
      if (!table[i][j].isZero()) out.push_back({{ik, i}, {jk, j}, {"terms", toJson(table[i][j], field)}});
  return out;
}

std::optional<int> parsePeriod(const Json& doc) {
  if (!doc.contains("period_unit") || doc.at("period_unit").is_null()) return std::nullopt;
  const Json& pu = doc.at("period_unit");
  if (pu.is_number_integer()) return pu.get<int>();
  return require(pu, "degree").get<int>();
}

Demo demoOrFail(const Json& doc) {
  auto name = doc.at("demo").get<std::string>();
  auto demo = findDemo(name);
  if (!demo) fail("unknown demo '" + name + "'");
  return *demo;
}

int intOr(const Json& doc, const char* key, int fallback) {
  return doc.contains(key) ? doc.at(key).get<int>() : fallback;
}

DgAlgebra constructAlgebra(const Json& doc) {
  const auto kind = doc.at("construct").get<std::string>();
  if (kind == "ground_field") return DgAlgebra(groundField(parseField(doc)));
  if (kind == "laurent") return DgAlgebra(laurentPolynomials(parseField(doc), intOr(doc, "degree", 2)));
  if (kind == "dual_numbers") return dualNumbers(parseField(doc));
  if (kind == "square_zero") return squareZeroAlgebra(parseField(doc), intOr(doc, "degree", -1));
  if (kind == "finite_field") {
    auto p = require(doc, "p").get<std::uint32_t>();
    auto coeffs = require(doc, "coefficients").get<std::vector<long>>();
    return DgAlgebra(finiteFieldExtension(p, coeffs, doc.value("generator", std::string("u"))));
  }
  if (kind == "twisted_laurent") {
    TwistedLaurentSpec spec;
    spec.coefficients = parseGradedAlgebra(require(doc, "coefficients"));
    const auto& cb = spec.coefficients.basis();
    const auto p = spec.coefficients.field().characteristic;
    spec.automorphism = parseLabelVectors(require(doc, "automorphism"), cb, cb, p, "automorphism");
    spec.order = intOr(doc, "order", 1);
    spec.generatorDegree = intOr(doc, "generator_degree", 1);
    spec.generator = doc.value("generator", std::string("X"));
    return DgAlgebra(twistedLaurent(spec));
  }
  if (kind == "acyclic_division") {
    AcyclicDivisionSpec spec;
    spec.cycles = parseGradedAlgebra(require(doc, "cycles"));
    const auto& cb = spec.cycles.basis();
    const auto p = spec.cycles.field().characteristic;
    spec.derivation = parseLabelVectors(doc.value("derivation", Json()), cb, cb, p, "derivation");
    spec.ySquared = parseVector(doc.value("y_squared", Json::array()), cb, p);
    spec.generator = doc.value("generator", std::string("y"));
    return acyclicDivisionFromCycles(spec);
  }
  if (kind == "opposite") return opposite(parseDgAlgebra(require(doc, "algebra")));
  fail("unknown algebra construct '" + kind + "'");
}

std::vector<GradedVector> parseVectorList(const Json& doc, const GradedBasis& basis, std::uint32_t p) {
  if (!doc.is_array()) fail("expected a list of vectors");
  std::vector<GradedVector> out;
  for (const auto& v : doc) out.push_back(parseVector(v, basis, p));
  return out;
}

DgExtension constructExtension(const Json& doc) {
  const auto kind = doc.at("construct").get<std::string>();
  if (kind == "identity") return identityExtension(parseDgAlgebra(require(doc, "algebra")));
  if (kind == "ground_field_extension") {
    DgAlgebra target = parseDgAlgebra(require(doc, "target"));
    auto basis = parseVectorList(require(doc, "left_basis"), target.basis(), target.field().characteristic);
    return groundFieldExtension(target, std::move(basis));
  }
  if (kind == "laurent_extension")
    return laurentExtension(parseField(doc), require(doc, "n").get<int>(), intOr(doc, "degree", 2));
  if (kind == "cycle_extension") return cycleExtension(parseExtension(require(doc, "extension"))).extension;
  fail("unknown extension construct '" + kind + "'");
}

bool flat(const Json& v, int depth) {
  if (!v.is_structured()) return true;
  if (depth == 0) return false;
  if (v.is_object() && v.dump().size() > 72) return false;
  return std::all_of(v.begin(), v.end(), [&](const Json& e) { return flat(e, depth - 1); });
}

void prettyInto(const Json& v, int indent, std::string& out) {
  if (flat(v, v.is_object() ? 3 : 2)) {
    out += v.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = v.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    prettyInto(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string pretty(const Json& doc) {
  std::string out;
  prettyInto(doc, 0, out);
  return out;
}

Json loadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

FieldSpec parseField(const Json& doc) {
  return guarded("field", [&] {
    const Json& f = require(doc, "field");
    if (f.is_object()) return parseField(f);
    auto name = f.get<std::string>();
    if (name == "Q") return FieldSpec::rationals();
    if (name == "Fp") return FieldSpec::primeField(require(doc, "p").get<std::uint32_t>());
    if (name.size() > 1 && name[0] == 'F') {
      try {
        return FieldSpec::primeField(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
      } catch (const std::logic_error&) {
      }
    }
    fail("unknown field '" + name + "'");
  });
}

Json toJson(const FieldSpec& field) {
  if (field.isRationals()) return {{"field", "Q"}};
  return {{"field", "Fp"}, {"p", field.characteristic}};
}

GradedVector parseVector(const Json& terms, const GradedBasis& basis, std::uint32_t p) {
  return guarded("vector", [&] {
    if (!terms.is_array()) fail("vector must be a list of terms");
    GradedVector out;
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() < 3 || t.size() > 4) fail("term must be [k, exponent, c] or [k, exponent, num, den]");
      int k = parseLabel(t[0], basis);
      int e = t[1].get<int>();
      if (e != 0 && !basis.isPeriodic()) fail("nonzero exponent on a basis without period unit");
      Scalar c = parseNumber(t[2], p);
      if (t.size() == 4) c = (c / parseNumber(t[3], 0)).in(p);
      out.add({k, e}, c);
    }
    return out;
  });
}

Json toJson(const GradedVector& v, const FieldSpec& field) {
  Json out = Json::array();
  for (const auto& [k, c0] : v.terms()) {
    Scalar c = c0.in(field.characteristic);
    if (field.characteristic) {
      out.push_back({k.label, k.exponent, c.residue()});
    } else if (c.rational().get_den() == 1) {
      out.push_back({k.label, k.exponent, number(c.rational().get_num())});
    } else {
      out.push_back({k.label, k.exponent, number(c.rational().get_num()), number(c.rational().get_den())});
    }
  }
  return out;
}

GradedAlgebra parseGradedAlgebra(const Json& doc) {
  return guarded("algebra", [&] {
    if (doc.is_object() && (doc.contains("construct") || doc.contains("demo"))) {
      auto dg = parseDgAlgebra(doc);
      return dg.algebra();
    }
    FieldSpec field = parseField(doc);
    GradedBasis basis = parseBasis(doc, parsePeriod(doc));
    const auto p = field.characteristic;
    auto table = parseTable(doc.value("products", Json()), basis, basis, basis, p, "i", "j");
    return GradedAlgebra(field, basis, std::move(table), parseVector(require(doc, "unit"), basis, p));
  });
}

DgAlgebra parseDgAlgebra(const Json& doc) {
  return guarded("algebra", [&] {
    if (doc.is_object() && doc.contains("demo")) {
      Demo d = demoOrFail(doc);
      if (!d.algebra) fail("demo '" + d.name + "' has no algebra");
      return *d.algebra;
    }
    if (doc.is_object() && doc.contains("construct")) return constructAlgebra(doc);
    GradedAlgebra alg = parseGradedAlgebra(doc);
    auto d = parseLabelVectors(doc.value("differential", Json()), alg.basis(), alg.basis(),
                               alg.field().characteristic, "differential");
    return DgAlgebra(std::move(alg), std::move(d));
  });
}

DgExtension parseExtension(const Json& doc) {
  return guarded("extension", [&] {
    if (doc.is_object() && doc.contains("demo")) {
      Demo d = demoOrFail(doc);
      if (!d.extension) fail("demo '" + d.name + "' has no extension");
      return *d.extension;
    }
    if (doc.is_object() && doc.contains("construct")) return constructExtension(doc);
    DgAlgebra source = parseDgAlgebra(require(doc, "source"));
    DgAlgebra target = parseDgAlgebra(require(doc, "target"));
    const auto p = target.field().characteristic;
    auto map = parseLabelVectors(require(doc, "map"), source.basis(), target.basis(), p, "map");
    int power = 0;
    if (auto pa = source.basis().period()) {
      auto pb = target.basis().period();
      if (doc.contains("period_power")) {
        power = doc.at("period_power").get<int>();
      } else if (pb && *pa % *pb == 0) {
        power = *pa / *pb;
      } else {
        fail("period_power is required when the periods do not divide");
      }
    }
    auto basis = parseVectorList(require(doc, "left_basis"), target.basis(), p);
    return DgExtension(source, target, std::move(map), power, std::move(basis));
  });
}

DgModule parseModule(const Json& doc, const DgAlgebra& alg) {
  return guarded("module", [&] {
    if (doc.is_object() && doc.value("construct", std::string()) == "tensor") {
      TensorBimodule t(parseExtension(require(doc, "extension")));
      if (!(t.extension().target() == alg)) fail("tensor module is over a different algebra");
      return tensorLeftModule(t);
    }
    GradedBasis basis = parseBasis(doc, alg.basis().period());
    const auto p = alg.field().characteristic;
    auto action = parseTable(doc.value("action", Json()), alg.basis(), basis, basis, p, "a", "m");
    auto delta = parseLabelVectors(doc.value("delta", Json()), basis, basis, p, "delta");
    return DgModule(alg, basis, std::move(action), std::move(delta));
  });
}

ModuleMap parseModuleMap(const Json& doc, const GradedBasis& source, const GradedBasis& target,
                         std::uint32_t p) {
  return guarded("map", [&] {
    if (doc.is_object() && doc.contains("on_labels"))
      return ModuleMap{intOr(doc, "degree", 0), parseLabelVectors(doc.at("on_labels"), source, target, p, "map")};
    return ModuleMap{0, parseLabelVectors(doc, source, target, p, "map")};
  });
}

SesDocument parseSES(const Json& doc) {
  return guarded("sequence", [&] {
    if (doc.is_object() && doc.contains("demo")) {
      Demo d = demoOrFail(doc);
      if (!d.ses) fail("demo '" + d.name + "' has no short exact sequence");
      return *d.ses;
    }
    SesDocument out;
    if (doc.contains("extension")) out.extension = parseExtension(doc.at("extension"));
    DgAlgebra alg;
    if (doc.contains("algebra")) {
      alg = parseDgAlgebra(doc.at("algebra"));
      if (out.extension && !(out.extension->target() == alg))
        fail("the algebra differs from the target of the extension");
    } else if (out.extension) {
      alg = out.extension->target();
    } else {
      fail("sequence needs an algebra or an extension");
    }
    auto& s = out.ses;
    s.L = parseModule(require(doc, "L"), alg);
    s.M = parseModule(require(doc, "M"), alg);
    s.N = parseModule(require(doc, "N"), alg);
    const auto p = alg.field().characteristic;
    s.f = parseModuleMap(require(doc, "f"), s.L.basis(), s.M.basis(), p);
    s.g = parseModuleMap(require(doc, "g"), s.M.basis(), s.N.basis(), p);
    return out;
  });
}

Json toJson(const GradedAlgebra& alg) {
  Json out = toJson(alg.field());
  out["basis"] = basisToJson(alg.basis());
  std::vector<std::vector<GradedVector>> table(alg.size(), std::vector<GradedVector>(alg.size()));
  for (int i = 0; i < alg.size(); ++i)
    for (int j = 0; j < alg.size(); ++j) table[i][j] = alg.product(i, j);
  out["products"] = tableToJson(table, alg.field(), "i", "j");
  out["unit"] = toJson(alg.unit(), alg.field());
  if (auto p = alg.period()) out["period_unit"] = {{"degree", *p}};
  return out;
}

Json toJson(const DgAlgebra& dg) {
  Json out = toJson(dg.algebra());
  out["differential"] = labelVectorsToJson(dg.differentialOnLabels(), dg.field());
  return out;
}

Json toJson(const DgExtension& ext) {
  const auto& field = ext.target().field();
  Json out = {{"source", toJson(ext.source())}, {"target", toJson(ext.target())}};
  out["map"] = labelVectorsToJson(ext.mapOnLabels(), field);
  if (ext.source().basis().isPeriodic()) out["period_power"] = ext.periodPower();
  out["left_basis"] = labelVectorsToJson(ext.leftBasis(), field);
  return out;
}

Json toJson(const DgModule& m) {
  const auto& field = m.algebra().field();
  Json out = {{"basis", basisToJson(m.basis())}};
  out["action"] = tableToJson(m.actionTable(), field, "a", "m");
  out["delta"] = labelVectorsToJson(m.deltaOnLabels(), field);
  return out;
}

Json toJson(const ModuleMap& f, const FieldSpec& field) {
  return {{"degree", f.degree}, {"on_labels", labelVectorsToJson(f.onLabels, field)}};
}

Json toJson(const ShortExactSequence& s) {
  const auto& field = s.M.algebra().field();
  return {{"algebra", toJson(s.M.algebra())},
          {"L", toJson(s.L)},
          {"M", toJson(s.M)},
          {"N", toJson(s.N)},
          {"f", toJson(s.f, field)},
          {"g", toJson(s.g, field)}};
}

Json toJson(const SesDocument& s) {
  Json out = toJson(s.ses);
  if (s.extension) {
    out["extension"] = toJson(*s.extension);
    out.erase("algebra");
  }
  return out;
}

Json toJson(const DegreeWindow& w) { return Json::array({w.lo, w.hi}); }

Json toJson(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  Json out = {{"ok", r.ok()}, {"checks", checks}};
  if (r.window) out["window"] = toJson(*r.window);
  return out;
}

Json toJson(const HomologyTable& h) {
  Json dims = Json::object();
  Json cyc = Json::object();
  for (int n = h.window.lo; n <= h.window.hi; ++n) {
    dims[std::to_string(n)] = h.at(n);
    cyc[std::to_string(n)] = h.cycleDimensions.at(n - h.window.lo);
  }
  return {{"window", toJson(h.window)},
          {"homology", dims},
          {"cycles", cyc},
          {"d_squared_zero", h.boundariesAreCycles},
          {"acyclic_on_window", h.acyclicOnWindow()}};
}

Json toJson(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

Json blocksToJson(const ModuleMap& f, const GradedBasis& source, const GradedBasis& target,
                  const DegreeWindow& window) {
  Json out = Json::object();
  BasisOp op = [&](BasisKey k) { return f.apply(source, k); };
  for (int n = window.lo; n <= window.hi; ++n) {
    if (source.dimension(n) == 0) continue;
    out[std::to_string(n)] = toJson(blockMatrix(source, target, n, f.degree, op));
  }
  return out;
}

}  // namespace dgsep
