#include "dgsep/demos.hpp"

#include <map>
#include <sstream>

#include "dgsep/examples.hpp"

namespace dgsep {

namespace {

std::vector<std::string> tokens(const std::string& name) {
  std::istringstream in(name);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

FieldSpec fieldToken(const std::string& t) {
  if (t == "Q") return FieldSpec::rationals();
  if (t.size() > 1 && t[0] == 'F') {
    try {
      std::size_t used = 0;
      auto p = std::stoul(t.substr(1), &used);
      if (used + 1 == t.size()) return FieldSpec::primeField(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
    }
  }
  throw FormatError("bad field token '" + t + "' (expected Q or F<p>)");
}

int intToken(const std::string& t) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used == t.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw FormatError("bad integer token '" + t + "'");
}

bool inverseSquareToken(const std::string& t) {
  if (t == "w=0") return false;
  if (t == "w=Xinv") return true;
  throw FormatError("bad token '" + t + "' (expected w=0 or w=Xinv)");
}

// Irreducible polynomials f_0 .. f_(m-1) for small fields.
const std::map<std::string, std::pair<std::uint32_t, std::vector<long>>>& finiteFields() {
  static const std::map<std::string, std::pair<std::uint32_t, std::vector<long>>> table{
      {"F4", {2, {1, 1}}}, {"F8", {2, {1, 1, 0}}}, {"F9", {3, {1, 0}}},
      {"F25", {5, {2, 4}}}, {"F27", {3, {1, 2, 0}}}};
  return table;
}

Demo ofExtension(std::string name, std::string description, DgExtension ext) {
  Demo d{std::move(name), std::move(description), std::move(ext), std::nullopt, std::nullopt};
  d.algebra = d.extension->target();
  return d;
}

Demo ofAlgebra(std::string name, std::string description, DgAlgebra alg) {
  return {std::move(name), std::move(description), std::nullopt, std::move(alg), std::nullopt};
}

Demo ofSequence(const SesExample& e) {
  Demo d{"ses " + e.name, "short exact sequence over the target of an extension", e.extension,
         e.extension.target(), SesDocument{e.extension, e.ses}};
  return d;
}

std::string join(const std::vector<std::string>& t) {
  std::string out;
  for (const auto& s : t) out += (out.empty() ? "" : " ") + s;
  return out;
}

}  // namespace

std::vector<DemoEntry> listDemos() {
  std::vector<DemoEntry> out{
      {"dual-numbers-over-Q", "(Q, 0) -> Q[X]/X^2, |X| = -1, d(X) = 1; not separable"},
      {"dual-numbers-over-F_p", "(F_p, 0) -> F_p[X]/X^2, |X| = -1, d(X) = 1"},
      {"laurent F_p n", "F_p[T^n, T^-n] -> F_p[T, T^-1], |T| = 2, zero differential"},
      {"acyclic-division F_p w=0", "acyclic dg-division algebra over F_p[X, X^-1], y^2 = 0"},
      {"acyclic-division F_p w=Xinv", "acyclic dg-division algebra over F_p[X, X^-1], y^2 = X^-1"},
      {"acyclic-laurent F_p n", "acyclic over F_p[S^(+-1)] -> acyclic over F_p[T^(+-1)], S -> T^n"},
      {"laurent-into-acyclic F_p w=0", "(F_p[X, X^-1], 0) -> acyclic division algebra over it"},
      {"laurent-into-acyclic F_p w=Xinv", "(F_p[X, X^-1], 0) -> acyclic division algebra, y^2 = X^-1"},
      {"ground-field K", "identity extension of K, K = Q or F_p"},
      {"field-extension F4 | F8 | F9 | F25 | F27", "(F_p, 0) -> (F_q, 0)"},
      {"square-zero K", "K[X]/X^2, |X| = -1, zero differential"},
      {"twisted-laurent F4", "F4[X, X^-1; Frobenius], |X| = 2, not graded-commutative"},
  };
  for (const auto& e : liftCatalog()) out.push_back({"ses " + e.name, "short exact sequence for the lifting check"});
  out.push_back({"ses square-zero K", "0 -> (X) -> K[X]/X^2 -> K -> 0 over (K, 0) -> K[X]/X^2"});
  return out;
}

std::optional<Demo> findDemo(const std::string& raw) {
  const auto t = tokens(raw);
  if (t.empty()) return std::nullopt;
  const std::string name = join(t);
  const auto& head = t[0];

  const std::string dualPrefix = "dual-numbers-over-";
  if (t.size() == 1 && head.rfind(dualPrefix, 0) == 0) {
    auto f = fieldToken(head.substr(dualPrefix.size()));
    return ofExtension(name, "(K, 0) -> K[X]/X^2 with d(X) = 1", dualNumbersExtension(f));
  }
  if (head == "laurent" && t.size() == 3)
    return ofExtension(name, "F[T^n, T^-n] -> F[T, T^-1], |T| = 2", laurentExtension(fieldToken(t[1]), intToken(t[2])));
  if (head == "acyclic-division" && t.size() == 3)
    return ofAlgebra(name, "acyclic dg-division algebra over F[X, X^-1]",
                     acyclicLaurent(fieldToken(t[1]), inverseSquareToken(t[2])));
  if (head == "acyclic-laurent" && t.size() == 3)
    return ofExtension(name, "acyclic Laurent extension", acyclicLaurentExtension(fieldToken(t[1]), intToken(t[2])));
  if (head == "laurent-into-acyclic" && t.size() == 3)
    return ofExtension(name, "(F[X, X^-1], 0) -> acyclic division algebra",
                       laurentIntoAcyclic(fieldToken(t[1]), inverseSquareToken(t[2])));
  if (head == "ground-field" && t.size() == 2)
    return ofExtension(name, "identity extension", identityExtension(DgAlgebra(groundField(fieldToken(t[1])))));
  if (head == "field-extension" && t.size() == 2) {
    auto it = finiteFields().find(t[1]);
    if (it == finiteFields().end()) throw FormatError("no built-in field '" + t[1] + "'");
    return ofExtension(name, "finite field extension", primeFieldExtension(it->second.first, it->second.second));
  }
  if (head == "square-zero" && t.size() == 2)
    return ofAlgebra(name, "K[X]/X^2 with zero differential", squareZeroAlgebra(fieldToken(t[1])));
  if (head == "twisted-laurent" && t.size() == 2 && t[1] == "F4") {
    const auto& [p, coeffs] = finiteFields().at("F4");
    TwistedLaurentSpec spec{finiteFieldExtension(p, coeffs), {}, 2, 2, "X"};
    spec.automorphism = frobenius(spec.coefficients);
    return ofAlgebra(name, "skew Laurent ring over F4", DgAlgebra(twistedLaurent(spec)));
  }
  if (head == "ses" && t.size() == 3 && t[1] == "square-zero") return ofSequence(squareZeroSequence(fieldToken(t[2])));
  if (head == "ses")
    for (const auto& e : liftCatalog())
      if (name == "ses " + e.name) return ofSequence(e);
  return std::nullopt;
}

DgModule randomFreeModule(const DgAlgebra& alg, std::mt19937_64& rng, int maxDim) {
  const int generators = std::max(1, maxDim / alg.algebra().size());
  std::uniform_int_distribution<int> count(1, generators);
  std::uniform_int_distribution<int> degree(-2, 2);
  std::vector<int> degrees(count(rng));
  for (auto& d : degrees) d = degree(rng);
  return freeModule(alg, degrees);
}

}  // namespace dgsep
