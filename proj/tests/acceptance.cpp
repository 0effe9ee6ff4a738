// Acceptance runner: one PASS/FAIL line per criterion with its runtime and
// limit. Exits nonzero when any criterion fails or runs over its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dgsep/demos.hpp"
#include "dgsep/examples.hpp"
#include "oracles.hpp"

using namespace dgsep;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

void dualNumbersCase(Outcome& o) {
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::primeField(3), FieldSpec::primeField(5)}) {
    auto ext = dualNumbersExtension(f);
    o.require(!findCasimir(ext).separable(), "separable over " + f.name());
    TensorBimodule t(ext);
    auto comp = t.basis().component(0);
    o.require(comp.size() == 1 && t.basis().keyName(comp[0]) == "1|0", "degree-0 tensor is not <1|0>");
  }
}

void laurentCriterion(Outcome& o) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int n = 1; n <= 6; ++n) {
      auto ext = laurentExtension(FieldSpec::primeField(p), n);
      auto r = findCasimir(ext);
      std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      o.require(r.separable() == (n % static_cast<int>(p) != 0), "wrong verdict at " + tag);
      if (!r.separable()) continue;
      auto rep = verifyCasimir(ext, r.certificate->omega);
      o.require(rep.ok() && rep.find("mu(omega) = 1")->passed, "certificate fails at " + tag);
    }
  auto ext = laurentExtension(FieldSpec::primeField(2), 3);
  auto brute = oracle::casimirs(ext, 1L << 12);
  auto r = findCasimir(ext);
  o.require(brute && brute->solutions.size() == 1 && r.separable() && brute->solutions[0] == r.certificate->omega,
            "F2 n=3 omega differs from the enumerated solution");
}

void reconstruction(Outcome& o) {
  const auto f5 = FieldSpec::primeField(5);
  for (bool inv : {false, true}) {
    auto dg = acyclicLaurent(f5, inv);
    auto h = homology(dg);
    o.require(h.window.size() == 2 && h.acyclicOnWindow(), "homology is not zero on the fold");
    const auto& alg = dg.algebra();
    auto y = alg.element({alg.basis().indexOf("y"), 0});
    for (int e = -3; e <= 3; ++e)
      for (int c1 = 0; c1 < 5; ++c1)
        for (int c2 = 0; c2 < 5; ++c2) {
          auto a = Scalar::residue(c1, 5) * alg.element({0, e});
          auto b = Scalar::residue(c2, 5) * alg.element({0, e + 1});
          o.require(dg.d(b + alg.multiply(y, a)) == a, "d(b + y a) != a");
        }
    o.require(isDgDivision(dg).division, "not a dg-division algebra");
  }
}

void laurentIntoAcyclicCase(Outcome& o) {
  for (std::uint32_t p : {3u, 5u}) {
    auto c = checkMainTheorem(laurentIntoAcyclic(FieldSpec::primeField(p)));
    o.require(!c.computed.separable() && c.verdict() == "NOT_SEPARABLE", "separable over F" + std::to_string(p));
  }
  auto c2 = checkMainTheorem(laurentIntoAcyclic(FieldSpec::primeField(2)));
  o.require(c2.verdict() == "THEOREM_SILENT", "characteristic 2 is not tagged silent");
}

void catalog(Outcome& o) {
  auto cat = mainTheoremCatalog();
  std::set<std::string> branches;
  int mismatches = 0;
  for (const auto& e : cat) {
    auto c = checkMainTheorem(e.extension);
    mismatches += c.mismatch() || c.predicted == Prediction::TheoremSilent;
    branches.insert(c.branch);
  }
  o.require(cat.size() >= 10, "fewer than 10 instances");
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(branches.size() == 3, "branches not all covered");
}

void liftCase(Outcome& o) {
  int f4 = 0, lau = 0;
  for (const auto& e : liftCatalog()) {
    auto cas = findCasimir(e.extension);
    o.require(cas.separable(), e.name + ": extension not separable");
    if (!cas.separable()) continue;
    auto source = findDgSplitting(e.ses, e.extension);
    auto target = findDgSplitting(e.ses);
    o.require(source.split() == target.split(), e.name + ": source and target verdicts differ");
    (e.name.rfind("F4", 0) == 0 ? f4 : lau)++;
    if (!source.split()) continue;
    auto lifted = liftSplitting(e.extension, *cas.certificate, e.ses, *source.sigma);
    const auto& w = lifted.witnesses;
    o.require(w.ok() && verifySplitting(e.ses, lifted.tau).ok(), e.name + ": tau fails its witnesses");
  }
  o.require(f4 >= 3 && lau >= 3, "fewer than 3 sequences per extension");
}

void bruteForce(Outcome& o) {
  const auto f2 = FieldSpec::primeField(2);
  const long limit = 1L << 12;
  std::vector<DgExtension> exts;
  for (int n = 1; n <= 6; ++n) exts.push_back(laurentExtension(f2, n));
  for (const char* name : {"field-extension F4", "field-extension F8", "dual-numbers-over-F2", "ground-field F2",
                           "laurent-into-acyclic F2 w=0", "acyclic-laurent F2 2"})
    exts.push_back(*findDemo(name)->extension);
  int compared = 0;
  for (const auto& ext : exts) {
    auto brute = oracle::casimirs(ext, limit);
    if (!brute) continue;
    ++compared;
    o.require(findCasimir(ext).separable() == !brute->solutions.empty(), "Casimir verdict differs");
  }
  auto seqs = liftCatalog();
  seqs.push_back(squareZeroSequence(f2));
  for (const auto& e : seqs)
    for (const auto& s : {e.ses, restrictSES(e.extension, e.ses)}) {
      auto brute = oracle::splittings(s, limit);
      if (!brute) continue;
      ++compared;
      o.require(findDgSplitting(s).split() == (brute->splittings > 0), e.name + ": splitting verdict differs");
    }
  o.require(compared >= 20, "only " + std::to_string(compared) + " instances within the search bound");
}

void equivalence(Outcome& o) {
  auto dn = dualNumbers(FieldSpec::primeField(3));
  DgAlgebra base(cycles(dn).algebra);
  std::mt19937_64 rng(20);
  for (int i = 0; i < 20; ++i) {
    auto n = randomFreeModule(base, rng, 4);
    o.require(n.size() <= 4, "module too large");
    auto back = cyclesModule(induceFromCycles(dn, n));
    auto iso = findModuleIsomorphism(back.module, n, 1000 + i);
    o.require(iso.iso.has_value() && iso.witnesses.ok(), "no isomorphism found");
    if (!iso.iso) continue;
    o.require(validateModuleMap(back.module, n, *iso.iso).ok(), "isomorphism is not a module map");
    auto w = back.module.window();
    for (int d = w.lo; d <= w.hi; ++d) {
      Matrix b = blockMatrix(back.module.basis(), n.basis(), d, 0,
                             [&](BasisKey k) { return iso.iso->apply(back.module.basis(), k); });
      o.require(b.rows() == b.cols() && (b.size() == 0 || isInvertible(b)), "degree block is not invertible");
    }
  }
}

struct Criterion {
  const char* name;
  double limitSeconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"dual numbers are not separable", 1, dualNumbersCase},
      {"Laurent criterion p | n", 5, laurentCriterion},
      {"acyclic division algebras from cycles", 1, reconstruction},
      {"Laurent into acyclic is not separable", 2, laurentIntoAcyclicCase},
      {"predicted vs computed on the catalog", 10, catalog},
      {"splittings lift along separable extensions", 5, liftCase},
      {"exhaustive search agrees over F2", 60, bruteForce},
      {"cycles and induction round trip", 5, equivalence},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limitSeconds) o.require(false, "over the time limit");
    failures += !o.ok;
    std::printf("%s %d. %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", ++index, c.name, secs,
                c.limitSeconds, o.ok ? "" : ": ", o.why.str().c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures ? 1 : 0;
}
