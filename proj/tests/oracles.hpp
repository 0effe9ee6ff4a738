#pragma once

// Exhaustive-search oracles over small prime fields. They share no code with
// the linear solvers: candidates are enumerated coordinate by coordinate and
// every condition is checked on elements.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dgsep/modules.hpp"

namespace oracle {

using dgsep::BasisKey;
using dgsep::GradedVector;

/// Calls f on every vector of F_p^component; stops early when f returns false.
inline void forEachVector(const std::vector<BasisKey>& component, std::uint32_t p,
                          const std::function<bool(const GradedVector&)>& f) {
  std::vector<std::uint32_t> digits(component.size(), 0);
  for (;;) {
    GradedVector v;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i]) v.add(component[i], dgsep::Scalar::residue(digits[i], p));
    if (!f(v)) return;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

inline long power(long base, std::size_t e) {
  long out = 1;
  while (e--) out *= base;
  return out;
}

struct CasimirSearch {
  long candidates = 0;
  std::vector<GradedVector> solutions;
};

/// All degree-0 omega in B (x)_A B with d(omega) = 0, mu(omega) = 1 and
/// b omega = omega b for b running over the target labels and z^(+-1).
/// nullopt when the search space exceeds maxCandidates.
inline std::optional<CasimirSearch> casimirs(const dgsep::DgExtension& ext, long maxCandidates) {
  const std::uint32_t p = ext.target().field().characteristic;
  dgsep::TensorBimodule t(ext);
  const auto comp = t.basis().component(0);
  CasimirSearch out;
  out.candidates = power(p, comp.size());
  if (p == 0 || out.candidates > maxCandidates) return std::nullopt;

  const auto& alg = ext.target().algebra();
  std::vector<GradedVector> testers;
  for (int i = 0; i < alg.size(); ++i) testers.push_back(alg.element({i, 0}));
  if (alg.period()) {
    testers.push_back(alg.unit().shifted(1));
    testers.push_back(alg.unit().shifted(-1));
  }
  const GradedVector one = alg.unit();
  forEachVector(comp, p, [&](const GradedVector& w) {
    if (t.multiply(w) != one) return true;
    if (!t.differential(w).isZero()) return true;
    for (const auto& b : testers)
      if (t.leftAction(b, w) != t.rightAction(w, b)) return true;
    out.solutions.push_back(w);
    return true;
  });
  return out;
}

struct SplittingSearch {
  long candidates = 0;
  long splittings = 0;
};

/// Counts the degree-0 maps sigma : N -> M of dg-modules with g sigma = id.
/// nullopt when the search space exceeds maxCandidates.
inline std::optional<SplittingSearch> splittings(const dgsep::ShortExactSequence& s, long maxCandidates) {
  const std::uint32_t p = s.M.algebra().field().characteristic;
  const auto& nb = s.N.basis();
  const auto& mb = s.M.basis();
  const auto& alg = s.M.algebra().algebra();
  SplittingSearch out;
  std::vector<std::vector<BasisKey>> comps;
  std::size_t total = 0;
  for (int i = 0; i < nb.size(); ++i) {
    comps.push_back(mb.component(nb.degree(i)));
    total += comps.back().size();
  }
  out.candidates = power(p, total);
  if (p == 0 || out.candidates > maxCandidates) return std::nullopt;

  // Per label, only candidates with g(sigma(n)) = n can occur.
  std::vector<std::vector<GradedVector>> choices(nb.size());
  for (int i = 0; i < nb.size(); ++i) {
    const auto target = GradedVector::unit({i, 0}, dgsep::Scalar::residue(1, p));
    forEachVector(comps[i], p, [&](const GradedVector& v) {
      if (s.g.apply(mb, v) == target) choices[i].push_back(v);
      return true;
    });
  }
  std::vector<GradedVector> sigma(nb.size());
  auto apply = [&](const GradedVector& v) {
    GradedVector r;
    for (const auto& [k, c] : v.terms()) r += c * sigma[k.label].shifted(k.exponent);
    return r;
  };
  std::function<void(int)> pick = [&](int i) {
    if (i == nb.size()) {
      for (int j = 0; j < nb.size(); ++j) {
        auto e = GradedVector::unit({j, 0});
        if (s.M.delta(sigma[j]) != apply(s.N.delta(e))) return;
        for (int a = 0; a < alg.size(); ++a)
          if (apply(s.N.act(BasisKey{a, 0}, BasisKey{j, 0})) != s.M.act(alg.element({a, 0}), sigma[j])) return;
      }
      ++out.splittings;
      return;
    }
    for (const auto& c : choices[i]) {
      sigma[i] = c;
      pick(i + 1);
    }
  };
  pick(0);
  return out;
}

}  // namespace oracle
