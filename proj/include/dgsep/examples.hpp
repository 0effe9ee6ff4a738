#pragma once

// Named algebras and extensions used by the demos, the test suite and the
// acceptance runner.

#include <string>
#include <vector>

#include "dgsep/modules.hpp"

namespace dgsep {

/// F[S, S^-1] -> F[T, T^-1] with S -> T^n, |T| = degree, left basis T^0..T^(n-1).
DgExtension laurentExtension(const FieldSpec& field, int n, int degree = 2);

/// The acyclic dg-division algebra over F[X, X^-1] (|X| = 2, D = 0) with
/// y^2 = 0, or y^2 = X^-1 when inverseSquare is set.
DgAlgebra acyclicLaurent(const FieldSpec& field, bool inverseSquare = false, int degree = 2);

/// Acyclic over F[S^(+-1)] -> acyclic over F[T^(+-1)] with S -> T^n, y -> y.
DgExtension acyclicLaurentExtension(const FieldSpec& field, int n);

/// (F[X, X^-1], 0) -> acyclicLaurent(F, inverseSquare), left basis {1, y}.
DgExtension laurentIntoAcyclic(const FieldSpec& field, bool inverseSquare = false);

/// (K, 0) -> dual numbers over K, left basis {1, X}.
DgExtension dualNumbersExtension(const FieldSpec& field);

/// (F_p, 0) -> (F_p[u]/f, 0), left basis 1, u, ..., u^(m-1).
DgExtension primeFieldExtension(std::uint32_t p, const std::vector<long>& coefficients);

struct ExtensionExample {
  std::string name;
  DgExtension extension;
};

/// Graded-commutative dg-division extensions in characteristic != 2,
/// covering the zero-differential, acyclic-source and acyclic-target cases.
std::vector<ExtensionExample> mainTheoremCatalog();

/// K[X]/X^2 with |X| = degree and zero differential.
DgAlgebra squareZeroAlgebra(const FieldSpec& field, int degree = -1);

/// Free dg-module with one cycle generator e_j in each listed degree. Labels
/// are x.e_j for algebra labels x, or e_j when the algebra has basis {1}.
DgModule freeModule(const DgAlgebra& alg, const std::vector<int>& degrees);
/// a e_j in the labels of freeModule.
GradedVector onGenerator(const DgAlgebra& alg, int j, const GradedVector& a);

struct SesExample {
  std::string name;
  DgExtension extension;
  ShortExactSequence ses;  // over the target of extension
};

/// Sequences over the targets of F2 -> F4 and F2[T^3, T^-3] -> F2[T, T^-1]:
/// direct sums, scrambled split sequences, and a cone that does not split.
std::vector<SesExample> liftCatalog();

/// 0 -> (X) -> K[X]/X^2 -> K -> 0 with zero differential, over the
/// extension (K, 0) -> (K[X]/X^2, 0).
SesExample squareZeroSequence(const FieldSpec& field);

}  // namespace dgsep
