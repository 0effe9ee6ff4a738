#pragma once

// Named demo objects shared by the command-line tool and the test suites.
//
// Names are whitespace-separated tokens. Parametrized families take a field
// token (Q or F<p>) and integers, e.g. "laurent F2 3".

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dgsep/io.hpp"

namespace dgsep {

struct Demo {
  std::string name;
  std::string description;
  std::optional<DgExtension> extension;
  std::optional<DgAlgebra> algebra;  // the target when an extension is present
  std::optional<SesDocument> ses;
};

struct DemoEntry {
  std::string name;  // a concrete name, or a family pattern such as "laurent F_p n"
  std::string description;
};

std::vector<DemoEntry> listDemos();

/// nullopt for unknown names; throws FormatError for bad family parameters.
std::optional<Demo> findDemo(const std::string& name);

/// Free graded module over alg on between 1 and maxDim / dim(alg) generators
/// in degrees drawn from [-2, 2].
DgModule randomFreeModule(const DgAlgebra& alg, std::mt19937_64& rng, int maxDim);

}  // namespace dgsep
