#pragma once

// JSON presentations of algebras, extensions, modules and sequences, and of
// the reports the decision procedures produce.
//
// A term is [k, exponent, c] or [k, exponent, numerator, denominator], where
// k is a label index or a label name. Over F_p the single coefficient is the
// residue; a fraction is reduced mod p. A vector is a list of terms.

#include <string>

#include <nlohmann/json.hpp>

#include "dgsep/modules.hpp"

namespace dgsep {

using Json = nlohmann::json;

/// Indented JSON with terms, vectors and matrix rows kept on one line.
std::string pretty(const Json& doc);

/// Reads and parses a file. Throws FormatError.
Json loadJson(const std::string& path);

FieldSpec parseField(const Json& doc);
Json toJson(const FieldSpec& field);

/// Accepts explicit presentations and "construct" recipes.
GradedAlgebra parseGradedAlgebra(const Json& doc);
DgAlgebra parseDgAlgebra(const Json& doc);
/// {"source": ..., "target": ..., "map": [...], "period_power": k,
///  "left_basis": [...]}, or a "construct" recipe.
DgExtension parseExtension(const Json& doc);
/// Module over alg; {"basis", "action": [{"a", "m", "terms"}], "delta"}.
DgModule parseModule(const Json& doc, const DgAlgebra& alg);
ModuleMap parseModuleMap(const Json& doc, const GradedBasis& source, const GradedBasis& target,
                         std::uint32_t characteristic);

/// {"algebra" | "extension", "L", "M", "N", "f", "g"}. The algebra defaults
/// to the target of the extension.
struct SesDocument {
  std::optional<DgExtension> extension;
  ShortExactSequence ses;
};
SesDocument parseSES(const Json& doc);

GradedVector parseVector(const Json& terms, const GradedBasis& basis, std::uint32_t characteristic);
Json toJson(const GradedVector& v, const FieldSpec& field);

Json toJson(const GradedAlgebra& alg);
Json toJson(const DgAlgebra& dg);
Json toJson(const DgExtension& ext);
/// Without the algebra, which the enclosing document carries.
Json toJson(const DgModule& m);
Json toJson(const ModuleMap& f, const FieldSpec& field);
Json toJson(const ShortExactSequence& s);
Json toJson(const SesDocument& s);

Json toJson(const DegreeWindow& w);
Json toJson(const ValidationReport& r);
Json toJson(const HomologyTable& h);
Json toJson(const Matrix& m);
/// Per-degree matrices of f : source -> target over the window.
Json blocksToJson(const ModuleMap& f, const GradedBasis& source, const GradedBasis& target,
                  const DegreeWindow& window);

}  // namespace dgsep
