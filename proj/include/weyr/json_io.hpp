#ifndef WEYR_JSON_IO_HPP
#define WEYR_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "weyr/deformations.hpp"
#include "weyr/reduce.hpp"
#include "weyr/verify.hpp"

namespace weyr {

using json = nlohmann::json;

// Matrices serialize as row-major arrays of exact "p/q+r/si" strings;
// patterns as grids of "0"/"p<k>"; permutations as 1-based image arrays.
// Field names are documented in docs/schema.md.

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json to_json(const PatternMatrix& p);
PatternMatrix pattern_from_json(const json& j);

json to_json(const BlockPartition& bp);
BlockPartition partition_from_json(const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const SegreStructure& s);
SegreStructure segre_from_json(const json& j);

json to_json(const PencilStructure& ps);
PencilStructure pencil_from_json(const json& j);

json to_json(const ContraStructure& cs);
ContraStructure contra_from_json(const json& j);

json to_json(const Template& t);
Template template_from_json(const json& j);

json to_json(const TemplatePair& tp);
TemplatePair pair_from_json(const json& j);

json to_json(const VersalityReport& r);
VersalityReport report_from_json(const json& j);

json to_json(const FloatMatrix& m);
FloatMatrix float_matrix_from_json(const json& j);

json to_json(const ReductionResult& r);

}  // namespace weyr

#endif
