#pragma once

#include <nlohmann/json.hpp>

#include "rcd/cliquesum.hpp"
#include "rcd/decompose.hpp"
#include "rcd/embedding.hpp"
#include "rcd/graph.hpp"
#include "rcd/keylemma.hpp"
#include "rcd/permcsp.hpp"
#include "rcd/report.hpp"
#include "rcd/robustness.hpp"
#include "rcd/tree_decomposition.hpp"
#include "rcd/treewidth.hpp"

// JSON forms of the artifact types. Parsing goes through the validating
// constructors, so malformed input raises InvalidInput; a missing or
// mistyped field raises nlohmann::json::exception.
namespace rcd {

using Json = nlohmann::json;

void to_json(Json& j, const Graph& g);
void from_json(const Json& j, Graph& g);

// Darts are written as [edge, end] pairs.
void to_json(Json& j, const Embedding& e);
void from_json(const Json& j, Embedding& e);

void to_json(Json& j, const TreeDecomposition& td);
void from_json(const Json& j, TreeDecomposition& td);

void to_json(Json& j, const TwResult& r);
void from_json(const Json& j, TwResult& r);

void to_json(Json& j, const ApexStructure& s);
void from_json(const Json& j, ApexStructure& s);

void to_json(Json& j, const TorsoStructure& s);
void from_json(const Json& j, TorsoStructure& s);

void to_json(Json& j, const RsInput& in);
void from_json(const Json& j, RsInput& in);

void to_json(Json& j, const LayerMeta& m);
void from_json(const Json& j, LayerMeta& m);

void to_json(Json& j, const TorsoMeta& m);
void from_json(const Json& j, TorsoMeta& m);

void to_json(Json& j, const Rcd& r);
void from_json(const Json& j, Rcd& r);

void to_json(Json& j, const Check& c);
void from_json(const Json& j, Check& c);

void to_json(Json& j, const Report& r);
void from_json(const Json& j, Report& r);

void to_json(Json& j, const KeyOutput& k);

void to_json(Json& j, const RobustnessSample& s);
void to_json(Json& j, const RobustnessReport& r);

void to_json(Json& j, const Constraint& c);
void from_json(const Json& j, Constraint& c);

void to_json(Json& j, const PermCspInstance& inst);
void from_json(const Json& j, PermCspInstance& inst);

void to_json(Json& j, const SizeConstraint& sc);
void from_json(const Json& j, SizeConstraint& sc);

void to_json(Json& j, const DeletionSolution& s);
void from_json(const Json& j, DeletionSolution& s);

void to_json(Json& j, DeletionMode m);
void from_json(const Json& j, DeletionMode& m);

}  // namespace rcd
