#pragma once

#include <string>
#include <vector>

#include "alphawidth/brambles.hpp"
#include "alphawidth/induced_minor.hpp"
#include "alphawidth/json_fwd.hpp"
#include "alphawidth/tree_decomposition.hpp"
#include "alphawidth/treedepth.hpp"

namespace alphawidth {

Json vertex_list(VertexSet s);
Json vertex_list(const std::vector<int>& seq);
VertexSet vertex_set_from_json(const Json& j);

/// {"nodes":[...],"edges":[[i,j],...],"bags":{"i":[v,...]},"root":r}
Json to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const Json& j);

/// {"parent":{"v":p|null,...},"roots":[...]}
Json to_json(const EliminationForest& f);
EliminationForest elimination_forest_from_json(const Json& j, int n);

/// {"elements":[[...],...],"cover":[...],"alpha_order":n}
Json bramble_to_json(const StrongBramble& b, const AlphaOrder& order);
StrongBramble bramble_from_json(const Json& j);

/// {"pattern":"W5","branch":{"0":[...],...}}
Json model_to_json(const InducedMinorModel& m, const std::string& pattern);
InducedMinorModel model_from_json(const Json& j);

/// Pattern names accepted in model certificates: Wl, Kn, Pn, Cn.
Graph pattern_graph(const std::string& name);

}  // namespace alphawidth
