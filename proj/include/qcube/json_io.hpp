#pragma once

#include <json.hpp>
#include <string>

#include "qcube/funcalg.hpp"
#include "qcube/magic.hpp"
#include "qcube/paths.hpp"
#include "qcube/rep.hpp"
#include "qcube/report.hpp"
#include "qcube/weighting.hpp"

namespace qcube {

using Json = nlohmann::json;

/// All loaders validate types and reject non-finite numbers with input_error.

Json to_json(const SubgraphMask& mask);
SubgraphMask mask_from_json(const Json& j);

Json to_json(const PathWord& w);
PathWord word_from_json(const Json& j);

Json to_json(const EdgeWeighting& c);
EdgeWeighting weighting_from_json(const Json& j);

Json to_json(const Representation& rho);
Representation representation_from_json(const Json& j);

Json to_json(const MagicMatrix& grid);
MagicMatrix magic_from_json(const Json& j);

Json to_json(const Report& report);

Json to_json(const SimplexPoint& t);
SimplexPoint simplex_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace qcube
