#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "fet/lp.hpp"
#include "fet/partitions.hpp"
#include "fet/polyform.hpp"
#include "fet/spectrum.hpp"

namespace fet {

// External JSON shapes. Coordinates are 1-based on the wire, masks are raw
// little-endian subset masks (bit j <-> x_{j+1}).

nlohmann::json spectrum_to_json(const FourierSpectrum& s);  // {"mask": 2^n fhat}

nlohmann::json assignment_to_json(const PartialAssignment& a);  // {"coord": +-1}
PartialAssignment assignment_from_json(int n, const nlohmann::json& j);

nlohmann::json affine_to_json(const AffineConstraintSystem& s);  // {"rows":[{mask,sign}]}
AffineConstraintSystem affine_from_json(int n, const nlohmann::json& j);

nlohmann::json partition_to_json(const SubcubePartition& p);
nlohmann::json partition_to_json(const AffinePartition& p);

using AnyPartition = std::variant<SubcubePartition, AffinePartition>;
// Cells carrying "rows" force the affine reading; pure-"fixed" input parses
// as a subcube partition.
AnyPartition partition_from_json(const nlohmann::json& j);

nlohmann::json form_to_json(const BlockMultilinearForm& f);
BlockMultilinearForm form_from_json(const nlohmann::json& j);

nlohmann::json lp_result_to_json(const LpResult& r, bool include_dual);

nlohmann::json load_json_file(const std::string& path);

}  // namespace fet
