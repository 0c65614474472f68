#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "weakhopf/matched.hpp"

namespace weakhopf {

using Json = nlohmann::ordered_json;

// A weak bialgebra with an antipode when one is known.
struct Structure {
  WeakBialgebra wb;
  std::optional<Mat> antipode;

  WeakHopfAlgebra hopf() const;
};

Field field_from_json(const Json& j);
Json field_to_json(Field f);
Scalar scalar_from_json(Field f, const Json& j);
Json scalar_to_json(const Scalar& s);

// { "field", "dim", "mult", "unit", "comult", "counit", "antipode"?, "labels"? }
Structure structure_from_json(const Json& j);
Json structure_to_json(const WeakBialgebra& wb, const std::optional<Mat>& antipode = std::nullopt);

// Zoo recipe: {"example": "groupoid"|"group"|"hg"|"union"|"kaplansky"|"dual", ...}.
// `field` is used unless the recipe names its own.
Structure structure_from_recipe(const Json& j, Field field);

// A file path (relative to base_dir), a recipe, or an inline structure.
Structure load_structure(const Json& j, Field field, const std::filesystem::path& base_dir);

// Pair file: {"field"?, "H", "A", "action", "coaction"} or {"field"?, "kaplansky_of": <pair>}.
MatchedPairData pair_from_json(const Json& j, const std::filesystem::path& base_dir);

Json read_json_file(const std::filesystem::path& p);

Json report_to_json(const CheckReport& r);
Json matrix_to_json(const Mat& m);  // rows of scalars

}  // namespace weakhopf
