#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "qsym/algebra.hpp"
#include "qsym/combinat.hpp"
#include "qsym/oracle.hpp"
#include "qsym/scf.hpp"

namespace qsym {

using json = nlohmann::json;

json to_json(const Composition& alpha);
Composition composition_from_json(const json& j);

// {"n": grade, "elems": [...]}
json to_json(const Subset& s);
Subset subset_from_json(const json& j);

json to_json(const ClassFunction& phi);
ClassFunction class_function_from_json(const json& j);

json to_json(const QSymElement& x);
QSymElement element_from_json(const json& j);

json to_json(const TensorElement& x);
TensorElement tensor_from_json(const json& j);

json to_json(const DiffEntry& d);

// Either JSON or the inline form, e.g. "D[2,1]", "(q+t)*D[2,3] - 2*D[5]",
// "K[1,2](nu=3)".  K terms without a suffix take default_nu.
QSymElement parse_element(std::string_view text, std::optional<int> default_nu = std::nullopt);
Composition parse_composition(std::string_view text);

}  // namespace qsym
