#pragma once

#include <json.hpp>

#include "lssa/nonexistence.hpp"
#include "lssa/product_table.hpp"
#include "lssa/report.hpp"

namespace lssa {

using nlohmann::json;

/* "gl(m|n)" / "sl(m|n)" -> algebra (cached; algebras are immutable). */
AlgebraPtr algebra_from_name(const std::string& name);

/* Parameter names of every non-constant coefficient, in context order. */
std::vector<std::string> used_parameters(const ProductTable& t);

json table_to_json(const ProductTable& t);
ProductTable table_from_json(const json& j);

json rep_to_json(const Representation& r);
Representation rep_from_json(const json& j);

json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const json& j);

json witness_to_json(const WitnessReport& w);
json report_to_json(const Report& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace lssa
