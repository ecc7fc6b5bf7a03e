#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qchroma/positivity.hpp"
#include "qchroma/symfunc.hpp"

namespace qchroma {

using Json = nlohmann::ordered_json;

enum class Format { text, json, latex };
Format format_from_string(const std::string& name);

std::string qpoly_to_text(const QPoly& p);  // descending powers, e.g. "q^2+q+1"
std::string qpoly_to_latex(const QPoly& p); // "q^{2}+q+1"
Json qpoly_to_json(const QPoly& p);         // ascending coefficient array
QPoly qpoly_from_json(const Json& j);

/* Terms ordered by degree, then lexicographically ascending parts (the order
 * expansions are usually written in). */
std::vector<std::pair<Partition, QPoly>> view_in_render_order(
    const std::map<Partition, QPoly>& view);

std::string sym_to_text(const SymFunc& f, Basis b);
std::string sym_to_latex(const SymFunc& f, Basis b);

/* {"basis": "e", "terms": [{"partition": [3,2], "coeff": [0,1,3,1]}]} */
Json sym_to_json(const SymFunc& f, Basis b);
SymFunc sym_from_json(const Json& j);

std::string delta_table_text(const HessFunc& m, int k, const DeltaReport& report);
Json delta_table_json(const HessFunc& m, int k, const DeltaReport& report);

} // namespace qchroma
