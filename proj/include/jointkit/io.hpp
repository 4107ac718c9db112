#pragma once

#include <string>

#include <json.hpp>

#include "jointkit/certify.hpp"

namespace jointkit {

using Json = nlohmann::ordered_json;

Json line_system_to_json(const LineSystem& ls);
LineSystem line_system_from_json(const Json& j);

void save_line_system(const LineSystem& ls, const std::string& path);
LineSystem load_line_system(const std::string& path);

Json trace_to_json(const ProofTrace& trace);
Json audit_to_json(const CarberyAudit& audit);

void write_text(const std::string& path, const std::string& text);

} // namespace jointkit
