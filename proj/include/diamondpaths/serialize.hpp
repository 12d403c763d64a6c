#pragma once

#include <string>

#include <json.hpp>

#include "diamondpaths/connectivity.hpp"
#include "diamondpaths/construct.hpp"
#include "diamondpaths/graph.hpp"

namespace diamondpaths {

// Structured-format (JSON) encodings. All emitters produce key-sorted
// documents with a trailing newline so identical values serialize to
// identical bytes.

nlohmann::json path_system_to_json(const PathSystem& ps);
PathSystem path_system_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const UpperBoundCertificate& cert);
UpperBoundCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const IndependentWitness& w);
IndependentWitness witness_from_json(const nlohmann::json& j);

std::string dump_json(const nlohmann::json& j);

std::string serialize_path_system(const PathSystem& ps);
PathSystem parse_path_system(const std::string& text);

std::string serialize_certificate(const UpperBoundCertificate& cert);
UpperBoundCertificate parse_certificate(const std::string& text);

std::string serialize_witness(const IndependentWitness& w);
IndependentWitness parse_witness(const std::string& text);

}  // namespace diamondpaths
