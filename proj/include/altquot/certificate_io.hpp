#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "altquot/separation.hpp"

namespace altquot {

using Json = nlohmann::ordered_json;

// Raised for documents that parse as JSON but do not match the schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mode parse_mode(const std::string& name);

// {"rank": 2, "subgroup": ["a"], "elements": ["b"], "mode": "alternating"}
ProblemInstance instance_from_json(const Json& doc);
Json instance_to_json(const ProblemInstance& inst);

// Keys are emitted in a fixed order; the same certificate always serialises
// to the same bytes.
Json certificate_to_json(const SeparationCertificate& cert);
SeparationCertificate certificate_from_json(const Json& doc);

Json report_to_json(const VerificationReport& report);

}  // namespace altquot
