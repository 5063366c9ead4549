#pragma once

// JSON encodings (schema 1) for instances, modules, axiom reports, mimosa
// flags and enumeration records, plus the file helpers the driver shares.

#include <string>
#include <vector>

#include "json.hpp"
#include "smm/finmon.hpp"
#include "smm/modcat.hpp"
#include "smm/skewset.hpp"

namespace smm {

nlohmann::json instanceToJson(const SmmInstance& inst);
// throws InvalidInput on missing keys, shape errors, a non-associative
// table, non-endomorphism T/Q or out-of-range structure constants
SmmInstance instanceFromJson(const nlohmann::json& j);

nlohmann::json asetToJson(const FiniteASet& m);
FiniteASet asetFromJson(const nlohmann::json& j);

nlohmann::json reportToJson(const CheckReport& rep);
nlohmann::json mimosaToJson(const MimosaReport& rep);
nlohmann::json violationsToJson(const std::vector<AxiomViolation>& vs);

// full instance record with triviality and mimosa flags, as emitted by
// the enumerate command
nlohmann::json enumerationRecord(const SmmInstance& inst);

std::string readTextFile(const std::string& path);  // throws InvalidInput
void writeTextFile(const std::string& path, const std::string& text);

}  // namespace smm
