#include "smm/json_io.hpp"

#include <fstream>
#include <sstream>

namespace smm {

namespace {

using nlohmann::json;

int intField(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InvalidInput("missing or non-integer field \"" + key + "\"");
  return j[key].get<int>();
}

std::vector<Elem> elemVector(const json& j, const std::string& key, int n) {
  if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
    throw InvalidInput("field \"" + key + "\" must be an array of length " + std::to_string(n));
  std::vector<Elem> out;
  for (const json& v : j[key]) {
    if (!v.is_number_integer()) throw InvalidInput("field \"" + key + "\" has a non-integer entry");
    out.push_back(v.get<Elem>());
  }
  return out;
}

std::vector<std::vector<Elem>> tableField(const json& j, const std::string& key, int n) {
  if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
    throw InvalidInput("field \"" + key + "\" must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<Elem>> out;
  for (const json& row : j[key]) {
    json wrapped;
    wrapped[key] = row;
    out.push_back(elemVector(wrapped, key, n));
  }
  return out;
}

void checkSchema(const json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (j.contains("schema") && j["schema"] != 1) throw InvalidInput("unsupported schema version");
}

Elem elemField(const json& j, const std::string& key, int n) {
  const int v = intField(j, key);
  if (v < 0 || v >= n) throw InvalidInput("field \"" + key + "\" is out of range");
  return v;
}

}  // namespace

nlohmann::json instanceToJson(const SmmInstance& inst) {
  json j;
  j["schema"] = 1;
  j["size"] = inst.monoid.size();
  j["table"] = inst.monoid.table();
  j["unit"] = inst.monoid.unit();
  j["T"] = inst.T.images;
  j["Q"] = inst.Q.images;
  j["mu"] = inst.mu;
  j["eta"] = inst.eta;
  j["delta"] = inst.delta;
  j["eps"] = inst.eps;
  return j;
}

SmmInstance instanceFromJson(const nlohmann::json& j) {
  checkSchema(j);
  const int n = intField(j, "size");
  if (n <= 0) throw InvalidInput("field \"size\" must be positive");
  const FiniteMonoid monoid =
      FiniteMonoid::fromTable(tableField(j, "table", n), j.contains("unit") ? intField(j, "unit") : 0);
  SmmInstance inst{monoid,
                   EndoMap{elemVector(j, "T", n)},
                   EndoMap{elemVector(j, "Q", n)},
                   elemField(j, "mu", n),
                   elemField(j, "eta", n),
                   elemField(j, "delta", n),
                   elemField(j, "eps", n)};
  for (const Elem v : inst.T.images)
    if (v < 0 || v >= n) throw InvalidInput("field \"T\" is out of range");
  for (const Elem v : inst.Q.images)
    if (v < 0 || v >= n) throw InvalidInput("field \"Q\" is out of range");
  if (!isEndomorphism(monoid, inst.T)) throw InvalidInput("T is not a monoid endomorphism");
  if (!isEndomorphism(monoid, inst.Q)) throw InvalidInput("Q is not a monoid endomorphism");
  return inst;
}

nlohmann::json asetToJson(const FiniteASet& m) {
  json j;
  j["schema"] = 1;
  j["size"] = m.size;
  j["action"] = m.action;
  return j;
}

FiniteASet asetFromJson(const nlohmann::json& j) {
  checkSchema(j);
  const int n = intField(j, "size");
  if (n <= 0) throw InvalidInput("field \"size\" must be positive");
  if (!j.contains("action") || !j["action"].is_array() ||
      static_cast<int>(j["action"].size()) != n)
    throw InvalidInput("field \"action\" must be an array of " + std::to_string(n) + " rows");
  FiniteASet m;
  m.size = n;
  for (const json& row : j["action"]) {
    if (!row.is_array()) throw InvalidInput("field \"action\" has a non-array row");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n)
        throw InvalidInput("field \"action\" has an out-of-range entry");
      r.push_back(v.get<int>());
    }
    m.action.push_back(r);
  }
  return m;
}

nlohmann::json reportToJson(const CheckReport& rep) {
  json items = json::array();
  for (const CheckItem& item : rep.items) {
    json entry;
    entry["name"] = item.name;
    entry["pass"] = item.pass;
    if (!item.detail.empty()) entry["detail"] = item.detail;
    items.push_back(entry);
  }
  json j;
  j["schema"] = 1;
  j["ok"] = rep.ok();
  j["items"] = items;
  return j;
}

nlohmann::json mimosaToJson(const MimosaReport& rep) {
  json j;
  j["finite"] = rep.finite;
  j["cancellative"] = rep.cancellative;
  j["commutative"] = rep.commutative;
  j["tAutomorphism"] = rep.tAutomorphism;
  j["qAutomorphism"] = rep.qAutomorphism;
  j["etaInvertible"] = rep.etaInvertible;
  j["muInvertible"] = rep.muInvertible;
  j["deltaInvertible"] = rep.deltaInvertible;
  j["epsInvertible"] = rep.epsInvertible;
  j["tensorUnitIso"] = rep.tensorUnitIso;
  j["trivial"] = rep.trivial;
  if (!rep.fatalFinding.empty()) j["fatalFinding"] = rep.fatalFinding;
  return j;
}

nlohmann::json violationsToJson(const std::vector<AxiomViolation>& vs) {
  json out = json::array();
  for (const AxiomViolation& v : vs) {
    json entry;
    entry["axiom"] = v.axiom;
    entry["witness"] = v.witness;
    entry["detail"] = v.detail;
    out.push_back(entry);
  }
  return out;
}

nlohmann::json enumerationRecord(const SmmInstance& inst) {
  json j = instanceToJson(inst);
  j["trivial"] = isTrivial(inst);
  j["mimosa"] = mimosaToJson(mimosaReport(inst));
  return j;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << text;
}

}  // namespace smm
