#include "wexp/case_table.hpp"

#include <fstream>

#include "wexp/errors.hpp"
#include "wexp_case_table_data.hpp"

namespace wexp {

QPoly CaseEntry::total() const {
  QPoly t;
  for (const auto* s : {&coset, &zero, &point})
    if (*s) t += (*s)->class_in_q();
  return t;
}

const std::vector<std::string>& CaseTable::case_ids() {
  static const std::vector<std::string> ids = {"I-iso",     "I-triv",    "I-nosplit",           "II-in-kernel", "II-off-kernel",
                                               "IIIa-iso",  "IIIa-triv", "IIIb-open-immersion", "IIIb-triv"};
  return ids;
}

namespace {

std::optional<CellShape> shape_or_null(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return CellShape::from_json(j.at(key));
}

}  // namespace

CaseTable CaseTable::from_json(const nlohmann::json& j) {
  CaseTable t;
  try {
    const auto& cases = j.at("cases");
    for (const auto& id : case_ids()) {
      if (!cases.contains(id)) throw ConfigError("case table lacks entry " + id);
      const auto& e = cases.at(id);
      CaseEntry c;
      c.id = id;
      const std::string cell = e.at("cell").get<std::string>();
      if (cell == "w") c.cell = CaseCell::W;
      else if (cell == "ws") c.cell = CaseCell::WS;
      else throw ConfigError("case " + id + ": cell must be \"w\" or \"ws\"");
      c.coset = shape_or_null(e, "coset");
      c.zero = shape_or_null(e, "zero");
      if (e.contains("point") && !e.at("point").is_null()) {
        const auto& p = e.at("point");
        c.point = CellShape::from_json(p.at("shape"));
        const std::string at = p.at("at").get<std::string>();
        if (at == "coset") c.point_at = PointTarget::Coset;
        else if (at == "auto") c.point_at = PointTarget::Auto;
        else throw ConfigError("case " + id + ": point target must be \"coset\" or \"auto\"");
        if (c.cell != CaseCell::W) throw ConfigError("case " + id + ": a point entry needs cell \"w\"");
      }
      if (c.total() != QPoly::q())
        throw InvariantViolation("case " + id + " does not partition the line: total class " + c.total().str());
      t.entries_.emplace(id, std::move(c));
    }
    for (const auto& [k, v] : cases.items())
      if (!t.entries_.count(k)) throw ConfigError("case table has unknown entry " + k);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed case table: ") + e.what());
  }
  return t;
}

CaseTable CaseTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open case table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("case table " + path + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

const CaseTable& CaseTable::builtin() {
  static const CaseTable t = from_json(nlohmann::json::parse(kCaseTableJson));
  return t;
}

const CaseEntry& CaseTable::at(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error("no case table entry " + id);
  return it->second;
}

nlohmann::json CaseTable::to_json() const {
  nlohmann::json cases = nlohmann::json::object();
  auto sh = [](const std::optional<CellShape>& s) { return s ? s->to_json() : nlohmann::json(nullptr); };
  for (const auto& [id, c] : entries_) {
    nlohmann::json e = {{"cell", c.cell == CaseCell::W ? "w" : "ws"}, {"coset", sh(c.coset)}, {"zero", sh(c.zero)}};
    if (c.point) e["point"] = {{"at", c.point_at == PointTarget::Coset ? "coset" : "auto"}, {"shape", c.point->to_json()}};
    cases[id] = e;
  }
  return {{"format", "wexp-case-table-1"}, {"cases", cases}};
}

}  // namespace wexp
