#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wexp/strata.hpp"

namespace wexp {

enum class CaseCell { W, WS };
enum class PointTarget { Coset, Auto };

// Shapes of the line through wI in direction s, intersected with the orbits
// of the main cell (coset/zero tagged) and, for descents, a single point
// in the other cell.
struct CaseEntry {
  std::string id;
  CaseCell cell = CaseCell::WS;
  std::optional<CellShape> coset;
  std::optional<CellShape> zero;
  std::optional<CellShape> point;
  PointTarget point_at = PointTarget::Coset;

  QPoly total() const;
};

class CaseTable {
 public:
  static const std::vector<std::string>& case_ids();
  // The table compiled into the binary from data/case_table.json.
  static const CaseTable& builtin();
  static CaseTable from_json(const nlohmann::json& j);
  static CaseTable load_file(const std::string& path);

  const CaseEntry& at(const std::string& id) const;
  nlohmann::json to_json() const;

 private:
  std::map<std::string, CaseEntry> entries_;
};

}  // namespace wexp
