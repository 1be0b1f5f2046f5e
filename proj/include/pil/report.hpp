#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pil/codim.hpp"
#include "pil/specht.hpp"
#include "pil/theory.hpp"

namespace pil {

inline constexpr const char* kReportSchema = "pi-lattice/1";

/// {"free_rank": r, "torsion": [d_1, ...]}
nlohmann::json to_json(const AbelianInvariants& inv);
/// [{"q": q, "count": c}, ...] in ascending q.
nlohmann::json to_json(const std::map<Integer, std::size_t>& per_q);
/// Class labels are the cycle types of class_representatives(n).
nlohmann::json to_json(const QuotientCharacter& c, int n);
nlohmann::json to_json(const CodimReport& r, bool timing);
nlohmann::json to_json(const FiltrationReport& r);
nlohmann::json to_json(const VerificationOutcome& o);
nlohmann::json to_json(const DrenskyFiltration& d);

/// Top-level document with the schema tag.
nlohmann::json report_document(const std::string& command);

/// Byte-stable text: two-space indentation, sorted keys, trailing newline.
std::string dump_report(const nlohmann::json& j);

}  // namespace pil
