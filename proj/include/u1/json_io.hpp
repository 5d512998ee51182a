// JSON forms of the library's reports. Kept out of the main headers so only
// users of the CLI-facing formats pull in nlohmann::json.

#ifndef U1_JSON_IO_HPP
#define U1_JSON_IO_HPP

#include <json.hpp>

#include "u1/fragments.hpp"
#include "u1/lab.hpp"
#include "u1/sat.hpp"
#include "u1/structure.hpp"

namespace u1 {

// Throws StructureError.
Structure structure_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Structure& s);

nlohmann::json to_json(const Diagnostic& d);
// Elapsed time is included only when with_timing is set, so that reports of
// identical searches are byte-identical.
nlohmann::json to_json(const SearchReport& r, bool with_timing = false);
nlohmann::json to_json(const ExperimentResult& r);

}  // namespace u1

#endif  // U1_JSON_IO_HPP
