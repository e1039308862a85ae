#ifndef LRC_SERIALIZE_HPP
#define LRC_SERIALIZE_HPP

#include <optional>
#include <string>

#include "lrc/code.hpp"
#include "lrc/construct.hpp"

namespace lrc {

// On-disk form of a code: the field, the generator with entries as packed
// integers (polynomial coefficients base p, low coefficient first), and
// optionally the repair-group structure. The text is canonical JSON, so a
// read/write round trip reproduces the file byte for byte.
struct CodeDocument {
    LinearCode code;
    std::optional<LocalityStructure> locality;
};

std::string code_to_json(const LinearCode& code, const LocalityStructure* locality = nullptr);
CodeDocument code_from_json(const std::string& text);

CodeDocument read_code_file(const std::string& path);
void write_code_file(const std::string& path, const LinearCode& code,
                     const LocalityStructure* locality = nullptr);

std::string report_to_json(const ConstructionReport& report);
void write_report_file(const std::string& path, const ConstructionReport& report);

// Header: q,trials,successes,rate,mean_distance,bound,d_opt
std::string monte_carlo_csv(const std::vector<MonteCarloRow>& rows);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lrc

#endif
