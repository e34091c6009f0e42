#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmtcert/bounds.hpp"
#include "rmtcert/loggas.hpp"

namespace rmtcert {

// All numeric report output is printed with 17 significant digits so
// identical runs produce byte-identical files.
std::string fmt17(double value);

std::string bound_report_json(const BoundReport& report);
std::string scan_csv(const std::vector<BoundReport>& reports,
                     std::uint64_t seed);
std::string scan_json(const std::vector<BoundReport>& reports,
                      std::uint64_t seed);
std::string lemma3_json(const Lemma3Report& report);
std::string lemma4_json(const Lemma4Report& report);
std::string fg_json(const FGReport& report);
std::string maple_json(const MapleReport& report);

// One row per partition-function estimate:
// N,beta,k,method,value_log,error,seed
std::string loggas_csv(const std::vector<RatioEstimate>& estimates,
                       std::uint64_t seed);

// temp file + rename
void atomic_write(const std::string& path, const std::string& content);

} // namespace rmtcert
