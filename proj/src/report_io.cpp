#include "rmtcert/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rmtcert {

std::string fmt17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void append_details(std::ostringstream& out,
                    const std::vector<SubCheck>& details,
                    const std::string& indent) {
  out << indent << "\"details\": [\n";
  for (size_t i = 0; i < details.size(); ++i) {
    const SubCheck& c = details[i];
    out << indent << "  {\"name\": \"" << c.name
        << "\", \"value\": " << fmt17(c.value)
        << ", \"threshold\": " << fmt17(c.threshold)
        << ", \"pass\": " << bool_str(c.pass) << "}"
        << (i + 1 < details.size() ? "," : "") << "\n";
  }
  out << indent << "]\n";
}

void append_bound_report(std::ostringstream& out, const BoundReport& r,
                         const std::string& indent) {
  out << indent << "\"m\": " << r.m << ",\n"
      << indent << "\"max_mQ\": " << fmt17(r.max_mQ) << ",\n"
      << indent << "\"lambda1_Kprime\": " << fmt17(r.lambda1_Kprime) << ",\n"
      << indent << "\"det_T\": " << fmt17(r.det_T) << ",\n"
      << indent << "\"lemma2_ok\": " << bool_str(r.lemma2_ok) << ",\n"
      << indent << "\"theorem1_ok\": " << bool_str(r.theorem1_ok) << ",\n";
  append_details(out, r.details, indent);
}

} // namespace

std::string bound_report_json(const BoundReport& report) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n";
  append_bound_report(out, report, "  ");
  out << "}\n";
  return out.str();
}

std::string scan_csv(const std::vector<BoundReport>& reports,
                     std::uint64_t seed) {
  std::ostringstream out;
  out << "# schema=1\n# seed=" << seed << "\n";
  out << "m,max_mQ,lambda1_Kprime,det_T,lemma2_ok,theorem1_ok\n";
  for (const BoundReport& r : reports) {
    out << r.m << "," << fmt17(r.max_mQ) << "," << fmt17(r.lambda1_Kprime)
        << "," << fmt17(r.det_T) << "," << bool_str(r.lemma2_ok) << ","
        << bool_str(r.theorem1_ok) << "\n";
  }
  return out.str();
}

std::string scan_json(const std::vector<BoundReport>& reports,
                      std::uint64_t seed) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n  \"seed\": " << seed
      << ",\n  \"reports\": [\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    out << "    {\n";
    append_bound_report(out, reports[i], "      ");
    out << "    }" << (i + 1 < reports.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string lemma3_json(const Lemma3Report& r) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n"
      << "  \"m\": " << r.m << ",\n"
      << "  \"unimodal\": " << bool_str(r.unimodal) << ",\n"
      << "  \"x0\": " << fmt17(r.x0) << ",\n"
      << "  \"u_at_0\": " << fmt17(r.u_at_0) << ",\n"
      << "  \"u_at_1\": " << fmt17(r.u_at_1) << ",\n"
      << "  \"min_u\": " << fmt17(r.min_u) << ",\n"
      << "  \"max_u\": " << fmt17(r.max_u) << ",\n"
      << "  \"endpoints_ok\": " << bool_str(r.endpoints_ok) << ",\n"
      << "  \"range_ok\": " << bool_str(r.range_ok) << ",\n"
      << "  \"ok\": " << bool_str(r.ok) << "\n}\n";
  return out.str();
}

std::string lemma4_json(const Lemma4Report& r) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n"
      << "  \"overall_min\": " << fmt17(r.overall_min) << ",\n"
      << "  \"overall_max\": " << fmt17(r.overall_max) << ",\n"
      << "  \"q3_max_refined\": " << fmt17(r.q3_max_refined) << ",\n"
      << "  \"pass\": " << bool_str(r.pass) << ",\n"
      << "  \"per_q\": [\n";
  for (size_t i = 0; i < r.entries.size(); ++i) {
    const Lemma4Entry& e = r.entries[i];
    out << "    {\"q\": " << e.q << ", \"min_w\": " << fmt17(e.min_w)
        << ", \"max_w\": " << fmt17(e.max_w) << "}"
        << (i + 1 < r.entries.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string fg_json(const FGReport& r) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n"
      << "  \"min_F\": " << fmt17(r.min_F) << ",\n"
      << "  \"G_sqrt3\": " << fmt17(r.G_sqrt3) << ",\n"
      << "  \"F_at_1\": " << fmt17(r.F_at_1) << ",\n"
      << "  \"F_prime_1\": " << fmt17(r.F_prime_1) << ",\n"
      << "  \"F_second_1\": " << fmt17(r.F_second_1) << ",\n"
      << "  \"pass\": " << bool_str(r.pass) << ",\n";
  append_details(out, r.details, "  ");
  out << "}\n";
  return out.str();
}

std::string maple_json(const MapleReport& r) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n  \"terms\": [";
  for (size_t i = 0; i < r.terms.size(); ++i)
    out << fmt17(r.terms[i]) << (i + 1 < r.terms.size() ? ", " : "");
  out << "],\n  \"min_value\": " << fmt17(r.min_value)
      << ",\n  \"threshold\": " << fmt17(kMapleMargin)
      << ",\n  \"pass\": " << bool_str(r.pass) << "\n}\n";
  return out.str();
}

std::string loggas_csv(const std::vector<RatioEstimate>& estimates,
                       std::uint64_t seed) {
  std::ostringstream out;
  out << "# schema=1\n";
  out << "N,beta,k,method,value_log,error,seed\n";
  for (const RatioEstimate& est : estimates) {
    for (const LogGasEstimate* z : {&est.z4, &est.z1, &est.z2}) {
      out << est.N << "," << z->beta << "," << z->k << ","
          << method_name(z->method) << "," << fmt17(z->log_value) << ","
          << fmt17(z->error) << "," << seed << "\n";
    }
  }
  return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
    out << content;
    if (!out) throw std::runtime_error("atomic_write: write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("atomic_write: rename failed: " + path);
}

} // namespace rmtcert
