#include "kgewi/output.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "json.hpp"

namespace kgewi {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write file: " + path.string());
  f << text;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string records_to_csv(const std::vector<ErrorRecord>& records) {
  std::string out = "epsilon,tau,h,method,order,h1_error,rate,wall_time_s,max_energy_rel_error\n";
  for (const auto& r : records) {
    out += format_double(r.epsilon);
    out += ',';
    out += format_double(r.tau);
    out += ',';
    out += format_double(r.h);
    out += ',';
    out += r.method;
    out += ',';
    out += std::to_string(r.order);
    out += ',';
    out += format_double(r.h1_error);
    out += ',';
    if (r.rate) out += format_double(*r.rate);
    out += ',';
    out += format_double(r.wall_time_s);
    out += ',';
    out += format_double(r.max_energy_rel_error);
    out += '\n';
  }
  return out;
}

void write_records_csv(const std::vector<ErrorRecord>& records,
                       const std::filesystem::path& path) {
  write_text_file(records_to_csv(records), path);
}

std::string summary_to_json(const std::vector<ErrorRecord>& records, const std::string& kind,
                            const std::string& config_origin, int workers) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["generated_at"] = utc_timestamp();
  j["kind"] = kind;
  j["config"] = config_origin;
  j["workers"] = workers;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json item;
    item["epsilon"] = r.epsilon;
    item["tau"] = r.tau;
    item["h"] = r.h;
    item["method"] = r.method;
    item["order"] = r.order;
    item["status"] = r.unstable ? "unstable" : "ok";
    if (std::isfinite(r.h1_error)) {
      item["h1_error"] = r.h1_error;
    } else {
      item["h1_error"] = nullptr;
    }
    if (r.rate) {
      item["rate"] = *r.rate;
    } else {
      item["rate"] = nullptr;
    }
    item["wall_time_s"] = r.wall_time_s;
    item["max_energy_rel_error"] = r.max_energy_rel_error;
    arr.push_back(std::move(item));
  }
  j["records"] = std::move(arr);
  return j.dump(2) + "\n";
}

void write_summary_json(const std::vector<ErrorRecord>& records, const std::string& kind,
                        const std::string& config_origin, int workers,
                        const std::filesystem::path& path) {
  write_text_file(summary_to_json(records, kind, config_origin, workers), path);
}

void write_trace_csv(const EnergyTrace& trace, const std::filesystem::path& path) {
  std::string out = "t,energy,energy_rel_error\n";
  for (const auto& p : trace.points) {
    out += format_double(p.t);
    out += ',';
    out += format_double(p.energy);
    out += ',';
    out += format_double(p.rel_error);
    out += '\n';
  }
  write_text_file(out, path);
}

std::string trace_file_name(const EnergyTrace& trace, int index) {
  return "energy_" + trace.method.tag() + "_tau" + std::to_string(index) + ".csv";
}

}  // namespace kgewi
