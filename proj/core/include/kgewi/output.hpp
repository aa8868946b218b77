#pragma once

#include <filesystem>
#include <string>

#include "kgewi/studies.hpp"

namespace kgewi {

inline constexpr const char* kVersion = "1.0.0";

/// Header exactly:
///   epsilon,tau,h,method,order,h1_error,rate,wall_time_s,max_energy_rel_error
/// Numbers at 17 significant digits; rate empty when absent; h1_error is
/// "inf" on instability.
std::string records_to_csv(const std::vector<ErrorRecord>& records);
void write_records_csv(const std::vector<ErrorRecord>& records,
                       const std::filesystem::path& path);

/// Mirrors the CSV records plus run metadata (version, timestamps).
std::string summary_to_json(const std::vector<ErrorRecord>& records, const std::string& kind,
                            const std::string& config_origin, int workers);
void write_summary_json(const std::vector<ErrorRecord>& records, const std::string& kind,
                        const std::string& config_origin, int workers,
                        const std::filesystem::path& path);

/// Columns: t,energy,energy_rel_error.
void write_trace_csv(const EnergyTrace& trace, const std::filesystem::path& path);

/// File name for one trace inside the trace directory.
std::string trace_file_name(const EnergyTrace& trace, int index);

}  // namespace kgewi
