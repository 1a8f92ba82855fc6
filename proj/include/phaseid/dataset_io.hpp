#ifndef PHASEID_DATASET_IO_HPP
#define PHASEID_DATASET_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "phaseid/inference.hpp"
#include "phaseid/simulator.hpp"

namespace phaseid {

/// On-disk dataset: UTF-8 CSV, header
///   meter_id,role,phase_hint,interval_0,...,interval_{N-1}
/// with role one of phase_A, phase_B, phase_C, consumer (each phase role
/// exactly once) and readings in decimal Wh at 17 significant digits.
/// phase_hint carries the generating phase for simulated consumers and is
/// blank for field data.
struct DatasetFile {
  MeasurementMatrix readings;           // phase rows first, in A, B, C order
  std::vector<std::string> meter_ids;   // one per row of readings
  std::optional<PhaseAssignment> hints; // present when every consumer is hinted
};

DatasetFile read_dataset_csv(const std::string& path);

void write_dataset_csv(const std::string& path, const MeasurementMatrix& z,
                       const std::vector<std::string>& meter_ids,
                       const std::optional<PhaseAssignment>& hints);

/// Ids for simulator output: phase_A/phase_B/phase_C then c0000, c0001, ...
std::vector<std::string> default_meter_ids(int consumer_count);

/// Write a simulated dataset (noisy readings plus ground-truth hints).
void export_dataset(const SimulatedDataset& d, const std::string& path);

/// Read a dataset back. Only the noisy matrix and the assignment round-trip;
/// importing a file without hints yields an empty assignment, and the other
/// ground-truth fields stay empty either way.
SimulatedDataset import_dataset(const std::string& path);

/// Machine-readable inference result:
/// {mode, n, n_i, N, assignment: {meter_id: phase}, margins,
///  condition_number_Cd, warnings[]}.
std::string inference_report_json(const InferenceReport& report,
                                  const std::vector<std::string>& meter_ids,
                                  int sample_count);

}  // namespace phaseid

#endif
