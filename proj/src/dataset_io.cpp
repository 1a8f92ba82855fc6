#include "phaseid/dataset_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>

namespace phaseid {

namespace {

std::string format_reading(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_reading(const std::string& field, int line_no, int field_no) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ParseError("unreadable number '" + field + "'", line_no, field_no);
  if (!std::isfinite(value))
    throw SchemaMismatch("non-finite reading '" + field + "' at line " +
                         std::to_string(line_no));
  if (value < 0.0)
    throw SchemaMismatch("negative reading '" + field + "' at line " +
                         std::to_string(line_no) +
                         "; consumption data must be non-negative");
  return value;
}

struct RawRow {
  std::string meter_id;
  std::string role;
  std::string hint;
  std::vector<double> readings;
  int line_no = 0;
};

}  // namespace

DatasetFile read_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");

  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty file", 1, 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> header = split_line(line);
  if (header.size() < 4 || header[0] != "meter_id" || header[1] != "role" ||
      header[2] != "phase_hint")
    throw SchemaMismatch(
        "header must start with meter_id,role,phase_hint,interval_0,...");
  const int N = static_cast<int>(header.size()) - 3;
  for (int j = 0; j < N; ++j)
    if (header[3 + j] != "interval_" + std::to_string(j))
      throw SchemaMismatch("interval column " + std::to_string(j) +
                           " is named '" + header[3 + j] + "', expected interval_" +
                           std::to_string(j));

  std::vector<RawRow> phase_rows(3);
  std::array<bool, 3> phase_seen{false, false, false};
  std::vector<RawRow> consumer_rows;
  std::set<std::string> seen_ids;

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields = split_line(line);
    if (static_cast<int>(fields.size()) != 3 + N)
      throw ParseError("row has " + std::to_string(fields.size()) +
                           " fields, expected " + std::to_string(3 + N),
                       line_no, static_cast<int>(fields.size()));

    RawRow row;
    row.meter_id = fields[0];
    row.role = fields[1];
    row.hint = fields[2];
    row.line_no = line_no;
    if (row.meter_id.empty())
      throw SchemaMismatch("empty meter_id at line " + std::to_string(line_no));
    if (!seen_ids.insert(row.meter_id).second)
      throw SchemaMismatch("duplicate meter_id '" + row.meter_id + "' at line " +
                           std::to_string(line_no));
    row.readings.reserve(N);
    for (int j = 0; j < N; ++j)
      row.readings.push_back(parse_reading(fields[3 + j], line_no, 4 + j));

    if (row.role == "consumer") {
      consumer_rows.push_back(std::move(row));
    } else if (row.role == "phase_A" || row.role == "phase_B" ||
               row.role == "phase_C") {
      int p = row.role[6] - 'A';
      if (phase_seen[p])
        throw SchemaMismatch("role " + row.role + " appears more than once");
      phase_seen[p] = true;
      phase_rows[p] = std::move(row);
    } else {
      throw SchemaMismatch("unknown role '" + row.role + "' at line " +
                           std::to_string(line_no));
    }
  }
  for (int p = 0; p < 3; ++p)
    if (!phase_seen[p])
      throw SchemaMismatch(std::string("missing role phase_") +
                           static_cast<char>('A' + p));

  const int n_i = static_cast<int>(consumer_rows.size());
  DatasetFile out;
  out.readings.values.resize(3 + n_i, N);
  out.readings.interval_minutes = 15;
  out.meter_ids.reserve(3 + n_i);

  for (int p = 0; p < 3; ++p) {
    out.meter_ids.push_back(phase_rows[p].meter_id);
    for (int j = 0; j < N; ++j)
      out.readings.values(p, j) = phase_rows[p].readings[j];
  }

  int hinted = 0;
  std::vector<Phase> hints(n_i);
  for (int c = 0; c < n_i; ++c) {
    const RawRow& row = consumer_rows[c];
    out.meter_ids.push_back(row.meter_id);
    for (int j = 0; j < N; ++j) out.readings.values(3 + c, j) = row.readings[j];
    if (!row.hint.empty()) {
      if (row.hint.size() != 1 ||
          (row.hint[0] != 'A' && row.hint[0] != 'B' && row.hint[0] != 'C'))
        throw SchemaMismatch("phase_hint '" + row.hint + "' at line " +
                             std::to_string(row.line_no) +
                             " is not one of A, B, C");
      hints[c] = phase_from_letter(row.hint[0]);
      ++hinted;
    }
  }
  if (hinted == n_i && n_i > 0)
    out.hints = PhaseAssignment(std::move(hints));
  else if (hinted != 0)
    throw SchemaMismatch("phase_hint present for " + std::to_string(hinted) +
                         " of " + std::to_string(n_i) +
                         " consumers; hint all or none");
  return out;
}

void write_dataset_csv(const std::string& path, const MeasurementMatrix& z,
                       const std::vector<std::string>& meter_ids,
                       const std::optional<PhaseAssignment>& hints) {
  if (static_cast<int>(meter_ids.size()) != z.meter_count())
    throw SchemaMismatch("meter_ids length " + std::to_string(meter_ids.size()) +
                         " does not match meter count " +
                         std::to_string(z.meter_count()));
  if (hints && hints->consumer_count() != z.consumer_count())
    throw SchemaMismatch("hint count does not match consumer count");

  std::ofstream outf(path);
  if (!outf) throw Error("cannot open '" + path + "' for writing");

  outf << "meter_id,role,phase_hint";
  for (int j = 0; j < z.sample_count(); ++j) outf << ",interval_" << j;
  outf << "\n";

  for (int i = 0; i < z.meter_count(); ++i) {
    std::string role, hint;
    if (i < 3) {
      role = std::string("phase_") + static_cast<char>('A' + i);
    } else {
      role = "consumer";
      if (hints) hint = phase_letter(hints->phase_of(i - 3));
    }
    outf << meter_ids[i] << ',' << role << ',' << hint;
    for (int j = 0; j < z.sample_count(); ++j)
      outf << ',' << format_reading(z.values(i, j));
    outf << "\n";
  }
  if (!outf) throw Error("write to '" + path + "' failed");
}

std::vector<std::string> default_meter_ids(int consumer_count) {
  std::vector<std::string> ids = {"phase_A", "phase_B", "phase_C"};
  char buf[24];
  for (int c = 0; c < consumer_count; ++c) {
    std::snprintf(buf, sizeof buf, "c%04d", c);
    ids.emplace_back(buf);
  }
  return ids;
}

void export_dataset(const SimulatedDataset& d, const std::string& path) {
  write_dataset_csv(path, d.noisy, default_meter_ids(d.noisy.consumer_count()),
                    d.truth.assignment);
}

SimulatedDataset import_dataset(const std::string& path) {
  DatasetFile file = read_dataset_csv(path);
  SimulatedDataset out;
  out.noisy = std::move(file.readings);
  if (file.hints) out.truth.assignment = std::move(*file.hints);
  return out;
}

std::string inference_report_json(const InferenceReport& report,
                                  const std::vector<std::string>& meter_ids,
                                  int sample_count) {
  nlohmann::ordered_json j;
  const int n_i = report.assignment.consumer_count();
  j["mode"] = to_string(report.mode);
  j["n"] = n_i + kDependentRows;
  j["n_i"] = n_i;
  j["N"] = sample_count;

  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  for (int c = 0; c < n_i; ++c) {
    std::string id = 3 + c < static_cast<int>(meter_ids.size())
                         ? meter_ids[3 + c]
                         : "consumer_" + std::to_string(c);
    assignment[id] = std::string(1, phase_letter(report.assignment.phase_of(c)));
  }
  j["assignment"] = std::move(assignment);

  std::vector<double> margins(report.margins.data(),
                              report.margins.data() + report.margins.size());
  j["margins"] = margins;
  j["condition_number_Cd"] = report.condition_number_Cd;
  j["warnings"] = report.warnings;
  return j.dump(2);
}

}  // namespace phaseid
