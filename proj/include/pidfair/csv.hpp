#ifndef PIDFAIR_CSV_HPP
#define PIDFAIR_CSV_HPP

#include <string>
#include <vector>

#include "pidfair/dist.hpp"

namespace pidfair {

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC 4180 reader: comma-delimited, quoted fields may contain commas,
// escaped quotes ("") and newlines. A header row is required.
CsvTable read_csv(const std::string& path);

// Builds the empirical joint from the named columns. An empty
// yhat_col selects dataset-only mode: the prediction axis collapses to
// a single placeholder symbol so the audit reduces to I(Z;Y).
JointDist ingest_csv(const std::string& path, const std::string& z_col,
                     const std::string& y_col, const std::string& yhat_col,
                     double smoothing);

}  // namespace pidfair

#endif
