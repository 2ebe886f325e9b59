#ifndef WCONFORMAL_REPORT_HPP
#define WCONFORMAL_REPORT_HPP

#include <string>
#include <vector>

#include "wconformal/catalog.hpp"
#include "wconformal/criterion.hpp"

namespace wconformal {

/// One displayed level with its verdict data.
struct LevelCell {
    std::string k_shifted;
    std::string k;
    bool admissible = false;
    bool admissibility_defined = false;
    bool degenerate_class = false;
    std::string excluded_reason;
    std::string verdict;
    std::string conditions;  // compact A/B/C/D/E breakdown
    std::string expected;    // catalog Column XI, when available
};

struct OutputRow {
    std::string algebra;
    std::string orbit_or_partition;
    std::string gnat;
    std::vector<std::string> knat;
    std::string cw_factored;
    std::string cw_expanded;
    std::vector<LevelCell> levels;
    std::vector<std::string> notes;
};

enum class Format { Table, Json, Csv };
Format parse_format(const std::string& s);

std::string render_row(const OutputRow& row, Format f);
std::string render_rows(const std::vector<OutputRow>& rows, Format f);

/// Builds the full live row for one catalog record.
OutputRow row_for_record(const OrbitRecord& rec);

/// Builds the row for one classical partition datum.
OutputRow row_for_partition(const PartitionPair& p);

/// Comparison of one record against the live computation.
struct RowDiff {
    std::string key;
    std::vector<std::string> unexplained;
    std::vector<std::string> explained;
};
RowDiff reproduce_record(const OrbitRecord& rec);

} // namespace wconformal

#endif
