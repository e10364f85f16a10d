#pragma once

#include <string>
#include <vector>

#include "colorminer/colored_string.hpp"

namespace colorminer {

/*
 * A simulation trace: each row is a tuple of input values plus a tuple of
 * output values, one row per time step. Values are kept as strings; the
 * ingestion step compares tuples componentwise as strings.
 */
struct TraceTable {
    int32_t input_arity = 0;
    int32_t output_arity = 0;
    std::vector<std::vector<std::string>> input_rows;
    std::vector<std::vector<std::string>> output_rows;
};

/*
 * Parse a CSV trace. The header names the columns: an optional leading
 * "T" column (timestamps, ignored), input columns whose names start with
 * 'i' and output columns whose names start with 'o'. Every data row must
 * have as many fields as the header.
 *
 * Throws ArityMismatch on ragged rows or a header with no i/o columns,
 * EmptyInput when there are no data rows.
 */
TraceTable parse_trace_csv(const std::string& csv);

struct IngestResult {
    ColoredString cs;
    // distinct tuples in the order their ids were assigned
    std::vector<std::vector<std::string>> symbol_tuples;
    std::vector<std::vector<std::string>> color_tuples;
};

/*
 * Turn a trace into a colored string: distinct input tuples sorted
 * lexicographically (componentwise string comparison) become symbols
 * a,b,c,...; distinct output tuples likewise become colors x,y,z,...;
 * row k becomes position k.
 */
IngestResult ingest_trace(const TraceTable& trace);

// Human-readable mapping tables, e.g. "(0,1,0) -> a". Stable output, used
// by the conversion tool and its golden tests.
std::string render_mapping(const IngestResult& result);

}  // namespace colorminer
