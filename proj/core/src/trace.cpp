#include "colorminer/trace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace colorminer {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        size_t a = f.find_first_not_of(" \t");
        size_t b = f.find_last_not_of(" \t");
        f = (a == std::string::npos) ? std::string() : f.substr(a, b - a + 1);
    }
    return fields;
}

}  // namespace

TraceTable parse_trace_csv(const std::string& csv) {
    std::istringstream ss(csv);
    std::string line;
    std::vector<std::string> header;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        header = split_csv_row(line);
        break;
    }
    if (header.empty()) throw EmptyInput("trace has no header row");

    std::vector<int32_t> input_cols, output_cols;
    for (size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "T" || header[c] == "t") continue;
        if (!header[c].empty() && (header[c][0] == 'i' || header[c][0] == 'I')) {
            input_cols.push_back(static_cast<int32_t>(c));
        } else if (!header[c].empty() &&
                   (header[c][0] == 'o' || header[c][0] == 'O')) {
            output_cols.push_back(static_cast<int32_t>(c));
        } else {
            throw ArityMismatch("unrecognized trace column '" + header[c] +
                                "' (expected T, i*, or o*)");
        }
    }
    if (input_cols.empty() || output_cols.empty()) {
        throw ArityMismatch("trace needs at least one input and one output column");
    }

    TraceTable t;
    t.input_arity = static_cast<int32_t>(input_cols.size());
    t.output_arity = static_cast<int32_t>(output_cols.size());
    int32_t row_no = 1;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv_row(line);
        if (fields.size() != header.size()) {
            throw ArityMismatch("row " + std::to_string(row_no) + " has " +
                                std::to_string(fields.size()) +
                                " fields, header has " +
                                std::to_string(header.size()));
        }
        std::vector<std::string> in, out;
        for (int32_t c : input_cols) in.push_back(fields[c]);
        for (int32_t c : output_cols) out.push_back(fields[c]);
        t.input_rows.push_back(std::move(in));
        t.output_rows.push_back(std::move(out));
        ++row_no;
    }
    if (t.input_rows.empty()) throw EmptyInput("trace has no data rows");
    return t;
}

namespace {

// Sorted-tuple interning: ids follow the lexicographic order of the
// distinct tuples, not their order of appearance.
void intern_sorted(const std::vector<std::vector<std::string>>& rows,
                   std::vector<int32_t>& ids,
                   std::vector<std::vector<std::string>>& tuples) {
    std::map<std::vector<std::string>, int32_t> index;
    for (const auto& row : rows) index.emplace(row, 0);
    int32_t next = 0;
    for (auto& [tuple, id] : index) {
        id = next++;
        tuples.push_back(tuple);
    }
    for (const auto& row : rows) ids.push_back(index.at(row));
}

}  // namespace

IngestResult ingest_trace(const TraceTable& trace) {
    for (const auto& row : trace.input_rows) {
        if (static_cast<int32_t>(row.size()) != trace.input_arity) {
            throw ArityMismatch("inconsistent input arity");
        }
    }
    for (const auto& row : trace.output_rows) {
        if (static_cast<int32_t>(row.size()) != trace.output_arity) {
            throw ArityMismatch("inconsistent output arity");
        }
    }

    IngestResult r;
    intern_sorted(trace.input_rows, r.cs.text, r.symbol_tuples);
    intern_sorted(trace.output_rows, r.cs.colors, r.color_tuples);
    r.cs.sigma = static_cast<int32_t>(r.symbol_tuples.size());
    r.cs.gamma = static_cast<int32_t>(r.color_tuples.size());
    for (int32_t id = 0; id < r.cs.sigma; ++id) {
        r.cs.symbol_tokens.push_back(default_symbol_token(id));
    }
    for (int32_t id = 0; id < r.cs.gamma; ++id) {
        r.cs.color_tokens.push_back(default_color_token(id));
    }
    return r;
}

std::string render_mapping(const IngestResult& result) {
    auto tuple_str = [](const std::vector<std::string>& t) {
        std::string s = "(";
        for (size_t k = 0; k < t.size(); ++k) {
            if (k > 0) s += ',';
            s += t[k];
        }
        s += ')';
        return s;
    };

    std::string out = "inputs:\n";
    for (size_t id = 0; id < result.symbol_tuples.size(); ++id) {
        out += "  " + tuple_str(result.symbol_tuples[id]) + " -> " +
               result.cs.symbol_tokens[id] + "\n";
    }
    out += "outputs:\n";
    for (size_t id = 0; id < result.color_tuples.size(); ++id) {
        out += "  " + tuple_str(result.color_tuples[id]) + " -> " +
               result.cs.color_tokens[id] + "\n";
    }
    return out;
}

}  // namespace colorminer
