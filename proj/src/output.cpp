#include "riordan/output.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "riordan/errors.hpp"

namespace riordan {

OutputDoc triangle_doc(const Triangle& t, std::string command, int rows,
                       std::vector<std::pair<std::string, std::string>> inputs) {
    OutputDoc doc;
    doc.kind = OutputDoc::Kind::Triangle;
    doc.rows = t.data();
    doc.command = std::move(command);
    doc.order = rows;
    doc.inputs = std::move(inputs);
    return doc;
}

namespace {

std::string mismatch_line(const std::tuple<int, int, Rat, Rat>& m) {
    std::ostringstream os;
    os << "unequal at (" << std::get<0>(m) << ", " << std::get<1>(m)
       << "): lhs = " << std::get<2>(m).str() << ", rhs = " << std::get<3>(m).str();
    return os.str();
}

}  // namespace

std::string render_table(const OutputDoc& doc) {
    std::ostringstream os;
    if (doc.kind == OutputDoc::Kind::Boolean) {
        os << (doc.equal ? "equal" : mismatch_line(*doc.mismatch)) << "\n";
        return os.str();
    }
    if (doc.kind == OutputDoc::Kind::Series) {
        bool first = true;
        for (const Rat& c : doc.rows.at(0)) {
            if (!first) os << " ";
            os << c.str();
            first = false;
        }
        os << "\n";
        return os.str();
    }
    // Column-aligned grid; pairs get their label as a row prefix.
    size_t label_width = 0;
    for (const auto& l : doc.labels) label_width = std::max(label_width, l.size());
    std::vector<size_t> width;
    for (const auto& row : doc.rows)
        for (size_t k = 0; k < row.size(); ++k) {
            if (width.size() <= k) width.push_back(0);
            width[k] = std::max(width[k], row[k].str().size());
        }
    for (size_t n = 0; n < doc.rows.size(); ++n) {
        if (!doc.labels.empty()) {
            const std::string& l = doc.labels[n];
            os << l << ':' << std::string(label_width - l.size() + 1, ' ');
        }
        for (size_t k = 0; k < doc.rows[n].size(); ++k) {
            std::string cell = doc.rows[n][k].str();
            if (k > 0) os << ' ';
            os << std::string(width[k] - cell.size(), ' ') << cell;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const OutputDoc& doc) {
    std::ostringstream os;
    if (doc.kind == OutputDoc::Kind::Boolean) {
        os << (doc.equal ? "equal" : "unequal");
        if (doc.mismatch) {
            os << ',' << std::get<0>(*doc.mismatch) << ',' << std::get<1>(*doc.mismatch)
               << ',' << std::get<2>(*doc.mismatch).str() << ','
               << std::get<3>(*doc.mismatch).str();
        }
        os << "\n";
        return os.str();
    }
    for (const auto& row : doc.rows) {
        for (size_t k = 0; k < row.size(); ++k) {
            if (k > 0) os << ',';
            os << row[k].str();
        }
        os << "\n";
    }
    return os.str();
}

std::string render_json(const OutputDoc& doc) {
    nlohmann::ordered_json j;
    switch (doc.kind) {
        case OutputDoc::Kind::Triangle: j["kind"] = "triangle"; break;
        case OutputDoc::Kind::Series: j["kind"] = "series"; break;
        case OutputDoc::Kind::Pair: j["kind"] = "pair"; break;
        case OutputDoc::Kind::Boolean: j["kind"] = "boolean"; break;
    }
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const Rat& c : row) jr.push_back(c.str());
        j["rows"].push_back(std::move(jr));
    }
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    if (doc.kind == OutputDoc::Kind::Boolean) {
        j["equal"] = doc.equal;
        if (doc.mismatch) {
            j["mismatch"] = {{"n", std::get<0>(*doc.mismatch)},
                             {"k", std::get<1>(*doc.mismatch)},
                             {"lhs", std::get<2>(*doc.mismatch).str()},
                             {"rhs", std::get<3>(*doc.mismatch).str()}};
        }
    }
    nlohmann::ordered_json meta;
    meta["command"] = doc.command;
    meta["order"] = doc.order;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : doc.inputs) inputs[key] = value;
    meta["inputs"] = std::move(inputs);
    j["meta"] = std::move(meta);
    return j.dump() + "\n";
}

std::string render(const OutputDoc& doc, const std::string& format) {
    if (format == "table") return render_table(doc);
    if (format == "csv") return render_csv(doc);
    if (format == "json") return render_json(doc);
    throw MathError("unknown format '" + format + "'");
}

}  // namespace riordan
