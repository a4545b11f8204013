#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/triangle.hpp"

namespace riordan {

/*
 * Format-independent description of one command result.  The renderers turn
 * it into an aligned table, CSV, or a single-line JSON document with the
 * fixed shape {"kind", "rows", "meta", ...}; meta carries the command name,
 * the working order/row count and the input expressions, so a JSON consumer
 * can reproduce the run.
 */
struct OutputDoc {
    enum class Kind { Triangle, Series, Pair, Boolean };

    Kind kind = Kind::Triangle;
    std::vector<std::vector<Rat>> rows;
    std::vector<std::string> labels;  // Pair: one label per row

    std::string command;
    int order = 0;
    std::vector<std::pair<std::string, std::string>> inputs;

    // Boolean payload: equal flag plus the first mismatch when unequal.
    bool equal = false;
    std::optional<std::tuple<int, int, Rat, Rat>> mismatch;
};

OutputDoc triangle_doc(const Triangle& t, std::string command, int rows,
                       std::vector<std::pair<std::string, std::string>> inputs);

std::string render_table(const OutputDoc& doc);
std::string render_csv(const OutputDoc& doc);
std::string render_json(const OutputDoc& doc);

// Dispatch on "table" | "csv" | "json"; unknown names throw MathError.
std::string render(const OutputDoc& doc, const std::string& format);

}  // namespace riordan
