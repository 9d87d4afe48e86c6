#pragma once

// Text formats.
//
// Instance:   hitset v1 <line_constrained|line_separable>
//             <n> <m>
//             n lines "<px> <py>", then m lines "<cx> <cy> <r>"
// Solution:   <k>
//             k ascending 1-based point indices separated by spaces
//
// '#' starts a comment; blank lines are ignored. Numbers are written in the
// shortest form that reads back to the same double.

#include <string>
#include <string_view>

#include "hitset/geometry.hpp"

namespace hitset {

/// Throws Error(ParseError) with the 1-based line number as index.
RawInstance parse_instance(std::string_view text);
std::string format_instance(const RawInstance& instance);

HittingSet parse_solution(std::string_view text);
std::string format_solution(const HittingSet& solution);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hitset
