// JSON serialization of analysis results: characteristic matrices with their
// span data, reduction and dual reports, trellis descriptions, and the
// simultaneous-reduction trace.
#pragma once

#include <string>

#include "tbcc/reduction.hpp"
#include "tbcc/trellis.hpp"

namespace tbcc {

std::string characteristic_to_json(const CharacteristicMatrix& cm);
CharacteristicMatrix characteristic_from_json(const std::string& text);

std::string reduction_report_to_json(const ReductionReport& rep,
                                     bool include_outcomes = false);
std::string dual_report_to_json(const DualReport& rep,
                                bool include_outcomes = false);
std::string trellis_to_json(const TbTrellis& t);
std::string simultaneous_report_to_json(const SimultaneousReport& rep);

}  // namespace tbcc
