#pragma once

#include "ntoric/newton.hpp"
#include "ntoric/oka.hpp"

#include <string>

namespace ntoric {

// A validated input document: the ambient cone, the support of the series,
// and run options.
struct InputSpec {
    int rank = 3;
    std::vector<Vec> cone;
    std::vector<DualVec> support;
    int delta_shell_cap = 64;
    int root = -1; // node id override for the sequence tie-break order
};

InputSpec parse_input(const std::string& json_text);
std::string serialize_input(const InputSpec& spec);

// Per-subcommand JSON payloads. All exact values are rendered as strings,
// rationals as "a/b"; output is byte-deterministic for a fixed input.
std::string cmd_fan(const InputSpec& spec);
std::string cmd_graph(const InputSpec& spec);
std::string cmd_invariants(const InputSpec& spec);
std::string cmd_seq(const InputSpec& spec);
std::string cmd_reduce(const InputSpec& spec);
std::string cmd_report(const InputSpec& spec);

std::string export_dot(const PlumbingGraph& g);
std::string cmd_dot(const InputSpec& spec);

} // namespace ntoric
