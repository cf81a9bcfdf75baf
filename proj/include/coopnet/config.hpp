#ifndef COOPNET_CONFIG_HPP
#define COOPNET_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "coopnet/optimizer.hpp"
#include "coopnet/types.hpp"

namespace coopnet {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    std::string variable;  // SystemParams field name; empty = no sweep
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
};

struct SimSpec {
    std::uint64_t slots = 0;  // 0 = skip simulation in sweeps
    std::uint64_t seed = 1;
    std::uint64_t warmup = 10000;
    bool force_decode = false;
};

struct RunConfig {
    SystemParams params;
    OptimizerConfig optimizer;
    SweepSpec sweep;
    SimSpec sim;
    std::string output;  // empty = stdout
};

// Parses the flat key = value format ('#' comments, blank lines ignored).
// Unknown keys raise ParseError; missing keys keep the shipped defaults;
// the assembled SystemParams must pass validate() or ValidationError is
// raised. sigma_s_sd_list / sigma_s_pd_list accept comma-separated gain
// lists and reduce them to the best antenna by max.
RunConfig parse_config(const std::string& text);

// Applies a sweep value to its target field (throws ValidationError for an
// unknown variable or an out-of-range value).
void apply_sweep_value(SystemParams& params, const std::string& variable, double value);

}  // namespace coopnet

#endif
