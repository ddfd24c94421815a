#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace goodlab {

/// Structured result of one CLI invocation.
///
/// Schema (keys in this order, absent keys omitted):
///   command   subcommand name
///   params    semantic parameters (never --threads/--json/--timing)
///   inputs    name -> {path, fnv1a64}
///   seed      64-bit seed, for randomized commands
///   result    command-specific payload
///   wall_time_ms  only with --timing
///
/// Rationals are written as "p/q" strings and big integers as decimal
/// strings; no floating-point value appears outside wall_time_ms. The text
/// form flattens the same tree into "dotted.key: value" lines.
class Report {
public:
    using Json = nlohmann::ordered_json;

    explicit Report(std::string command);

    Json& params() { return params_; }
    Json& result() { return result_; }
    void add_input(const std::string& name, const std::string& path, std::string_view contents);
    void set_seed(std::uint64_t seed) { seed_ = seed; }
    void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

    Json to_json() const;
    std::string json_text() const;
    std::string human_text() const;

private:
    std::string command_;
    Json params_ = Json::object();
    Json inputs_ = Json::object();
    Json result_ = Json::object();
    std::optional<std::uint64_t> seed_;
    std::optional<double> wall_time_ms_;
};

/// 64-bit FNV-1a digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

}  // namespace goodlab
