#ifndef PARAKP_JSON_IO_HPP
#define PARAKP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "parakp/model.hpp"
#include "parakp/parametric.hpp"

namespace parakp {

// Instance files: {"capacity": int, "items": [{"w": int, "a": int, "b": int}, ...]}
// Schedule files: {"epsilon": {"num": int, "den": int},
//                  "intervals": [{"lo": rational | "-inf", "hi": rational | "+inf",
//                                 "kind": str, "items": [int, ...],
//                                 "profit": {"alpha": rational, "beta": rational}}]}
// Rationals are {"num": int, "den": int}; values beyond 64 bits fall back
// to decimal strings. Item indices are 1-based on disk.

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& node);

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& node);

nlohmann::json schedule_to_json(const SolutionSchedule& schedule);

/// Rebuilds a schedule from disk. Solutions keep the stored profit lines;
/// weights are unknown without the instance and stay zero. Use
/// rebind_schedule to re-derive lines and weights from an instance.
SolutionSchedule schedule_from_json(const nlohmann::json& node);

/// Recomputes every entry's weight and profit line from the instance and
/// the stored selections. Returns the number of entries whose stored line
/// disagreed with the recomputed one (tampering or mismatch indicator).
/// Throws std::invalid_argument when a selection index is out of range.
std::size_t rebind_schedule(SolutionSchedule& schedule, const Instance& instance);

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& node);

Instance load_instance(const std::string& path);

}  // namespace parakp

#endif  // PARAKP_JSON_IO_HPP
