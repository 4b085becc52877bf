#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sugeno/capacity.hpp"
#include "sugeno/convergence.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measurable.hpp"
#include "sugeno/semicopula.hpp"

namespace sugeno::json_io {

using Json = nlohmann::ordered_json;

// Loaders throw sugeno::Error with `location` set to a JSON-pointer path
// relative to the document root (prefix supplied by the caller).

FiniteSpace space_from_json(const Json& j, const std::string& path = "/space");

// "min" | {"kind":"min"} | {"kind":"table","resolution":n,"grid":[[...],...]}
Semicopula semicopula_from_json(const Json& j, const std::string& path = "/semicopula");

// {"n":4,"kind":"table","values":[...]} | {"kind":"possibility","weights":[...]}
// | {"kind":"additive","weights":[...]} | {"kind":"distortion","base":{...},"g":[...]}
// `space`, when given, must agree with any "n" or implied size.
Capacity capacity_from_json(const Json& j, std::optional<FiniteSpace> space = std::nullopt,
                            const std::string& path = "/capacity");

// Size of the space a capacity spec lives on, without validating values.
std::optional<FiniteSpace> capacity_space_hint(const Json& j, const std::string& path = "/capacity");

// {"values":[...]} or a bare array.
MeasurableFn function_from_json(const Json& j, const FiniteSpace& space,
                                const std::string& path = "/function");

// {"kind":"constant-rate","rate":"1/n","horizon":N}
// | {"kind":"explicit","terms":[[...],...],"limit":[...]} (limit defaults to 0)
// `default_horizon` applies when a constant-rate spec omits its horizon.
FnSequence sequence_from_json(const Json& j, const FiniteSpace& space,
                              std::optional<std::size_t> default_horizon,
                              const std::string& path = "/sequence");

// {"epsilon":..,"tail_start":..,"t_grid":[...]}; missing keys keep defaults.
CheckParams params_from_json(const Json& j, const std::string& path = "/params");

Json to_json(const IntegralResult& r);
Json to_json(const SemicopulaValidation& v);
Json to_json(const CapacityValidation& v);
Json to_json(const ConvergenceReport& r);
Json to_json(const ImplicationReport& r);
Json to_json(const CheckParams& p, std::size_t horizon);

// Serializes with doubles printed as %.17g, which round-trips every double
// and keeps short values short (0.5 stays "0.5").
std::string dump(const Json& j, int indent = 2);

}  // namespace sugeno::json_io
