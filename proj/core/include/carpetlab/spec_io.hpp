#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "carpetlab/carpet.hpp"

namespace carpetlab {

/// Reads a carpet document in JSON syntax:
///
///   {"n": 4, "m": 3, "digits": [{"i": 0, "j": 0, "sx": 1, "sy": -1}, ...]}
///
/// sx/sy are optional and default to +1. The result passes validate_spec.
/// Throws SpecError with the offending field on malformed input.
CarpetSpec load_spec(std::istream& in);
CarpetSpec load_spec_file(const std::string& path);

/// Serializes a spec so that load_spec returns a bit-identical CarpetSpec.
std::string spec_to_json(const CarpetSpec& spec);

/// Reads a weight vector: either a bare JSON array or {"p": [...]}.
std::vector<double> load_weight_vector(std::istream& in);
std::vector<double> load_weight_vector_file(const std::string& path);

}  // namespace carpetlab
