// Serialization of semigroups and resolutions: versioned JSON (stable
// key order, byte-identical round trip) and script emission for the
// Macaulay2 and Singular computer algebra systems.
#pragma once

#include <string>

#include <json.hpp>

#include "repunit/complex.hpp"
#include "repunit/semigroup.hpp"

namespace repunit {

using Json = nlohmann::ordered_json;

/// Schema "repunit-resolution/1": top-level params, generators,
/// extended, c, levels: [{j, betti, shifts, entries: [[row, col,
/// polynomial string]]}]. Entries are row-major; shifts follow the
/// basis (column) order.
Json resolution_to_json(const GradedComplex& gc);

/// Inverse of resolution_to_json. Throws ParamError when the document
/// does not describe a resolution of the declared semigroup (shifts and
/// entries are taken as written, so a perturbed document round-trips).
GradedComplex resolution_from_json(const Json& doc);

/// Schema "repunit-info/1": params, generators, extended, c, betti
/// vector, pseudo-Frobenius numbers, Frobenius number.
Json info_to_json(const RepunitSemigroup& s);

/// dump(2) with a trailing newline; the byte-stable form used
/// everywhere JSON leaves the process.
std::string dump_json(const Json& doc);

/// Macaulay2 script: weighted polynomial ring, the toric ideal, and a
/// res/betti call so the system recomputes the resolution itself.
std::string macaulay2_script(const RepunitSemigroup& s);

/// Singular script with the same content (ring in wp order, ideal,
/// mres, betti print).
std::string singular_script(const RepunitSemigroup& s);

}  // namespace repunit
