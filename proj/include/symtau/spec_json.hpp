#pragma once

#include "symtau/curve_spec.hpp"

#include <string>

namespace symtau {

// Parses the JSON curve-specification document.  Strict: unknown keys, wrong
// types, and malformed values throw SpecError with Kind::parse, naming the
// offending key.  Semantic admissibility is normalize()'s job, not this one's.
CurveSpec spec_from_json(const std::string& text);

// Serializes a specification back to the document format (effective classes
// are programmatic input only and are not part of the format).
std::string spec_to_json(const CurveSpec& spec);

}  // namespace symtau
