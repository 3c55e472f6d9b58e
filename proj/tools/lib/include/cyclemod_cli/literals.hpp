#pragma once

#include "cyclemod/cycles/cycle_class.hpp"
#include "cyclemod/exactfield/parse.hpp"

#include <optional>
#include <string>

namespace cyclemod::cli {

/// "GF(q)" or "GF(q)(t)".
FieldRef parse_field_ref(const std::string& text);

/// "{e1, ..., en}" or an integer k (degree 0), optionally followed by
/// "@field" and ":n". Without "@field" the entries live in `fallback`.
/// Positions in errors are offsets into `text`.
KElement parse_symbol(const std::string& text, const std::optional<FieldRef>& fallback);

/// "inf" or a monic irreducible polynomial in the field's variable.
Place parse_place(const std::string& text, const FieldRef& field);

/// Symbol terms on a plane: "{[x=0], 2*[y=0]^-1}" where [id] names a
/// declared curve (its equation) and integers are constants.
SurfaceTerm parse_surface_symbol(const std::string& text, const SchemeModel& X);

/// A builtin name (A1, P1, SPEC, A2, P2) over `field`, or a path to a JSON
/// scheme description.
SchemeModel resolve_scheme(const std::string& text, const std::optional<FieldRef>& field);

}  // namespace cyclemod::cli
