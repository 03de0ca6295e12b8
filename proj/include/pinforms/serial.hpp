#pragma once

#include <string>
#include <string_view>

#include "pinforms/forms.hpp"

namespace pinforms {

/// Compact form literal: type name, colon, bracketed values, e.g.
/// "pin-:[1,3]" or "trivial:[]". parse_form inverts it exactly;
/// round-tripping any form is the identity.
std::string format_form(const QForm& q);

/// Parses the format_form grammar. Validates shape (value count, Z/4
/// range) and throws std::invalid_argument on any syntax problem; the
/// form axioms themselves are checked separately by verify_form.
QForm parse_form(const HomologyModel& model, std::string_view text);

}  // namespace pinforms
