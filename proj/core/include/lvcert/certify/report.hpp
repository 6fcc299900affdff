#pragma once

#include <lvcert/certify/verify.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lvcert {

/// Deterministic report text: sections meta, dual, support, verdicts,
/// summary and implications.
std::string certificate_body(const Certificate& cert, const Catalogue& catalogue);

/// Writes a "# generated <timestamp>" line (omitted when empty) followed by
/// the body.
void emit_certificate(std::ostream& out, const Certificate& cert, const Catalogue& catalogue,
                      std::string_view generated_at = {});

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace lvcert
