#pragma once

#include "leontief/model.hpp"
#include "leontief/outcome.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace leontief {

class CertificateParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON object with "outcome" and the case's vectors ("x","y" / "z","y" /
/// "x","r" / "z","r") as arrays of rational strings. Optimal outcomes also
/// carry "objective" (c^T x) when an instance is supplied.
std::string emit_certificate(const Outcome& outcome, const Instance* inst = nullptr);

/// Inverse of emit_certificate. Unknown keys are ignored; missing or
/// malformed fields throw CertificateParseError.
Outcome parse_certificate(std::string_view text);

}  // namespace leontief
