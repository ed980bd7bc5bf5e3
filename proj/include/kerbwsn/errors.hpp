#pragma once

#include <cstdint>
#include <string_view>

namespace kerbwsn {

// Failure kinds surfaced anywhere in the protocol or simulator. Codes are
// stable: they appear in the ErrorReply wire record.
enum class ErrorKind : std::uint8_t {
    InvalidInput = 1,
    IntegrityFailure = 2,
    WrongType = 3,
    MalformedEncoding = 4,
    AlreadyRegistered = 5,
    UnknownPrincipal = 6,
    UnknownService = 7,
    UnknownRealm = 8,
    ExpiredTicket = 9,
    ReplayDetected = 10,
    AddressMismatch = 11,
    StaleAuthenticator = 12,
    WrongPassword = 13,
    NoTgt = 14,
    ExpiredTgt = 15,
    EmptyNetwork = 16,
    UnknownNode = 17,
    ParseError = 18,
    ValidationError = 19,
};

std::string_view to_string(ErrorKind kind);

// Inverse of to_string for wire decoding; returns false for unknown codes.
bool error_kind_from_code(std::uint8_t code, ErrorKind& out);

} // namespace kerbwsn
