#include "kerbwsn/errors.hpp"

namespace kerbwsn {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::IntegrityFailure: return "IntegrityFailure";
        case ErrorKind::WrongType: return "WrongType";
        case ErrorKind::MalformedEncoding: return "MalformedEncoding";
        case ErrorKind::AlreadyRegistered: return "AlreadyRegistered";
        case ErrorKind::UnknownPrincipal: return "UnknownPrincipal";
        case ErrorKind::UnknownService: return "UnknownService";
        case ErrorKind::UnknownRealm: return "UnknownRealm";
        case ErrorKind::ExpiredTicket: return "ExpiredTicket";
        case ErrorKind::ReplayDetected: return "ReplayDetected";
        case ErrorKind::AddressMismatch: return "AddressMismatch";
        case ErrorKind::StaleAuthenticator: return "StaleAuthenticator";
        case ErrorKind::WrongPassword: return "WrongPassword";
        case ErrorKind::NoTgt: return "NoTgt";
        case ErrorKind::ExpiredTgt: return "ExpiredTgt";
        case ErrorKind::EmptyNetwork: return "EmptyNetwork";
        case ErrorKind::UnknownNode: return "UnknownNode";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

bool error_kind_from_code(std::uint8_t code, ErrorKind& out) {
    if (code < 1 || code > 19) return false;
    out = static_cast<ErrorKind>(code);
    return true;
}

} // namespace kerbwsn
