#pragma once

#include "kerbwsn/errors.hpp"

#include <cassert>
#include <utility>
#include <variant>

namespace kerbwsn {

/// Value-or-error carrier used throughout the protocol layers. Failures are
/// ordinary data here: the threat harness inspects them, the wire layer
/// serializes them, and nothing in the library throws for protocol outcomes.
template <typename T, typename E = ErrorKind>
class Result {
public:
    Result(T value) : state_(std::move(value)) {}
    Result(E error) : state_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(state_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        assert(ok());
        return std::get<T>(state_);
    }
    T& value() & {
        assert(ok());
        return std::get<T>(state_);
    }
    T&& take() && {
        assert(ok());
        return std::get<T>(std::move(state_));
    }

    const E& error() const {
        assert(!ok());
        return std::get<E>(state_);
    }

private:
    std::variant<T, E> state_;
};

struct Unit {
    bool operator==(const Unit&) const = default;
};

using Status = Result<Unit>;

inline Status ok_status() { return Status(Unit{}); }

} // namespace kerbwsn
