#pragma once

#include <stdexcept>
#include <string>

namespace fht {

// Disagreement between an implementation and its independent oracle.
// The CLI maps this to exit code 3.
class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (e.g. the folding termination guard fired).
// The CLI maps this to exit code 4.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what)
{
    if (!ok) throw InternalError(what);
}

} // namespace fht
