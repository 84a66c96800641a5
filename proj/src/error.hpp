#pragma once

#include <stdexcept>
#include <string>

namespace hcolor {

enum class ErrorCode {
    InvalidArgument,
    InvalidVertex,
    InvalidEdge,
    Parse,
    Io,
    SizeGuard,
    NotTotal,
    InvalidColouring,
    Ambiguous,
    Disconnected,
    UnknownRecipe,
    Incomplete,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace hcolor
