#pragma once

#include <stdexcept>
#include <string>

namespace rootdom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad vertex ids, loops, unparsable files, invalid family sizes.
class InputError : public Error {
public:
    using Error::Error;
};

// The parameter has no feasible set on this graph (e.g. connected domination
// of a disconnected graph). Never encoded as a sentinel value.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// A configured cap (scan order, search nodes, enumeration size) was exceeded.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, long long partial = -1)
        : Error(what), partial_count_(partial) {}

    long long partial_count() const noexcept { return partial_count_; }

private:
    long long partial_count_;
};

}  // namespace rootdom
