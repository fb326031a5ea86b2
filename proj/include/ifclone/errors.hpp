#pragma once

#include <stdexcept>
#include <string>

namespace ifclone {

/// No source file was found under any of the requested roots.
class NoSourceFoundError : public std::runtime_error {
public:
    explicit NoSourceFoundError(const std::string& what) : std::runtime_error(what) {}
};

/// A root or output location could not be read or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A ratio over the model was requested but the model declares no methods.
class EmptyModelError : public std::runtime_error {
public:
    explicit EmptyModelError(const std::string& what) : std::runtime_error(what) {}
};

/// An interface id was looked up that is not present in the model.
class UnknownInterfaceError : public std::runtime_error {
public:
    explicit UnknownInterfaceError(const std::string& what) : std::runtime_error(what) {}
};

/// A correlation was requested over a constant vector; the coefficient is undefined.
class DegenerateSampleError : public std::runtime_error {
public:
    explicit DegenerateSampleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ifclone
