#ifndef WCONFORMAL_ERRORS_HPP
#define WCONFORMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wconformal {

struct UnsupportedAlgebra : std::runtime_error {
    explicit UnsupportedAlgebra(const std::string& what) : std::runtime_error(what) {}
};

struct BadWeight : std::runtime_error {
    explicit BadWeight(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPartition : std::runtime_error {
    explicit InvalidPartition(const std::string& what) : std::runtime_error(what) {}
};

struct NonReductiveGNatural : InvalidPartition {
    explicit NonReductiveGNatural(const std::string& what) : InvalidPartition(what) {}
};

struct InvalidOspPartition : InvalidPartition {
    explicit InvalidOspPartition(const std::string& what) : InvalidPartition(what) {}
};

struct IncompleteDecomposition : std::runtime_error {
    explicit IncompleteDecomposition(const std::string& what) : std::runtime_error(what) {}
};

struct CriticalOnly : std::runtime_error {
    explicit CriticalOnly(const std::string& what) : std::runtime_error(what) {}
};

struct CriticalFactor : std::runtime_error {
    explicit CriticalFactor(const std::string& what) : std::runtime_error(what) {}
};

struct CriticalLevel : std::runtime_error {
    explicit CriticalLevel(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownFactor : std::runtime_error {
    explicit UnknownFactor(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownOrbit : std::runtime_error {
    explicit UnknownOrbit(const std::string& what) : std::runtime_error(what) {}
};

struct NotApplicable : std::runtime_error {
    explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct DuplicateOrbit : std::runtime_error {
    explicit DuplicateOrbit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wconformal

#endif
