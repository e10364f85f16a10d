#pragma once

#include <stdexcept>
#include <string>

namespace colorminer {

// Base class for everything this library throws on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input document problems (parsing, trace ingestion).
class LengthMismatch : public Error {
public:
    using Error::Error;
};
class ReservedSymbol : public Error {
public:
    using Error::Error;
};
class EmptyInput : public Error {
public:
    using Error::Error;
};
class ArityMismatch : public Error {
public:
    using Error::Error;
};

// Argument/precondition problems.
class OutOfRange : public Error {
public:
    using Error::Error;
};
class ZeroAlphabet : public Error {
public:
    using Error::Error;
};
class ColorOutOfRange : public Error {
public:
    using Error::Error;
};
class TooLarge : public Error {
public:
    using Error::Error;
};

// Priority-queue misuse.
class DuplicateInsert : public Error {
public:
    using Error::Error;
};
class DemoteIncrease : public Error {
public:
    using Error::Error;
};

// Suffix-tree locus misuse.
class InvalidLocus : public Error {
public:
    using Error::Error;
};
class RootHasNoLabel : public Error {
public:
    using Error::Error;
};

}  // namespace colorminer
