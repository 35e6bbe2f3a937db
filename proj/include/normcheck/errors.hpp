#pragma once

#include <stdexcept>
#include <string>

namespace normcheck {

// Base of every error the engine throws. Findings that are data (consistency
// breaches, parse diagnostics) are returned, not thrown.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ImproperInterval : public Error {
public:
    using Error::Error;
};

class UnsupportedRelation : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class DanglingReference : public Error {
public:
    using Error::Error;
};

class Redeclaration : public Error {
public:
    using Error::Error;
};

class UnknownSituation : public Error {
public:
    using Error::Error;
};

class NonGroundFact : public Error {
public:
    using Error::Error;
};

class DuplicateEnactment : public Error {
public:
    using Error::Error;
};

class MissingDecomposition : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class UnsafeRule : public Error {
public:
    using Error::Error;
};

class UnboundHeadVariable : public Error {
public:
    using Error::Error;
};

class WrongFluentKind : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    using Error::Error;
};

} // namespace normcheck
