#pragma once

#include <stdexcept>

namespace supercluster {

/// Root of every exception thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// core algebra
class SignatureError : public Error { public: using Error::Error; };
class NotDivisible : public Error { public: using Error::Error; };
class NotUnit : public Error { public: using Error::Error; };
class SubstitutionError : public Error { public: using Error::Error; };
class ParityError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

// quivers and seeds
class FrozenVertex : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class InvalidQuiver : public Error { public: using Error::Error; };
class RequiresTwoOddVertices : public Error { public: using Error::Error; };
class UnknownName : public Error { public: using Error::Error; };
class MalformedColoredQuiver : public Error { public: using Error::Error; };

// supergroup and friezes
class NotInGroup : public Error { public: using Error::Error; };
class RelationViolation : public Error { public: using Error::Error; };
class InvalidWidth : public Error { public: using Error::Error; };
class CoefficientExtractionFailure : public Error { public: using Error::Error; };

} // namespace supercluster
