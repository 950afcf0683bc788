#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace escode {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NegativeProbability : public Error { public: using Error::Error; };
class NotNormalized : public Error { public: using Error::Error; };
class EmptyDistribution : public Error { public: using Error::Error; };
class InvalidOrder : public Error { public: using Error::Error; };
class InvalidBase : public Error { public: using Error::Error; };
class InvalidLength : public Error { public: using Error::Error; };
class CardinalityMismatch : public Error { public: using Error::Error; };
class ZeroProbability : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class KraftViolation : public Error { public: using Error::Error; };
class NonIntegerLength : public Error { public: using Error::Error; };
class InstanceTooLarge : public Error { public: using Error::Error; };
class NonPrefixCodebook : public Error { public: using Error::Error; };
class UnknownSymbol : public Error { public: using Error::Error; };
class CorruptHeader : public Error { public: using Error::Error; };
class CorruptPayload : public Error { public: using Error::Error; };
// Payload ended in the middle of a codeword, before the announced symbol count.
class DanglingBits : public Error { public: using Error::Error; };

// Text-format errors carry the 1-based line number of the offending record.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace escode
