#ifndef UNICOLOR_ERRORS_HH
#define UNICOLOR_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace unicolor
{
    enum class ParseErrorKind
    {
        MalformedHeader,
        MalformedBody,
        Truncated,
        TrailingGarbage,
        OrderTooLarge
    };

    auto to_string(ParseErrorKind kind) -> std::string;

    class GraphParseError : public std::runtime_error
    {
        private:
            ParseErrorKind _kind;

        public:
            GraphParseError(ParseErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ParseErrorKind { return _kind; }
    };

    /// Thrown whenever a result would exceed the 64-vertex cap.
    class OrderOverflow : public std::length_error
    {
        public:
            explicit OrderOverflow(const std::string & message);
    };

    class InvalidColouring : public std::invalid_argument
    {
        public:
            explicit InvalidColouring(const std::string & message);
    };
}

#endif
