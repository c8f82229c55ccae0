#include <unicolor/errors.hh>

using namespace unicolor;

auto unicolor::to_string(ParseErrorKind kind) -> std::string
{
    switch (kind) {
        case ParseErrorKind::MalformedHeader: return "malformed_header";
        case ParseErrorKind::MalformedBody:   return "malformed_body";
        case ParseErrorKind::Truncated:       return "truncated";
        case ParseErrorKind::TrailingGarbage: return "trailing_garbage";
        case ParseErrorKind::OrderTooLarge:   return "order_too_large";
    }
    return "unknown";
}

GraphParseError::GraphParseError(ParseErrorKind kind, const std::string & message) :
    std::runtime_error(to_string(kind) + ": " + message),
    _kind(kind)
{
}

OrderOverflow::OrderOverflow(const std::string & message) :
    std::length_error(message)
{
}

InvalidColouring::InvalidColouring(const std::string & message) :
    std::invalid_argument(message)
{
}
