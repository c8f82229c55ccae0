#ifndef UNICOLOR_JSON_HH
#define UNICOLOR_JSON_HH 1

// JSON views of the core types. Requires nlohmann/json on the include path.

#include <unicolor/colouring.hh>

#include <nlohmann/json.hpp>

namespace unicolor
{
    /// true / false / null for yes / no / unknown.
    auto verdict_json(Verdict verdict) -> nlohmann::json;

    /// Classes as arrays of vertex indices, in canonical class order.
    auto colouring_json(const Colouring & c) -> nlohmann::json;

    auto report_json(const VerificationReport & report) -> nlohmann::json;
}

#endif
