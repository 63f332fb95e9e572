#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "fermat/int.hpp"

namespace fermat::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "fermat-workbench 1.0.0";

enum class Verdict {
    Holds,     ///< the checked property held
    Violated,  ///< a scan produced a counterexample to an asserted property
    Vacuous,   ///< nothing to check (empty grid or range)
    Found,     ///< an expected object was produced
    NoneFound, ///< an exhaustive search came back empty, as expected
};

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Found: return "found";
    case Verdict::NoneFound: return "none-found";
    }
    return "holds";
}

/// Integers above 53-bit magnitude serialize as decimal strings so JSON
/// consumers cannot silently round them.
inline Json json_int(const Int& v)
{
    static const Int kLimit = Int(1) << 53;
    if (v < kLimit && v > -kLimit) return static_cast<std::int64_t>(v);
    return v.str();
}

/// One machine-readable document per CLI invocation.
struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    Verdict verdict = Verdict::Holds;
    std::int64_t elapsed_ms = 0;
    std::string tool_version = kToolVersion;

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["params"] = params;
        j["results"] = results;
        j["verdict"] = to_string(verdict);
        j["elapsed_ms"] = elapsed_ms;
        j["tool_version"] = tool_version;
        return j;
    }
};

} // namespace fermat::report
