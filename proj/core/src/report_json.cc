#include <unicolor/colouring.hh>
#include <unicolor/json.hh>

using namespace unicolor;

using nlohmann::json;

auto unicolor::verdict_json(Verdict verdict) -> json
{
    switch (verdict) {
        case Verdict::Yes:     return true;
        case Verdict::No:      return false;
        case Verdict::Unknown: return nullptr;
    }
    return nullptr;
}

auto unicolor::colouring_json(const Colouring & c) -> json
{
    json classes = json::array();
    for (auto & cls : c.classes())
        classes.push_back(cls.members());
    return classes;
}

auto unicolor::report_json(const VerificationReport & report) -> json
{
    return json{
        { "graph6", report.graph6 },
        { "k", report.k },
        { "min_degree_ok", report.min_degree_ok },
        { "connected_ok", report.connected_ok },
        { "connectivity_ok", report.connectivity_ok },
        { "xu_slack", report.xu_slack },
        { "two_class_connected_ok", report.two_class_connected_ok ? json(*report.two_class_connected_ok) : json(nullptr) },
        { "partition_count", report.partition_count },
        { "count_capped", report.count_capped },
        { "uniquely_colourable", verdict_json(report.verdict) }
    };
}

auto unicolor::to_json_string(const VerificationReport & report) -> std::string
{
    return report_json(report).dump();
}
