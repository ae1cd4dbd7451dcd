#include "weakid/report.hpp"

#include <sstream>

namespace weakid::report {

json to_json(const repthy::Partition& p)
{
    json a = json::array();
    for (unsigned x : p.parts())
        a.push_back(x);
    return a;
}

json to_json(const repthy::Decomposition& d)
{
    json a = json::array();
    for (const auto& [p, m] : d.mult)
        a.push_back(json::array({to_json(p), m}));
    return a;
}

json to_json(const series::TruncSeries& s)
{
    json a = json::array();
    for (auto& c : s.decimal())
        a.push_back(c);
    return a;
}

json to_json(const matrep::IdentityCheck& c)
{
    json j;
    j["holds"] = c.holds;
    if (c.witness) {
        json vals = json::object();
        for (const auto& [var, abc] : c.witness->values)
            vals["x" + std::to_string(var)] = json::array(
                {json::array({abc[0].get_str(), abc[1].get_str()}), json::array({abc[1].get_str(), abc[2].get_str()})});
        const auto& r = c.witness->result;
        j["witness"] = {{"values", vals},
                        {"result", json::array({json::array({r[0].get_str(), r[1].get_str()}),
                                                json::array({r[2].get_str(), r[3].get_str()})})}};
    }
    return j;
}

json to_json(const tideal::DegreeReport& r, bool timings)
{
    json j;
    j["degree"] = r.degree;
    j["space"] = r.space == tideal::Space::FullP ? "P" : "gamma";
    j["dim_P"] = r.dim_P;
    j["dim_kernel"] = r.dim_kernel;
    j["dim_consequences"] = r.dim_consequences;
    j["containment"] = r.containment;
    j["equal"] = r.equal;
    j["dim_gamma"] = r.dim_gamma;
    j["dim_gamma_kernel"] = r.dim_gamma_kernel;
    j["decomposition"] = to_json(r.decomposition);
    j["timings_ms"] = json::object();
    if (timings)
        for (const auto& [k, v] : r.timings_ms)
            j["timings_ms"][k] = v;
    j["toolkit_version"] = kToolkitVersion;
    return j;
}

std::string schema_problem(const json& j)
{
    if (!j.is_object())
        return "report is not an object";
    for (const char* k : {"degree", "dim_P", "dim_kernel", "dim_consequences", "dim_gamma", "dim_gamma_kernel"})
        if (!j.contains(k) || !j[k].is_number_unsigned())
            return std::string("missing or non-natural key ") + k;
    for (const char* k : {"containment", "equal"})
        if (!j.contains(k) || !j[k].is_boolean())
            return std::string("missing or non-boolean key ") + k;
    if (!j.contains("space") || !j["space"].is_string())
        return "missing key space";
    if (!j.contains("toolkit_version") || !j["toolkit_version"].is_string())
        return "missing key toolkit_version";
    if (!j.contains("timings_ms") || !j["timings_ms"].is_object())
        return "missing key timings_ms";
    for (const auto& [k, v] : j["timings_ms"].items())
        if (!v.is_number())
            return "timing " + k + " is not a number";
    if (!j.contains("decomposition") || !j["decomposition"].is_array())
        return "missing key decomposition";
    for (const auto& e : j["decomposition"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array() || !e[1].is_number_unsigned())
            return "decomposition entries must be [partition, multiplicity]";
        for (const auto& p : e[0])
            if (!p.is_number_unsigned())
                return "partition parts must be naturals";
    }
    return {};
}

std::string markdown(std::span<const tideal::DegreeReport> reports)
{
    std::ostringstream os;
    os << "# Weak identities of (M2, symmetric M2)\n\n";
    os << "| n | space | dim | weak identities | consequences | contained | equal | quotient of Gamma_n |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports)
        os << "| " << r.degree << " | " << (r.space == tideal::Space::FullP ? "P" : "Gamma") << " | " << r.dim_P
           << " | " << r.dim_kernel << " | " << r.dim_consequences << " | " << (r.containment ? "yes" : "no") << " | "
           << (r.equal ? "yes" : "no") << " | " << r.decomposition.render() << " |\n";
    os << "\ntoolkit " << kToolkitVersion << "\n";
    return os.str();
}

} // namespace weakid::report
