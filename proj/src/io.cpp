#include "jointkit/io.hpp"

#include <fstream>

namespace jointkit {

Json line_system_to_json(const LineSystem& ls) {
    Json j;
    j["p"] = ls.field().modulus();
    j["d"] = ls.dim();
    Json lines = Json::array();
    for (const LineEntry& e : ls.entries()) {
        Json le;
        le["base"] = e.line.base().coords;
        le["dir"] = e.line.dir().vec();
        le["mult"] = e.mult;
        if (e.family) le["family"] = *e.family;
        lines.push_back(std::move(le));
    }
    j["lines"] = std::move(lines);
    return j;
}

LineSystem line_system_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("d") || !j.contains("lines"))
        throw BadParams("line system file needs p, d and lines");
    PrimeField f(j.at("p").get<u64>());
    std::size_t d = j.at("d").get<std::size_t>();
    std::vector<LineEntry> entries;
    for (const Json& le : j.at("lines")) {
        Vec base = le.at("base").get<Vec>();
        Vec dir = le.at("dir").get<Vec>();
        if (base.size() != d || dir.size() != d) throw BadParams("line coordinate length");
        LineEntry e{canonicalize_line(Point(f, base), dir),
                    le.contains("mult") ? le.at("mult").get<u64>() : 1,
                    le.contains("family")
                        ? std::optional<u32>(le.at("family").get<u32>())
                        : std::nullopt};
        entries.push_back(std::move(e));
    }
    return LineSystem(f, d, std::move(entries));
}

void save_line_system(const LineSystem& ls, const std::string& path) {
    write_text(path, line_system_to_json(ls).dump(2) + "\n");
}

LineSystem load_line_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open " + path);
    Json j;
    in >> j;
    return line_system_from_json(j);
}

Json trace_to_json(const ProofTrace& trace) {
    Json j;
    j["theorem"] = trace.theorem;
    j["lines"] = trace.line_count;
    j["joints"] = trace.joint_count;
    j["degree_bound"] = trace.degree_bound;
    j["certificate_degree"] = trace.certificate_degree;
    j["passed"] = trace.passed();
    Json checks = Json::array();
    for (const TraceCheck& c : trace.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["ok"] = c.ok;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    Json verdicts = Json::array();
    for (const PointVerdict& v : trace.verdicts) {
        Json vj;
        vj["point"] = v.coords;
        vj["note"] = v.note;
        verdicts.push_back(std::move(vj));
    }
    j["points"] = std::move(verdicts);
    if (!trace.tallies.empty()) {
        Json tj = Json::object();
        for (const auto& [key, count] : trace.tallies) tj[key] = count;
        j["tallies"] = std::move(tj);
    }
    return j;
}

Json audit_to_json(const CarberyAudit& audit) {
    Json j;
    j["config"]["B"] = audit.options.b;
    j["config"]["floor"] = audit.options.floor;
    j["config"]["growth"] = audit.options.growth;
    j["config"]["row_budget"] = audit.options.row_budget;
    j["trace"] = trace_to_json(audit.trace);
    j["total_multiplicity_sum"] = audit.total_multiplicity_sum;
    j["degree_cap"] = audit.degree_cap;
    j["global_ratio"] = audit.global_ratio;
    Json pts = Json::array();
    for (const CarberyPointReport& pr : audit.points) {
        Json pj;
        pj["point"] = pr.coords;
        pj["M"] = pr.joint_mult;
        pj["r"] = pr.minima;
        pj["box_limits"] = pr.limits;
        pj["sum_m"] = pr.sum_m;
        pj["ratio"] = pr.ratio;
        pts.push_back(std::move(pj));
    }
    j["per_point"] = std::move(pts);
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadParams("cannot write " + path);
    out << text;
}

} // namespace jointkit
