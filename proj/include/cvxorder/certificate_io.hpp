#pragma once

#include "cvxorder/projcert.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace cvxorder {

// Certificate file format: the critical directions, per-arc endpoint
// directions with sign-pattern ids, kink-vector counts and verified flags,
// and the overall verdict. Enough for a third party to re-derive and check
// the per-arc data without re-running the enumerator.
inline nlohmann::ordered_json certificate_to_json(const DirectionCertificate& cert)
{
    const auto point_json = [](const PointQ& p) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : p.coords)
            arr.push_back(to_string(c));
        return arr;
    };

    nlohmann::ordered_json j;
    j["overall"] = cert.all_dominated ? "all_dominated" : "fails_at";
    if (!cert.all_dominated) {
        if (cert.failing_direction)
            j["failing_direction"] = point_json(*cert.failing_direction);
        if (cert.failing_threshold)
            j["failing_threshold"] = to_string(*cert.failing_threshold);
    }
    j["critical_directions"] = nlohmann::ordered_json::array();
    for (const auto& v : cert.critical_directions)
        j["critical_directions"].push_back(point_json(v));
    j["arcs"] = nlohmann::ordered_json::array();
    for (const auto& arc : cert.arcs) {
        nlohmann::ordered_json a;
        a["start"] = point_json(arc.start);
        a["end"] = point_json(arc.end);
        a["sign_pattern_id"] = arc.sign_pattern_id;
        a["kink_vector_count"] = arc.kink_vectors.size();
        a["verified"] = arc.verified;
        j["arcs"].push_back(std::move(a));
    }
    return j;
}

inline void save_certificate(const DirectionCertificate& cert, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    out << certificate_to_json(cert).dump(2) << "\n";
}

} // namespace cvxorder
