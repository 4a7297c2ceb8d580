#pragma once

#include "cvxorder/measure.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvxorder {

// Measure file format:
//   {"dim": 2, "atoms": [{"point": ["0","-1"], "weight": "1/6"}, ...]}
// Every scalar is a lowest-term "p" or "p/q" string; weights must sum to
// exactly 1. Error messages name the offending field.

namespace detail {

inline Rational parse_rational_field(const nlohmann::json& j, const std::string& field)
{
    if (!j.is_string())
        throw std::invalid_argument("field '" + field + "' must be a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("field '" + field + "': " + e.what());
    }
}

} // namespace detail

inline DiscreteMeasure measure_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("measure document must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw std::invalid_argument("field 'dim' must be a positive integer");
    if (!j.contains("atoms") || !j["atoms"].is_array() || j["atoms"].empty())
        throw std::invalid_argument("field 'atoms' must be a non-empty array");

    const std::size_t dim = j["dim"].get<std::size_t>();
    std::vector<Atom> atoms;
    atoms.reserve(j["atoms"].size());
    std::size_t index = 0;
    for (const auto& entry : j["atoms"]) {
        const std::string where = "atoms[" + std::to_string(index) + "]";
        if (!entry.is_object() || !entry.contains("point") || !entry.contains("weight"))
            throw std::invalid_argument("field '" + where +
                                        "' must be an object with 'point' and 'weight'");
        const auto& point_json = entry["point"];
        if (!point_json.is_array() || point_json.size() != dim)
            throw std::invalid_argument("field '" + where + ".point' must be an array of " +
                                        std::to_string(dim) + " rationals");
        PointQ point;
        point.coords.reserve(dim);
        for (std::size_t k = 0; k < dim; ++k)
            point.coords.push_back(detail::parse_rational_field(
                point_json[k], where + ".point[" + std::to_string(k) + "]"));
        Rational weight = detail::parse_rational_field(entry["weight"], where + ".weight");
        atoms.push_back({std::move(point), std::move(weight)});
        ++index;
    }
    try {
        return DiscreteMeasure::from_atoms(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("field 'atoms': " + std::string(e.what()));
    }
}

inline nlohmann::ordered_json measure_to_json(const DiscreteMeasure& m)
{
    nlohmann::ordered_json j;
    j["dim"] = m.dim();
    j["atoms"] = nlohmann::ordered_json::array();
    for (const auto& a : m.atoms()) {
        nlohmann::ordered_json atom;
        atom["point"] = nlohmann::ordered_json::array();
        for (const auto& c : a.point.coords)
            atom["point"].push_back(to_string(c));
        atom["weight"] = to_string(a.weight);
        j["atoms"].push_back(std::move(atom));
    }
    return j;
}

inline DiscreteMeasure load_measure(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open measure file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("cannot parse measure file '" + path + "': " + e.what());
    }
    return measure_from_json(j);
}

inline void save_measure(const DiscreteMeasure& m, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    out << measure_to_json(m).dump(2) << "\n";
}

} // namespace cvxorder
