#pragma once

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ggm/assembly.hpp"
#include "ggm/isotopy.hpp"
#include "ggm/moduli.hpp"

namespace ggm {

using json = nlohmann::json;

// Decimal with 17 significant digits; round-trips doubles exactly.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    raise(errc::parse_error, "expected an integer");
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    raise(errc::parse_error, "expected a rational string");
}

inline double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return std::stod(j.get<std::string>());
    raise(errc::parse_error, "expected a decimal");
}

// --- lattice types ---------------------------------------------------------

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const GramMatrix& g) {
    return json{{"g11", g.g11.str()}, {"g12", g.g12.str()}, {"g22", g.g22.str()}};
}

inline GramMatrix gram_from_json(const json& j) {
    return GramMatrix(rational_from_json(j.at("g11")), rational_from_json(j.at("g12")),
                      rational_from_json(j.at("g22")));
}

inline json to_json(const LatticeVector& v) {
    return json::array({int_to_json(v.x), int_to_json(v.y)});
}

inline LatticeVector vector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) raise(errc::parse_error, "expected [x, y]");
    return LatticeVector(int_from_json(j[0]), int_from_json(j[1]));
}

inline json to_json(const FlatTorus& t) {
    json j{{"gram", to_json(t.gram)}};
    if (t.orientation != 1) j["orientation"] = t.orientation;
    return j;
}

inline FlatTorus torus_from_json(const json& j) {
    int orient = j.value("orientation", 1);
    return FlatTorus(gram_from_json(j.at("gram")), orient);
}

inline json to_json(const Marking& m, const MarkingParams& p) {
    return json{{"v", to_json(m.v)},
                {"vhat", to_json(m.vhat)},
                {"theta", m.theta.str()},
                {"r_sq", p.r_sq.str()},
                {"t_sq", p.t_sq.str()}};
}

// --- slope and space forms -------------------------------------------------

inline json to_json(const SlopeData& s) {
    return json{{"q", int_to_json(s.q)},
                {"p", int_to_json(s.p)},
                {"a", int_to_json(s.a)},
                {"b", int_to_json(s.b)}};
}

inline SlopeData slope_data_from_json(const json& j) {
    return SlopeData{int_from_json(j.at("q")), int_from_json(j.at("p")),
                     int_from_json(j.at("a")), int_from_json(j.at("b"))};
}

inline json to_json(const SlopeClass& c) {
    return json{{"s1", c.s1.str()}, {"s2", c.s2.str()}};
}

inline json to_json(const SpaceForm& s) {
    if (std::holds_alternative<LensType>(s)) {
        const auto& l = std::get<LensType>(s);
        return json{{"kind", "lens"}, {"p", int_to_json(l.p)}, {"q", int_to_json(l.q)}};
    }
    const auto& p = std::get<PrismType>(s);
    return json{{"kind", "prism"}, {"m", int_to_json(p.m)}, {"n", int_to_json(p.n)}};
}

inline SpaceForm spaceform_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lens")
        return lens_normalize(int_from_json(j.at("p")), int_from_json(j.at("q")));
    if (kind == "prism") return PrismType(int_from_json(j.at("m")), int_from_json(j.at("n")));
    raise(errc::parse_error, "unknown space form kind '" + kind + "'");
}

inline json to_json(const CylinderParams& c) {
    return json{{"r_sq", c.r_sq.str()},
                {"theta", c.theta.str()},
                {"t_sq", c.t_sq.str()},
                {"r", format_double(c.r())},
                {"t", format_double(c.t())}};
}

// --- descriptions ----------------------------------------------------------

inline json to_json(const GGMDescription& g) {
    if (std::holds_alternative<TwoSided>(g)) {
        const auto& t = std::get<TwoSided>(g);
        json j{{"type", "two_sided"},
               {"gram", to_json(t.torus.gram)},
               {"f1", to_json(t.f1)},
               {"f2", to_json(t.f2)},
               {"collar", format_double(t.collar)}};
        if (t.torus.orientation != 1) j["orientation"] = t.torus.orientation;
        return j;
    }
    const auto& o = std::get<OneSided>(g);
    return json{{"type", "one_sided"},
                {"r1", o.r1.str()},
                {"r2", o.r2.str()},
                {"f", to_json(o.f)},
                {"collar", format_double(o.collar)}};
}

inline GGMDescription description_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    double collar = j.contains("collar") ? double_from_json(j.at("collar")) : 0.0;
    if (type == "two_sided") {
        FlatTorus torus(gram_from_json(j.at("gram")), j.value("orientation", 1));
        return TwoSided{torus, vector_from_json(j.at("f1")), vector_from_json(j.at("f2")),
                        collar};
    }
    if (type == "one_sided") {
        return OneSided{rational_from_json(j.at("r1")), rational_from_json(j.at("r2")),
                        vector_from_json(j.at("f")), collar};
    }
    raise(errc::parse_error, "unknown description type '" + type + "'");
}

inline json to_json(const ClassificationResult& r) {
    json j{{"sided", r.sided == Sidedness::two_sided ? "two_sided" : "one_sided"},
           {"spaceform", to_json(r.spaceform)},
           {"slope_data", to_json(r.data)},
           {"slope_class", to_json(r.slope)},
           {"core", json{{"gram", to_json(r.core.gram)}}},
           {"cylinders", json::array()}};
    for (const auto& c : r.cylinders) j["cylinders"].push_back(to_json(c));
    if (r.cos_alpha) j["cos_alpha"] = format_double(*r.cos_alpha);
    return j;
}

inline json to_json(const CurvatureReport& r) {
    json flat = json::array();
    for (double f : r.flatness) flat.push_back(format_double(f));
    return json{{"min_K", format_double(r.min_K)},
                {"total_curvature", format_double(r.total_curvature)},
                {"boundary_geodesic_defect", format_double(r.boundary_geodesic_defect)},
                {"flatness", flat},
                {"boundary_length", format_double(r.boundary_length)},
                {"geodesic_ok", r.geodesic_ok},
                {"flatness_ok", r.flatness_ok},
                {"curvature_sign_ok", r.curvature_sign_ok},
                {"passes", r.passes()}};
}

inline json to_json(const ComponentId& id) {
    return json{{"family", family_name(id.family)}, {"slope_class", to_json(id.slope)}};
}

// --- CSV grids --------------------------------------------------------------

inline void write_profile_csv(const DiskProfile& d, std::ostream& os) {
    os << "rho,h\n";
    for (size_t i = 0; i < d.h.size(); ++i)
        os << format_double(d.rho(static_cast<int>(i))) << "," << format_double(d.h[i]) << "\n";
}

inline DiskProfile read_profile_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("rho,h", 0) != 0)
        raise(errc::parse_error, "profile CSV must start with 'rho,h'");
    DiskProfile d;
    double last_rho = 0.0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) raise(errc::parse_error, "bad profile row: " + line);
        last_rho = std::stod(line.substr(0, comma));
        d.h.push_back(std::stod(line.substr(comma + 1)));
    }
    if (d.h.size() < 2) raise(errc::parse_error, "profile CSV has too few rows");
    d.rho_max = last_rho;
    return d;
}

inline void write_factor_csv(const ConformalDisk& cd, std::ostream& os) {
    os << "sigma,phi,u\n";
    for (int j = 0; j <= cd.radial; ++j)
        for (int k = 0; k < cd.angular; ++k)
            os << format_double(cd.sigma(j)) << ","
               << format_double(2.0 * std::numbers::pi * k / cd.angular) << ","
               << format_double(cd.at(j, k)) << "\n";
}

inline ConformalDisk read_factor_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("sigma,phi,u", 0) != 0)
        raise(errc::parse_error, "factor CSV must start with 'sigma,phi,u'");
    std::vector<double> values;
    size_t first_sigma_rows = 0;
    bool counting = true;
    double first_sigma = 0.0;
    size_t rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            raise(errc::parse_error, "bad factor row: " + line);
        double sigma = std::stod(line.substr(0, c1));
        values.push_back(std::stod(line.substr(c2 + 1)));
        if (rows == 0) first_sigma = sigma;
        if (counting && sigma == first_sigma)
            ++first_sigma_rows;
        else
            counting = false;
        ++rows;
    }
    if (first_sigma_rows == 0 || rows % first_sigma_rows != 0)
        raise(errc::parse_error, "factor CSV rows do not form a polar grid");
    int angular = static_cast<int>(first_sigma_rows);
    int radial = static_cast<int>(rows / first_sigma_rows) - 1;
    ConformalDisk cd(radial, angular);
    for (int j = 0; j <= radial; ++j)
        for (int k = 0; k < angular; ++k)
            cd.at(j, k) = values[static_cast<size_t>(j) * angular + k];
    return cd;
}

// Surface of revolution: (h cos phi, h sin phi, z), z' = sqrt(1 - h'^2);
// vertices and triangular faces only.
inline void write_obj(const DiskProfile& d, int segments, std::ostream& os) {
    if (segments < 3) raise(errc::invalid_parameter, "need at least 3 angular segments");
    const int N = d.segments();
    const double dr = d.drho();
    std::vector<double> z(N + 1, 0.0);
    for (int i = 0; i < N; ++i) {
        double hp = (d.h[i + 1] - d.h[i]) / dr;
        double zp = std::sqrt(std::max(0.0, 1.0 - hp * hp));
        z[i + 1] = z[i] + dr * zp;
    }
    os << "v 0 0 0\n";
    for (int i = 1; i <= N; ++i)
        for (int k = 0; k < segments; ++k) {
            double phi = 2.0 * std::numbers::pi * k / segments;
            os << "v " << format_double(d.h[i] * std::cos(phi)) << " "
               << format_double(d.h[i] * std::sin(phi)) << " " << format_double(z[i]) << "\n";
        }
    auto vid = [&](int ring, int k) { return 2 + (ring - 1) * segments + (k % segments); };
    for (int k = 0; k < segments; ++k) os << "f 1 " << vid(1, k) << " " << vid(1, k + 1) << "\n";
    for (int i = 1; i < N; ++i)
        for (int k = 0; k < segments; ++k) {
            os << "f " << vid(i, k) << " " << vid(i + 1, k) << " " << vid(i + 1, k + 1) << "\n";
            os << "f " << vid(i, k) << " " << vid(i + 1, k + 1) << " " << vid(i, k + 1) << "\n";
        }
}

// --- files -------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(errc::parse_error, "bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) raise(errc::io_error, "cannot write '" + path + "'");
    out << text;
}

}  // namespace ggm
