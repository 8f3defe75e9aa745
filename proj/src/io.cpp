#include "splitgen/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace splitgen {

namespace {

using nlohmann::json;

std::string finish(const json& j) { return j.dump(2) + "\n"; }

json field_to_json(const FieldSpec& field) {
    json j;
    if (field.kind == FieldKind::Rationals) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = field.modulus;
    }
    return j;
}

FieldSpec field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") return FieldSpec::prime_field(j.at("p").get<std::uint64_t>());
    throw Error("unknown field kind: " + kind);
}

json coords_to_json(const std::vector<FieldElement>& coords) {
    json arr = json::array();
    for (const auto& c : coords) arr.push_back(c.str());
    return arr;
}

std::vector<FieldElement> coords_from_json(const json& arr, const FieldSpec& field) {
    std::vector<FieldElement> out;
    out.reserve(arr.size());
    for (const auto& c : arr) out.push_back(FieldElement::parse(c.get<std::string>(), field));
    return out;
}

json poly_body(const PolyVec& f) {
    json j;
    j["coeffs"] = coords_to_json(f.coeffs());
    j["degree"] = f.degree();
    j["n"] = f.n();
    return j;
}

PolyVec poly_from(const json& j, const FieldSpec& field) {
    unsigned degree = j.at("degree").get<unsigned>();
    unsigned n = j.at("n").get<unsigned>();
    return PolyVec(degree, n, coords_from_json(j.at("coeffs"), field));
}

json points_array(const PointSet& gamma) {
    json arr = json::array();
    for (std::size_t i = 0; i < gamma.size(); ++i) arr.push_back(coords_to_json(gamma[i].coords()));
    return arr;
}

}  // namespace

std::string point_set_to_json(const PointSet& gamma) {
    json j;
    j["field"] = field_to_json(gamma.field());
    j["n"] = gamma.n();
    j["points"] = points_array(gamma);
    return finish(j);
}

PointSet point_set_from_json(const std::string& text) {
    json j = json::parse(text);
    FieldSpec field = field_from_json(j.at("field"));
    unsigned n = j.at("n").get<unsigned>();
    PointSet gamma(n, field);
    for (const auto& coords : j.at("points")) gamma.append(Point(coords_from_json(coords, field)));
    return gamma;
}

std::string poly_to_json(const PolyVec& f) {
    json j = poly_body(f);
    j["field"] = field_to_json(f.field());
    return finish(j);
}

PolyVec poly_from_json(const std::string& text) {
    json j = json::parse(text);
    return poly_from(j, field_from_json(j.at("field")));
}

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["field"] = field_to_json(cert.points.field());
    j["n"] = cert.points.n();
    j["m"] = cert.m;
    j["points"] = points_array(cert.points);

    json gens = json::array();
    for (const auto& g : cert.generators) {
        json e;
        json aug = json::array();
        for (const auto& p : g.augmented) aug.push_back(coords_to_json(p.coords()));
        e["augmented"] = aug;
        e["blocks"] = g.partition.blocks;
        e["coeffs"] = coords_to_json(g.form.coeffs());
        gens.push_back(e);
    }
    j["generators"] = gens;

    json lower = json::array();
    for (const auto& f : cert.lower_degree_basis) lower.push_back(poly_body(f));
    j["lower_degree_basis"] = lower;

    json table = json::array();
    for (const auto& row : cert.verification) {
        json e;
        e["deg"] = row.degree;
        e["dim_ideal"] = row.dim_ideal;
        e["dim_generated"] = row.dim_generated;
        e["equal"] = row.equal;
        table.push_back(e);
    }
    j["verification"] = table;
    j["passed"] = cert.passed;
    return finish(j);
}

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    FieldSpec field = field_from_json(j.at("field"));
    unsigned n = j.at("n").get<unsigned>();
    unsigned m = j.at("m").get<unsigned>();

    PointSet gamma(n, field);
    for (const auto& coords : j.at("points")) gamma.append(Point(coords_from_json(coords, field)));

    std::vector<CertGenerator> gens;
    for (const auto& e : j.at("generators")) {
        std::vector<Point> aug;
        for (const auto& coords : e.at("augmented"))
            aug.emplace_back(coords_from_json(coords, field));
        Partition part = Partition::canonical(
            e.at("blocks").get<std::vector<std::vector<std::size_t>>>());
        PolyVec form(m, n, coords_from_json(e.at("coeffs"), field));
        gens.push_back(CertGenerator{std::move(form), std::move(part), std::move(aug)});
    }

    std::vector<PolyVec> lower;
    for (const auto& e : j.at("lower_degree_basis")) lower.push_back(poly_from(e, field));

    std::vector<DegreeDims> table;
    for (const auto& e : j.at("verification"))
        table.push_back(DegreeDims{e.at("deg").get<unsigned>(),
                                   e.at("dim_ideal").get<std::size_t>(),
                                   e.at("dim_generated").get<std::size_t>(),
                                   e.at("equal").get<bool>()});

    bool passed = j.at("passed").get<bool>();
    return Certificate{std::move(gamma), m,     std::move(gens), std::move(lower),
                       std::move(table), passed};
}

std::string report_to_json(const VerifyReport& report) {
    json j;
    j["claim"] = report.claim;
    j["n"] = report.n;
    j["d"] = report.d;
    j["degree"] = report.degree;
    j["field"] = field_to_json(report.field);
    json rows = json::array();
    for (const auto& r : report.evidence) {
        json e;
        e["label"] = r.label;
        e["lhs"] = r.lhs.get_str();
        e["rhs"] = r.rhs.get_str();
        e["ok"] = r.ok;
        rows.push_back(e);
    }
    j["evidence"] = rows;
    j["passed"] = report.passed;
    return finish(j);
}

std::string sigma_to_json(const PointSet& gamma, unsigned m,
                          const std::vector<SigmaGenerator>& gens) {
    json j;
    j["field"] = field_to_json(gamma.field());
    j["n"] = gamma.n();
    j["m"] = m;
    j["points"] = points_array(gamma);
    json arr = json::array();
    for (const auto& g : gens) {
        json e;
        e["blocks"] = g.partition.blocks;
        e["coeffs"] = coords_to_json(g.form.coeffs());
        arr.push_back(e);
    }
    j["generators"] = arr;
    return finish(j);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("cannot write file: " + path);
}

}  // namespace splitgen
