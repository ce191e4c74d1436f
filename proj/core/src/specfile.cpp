#include "gptk/specfile.hpp"

#include <fstream>

namespace gptk {

Json field_to_json(const FieldCtx* f) {
    Json j;
    j["p"] = f->p;
    j["k"] = f->k;
    j["modulus"] = f->modulus;
    j["order"] = f->q;
    return j;
}

const FieldCtx* field_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("k")) fail(Errc::ParseError, "field spec needs p and k");
    int64_t p = j.at("p").get<int64_t>();
    int k = j.at("k").get<int>();
    if (j.contains("modulus")) {
        std::vector<int64_t> m = j.at("modulus").get<std::vector<int64_t>>();
        return FieldCtx::get(p, k, m);
    }
    return FieldCtx::get(p, k);
}

Json curve_to_json(const CurvePoly& c) {
    Json j;
    j["field"] = field_to_json(c.ctx());
    j["degree"] = c.degree();
    Json terms = Json::array();
    for (const auto& t : c.terms())
        terms.push_back(Json::array({t.i, t.j, t.l, element_to_string(c.ctx(), t.c)}));
    j["terms"] = terms;
    return j;
}

CurvePoly curve_from_json(const Json& j) {
    const FieldCtx* f = field_from_json(j.at("field"));
    std::vector<CurveTerm> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 4) fail(Errc::ParseError, "term must be [i,j,l,coeff]");
        CurveTerm ct;
        ct.i = t[0].get<int>();
        ct.j = t[1].get<int>();
        ct.l = t[2].get<int>();
        ct.c = t[3].is_string() ? element_from_string(f, t[3].get<std::string>())
                                : f->from_int(t[3].get<int64_t>());
        terms.push_back(ct);
    }
    CurvePoly c(f, terms);
    if (j.contains("degree") && j.at("degree").get<int>() != c.degree())
        fail(Errc::ParseError, "declared degree does not match the terms");
    return c;
}

Json elliptic_to_json(const EllipticModel& e) {
    Json j = curve_to_json(e.curve());
    j["origin"] = point_to_json(e.origin());
    return j;
}

EllipticModel elliptic_from_json(const Json& j) {
    CurvePoly c = curve_from_json(j);
    if (!j.contains("origin")) fail(Errc::ParseError, "elliptic spec needs an origin");
    return EllipticModel(c, point_from_json(j.at("origin"), c.ctx()));
}

Json point_to_json(const ProjPoint& p) {
    return Json::array({element_to_string(p.ctx, p.c[0]), element_to_string(p.ctx, p.c[1]),
                        element_to_string(p.ctx, p.c[2])});
}

ProjPoint point_from_json(const Json& j, const FieldCtx* f) {
    if (!j.is_array() || j.size() != 3) fail(Errc::ParseError, "point must be [x,y,z]");
    auto coord = [&](const Json& v) {
        return v.is_string() ? element_from_string(f, v.get<std::string>())
                             : f->from_int(v.get<int64_t>());
    };
    return ProjPoint(f, coord(j[0]), coord(j[1]), coord(j[2]));
}

ProjPoint point_from_string(const std::string& s, const FieldCtx* f) {
    std::vector<std::string> parts;
    char sep = s.find(':') != std::string::npos ? ':' : ',';
    size_t pos = 0;
    while (true) {
        size_t nxt = s.find(sep, pos);
        parts.push_back(s.substr(pos, nxt == std::string::npos ? std::string::npos : nxt - pos));
        if (nxt == std::string::npos) break;
        pos = nxt + 1;
    }
    if (parts.size() != 3)
        fail(Errc::ParseError, "point needs three coordinates, got '" + s + "'");
    return ProjPoint(f, element_from_string(f, parts[0]), element_from_string(f, parts[1]),
                     element_from_string(f, parts[2]));
}

Json collineation_to_json(const Collineation& t) {
    Json j;
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(element_to_string(t.ctx(), t.mat.at(r, c)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["frob"] = t.frob;
    return j;
}

Collineation collineation_from_json(const Json& j, const FieldCtx* f) {
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 3) fail(Errc::ParseError, "matrix must have 3 rows");
    Mat3 m;
    m.ctx = f;
    for (int r = 0; r < 3; ++r) {
        const auto& row = rows[size_t(r)];
        if (!row.is_array() || row.size() != 3)
            fail(Errc::ParseError, "matrix row must have 3 entries");
        for (int c = 0; c < 3; ++c)
            m.at(r, c) = row[size_t(c)].is_string()
                             ? element_from_string(f, row[size_t(c)].get<std::string>())
                             : f->from_int(row[size_t(c)].get<int64_t>());
    }
    int e = j.contains("frob") ? j.at("frob").get<int>() : 0;
    return Collineation(m, e);
}

Json profile_to_json(const RamificationProfile& p) {
    Json j;
    Json pts = Json::array();
    for (const auto& e : p.entries) {
        Json pe;
        pe["label"] = e.label;
        pe["filtration"] = e.filtration;
        pts.push_back(pe);
    }
    j["points"] = pts;
    return j;
}

RamificationProfile profile_from_json(const Json& j) {
    RamificationProfile p;
    for (const auto& e : j.at("points")) {
        RamificationProfile::Entry en;
        en.label = e.contains("label") ? e.at("label").get<std::string>() : "";
        en.filtration = e.at("filtration").get<std::vector<int64_t>>();
        p.entries.push_back(en);
    }
    p.validate();
    return p;
}

Json perm_to_json(const Perm& p) {
    Json a = Json::array();
    for (auto v : p.img) a.push_back(v);
    return a;
}

Perm perm_from_json(const Json& j) {
    Perm p;
    for (const auto& v : j) p.img.push_back(v.get<uint16_t>());
    return p;
}

Json pair_report_to_json(const PairReport& r) {
    Json j;
    j["p1"] = point_to_json(r.p1);
    j["p2"] = point_to_json(r.p2);
    j["field"] = field_to_json(r.p1.ctx);
    j["g1_order"] = r.g1_order;
    j["g2_order"] = r.g2_order;
    j["g_order"] = r.g_order;
    Json omega;
    omega["line"] = Json::array({element_to_string(r.omega.line.ctx, r.omega.line.c[0]),
                                 element_to_string(r.omega.line.ctx, r.omega.line.c[1]),
                                 element_to_string(r.omega.line.ctx, r.omega.line.c[2])});
    Json support = Json::array();
    for (const auto& li : r.omega.support) {
        Json s;
        s["point"] = point_to_json(li.point);
        s["multiplicity"] = li.multiplicity;
        s["simple"] = li.simple_on_curve;
        support.push_back(s);
    }
    omega["support"] = support;
    omega["residual_degree"] = r.omega.residual_degree;
    omega["clean"] = r.omega.clean;
    j["omega"] = omega;
    Json pts = Json::array();
    for (const auto& p : r.omega_points) pts.push_back(point_to_json(p));
    j["omega_points"] = pts;
    j["omega_source"] = r.omega_source;
    j["omega_size"] = r.omega_points.size();
    j["cond_II"] = r.cond_II;
    j["cond_III"] = tri_name(r.cond_III);
    j["cond_III_multiset"] = r.cond_III_multiset;
    j["g1_sharply_transitive"] = r.g1_sharply_transitive;
    j["g2_sharply_transitive"] = r.g2_sharply_transitive;
    j["kernel_order"] = r.kernel_order;
    j["kernel_cyclic"] = r.kernel_cyclic;
    j["g1_normal_in_stabilizer"] = r.g1_normal_in_stabilizer;
    j["transitivity"] = r.transitivity;
    Json cls;
    cls["label"] = r.classification_label;
    cls["evidence"] = r.label_evidence;
    j["classification"] = cls;
    Json facts;
    facts["order"] = r.facts.order;
    facts["center_order"] = r.facts.center_order;
    facts["involution_count"] = r.facts.involution_count;
    facts["solvable"] = r.facts.solvable;
    facts["cyclic"] = r.facts.cyclic;
    j["group_facts"] = facts;
    Json perms = Json::array();
    for (const auto& p : r.omega_perms) perms.push_back(perm_to_json(p));
    j["omega_perms"] = perms;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

ReportCore report_core_from_json(const Json& j) {
    ReportCore core;
    const auto& facts = j.at("group_facts");
    core.facts.order = facts.at("order").get<size_t>();
    core.facts.center_order = facts.at("center_order").get<size_t>();
    core.facts.involution_count = facts.at("involution_count").get<size_t>();
    core.facts.solvable = facts.at("solvable").get<bool>();
    core.facts.cyclic = facts.at("cyclic").get<bool>();
    for (const auto& p : j.at("omega_perms")) core.omega_perms.push_back(perm_from_json(p));
    core.stored_label = j.at("classification").at("label").get<std::string>();
    return core;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::ParseError, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace gptk
