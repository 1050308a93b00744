#pragma once

#include <json.hpp>

#include "agcodes/autcode.hpp"
#include "agcodes/code.hpp"
#include "agcodes/curve.hpp"
#include "agcodes/gf.hpp"
#include "agcodes/perm.hpp"
#include "agcodes/rr.hpp"

namespace agcodes {

using Json = nlohmann::json;

/// Coefficient array [c0, c1, ...].
inline Json to_json(const FieldElement& e) { return Json(e.coeffs()); }

/// "inf" or {"x": [...], "y": [...]}.
inline Json to_json(const CurvePoint& pt) {
    if (pt.at_infinity()) return Json("inf");
    return Json{{"x", to_json(pt.x())}, {"y", to_json(pt.y())}};
}

/// {"M": [[a,b],[c,d]], "e": [c0,c1]}.
inline Json to_json(const AutElement& t) {
    const auto& m = t.m();
    return Json{{"M", Json::array({Json::array({m[0], m[1]}), Json::array({m[2], m[3]})})},
                {"e", to_json(t.e())}};
}

inline Json to_json(const Permutation& pi) { return Json(pi.str()); }

inline Json to_json(const RRFunction& f) {
    Json j{{"A", Json::array()}, {"B", Json::array()}, {"c", f.c()}};
    for (i64 i = 0; i <= f.a().degree(); ++i) j["A"].push_back(to_json(f.a().coeff(i)));
    for (i64 i = 0; i <= f.b().degree(); ++i) j["B"].push_back(to_json(f.b().coeff(i)));
    if (!f.base().at_infinity()) j["x0"] = to_json(f.base().x());
    j["text"] = f.str();
    return j;
}

inline Json to_json(const GenMatrix& m) {
    Json rows = Json::array();
    for (i64 r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (i64 c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"q", m.ctx()->order()}, {"n", m.cols()}, {"k", m.rows()}, {"rows", rows}};
}

inline Json to_json(const Discrepancy& d) {
    return Json{{"id", d.id}, {"computed", d.computed}, {"claimed", d.claimed}, {"note", d.note}};
}

inline Json to_json(const CorrespondenceReport& rep) {
    Json j;
    j["stab_order"] = rep.stab_order;
    j["image_order"] = rep.image_order;
    j["kernel_order"] = rep.kernel_order;
    j["kernel_elements"] = Json::array();
    for (const auto& t : rep.kernel_elements) j["kernel_elements"].push_back(to_json(t));
    j["paut_order"] = rep.paut_order ? Json(*rep.paut_order) : Json(nullptr);
    j["corollary_applies"] = rep.corollary;
    j["verdict"] = rep.verdict;
    j["discrepancies"] = Json::array();
    for (const auto& d : rep.discrepancies) j["discrepancies"].push_back(to_json(d));
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["dim_LD"] = rep.dim_ld;
    return j;
}

}  // namespace agcodes
