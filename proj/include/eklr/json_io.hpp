#pragma once

#include <json.hpp>

#include "eklr/fock.hpp"
#include "eklr/updown.hpp"
#include "eklr/verify.hpp"

namespace eklr {

using Json = nlohmann::json;

inline Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"c", rational_to_pq_string(c)}});
    return terms;
}

inline Json to_json(const Scalar& s) {
    return Json{{"num", to_json(s.num())}, {"den", to_json(s.den())}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& t : j)
        p.set_coeff(t.at("exp").get<long long>(),
                    p.coeff(t.at("exp").get<long long>()) +
                        rational_from_string(t.at("c").get<std::string>()));
    return p;
}

inline Scalar scalar_from_json(const Json& j) {
    return Scalar(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (long long x : p.parts()) a.push_back(x);
    return a;
}

inline Json to_json(const Multipartition& mp) {
    Json a = Json::array();
    for (const Partition& p : mp.comps()) a.push_back(to_json(p));
    return a;
}

inline Json to_json(const Box& b) { return Json::array({b.row, b.col, b.comp}); }

inline Json to_json(const UpDownTableau& t) {
    Json a = Json::array();
    for (const auto& s : t.steps()) a.push_back({{"sign", s.sign}, {"box", to_json(s.box)}});
    return a;
}

inline Json to_json(const FockVector& v) {
    Json terms = Json::array();
    for (const auto& [p, c] : v.terms)
        terms.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
    return Json{{"terms", terms}};
}

inline Json to_json(const DualFockVector& v) {
    Json terms = Json::array();
    for (const auto& [p, c] : v.terms)
        terms.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
    return Json{{"terms", terms}, {"dual", true}};
}

inline Json to_json(const MultiFockVector& v) {
    Json terms = Json::array();
    for (const auto& [p, c] : v.terms)
        terms.push_back({{"multipartition", to_json(p)}, {"coeff", to_json(c)}});
    return Json{{"terms", terms}};
}

inline Json to_json(const VerifyReport& r) {
    Json f = Json::array();
    for (const auto& s : r.failures) f.push_back(s);
    return Json{{"suite", r.suite},   {"statement", r.statement}, {"checks", r.checks},
                {"passed", r.passed}, {"counterexamples", f}};
}

}  // namespace eklr
