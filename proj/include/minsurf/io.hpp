#pragma once

#include <fstream>
#include <nlohmann/json.hpp>

#include "minsurf/bounds.hpp"
#include "minsurf/rkc.hpp"

namespace minsurf {

using json = nlohmann::ordered_json;

namespace detail {

inline json complex_to_json(complex c) { return json::array({c.real(), c.imag()}); }

inline complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json coeffs_to_json(const std::vector<complex>& coef) {
    json arr = json::array();
    for (const auto& c : coef) arr.push_back(complex_to_json(c));
    return arr;
}

inline std::vector<complex> coeffs_from_json(const json& j) {
    std::vector<complex> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

/// Serializable view of one analytic function: rational backends keep their
/// exact numerator/denominator, everything else goes out as its series.
inline json function_to_json(const AnalyticFunction& fn) {
    json j;
    if (const auto* rat = dynamic_cast<const RationalBackend*>(fn.backend())) {
        j["kind"] = "rational";
        j["numerator"] = coeffs_to_json(rat->num);
        j["denominator"] = coeffs_to_json(rat->den);
        j["radius"] = fn.domain_radius();
        return j;
    }
    auto taylor = fn.taylor(512);
    if (!taylor) throw std::invalid_argument("function has no serializable expansion");
    while (taylor->size() > 1 && std::abs(taylor->back()) == 0.0) taylor->pop_back();
    j["kind"] = "series";
    j["coefficients"] = coeffs_to_json(*taylor);
    j["radius"] = fn.domain_radius();
    return j;
}

inline AnalyticFunction function_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const double radius = j.value("radius", 0.999);
    if (kind == "rational")
        return AnalyticFunction::rational(coeffs_from_json(j.at("numerator")),
                                          coeffs_from_json(j.at("denominator")), radius);
    if (kind == "series")
        return AnalyticFunction::polynomial(coeffs_from_json(j.at("coefficients")), radius);
    throw std::invalid_argument("unknown function kind: " + kind);
}

} // namespace detail

inline json to_json(const WeierstrassData& data) {
    json j;
    j["p"] = detail::function_to_json(data.p());
    j["q"] = detail::function_to_json(data.q());
    j["domain_radius"] = data.domain_radius();
    return j;
}

inline WeierstrassData weierstrass_from_json(const json& j) {
    return WeierstrassData(detail::function_from_json(j.at("p")), detail::function_from_json(j.at("q")),
                           j.at("domain_radius").get<double>());
}

inline json to_json(const BoundCheck& c) {
    return json{{"run", c.run}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}};
}

inline json to_json(const CurvatureReport& rep) {
    json j;
    j["K_at_origin"] = rep.K_at_origin;
    j["rate_closed_form"] = rep.rate_closed;
    j["rate_limit"] = rep.limit_run ? json(rep.rate_limit) : json(nullptr);
    j["limit_spread"] = rep.limit_spread;
    j["p0_abs"] = rep.p0_abs;
    j["q0_abs"] = rep.q0_abs;
    j["schwarz"] = to_json(rep.schwarz);
    j["hall"] = to_json(rep.hall);
    j["hall"]["constant_provenance"] = kHallConstantProvenance;
    j["margin_general"] = {{"value", rep.margin_general}, {"bound_provenance", kGeneralRateBoundProvenance}};
    if (rep.margin_flat)
        j["margin_flat"] = {{"value", *rep.margin_flat}, {"bound_provenance", kFlatRateBoundProvenance}};
    else
        j["margin_flat"] = nullptr;
    j["annotation"] = rep.annotation;
    return j;
}

inline json to_json(const BoundaryCorrespondence& bc) {
    json j;
    j["target"] = target_name(bc.target);
    j["symmetry_order"] = bc.symmetry_order;
    j["epsilons"] = bc.epsilons;
    j["deltas"] = bc.deltas;
    return j;
}

inline BoundaryCorrespondence correspondence_from_json(const json& j) {
    const std::string t = j.at("target").get<std::string>();
    Target target;
    if (t == "disk")
        target = Target::disk;
    else if (t == "hexagon")
        target = Target::hexagon;
    else
        throw std::invalid_argument("unknown target: " + t);
    return correspondence_from_params(target, j.at("epsilons").get<std::vector<double>>(),
                                      j.at("deltas").get<std::vector<double>>(),
                                      j.at("symmetry_order").get<int>());
}

inline json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open: " + path);
    json j;
    f >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << j.dump(2) << '\n';
}

} // namespace minsurf
