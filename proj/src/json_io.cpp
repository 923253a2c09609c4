#include "m1n/json_io.hpp"

namespace m1n {

namespace {

Json subset_to_json(Subset s) { return Json(subset_labels(s)); }

Subset subset_from_json(const Json& j, int n) {
    if (!j.is_array()) fail(errc::bad_input, "subset must be an array of labels");
    return subset_from_labels(j.get<std::vector<int>>(), n);
}

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) fail(errc::bad_input, "rationals serialize as \"p/q\" strings");
    return rat_parse(j.get<std::string>());
}

int n_from_json(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) fail(errc::bad_input, "missing integer field \"n\"");
    return j["n"].get<int>();
}

} // namespace

Json divisor_to_json(const DivisorClass& d) {
    Json boundary = Json::array();
    for (const auto& [s, c] : d.boundary())
        boundary.push_back({{"S", subset_to_json(s)}, {"c", rat_str(c)}});
    return Json{{"n", d.n()}, {"lambda", rat_str(d.lambda())}, {"boundary", std::move(boundary)}};
}

DivisorClass divisor_from_json(const Json& j) {
    DivisorClass d(n_from_json(j));
    d.set_lambda(rat_from_json(j.at("lambda")));
    for (const auto& entry : j.at("boundary"))
        d.set_coeff(subset_from_json(entry.at("S"), d.n()), rat_from_json(entry.at("c")));
    return d;
}

Json curve_to_json(const CurveClass& c) {
    Json boundary = Json::array();
    for (const auto& [s, v] : c.boundary())
        boundary.push_back({{"S", subset_to_json(s)}, {"c", rat_str(v)}});
    return Json{{"n", c.n()}, {"lambda", rat_str(c.lambda_pairing())}, {"boundary", std::move(boundary)}};
}

CurveClass curve_from_json(const Json& j) {
    CurveClass c(n_from_json(j));
    c.set_lambda_pairing(rat_from_json(j.at("lambda")));
    for (const auto& entry : j.at("boundary"))
        c.set_pairing(subset_from_json(entry.at("S"), c.n()), rat_from_json(entry.at("c")));
    return c;
}

Json signature_to_json(const Signature& a) { return Json(a.entries()); }

Signature signature_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::bad_input, "signatures serialize as integer arrays");
    return Signature(j.get<std::vector<long long>>());
}

Json family_to_json(const FamilyData& f) {
    Json ds = Json::array();
    for (const auto& [s, count] : f.d_s)
        ds.push_back({{"S", subset_to_json(s)}, {"count", count}});
    return Json{{"n", f.n}, {"d_irr", f.d_irr}, {"d_S", std::move(ds)}};
}

FamilyData family_from_json(const Json& j) {
    std::vector<std::pair<std::vector<int>, long long>> counts;
    for (const auto& entry : j.at("d_S"))
        counts.emplace_back(entry.at("S").get<std::vector<int>>(), entry.at("count").get<long long>());
    return FamilyData::make(n_from_json(j), j.at("d_irr").get<long long>(), counts);
}

Json sym_divisor_to_json(const SymDivisorClass& d) {
    Json b = Json::object();
    for (int k = 2; k <= d.n; ++k) b[std::to_string(k)] = rat_str(d.bk(k));
    return Json{{"n", d.n}, {"a_irr", rat_str(d.a_irr)}, {"b", std::move(b)}};
}

SymDivisorClass sym_divisor_from_json(const Json& j) {
    int n = n_from_json(j);
    std::vector<Rat> b(n >= 2 ? static_cast<size_t>(n - 1) : 0, Rat(0));
    for (const auto& [key, value] : j.at("b").items()) {
        int k = std::stoi(key);
        if (k < 2 || k > n) fail(errc::bad_input, "boundary index " + key + " outside 2..n");
        b[static_cast<size_t>(k) - 2] = rat_from_json(value);
    }
    return SymDivisorClass::make(n, rat_from_json(j.at("a_irr")), std::move(b));
}

Json trace_to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const auto& m : t.steps) {
        switch (m.kind) {
            case MoveKind::permute: steps.push_back({{"move", "permute"}, {"p", m.p->image()}}); break;
            case MoveKind::negate: steps.push_back({{"move", "negate"}}); break;
            case MoveKind::f_transform: steps.push_back({{"move", "f"}}); break;
        }
    }
    return Json{{"start", signature_to_json(t.start)},
                {"steps", std::move(steps)},
                {"end", signature_to_json(t.end)}};
}

ReductionTrace trace_from_json(const Json& j) {
    ReductionTrace t{signature_from_json(j.at("start")), {}, signature_from_json(j.at("end"))};
    for (const auto& step : j.at("steps")) {
        std::string kind = step.at("move").get<std::string>();
        if (kind == "permute")
            t.steps.push_back({MoveKind::permute, Permutation(step.at("p").get<std::vector<int>>())});
        else if (kind == "negate")
            t.steps.push_back({MoveKind::negate, std::nullopt});
        else if (kind == "f")
            t.steps.push_back({MoveKind::f_transform, std::nullopt});
        else
            fail(errc::bad_input, "unknown move kind '" + kind + "'");
    }
    return t;
}

Json certificate_to_json(const CertificateReport& r) {
    Json assumptions = Json::array();
    for (const auto& f : r.assumptions) assumptions.push_back({{"tag", f.tag}, {"citation", f.citation}});
    return Json{{"pairing", rat_str(r.pairing)},
                {"divisor", divisor_to_json(r.divisor)},
                {"curve", curve_to_json(r.curve)},
                {"assumptions", std::move(assumptions)},
                {"verdict", r.valid ? "valid" : "invalid"}};
}

Json age_profile_to_json(const AgeProfile& p) { return Json{{"k", p.k}, {"exps", p.exps}}; }

AgeProfile age_profile_from_json(const Json& j) {
    return AgeProfile::make(j.at("k").get<long long>(), j.at("exps").get<std::vector<int>>());
}

Json reid_tai_report_to_json(const ReidTaiReport& r) {
    Json profiles = Json::array();
    for (const auto& a : r.profiles)
        profiles.push_back({{"profile", age_profile_to_json(a.profile)},
                            {"age", rat_str(a.age)},
                            {"quasi_reflection", a.quasi_reflection},
                            {"ambiguous", a.ambiguous}});
    Json out{{"profiles", std::move(profiles)}, {"extends", r.extends}};
    out["min_age"] = r.min_age ? Json(rat_str(*r.min_age)) : Json(nullptr);
    return out;
}

Json orbits_to_json(const std::vector<MonodromyOrbit>& orbits) {
    Json out = Json::array();
    for (const auto& o : orbits)
        out.push_back({{"k", o.invariant},
                       {"size", o.size},
                       {"representative", {o.representative.first, o.representative.second}}});
    return out;
}

Json sym_constraints_to_json(const SymConstraintsReport& r) {
    Json pairings = Json::array();
    for (const auto& p : r.pairings)
        pairings.push_back({{"curve", p.curve}, {"value", rat_str(p.value)}, {"nonnegative", p.nonnegative}});
    Json chain = Json::array();
    for (const auto& c : r.chain) chain.push_back({{"constraint", c.constraint}, {"holds", c.holds}});
    return Json{{"n", r.n},
                {"g", r.g},
                {"pairings", std::move(pairings)},
                {"all_nonnegative", r.all_nonnegative},
                {"chain", std::move(chain)},
                {"caveat", r.caveat},
                {"normalization", "a_irr = lambda/12"}};
}

} // namespace m1n
