#include "upq/json_io.hpp"

#include <stdexcept>

namespace upq {

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void from_json(const json& j, Rational& r) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
    r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const HitchinPairType& t) { j = json{{"p", t.p}, {"q", t.q}, {"a", t.a}, {"b", t.b}}; }

void from_json(const json& j, HitchinPairType& t) {
    t = HitchinPairType{j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(), j.at("a").get<std::int64_t>(),
                        j.at("b").get<std::int64_t>()};
    t.validate();
}

void to_json(json& j, const HiggsRankPair& r) { j = json{{"rk_beta", r.rk_beta}, {"rk_gamma", r.rk_gamma}}; }

void from_json(const json& j, HiggsRankPair& r) {
    r = HiggsRankPair{j.at("rk_beta").get<std::int64_t>(), j.at("rk_gamma").get<std::int64_t>()};
}

void to_json(json& j, const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows) arrows.push_back(json::array({a.tail, a.head}));
    j = json{{"vertex_count", q.vertex_count}, {"arrows", arrows}};
}

void from_json(const json& j, Quiver& q) {
    q.vertex_count = j.at("vertex_count").get<std::size_t>();
    q.arrows.clear();
    for (const auto& a : j.at("arrows")) q.arrows.push_back(Arrow{a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>()});
    q.validate();
}

void to_json(json& j, const TwistAssignment& t) { j = json{{"degrees", t.degrees}}; }
void from_json(const json& j, TwistAssignment& t) { t.degrees = j.at("degrees").get<std::vector<std::int64_t>>(); }

void to_json(json& j, const QuiverNumericalType& e) {
    json vs = json::array();
    for (const auto& v : e.vertices) vs.push_back(json{{"rank", v.rank}, {"degree", v.degree}});
    j = json{{"vertices", vs}};
}

void from_json(const json& j, QuiverNumericalType& e) {
    e.vertices.clear();
    for (const auto& v : j.at("vertices")) {
        e.vertices.push_back(VertexData{v.at("rank").get<std::int64_t>(), v.at("degree").get<std::int64_t>()});
    }
}

void to_json(json& j, const ParameterVector& v) { j = v.values; }
void from_json(const json& j, ParameterVector& v) { v.values = j.get<std::vector<Rational>>(); }

void to_json(json& j, const CPair& c) { j = json{{"c1", c.c1}, {"c2", c.c2}}; }
void from_json(const json& j, CPair& c) { c = CPair{j.at("c1").get<Rational>(), j.at("c2").get<Rational>()}; }

void to_json(json& j, const WallWitness& w) { j = json::array({w.p_sub, w.q_sub, w.d_sub}); }

void from_json(const json& j, WallWitness& w) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("witness must be [p_sub, q_sub, d_sub]");
    w = WallWitness{j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

void to_json(json& j, const Wall& w) { j = json{{"alpha", w.alpha}, {"witnesses", w.witnesses}}; }

void from_json(const json& j, Wall& w) {
    w.alpha = j.at("alpha").get<Rational>();
    w.witnesses = j.at("witnesses").get<std::vector<WallWitness>>();
}

void to_json(json& j, const AlphaInterval& i) { j = json::array({i.lo.to_string(), i.hi.to_string()}); }

void from_json(const json& j, AlphaInterval& i) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("interval must be [\"lo\", \"hi\"]");
    i = AlphaInterval{j[0].get<Rational>(), j[1].get<Rational>()};
    i.validate();
}

void to_json(json& j, const Chamber& c) {
    j = json{{"lo", c.lo}, {"hi", c.hi}, {"lo_closed", c.lo_closed}, {"hi_closed", c.hi_closed}};
}

void from_json(const json& j, Chamber& c) {
    c = Chamber{j.at("lo").get<Rational>(), j.at("hi").get<Rational>(), j.at("lo_closed").get<bool>(),
                j.at("hi_closed").get<bool>()};
}

json walls_document(const HitchinPairType& t, const AlphaInterval& interval, const std::vector<Wall>& walls) {
    return json{{"type", t}, {"interval", interval}, {"walls", walls}};
}

void to_json(json& j, const ChamberReport& r) {
    j = walls_document(r.type, r.interval, r.walls);
    for (std::size_t i = 0; i < r.walls.size(); ++i) j["walls"][i]["witness_count"] = r.walls[i].witnesses.size();
    j["chambers"] = r.chambers;
}

void from_json(const json& j, ChamberReport& r) {
    r.type = j.at("type").get<HitchinPairType>();
    r.interval = j.at("interval").get<AlphaInterval>();
    r.walls = j.at("walls").get<std::vector<Wall>>();
    r.chambers = j.at("chambers").get<std::vector<Chamber>>();
}

void to_json(json& j, const AlphaWindow& w) {
    j = json{{"lower", w.lower},
             {"upper", w.upper},
             {"lower_closed", w.lower_closed},
             {"upper_closed", w.upper_closed},
             {"empty", w.empty()}};
}

void from_json(const json& j, AlphaWindow& w) {
    w = AlphaWindow{j.at("lower").get<Rational>(), j.at("upper").get<Rational>(), j.at("lower_closed").get<bool>(),
                    j.at("upper_closed").get<bool>()};
}

void to_json(json& j, const IrreducibilityCondition& c) {
    j = json{{"holds", c.holds},
             {"degree_ok", c.degree_ok},
             {"rank_ok", c.rank_ok},
             {"alpha_in_window", c.alpha_in_window},
             {"alpha_window", c.window}};
}

void from_json(const json& j, IrreducibilityCondition& c) {
    c.holds = j.at("holds").get<bool>();
    c.degree_ok = j.at("degree_ok").get<bool>();
    c.rank_ok = j.at("rank_ok").get<bool>();
    c.alpha_in_window = j.at("alpha_in_window").get<bool>();
    c.window = j.at("alpha_window").get<AlphaWindow>();
}

void to_json(json& j, const IrreducibilityCertificate& c) {
    j = json{{"type", c.type},
             {"genus", c.genus},
             {"alpha", c.alpha},
             {"tau", c.tau},
             {"tau_bound", c.tau_bound},
             {"tau_bound_ok", c.tau_bound_ok},
             {"condition1", c.condition1},
             {"condition2", c.condition2},
             {"closure_irreducible", c.closure_irreducible},
             {"fully_irreducible", c.fully_irreducible}};
}

void from_json(const json& j, IrreducibilityCertificate& c) {
    c.type = j.at("type").get<HitchinPairType>();
    c.genus = j.at("genus").get<std::int64_t>();
    c.alpha = j.at("alpha").get<Rational>();
    c.tau = j.at("tau").get<Rational>();
    c.tau_bound = j.at("tau_bound").get<Rational>();
    c.tau_bound_ok = j.at("tau_bound_ok").get<bool>();
    c.condition1 = j.at("condition1").get<IrreducibilityCondition>();
    c.condition2 = j.at("condition2").get<IrreducibilityCondition>();
    c.closure_irreducible = j.at("closure_irreducible").get<bool>();
    c.fully_irreducible = j.at("fully_irreducible").get<bool>();
}

namespace oracle {

void to_json(json& j, const SuiteFailure& f) {
    j = json{{"trial", f.trial}, {"inputs", f.inputs}, {"detail", f.detail}};
}

void from_json(const json& j, SuiteFailure& f) {
    f = SuiteFailure{j.at("trial").get<std::size_t>(), j.at("inputs").get<std::string>(),
                     j.at("detail").get<std::string>()};
}

void to_json(json& j, const SuiteResult& s) {
    j = json{{"name", s.name}, {"cases", s.cases}, {"passed", s.passed}, {"ok", s.ok()}, {"failures", s.failures}};
}

void from_json(const json& j, SuiteResult& s) {
    s.name = j.at("name").get<std::string>();
    s.cases = j.at("cases").get<std::size_t>();
    s.passed = j.at("passed").get<std::size_t>();
    s.failures = j.at("failures").get<std::vector<SuiteFailure>>();
}

void to_json(json& j, const SelfTestReport& r) {
    j = json{{"seed", r.seed}, {"trials", r.trials}, {"ok", r.ok()}, {"suites", r.suites}};
}

void from_json(const json& j, SelfTestReport& r) {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::size_t>();
    r.suites = j.at("suites").get<std::vector<SuiteResult>>();
}

}  // namespace oracle

}  // namespace upq

namespace nlohmann {

void adl_serializer<upq::GeometryContext>::to_json(upq::json& j, const upq::GeometryContext& ctx) {
    j = upq::json{{"genus", ctx.genus()}, {"twist_degree", ctx.twist_degree()}, {"canonical", ctx.is_canonical()}};
}

upq::GeometryContext adl_serializer<upq::GeometryContext>::from_json(const upq::json& j) {
    const auto genus = j.at("genus").get<std::int64_t>();
    const auto degree = j.at("twist_degree").get<std::int64_t>();
    if (j.at("canonical").get<bool>()) {
        auto ctx = upq::GeometryContext::canonical(genus);
        if (ctx.twist_degree() != degree) throw std::invalid_argument("canonical context needs twist_degree = 2g - 2");
        return ctx;
    }
    return upq::GeometryContext::twisted(genus, degree);
}

void adl_serializer<upq::BoundInterval>::to_json(upq::json& j, const upq::BoundInterval& b) {
    j = upq::json::object();
    j["feasible"] = b.feasible();
    if (b.feasible()) {
        j["lower"] = b.lower();
        j["upper"] = b.upper();
    } else {
        j["raw_lower"] = b.raw_lower();
        j["raw_upper"] = b.raw_upper();
    }
    j["regime"] = b.regime() ? upq::json(upq::regime_label(*b.regime())) : upq::json(nullptr);
}

upq::BoundInterval adl_serializer<upq::BoundInterval>::from_json(const upq::json& j) {
    std::optional<upq::Regime> regime;
    if (j.contains("regime") && !j.at("regime").is_null()) regime = upq::regime_from_label(j.at("regime").get<std::string>());
    const bool feasible = j.at("feasible").get<bool>();
    auto b = feasible ? upq::BoundInterval::closed(j.at("lower").get<upq::Rational>(), j.at("upper").get<upq::Rational>(), regime)
                      : upq::BoundInterval::closed(j.at("raw_lower").get<upq::Rational>(),
                                                   j.at("raw_upper").get<upq::Rational>(), regime);
    if (b.feasible() != feasible) throw std::invalid_argument("interval feasibility flag contradicts its bounds");
    return b;
}

void adl_serializer<upq::MwVerdict>::to_json(upq::json& j, const upq::MwVerdict& v) {
    j = upq::json{{"tau", v.tau}, {"bounds", v.interval}, {"verdict", v.pass ? "pass" : "fail"}};
    if (!v.pass) {
        j["side"] = upq::side_label(*v.violated);
        j["margin"] = v.margin;
    }
}

upq::MwVerdict adl_serializer<upq::MwVerdict>::from_json(const upq::json& j) {
    upq::MwVerdict v{j.at("tau").get<upq::Rational>(), j.at("bounds").get<upq::BoundInterval>(), false, std::nullopt,
                     upq::Rational(0)};
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "pass") {
        v.pass = true;
    } else if (verdict == "fail") {
        const auto side = j.at("side").get<std::string>();
        if (side != "lower" && side != "upper") throw std::invalid_argument("unknown bound side '" + side + "'");
        v.violated = side == "lower" ? upq::BoundSide::lower : upq::BoundSide::upper;
        v.margin = j.at("margin").get<upq::Rational>();
    } else {
        throw std::invalid_argument("unknown verdict '" + verdict + "'");
    }
    return v;
}

}  // namespace nlohmann
