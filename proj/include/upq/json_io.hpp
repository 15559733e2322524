#pragma once

// JSON document model for every engine type. Rationals are always written as
// "num/den" strings; integral rationals keep the "/1".

#include "upq/certificate.hpp"
#include "upq/milnor_wood.hpp"
#include "upq/model.hpp"
#include "upq/oracle.hpp"
#include "upq/rational.hpp"
#include "upq/slope.hpp"
#include "upq/walls.hpp"

#include <json.hpp>

namespace upq {

using json = nlohmann::ordered_json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const HitchinPairType& t);
void from_json(const json& j, HitchinPairType& t);

void to_json(json& j, const HiggsRankPair& r);
void from_json(const json& j, HiggsRankPair& r);

void to_json(json& j, const Quiver& q);
void from_json(const json& j, Quiver& q);

void to_json(json& j, const TwistAssignment& t);
void from_json(const json& j, TwistAssignment& t);

void to_json(json& j, const QuiverNumericalType& e);
void from_json(const json& j, QuiverNumericalType& e);

void to_json(json& j, const ParameterVector& v);
void from_json(const json& j, ParameterVector& v);

void to_json(json& j, const CPair& c);
void from_json(const json& j, CPair& c);

void to_json(json& j, const WallWitness& w);
void from_json(const json& j, WallWitness& w);

void to_json(json& j, const Wall& w);
void from_json(const json& j, Wall& w);

void to_json(json& j, const AlphaInterval& i);
void from_json(const json& j, AlphaInterval& i);

void to_json(json& j, const Chamber& c);
void from_json(const json& j, Chamber& c);

void to_json(json& j, const ChamberReport& r);
void from_json(const json& j, ChamberReport& r);

void to_json(json& j, const AlphaWindow& w);
void from_json(const json& j, AlphaWindow& w);

void to_json(json& j, const IrreducibilityCondition& c);
void from_json(const json& j, IrreducibilityCondition& c);

void to_json(json& j, const IrreducibilityCertificate& c);
void from_json(const json& j, IrreducibilityCertificate& c);

/// Report of the `walls` command: type, interval, walls.
json walls_document(const HitchinPairType& t, const AlphaInterval& interval, const std::vector<Wall>& walls);

namespace oracle {
void to_json(json& j, const SuiteFailure& f);
void from_json(const json& j, SuiteFailure& f);
void to_json(json& j, const SuiteResult& s);
void from_json(const json& j, SuiteResult& s);
void to_json(json& j, const SelfTestReport& r);
void from_json(const json& j, SelfTestReport& r);
}  // namespace oracle

}  // namespace upq

namespace nlohmann {

template <>
struct adl_serializer<upq::GeometryContext> {
    static void to_json(upq::json& j, const upq::GeometryContext& ctx);
    static upq::GeometryContext from_json(const upq::json& j);
};

template <>
struct adl_serializer<upq::BoundInterval> {
    static void to_json(upq::json& j, const upq::BoundInterval& b);
    static upq::BoundInterval from_json(const upq::json& j);
};

template <>
struct adl_serializer<upq::MwVerdict> {
    static void to_json(upq::json& j, const upq::MwVerdict& v);
    static upq::MwVerdict from_json(const upq::json& j);
};

}  // namespace nlohmann
