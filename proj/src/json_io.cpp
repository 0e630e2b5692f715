/*
 * Copyright 2026 The balgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "balgame/json_io.hpp"

#include "balgame/error.hpp"

namespace balgame {

Json to_json(const LatticeVector& v) { return Json(v.values()); }

Json to_json(const RationalVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.is_integer() ? Json(x.num()) : Json(x.to_string()));
    return out;
}

Json to_json(const VectorFamily& f)
{
    Json members = Json::array();
    for (const auto& v : f) members.push_back(to_json(v));
    return {{"dim", f.dim()}, {"label", f.label()}, {"members", members}};
}

Json to_json(const ThresholdReport& r)
{
    Json trace = Json::array();
    for (const auto& [k, v] : r.trace) trace.push_back({{"step", k}, {"value", v}});
    return {{"n", r.n},
            {"class", std::string(to_string(r.cls))},
            {"r", r.r},
            {"raw_bound", r.raw_bound.to_string()},
            {"m_crit", r.m_crit_int},
            {"trace", trace}};
}

Json to_json(const CrossValidation& cv)
{
    Json rows = Json::array();
    for (const auto& row : cv.rows) {
        rows.push_back({{"M", row.m},
                        {"winner", row.winner == Winner::Chooser ? "chooser" : "pusher"},
                        {"origin_outside_region", row.origin_outside_region},
                        {"origin_rank", row.origin_rank ? Json(*row.origin_rank) : Json(nullptr)},
                        {"safe_size", row.safe_size}});
    }
    return {{"n", cv.n},
            {"m_crit", cv.m_crit},
            {"flip_at", cv.flip_at ? Json(*cv.flip_at) : Json(nullptr)},
            {"agrees", cv.agrees},
            {"rows", rows}};
}

Json to_json(const VerdictResult& v)
{
    return {{"winner", v.winner == Winner::Chooser ? "chooser" : "pusher-within-window"},
            {"region", v.region.upper},
            {"window", v.certificate.window().to_string()},
            {"margin", v.margin},
            {"canonical", v.canonical},
            {"origin_rank", v.origin_rank ? Json(*v.origin_rank) : Json(nullptr)},
            {"rounds", v.certificate.rounds()},
            {"safe_size", v.certificate.safe_size()}};
}

Json to_json(const WitnessCertificate& c)
{
    Json set = Json::array();
    for (const auto& p : c.set.sorted()) set.push_back(to_json(p));
    std::size_t passed = 0;
    for (bool b : c.checks) passed += b;
    return {{"family", to_json(c.family)},
            {"set", set},
            {"x", to_json(c.x)},
            {"normal", to_json(c.normal)},
            {"vertex", to_json(c.vertex)},
            {"translate", to_json(c.translate)},
            {"checks", c.checks},
            {"checked", c.checks.size()},
            {"passed", passed},
            {"verified", c.verified}};
}

Json to_json(const MiddleBalance& b)
{
    Json rows = Json::array();
    for (std::size_t k = 0; k < b.layer->size(); ++k) rows.push_back({{"v", (*b.layer)[k].to_binary()}, {"sign", b.signs[k]}});
    Json out = {{"n", b.n},
                {"method", std::string(to_string(b.method))},
                {"defect", to_json(b.defect)},
                {"plus_three", b.plus_three_positions()},
                {"signs", rows}};
    if (b.pairs) out["pairs"] = {{"R", b.pairs->multiplicity()}, {"vectors", b.pairs->vector_count()}};
    if (b.coloring)
        out["partial_coloring"] = {{"x", to_json(b.coloring->sum)},
                                   {"rounded", b.coloring->rounded},
                                   {"flips", b.coloring->flips}};
    return out;
}

Json to_json(const SignAssignment& a)
{
    Json rows = Json::array();
    for (std::size_t k = 0; k < a.signs.size(); ++k) rows.push_back({{"v", (*a.family)[k].to_binary()}, {"sign", a.signs[k]}});
    return {{"n", a.family->dim()}, {"signed_sum", to_json(a.signed_sum())}, {"signs", rows}};
}

Json to_json(const ChooserPlan& p)
{
    Json s0 = Json::array();
    for (std::size_t k = 0; k < p.subset.size(); ++k)
        if (p.subset[k]) s0.push_back((*p.family)[k].to_binary());
    return {{"n", p.n},
            {"M", p.bound},
            {"translate", to_json(p.translate)},
            {"defect", to_json(p.defect)},
            {"max_coords", to_json(p.max_coords)},
            {"S0", s0}};
}

Json to_json(const ColoringReport& r)
{
    return {{"m", r.m},
            {"ok", r.ok()},
            {"complete", r.complete},
            {"complementary", r.complementary_ok},
            {"tallies_match", r.tallies_match},
            {"mod4_constant", r.mod4_constant},
            {"red", r.red},
            {"blue", r.blue},
            {"difference", r.diff},
            {"defect_class", r.defect_class},
            {"plus_three_elements", r.plus_three_elements},
            {"violations", r.violations}};
}

Json to_json(const Transcript& t)
{
    Json rounds = Json::array();
    for (const auto& r : t.rounds)
        rounds.push_back({{"member", r.member}, {"sign", r.sign}, {"position", to_json(r.position)}});
    return {{"region", t.region.upper},
            {"initial", to_json(t.initial)},
            {"outcome", std::string(to_string(t.outcome))},
            {"note", t.note},
            {"final", to_json(t.final_position())},
            {"rounds", rounds}};
}

LatticeVector lattice_from_json(const Json& j)
{
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an integer array");
    std::vector<std::int64_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::Parse, "expected an integer array");
        c.push_back(x.get<std::int64_t>());
    }
    return LatticeVector(std::move(c));
}

WitnessCertificate witness_from_json(const Json& j)
{
    try {
        WitnessCertificate c;
        const auto& fam = j.at("family");
        std::vector<LatticeVector> members;
        for (const auto& m : fam.at("members")) members.push_back(lattice_from_json(m));
        c.family = VectorFamily(fam.at("dim").get<std::size_t>(), std::move(members), fam.value("label", std::string{}));
        c.set = PointSet(c.family.dim());
        for (const auto& p : j.at("set")) c.set.insert(lattice_from_json(p));
        c.x = lattice_from_json(j.at("x"));
        c.normal = lattice_from_json(j.at("normal"));
        c.vertex = lattice_from_json(j.at("vertex"));
        c.translate = lattice_from_json(j.at("translate"));
        c.checks = j.at("checks").get<std::vector<bool>>();
        c.verified = j.value("verified", false);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("witness certificate: ") + e.what());
    }
}

} // namespace balgame
