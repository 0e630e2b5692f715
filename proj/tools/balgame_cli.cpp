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

// balgame: command-line front end for the balancing-game toolkit.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balgame/balance.hpp"
#include "balgame/coloring.hpp"
#include "balgame/core.hpp"
#include "balgame/error.hpp"
#include "balgame/game.hpp"
#include "balgame/json_io.hpp"
#include "balgame/threshold.hpp"
#include "balgame/witness.hpp"

using namespace balgame;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::size_t window_limit()
{
    if (const char* env = std::getenv("BALGAME_WINDOW_LIMIT")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "BALGAME_WINDOW_LIMIT must be a positive integer");
        }
    }
    return kDefaultVolumeLimit;
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    return in;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

// ---- threshold -------------------------------------------------------------

struct ThresholdArgs {
    std::vector<std::int64_t> n;
    bool verify = false;
    bool allow_large = false;
    std::int64_t margin = 2;
    bool json = false;
};

int run_threshold(const ThresholdArgs& a)
{
    Json out = Json::array();
    bool ok = true;
    std::ostringstream text;
    text << std::left << std::setw(5) << "n" << std::setw(8) << "class" << std::setw(22) << "r" << std::setw(26)
         << "raw bound" << "M_crit\n";
    for (auto n : a.n) {
        const auto rep = critical_M(n);
        Json row = to_json(rep);
        text << std::setw(5) << n << std::setw(8) << to_string(rep.cls) << std::setw(22) << rep.r << std::setw(26)
             << rep.raw_bound.to_string() << rep.m_crit_int << '\n';
        if (a.verify && (n > 5 || (n == 5 && !a.allow_large))) {
            text << "  verify n=" << n << ": skipped, the windowed game is too large\n";
            row["cross_validation"] = nullptr;
        } else if (a.verify) {
            const auto cv = cross_validate(n, a.margin, a.allow_large, window_limit());
            row["cross_validation"] = to_json(cv);
            text << "  verify n=" << n << ":";
            for (const auto& r : cv.rows)
                text << " M=" << r.m << ':' << (r.winner == Winner::Chooser ? "chooser" : "pusher");
            text << (cv.agrees ? "  flips at M_crit" : "  DISAGREES") << '\n';
            ok = ok && cv.agrees;
        }
        out.push_back(row);
    }
    std::cout << (a.json ? out.dump(2) + "\n" : text.str());
    return ok ? kOk : kFailed;
}

// ---- signs -----------------------------------------------------------------

struct SignsArgs {
    std::optional<std::size_t> odd;
    std::optional<std::size_t> middle;
    bool verify = false;
    bool verify_fixtures = false;
    std::string out;
    bool json = false;
};

bool check_fixture(std::size_t n, std::ostream& log, Json& report)
{
    const auto t = reference_sign_table(n);
    const auto sum = t.sum();
    const auto want = reference_table_target(n);
    const bool anti = t.antisymmetric();
    const bool ok = sum == want && anti && t.n == n;
    log << "fixture n=" << n << ": " << t.rows.size() << " rows, sum " << sum << ", expected " << want
        << (anti ? ", antisymmetric" : ", NOT antisymmetric") << (ok ? "  ok" : "  FAILED") << '\n';
    report.push_back({{"n", n}, {"rows", t.rows.size()}, {"sum", to_json(sum)}, {"expected", to_json(want)},
                      {"antisymmetric", anti}, {"ok", ok}});
    return ok;
}

int run_signs(const SignsArgs& a)
{
    if (!a.odd && !a.middle && !a.verify_fixtures) throw CLI::ValidationError("signs", "give --odd N, --middle N or --verify-fixtures");
    bool ok = true;
    Json report = Json::object();
    std::ostringstream log;

    if (a.odd) {
        const auto s = odd_signs(*a.odd);
        SignTable t;
        t.n = *a.odd;
        for (std::size_t k = 0; k < s.signs.size(); ++k) t.rows.emplace_back(s.signs[k], (*s.family)[k]);
        std::ostringstream table;
        write_sign_table(table, t);
        const auto c = binomial(static_cast<std::int64_t>(*a.odd - 1), static_cast<std::int64_t>((*a.odd - 1) / 2));
        const bool good = t.sum() == c * LatticeVector::ones(*a.odd);
        if (a.verify) {
            log << "signed sum " << t.sum() << (good ? " = " : " != ") << c << " * 1\n";
            ok = ok && good;
        }
        report["odd"] = to_json(s);
        if (!a.json) emit(table.str(), a.out);
    }
    if (a.middle) {
        const auto b = balance_middle(*a.middle);
        const auto t = to_sign_table(b);
        std::ostringstream table;
        write_sign_table(table, t);
        if (a.verify) {
            // Re-read what was written and check it from scratch.
            std::istringstream back(table.str());
            const auto r = read_sign_table(back);
            const bool good = r.sum() == 2 * target_defect(*a.middle) && r.antisymmetric();
            log << "table sum " << r.sum() << ", defect " << b.defect << (good ? "  ok" : "  FAILED") << '\n';
            ok = ok && good;
            const auto sizes = reference_sign_table_sizes();
            if (std::find(sizes.begin(), sizes.end(), *a.middle) != sizes.end()) {
                Json fx = Json::array();
                ok = check_fixture(*a.middle, log, fx) && ok;
                report["fixture"] = fx;
            }
        }
        report["middle"] = to_json(b);
        if (!a.json) emit(table.str(), a.out);
    }
    if (a.verify_fixtures) {
        Json fx = Json::array();
        for (auto n : reference_sign_table_sizes()) ok = check_fixture(n, log, fx) && ok;
        report["fixtures"] = fx;
    }
    report["ok"] = ok;
    if (a.json) emit(report.dump(2) + "\n", a.out);
    else std::cerr << log.str();
    return ok ? kOk : kFailed;
}

// ---- coloring --------------------------------------------------------------

struct ColoringArgs {
    std::optional<std::size_t> m;
    std::string out;
    std::string check;
    bool allow_large = false;
    bool json = false;
};

int run_coloring(const ColoringArgs& a)
{
    if (!a.m && a.check.empty()) throw CLI::ValidationError("coloring", "give --m M or --check FILE");
    Coloring c;
    if (a.m) {
        c = color_msets(*a.m, a.allow_large);
        if (!a.out.empty()) {
            std::ostringstream os;
            write_design(os, c);
            write_file(a.out, os.str());
        }
    } else {
        auto in = open_in(a.check);
        c = read_design(in);
    }
    const auto r = verify_coloring(c);
    if (a.json) {
        std::cout << to_json(r).dump(2) << '\n';
    } else {
        std::cout << "m = " << r.m << ", " << c.colors.size() << " sets, class " << r.defect_class << '\n';
        std::cout << std::left << std::setw(6) << "i" << std::setw(8) << "R(i)" << std::setw(8) << "B(i)" << "R-B\n";
        for (std::size_t i = 0; i < r.red.size(); ++i)
            std::cout << std::setw(6) << i + 1 << std::setw(8) << r.red[i] << std::setw(8) << r.blue[i] << r.diff[i]
                      << '\n';
        for (const auto& v : r.violations) std::cout << "violation: " << v << '\n';
        std::cout << (r.ok() ? "verified\n" : "FAILED\n");
    }
    return r.ok() ? kOk : kFailed;
}

// ---- witness ---------------------------------------------------------------

struct WitnessArgs {
    std::string family;
    std::string set;
    std::string point;
    std::string out;
    std::string replay;
    bool json = false;
};

int run_witness(const WitnessArgs& a)
{
    if (!a.replay.empty()) {
        auto in = open_in(a.replay);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, a.replay + ": " + e.what());
        }
        const auto cert = witness_from_json(j);
        const bool ok = replay(cert);
        std::cout << (ok ? "certificate replays\n" : "certificate FAILED to replay\n");
        return ok ? kOk : kFailed;
    }
    if (a.family.empty() || a.set.empty()) throw CLI::ValidationError("witness", "give --family and --set (or --replay)");
    auto fin = open_in(a.family);
    const auto f = read_family(fin, a.family);
    auto sin = open_in(a.set);
    const auto t = read_point_set(sin);

    std::vector<LatticeVector> targets;
    if (!a.point.empty()) targets.push_back(LatticeVector::parse(a.point));
    else
        for (const auto& x : extreme_points(t))
            if (exposed_normal(t, x)) targets.push_back(x);

    Json certs = Json::array();
    bool ok = !targets.empty();
    for (const auto& x : targets) {
        const auto cert = translate_witness(t, f, x);
        ok = ok && cert.verified;
        certs.push_back(to_json(cert));
        if (!a.json)
            std::cout << "x = " << x << "  a = " << cert.normal << "  t = " << cert.translate << "  "
                      << (cert.verified ? "verified" : "FAILED") << '\n';
    }
    if (!a.out.empty()) write_file(a.out, (certs.size() == 1 ? certs[0] : certs).dump(2) + "\n");
    if (a.json) std::cout << certs.dump(2) << '\n';
    if (targets.empty()) std::cerr << "no exposed points found\n";
    return ok ? kOk : kFailed;
}

// ---- maximal ---------------------------------------------------------------

struct MaximalArgs {
    std::string family;
    std::string window;
    std::string dump;
    bool json = false;
};

int run_maximal(const MaximalArgs& a)
{
    auto fin = open_in(a.family);
    const auto f = read_family(fin, a.family, false);
    const auto w = Window::parse(a.window, f.dim());
    const auto cert = maximal_vclosed_subset(w, f, window_limit());
    const auto problem = check_certificate(cert);
    if (!a.dump.empty()) {
        std::ostringstream os;
        auto safe = cert.safe_set();
        safe.origin = "maximal V-closed subset of " + w.to_string();
        write_point_set(os, safe);
        write_file(a.dump, os.str());
    }
    const LatticeVector origin(f.dim());
    const auto origin_rank = w.contains(origin) ? cert.rank(origin) : std::nullopt;
    if (a.json) {
        Json j = {{"window", w.to_string()},
                  {"volume", w.volume(window_limit())},
                  {"safe_size", cert.safe_size()},
                  {"rounds", cert.rounds()},
                  {"certificate_ok", !problem}};
        if (w.contains(origin)) j["origin_safe"] = !origin_rank;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "window " << w.to_string() << ": " << cert.safe_size() << " safe of " << w.volume(window_limit())
                  << " points, " << cert.rounds() << " deletion rounds\n";
        if (w.contains(origin))
            std::cout << "origin " << (origin_rank ? "deleted in round " + std::to_string(*origin_rank) : "safe") << '\n';
        std::cout << (problem ? "certificate check FAILED: " + *problem : "certificate checked") << '\n';
    }
    return problem ? kFailed : kOk;
}

// ---- simulate / play -------------------------------------------------------

std::unique_ptr<ChooserPolicy> make_chooser(const VectorFamily& f, std::size_t n, std::int64_t m, std::string& kind)
{
    const auto crit = critical_M(static_cast<std::int64_t>(n)).m_crit_int;
    if (m >= crit) {
        const auto plan = chooser_translate(n);
        kind = "translate";
        return std::make_unique<SubsetChooser>(ChooserEngine(*plan.family, plan.translate, plan.subset));
    }
    kind = "greedy";
    return std::make_unique<GreedyChooser>(f);
}

struct SimulateArgs {
    std::size_t n = 0;
    std::int64_t m = 0;
    std::string pusher = "random";
    std::size_t rounds = 1000;
    std::uint64_t seed = 1;
    bool transcript = false;
    bool json = false;
};

int run_simulate(const SimulateArgs& a)
{
    const auto f = canonical_family(a.n);
    const auto region = GameRegion::uniform(a.n, a.m);
    std::string chooser_kind;
    auto chooser = make_chooser(f, a.n, a.m, chooser_kind);
    std::unique_ptr<PusherPolicy> pusher;
    std::optional<PusherEngine> engine;
    if (a.pusher == "engine") {
        auto v = verdict(region, f, std::nullopt, window_limit());
        engine.emplace(std::move(v.certificate), region);
        pusher = std::make_unique<RankPusher>(*engine);
    } else {
        pusher = std::make_unique<RandomPusher>(f.size(), a.seed);
    }
    const auto tr = simulate(region, f, *chooser, *pusher, a.rounds);
    if (a.json) {
        Json j = to_json(tr);
        if (!a.transcript) j.erase("rounds");
        j["rounds_played"] = tr.rounds.size();
        j["chooser"] = chooser_kind;
        j["pusher"] = a.pusher;
        std::cout << j.dump(2) << '\n';
    } else {
        if (a.transcript)
            for (const auto& r : tr.rounds)
                std::cout << "v" << r.member << (r.sign > 0 ? " +" : " -") << " -> " << r.position << '\n';
        std::cout << "n=" << a.n << " M=" << a.m << " chooser=" << chooser_kind << " pusher=" << a.pusher << ": "
                  << to_string(tr.outcome) << " after " << tr.rounds.size() << " rounds, final " << tr.final_position()
                  << (tr.note.empty() ? "" : " (" + tr.note + ")") << '\n';
    }
    return tr.outcome == Outcome::ChooserSurvived ? kOk : kFailed;
}

struct PlayArgs {
    std::size_t n = 0;
    std::int64_t m = 0;
    std::string human;
    std::size_t rounds = 50;
    std::uint64_t seed = 1;
};

int run_play(const PlayArgs& a)
{
    const auto f = canonical_family(a.n);
    const auto region = GameRegion::uniform(a.n, a.m);
    std::cout << "G(V, K_M) with n=" << a.n << ", M=" << a.m << "; members:\n";
    for (std::size_t k = 0; k < f.size(); ++k) std::cout << "  v" << k << " = " << f[k] << '\n';
    Transcript tr;
    if (a.human == "pusher") {
        std::string kind;
        auto chooser = make_chooser(f, a.n, a.m, kind);
        HumanPusher you(f, region, std::cin, std::cout);
        tr = simulate(region, f, *chooser, you, a.rounds);
    } else {
        HumanChooser you(f, region, std::cin, std::cout);
        std::optional<PusherEngine> engine;
        std::unique_ptr<PusherPolicy> pusher;
        try {
            auto v = verdict(region, f, std::nullopt, window_limit());
            if (v.winner == Winner::PusherWithinWindow) {
                engine.emplace(std::move(v.certificate), region);
                pusher = std::make_unique<RankPusher>(*engine);
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SizeLimit) throw;
        }
        if (!pusher) pusher = std::make_unique<RandomPusher>(f.size(), a.seed);
        tr = simulate(region, f, you, *pusher, a.rounds);
    }
    std::cout << "result: " << to_string(tr.outcome) << " after " << tr.rounds.size() << " rounds at "
              << tr.final_position() << '\n';
    return kOk;
}

// ---- plan ------------------------------------------------------------------

int run_plan(std::size_t n, bool json)
{
    const auto p = chooser_translate(n);
    if (json) {
        std::cout << to_json(p).dump(2) << '\n';
    } else {
        std::cout << "n=" << n << " M=" << p.bound << "\nt = " << to_string(p.translate) << "\ndefect = " << p.defect
                  << "\ncoordinate maxima = " << to_string(p.max_coords) << "\n|S0| = "
                  << std::count(p.subset.begin(), p.subset.end(), true) << " of " << p.subset.size() << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"balgame: balancing games G(V, K_M), thresholds, sign constructions and certificates"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output");

    ThresholdArgs th;
    auto* c_th = app.add_subcommand("threshold", "critical M for the canonical family");
    c_th->add_option("--n", th.n, "dimension(s), comma separated")->required()->delimiter(',')->check(CLI::Range(2, 60));
    c_th->add_flag("--verify", th.verify, "cross-check by solving the windowed game (n <= 4)");
    c_th->add_flag("--allow-large", th.allow_large, "permit n = 5 in --verify");
    c_th->add_option("--margin", th.margin, "M range around M_crit for --verify")->check(CLI::NonNegativeNumber);
    c_th->add_flag("--json", th.json, "JSON output");

    SignsArgs sg;
    auto* c_sg = app.add_subcommand("signs", "sign tables");
    auto* o_odd = c_sg->add_option("--odd", sg.odd, "majority signs for odd n")->check(CLI::Range(3, 23));
    c_sg->add_option("--middle", sg.middle, "balanced middle-layer signs for even n")->check(CLI::Range(2, 24))->excludes(o_odd);
    c_sg->add_flag("--verify", sg.verify, "re-check the emitted table (and the bundled one for this n)");
    c_sg->add_flag("--verify-fixtures", sg.verify_fixtures, "re-check every bundled reference table");
    c_sg->add_option("--out", sg.out, "write the table here");
    c_sg->add_flag("--json", sg.json, "JSON output");

    ColoringArgs co;
    auto* c_co = app.add_subcommand("coloring", "Red/Blue coloring of the m-subsets of [2m]");
    c_co->add_option("--m", co.m, "m >= 2")->check(CLI::Range(2, 12));
    c_co->add_option("--out", co.out, "design file to write");
    c_co->add_option("--check", co.check, "verify an existing design file instead");
    c_co->add_flag("--allow-large", co.allow_large, "permit m > 8");
    c_co->add_flag("--json", co.json, "JSON report");

    WitnessArgs wi;
    auto* c_wi = app.add_subcommand("witness", "translate of P(V) through exposed points of a V-closed set");
    c_wi->add_option("--family", wi.family, "family file");
    c_wi->add_option("--set", wi.set, "point set file");
    c_wi->add_option("--x", wi.point, "exposed point (default: all exposed points)");
    c_wi->add_option("--out", wi.out, "certificate JSON to write");
    c_wi->add_option("--replay", wi.replay, "re-check a certificate JSON file");
    c_wi->add_flag("--json", wi.json, "JSON output");

    MaximalArgs mx;
    auto* c_mx = app.add_subcommand("maximal", "largest V-closed subset of a window");
    c_mx->add_option("--family", mx.family, "family file")->required();
    c_mx->add_option("--window", mx.window, "lo:hi, or one lo:hi per coordinate, comma separated")->required();
    c_mx->add_option("--dump", mx.dump, "write the safe set here");
    c_mx->add_flag("--json", mx.json, "JSON output");

    SimulateArgs si;
    auto* c_si = app.add_subcommand("simulate", "play Chooser against an automatic Pusher");
    c_si->add_option("--n", si.n, "dimension")->required()->check(CLI::Range(2, 20));
    c_si->add_option("--M", si.m, "bound M")->required();
    c_si->add_option("--pusher", si.pusher, "random or engine")->check(CLI::IsMember({"random", "engine"}));
    c_si->add_option("--rounds", si.rounds, "number of rounds");
    c_si->add_option("--seed", si.seed, "random seed");
    c_si->add_flag("--transcript", si.transcript, "print every round");
    c_si->add_flag("--json", si.json, "JSON output");

    PlayArgs pl;
    auto* c_pl = app.add_subcommand("play", "interactive game at the terminal");
    c_pl->add_option("--n", pl.n, "dimension")->required()->check(CLI::Range(2, 12));
    c_pl->add_option("--M", pl.m, "bound M")->required();
    c_pl->add_option("--human", pl.human, "which side you play")->required()->check(CLI::IsMember({"pusher", "chooser"}));
    c_pl->add_option("--rounds", pl.rounds, "maximum rounds");
    c_pl->add_option("--seed", pl.seed, "seed for the fallback random Pusher");

    std::size_t plan_n = 0;
    bool plan_json = false;
    auto* c_pn = app.add_subcommand("plan", "Chooser's starting translate and subset at the critical bound");
    c_pn->add_option("--n", plan_n, "dimension")->required()->check(CLI::Range(2, 20));
    c_pn->add_flag("--json", plan_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : kUsage;
    }

    try {
        if (c_th->parsed()) return th.json = th.json || json, run_threshold(th);
        if (c_sg->parsed()) return sg.json = sg.json || json, run_signs(sg);
        if (c_co->parsed()) return co.json = co.json || json, run_coloring(co);
        if (c_wi->parsed()) return wi.json = wi.json || json, run_witness(wi);
        if (c_mx->parsed()) return mx.json = mx.json || json, run_maximal(mx);
        if (c_si->parsed()) return si.json = si.json || json, run_simulate(si);
        if (c_pl->parsed()) return run_play(pl);
        if (c_pn->parsed()) return run_plan(plan_n, plan_json || json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::InvalidDimension:
        case ErrorKind::Parse:
        case ErrorKind::SizeLimit:
        case ErrorKind::Range: return kUsage;
        default: return kFailed;
        }
    }
    return kUsage;
}
