// Copyright 2026 The symmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "cli/acceptance.hpp"
#include "cli/io.hpp"
#include "cli/state_spec.hpp"
#include "symmap/bipartite.hpp"
#include "symmap/geomeasure.hpp"
#include "symmap/mapping.hpp"
#include "symmap/search.hpp"
#include "symmap/subspace.hpp"

namespace symmap::cli {

namespace {

std::uint64_t env_seed() {
    const char *raw = std::getenv("SYMMAP_SEED");
    if (!raw || !*raw) return 0;
    try {
        auto v = parse_int_list(raw, "SYMMAP_SEED");
        if (v.size() != 1 || v[0] < 0) throw DomainError("SYMMAP_SEED must be a nonnegative integer");
        return static_cast<std::uint64_t>(v[0]);
    } catch (const ParseError &) {
        throw DomainError(std::string("SYMMAP_SEED must be a nonnegative integer, got '") + raw + "'");
    }
}

void add_state_options(CLI::App *cmd, StateArgs &s) {
    cmd->add_option("--dicke", s.dicke, "Dicke state |D_N^k>, given as N,k");
    cmd->add_option("--ghz", s.ghz, "GHZ state on N qubits");
    cmd->add_option("--w", s.w, "W state on N qubits");
    cmd->add_option("--mes", s.mes, "published MES candidate for N qubits");
    cmd->add_option("--coeffs", s.coeffs, "real Dicke coefficients c0,c1,...,cN (normalized on input)");
    cmd->add_option("--coeffs-file", s.coeffs_file, "JSON file with Dicke coefficients, complex as [re,im]");
}

json state_json(const ResolvedState &r) {
    return {{"label", r.label}, {"n_qubits", r.state.n_qubits()}, {"coeffs", to_json(r.state.coeffs())}};
}

json state_params(const StateArgs &s) {
    json p = json::object();
    if (s.dicke) p["dicke"] = *s.dicke;
    if (s.ghz) p["ghz"] = *s.ghz;
    if (s.w) p["w"] = *s.w;
    if (s.mes) p["mes"] = *s.mes;
    if (s.coeffs) p["coeffs"] = *s.coeffs;
    if (s.coeffs_file) p["coeffs_file"] = *s.coeffs_file;
    return p;
}

json schmidt_json(const SchmidtData &s) {
    return {{"coefficients", to_json(s.coefficients)}, {"rank", s.rank}, {"tolerance", s.tolerance}};
}

bool is_stdout(const std::string &path) { return path.empty() || path == "-"; }

void emit(const json &doc, const std::string &path, std::ostream &out) {
    std::string text = doc.dump(2) + "\n";
    if (is_stdout(path))
        out << text;
    else
        write_atomic(path, text);
}

json document(const RunManifest &m, json result, json timing = nullptr) {
    json doc{{"manifest", m.to_json()}, {"result", std::move(result)}};
    if (!timing.is_null()) doc["timing"] = std::move(timing);
    return doc;
}

json record_json(const SearchRecord &r) {
    return {{"n_qubits", r.config.n_qubits},
            {"proxy", to_string(r.config.proxy)},
            {"n_restarts", r.config.n_restarts},
            {"seed", r.config.seed},
            {"max_iters", r.config.max_iters},
            {"ftol", r.config.ftol},
            {"omega_star", r.omega_star},
            {"proxy_value", r.proxy_value},
            {"geometric_value", r.geometric_value},
            {"lower_bound", r.lower_bound},
            {"n_converged", r.n_converged},
            {"plateau_size", r.plateau_size}};
}

// ---- map / rank --------------------------------------------------------

struct MapArgs {
    StateArgs state;
    std::string out = "-";
};

int cmd_map(const MapArgs &a, std::ostream &out) {
    ResolvedState r = resolve_state(a.state);
    BipartiteSymmetricState psi = map_pure(r.state);
    const int d = psi.dim();
    CVector coords = psi.psi_coordinates();
    json psi_json = json::array();
    for (int i = 0, idx = 0; i < d; ++i)
        for (int j = i; j < d; ++j, ++idx) psi_json.push_back({{"i", i}, {"j", j}, {"value", to_json(coords[idx])}});
    Decomposition dec = decompose(psi);
    json result{{"state", state_json(r)},
                {"d", d},
                {"amplitudes", to_json(psi.amplitudes())},
                {"psi_coordinates", psi_json},
                {"decomposition", {{"tilde_weight", dec.tilde_weight}, {"hat_weight", dec.hat_weight}}},
                {"schmidt", schmidt_json(schmidt(psi))}};
    json params = state_params(a.state);
    emit(document(make_manifest("map", params, 0, a.out), result), a.out, out);
    return kExitOk;
}

int cmd_rank(const MapArgs &a, std::ostream &out) {
    ResolvedState r = resolve_state(a.state);
    const int n = r.state.n_qubits();
    SchmidtData s = schmidt(map_pure(r.state));
    json result{{"state", state_json(r)}, {"schmidt", schmidt_json(s)}};
    if (r.dicke_k) {
        const int k = *r.dicke_k;
        const int st = dicke_symmetric_tensor_rank(n, std::min(k, n - k));
        result["closed_form_rank"] = mapped_dicke_rank(n, k);
        result["symmetric_tensor_rank"] = st;
        result["rank_bound_holds"] = s.rank <= st;
    }
    emit(document(make_manifest("rank", state_params(a.state), 0, a.out), result), a.out, out);
    return kExitOk;
}

// ---- detect ------------------------------------------------------------

struct DetectArgs {
    int n = 0;
    std::string family = "w-mix";
    std::optional<double> p;
    bool threshold = false;
    double lo = 0.0;
    double hi = 1.0;
    std::string out = "-";
};

int cmd_detect(const DetectArgs &a, std::ostream &out) {
    if (a.n % 2 != 0) throw UnsupportedParity(a.n);
    std::function<SymmetricDensity(double)> family;
    if (a.family == "w-mix")
        family = [n = a.n](double p) { return w_mixture(n, p); };
    else if (a.family == "ghz-mix")
        family = [n = a.n](double p) { return noisy_mixture(ghz(n), p); };
    else
        throw DomainError("unknown family '" + a.family + "' (expected w-mix or ghz-mix)");
    if (a.threshold == a.p.has_value()) throw DomainError("give exactly one of --p and --threshold");

    json params{{"n", a.n}, {"family", a.family}};
    json result{{"family", a.family}, {"n_qubits", a.n}};
    if (a.p) {
        params["p"] = *a.p;
        PptResult r = ppt_is_entangled(map_mixed(family(*a.p)));
        result["p"] = *a.p;
        result["verdict"] = r.entangled ? "NPT" : "PPT";
        result["entangled"] = r.entangled;
        result["min_eigenvalue"] = r.min_eigenvalue;
    } else {
        params["threshold"] = true;
        params["lo"] = a.lo;
        params["hi"] = a.hi;
        ThresholdResult t = ppt_threshold([&](double p) { return map_mixed(family(p)); }, a.lo, a.hi);
        json trace = json::array();
        for (const auto &s : t.trace)
            trace.push_back({{"lo", s.lo}, {"hi", s.hi}, {"mid", s.mid}, {"min_eigenvalue", s.min_eigenvalue}});
        result["threshold"] = t.threshold;
        result["bracket_trace"] = trace;
    }
    emit(document(make_manifest("detect", params, 0, a.out), result), a.out, out);
    return kExitOk;
}

// ---- gm ----------------------------------------------------------------

struct GmArgs {
    StateArgs state;
    std::optional<std::string> table;
    int starts = 64;
    int random_starts = 16;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

int cmd_gm(const GmArgs &a, std::uint64_t seed, std::ostream &out) {
    GeometricOptions opts;
    opts.lattice_starts = a.starts;
    opts.random_starts = a.random_starts;
    opts.seed = seed;
    if (a.starts < 1 || a.random_starts < 0) throw DomainError("--starts must be positive, --random-starts nonnegative");
    json params{{"starts", a.starts}, {"random_starts", a.random_starts}};
    json result;
    if (a.table) {
        if (*a.table != "mes") throw DomainError("unknown table '" + *a.table + "' (expected mes)");
        if (a.state.any()) throw DomainError("--table cannot be combined with a state option");
        params["table"] = *a.table;
        json rows = json::array();
        auto mes_sizes = mes_tabulated_sizes();
        for (int n : omega_tabulated_sizes()) {
            json row{{"n_qubits", n}};
            bool has_mes = std::find(mes_sizes.begin(), mes_sizes.end(), n) != mes_sizes.end();
            row["mes_value"] = has_mes ? json(geometric_measure(mes_candidate(n), opts).value) : json(nullptr);
            row["mes_published"] = has_mes ? json(tabulated_mes_measure(n)) : json(nullptr);
            row["omega_value"] = verify_published(n, seed);
            row["omega_published"] = tabulated_omega_measure(n);
            row["upper_bound"] = symmetric_measure_upper_bound(n);
            rows.push_back(row);
        }
        result = {{"table", "mes"}, {"rows", rows}};
    } else {
        ResolvedState r = resolve_state(a.state);
        params.update(state_params(a.state));
        GeometricResult g = geometric_measure(r.state, opts);
        const int n = r.state.n_qubits();
        result = {{"state", state_json(r)},
                  {"value", g.value},
                  {"argmax", {{"theta", g.argmax.theta}, {"phi", g.argmax.phi}}},
                  {"n_starts", g.n_starts},
                  {"converged", g.converged},
                  {"upper_bound", symmetric_measure_upper_bound(n)}};
        result["lower_bound"] = n % 2 == 0 ? json(mapped_lower_bound(r.state)) : json(nullptr);
    }
    emit(document(make_manifest("gm", params, seed, a.out), result), a.out, out);
    return kExitOk;
}

// ---- search ------------------------------------------------------------

struct SearchArgs {
    int n = 0;
    std::string proxy = "both";
    std::optional<int> restarts;
    std::optional<std::uint64_t> seed;
    int max_iters = 1000;
    double ftol = 1e-13;
    std::string log;
    std::string out = "-";
};

int cmd_search(const SearchArgs &a, std::uint64_t seed, std::ostream &out) {
    std::vector<Proxy> proxies;
    if (a.proxy == "both") {
        proxies = {Proxy::PurityDeficit, Proxy::Determinant};
    } else if (auto p = parse_proxy(a.proxy)) {
        proxies = {*p};
    } else {
        throw DomainError("unknown proxy '" + a.proxy + "' (expected purity, det or both)");
    }
    const int restarts = a.restarts.value_or(default_restarts(a.n));
    json params{{"n", a.n}, {"proxy", a.proxy}, {"restarts", restarts}, {"max_iters", a.max_iters}, {"ftol", a.ftol}};
    if (!a.log.empty()) params["log"] = a.log;
    const RunManifest manifest = make_manifest("search", params, seed, a.out);

    json records = json::array();
    json timing = json::array();
    const SearchRecord *best = nullptr;
    std::vector<SearchRecord> done;
    done.reserve(proxies.size());
    for (Proxy p : proxies) {
        SearchConfig cfg;
        cfg.n_qubits = a.n;
        cfg.proxy = p;
        cfg.n_restarts = restarts;
        cfg.seed = seed;
        cfg.max_iters = a.max_iters;
        cfg.ftol = a.ftol;
        done.push_back(optimize_proxy(cfg));
        const SearchRecord &r = done.back();
        if (!a.log.empty()) {
            json line{{"manifest", manifest.to_json()}, {"record", record_json(r)}, {"timing", {{"wall_time", r.wall_time}}}};
            append_line(a.log, line.dump());
        }
        records.push_back(record_json(r));
        timing.push_back({{"proxy", to_string(p)}, {"wall_time", r.wall_time}});
    }
    for (const auto &r : done)
        if (!best || r.geometric_value > best->geometric_value) best = &r;
    json result{{"records", records},
                {"best_proxy", to_string(best->config.proxy)},
                {"geometric_value", best->geometric_value},
                {"omega_star", best->omega_star}};
    emit(document(manifest, result, timing), a.out, out);
    return kExitOk;
}

// ---- subspace ----------------------------------------------------------

struct SubspaceArgs {
    int dmax = 20;
    int starts = 128;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

int cmd_subspace(const SubspaceArgs &a, std::uint64_t seed, std::ostream &out) {
    if (a.starts < 1) throw DomainError("--starts must be positive");
    std::string csv = gd_sweep_csv(gd_sweep(a.dmax, a.starts, seed));
    if (is_stdout(a.out)) {
        out << csv;
        return kExitOk;
    }
    json params{{"dmax", a.dmax}, {"starts", a.starts}};
    write_atomic(a.out, csv);
    write_atomic(a.out + ".manifest.json", make_manifest("subspace", params, seed, a.out).to_json().dump(2) + "\n");
    return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string payload_out;
    bool skip_determinism = false;
};

int cmd_verify(const VerifyArgs &a, std::uint64_t seed, std::ostream &out) {
    AcceptanceReport report = run_acceptance(seed, !a.skip_determinism);
    out << report.table();
    json params{{"skip_determinism", a.skip_determinism}};
    if (!a.out.empty()) {
        json doc{{"manifest", make_manifest("verify", params, seed, a.out).to_json()},
                 {"payload", report.payload()},
                 {"timing", report.timing()}};
        write_atomic(a.out, doc.dump(2) + "\n");
    }
    if (!a.payload_out.empty()) write_atomic(a.payload_out, report.payload().dump(2) + "\n");
    return report.all_passed() ? kExitOk : kExitCriteriaFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"symmap: symmetric qubit states as two-qudit states"};
    app.name("symmap");
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", library_version());

    MapArgs map_args;
    auto *map = app.add_subcommand("map", "map an N-qubit symmetric state to its two-qudit image");
    add_state_options(map, map_args.state);
    map->add_option("--out", map_args.out, "output path, - for stdout");

    MapArgs rank_args;
    auto *rank = app.add_subcommand("rank", "Schmidt rank of the mapped state");
    add_state_options(rank, rank_args.state);
    rank->add_option("--out", rank_args.out, "output path, - for stdout");

    DetectArgs detect_args;
    auto *detect = app.add_subcommand("detect", "PPT test on the mapped noisy family");
    detect->add_option("--n", detect_args.n, "number of qubits")->required();
    detect->add_option("--family", detect_args.family, "w-mix or ghz-mix");
    detect->add_option("--p", detect_args.p, "mixing weight of the pure state");
    detect->add_flag("--threshold", detect_args.threshold, "bisect for the PPT/NPT crossing");
    detect->add_option("--lo", detect_args.lo, "lower bracket end");
    detect->add_option("--hi", detect_args.hi, "upper bracket end");
    detect->add_option("--out", detect_args.out, "output path, - for stdout");

    GmArgs gm_args;
    auto *gm = app.add_subcommand("gm", "geometric measure of a symmetric state");
    add_state_options(gm, gm_args.state);
    gm->add_option("--table", gm_args.table, "regenerate a comparison table (mes)");
    gm->add_option("--starts", gm_args.starts, "Fibonacci-lattice starts");
    gm->add_option("--random-starts", gm_args.random_starts, "additional seeded random starts");
    gm->add_option("--seed", gm_args.seed, "seed (default $SYMMAP_SEED or 0)");
    gm->add_option("--out", gm_args.out, "output path, - for stdout");

    SearchArgs search_args;
    auto *search = app.add_subcommand("search", "multi-restart proxy search for highly entangled states");
    search->add_option("--n", search_args.n, "number of qubits")->required();
    search->add_option("--proxy", search_args.proxy, "purity, det or both");
    search->add_option("--restarts", search_args.restarts, "restarts per proxy (default 200 for N <= 12, else 500)");
    search->add_option("--seed", search_args.seed, "seed (default $SYMMAP_SEED or 0)");
    search->add_option("--max-iters", search_args.max_iters, "iteration cap per restart");
    search->add_option("--ftol", search_args.ftol, "relative stall tolerance");
    search->add_option("--log", search_args.log, "append one JSON line per proxy to this file");
    search->add_option("--out", search_args.out, "output path, - for stdout");

    SubspaceArgs subspace_args;
    auto *subspace = app.add_subcommand("subspace", "g_d sweep as CSV");
    subspace->add_option("--dmax", subspace_args.dmax, "largest qudit dimension (<= 20)");
    subspace->add_option("--starts", subspace_args.starts, "random starts per d");
    subspace->add_option("--seed", subspace_args.seed, "seed (default $SYMMAP_SEED or 0)");
    subspace->add_option("--out", subspace_args.out, "CSV path (a .manifest.json sidecar is written next to it)");

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "run the acceptance suite and print a pass/fail table");
    verify->add_option("--seed", verify_args.seed, "seed (default $SYMMAP_SEED or 0)");
    verify->add_option("--out", verify_args.out, "JSON report with manifest, payload and timings");
    verify->add_option("--payload-out", verify_args.payload_out, "JSON file with the payload only");
    verify->add_flag("--skip-determinism", verify_args.skip_determinism, "do not rerun the suite for criterion 12");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        auto seed_for = [](const std::optional<std::uint64_t> &s) { return s ? *s : env_seed(); };
        if (*map) return cmd_map(map_args, out);
        if (*rank) return cmd_rank(rank_args, out);
        if (*detect) return cmd_detect(detect_args, out);
        if (*gm) return cmd_gm(gm_args, seed_for(gm_args.seed), out);
        if (*search) return cmd_search(search_args, seed_for(search_args.seed), out);
        if (*subspace) return cmd_subspace(subspace_args, seed_for(subspace_args.seed), out);
        if (*verify) return cmd_verify(verify_args, seed_for(verify_args.seed), out);
    } catch (const BracketError &e) {
        err << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error &e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception &e) {
        err << "ParseError: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace symmap::cli
