// Copyright 2026 The Graphforge Authors
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

#include "graphforge/cli/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "graphforge/graph/graph.h"
#include "graphforge/growth/growth.h"
#include "graphforge/mbqc/compile.h"
#include "graphforge/mbqc/pattern.h"
#include "graphforge/photonic/protocols.h"
#include "graphforge/stabilizer/circuit.h"
#include "graphforge/stats.h"
#include "json.hpp"

namespace graphforge::cli {

namespace {

using nlohmann::json;

// Bad user input; maps to exit code 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<uint64_t> seed;
    std::optional<uint64_t> trials;
    unsigned threads = 1;
    std::string out;
    std::string format = "json";
};

struct Context {
    Options opt;
    std::string subcommand;
    std::string action;
    std::vector<std::string> inputs;
    /// Canonical argument list stored for replay.
    std::vector<std::string> args;
    /// Destination override used by replay; the manifest keeps opt.out.
    std::optional<std::string> write_to;
    std::ostream *out;

    uint64_t seed = 0;
    bool seeded = false;
};

json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
}

// Seed precedence: --seed, then GRAPHFORGE_SEED, then a fresh random draw.
void resolve_seed(Context &ctx) {
    if (ctx.opt.seed) {
        ctx.seed = *ctx.opt.seed;
    } else if (const char *env = std::getenv("GRAPHFORGE_SEED"); env && *env) {
        try {
            size_t used = 0;
            ctx.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw InputError(std::string("GRAPHFORGE_SEED is not an unsigned integer: ") + env);
        }
    } else {
        std::random_device rd;
        ctx.seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    }
    ctx.seeded = true;
    ctx.args.push_back("--seed");
    ctx.args.push_back(std::to_string(ctx.seed));
}

uint64_t trials_or(const Context &ctx, uint64_t fallback) {
    uint64_t t = ctx.opt.trials.value_or(fallback);
    if (t == 0) {
        throw InputError("--trials must be positive");
    }
    return t;
}

json manifest(const Context &ctx, std::optional<uint64_t> trials) {
    json m = {{"subcommand", ctx.subcommand},
              {"inputs", ctx.inputs},
              {"format", ctx.opt.format},
              {"output", ctx.opt.out.empty() ? json(nullptr) : json(ctx.opt.out)},
              {"seed", ctx.seeded ? json(ctx.seed) : json(nullptr)},
              {"trials", trials ? json(*trials) : json(nullptr)},
              {"args", ctx.args}};
    if (!ctx.action.empty()) {
        m["action"] = ctx.action;
    }
    return m;
}

void write(const Context &ctx, const std::string &text) {
    std::string dest = ctx.write_to.value_or(ctx.opt.out);
    if (dest.empty()) {
        *ctx.out << text;
        return;
    }
    std::ofstream f(dest, std::ios::binary);
    if (!f) {
        throw InputError(dest + ": cannot open output file");
    }
    f << text;
}

void emit(const Context &ctx, const json &result, std::optional<uint64_t> trials,
          const std::optional<std::string> &csv = std::nullopt) {
    if (ctx.opt.format == "csv") {
        if (!csv) {
            throw InputError("--format csv is only available for sweep tables");
        }
        write(ctx, "# manifest: " + manifest(ctx, trials).dump() + "\n" + *csv);
        return;
    }
    json doc = {{"manifest", manifest(ctx, trials)}, {"result", result}};
    write(ctx, doc.dump(2) + "\n");
}

// graph ------------------------------------------------------------------

graph::Graph load_graph(const std::string &path) {
    json j = read_json(path);
    try {
        if (j.is_object() && j.contains("tableau")) {
            return graph::tableau_to_graph(stabilizer::tableau_from_json(j["tableau"]));
        }
        if (j.is_object() && j.contains("family")) {
            std::string f = j["family"].get<std::string>();
            size_t n = j.at("n").get<size_t>();
            if (f == "path") {
                return graph::Graph::path(n);
            }
            if (f == "complete") {
                return graph::Graph::complete(n);
            }
            throw InputError(path + ": unknown graph family \"" + f + "\"");
        }
        return graph::graph_from_json(j);
    } catch (const std::invalid_argument &e) {
        throw InputError(path + ": " + e.what());
    }
}

json graph_report(const graph::Graph &g) {
    json stabs = json::array();
    for (const auto &p : graph::graph_to_tableau(g).generators()) {
        stabs.push_back(p.str());
    }
    return {{"graph", graph::graph_to_json(g)}, {"stabilizers", stabs}};
}

char parse_basis(const std::string &s) {
    if (s.size() != 1 || std::string("XYZ").find(s[0]) == std::string::npos) {
        throw InputError("basis must be X, Y or Z, got \"" + s + "\"");
    }
    return s[0];
}

// "Y@2,Z@0:-1" -> specs.
std::vector<graph::PauliMeasurementSpec> parse_specs(const std::string &text) {
    std::vector<graph::PauliMeasurementSpec> specs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        size_t at = tok.find('@');
        if (tok.empty() || at != 1) {
            throw InputError("measurement \"" + tok + "\" must look like Y@2 or Y@2:-1");
        }
        graph::PauliMeasurementSpec s{0, parse_basis(tok.substr(0, 1))};
        std::string rest = tok.substr(2);
        size_t colon = rest.find(':');
        try {
            s.vertex = std::stoul(rest.substr(0, colon));
            if (colon != std::string::npos) {
                s.outcome = std::stoi(rest.substr(colon + 1));
            }
        } catch (const std::exception &) {
            throw InputError("measurement \"" + tok + "\" has a malformed vertex or outcome");
        }
        specs.push_back(s);
    }
    if (specs.empty()) {
        throw InputError("--measure needs at least one measurement");
    }
    return specs;
}

// mbqc -----------------------------------------------------------------------

oracle::StateVector input_state(const json &spec, size_t n, uint64_t seed) {
    oracle::StateVector s = oracle::StateVector::qubits(n);
    if (spec.is_string()) {
        std::string kind = spec.get<std::string>();
        if (kind == "zero") {
            return s;
        }
        if (kind == "plus") {
            for (size_t q = 0; q < n; q++) {
                s.apply_unitary(oracle::gates::h(), {q});
            }
            return s;
        }
        if (kind == "random") {
            Rng rng(trial_seed(seed, UINT64_MAX));
            std::normal_distribution<double> normal;
            std::mt19937_64 eng(rng.next_u64());
            oracle::Vector v(size_t{1} << n);
            for (Eigen::Index i = 0; i < v.size(); i++) {
                v[i] = oracle::Complex(normal(eng), normal(eng));
            }
            v.normalize();
            return oracle::StateVector::from_amplitudes(std::vector<size_t>(n, 2), v);
        }
        throw InputError("input state must be zero, plus, random or {\"amplitudes\": [[re, im], ...]}");
    }
    if (spec.is_object() && spec.contains("amplitudes") && spec["amplitudes"].is_array()) {
        const auto &a = spec["amplitudes"];
        if (a.size() != (size_t{1} << n)) {
            throw InputError("input amplitudes: expected " + std::to_string(size_t{1} << n) + " entries");
        }
        oracle::Vector v(a.size());
        for (size_t i = 0; i < a.size(); i++) {
            if (!a[i].is_array() || a[i].size() != 2 || !a[i][0].is_number() || !a[i][1].is_number()) {
                throw InputError("input amplitudes[" + std::to_string(i) + "] must be [re, im]");
            }
            v[static_cast<Eigen::Index>(i)] = oracle::Complex(a[i][0].get<double>(), a[i][1].get<double>());
        }
        if (v.norm() < 1e-12) {
            throw InputError("input amplitudes are all zero");
        }
        v.normalize();
        return oracle::StateVector::from_amplitudes(std::vector<size_t>(n, 2), v);
    }
    throw InputError("input state must be zero, plus, random or {\"amplitudes\": [[re, im], ...]}");
}

mbqc::MeasurementPattern load_pattern(const json &cfg, const std::string &path) {
    try {
        if (cfg.contains("pattern")) {
            mbqc::MeasurementPattern p = mbqc::pattern_from_json(cfg["pattern"]);
            if (!p.target) {
                throw InputError(path + ": pattern needs a \"target\" to report fidelities");
            }
            return p;
        }
        if (cfg.contains("entangling")) {
            std::string m = cfg["entangling"].get<std::string>();
            if (m == "direct") {
                return mbqc::entangling_pattern(mbqc::EntanglingMode::DirectEdge);
            }
            if (m == "bridge_y") {
                return mbqc::entangling_pattern(mbqc::EntanglingMode::IntermediateY);
            }
            if (m == "bridge_z") {
                return mbqc::entangling_pattern(mbqc::EntanglingMode::IntermediateZ);
            }
            throw InputError(path + ": entangling must be direct, bridge_y or bridge_z");
        }
        if (!cfg.contains("circuit")) {
            throw InputError(path + ": need \"circuit\", \"entangling\" or \"pattern\"");
        }
        size_t wires = cfg.value("wires", size_t{1});
        auto c = mbqc::circuit_from_json(cfg["circuit"], wires);
        return mbqc::compile_circuit(c, {cfg.value("pad", false)});
    } catch (const std::invalid_argument &e) {
        throw InputError(path + ": " + e.what());
    }
}

json run_mbqc(const Context &ctx, const std::string &path, const std::optional<std::string> &input_flag,
              uint64_t trials) {
    json cfg = read_json(path);
    if (!cfg.is_object()) {
        throw InputError(path + ": expected a JSON object");
    }
    mbqc::MeasurementPattern p = load_pattern(cfg, path);
    if (p.graph.num_vertices() > oracle::kMaxQubits) {
        throw InputError(path + ": pattern has " + std::to_string(p.graph.num_vertices()) +
                         " vertices, above the oracle limit of " + std::to_string(oracle::kMaxQubits));
    }
    json spec = input_flag ? json(*input_flag) : cfg.value("input", json("plus"));
    oracle::StateVector input = input_state(spec, p.inputs.size(), ctx.seed);

    std::vector<double> fid(trials);
    std::vector<oracle::StateVector> outputs(trials);
    parallel_chunks(trials, ctx.opt.threads, [&](uint64_t begin, uint64_t end, unsigned) {
        for (uint64_t i = begin; i < end; i++) {
            Rng rng(trial_seed(ctx.seed, i));
            mbqc::RunResult r = mbqc::run_pattern(p, input, rng);
            fid[i] = mbqc::target_fidelity(p, input, r);
            outputs[i] = r.corrected_output;
        }
    });
    double agree = 1;
    for (uint64_t i = 1; i < trials; i++) {
        agree = std::min(agree, oracle::fidelity(outputs[0], outputs[i]));
    }
    double sum = 0;
    for (double f : fid) {
        sum += f;
    }
    return {{"vertices", p.graph.num_vertices()},
            {"steps", p.steps.size()},
            {"trajectories", trials},
            {"fidelities", fid},
            {"min_fidelity", *std::min_element(fid.begin(), fid.end())},
            {"max_fidelity", *std::max_element(fid.begin(), fid.end())},
            {"mean_fidelity", sum / static_cast<double>(trials)},
            {"min_agreement_with_first", agree}};
}

// stab -------------------------------------------------------------------------

json run_stab(const Context &ctx, const std::string &path, uint64_t trials) {
    json cfg = read_json(path);
    stabilizer::Tableau start;
    stabilizer::Circuit circ;
    try {
        if (!cfg.is_object() || !cfg.contains("circuit")) {
            throw std::invalid_argument("expected {\"n\": ..., \"circuit\": [...]} or {\"tableau\": ..., \"circuit\": [...]}");
        }
        if (cfg.contains("tableau")) {
            start = stabilizer::tableau_from_json(cfg["tableau"]);
        } else {
            if (!cfg.contains("n") || !cfg["n"].is_number_unsigned()) {
                throw std::invalid_argument("field \"n\" must be a non-negative integer");
            }
            start = stabilizer::Tableau(cfg["n"].get<size_t>());
        }
        circ = stabilizer::circuit_from_json(cfg["circuit"]);
        for (const auto &ins : circ) {
            for (size_t t : ins.targets) {
                if (t >= start.num_qubits()) {
                    throw std::invalid_argument(ins.gate + " target " + std::to_string(t) + " out of range");
                }
            }
        }
    } catch (const std::invalid_argument &e) {
        throw InputError(path + ": " + e.what());
    }
    std::vector<std::string> outcomes(trials);
    std::vector<uint8_t> valid(trials, 1);
    json first;
    parallel_chunks(trials, ctx.opt.threads, [&](uint64_t begin, uint64_t end, unsigned) {
        for (uint64_t i = begin; i < end; i++) {
            Rng rng(trial_seed(ctx.seed, i));
            stabilizer::Tableau t = start;
            std::vector<int> m = stabilizer::run_clifford_circuit(t, circ, rng);
            std::string bits;
            for (int x : m) {
                bits += x < 0 ? '1' : '0';
            }
            outcomes[i] = bits;
            valid[i] = t.validate().empty();
            if (i == 0) {
                first = {{"outcomes", m}, {"final_tableau", stabilizer::tableau_to_json(t)}};
            }
        }
    });
    std::map<std::string, uint64_t> counts;
    for (const auto &o : outcomes) {
        counts[o]++;
    }
    json counts_json = json::object();
    for (const auto &[k, v] : counts) {
        counts_json[k.empty() ? "-" : k] = v;
    }
    return {{"qubits", start.num_qubits()},
            {"gates", circ.size()},
            {"trials", trials},
            {"first_trial", first},
            {"outcome_counts", counts_json},
            {"invariants_hold", std::all_of(valid.begin(), valid.end(), [](uint8_t v) { return v != 0; })}};
}

// Drops --out and --seed (with values) so the manifest can re-add them.
std::vector<std::string> canonical_args(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    for (size_t i = 0; i < args.size(); i++) {
        const std::string &a = args[i];
        if (a == "--seed" || a == "--out" || a == "-o") {
            i++;
            continue;
        }
        if (a.rfind("--seed=", 0) == 0 || a.rfind("--out=", 0) == 0) {
            continue;
        }
        out.push_back(a);
    }
    return out;
}

int run_impl(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
             std::optional<std::string> write_to) {
    CLI::App app{"graphforge: stabilizer, graph-state, MBQC, photonic and growth simulations", "graphforge"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx;
    ctx.out = &out;
    ctx.write_to = write_to;
    uint64_t seed_value = 0;
    uint64_t trials_value = 0;
    auto *seed_opt = app.add_option("--seed", seed_value, "Root seed (also GRAPHFORGE_SEED)");
    auto *trials_opt = app.add_option("--trials", trials_value, "Monte Carlo trials or trajectories");
    app.add_option("--threads", ctx.opt.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--out,-o", ctx.opt.out, "Output file (default stdout)");
    app.add_option("--format", ctx.opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto *graph_cmd = app.add_subcommand("graph", "Graph-state operations");
    graph_cmd->require_subcommand(1);
    std::string graph_file;
    auto *g_build = graph_cmd->add_subcommand("build", "Graph (or tableau, or family) to graph and stabilizers");
    g_build->add_option("file", graph_file, "Graph JSON")->required();
    auto *g_measure = graph_cmd->add_subcommand("measure", "Pauli measurement of one vertex");
    g_measure->add_option("file", graph_file, "Graph JSON")->required();
    size_t vertex = 0;
    std::string basis;
    int outcome = 0;
    size_t special = 0;
    g_measure->add_option("--vertex", vertex, "Vertex to measure")->required();
    g_measure->add_option("--basis", basis, "X, Y or Z")->required();
    auto *outcome_opt =
        g_measure->add_option("--outcome", outcome, "+1 or -1; drawn from the seed when omitted")->check(
            CLI::IsMember({-1, 1}));
    auto *special_opt = g_measure->add_option("--special", special, "Special neighbour for X");
    auto *g_orbit = graph_cmd->add_subcommand("lc-orbit", "Local-complementation orbit with witnesses");
    g_orbit->add_option("file", graph_file, "Graph JSON")->required();
    size_t budget = 100000;
    g_orbit->add_option("--budget", budget, "Orbit size limit");
    auto *g_minimal = graph_cmd->add_subcommand("minimal", "Remove Pauli-measured vertices");
    g_minimal->add_option("file", graph_file, "Graph JSON")->required();
    std::string measure_specs;
    g_minimal->add_option("--measure", measure_specs, "Comma list like Y@2,Y@3 or Z@0:-1")->required();

    std::string config_file;
    auto *protocol_cmd = app.add_subcommand("protocol", "Photonic entanglement protocol statistics");
    protocol_cmd->add_option("config", config_file, "Protocol config JSON")->required();
    auto *grow_cmd = app.add_subcommand("grow", "Cluster-state growth strategies");
    grow_cmd->add_option("config", config_file, "Growth config JSON")->required();
    auto *mbqc_cmd = app.add_subcommand("mbqc", "Run a measurement pattern against the oracle");
    mbqc_cmd->add_option("config", config_file, "Circuit or pattern JSON")->required();
    std::string input_flag;
    auto *input_opt = mbqc_cmd->add_option("--input", input_flag, "zero, plus or random");
    auto *stab_cmd = app.add_subcommand("stab", "Run a Clifford circuit on the tableau simulator");
    stab_cmd->add_option("config", config_file, "Circuit JSON")->required();
    auto *replay_cmd = app.add_subcommand("replay", "Re-run the manifest embedded in an output file");
    replay_cmd->add_option("file", config_file, "Earlier output (JSON or CSV)")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitBadInput;
    }
    if (*seed_opt) {
        ctx.opt.seed = seed_value;
    }
    if (*trials_opt) {
        ctx.opt.trials = trials_value;
    }
    ctx.args = canonical_args(args);

    try {
        if (*replay_cmd) {
            std::ifstream in(config_file);
            if (!in) {
                throw InputError(config_file + ": cannot open file");
            }
            std::string first;
            std::getline(in, first);
            json m;
            const std::string tag = "# manifest: ";
            try {
                if (first.rfind(tag, 0) == 0) {
                    m = json::parse(first.substr(tag.size()));
                } else {
                    in.seekg(0);
                    m = json::parse(in).at("manifest");
                }
            } catch (const json::exception &e) {
                throw InputError(config_file + ": no readable manifest: " + e.what());
            }
            if (!m.contains("args") || !m["args"].is_array()) {
                throw InputError(config_file + ": manifest has no argument list");
            }
            auto replay_args = m["args"].get<std::vector<std::string>>();
            if (!m["output"].is_null()) {
                replay_args.push_back("--out");
                replay_args.push_back(m["output"].get<std::string>());
            }
            std::optional<std::string> dest;
            if (!ctx.opt.out.empty()) {
                dest = ctx.opt.out;
            }
            return run_impl(replay_args, out, err, dest);
        }

        if (*graph_cmd) {
            ctx.subcommand = "graph";
            ctx.inputs = {graph_file};
            graph::Graph g = load_graph(graph_file);
            if (*g_build) {
                ctx.action = "build";
                emit(ctx, graph_report(g), std::nullopt);
            } else if (*g_measure) {
                ctx.action = "measure";
                char b = parse_basis(basis);
                if (vertex >= g.num_vertices()) {
                    throw InputError("--vertex " + std::to_string(vertex) + " is out of range");
                }
                if (!*outcome_opt) {
                    resolve_seed(ctx);
                    Rng rng(ctx.seed);
                    outcome = rng.coin() ? -1 : +1;
                }
                std::optional<size_t> sp;
                if (*special_opt) {
                    sp = special;
                }
                graph::GraphMeasurement r;
                try {
                    r = graph::measure_vertex(g, vertex, b, outcome, sp);
                } catch (const std::invalid_argument &e) {
                    throw InputError(e.what());
                }
                json res = graph_report(r.graph);
                res["outcome"] = r.outcome;
                res["deterministic"] = r.deterministic;
                emit(ctx, res, std::nullopt);
            } else if (*g_orbit) {
                ctx.action = "lc-orbit";
                std::vector<graph::Graph> orbit;
                try {
                    orbit = graph::lc_orbit(g, budget);
                } catch (const graph::ResourceExhausted &e) {
                    throw InputError(std::string(e.what()) + " (raise --budget)");
                }
                json members = json::array();
                for (const auto &h : orbit) {
                    auto w = graph::lc_equivalent(g.bare(), h, budget);
                    json edges = json::array();
                    for (auto [a, b] : h.edges()) {
                        edges.push_back({a, b});
                    }
                    members.push_back({{"edges", edges}, {"witness", w.witness}});
                }
                emit(ctx, {{"n", g.num_vertices()}, {"class_size", orbit.size()}, {"orbit", members}}, std::nullopt);
            } else {
                ctx.action = "minimal";
                graph::Graph r;
                try {
                    r = graph::reduce_clifford_part(g, parse_specs(measure_specs));
                } catch (const std::invalid_argument &e) {
                    throw InputError(e.what());
                } catch (const std::out_of_range &e) {
                    throw InputError(e.what());
                }
                emit(ctx, graph_report(r), std::nullopt);
            }
            return kExitOk;
        }

        ctx.inputs = {config_file};
        if (*protocol_cmd || *grow_cmd) {
            ctx.subcommand = *protocol_cmd ? "protocol" : "grow";
            json cfg = read_json(config_file);
            uint64_t trials = trials_or(ctx, 10000);
            resolve_seed(ctx);
            try {
                if (*protocol_cmd) {
                    emit(ctx, photonic::run_protocol_config(cfg, trials, ctx.seed, ctx.opt.threads), trials);
                } else {
                    growth::GrowthReport rep = growth::run_growth_config(cfg, trials, ctx.seed, ctx.opt.threads);
                    emit(ctx, rep.json, trials, rep.csv);
                }
            } catch (const std::invalid_argument &e) {
                throw InputError(config_file + ": " + e.what());
            } catch (const json::exception &e) {
                throw InputError(config_file + ": " + e.what());
            }
            return kExitOk;
        }
        if (*mbqc_cmd) {
            ctx.subcommand = "mbqc";
            uint64_t trials = trials_or(ctx, 100);
            resolve_seed(ctx);
            std::optional<std::string> in;
            if (*input_opt) {
                in = input_flag;
            }
            emit(ctx, run_mbqc(ctx, config_file, in, trials), trials);
            return kExitOk;
        }
        ctx.subcommand = "stab";
        uint64_t trials = trials_or(ctx, 1);
        resolve_seed(ctx);
        emit(ctx, run_stab(ctx, config_file, trials), trials);
        return kExitOk;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    return run_impl(args, out, err, std::nullopt);
}

}  // namespace graphforge::cli
