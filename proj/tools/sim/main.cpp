// Copyright 2026 The cavity-gates Authors
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

// sim: fidelity sweeps, detector-protocol Monte Carlo and compass-code experiments.
//
// Exit codes: 0 success, 1 computation failed, 2 usage error, 3 I/O error.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cavity/compass.hpp"
#include "cavity/detector.hpp"
#include "cavity/sweep.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << text;
    f.close();
    if (!f) {
        throw IoError("write to '" + path + "' failed");
    }
}

void apply_threads(int threads) {
    if (threads <= 0) {
        if (const char *env = std::getenv("SIM_THREADS")) {
            threads = std::atoi(env);
        }
    }
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
}

struct Common {
    int threads = 0;
    std::string out = "-";
};

void add_common(CLI::App *sub, Common &c) {
    // Consumed by expand_config before parsing; declared here so it shows up in --help.
    sub->add_option("--config", "Flat key=value file; keys are long option names");
    sub->add_option("--threads", c.threads, "Worker threads (default: SIM_THREADS, then all cores)");
    sub->add_option("--out", c.out, "Output path, '-' for stdout");
}

// fidelity-sweep

struct SweepArgs {
    Common common;
    std::string protocol = "single-photon";
    std::string m = "1";
    double chi = cavity::kPi / 4.0;
    std::string kappa = "0";
    std::optional<double> p;
    std::string depolarization = "collective";
    std::uint64_t seed = 0;
};

int run_sweep(const SweepArgs &a) {
    cavity::sweep::SweepConfig cfg;
    try {
        cfg.protocol = cavity::sweep::parse_protocol(a.protocol);
        cfg.m = cavity::sweep::parse_int_list(a.m);
        cfg.kappa_over_g = cavity::sweep::parse_grid(a.kappa);
        cfg.chi = a.chi;
        cfg.p = a.p;
        cfg.depolarization = cavity::sweep::parse_depolarization(a.depolarization);
        cfg.seed = a.seed;
        cfg.validate();
    } catch (const cavity::DomainError &e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    cavity::sweep::write_csv(csv, cavity::sweep::run_sweep(cfg));
    write_output(a.common.out, csv.str());
    return 0;
}

// protocol

struct ProtocolArgs {
    Common common;
    std::string name = "detector";
    int m_sub = 2;
    double chi = cavity::kPi / 4.0;
    double kappa = 0.1;
    std::size_t runs = 10000;
    std::uint64_t seed = 1;
    int max_rounds = 100000;
};

int run_protocol(const ProtocolArgs &a) {
    namespace det = cavity::detector;
    det::ProtocolSimConfig cfg;
    if (a.name == "detector") {
        cfg.probe = det::Probe::Standard;
    } else if (a.name == "detector-biased") {
        cfg.probe = det::Probe::Biased;
    } else {
        throw UsageError("protocol simulation supports 'detector' and 'detector-biased', got '" + a.name + "'");
    }
    if (a.runs < 1000) {
        throw UsageError("--runs must be at least 1000");
    }
    cfg.m_sub = a.m_sub;
    cfg.chi = a.chi;
    cfg.kappa_over_g = a.kappa;
    cfg.runs = a.runs;
    cfg.seed = a.seed;
    cfg.max_rounds = a.max_rounds;

    det::ProtocolSimResult r;
    det::GateTimeStats stats{};
    double success = 0.0;
    double f_closed = 0.0;
    try {
        r = det::simulate_protocol(cfg);
        stats = det::gate_time_stats(a.kappa, cfg.probe);
        success = det::round_success(a.kappa, cfg.probe);
        f_closed = det::fidelity_with_detector(a.chi, a.kappa, cfg.probe);
    } catch (const cavity::DomainError &e) {
        throw UsageError(e.what());
    }

    ordered_json j;
    j["protocol"] = a.name;
    j["m_sub"] = a.m_sub;
    j["chi"] = a.chi;
    j["kappa_over_g"] = a.kappa;
    j["runs"] = r.runs;
    j["seed"] = a.seed;
    j["unfinished"] = r.unfinished;
    j["empirical"] = {
        {"fidelity", r.fidelity_mean},     {"fidelity_se", r.fidelity_se},
        {"rounds_mean", r.rounds_mean},    {"rounds_se", r.rounds_se},
        {"gate_time_mean", r.gate_time_mean}, {"gate_time_se", r.gate_time_se},
        {"gate_time_std", r.gate_time_std},
    };
    j["closed_form"] = {
        {"fidelity", f_closed},
        {"round_success", success},
        {"rounds_mean", 1.0 / success},
        {"gate_time_mean", stats.mean},
        {"gate_time_std", stats.std},
        {"tau", stats.tau},
    };
    j["round_histogram"] = r.round_histogram;
    write_output(a.common.out, j.dump(2) + "\n");
    return 0;
}

// code

struct CodeArgs {
    Common common;
    int n = 3;
    std::string mode = "distance";
    double px = 0.0;
    double pz = 0.0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 7;
    int samples = 2000;
};

int run_code(const CodeArgs &a) {
    namespace cp = cavity::compass;
    if (a.n < 3 || a.n % 2 == 0) {
        throw UsageError("--n must be odd and >= 3");
    }
    cp::CodeSpec code = cp::build_code(a.n);
    ordered_json j;
    j["n"] = a.n;
    j["mode"] = a.mode;
    if (a.mode == "distance") {
        if (a.n <= 3) {
            j["distance"] = cp::verify_distance(a.n);
            j["method"] = "exhaustive";
        } else {
            auto est = cp::randomized_distance_search(code, a.samples, a.seed);
            j["distance_upper_bound"] = est.upper_bound;
            j["method"] = "randomized";
            j["samples"] = a.samples;
            j["seed"] = a.seed;
        }
    } else if (a.mode == "montecarlo") {
        if (!(a.px >= 0.0 && a.px <= 1.0 && a.pz >= 0.0 && a.pz <= 1.0)) {
            throw UsageError("--px and --pz must lie in [0, 1]");
        }
        auto r = cp::logical_error_rate(code, a.px, a.pz, a.trials, a.seed);
        j["px"] = a.px;
        j["pz"] = a.pz;
        j["trials"] = r.trials;
        j["seed"] = a.seed;
        j["failures"] = r.failures;
        j["logical_rate"] = r.rate;
        j["wilson_95"] = {r.lower, r.upper};
    } else if (a.mode == "strings") {
        cp::HarmlessChecker chk(code);
        ordered_json rows = ordered_json::array();
        for (auto type : {cp::ErrorType::Z, cp::ErrorType::X}) {
            for (int len = 1; len <= a.n; ++len) {
                std::uint64_t placements = 0;
                std::uint64_t faults = 0;
                for (int start = 0; start + len <= a.n; ++start) {
                    for (int u = 0; u < a.n; ++u) {
                        for (int v = 0; v < a.n; ++v) {
                            auto e = cp::string_error(code, type, start, len, u, v);
                            auto res = e * cp::decode(cp::syndrome(e, code), code);
                            ++placements;
                            faults += chk(res) ? 0 : 1;
                        }
                    }
                }
                rows.push_back({{"pauli", type == cp::ErrorType::Z ? "Z" : "X"},
                                {"length", len},
                                {"placements", placements},
                                {"logical_faults", faults}});
            }
        }
        j["correctable_length"] = (a.n - 1) / 2;
        j["strings"] = rows;
    } else {
        throw UsageError("--mode must be distance, montecarlo or strings");
    }
    write_output(a.common.out, j.dump(2) + "\n");
    return 0;
}

// Flat key=value config: every key becomes --key value unless the flag is already on the command
// line, so explicit flags win over the file.
std::vector<std::string> expand_config(int argc, char **argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot read config '" + path + "'");
    }
    auto trim = [](std::string v) {
        auto b = v.find_first_not_of(" \t\r");
        auto e = v.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    auto present = [&](const std::string &flag) {
        for (const auto &a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        }
        return false;
    };
    std::vector<std::string> extra;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        std::string flag = "--" + trim(line.substr(0, eq));
        if (flag == "--config" || present(flag)) continue;
        extra.push_back(flag);
        extra.push_back(trim(line.substr(eq + 1)));
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cavity-mediated many-body gate fidelities and compass-code experiments"};
    app.require_subcommand(1);

    SweepArgs sw;
    auto *fs = app.add_subcommand("fidelity-sweep", "Closed-form process fidelity over a kappa/g grid (CSV)");
    add_common(fs, sw.common);
    fs->add_option("--protocol", sw.protocol, "single-photon, detector, detector-biased or geo-phase");
    fs->add_option("--m", sw.m, "Comma list of spin counts");
    fs->add_option("--chi", sw.chi, "Target rotation angle in (-pi, pi]");
    fs->add_option("--kappa-over-g", sw.kappa, "Grid start:stop:step, a value or a comma list");
    fs->add_option("--p", sw.p, "Depolarization strength");
    fs->add_option("--depolarization", sw.depolarization, "collective or independent");
    fs->add_option("--seed", sw.seed, "Seed (closed forms ignore it)");

    ProtocolArgs pr;
    auto *ps = app.add_subcommand("protocol", "Trajectory Monte Carlo of the detector protocol (JSON)");
    add_common(ps, pr.common);
    ps->add_option("--name", pr.name, "detector or detector-biased");
    ps->add_option("--m-sub", pr.m_sub, "Spins in the simulated register (1..4)");
    ps->add_option("--chi", pr.chi, "Target rotation angle");
    ps->add_option("--kappa-over-g", pr.kappa, "Cavity decay over coupling");
    ps->add_option("--runs", pr.runs, "Trajectories (>= 1000)");
    ps->add_option("--seed", pr.seed, "Master seed");
    ps->add_option("--max-rounds", pr.max_rounds, "Round cap per trajectory");

    CodeArgs cd;
    auto *cs = app.add_subcommand("code", "Compass code experiments (JSON)");
    add_common(cs, cd.common);
    cs->add_option("--n", cd.n, "Odd lattice size");
    cs->add_option("--mode", cd.mode, "distance, montecarlo or strings");
    cs->add_option("--px", cd.px, "Independent X flip probability");
    cs->add_option("--pz", cd.pz, "Independent Z flip probability");
    cs->add_option("--trials", cd.trials, "Monte Carlo trials");
    cs->add_option("--seed", cd.seed, "Master seed");
    cs->add_option("--samples", cd.samples, "Random logicals for the n > 3 distance bound");

    try {
        auto args = expand_config(argc, argv);
        std::vector<char *> ptrs;
        for (auto &a : args) ptrs.push_back(a.data());
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (fs->parsed()) {
            apply_threads(sw.common.threads);
            return run_sweep(sw);
        }
        if (ps->parsed()) {
            apply_threads(pr.common.threads);
            return run_protocol(pr);
        }
        apply_threads(cd.common.threads);
        return run_code(cd);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
