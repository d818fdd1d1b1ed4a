#include "CLI11.hpp"

#include "pailab/errors.hpp"
#include "pailab/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <string>

// Command line front end. Each subcommand fills a ScenarioConfig, runs the
// scenario, optionally writes the transcript and report files, and prints a
// short summary. Exit code 0 means every claim in the report verified;
// 1 means at least one claim mismatched; 2 means the run itself failed.

namespace {

struct CommandState {
    pailab::ScenarioConfig cfg;
    std::string transcript_path;
    std::string report_path;
    // Tracked so tiny-key runs can fall back to parameters that fit the
    // 35-element modulus when the user did not pick their own.
    CLI::Option* ell_opt = nullptr;
    CLI::Option* kappa_opt = nullptr;
};

void add_common_options(CLI::App* sub, CommandState& st) {
    auto* bits = sub->add_option("--bits", st.cfg.bits, "modulus size in bits")
                     ->capture_default_str();
    sub->add_option("--seed", st.cfg.seed, "rng seed; same seed and config, same transcript")
        ->capture_default_str();
    sub->add_flag("--tiny-key", st.cfg.tiny_key,
                  "use the fixed 35-element key (p=5, q=7, g_p=2)")
        ->excludes(bits);
    sub->add_option("--transcript", st.transcript_path,
                    "write the message transcript to this path (json lines)");
    sub->add_option("--report", st.report_path,
                    "write the verification report to this path (json)");
}

int execute(const CommandState& st) {
    pailab::ScenarioConfig cfg = st.cfg;
    if (cfg.tiny_key) {
        cfg.bits = 6;
        if (st.ell_opt != nullptr && st.ell_opt->count() == 0) {
            cfg.ell = 2;
        }
        if (st.kappa_opt != nullptr && st.kappa_opt->count() == 0) {
            cfg.kappa = 4;
        }
    }

    pailab::Transcript transcript;
    const pailab::ScenarioReport report = pailab::run_scenario(cfg, transcript);

    if (!st.transcript_path.empty()) {
        transcript.write_file(st.transcript_path);
        std::printf("transcript : %s (%zu records)\n", st.transcript_path.c_str(),
                    transcript.records().size());
    }
    if (!st.report_path.empty()) {
        std::ofstream out(st.report_path, std::ios::binary);
        if (!out) {
            throw pailab::Error("cannot open report file for writing: " + st.report_path);
        }
        out << report.to_string();
        if (!out) {
            throw pailab::Error("failed while writing report file: " + st.report_path);
        }
        std::printf("report     : %s\n", st.report_path.c_str());
    }

    std::printf("scenario   : %s\n", pailab::scenario_name(cfg.scenario).c_str());
    std::printf("claims     : %zu/%zu verified\n", report.matches(), report.claims());
    for (const auto& note : report.notes) {
        std::printf("note       : %s\n", note.c_str());
    }
    std::printf("duration   : %llu ms\n",
                static_cast<unsigned long long>(report.duration_ms));

    const bool ok = report.all_verified();
    if (!ok) {
        int shown = 0;
        for (const auto& e : report.entries) {
            if (e.exact_match) {
                continue;
            }
            if (++shown > 10) {
                std::printf("mismatch   : (further mismatches omitted)\n");
                break;
            }
            std::printf("mismatch   : %s\n  expected %s\n  got      %s\n", e.claim.c_str(),
                        e.ground_truth.c_str(), e.recovered.c_str());
        }
    }
    std::printf("result     : %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Protocol laboratory for a modified Paillier scheme. Runs deterministic "
        "scenarios and verifies every attack claim against orchestrator-held ground "
        "truth."};
    app.require_subcommand(1);

    CommandState selftest_state;
    selftest_state.cfg.scenario = pailab::ScenarioKind::Selftest;
    CLI::App* selftest = app.add_subcommand(
        "selftest", "key generation plus an encryption-forgery sweep");
    add_common_options(selftest, selftest_state);
    selftest
        ->add_option("--trials", selftest_state.cfg.trials,
                     "forgery trials (a tiny-key run sweeps all 35 plaintexts instead)")
        ->capture_default_str();

    CommandState capss_state;
    capss_state.cfg.scenario = pailab::ScenarioKind::Capss;
    capss_state.cfg.ell = 8;
    CLI::App* capss = app.add_subcommand(
        "capss", "context-aware pub/sub end to end, then subscription recovery");
    add_common_options(capss, capss_state);
    capss_state.ell_opt =
        capss->add_option("--ell", capss_state.cfg.ell, "attribute value bit width")
            ->capture_default_str();
    capss->add_option("--contexts", capss_state.cfg.contexts, "number of contexts")
        ->capture_default_str();
    capss
        ->add_option("--subscribers", capss_state.cfg.subscribers,
                     "subscribers, spread over contexts round robin")
        ->capture_default_str();
    capss
        ->add_option("--publishers", capss_state.cfg.publishers,
                     "publishers, spread over contexts round robin")
        ->capture_default_str();

    CommandState lpride_state;
    lpride_state.cfg.scenario = pailab::ScenarioKind::Lpride;
    lpride_state.cfg.ell = 16;
    CLI::App* lpride = app.add_subcommand(
        "lpride", "ride hailing end to end, then key and location recovery");
    add_common_options(lpride, lpride_state);
    lpride_state.ell_opt =
        lpride->add_option("--ell", lpride_state.cfg.ell, "coordinate bit width")
            ->capture_default_str();
    lpride_state.kappa_opt =
        lpride->add_option("--kappa", lpride_state.cfg.kappa, "taxi blind bit width")
            ->capture_default_str();
    lpride->add_option("--omega", lpride_state.cfg.omega, "coordinate dimensions")
        ->capture_default_str();
    lpride->add_option("--riders", lpride_state.cfg.riders, "number of riders")
        ->capture_default_str();
    lpride->add_option("--taxis", lpride_state.cfg.taxis, "number of taxis")
        ->capture_default_str();
    lpride->add_option("--zones", lpride_state.cfg.zones, "number of zones")
        ->capture_default_str();
    lpride->add_flag("--per-coordinate-moduli", lpride_state.cfg.per_coordinate_moduli,
                     "give every coordinate its own modulus");
    lpride->add_flag("--rsp-disguise", lpride_state.cfg.rsp_disguise,
                     "log attack events under the rsp actor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (selftest->parsed()) {
            return execute(selftest_state);
        }
        if (capss->parsed()) {
            return execute(capss_state);
        }
        return execute(lpride_state);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
