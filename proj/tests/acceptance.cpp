// Acceptance gate for the whole laboratory. Each criterion prints exactly
// one PASS/FAIL line with its measured numbers; the process exit code is the
// number of failed criteria. All sizes, counts, seeds, and time budgets are
// pinned right here.

#include "pailab/capss.hpp"
#include "pailab/capss_attack.hpp"
#include "pailab/errors.hpp"
#include "pailab/forgery.hpp"
#include "pailab/lpride.hpp"
#include "pailab/lpride_attack.hpp"
#include "pailab/modmath.hpp"
#include "pailab/paillier.hpp"
#include "pailab/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

using namespace pailab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

KeyPair tiny_keypair() {
    SeededRng rng(11);
    static const BigInt g_p = 2;
    return keygen_from_primes(5, 7, rng, &g_p);
}

// 1: forged ciphertexts equal honest encryptions, 1000/1000 random (m, r)
// pairs at 1024 bits plus the exhaustive tiny-key sweep, inside 10 seconds.
bool criterion_forgery(std::string& detail) {
    const auto started = Clock::now();
    SeededRng rng(101);
    const KeyPair kp = keygen(1024, rng);
    const ForgedEncryptor fe = recover_gp_lambda(kp.pk);
    const std::uint64_t trials = 1000;
    std::uint64_t match = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const BigInt m = rng.uniform_below(kp.pk.n);
        const BigInt r = rng.uniform_unit(kp.pk.n);
        if (encrypt(m, r, kp.sk, kp.pk).value == forge_encrypt(m, fe).value) {
            ++match;
        }
    }
    const KeyPair tiny = tiny_keypair();
    SeededRng tiny_rng(102);
    const BreakReport sweep = verify_break(tiny.pk, tiny.sk, 35, tiny_rng, true);
    const double secs = seconds_since(started);
    std::ostringstream out;
    out << match << "/" << trials << " forgeries equal honest ciphertexts at 1024 bits, "
        << sweep.forgery_matches << "/35 exhaustive at the tiny key, " << std::fixed
        << std::setprecision(1) << secs << "s (budget 10.0s)";
    detail = out.str();
    return match == trials && sweep.complete() && secs < 10.0;
}

// 2: encryption ignores the randomizer. 100 keys at 256 bits, one message
// each, 10 randomizers per message, every ciphertext identical.
bool criterion_determinism(std::string& detail) {
    SeededRng rng(201);
    const unsigned keys = 100;
    const unsigned randomizers = 10;
    unsigned constant_keys = 0;
    for (unsigned k = 0; k < keys; ++k) {
        const KeyPair kp = keygen(256, rng);
        const BigInt m = rng.uniform_below(kp.pk.n);
        const Ciphertext first = encrypt(m, rng.uniform_unit(kp.pk.n), kp.sk, kp.pk);
        bool constant = true;
        for (unsigned i = 1; i < randomizers; ++i) {
            if (encrypt(m, rng.uniform_unit(kp.pk.n), kp.sk, kp.pk).value != first.value) {
                constant = false;
            }
        }
        if (constant) {
            ++constant_keys;
        }
    }
    detail = std::to_string(constant_keys) + "/" + std::to_string(keys) +
             " keys gave randomizer-independent ciphertexts (10 randomizers each, 256 bits)";
    return constant_keys == keys;
}

// 3: decrypt(encrypt(m)) == m, exhaustive at the tiny key and 1000 random
// messages at 1024 bits.
bool criterion_round_trip(std::string& detail) {
    SeededRng rng(301);
    const KeyPair tiny = tiny_keypair();
    unsigned tiny_good = 0;
    for (BigInt m = 0; m < tiny.pk.n; ++m) {
        if (decrypt(encrypt(m, rng.uniform_unit(tiny.pk.n), tiny.sk, tiny.pk), tiny.pk) == m) {
            ++tiny_good;
        }
    }
    const KeyPair kp = keygen(1024, rng);
    const unsigned trials = 1000;
    unsigned good = 0;
    for (unsigned i = 0; i < trials; ++i) {
        const BigInt m = rng.uniform_below(kp.pk.n);
        if (decrypt(encrypt(m, rng.uniform_unit(kp.pk.n), kp.sk, kp.pk), kp.pk) == m) {
            ++good;
        }
    }
    detail = std::to_string(tiny_good) + "/35 exhaustive at the tiny key, " +
             std::to_string(good) + "/" + std::to_string(trials) + " at 1024 bits";
    return tiny_good == 35 && good == trials;
}

// 4: the broker's v >= x verdict equals the plaintext comparison for every
// (v, x) pair in [0, 2^ell)^2, ell in {2, 3, 4}, tiny and 256-bit moduli.
bool criterion_matching(std::string& detail) {
    SeededRng rng(401);
    std::uint64_t total = 0;
    std::uint64_t agree = 0;
    for (const bool tiny : {true, false}) {
        for (const unsigned ell : {2u, 3u, 4u}) {
            Context ctx = tiny ? context_init_with_keys(tiny_keypair(), ell, rng)
                               : context_init(256, ell, rng);
            const SubscriberCredential sub_cred = register_subscriber(ctx, rng);
            const PublisherCredential pub_cred = register_publisher(ctx, rng);
            const BigInt bound = BigInt(1) << ell;
            std::vector<BlindedSubscription> subs;
            for (BigInt x = 0; x < bound; ++x) {
                subs.push_back(blind_subscription(sub_cred, ctx.public_view(), "a", x,
                                                  CompareOp::GreaterEqual));
            }
            for (BigInt v = 0; v < bound; ++v) {
                const BigInt r_v = sample_rv(ctx, v, rng);
                const BlindedNotification notif =
                    blind_notification(pub_cred, ctx.public_view(), "a", v, r_v);
                for (BigInt x = 0; x < bound; ++x) {
                    const MatchResult res =
                        match_atomic(subs[x.convert_to<std::size_t>()].x_blinded,
                                     notif.v_blinded, ctx.pk);
                    ++total;
                    if (res.ge == (v >= x)) {
                        ++agree;
                    }
                }
            }
        }
    }
    std::ostringstream out;
    out << agree << "/" << total
        << " broker verdicts equal the plaintext comparison (ell 2..4, tiny and 256 bits)";
    detail = out.str();
    return total == 2 * (16 + 64 + 256) && agree == total;
}

// 5: one insider credential per context recovers all 100 subscriptions
// across 5 contexts at 1024 bits, and the recovered g^t is exact, within
// 30 seconds.
bool criterion_subscription_recovery(std::string& detail) {
    const auto started = Clock::now();
    SeededRng rng(501);
    const unsigned n_contexts = 5;
    const unsigned n_subs = 100;
    const unsigned ell = 8;

    std::vector<Context> ctxs;
    for (unsigned i = 0; i < n_contexts; ++i) {
        Context ctx = context_init(1024, ell, rng);
        ctx.id = i;
        ctxs.push_back(std::move(ctx));
    }
    struct Sub {
        unsigned ctx;
        BigInt x;
        SubscriberCredential cred;
        BlindedSubscription msg;
    };
    std::vector<Sub> subs;
    const BigInt bound = BigInt(1) << ell;
    for (unsigned j = 0; j < n_subs; ++j) {
        Sub s;
        s.ctx = j % n_contexts;
        s.cred = register_subscriber(ctxs[s.ctx], rng);
        s.x = rng.uniform_below(bound);
        s.msg = blind_subscription(s.cred, ctxs[s.ctx].public_view(), "a", s.x,
                                   CompareOp::GreaterEqual);
        subs.push_back(std::move(s));
    }

    unsigned exact_x = 0;
    unsigned exact_gt = 0;
    for (unsigned i = 0; i < n_contexts; ++i) {
        const Sub* insider = nullptr;
        for (const Sub& s : subs) {
            if (s.ctx == i) {
                insider = &s;
                break;
            }
        }
        const RecoveredContextSecrets secrets =
            recover_from_subscriber(insider->cred, ctxs[i].pk);
        if (secrets.g_pow_t == mod_pow_signed(ctxs[i].g, ctxs[i].t, ctxs[i].pk.n_sq)) {
            ++exact_gt;
        }
        for (const Sub& s : subs) {
            if (s.ctx == i &&
                collude_recover_subscription(s.msg, secrets, ctxs[i].public_view()) == s.x) {
                ++exact_x;
            }
        }
    }
    const double secs = seconds_since(started);
    std::ostringstream out;
    out << exact_x << "/" << n_subs << " subscriptions recovered across " << n_contexts
        << " contexts at 1024 bits, " << exact_gt << "/" << n_contexts
        << " blinding factors exact, " << std::fixed << std::setprecision(1) << secs
        << "s (budget 30.0s)";
    detail = out.str();
    return exact_x == n_subs && exact_gt == n_contexts && secs < 30.0;
}

bool rider_keys_equal(const RiderSecretKey& a, const RiderSecretKey& b) {
    if (a.e_neg_one.size() != b.e_neg_one.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.e_neg_one.size(); ++i) {
        if (a.e_neg_one[i].value != b.e_neg_one[i].value ||
            a.e_neg_one[i].n_sq != b.e_neg_one[i].n_sq ||
            a.e_neg_one[i].key_fp != b.e_neg_one[i].key_fp) {
            return false;
        }
    }
    return a.eps_blinded == b.eps_blinded && a.xi_blinded == b.xi_blinded;
}

bool taxi_keys_equal(const TaxiSecretKey& a, const TaxiSecretKey& b) {
    if (a.e_one.size() != b.e_one.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.e_one.size(); ++i) {
        if (a.e_one[i].value != b.e_one[i].value || a.e_one[i].n_sq != b.e_one[i].n_sq ||
            a.e_one[i].key_fp != b.e_one[i].key_fp) {
            return false;
        }
    }
    return a.eps_blinded == b.eps_blinded && a.xi_blinded == b.xi_blinded;
}

// 6: one insider key reproduces all 20 rider and 50 taxi keys
// componentwise, under the shared and the per-coordinate modulus layouts.
bool criterion_key_recovery(std::string& detail) {
    SeededRng rng(601);
    auto run_layout = [&rng](bool per_coordinate) {
        AuthorityParams params;
        params.ell = 16;
        params.kappa = 64;
        params.omega = 8;
        params.bits = 512;
        params.per_coordinate_moduli = per_coordinate;
        const AuthorityKeys auth = init_auth(params, rng);
        std::vector<RiderSecretKey> riders;
        for (unsigned u = 0; u < 20; ++u) {
            riders.push_back(rider_keygen(auth.pk, auth.sk, rng));
        }
        std::vector<TaxiSecretKey> taxis;
        for (unsigned t = 0; t < 50; ++t) {
            taxis.push_back(taxi_keygen(auth.pk, auth.sk, rng));
        }
        const RecoveredLprideSecrets secrets = recover_blindings(riders[0], auth.pk);
        const RiderSecretKey forged_rider = forge_rider_key(secrets);
        const TaxiSecretKey forged_taxi = forge_taxi_key(secrets);
        unsigned exact = 0;
        for (const auto& k : riders) {
            if (rider_keys_equal(k, forged_rider)) {
                ++exact;
            }
        }
        for (const auto& k : taxis) {
            if (taxi_keys_equal(k, forged_taxi)) {
                ++exact;
            }
        }
        return exact;
    };
    const unsigned shared = run_layout(false);
    const unsigned per_coordinate = run_layout(true);
    detail = std::to_string(shared) + "/70 keys reproduced under the shared modulus, " +
             std::to_string(per_coordinate) +
             "/70 under per-coordinate moduli (20 riders + 50 taxis, 512 bits)";
    return shared == 70 && per_coordinate == 70;
}

// 7: 100 random rider requests at omega=8, ell=16 decode to the exact
// coordinates.
bool criterion_location_recovery(std::string& detail) {
    SeededRng rng(701);
    AuthorityParams params;
    params.ell = 16;
    params.kappa = 64;
    params.omega = 8;
    params.bits = 512;
    const AuthorityKeys auth = init_auth(params, rng);
    const RiderSecretKey key = rider_keygen(auth.pk, auth.sk, rng);
    const RecoveredLprideSecrets secrets = recover_blindings(key, auth.pk);
    const BigInt bound = BigInt(1) << params.ell;
    const unsigned trials = 100;
    unsigned exact = 0;
    for (unsigned i = 0; i < trials; ++i) {
        Coordinates coords;
        for (unsigned d = 0; d < params.omega; ++d) {
            coords.push_back(rng.uniform_below(bound));
        }
        const RideRequest req = req_gen(coords, key, auth.pk, "zone-0");
        if (recover_rider_location(req, secrets, auth.pk) == coords) {
            ++exact;
        }
    }
    detail = std::to_string(exact) + "/" + std::to_string(trials) +
             " rider requests decoded exactly (omega 8, ell 16, 512 bits)";
    return exact == trials;
}

// 8: taxi locations stay blinded. Over 10^4 sampled components the attack
// residual always equals coordinate plus blind, never the bare coordinate
// when the blind is nonzero, and the blinds pass a uniformity test.
bool criterion_negative_control(std::string& detail) {
    SeededRng rng(801);
    AuthorityParams params;
    params.ell = 2;
    params.kappa = 4;
    params.omega = 2;
    params.bits = 6;
    params.tiny_key = true;
    const AuthorityKeys auth = init_auth(params, rng);
    const TaxiSecretKey taxi_key = taxi_keygen(auth.pk, auth.sk, rng);
    const RiderSecretKey insider = rider_keygen(auth.pk, auth.sk, rng);
    const RecoveredLprideSecrets secrets = recover_blindings(insider, auth.pk);

    const unsigned updates = 5000;  // times omega components = 10^4 samples
    const BigInt coord_bound = BigInt(1) << params.ell;
    std::uint64_t samples = 0;
    std::uint64_t residual_exact = 0;
    std::uint64_t unblinded_hits = 0;
    std::vector<std::uint64_t> histogram(std::size_t(1) << (params.kappa - 1), 0);
    for (unsigned u = 0; u < updates; ++u) {
        Coordinates coords;
        for (unsigned d = 0; d < params.omega; ++d) {
            coords.push_back(rng.uniform_below(coord_bound));
        }
        const TaxiUpdateWithBlinds uw =
            taxi_update_retaining_blinds(coords, taxi_key, auth.pk, "zone-0", rng);
        const std::vector<BigInt> residual =
            attempt_taxi_location(uw.update, secrets, auth.pk);
        for (unsigned d = 0; d < params.omega; ++d) {
            ++samples;
            if (residual[d] == coords[d] + uw.r1[d]) {
                ++residual_exact;
            }
            if (uw.r1[d] != 0 && residual[d] == coords[d]) {
                ++unblinded_hits;
            }
            ++histogram[uw.r1[d].convert_to<std::size_t>()];
        }
    }
    const double expected = double(samples) / double(histogram.size());
    double chi_squared = 0.0;
    for (const std::uint64_t count : histogram) {
        const double delta = double(count) - expected;
        chi_squared += delta * delta / expected;
    }
    const double threshold = 45.0;  // 7 degrees of freedom, far tail
    std::ostringstream out;
    out << residual_exact << "/" << samples << " residuals equal coordinate plus blind, "
        << unblinded_hits << " bare-coordinate hits under a nonzero blind, chi-squared "
        << std::fixed << std::setprecision(1) << chi_squared << " (threshold " << threshold
        << ")";
    detail = out.str();
    return residual_exact == samples && unblinded_hits == 0 && chi_squared < threshold;
}

// 9: scenario runs are deterministic; identical seed and config give
// byte-identical transcripts for all three scenarios.
bool criterion_harness_determinism(std::string& detail) {
    std::vector<ScenarioConfig> configs(3);
    configs[0].scenario = ScenarioKind::Selftest;
    configs[0].tiny_key = true;
    configs[0].bits = 6;
    configs[0].seed = 3;

    configs[1].scenario = ScenarioKind::Capss;
    configs[1].tiny_key = true;
    configs[1].bits = 6;
    configs[1].ell = 2;
    configs[1].contexts = 2;
    configs[1].subscribers = 4;
    configs[1].publishers = 3;
    configs[1].seed = 9;

    configs[2].scenario = ScenarioKind::Lpride;
    configs[2].tiny_key = true;
    configs[2].bits = 6;
    configs[2].ell = 2;
    configs[2].kappa = 4;
    configs[2].omega = 2;
    configs[2].riders = 2;
    configs[2].taxis = 3;
    configs[2].zones = 1;
    configs[2].seed = 11;

    unsigned identical = 0;
    for (const ScenarioConfig& cfg : configs) {
        Transcript first;
        Transcript second;
        run_scenario(cfg, first);
        run_scenario(cfg, second);
        if (!first.records().empty() && first.to_jsonl() == second.to_jsonl()) {
            ++identical;
        }
    }
    detail = std::to_string(identical) +
             "/3 scenario transcripts byte-identical across repeated runs";
    return identical == 3;
}

// 10: the attack translation units were compiled without the secret-state
// headers; the witnesses report the preprocessor state they were built with.
bool criterion_isolation(std::string& detail) {
    const bool capss_clean = capss_attack_unit_sees_no_secrets();
    const bool lpride_clean = lpride_attack_unit_sees_no_secrets();
    detail = std::string("capss attack unit ") + (capss_clean ? "isolated" : "CONTAMINATED") +
             ", lpride attack unit " + (lpride_clean ? "isolated" : "CONTAMINATED");
    return capss_clean && lpride_clean;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"ciphertext forgery", criterion_forgery},
        {"encryption determinism", criterion_determinism},
        {"round trip", criterion_round_trip},
        {"matching soundness", criterion_matching},
        {"subscription recovery", criterion_subscription_recovery},
        {"key recovery", criterion_key_recovery},
        {"rider location recovery", criterion_location_recovery},
        {"taxi blinding negative control", criterion_negative_control},
        {"harness determinism", criterion_harness_determinism},
        {"attack module isolation", criterion_isolation},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        std::printf("[%s] criterion %zu (%s): %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, detail.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
