// Acceptance suite: exercises the full pipeline contract end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hvlcl/hvlcl.hpp"
#include "../support/generators.hpp"

using namespace hvlcl;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T, class U>
void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == static_cast<T>(want))) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", want " << want;
        throw Failure(msg.str());
    }
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

GrayImage random_case_image(std::mt19937_64& rng, int trial) {
    int m = 8 + static_cast<int>(rng() % 121);
    int n = 8 + static_cast<int>(rng() % 121);
    if (trial % 2 == 0) return testgen::constant_image(m, n, static_cast<std::uint8_t>(rng()));
    return testgen::gradient_image(m, n, rng, trial % 4 == 1 ? 0 : 1);
}

// Criterion 1: bit-exact recovery and exact extraction over 200 random
// images (flat and smooth-gradient) at 0%, 50% and 100% payload fill,
// in under 60 seconds.
void criterion_reversibility() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        GrayImage img = random_case_image(rng, trial);
        KeySpec ke = testgen::random_key(rng);
        KeySpec kw = testgen::random_key(rng);
        OwnerOutput owner = owner_encode(img, ke);
        std::uint64_t usable = static_cast<std::uint64_t>(owner.report.net_payload_bits) - 32;
        for (std::uint64_t nbits : {std::uint64_t{0}, usable / 2, usable}) {
            BitVec payload = testgen::random_bits(rng, nbits);
            EmbedResult marked = hider_embed(owner.image, payload, kw);
            expect(receiver_extract(marked.image, kw) == payload,
                   "payload mismatch at trial " + std::to_string(trial));
            GrayImage recovered = receiver_recover(marked.image, ke);
            expect(recovered == img, "pixel mismatch at trial " + std::to_string(trial));
        }
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("    (600 pipelines in %.1f s)\n", elapsed);
    expect(elapsed < 60.0, "runtime target exceeded: " + std::to_string(elapsed) + " s");
}

// Criterion 2: extraction needs only the hiding key and recovery needs only
// the encryption key.
void criterion_separability() {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        GrayImage img = random_case_image(rng, 2 * trial + 1);
        KeySpec ke = testgen::random_key(rng);
        KeySpec kw = testgen::random_key(rng);
        OwnerOutput owner = owner_encode(img, ke);
        BitVec payload = testgen::random_bits(
            rng, std::min<std::uint64_t>(256, owner.report.net_payload_bits - 32));
        GrayImage marked = hider_embed(owner.image, payload, kw).image;

        // Data path: kw alone.
        expect(receiver_extract(marked, kw) == payload, "extraction with only the hiding key");
        // Image path: ke alone.
        expect(receiver_recover(marked, ke) == img, "recovery with only the encryption key");
    }
}

// Criterion 3: the streaming decode reproduces the owner's label map tag
// for tag on 200 random images.
void criterion_streaming_equivalence() {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        GrayImage img = random_case_image(rng, trial);
        OwnerOutput owner = owner_encode(img, testgen::random_key(rng));
        DecodedLayout layout = hider_decode_labels(owner.image);
        LabelMap expected = build_label_map(img, owner.report.ref_rows, owner.report.ref_cols);
        expect(layout.map == expected, "label map mismatch at trial " + std::to_string(trial));
    }
}

// Criterion 4: the fixture distribution reproduces the expected code
// assignment; the fixed code set is prefix-free with Kraft sum exactly 1.
void criterion_assignment() {
    LabelHistogram hist;
    hist.counts = testgen::kFixtureDistribution;
    hist.ref_count = 1023;
    CodeTable table = CodeTable::assign(hist);
    for (int t = 0; t < 9; ++t) {
        Codeword cw = table.codeword(t);
        std::string s;
        for (int b = cw.length - 1; b >= 0; --b) s.push_back((cw.bits >> b) & 1 ? '1' : '0');
        expect_eq(s, std::string(testgen::kFixtureAssignment[t]), "codeword of tag " + std::to_string(t));
    }

    int kraft = 0;  // in units of 2^-5
    const auto& cws = CodeTable::fixed_codewords();
    for (const auto& cw : cws) kraft += 1 << (5 - cw.length);
    expect_eq(kraft, 32, "Kraft sum (in 1/32 units)");

    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            if (a == b || cws[a].length > cws[b].length) continue;
            expect((cws[b].bits >> (cws[b].length - cws[a].length)) != cws[a].bits,
                   "prefix violation between codewords " + std::to_string(a) + " and " +
                       std::to_string(b));
        }
}

// Criterion 5: exact capacity arithmetic for the fixture distribution.
void criterion_capacity_arithmetic() {
    LabelHistogram hist;
    hist.counts = testgen::kFixtureDistribution;
    hist.ref_count = 1023;
    CodeTable table = CodeTable::assign(hist);
    std::uint64_t capacity = 0, code_bits = 0;
    for (int t = 0; t < 9; ++t) {
        capacity += hist.counts[t] * capacity_of(t);
        code_bits += hist.counts[t] * table.codeword(t).length;
    }
    expect_eq(capacity, 1470568ull, "total capacity");
    expect_eq(code_bits, 793304ull, "code length");
    expect_eq(capacity - code_bits - 84, 677180ull, "net payload with the 84-bit header");
}

// Criterion 6: a 512x512 image carrying exactly the fixture label
// distribution embeds at the expected rate, and the internal identity
// ER = (capacity - code_bits - 84) / 262144 holds exactly.
void criterion_reference_image_rate() {
    GrayImage img = testgen::image_from_histogram(testgen::kFixtureDistribution, 512, 512, 1, 1, 4242);
    std::mt19937_64 rng(2027);
    KeySpec ke = testgen::random_key(rng);
    KeySpec kw = testgen::random_key(rng);

    OwnerOutput owner = owner_encode(img, ke);
    const CapacityReport& rep = owner.report;
    for (int t = 0; t < 9; ++t)
        expect_eq(rep.hist.counts[t], testgen::kFixtureDistribution[t],
                  "histogram count of tag " + std::to_string(t));
    expect_eq(rep.ref_rows, 1, "ref rows");
    expect_eq(rep.ref_cols, 1, "ref cols");
    expect_eq(rep.net_payload_bits,
              static_cast<std::int64_t>(rep.total_capacity_bits) -
                  static_cast<std::int64_t>(rep.code_bits) - 84,
              "net payload identity");

    double er_theoretical = embedding_rate(static_cast<std::uint64_t>(rep.net_payload_bits), 512, 512);
    std::printf("    (theoretical ER %.5f bpp, deviation %+0.5f from 2.583)\n", er_theoretical,
                er_theoretical - 2.583);
    expect(std::abs(er_theoretical - 2.583) <= 0.02, "theoretical ER outside 2.583 +- 0.02");

    std::uint64_t usable = static_cast<std::uint64_t>(rep.net_payload_bits) - 32;
    BitVec payload = testgen::random_bits(rng, usable);
    EmbedResult marked = hider_embed(owner.image, payload, kw);
    expect(std::abs(marked.report.embedding_rate - 2.583) <= 0.02,
           "embedded ER outside 2.583 +- 0.02");
    expect(receiver_extract(marked.image, kw) == payload, "payload round trip");
    expect(receiver_recover(marked.image, ke) == img, "image round trip");
}

// Criterion 7: on a generated corpus, smooth images embed strictly more than
// rough ones on average, and every image either runs the full pipeline
// reversibly or fails up front with the bootstrap error.
void criterion_corpus() {
    std::mt19937_64 rng(2028);
    double smooth_sum = 0, rough_sum = 0;
    int processed = 0, rejected = 0;
    for (int group = 0; group < 2; ++group) {
        for (int trial = 0; trial < 50; ++trial) {
            GrayImage img = group == 0 ? testgen::gradient_image(64, 64, rng, 2)
                                       : testgen::noise_image(64, 64, rng);
            ImageAnalysis analysis = analyze_image(img);
            (group == 0 ? smooth_sum : rough_sum) += analysis.er_bpp;

            KeySpec ke = testgen::random_key(rng);
            KeySpec kw = testgen::random_key(rng);
            try {
                OwnerOutput owner = owner_encode(img, ke);
                std::int64_t usable = owner.report.net_payload_bits - 32;
                if (usable >= 0) {
                    BitVec payload =
                        testgen::random_bits(rng, static_cast<std::size_t>(std::min<std::int64_t>(64, usable)));
                    EmbedResult marked = hider_embed(owner.image, payload, kw);
                    expect(receiver_extract(marked.image, kw) == payload, "corpus payload mismatch");
                    expect(receiver_recover(marked.image, ke) == img, "corpus pixel mismatch");
                } else {
                    // Feasible but with no room for even the length prefix:
                    // recovery must still work on the bare owner output.
                    expect(receiver_recover(owner.image, ke) == img, "corpus pixel mismatch");
                }
                ++processed;
            } catch (const std::runtime_error& e) {
                expect_eq(std::string(e.what()), std::string("insufficient bootstrap capacity"),
                          "unexpected failure mode");
                ++rejected;
            }
        }
    }
    double smooth_mean = smooth_sum / 50, rough_mean = rough_sum / 50;
    std::printf("    (smooth mean %.3f bpp, rough mean %.3f bpp; %d reversible, %d rejected)\n",
                smooth_mean, rough_mean, processed, rejected);
    expect(smooth_mean > rough_mean, "smooth mean ER does not exceed rough mean ER");
    expect(processed >= 50, "smooth corpus should process reversibly");
}

// Criterion 8: metric sanity.
void criterion_metrics() {
    std::mt19937_64 rng(2029);
    for (int trial = 0; trial < 20; ++trial) {
        GrayImage img = testgen::noise_image(11 + rng() % 40, 11 + rng() % 40, rng);
        expect(std::isinf(psnr(img, img)), "psnr(a,a) must be +inf");
        expect(ssim(img, img) == 1.0, "ssim(a,a) must be exactly 1");
    }
    GrayImage a(2, 2, 100), b(2, 2, 100);
    b(1, 1) = 116;
    expect(std::abs(psnr(a, b) - 30.07) <= 0.01, "one-pixel 2x2 case outside 30.07 +- 0.01 dB");
}

// Criterion 9: the golden keystream fixture guards cross-platform
// determinism of the container format.
void criterion_keystream_pinning() {
    auto bytes = keystream_bytes(0x0123456789ABCDEFull, 8);
    const std::vector<std::uint8_t> golden = {0x7C, 0xD5, 0x88, 0x5E, 0xBB, 0xED, 0x2B, 0x95};
    expect(bytes == golden, "keystream bytes differ from the golden fixture");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {"end-to-end reversibility (200 images x 3 payload levels)", criterion_reversibility},
        {"separability of extraction and recovery", criterion_separability},
        {"streaming decode matches the label map oracle", criterion_streaming_equivalence},
        {"code assignment reproduction and prefix-code soundness", criterion_assignment},
        {"capacity arithmetic for the fixture distribution", criterion_capacity_arithmetic},
        {"reference-image embedding rate", criterion_reference_image_rate},
        {"smooth/rough corpus behavior", criterion_corpus},
        {"metric sanity", criterion_metrics},
        {"keystream pinning", criterion_keystream_pinning},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i].run();
            std::printf("PASS criterion %zu: %s\n", i + 1, criteria[i].name);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL criterion %zu: %s -- %s\n", i + 1, criteria[i].name, e.what());
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
