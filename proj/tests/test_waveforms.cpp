#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/signal_metrics.hpp"
#include "wii/waveforms.hpp"

using namespace wii;
using namespace wii::wave;
using testsup::occupied_bandwidth_hz;
using testsup::welch_psd;

namespace {

std::vector<std::uint8_t> zeros(std::size_t n) { return std::vector<std::uint8_t>(n, 0); }

std::vector<std::uint8_t> alternating(std::size_t n) {
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(i & 1);
    return v;
}

// MPDU bits (LSB-first octets) for an ACK frame with the given sequence
// number: frame control 0x0002, seq, 2-octet placeholder checksum.
std::vector<std::uint8_t> ack_mpdu_bits(std::uint8_t seq) {
    const std::uint8_t octets[5] = {0x02, 0x00, seq, 0x00, 0x00};
    std::vector<std::uint8_t> bits;
    for (std::uint8_t o : octets)
        for (int b = 0; b < 8; ++b) bits.push_back((o >> b) & 1);
    return bits;
}

double body_power(const IqStream& s) {
    const std::size_t r = ramp_samples(s.sample_rate_hz);
    double p = 0.0;
    for (std::size_t i = r; i < s.samples.size() - r; ++i) p += std::norm(s.samples[i]);
    return p / static_cast<double>(s.samples.size() - 2 * r);
}

} // namespace

TEST_CASE("variant catalog has the fixed 19-entry layout") {
    const auto& cat = variant_catalog();
    REQUIRE(cat.size() == 19);

    const std::vector<std::string> expected = {
        "DSSS-1M",  "DSSS-2M",  "CCK-5.5M", "CCK-11M",  "PBCC-5.5M", "PBCC-11M", "PBCC-22M",
        "OFDM-6M",  "OFDM-12M", "OFDM-24M", "OFDM-48M", "OFDM-54M",  "ACL-DH1",  "ACL-DH3",
        "ACL-DH5",  "SCO-HV1",  "SCO-HV3",  "eSCO-EV3", "ACK"};
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].mode == expected[i]);

    CHECK(variants_for(Technology::Ieee802_11).size() == 12);
    CHECK(variants_for(Technology::Ieee802_15_1).size() == 6);
    CHECK(variants_for(Technology::Ieee802_15_4).size() == 1);

    for (const auto& v : cat) {
        CHECK(v.symbol_rate_hz >= 1e6); // symbol duration <= 1 us
        CHECK(v.max_payload_bits > 0);
        CHECK(&find_variant(v.mode) == &v);
    }
    CHECK_THROWS_AS(find_variant("FSK-9000"), std::invalid_argument);
}

TEST_CASE("catalog payload limits") {
    CHECK(find_variant("ACL-DH1").max_payload_bits == 216);
    CHECK(find_variant("ACL-DH3").max_payload_bits == 1464);
    CHECK(find_variant("ACL-DH5").max_payload_bits == 2712);
    CHECK(find_variant("SCO-HV1").max_payload_bits == 80);
    CHECK(find_variant("SCO-HV3").max_payload_bits == 240);
    CHECK(find_variant("eSCO-EV3").max_payload_bits == 240);
    CHECK(find_variant("ACK").max_payload_bits == 40);
    for (const auto* v : variants_for(Technology::Ieee802_11))
        CHECK(v->max_payload_bits == 2304u * 8u);
}

TEST_CASE("random_payload fills the variant's maximum length") {
    const auto& v = find_variant("ACL-DH5");
    Rng r1(3), r2(3), r3(4);
    const auto a = random_payload(v, r1);
    REQUIRE(a.size() == v.max_payload_bits);
    CHECK(std::count(a.begin(), a.end(), 0) > 1000);
    CHECK(std::count(a.begin(), a.end(), 1) > 1000);
    for (auto b : a) CHECK(b <= 1);
    const auto b = random_payload(v, r2);
    CHECK(a == b);
    const auto c = random_payload(v, r3);
    CHECK(a != c);
}

TEST_CASE("all-zero payload gives a pure tone at -160 kHz") {
    const auto& v = find_variant("ACL-DH1");
    Rng rng(3);
    const auto s = synth_bluetooth(zeros(v.max_payload_bits), v, rng);
    CHECK(s.sample_rate_hz == 10e6);
    const std::size_t r = ramp_samples(s.sample_rate_hz);
    REQUIRE(s.samples.size() == (216 + 4) * 10);
    // Edge-replicated padding means the frequency is settled everywhere.
    const double f = testsup::mean_instantaneous_freq_hz(s.samples, s.sample_rate_hz, r,
                                                         s.samples.size() - r);
    CHECK(f == doctest::Approx(-160e3).epsilon(1e-6));
    // GFSK is constant-envelope outside the amplitude ramps.
    for (std::size_t i = r; i < s.samples.size() - r; ++i)
        CHECK(std::abs(s.samples[i]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("296-bit payload with seed 7 reproduces bit-identically") {
    const auto& v = find_variant("ACL-DH3");
    Rng pr(7);
    std::vector<std::uint8_t> payload(296);
    for (auto& b : payload) b = static_cast<std::uint8_t>(pr.bit());
    Rng r1(7), r2(7);
    const auto a = synth_bluetooth(payload, v, r1);
    const auto b = synth_bluetooth(payload, v, r2);
    CHECK(a.samples.size() == 2960 + 2 * ramp_samples(10e6));
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].real() == b.samples[i].real());
        CHECK(a.samples[i].imag() == b.samples[i].imag());
    }
    Rng r3(8);
    const auto c = synth_bluetooth(payload, v, r3);
    CHECK(a.samples[100] != c.samples[100]); // different initial phase
}

TEST_CASE("alternating payload has a symmetric spectrum") {
    // Custom long variant so the periodogram has 1e4 symbols to work with.
    const WaveformVariant big{Technology::Ieee802_15_1, "ACL-DH5", 1e6, 20000};
    Rng rng(11);
    const auto s = synth_bluetooth(alternating(10000), big, rng);
    const std::size_t r = ramp_samples(s.sample_rate_hz);
    const std::vector<std::complex<double>> body(s.samples.begin() + static_cast<std::ptrdiff_t>(r),
                                                 s.samples.end() - static_cast<std::ptrdiff_t>(r));
    const auto psd = welch_psd(body);
    CHECK(testsup::spectral_asymmetry_db(psd, 30.0) < 0.5);
}

TEST_CASE("GFSK occupied bandwidth is at most 1.5 MHz") {
    const auto& v = find_variant("ACL-DH5");
    Rng pr(21);
    const auto payload = random_payload(v, pr);
    Rng rng(22);
    const auto s = synth_bluetooth(payload, v, rng);
    const double bw = occupied_bandwidth_hz(s.samples, s.sample_rate_hz);
    CHECK(bw > 0.3e6);
    CHECK(bw <= 1.5e6);
}

TEST_CASE("bluetooth payload and variant validation") {
    const auto& v = find_variant("ACL-DH1");
    Rng rng(1);
    CHECK_THROWS_AS(synth_bluetooth(zeros(217), v, rng), std::invalid_argument);
    CHECK_THROWS_AS(synth_bluetooth(zeros(0), v, rng), std::invalid_argument);
    CHECK_THROWS_AS(synth_bluetooth({0, 1, 2}, v, rng), std::invalid_argument);
    CHECK_THROWS_AS(synth_bluetooth(zeros(10), find_variant("CCK-11M"), rng),
                    std::invalid_argument);
}

TEST_CASE("zigbee ACK frame: deterministic, constant envelope, right length") {
    const auto bits = ack_mpdu_bits(0x42);
    const auto a = synth_zigbee(bits);
    const auto b = synth_zigbee(bits);
    CHECK(a.sample_rate_hz == 10e6);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].real() == b.samples[i].real());
        CHECK(a.samples[i].imag() == b.samples[i].imag());
    }
    // 11 PPDU octets -> 22 symbols -> 704 chips, plus 8 pad chips, at 5
    // samples/chip, plus the half-chip offset tail.
    CHECK(a.samples.size() == (704 + 8) * 5 + 5);

    const std::size_t r = ramp_samples(a.sample_rate_hz);
    double mean = 0.0;
    const std::size_t lo = r + 10, hi = a.samples.size() - r - 10;
    for (std::size_t i = lo; i < hi; ++i) mean += std::abs(a.samples[i]);
    mean /= static_cast<double>(hi - lo);
    for (std::size_t i = lo; i < hi; ++i)
        CHECK(std::abs(std::abs(a.samples[i]) - mean) < 0.01 * mean);
}

TEST_CASE("zigbee occupied bandwidth sits in the standard main lobe") {
    // Longest frame: 127-octet MPDU -> 8512 chips, ~1e4-chip periodogram.
    Rng pr(31);
    std::vector<std::uint8_t> bits(127 * 8);
    for (auto& b : bits) b = static_cast<std::uint8_t>(pr.bit());
    const auto s = synth_zigbee(bits);
    const double bw = occupied_bandwidth_hz(s.samples, s.sample_rate_hz);
    CHECK(bw >= 2.0e6);
    CHECK(bw <= 3.5e6);
}

TEST_CASE("zigbee payload validation") {
    CHECK_THROWS_AS(synth_zigbee(zeros(39)), std::invalid_argument);  // not whole octets
    CHECK_THROWS_AS(synth_zigbee(zeros(128 * 8)), std::invalid_argument); // > 127 octets
    CHECK_THROWS_AS(synth_zigbee({}), std::invalid_argument);
}

TEST_CASE("DSSS-1M spreads bit 0 into the Barker-11 sequence") {
    const auto& v = find_variant("DSSS-1M");
    Rng rng(5);
    const auto s = synth_wifi({0}, v, rng);
    CHECK(s.sample_rate_hz == 40e6);
    const double spc = 40.0 / 11.0;
    const double barker[11] = {1, -1, 1, 1, -1, 1, 1, 1, -1, -1, -1};
    // Chip k of the body sits after the 22 pad chips; derotate by the
    // first chip to cancel the random carrier phase.
    const auto v0 = testsup::sample_at(s.samples, (22.0 + 0.5) * spc);
    REQUIRE(std::abs(v0) > 0.5);
    for (int k = 0; k < 11; ++k) {
        const auto vk = testsup::sample_at(s.samples, (22.0 + k + 0.5) * spc);
        const double r = (vk * std::conj(v0)).real() / std::norm(v0);
        CHECK(std::abs(r - barker[k]) < 0.25);
    }
}

TEST_CASE("OFDM symbols carry equal power") {
    for (const char* mode : {"OFDM-12M", "OFDM-54M"}) {
        CAPTURE(mode);
        const auto& v = find_variant(mode);
        const std::size_t info = v.mode == "OFDM-12M" ? 48 : 216;
        Rng pr(17);
        std::vector<std::uint8_t> payload(info * 50);
        for (auto& b : payload) b = static_cast<std::uint8_t>(pr.bit());
        Rng rng(18);
        const auto s = synth_wifi(payload, v, rng);
        // 52 symbols of 160 samples at 40 MHz (one pad symbol each end).
        REQUIRE(s.samples.size() == 52 * 160);
        std::vector<double> pw(50);
        double total = 0.0;
        for (std::size_t sym = 0; sym < 50; ++sym) {
            double p = 0.0;
            for (std::size_t i = 0; i < 160; ++i)
                p += std::norm(s.samples[160 + sym * 160 + i]);
            pw[sym] = p / 160.0;
            total += pw[sym];
        }
        total /= 50.0;
        for (double p : pw) CHECK(std::abs(p - total) < 0.20 * total);
    }
}

TEST_CASE("CCK-11M occupied bandwidth lies in [11, 22] MHz") {
    const auto& v = find_variant("CCK-11M");
    Rng pr(41);
    const auto payload = random_payload(v, pr);
    Rng rng(42);
    const auto s = synth_wifi(payload, v, rng);
    const double bw = occupied_bandwidth_hz(s.samples, s.sample_rate_hz);
    CHECK(bw >= 11e6);
    CHECK(bw <= 22e6);
}

TEST_CASE("occupied bandwidth ordering across technologies") {
    Rng pr(51), rng(52);
    const auto bt = synth_bluetooth(random_payload(find_variant("ACL-DH5"), pr),
                                    find_variant("ACL-DH5"), rng);
    std::vector<std::uint8_t> zb_bits(127 * 8);
    for (auto& b : zb_bits) b = static_cast<std::uint8_t>(pr.bit());
    const auto zb = synth_zigbee(zb_bits);
    const auto wf = synth_wifi(random_payload(find_variant("CCK-11M"), pr),
                               find_variant("CCK-11M"), rng);
    const double bw_bt = occupied_bandwidth_hz(bt.samples, bt.sample_rate_hz);
    const double bw_zb = occupied_bandwidth_hz(zb.samples, zb.sample_rate_hz);
    const double bw_wf = occupied_bandwidth_hz(wf.samples, wf.sample_rate_hz);
    CHECK(bw_bt < bw_zb);
    CHECK(bw_zb < bw_wf);
}

TEST_CASE("wifi mode and payload validation") {
    Rng rng(1);
    const WaveformVariant bogus{Technology::Ieee802_11, "FOO-9M", 11e6, 1000};
    CHECK_THROWS_AS(synth_wifi(zeros(100), bogus, rng), std::invalid_argument);
    CHECK_THROWS_AS(synth_wifi(zeros(2304 * 8 + 1), find_variant("DSSS-1M"), rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(synth_wifi(zeros(10), find_variant("ACL-DH1"), rng), std::invalid_argument);
}

TEST_CASE("wifi bodies are normalised to unit mean power") {
    Rng pr(61), rng(62);
    for (const char* mode : {"DSSS-2M", "CCK-5.5M", "PBCC-22M", "OFDM-6M", "OFDM-54M"}) {
        CAPTURE(mode);
        const auto& v = find_variant(mode);
        std::vector<std::uint8_t> payload(2000);
        for (auto& b : payload) b = static_cast<std::uint8_t>(pr.bit());
        const auto s = synth_wifi(payload, v, rng);
        CHECK(body_power(s) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("synth_packet dispatches every catalog variant") {
    for (const auto& v : variant_catalog()) {
        CAPTURE(v.mode);
        Rng pr(71);
        // Keep wideband payloads modest so the full sweep stays fast.
        const std::size_t n_bits = std::min<std::size_t>(v.max_payload_bits, 2048);
        std::vector<std::uint8_t> payload;
        if (v.technology == Technology::Ieee802_15_4) {
            payload = ack_mpdu_bits(0x01);
        } else {
            payload.resize(n_bits);
            for (auto& b : payload) b = static_cast<std::uint8_t>(pr.bit());
        }
        Rng rng(72);
        const auto s = synth_packet(v, payload, rng);
        const double want_rate =
            v.technology == Technology::Ieee802_11 ? kWidebandRateHz : kNarrowbandRateHz;
        CHECK(s.sample_rate_hz == want_rate);
        CHECK(s.samples.size() > 2 * ramp_samples(want_rate));
        for (const auto& x : s.samples) {
            REQUIRE(std::isfinite(x.real()));
            REQUIRE(std::isfinite(x.imag()));
        }
        // Ramps taper to (near) zero at the stream edges.
        CHECK(std::abs(s.samples.front()) < 0.1);
        CHECK(std::abs(s.samples.back()) < 0.1);
    }
}
