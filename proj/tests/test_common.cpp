#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wii/config.hpp"
#include "wii/errors.hpp"
#include "wii/io.hpp"
#include "wii/rng.hpp"

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("splitmix64 matches the reference sequence") {
    // First three outputs of the reference generator started at state 0.
    CHECK(wii::splitmix64(0x0000000000000000ULL) == 0xe220a8397b1dcdafULL);
    CHECK(wii::splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
    CHECK(wii::splitmix64(0x3c6ef372fe94f82aULL) == 0x06c45d188009454fULL);
}

TEST_CASE("derive_seed decorrelates stream and index") {
    const std::uint64_t a = wii::derive_seed(42, 1, 0);
    CHECK(a == wii::derive_seed(42, 1, 0)); // pure function
    CHECK(a != wii::derive_seed(42, 1, 1));
    CHECK(a != wii::derive_seed(42, 2, 0));
    CHECK(a != wii::derive_seed(43, 1, 0));

    // Consecutive indices should not give near-identical seeds.
    const std::uint64_t b = wii::derive_seed(42, 1, 1);
    int differing_bits = 0;
    for (std::uint64_t x = a ^ b; x; x &= x - 1) ++differing_bits;
    CHECK(differing_bits >= 16);
}

TEST_CASE("Rng::u64 is pinned to the standard mt19937_64 sequence") {
    // The standard fixes the 10000th output for seed 5489.
    wii::Rng rng(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = rng.u64();
    CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("Rng::uniform stays in [0,1) with 53-bit lattice") {
    wii::Rng rng(7);
    double sum = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        const double scaled = u * 0x1.0p53;
        REQUIRE(scaled == std::floor(scaled));
        sum += u;
    }
    CHECK(sum / 20000.0 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("Rng::below bounds and edge cases") {
    wii::Rng rng(11);
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(1) == 0);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 50000; ++i) ++counts[static_cast<std::size_t>(rng.below(5))];
    for (int c : counts) CHECK(std::abs(c - 10000) < 500); // ~5 sigma
}

TEST_CASE("Rng::gaussian_pair has standard moments") {
    wii::Rng rng(13);
    double sum = 0.0, sq = 0.0;
    const int n = 40000;
    for (int i = 0; i < n / 2; ++i) {
        const auto [a, b] = rng.gaussian_pair();
        REQUIRE(std::isfinite(a));
        REQUIRE(std::isfinite(b));
        sum += a + b;
        sq += a * a + b * b;
    }
    CHECK(sum / n == doctest::Approx(0.0).epsilon(1.0).scale(0.03));
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("Rng::shuffle permutes and is seed-deterministic") {
    std::vector<int> v(50);
    for (int i = 0; i < 50; ++i) v[static_cast<std::size_t>(i)] = i;
    auto a = v;
    auto b = v;
    wii::Rng r1(99), r2(99), r3(100);
    r1.shuffle(a);
    r2.shuffle(b);
    CHECK(a == b);
    auto c = v;
    r3.shuffle(c);
    CHECK(a != c);
    std::sort(a.begin(), a.end());
    CHECK(a == v);
}

TEST_CASE("binary io round-trips and is little-endian") {
    std::ostringstream os;
    wii::write_u8(os, 0xab);
    wii::write_u16(os, 0x0102);
    wii::write_u32(os, 0x01020304u);
    wii::write_u64(os, 0x0102030405060708ULL);
    wii::write_i16(os, -2);
    wii::write_f32(os, 1.5f);
    const std::string buf = os.str();
    REQUIRE(buf.size() == 1 + 2 + 4 + 8 + 2 + 4);
    // Least-significant byte first.
    CHECK(static_cast<std::uint8_t>(buf[1]) == 0x02);
    CHECK(static_cast<std::uint8_t>(buf[2]) == 0x01);
    CHECK(static_cast<std::uint8_t>(buf[3]) == 0x04);
    CHECK(static_cast<std::uint8_t>(buf[6]) == 0x01);

    std::istringstream is(buf);
    CHECK(wii::read_u8(is) == 0xab);
    CHECK(wii::read_u16(is) == 0x0102);
    CHECK(wii::read_u32(is) == 0x01020304u);
    CHECK(wii::read_u64(is) == 0x0102030405060708ULL);
    CHECK(wii::read_i16(is) == -2);
    CHECK(wii::read_f32(is) == 1.5f);
}

TEST_CASE("float32 io is bit-exact") {
    std::ostringstream os;
    const float values[] = {0.0f, -0.0f, 1e-38f, 3.1415927f, -123456.78f};
    for (float v : values) wii::write_f32(os, v);
    std::istringstream is(os.str());
    for (float v : values) {
        const float r = wii::read_f32(is);
        CHECK(std::bit_cast<std::uint32_t>(r) == std::bit_cast<std::uint32_t>(v));
    }
}

TEST_CASE("reads past the end throw TruncatedFileError") {
    std::istringstream is(std::string("\x01\x02", 2));
    CHECK(wii::read_u16(is) == 0x0201);
    CHECK_THROWS_AS(wii::read_u32(is), wii::TruncatedFileError);
}

TEST_CASE("open_input on a missing file throws IoError") {
    CHECK_THROWS_AS(wii::open_input("/nonexistent/dir/file.bin"), wii::IoError);
}

TEST_CASE("fnv1a_file matches reference vectors") {
    const std::string p = temp_path("wii_fnv_test.bin");
    {
        auto os = wii::open_output(p);
    }
    CHECK(wii::fnv1a_file(p) == 0xcbf29ce484222325ULL); // empty input
    {
        auto os = wii::open_output(p);
        os << "a";
    }
    CHECK(wii::fnv1a_file(p) == 0xaf63dc4c8601ec8cULL);
    {
        auto os = wii::open_output(p);
        os << "foobar";
    }
    CHECK(wii::fnv1a_file(p) == 0x85944171f73967e8ULL);
    std::remove(p.c_str());
}

TEST_CASE("Config parses the key=value dialect") {
    const auto cfg = wii::Config::parse(
        "# header comment\n"
        "alpha = 1\n"
        "beta=2.5   \n"
        "\n"
        "  gamma = hello world # trailing comment\n");
    CHECK(cfg.get_i64("alpha") == 1);
    CHECK(cfg.get_f64("beta") == doctest::Approx(2.5));
    CHECK(cfg.get("gamma") == "hello world");
    CHECK(cfg.has("alpha"));
    CHECK(!cfg.has("delta"));
    CHECK(cfg.get_or("delta", "d") == "d");
    CHECK(cfg.get_i64_or("delta", -3) == -3);
}

TEST_CASE("Config serialisation is canonical and round-trips") {
    wii::Config cfg;
    cfg.set("zeta", "z");
    cfg.set_i64("alpha", -7);
    cfg.set_u64("big", 0xffffffffffffffffULL);
    cfg.set_f64("pi", 3.141592653589793);
    const std::string text = cfg.serialize();
    CHECK(text.find("alpha") < text.find("big"));
    CHECK(text.find("big") < text.find("pi"));
    CHECK(text.find("pi") < text.find("zeta"));

    const auto back = wii::Config::parse(text);
    CHECK(back.get_i64("alpha") == -7);
    CHECK(back.get_u64("big") == 0xffffffffffffffffULL);
    CHECK(back.get_f64("pi") == 3.141592653589793); // %.17g is lossless
    CHECK(back.serialize() == text);
}

TEST_CASE("Config getter errors") {
    const auto cfg = wii::Config::parse("num = 12x\nreal = .\n");
    CHECK_THROWS_AS(cfg.get("missing"), std::invalid_argument);
    CHECK_THROWS_AS(cfg.get_i64("num"), std::invalid_argument);
    CHECK_THROWS_AS(cfg.get_f64("real"), std::invalid_argument);
    CHECK_THROWS_AS(cfg.get_i64("missing"), std::invalid_argument);
}

TEST_CASE("Config file round trip") {
    const std::string p = temp_path("wii_config_test.cfg");
    wii::Config cfg;
    cfg.set_i64("n", 42);
    cfg.save(p);
    const auto back = wii::Config::load(p);
    CHECK(back.get_i64("n") == 42);
    std::remove(p.c_str());
    CHECK_THROWS_AS(wii::Config::load(p), wii::IoError);
}
