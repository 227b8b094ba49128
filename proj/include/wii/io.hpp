#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "wii/errors.hpp"

namespace wii {

// Little-endian primitives for the binary file formats.  Bytes are packed
// explicitly so the on-disk layout does not depend on host endianness.

inline void write_bytes(std::ostream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!os) throw IoError("write failed");
}

inline void write_u8(std::ostream& os, std::uint8_t v) { write_bytes(os, &v, 1); }

inline void write_u16(std::ostream& os, std::uint16_t v) {
    const std::uint8_t b[2] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8)};
    write_bytes(os, b, 2);
}

inline void write_u32(std::ostream& os, std::uint32_t v) {
    std::uint8_t b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    write_bytes(os, b, 4);
}

inline void write_u64(std::ostream& os, std::uint64_t v) {
    std::uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    write_bytes(os, b, 8);
}

inline void write_i16(std::ostream& os, std::int16_t v) {
    write_u16(os, static_cast<std::uint16_t>(v));
}

inline void write_f32(std::ostream& os, float v) {
    write_u32(os, std::bit_cast<std::uint32_t>(v));
}

inline void read_exact(std::istream& is, void* p, std::size_t n, const char* what) {
    is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(is.gcount()) != n)
        throw TruncatedFileError(std::string("unexpected end of file while reading ") + what);
}

inline std::uint8_t read_u8(std::istream& is, const char* what = "u8") {
    std::uint8_t v;
    read_exact(is, &v, 1, what);
    return v;
}

inline std::uint16_t read_u16(std::istream& is, const char* what = "u16") {
    std::uint8_t b[2];
    read_exact(is, b, 2, what);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

inline std::uint32_t read_u32(std::istream& is, const char* what = "u32") {
    std::uint8_t b[4];
    read_exact(is, b, 4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

inline std::uint64_t read_u64(std::istream& is, const char* what = "u64") {
    std::uint8_t b[8];
    read_exact(is, b, 8, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

inline std::int16_t read_i16(std::istream& is, const char* what = "i16") {
    return static_cast<std::int16_t>(read_u16(is, what));
}

inline float read_f32(std::istream& is, const char* what = "f32") {
    return std::bit_cast<float>(read_u32(is, what));
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path);
    return os;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    return is;
}

// FNV-1a over a whole file; used to fingerprint artifacts in run metadata.
inline std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream is = open_input(path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (is) {
        is.read(buf, sizeof buf);
        for (std::streamsize i = 0; i < is.gcount(); ++i) {
            h ^= static_cast<std::uint8_t>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

} // namespace wii
