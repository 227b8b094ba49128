#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wii {

// The three 2.4 GHz ISM technologies the toolkit models.
enum class Technology : std::uint8_t {
    Ieee802_15_1 = 0, // Bluetooth BR
    Ieee802_15_4 = 1, // ZigBee
    Ieee802_11 = 2,   // WLAN b/g
};

inline const char* technology_name(Technology t) {
    switch (t) {
        case Technology::Ieee802_15_1: return "802.15.1";
        case Technology::Ieee802_15_4: return "802.15.4";
        case Technology::Ieee802_11: return "802.11";
    }
    throw std::invalid_argument("technology_name: bad technology value");
}

// Classification target: technology plus relative channel within the
// sensed band.
struct ClassLabel {
    Technology technology = Technology::Ieee802_15_1;
    int relative_channel = 0;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

inline std::string class_name(const ClassLabel& c) {
    return std::string(technology_name(c.technology)) + "-" + std::to_string(c.relative_channel);
}

} // namespace wii
