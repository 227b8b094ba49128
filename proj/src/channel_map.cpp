#include "wii/channel_map.hpp"

#include <stdexcept>
#include <string>

namespace wii {

namespace {

void check_window(const ChannelMap& map) {
    if (map.n_cnn < 1 || map.n_cnn > 8)
        throw std::domain_error("channel map: sensing window index " +
                                std::to_string(map.n_cnn) + " outside 1..8");
}

int absolute_channel_max(Technology t) {
    switch (t) {
        case Technology::Ieee802_15_1: return 79;
        case Technology::Ieee802_15_4: return 15;
        case Technology::Ieee802_11: return 13;
    }
    throw std::domain_error("channel map: unknown technology");
}

} // namespace

int relative_offset(Technology t) {
    switch (t) {
        case Technology::Ieee802_15_1: return 10;
        case Technology::Ieee802_15_4: return 2;
        case Technology::Ieee802_11: return 2;
    }
    throw std::domain_error("channel map: unknown technology");
}

int relative_channel_count(Technology t) {
    switch (t) {
        case Technology::Ieee802_15_1: return 10;
        case Technology::Ieee802_15_4: return 2;
        case Technology::Ieee802_11: return 3;
    }
    throw std::domain_error("channel map: unknown technology");
}

int absolute_channel(Technology t, int rch, const ChannelMap& map) {
    check_window(map);
    if (rch < 0 || rch >= relative_channel_count(t))
        throw std::domain_error("channel map: relative channel " + std::to_string(rch) +
                                " invalid for " + std::string(technology_name(t)));
    const int ach = rch + relative_offset(t) * (map.n_cnn - 1) + kAbsoluteOffset;
    if (ach > absolute_channel_max(t))
        throw std::domain_error("channel map: window " + std::to_string(map.n_cnn) +
                                " pushes " + std::string(technology_name(t)) +
                                " relative channel " + std::to_string(rch) +
                                " past absolute channel " +
                                std::to_string(absolute_channel_max(t)));
    return ach;
}

double center_frequency_mhz(Technology t, int ach) {
    if (ach < 1 || ach > absolute_channel_max(t))
        throw std::domain_error("channel map: absolute channel " + std::to_string(ach) +
                                " invalid for " + std::string(technology_name(t)));
    switch (t) {
        case Technology::Ieee802_15_1: return 2402.0 + (ach - 1);
        case Technology::Ieee802_15_4: return 2405.0 + 5.0 * (ach - 1);
        case Technology::Ieee802_11: return 2407.0 + 5.0 * ach;
    }
    throw std::domain_error("channel map: unknown technology");
}

double sensing_center_mhz(const ChannelMap& map) {
    check_window(map);
    return 2406.5 + 10.0 * (map.n_cnn - 1);
}

std::vector<ClassLabel> class_set(const ChannelMap& map) {
    check_window(map);
    std::vector<ClassLabel> labels;
    labels.reserve(kClassCount);
    for (Technology t :
         {Technology::Ieee802_15_1, Technology::Ieee802_15_4, Technology::Ieee802_11})
        for (int rch = 0; rch < relative_channel_count(t); ++rch) labels.push_back({t, rch});
    return labels;
}

int class_index(const ClassLabel& label) {
    if (label.relative_channel < 0 ||
        label.relative_channel >= relative_channel_count(label.technology))
        throw std::domain_error("channel map: invalid label " + class_name(label));
    switch (label.technology) {
        case Technology::Ieee802_15_1: return label.relative_channel;
        case Technology::Ieee802_15_4: return 10 + label.relative_channel;
        case Technology::Ieee802_11: return 12 + label.relative_channel;
    }
    throw std::domain_error("channel map: unknown technology");
}

double class_offset_hz(const ClassLabel& label, const ChannelMap& map) {
    const int ach = absolute_channel(label.technology, label.relative_channel, map);
    return (center_frequency_mhz(label.technology, ach) - sensing_center_mhz(map)) * 1e6;
}

} // namespace wii
