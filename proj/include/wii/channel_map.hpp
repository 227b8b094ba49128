#pragma once

#include <vector>

#include "wii/label.hpp"

namespace wii {

// Frequency raster algebra for the three technologies inside one 10 MHz
// sensing window.  The window index n selects which slice of the 2.4 GHz
// band is observed; relative channel numbers (and therefore class labels)
// are window-independent.
struct ChannelMap {
    int n_cnn = 3; // sensing window index, 1..8
};

inline constexpr int kAbsoluteOffset = 1; // same for all technologies

// Relative offset between adjacent sensing windows, in channel steps.
int relative_offset(Technology t);

// Number of relative channels a technology contributes to the label set
// (10 / 2 / 3).
int relative_channel_count(Technology t);

// ACH = RCH + RO * (n_cnn - 1) + AO.  Throws std::domain_error when rch or
// n_cnn is out of range, or when the result leaves the technology's
// absolute channel range (1..79 / 1..15 / 1..13) - possible at the band
// edge for the highest window.
int absolute_channel(Technology t, int rch, const ChannelMap& map);

// Channel raster: 802.15.1 at 2402 + (ACH-1), 802.15.4 at 2405 + 5(ACH-1),
// 802.11 at 2407 + 5 ACH.  Throws std::domain_error outside the absolute
// channel range.
double center_frequency_mhz(Technology t, int ach);

// Center of sensing window n: 2406.5 + 10 (n-1) MHz (window 3 = 2426.5).
double sensing_center_mhz(const ChannelMap& map);

// The 15 labels in classifier output order: 802.15.1 rch 0..9, then
// 802.15.4 rch 0..1, then 802.11 rch 0..2.
std::vector<ClassLabel> class_set(const ChannelMap& map);

inline constexpr int kClassCount = 15;

// Position of a label in class_set order; throws std::domain_error for an
// invalid label.
int class_index(const ClassLabel& label);

// Emitter offset from the sensing center, in Hz.
double class_offset_hz(const ClassLabel& label, const ChannelMap& map);

} // namespace wii
