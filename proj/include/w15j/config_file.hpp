#pragma once

#include "w15j/sweep.hpp"

#include <stdexcept>
#include <string>

namespace w15j {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key=value UTF-8 text ('#' comments). Keys:
//   two_<label> = <doubled integer>     (two_j1 ... two_j7, two_s5, two_s6)
//   small = s5,s6                       (flags; must match `formula`)
//   varied = j7                         (defaults to j7)
//   formula = two_small|three_small|four_small
//   range = <two_lo>..<two_hi>          (optional, doubled inclusive)
SweepSpec parse_config_file(const std::string& path);
SweepSpec parse_config_text(const std::string& text, const std::string& origin);

} // namespace w15j
