#ifndef CANTORFULL_CAPS_HPP
#define CANTORFULL_CAPS_HPP

#include <string>

namespace cantorfull {

struct Caps {
  int dbound = 64;
  int order = 720;
  int orbit = 64;
  int lef_n = 8;
  int lef_p = 12;
  long memory = 200000;
};

// process-wide caps; initialised from CANTORFULL_CAPS ("dbound=32,order=100")
Caps &caps();
Caps parse_caps(std::string const &text, Caps base = Caps());

}  // namespace cantorfull

#endif  // CANTORFULL_CAPS_HPP
