#include "cantorfull/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "cantorfull/error.hpp"

namespace cantorfull {

Caps parse_caps(std::string const &text, Caps base)
{
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;

    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::syntax_error, "cap entry without '=': " + item);

    std::string key = item.substr(0, eq);
    int value;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (std::exception const &) {
      throw Error(ErrorCode::syntax_error, "bad cap value: " + item);
    }

    if (key == "dbound") base.dbound = value;
    else if (key == "order") base.order = value;
    else if (key == "orbit") base.orbit = value;
    else if (key == "lef_n") base.lef_n = value;
    else if (key == "lef_p") base.lef_p = value;
    else if (key == "memory") base.memory = value;
    else throw Error(ErrorCode::syntax_error, "unknown cap key: " + key);
  }
  return base;
}

Caps &caps()
{
  static Caps instance = [] {
    char const *env = std::getenv("CANTORFULL_CAPS");
    return env ? parse_caps(env) : Caps();
  }();
  return instance;
}

}  // namespace cantorfull
