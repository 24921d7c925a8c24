#ifndef CANTORFULL_SRC_WINDOW_HPP
#define CANTORFULL_SRC_WINDOW_HPP

#include <string_view>

namespace cantorfull {

// the (2r+1)-window of y centred at index `center`
inline std::string_view sub_window(std::string_view y, long center, int r)
{
  return y.substr(static_cast<std::size_t>(center - r), static_cast<std::size_t>(2 * r + 1));
}

// the central (2r+1)-window of an odd-length word
inline std::string_view central(std::string_view y, int r)
{
  return sub_window(y, static_cast<long>(y.size() / 2), r);
}

}  // namespace cantorfull

#endif  // CANTORFULL_SRC_WINDOW_HPP
