#include <algorithm>
#include <set>

#include "cantorfull/error.hpp"
#include "cantorfull/language.hpp"

namespace cantorfull {

Alphabet::Alphabet(std::vector<std::string> symbols)
  : _symbols(std::move(symbols))
{
  if (_symbols.empty())
    throw Error(ErrorCode::semantic_error, "empty alphabet");
  if (_symbols.size() > 255)
    throw Error(ErrorCode::semantic_error, "alphabet too large");

  std::set<std::string> seen;
  for (auto const &s : _symbols) {
    if (s.empty())
      throw Error(ErrorCode::semantic_error, "empty symbol");
    for (char c : s) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '.' || c == '"')
        throw Error(ErrorCode::semantic_error, "bad character in symbol '" + s + "'");
    }
    if (!seen.insert(s).second)
      throw Error(ErrorCode::semantic_error, "duplicate symbol '" + s + "'");
    if (s.size() != 1)
      _single_char = false;
  }
}

std::optional<Letter> Alphabet::find(std::string_view token) const
{
  for (std::size_t i = 0; i < _symbols.size(); ++i) {
    if (_symbols[i] == token)
      return static_cast<Letter>(i);
  }
  return std::nullopt;
}

std::string Alphabet::render(Letters const &w) const
{
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!_single_char && i > 0)
      out += '.';
    out += _symbols[static_cast<Letter>(w[i])];
  }
  return out;
}

Letters Alphabet::parse(std::string_view text) const
{
  Letters out;
  auto push = [&](std::string_view token) {
    auto l = find(token);
    if (!l)
      throw Error(ErrorCode::semantic_error, "unknown letter '" + std::string(token) + "'");
    out.push_back(static_cast<char>(*l));
  };

  if (_single_char) {
    for (char c : text)
      push(std::string_view(&c, 1));
    return out;
  }

  if (text.empty())
    return out;

  std::size_t start = 0;
  for (;;) {
    auto dot = text.find('.', start);
    push(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos)
      break;
    start = dot + 1;
  }
  return out;
}

bool is_periodic_word(std::string_view w, int p)
{
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p])
      return false;
  }
  return true;
}

Layer::Layer(std::vector<Letters> sorted_words)
  : words(std::move(sorted_words))
{
  _index.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    _index.emplace(words[i], static_cast<std::uint32_t>(i));
}

std::uint32_t Layer::find(std::string_view w) const
{
  auto it = _index.find(hash_key(w));
  return it == _index.end() ? npos : it->second;
}

Letters RecodingMap::decode(Letters const &recoded) const
{
  if (recoded.empty())
    return {};

  Letters out = letter_decode[static_cast<Letter>(recoded[0])];
  for (std::size_t i = 1; i < recoded.size(); ++i)
    out.push_back(letter_decode[static_cast<Letter>(recoded[i])].back());
  return out;
}

}  // namespace cantorfull
