#ifndef CANTORFULL_LANGUAGE_HPP
#define CANTORFULL_LANGUAGE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"

namespace cantorfull {

using Letter = unsigned char;

// letters are stored as bytes holding alphabet indices
using Letters = std::string;

inline absl::string_view hash_key(std::string_view s) { return {s.data(), s.size()}; }

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return _symbols.size(); }
  std::string const &symbol(Letter l) const { return _symbols[l]; }
  std::vector<std::string> const &symbols() const { return _symbols; }
  std::optional<Letter> find(std::string_view token) const;

  // single-character alphabets write words as plain strings, others
  // separate letters with '.'
  bool single_char() const { return _single_char; }
  std::string render(Letters const &w) const;
  Letters parse(std::string_view text) const;

  bool operator==(Alphabet const &other) const { return _symbols == other._symbols; }

 private:
  std::vector<std::string> _symbols;
  bool _single_char = true;
};

struct Word {
  Letters letters;
  long anchor = 0;

  bool operator==(Word const &other) const = default;
};

inline bool same_letters(Word const &a, Word const &b) { return a.letters == b.letters; }

bool is_periodic_word(std::string_view w, int p);

enum class Tri { no, yes, unknown };
enum class EngineKind { sft, substitution, sturmian, recoded };

struct EngineSpec {
  Alphabet alphabet;
  EngineKind kind = EngineKind::sft;
  std::vector<Letters> forbidden;
  std::vector<Letters> rules;
  std::vector<int> partial_quotients;
  int depth_cap = 12;
};

class Layer {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  explicit Layer(std::vector<Letters> sorted_words);

  std::size_t size() const { return words.size(); }
  std::uint32_t find(std::string_view w) const;

  std::vector<Letters> const words;

 private:
  absl::flat_hash_map<std::string, std::uint32_t> _index;
};

class LanguageEngine;
using Engine = std::shared_ptr<const LanguageEngine>;

class LanguageEngine {
 public:
  static Engine build(EngineSpec spec);
  static Engine sft_from_allowed(Alphabet alphabet, int order, std::vector<Letters> allowed);
  static Engine recoded(Engine source, int block_length);

  Alphabet const &alphabet() const { return _alphabet; }
  EngineKind kind() const { return _kind; }
  Tri minimal() const { return _minimal; }
  Tri aperiodic() const { return _aperiodic; }
  bool free() const { return _aperiodic == Tri::yes; }

  bool is_allowed(std::string_view w) const;
  Layer const &layer(std::size_t length) const;

  // x[-M..M] of the canonical point
  Letters point_window(int radius) const;

  int sft_order() const { return _order; }
  bool sft_edge(std::string_view kword) const { return _edges.contains(hash_key(kword)); }
  std::vector<Letters> excluded_words() const;

  Engine source() const { return _source; }
  int block_length() const { return _block; }
  std::vector<Letters> const &rules() const { return _rules; }
  std::vector<int> const &partial_quotients() const { return _quotients; }
  int depth_cap() const { return _depth_cap; }

  // orbit size of a finite minimal engine
  int exact_period() const;

  std::string describe() const;

 private:
  LanguageEngine() = default;

  std::vector<Letters> compute_layer(std::size_t length) const;
  std::vector<Letters> sft_layer(std::size_t length) const;
  std::vector<Letters> substitution_layer(std::size_t length) const;
  std::vector<Letters> sturmian_layer(std::size_t length) const;
  std::vector<Letters> recoded_layer(std::size_t length) const;

  void init_sft(std::vector<Letters> local_edges);
  void init_substitution();
  void init_sturmian();
  void check_aperiodic();

  Letters substitute(Letters const &w, int power) const;
  Letters standard_word(int depth) const;

  Alphabet _alphabet;
  EngineKind _kind = EngineKind::sft;
  Tri _minimal = Tri::unknown;
  Tri _aperiodic = Tri::unknown;

  // sft
  int _order = 2;
  absl::flat_hash_set<std::string> _edges;
  std::vector<Letters> _vertices;

  // substitution
  std::vector<Letters> _rules;
  std::vector<Letters> _two_words;
  int _seed_power = 0;
  Letter _seed_left = 0;
  Letter _seed_right = 0;

  // sturmian
  std::vector<int> _quotients;
  int _depth_cap = 12;

  // recoded
  Engine _source;
  int _block = 0;

  mutable std::mutex _cache_mutex;
  mutable std::map<std::size_t, std::unique_ptr<Layer>> _cache;
};

struct RecodingMap {
  int block_length = 1;
  std::vector<Letters> letter_decode;

  Letters decode(Letters const &recoded) const;
};

Engine build_engine(EngineSpec spec);
bool is_allowed(Engine const &engine, std::string_view w);
std::vector<Letters> const &allowed_words(Engine const &engine, std::size_t length);
int recurrence_bound(Engine const &engine, Letters const &w, int cap = 0);
Letters point_window(Engine const &engine, int radius);
std::pair<Engine, RecodingMap> proper_recode(Engine const &engine, int d);
std::vector<Letters> periodic_points(Engine const &engine, int p);
Engine sft_approximation(Engine const &engine, int n);
bool is_irreducible(Engine const &engine);

// true iff every allowed (d+1)-word has pairwise distinct letters
bool is_proper(Engine const &engine, int d);

}  // namespace cantorfull

#endif  // CANTORFULL_LANGUAGE_HPP
