#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "cantorfull/cli.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

namespace {

std::string at(int line, int column)
{
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

std::string trim(std::string_view s)
{
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

// the message of e without its "<Name>: " prefix
std::string bare(Error const &e)
{
  std::string w = e.what();
  std::string prefix = std::string(error_name(e.code())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

std::vector<std::string> split_ws(std::string_view s)
{
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;)
    out.push_back(t);
  return out;
}

}  // namespace

EngineSpec parse_subshift_spec(std::string_view text)
{
  EngineSpec spec;
  bool have_alphabet = false, have_kind = false;
  std::map<Letter, Letters> rules;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (trim(line).empty())
      continue;
    auto colon = line.find(':');
    int first = 1;
    while (first <= static_cast<int>(line.size()) && std::isspace(static_cast<unsigned char>(line[first - 1])))
      ++first;
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::syntax_error, at(line_no, first) + "expected '<key>: <value>'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    int vcol = static_cast<int>(colon) + 2;

    if (key != "alphabet" && !have_alphabet)
      throw Error(ErrorCode::syntax_error, at(line_no, first) + "expected 'alphabet' before '" + key + "'");
    try {
      if (key == "alphabet") {
        spec.alphabet = Alphabet(split_ws(value));
        have_alphabet = true;
      } else if (key == "kind") {
        if (value == "sft")
          spec.kind = EngineKind::sft;
        else if (value == "substitution")
          spec.kind = EngineKind::substitution;
        else if (value == "sturmian")
          spec.kind = EngineKind::sturmian;
        else
          throw Error(ErrorCode::syntax_error,
                      at(line_no, vcol) + "expected one of {sft, substitution, sturmian}, found '" + value + "'");
        have_kind = true;
      } else if (key == "forbidden") {
        for (auto const &w : split_ws(value))
          spec.forbidden.push_back(spec.alphabet.parse(w));
      } else if (key == "rule") {
        auto arrow = value.find("->");
        if (arrow == std::string::npos)
          throw Error(ErrorCode::syntax_error, at(line_no, vcol) + "expected '<letter> -> <word>'");
        auto lhs = spec.alphabet.parse(trim(value.substr(0, arrow)));
        if (lhs.size() != 1)
          throw Error(ErrorCode::syntax_error, at(line_no, vcol) + "rule must rewrite a single letter");
        rules[static_cast<Letter>(lhs[0])] = spec.alphabet.parse(trim(value.substr(arrow + 2)));
      } else if (key == "cf") {
        for (auto const &q : split_ws(value))
          spec.partial_quotients.push_back(std::stoi(q));
      } else if (key == "depth") {
        spec.depth_cap = std::stoi(value);
      } else {
        throw Error(ErrorCode::syntax_error, at(line_no, first) + "unknown key '" + key +
                                                 "'; expected one of {alphabet, kind, forbidden, rule, cf, depth}");
      }
    } catch (Error const &e) {
      if (e.code() == ErrorCode::semantic_error)
        throw Error(ErrorCode::semantic_error, at(line_no, vcol) + bare(e));
      throw;
    } catch (std::invalid_argument const &) {
      throw Error(ErrorCode::syntax_error, at(line_no, vcol) + "expected an integer");
    } catch (std::out_of_range const &) {
      throw Error(ErrorCode::syntax_error, at(line_no, vcol) + "integer out of range");
    }
  }
  if (!have_alphabet)
    throw Error(ErrorCode::syntax_error, at(line_no + 1, 1) + "missing 'alphabet'");
  if (!have_kind)
    throw Error(ErrorCode::syntax_error, at(line_no + 1, 1) + "missing 'kind'");
  if (spec.kind == EngineKind::substitution) {
    for (std::size_t l = 0; l < spec.alphabet.size(); ++l) {
      auto it = rules.find(static_cast<Letter>(l));
      if (it == rules.end())
        throw Error(ErrorCode::semantic_error, "no rule for letter '" + spec.alphabet.symbol(static_cast<Letter>(l)) + "'");
      spec.rules.push_back(it->second);
    }
  }
  return spec;
}

Engine parse_subshift(std::string_view text)
{
  return build_engine(parse_subshift_spec(text));
}

Engine load_subshift(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open subshift file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_subshift(buf.str());
}

namespace {

struct Token {
  enum class Type { ident, integer, string, punct, end };
  Type type = Type::end;
  std::string text;
  long value = 0;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(std::string_view s)
{
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      out.push_back({Token::Type::punct, ";", 0, line, col});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n')
        advance(1);
      continue;
    }
    Token t{Token::Type::punct, "", 0, line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      t.type = Token::Type::ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      t.type = Token::Type::integer;
      t.text = std::string(s.substr(i, j - i));
      try {
        t.value = std::stol(t.text);
      } catch (std::out_of_range const &) {
        throw Error(ErrorCode::syntax_error, at(line, col) + "integer out of range");
      }
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"' && s[j] != '\n')
        ++j;
      if (j >= s.size() || s[j] != '"')
        throw Error(ErrorCode::syntax_error, at(line, col) + "unterminated string");
      t.type = Token::Type::string;
      t.text = std::string(s.substr(i + 1, j - i - 1));
      advance(j + 1 - i);
    } else if (std::string_view("()*^,!&|=;").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw Error(ErrorCode::syntax_error, at(line, col) + "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Type::end, "", 0, line, col});
  return out;
}

ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args = {}, long value = 0, std::string text = "")
{
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = std::move(args);
  e->value = value;
  e->text = std::move(text);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : _tokens(lex(text)) {}

  std::vector<Statement> program()
  {
    std::vector<Statement> out;
    skip_separators();
    while (peek().type != Token::Type::end) {
      out.push_back(statement());
      if (peek().type != Token::Type::end) {
        expect_punct(";", {";", "newline", "end of input"});
        skip_separators();
      }
    }
    if (out.empty())
      fail({"an element expression"});
    return out;
  }

  ExprPtr element_only()
  {
    skip_separators();
    auto e = element();
    skip_separators();
    expect_end();
    return e;
  }

  ExprPtr closet_only()
  {
    skip_separators();
    auto e = closet();
    skip_separators();
    expect_end();
    return e;
  }

 private:
  std::vector<Token> _tokens;
  std::size_t _pos = 0;

  Token const &peek() const { return _tokens[_pos]; }
  Token const &take() { return _tokens[_pos++]; }

  bool is_punct(char const *p) const { return peek().type == Token::Type::punct && peek().text == p; }
  bool is_ident(char const *p) const { return peek().type == Token::Type::ident && peek().text == p; }

  void skip_separators()
  {
    while (is_punct(";"))
      ++_pos;
  }

  [[noreturn]] void fail(std::set<std::string> const &expected) const
  {
    auto const &t = peek();
    std::string found = t.type == Token::Type::end ? "end of input" : "'" + t.text + "'";
    if (t.type == Token::Type::punct && t.text == ";" && t.line > 0)
      found = "';' or newline";
    std::string list;
    for (auto const &e : expected)
      list += (list.empty() ? "" : ", ") + e;
    throw Error(ErrorCode::syntax_error, at(t.line, t.column) + "expected one of {" + list + "}, found " + found);
  }

  void expect_punct(char const *p, std::set<std::string> const &expected)
  {
    if (!is_punct(p))
      fail(expected);
    ++_pos;
  }

  void expect_end()
  {
    if (peek().type != Token::Type::end)
      fail({"end of input"});
  }

  long integer()
  {
    if (peek().type != Token::Type::integer)
      fail({"integer"});
    return take().value;
  }

  Statement statement()
  {
    if (is_ident("let")) {
      ++_pos;
      if (peek().type != Token::Type::ident)
        fail({"name"});
      std::string name = take().text;
      expect_punct("=", {"'='"});
      return {name, element()};
    }
    return {"", element()};
  }

  ExprPtr element()
  {
    auto lhs = factor();
    while (is_punct("*")) {
      ++_pos;
      lhs = node(Expr::Kind::compose, {lhs, factor()});
    }
    return lhs;
  }

  ExprPtr factor()
  {
    auto p = primary();
    if (is_punct("^")) {
      ++_pos;
      p = node(Expr::Kind::power, {p}, integer());
    }
    return p;
  }

  ExprPtr primary()
  {
    static std::set<std::string> const expected{"id", "phi", "sigma", "ret", "inv", "comm", "name", "'('"};
    auto const &t = peek();
    if (is_punct("(")) {
      ++_pos;
      auto e = element();
      expect_punct(")", {"')'", "'*'"});
      return e;
    }
    if (t.type != Token::Type::ident)
      fail(expected);
    std::string word = take().text;
    if (word == "id")
      return node(Expr::Kind::id);
    if (word == "phi")
      return node(Expr::Kind::phi);
    if (word == "sigma" || word == "ret") {
      expect_punct("(", {"'('"});
      auto c = closet();
      expect_punct(")", {"')'", "'&'", "'|'"});
      return node(word == "sigma" ? Expr::Kind::sigma : Expr::Kind::ret, {c});
    }
    if (word == "inv") {
      expect_punct("(", {"'('"});
      auto e = element();
      expect_punct(")", {"')'", "'*'"});
      return node(Expr::Kind::inv, {e});
    }
    if (word == "comm") {
      expect_punct("(", {"'('"});
      auto a = element();
      expect_punct(",", {"','", "'*'"});
      auto b = element();
      expect_punct(")", {"')'", "'*'"});
      return node(Expr::Kind::comm, {a, b});
    }
    if (word == "let" || word == "cyl" || word == "all" || word == "empty" || word == "img") {
      --_pos;
      fail(expected);
    }
    return node(Expr::Kind::name, {}, 0, word);
  }

  ExprPtr closet()
  {
    auto lhs = cterm();
    while (is_punct("|")) {
      ++_pos;
      lhs = node(Expr::Kind::either, {lhs, cterm()});
    }
    return lhs;
  }

  ExprPtr cterm()
  {
    auto lhs = cfactor();
    while (is_punct("&")) {
      ++_pos;
      lhs = node(Expr::Kind::both, {lhs, cfactor()});
    }
    return lhs;
  }

  ExprPtr cfactor()
  {
    if (is_punct("!")) {
      ++_pos;
      return node(Expr::Kind::negate, {cfactor()});
    }
    return catom();
  }

  ExprPtr catom()
  {
    static std::set<std::string> const expected{"cyl", "all", "empty", "phi", "img", "'!'", "'('"};
    if (is_punct("(")) {
      ++_pos;
      auto e = closet();
      expect_punct(")", {"')'", "'&'", "'|'"});
      return e;
    }
    if (peek().type != Token::Type::ident)
      fail(expected);
    std::string word = take().text;
    if (word == "all")
      return node(Expr::Kind::all);
    if (word == "empty")
      return node(Expr::Kind::empty);
    if (word == "cyl") {
      expect_punct("(", {"'('"});
      long anchor = integer();
      expect_punct(",", {"','"});
      if (peek().type != Token::Type::string)
        fail({"quoted word"});
      std::string w = take().text;
      expect_punct(")", {"')'"});
      return node(Expr::Kind::cyl, {}, anchor, w);
    }
    if (word == "phi") {
      expect_punct("^", {"'^'"});
      long k = integer();
      expect_punct("(", {"'('"});
      auto e = closet();
      expect_punct(")", {"')'", "'&'", "'|'"});
      return node(Expr::Kind::shifted, {e}, k);
    }
    if (word == "img") {
      expect_punct("(", {"'('"});
      auto f = element();
      expect_punct(",", {"','", "'*'"});
      auto e = closet();
      expect_punct(")", {"')'", "'&'", "'|'"});
      return node(Expr::Kind::img, {f, e});
    }
    --_pos;
    fail(expected);
  }
};

bool is_atomic(Expr const &e)
{
  switch (e.kind) {
  case Expr::Kind::compose:
  case Expr::Kind::both:
  case Expr::Kind::either:
    return false;
  default:
    return true;
  }
}

}  // namespace

std::vector<Statement> parse_program(std::string_view text)
{
  return Parser(text).program();
}

ExprPtr parse_element_expr(std::string_view text)
{
  return Parser(text).element_only();
}

ExprPtr parse_closet_expr(std::string_view text)
{
  return Parser(text).closet_only();
}

std::string print_expr(Expr const &e)
{
  auto arg = [&](std::size_t i) { return print_expr(*e.args[i]); };
  switch (e.kind) {
  case Expr::Kind::id:
    return "id";
  case Expr::Kind::phi:
    return "phi";
  case Expr::Kind::name:
    return e.text;
  case Expr::Kind::power:
    return (e.args[0]->kind == Expr::Kind::power || !is_atomic(*e.args[0]) ? "(" + arg(0) + ")" : arg(0)) + "^" +
           std::to_string(e.value);
  case Expr::Kind::sigma:
    return "sigma(" + arg(0) + ")";
  case Expr::Kind::ret:
    return "ret(" + arg(0) + ")";
  case Expr::Kind::inv:
    return "inv(" + arg(0) + ")";
  case Expr::Kind::comm:
    return "comm(" + arg(0) + ", " + arg(1) + ")";
  case Expr::Kind::compose:
    return arg(0) + " * " + (e.args[1]->kind == Expr::Kind::compose ? "(" + arg(1) + ")" : arg(1));
  case Expr::Kind::cyl:
    return "cyl(" + std::to_string(e.value) + ", \"" + e.text + "\")";
  case Expr::Kind::all:
    return "all";
  case Expr::Kind::empty:
    return "empty";
  case Expr::Kind::negate:
    return "!" + (is_atomic(*e.args[0]) ? arg(0) : "(" + arg(0) + ")");
  case Expr::Kind::both: {
    auto side = [&](std::size_t i) {
      auto k = e.args[i]->kind;
      bool wrap = k == Expr::Kind::either || (i == 1 && k == Expr::Kind::both);
      return wrap ? "(" + arg(i) + ")" : arg(i);
    };
    return side(0) + " & " + side(1);
  }
  case Expr::Kind::either:
    return arg(0) + " | " + (e.args[1]->kind == Expr::Kind::either ? "(" + arg(1) + ")" : arg(1));
  case Expr::Kind::shifted:
    return "phi^" + std::to_string(e.value) + "(" + arg(0) + ")";
  case Expr::Kind::img:
    return "img(" + arg(0) + ", " + arg(1) + ")";
  }
  return "";
}

Element Session::element(Expr const &e)
{
  switch (e.kind) {
  case Expr::Kind::id:
    return identity(_engine);
  case Expr::Kind::phi:
    return shift(_engine, 1);
  case Expr::Kind::name: {
    auto it = _names.find(e.text);
    if (it == _names.end())
      throw Error(ErrorCode::semantic_error, "unbound name '" + e.text + "'");
    return it->second;
  }
  case Expr::Kind::power:
    if (e.args[0]->kind == Expr::Kind::phi)
      return shift(_engine, static_cast<int>(e.value));
    return power(element(*e.args[0]), e.value);
  case Expr::Kind::sigma:
    return sigma_U(closet(*e.args[0]));
  case Expr::Kind::ret:
    return first_return(closet(*e.args[0]));
  case Expr::Kind::inv:
    return inverse(element(*e.args[0]));
  case Expr::Kind::comm:
    return commutator(element(*e.args[0]), element(*e.args[1]));
  case Expr::Kind::compose:
    return compose(element(*e.args[0]), element(*e.args[1]));
  default:
    throw Error(ErrorCode::semantic_error, "expected an element, found the clopen expression " + print_expr(e));
  }
}

CloSet Session::closet(Expr const &e)
{
  switch (e.kind) {
  case Expr::Kind::cyl: {
    auto letters = _engine->alphabet().parse(e.text);
    if (!is_allowed(_engine, letters))
      _warnings.push_back("word \"" + e.text + "\" is not allowed; the cylinder is empty");
    return CloSet::cylinder(_engine, Word{letters, e.value});
  }
  case Expr::Kind::all:
    return CloSet::full(_engine);
  case Expr::Kind::empty:
    return CloSet::empty(_engine);
  case Expr::Kind::negate:
    return complement(closet(*e.args[0]));
  case Expr::Kind::both:
    return intersect(closet(*e.args[0]), closet(*e.args[1]));
  case Expr::Kind::either:
    return unite(closet(*e.args[0]), closet(*e.args[1]));
  case Expr::Kind::shifted:
    return shift_image(closet(*e.args[0]), e.value);
  case Expr::Kind::img:
    return element_image(closet(*e.args[1]), element(*e.args[0]));
  default:
    throw Error(ErrorCode::semantic_error, "expected a clopen set, found the element expression " + print_expr(e));
  }
}

Element Session::run(std::vector<Statement> const &program)
{
  std::optional<Element> last;
  for (auto const &s : program) {
    last = element(*s.expr);
    if (!s.name.empty())
      bind(s.name, *last);
  }
  return *last;
}

Element parse_element(Session &session, std::string_view text)
{
  return session.run(parse_program(text));
}

CloSet parse_closet(Session &session, std::string_view text)
{
  return session.closet(*parse_closet_expr(text));
}

Element parse_dump(Engine const &engine, std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string header;
  std::getline(in, header);
  int r = 0, d = 0;
  if (std::sscanf(header.c_str(), "radius=%d dbound=%d", &r, &d) != 2 || r < 0)
    throw Error(ErrorCode::syntax_error, at(1, 1) + "expected 'radius=<r> dbound=<D>'");
  auto const &layer = engine->layer(static_cast<std::size_t>(2 * r + 1));
  std::vector<int> table(layer.size(), 0);
  std::vector<char> seen(layer.size(), 0);
  int line_no = 1;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (trim(line).empty())
      continue;
    auto arrow = line.find(" -> ");
    if (arrow == std::string::npos)
      throw Error(ErrorCode::syntax_error, at(line_no, 1) + "expected '<word> -> <displacement>'");
    Letters w;
    try {
      w = engine->alphabet().parse(trim(line.substr(0, arrow)));
    } catch (Error const &e) {
      throw Error(ErrorCode::semantic_error, at(line_no, 1) + bare(e));
    }
    auto idx = layer.find(w);
    if (idx == Layer::npos)
      throw Error(ErrorCode::semantic_error, at(line_no, 1) + "word is not an allowed (2r+1)-word");
    try {
      table[idx] = std::stoi(line.substr(arrow + 4));
    } catch (std::exception const &) {
      throw Error(ErrorCode::syntax_error, at(line_no, static_cast<int>(arrow) + 5) + "expected an integer");
    }
    seen[idx] = 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i])
      throw Error(ErrorCode::partial_table, "dump has no line for an allowed word",
                  engine->alphabet().render(layer.words[i]));
  }
  return build_element(engine, r, std::move(table), Certify::semigroup);
}

}  // namespace cantorfull
