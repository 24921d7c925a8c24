#ifndef CANTORFULL_CLI_HPP
#define CANTORFULL_CLI_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cantorfull/fullgroup.hpp"

namespace cantorfull {

EngineSpec parse_subshift_spec(std::string_view text);
Engine parse_subshift(std::string_view text);
Engine load_subshift(std::string const &path);

struct Expr {
  enum class Kind {
    id, phi, name, power, sigma, ret, inv, comm, compose,
    cyl, all, empty, negate, both, either, shifted, img
  };

  Kind kind = Kind::id;
  long value = 0;
  std::string text;
  std::vector<std::shared_ptr<Expr const>> args;
};

using ExprPtr = std::shared_ptr<Expr const>;

struct Statement {
  std::string name;  // empty unless `let`
  ExprPtr expr;
};

std::vector<Statement> parse_program(std::string_view text);
ExprPtr parse_element_expr(std::string_view text);
ExprPtr parse_closet_expr(std::string_view text);
std::string print_expr(Expr const &e);

class Session {
 public:
  explicit Session(Engine engine) : _engine(std::move(engine)) {}

  Engine const &engine() const { return _engine; }
  void bind(std::string name, Element e) { _names.insert_or_assign(std::move(name), std::move(e)); }
  std::vector<std::string> const &warnings() const { return _warnings; }

  Element element(Expr const &e);
  CloSet closet(Expr const &e);
  // runs `let` statements; the value of the last one
  Element run(std::vector<Statement> const &program);

 private:
  Engine _engine;
  std::map<std::string, Element> _names;
  std::vector<std::string> _warnings;
};

Element parse_element(Session &session, std::string_view text);
CloSet parse_closet(Session &session, std::string_view text);

// inverse of Element::dump()
Element parse_dump(Engine const &engine, std::string_view text);

// the whole command line; returns the exit code (0 ok, 1 usage, 2 domain error)
int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace cantorfull

#endif  // CANTORFULL_CLI_HPP
