#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cantorfull/cli.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"
#include "cantorfull/jm.hpp"

namespace cantorfull {

namespace {

using nlohmann::ordered_json;

struct Context {
  std::ostream &out;
  std::ostream &err;
  std::string subshift;
  std::string dump_file;

  std::optional<Session> session;

  Session &need_session()
  {
    if (!session) {
      if (subshift.empty())
        throw CLI::RequiredError("--subshift");
      session.emplace(load_subshift(subshift));
    }
    return *session;
  }

  Element element(std::string const &expr)
  {
    auto &s = need_session();
    return parse_element(s, expr);
  }

  Element element_or_dump(std::string const &expr)
  {
    if (!dump_file.empty()) {
      std::ifstream in(dump_file);
      if (!in)
        throw std::runtime_error("cannot open dump file '" + dump_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_dump(need_session().engine(), buf.str());
    }
    if (expr.empty())
      throw CLI::RequiredError("--expr");
    return element(expr);
  }

  CloSet closet(std::string const &expr) { return parse_closet(need_session(), expr); }

  void flush_warnings()
  {
    if (session) {
      for (auto const &w : session->warnings())
        err << "warning: " << w << '\n';
    }
  }
};

std::vector<std::string> render_all(Engine const &e, std::vector<Letters> const &words)
{
  std::vector<std::string> out;
  for (auto const &w : words)
    out.push_back(e->alphabet().render(w));
  return out;
}

std::string level_classes(TowerMove const &m)
{
  std::string s;
  for (auto c : m.classes)
    s += "ABCD"[static_cast<int>(c)];
  return s;
}

std::vector<long> parse_list(std::string const &text)
{
  std::vector<long> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      out.push_back(std::stol(item));
    } catch (std::exception const &) {
      throw CLI::ValidationError("--n", "expected a comma separated list of integers");
    }
  }
  return out;
}

BoundedPermutationView permutation_view(Context &ctx, std::string const &g, long n_max)
{
  if (g == "id")
    return translation_view(0);
  if (g == "phi")
    return translation_view(1);
  if (g.rfind("phi^", 0) == 0) {
    try {
      return translation_view(std::stol(g.substr(4)));
    } catch (std::exception const &) {
    }
  }
  long i = 0, j = 0;
  char tail = 0;
  if (std::sscanf(g.c_str(), " ( %ld %ld )%c", &i, &j, &tail) == 2)
    return transposition_view(i, j);
  auto f = ctx.element(g);
  long c = f.dbound();
  return view_of(orbit_permutation(f, n_max + 2 * c + f.radius()));
}

}  // namespace

int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact computations in topological full groups of one-dimensional subshifts", "cantorfull"};
  app.require_subcommand(1);
  Context ctx{out, err};
  std::function<void()> action;

  auto subshift_opt = [&](CLI::App *sub) {
    sub->add_option("--subshift", ctx.subshift, "subshift definition file")->check(CLI::ExistingFile);
  };

  // lang
  auto *lang = app.add_subcommand("lang", "subshift languages");
  lang->require_subcommand(1);
  int length = 0, d = 1;
  std::string word;
  {
    auto *s = lang->add_subcommand("words", "allowed words of a given length");
    subshift_opt(s);
    s->add_option("--length", length, "word length")->required()->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        auto &e = ctx.need_session().engine();
        for (auto const &w : allowed_words(e, static_cast<std::size_t>(length)))
          out << e->alphabet().render(w) << '\n';
      };
    });
  }
  {
    auto *s = lang->add_subcommand("recur", "uniform recurrence bound of a word");
    subshift_opt(s);
    s->add_option("--word", word, "word")->required();
    s->callback([&] {
      action = [&] {
        auto &e = ctx.need_session().engine();
        out << recurrence_bound(e, e->alphabet().parse(word)) << '\n';
      };
    });
  }
  {
    auto *s = lang->add_subcommand("recode", "d-proper higher-block recoding");
    subshift_opt(s);
    s->add_option("--d", d, "properness distance")->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        auto &e = ctx.need_session().engine();
        auto [recoded, map] = proper_recode(e, d);
        ordered_json j;
        j["block_length"] = map.block_length;
        j["letters"] = render_all(e, map.letter_decode);
        j["proper"] = is_proper(recoded, d);
        out << j.dump(2) << '\n';
      };
    });
  }

  // elem
  auto *elem = app.add_subcommand("elem", "element evaluation");
  elem->require_subcommand(1);
  std::string expr, other;
  long cap = 0;
  auto elem_input = [&](CLI::App *s) {
    subshift_opt(s);
    s->add_option("--expr", expr, "element expression");
    s->add_option("--dump", ctx.dump_file, "canonical element dump")->check(CLI::ExistingFile);
  };
  {
    auto *s = elem->add_subcommand("eval", "evaluate and summarise an element");
    elem_input(s);
    s->callback([&] {
      action = [&] {
        auto f = ctx.element_or_dump(expr);
        ordered_json j;
        if (!expr.empty()) {
          std::string printed;
          for (auto const &st : parse_program(expr))
            printed += (printed.empty() ? "" : "; ") + (st.name.empty() ? "" : "let " + st.name + " = ") +
                       print_expr(*st.expr);
          j["expr"] = printed;
        }
        j["radius"] = f.radius();
        j["dbound"] = f.dbound();
        j["bijective"] = f.bijective();
        j["words"] = f.table().size();
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = elem->add_subcommand("canon", "canonical dump");
    elem_input(s);
    s->callback([&] { action = [&] { out << ctx.element_or_dump(expr).dump(); }; });
  }
  {
    auto *s = elem->add_subcommand("order", "order of an element");
    elem_input(s);
    s->add_option("--cap", cap, "order cap");
    s->callback([&] {
      action = [&] {
        auto r = order(ctx.element_or_dump(expr), cap);
        if (r.finite)
          out << r.n << '\n';
        else
          out << "exceeds " << r.n << '\n';
      };
    });
  }
  {
    auto *s = elem->add_subcommand("mod", "index map");
    elem_input(s);
    s->callback([&] { action = [&] { out << index_mod(ctx.element_or_dump(expr)) << '\n'; }; });
  }
  {
    auto *s = elem->add_subcommand("equal", "equality of two elements");
    elem_input(s);
    s->add_option("--other", other, "second element expression")->required();
    s->callback([&] {
      action = [&] {
        auto f = ctx.element_or_dump(expr);
        out << (equal(f, ctx.element(other)) ? "true" : "false") << '\n';
      };
    });
  }

  // construct
  auto *con = app.add_subcommand("construct", "named constructions");
  con->require_subcommand(1);
  std::string uexpr, aexpr, bexpr, space = "y";
  bool dot = false;
  int depth = 0, q = 3, k = 3;
  long window = 64;
  {
    auto *s = con->add_subcommand("sigma", "the 3-cycle of a good set");
    subshift_opt(s);
    s->add_option("--U", uexpr, "clopen expression")->required();
    s->callback([&] { action = [&] { out << sigma_U(ctx.closet(uexpr)).dump(); }; });
  }
  {
    auto *s = con->add_subcommand("towers", "Kakutani-Rokhlin towers over a base");
    subshift_opt(s);
    s->add_option("--U", uexpr, "base")->required();
    s->add_flag("--dot", dot, "emit a DOT diagram");
    s->callback([&] {
      action = [&] {
        auto t = kr_towers(ctx.closet(uexpr));
        if (!verify_partition(t))
          throw Error(ErrorCode::precondition_violated, "tower partition failed verification");
        out << (dot ? towers_dot(t) : towers_tsv(t));
      };
    });
  }
  {
    auto *s = con->add_subcommand("gw", "transport B into A");
    subshift_opt(s);
    s->add_option("--A", aexpr, "target")->required();
    s->add_option("--B", bexpr, "source")->required();
    s->add_option("--base", uexpr, "base inside A");
    s->callback([&] {
      action = [&] {
        std::optional<CloSet> hint;
        if (!uexpr.empty())
          hint = ctx.closet(uexpr);
        auto t = gw_transport(ctx.closet(aexpr), ctx.closet(bexpr), hint);
        ordered_json j;
        j["contained"] = t.contained;
        j["index"] = t.index;
        j["attempts"] = t.attempts;
        j["radius"] = t.alpha.radius();
        j["dbound"] = t.alpha.dbound();
        ordered_json towers = ordered_json::array();
        for (auto const &m : t.towers)
          towers.push_back({{"height", m.height}, {"classes", level_classes(m)},
                            {"permutation", cycle_notation(m.perm)}, {"even", m.even}});
        j["towers"] = towers;
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = con->add_subcommand("matui", "finite generating set of 3-cycles");
    subshift_opt(s);
    s->add_option("--depth", depth, "also certify cylinders of depth 2..depth")->check(CLI::Range(0, 4));
    s->callback([&] {
      action = [&] {
        auto m = matui_generators(ctx.need_session().engine());
        ordered_json j;
        j["block_length"] = m.recoding.block_length;
        j["letters"] = m.engine->alphabet().size();
        j["generators"] = m.generators.size();
        ordered_json words = ordered_json::array();
        for (auto const &w : m.words) {
          Letters decoded;
          for (char c : w)
            decoded += m.recoding.letter_decode[static_cast<std::size_t>(static_cast<unsigned char>(c))];
          words.push_back(m.engine->alphabet().render(w) + " = " +
                          ctx.need_session().engine()->alphabet().render(decoded));
        }
        j["words"] = words;
        ordered_json certs = ordered_json::object();
        for (int n = 2; n <= depth; ++n) {
          auto cs = cylinder_certificates(m, n);
          long ok = std::count_if(cs.begin(), cs.end(), [](auto const &c) { return c.verified; });
          certs[std::to_string(n)] = {{"cylinders", cs.size()}, {"verified", ok},
                                      {"word_length", cs.empty() ? 0 : cs.front().witness.size()}};
        }
        j["certificates"] = certs;
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = con->add_subcommand("lamplighter", "lamplighter pair over U");
    subshift_opt(s);
    s->add_option("--U", uexpr, "base with U and phi U disjoint")->required();
    s->add_option("--k", k, "independence range")->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        auto l = lamplighter_pair(ctx.closet(uexpr), k);
        auto &e = l.v.engine();
        ordered_json j;
        j["V"] = {{"radius", l.v.radius()}, {"words", render_all(e, l.v.members())}};
        j["psi"] = {{"radius", l.psi.radius()}, {"dbound", l.psi.dbound()}};
        j["involution"] = l.involution;
        j["conjugation"] = l.conjugation;
        j["independent"] = l.independent;
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = con->add_subcommand("vandouwen", "free product of involutions on the proper shift");
    s->add_option("--q", q, "alphabet size")->check(CLI::Range(3, 26));
    s->add_option("--length", length, "longest reduced word")->check(CLI::Range(0, 12));
    s->callback([&] {
      action = [&] {
        auto vd = van_douwen_involutions(q);
        bool involutions = std::all_of(vd.sigma.begin(), vd.sigma.end(),
                                       [](Element const &s) { return is_identity(compose(s, s)); });
        auto r = van_douwen_freeness(vd, length);
        ordered_json j;
        j["q"] = q;
        j["involutions"] = involutions;
        j["words"] = r.words;
        j["identity"] = r.identity;
        j["witness_failures"] = r.witness_failures;
        j["disagreements"] = r.disagreements;
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = con->add_subcommand("houghton", "end translations on Y or Y'");
    s->add_option("--space", space, "y or yprime")->check(CLI::IsMember({"y", "yprime"}));
    s->add_option("--expr", expr, "element (names: tau, and on yprime tau_m, swap)")->required();
    s->add_option("--window", window, "coded window")->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        auto sp = space == "y" ? HoughtonSpace::y : HoughtonSpace::y_prime;
        Session hs(houghton_engine(sp));
        auto gens = houghton_generators(hs.engine(), sp);
        hs.bind("tau", gens[1]);
        if (sp == HoughtonSpace::y_prime) {
          hs.bind("tau_m", gens[2]);
          hs.bind("swap", gens[3]);
        }
        auto p = houghton_profile(parse_element(hs, expr), sp, window);
        ordered_json j;
        ordered_json ends = ordered_json::array();
        for (auto const &e : p.ends)
          ends.push_back({{"end", e.name}, {"translation", e.translation}});
        j["ends"] = ends;
        j["exceptional"] = p.exceptional;
        out << j.dump(2) << '\n';
      };
    });
  }

  // act
  auto *act = app.add_subcommand("act", "orbit actions");
  act->require_subcommand(1);
  std::vector<std::string> exprs;
  long shift_by = 0;
  int n_cap = 0, p_cap = 0;
  {
    auto *s = act->add_subcommand("orbit", "windowed orbit permutation");
    subshift_opt(s);
    s->add_option("--expr", expr, "element")->required();
    s->add_option("--window", window, "window radius")->check(CLI::PositiveNumber);
    s->add_option("--shift", shift_by, "basepoint shift");
    s->callback([&] {
      action = [&] {
        auto p = orbit_permutation(ctx.element(expr), window, shift_by);
        out << "n\timage\n";
        for (long n = -p.interior(); n <= p.interior(); ++n)
          out << n << '\t' << p(n) << '\n';
      };
    });
  }
  {
    auto *s = act->add_subcommand("putnam", "block partition of a stabilising family");
    subshift_opt(s);
    s->add_option("--expr", exprs, "family member (repeatable)")->required();
    s->add_option("--window", window, "window radius")->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        std::vector<Element> family;
        for (auto const &e : exprs)
          family.push_back(ctx.element(e));
        auto b = putnam_blocks(family, window);
        ordered_json j;
        j["m"] = b.m;
        j["recurrence"] = b.recurrence;
        ordered_json blocks = ordered_json::array();
        for (auto [first, last] : b.blocks)
          blocks.push_back({first, last});
        j["blocks"] = blocks;
        j["invariant"] = b.invariant;
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = act->add_subcommand("lef", "finite quotient separating the elements");
    subshift_opt(s);
    s->add_option("--expr", exprs, "element (repeatable)")->required();
    s->add_option("--n-cap", n_cap, "largest approximation order");
    s->add_option("--p-cap", p_cap, "largest period");
    s->callback([&] {
      action = [&] {
        std::vector<Element> els;
        for (auto const &e : exprs)
          els.push_back(ctx.element(e));
        auto c = lef_certificate(els, n_cap, p_cap);
        ordered_json j;
        j["n"] = c.n;
        j["p"] = c.p;
        j["points"] = render_all(c.approximation, c.points);
        ordered_json images = ordered_json::object();
        for (std::size_t e = 0; e < c.images.size(); ++e)
          images[std::to_string(e)] = c.images[e];
        j["images"] = images;
        ordered_json w = ordered_json::array();
        for (auto const &s : c.witnesses)
          w.push_back({{"first", s.first}, {"second", s.second}, {"point", s.point}});
        j["witnesses"] = w;
        j["verified"] = verify_certificate(c, els);
        out << j.dump(2) << '\n';
      };
    });
  }
  {
    auto *s = act->add_subcommand("odometer", "phi-orbit of a clopen set");
    subshift_opt(s);
    s->add_option("--U", uexpr, "clopen expression")->required();
    s->add_option("--cap", cap, "orbit cap");
    s->callback([&] {
      action = [&] {
        auto r = clopen_orbit(ctx.closet(uexpr), cap);
        ordered_json j;
        j["finite"] = r.finite;
        j["size"] = r.size;
        j["status"] = r.finite ? "finite" : "ExceedsCap(" + std::to_string(r.size) + ")";
        out << j.dump(2) << '\n';
      };
    });
  }

  // jm
  auto *jm = app.add_subcommand("jm", "almost-invariance certificates");
  jm->require_subcommand(1);
  std::string g, ns;
  bool loglog = false;
  {
    auto *s = jm->add_subcommand("corr", "correlation at one n");
    subshift_opt(s);
    s->add_option("--g", g, "id, phi, phi^k, (i j) or an element expression")->required();
    s->add_option("--n", ns, "n")->required();
    s->callback([&] {
      action = [&] {
        long n = parse_list(ns).at(0);
        auto v = permutation_view(ctx, g, n);
        out << std::setprecision(17) << correlation(v, n) << '\t' << hn_lower_bound(v, n) << '\n';
      };
    });
  }
  {
    auto *s = jm->add_subcommand("report", "decay report");
    subshift_opt(s);
    s->add_option("--g", g, "id, phi, phi^k, (i j) or an element expression")->required();
    s->add_option("--n", ns, "comma separated increasing n")->required();
    s->add_flag("--loglog", loglog, "append a log-log table");
    s->callback([&] {
      action = [&] {
        auto list = parse_list(ns);
        auto v = permutation_view(ctx, g, list.empty() ? 1 : list.back());
        auto r = decay_report(v, list);
        out << report_tsv(r);
        if (loglog)
          out << '\n' << report_loglog(r);
      };
    });
  }

  // group
  auto *grp = app.add_subcommand("group", "Cayley balls");
  grp->require_subcommand(1);
  int radius = 3;
  bool serial = false;
  {
    auto *s = grp->add_subcommand("ball", "ball sizes in the word metric");
    subshift_opt(s);
    s->add_option("--gen", exprs, "generator (repeatable)")->required();
    s->add_option("--radius", radius, "largest radius")->check(CLI::NonNegativeNumber);
    s->add_flag("--serial", serial, "use the serial reference");
    s->callback([&] {
      action = [&] {
        std::vector<Element> gens;
        for (auto const &e : exprs)
          gens.push_back(ctx.element(e));
        auto b = serial ? ball_sizes_serial(gens, radius) : ball_sizes(gens, radius);
        out << "radius\tsize\n";
        for (std::size_t r = 0; r < b.sizes.size(); ++r)
          out << r + 1 << '\t' << b.sizes[r] << '\n';
      };
    });
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
    action();
    ctx.flush_warnings();
    return 0;
  } catch (CLI::Error const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (Error const &e) {
    ctx.flush_warnings();
    err << "error: " << e.what();
    if (!e.witness().empty())
      err << " [witness: " << e.witness() << "]";
    err << '\n';
    bool usage = e.code() == ErrorCode::syntax_error || e.code() == ErrorCode::semantic_error;
    return usage ? 1 : 2;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cantorfull
