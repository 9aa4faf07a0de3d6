// genpos: invariants, G_{q,p} computations and corpus sweeps from the shell.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "genpos/catalog.hpp"
#include "genpos/error.hpp"
#include "genpos/gqp.hpp"
#include "genpos/group_spec.hpp"
#include "genpos/invariants.hpp"
#include "genpos/verify.hpp"

using namespace genpos;
using json = nlohmann::ordered_json;

namespace {

  constexpr char const* kVersion = "0.1.0";

  enum Exit { ok = 0, error = 1, partial = 2 };

  std::size_t enumeration_cap() {
    if (char const* s = std::getenv("GENPOS_ENUMERATION_CAP")) {
      try {
        return std::stoull(s);
      } catch (std::exception const&) {
        throw ParseError(std::string("GENPOS_ENUMERATION_CAP: not a number: ") + s);
      }
    }
    return kEnumerationCap;
  }

  double env_timeout() {
    if (char const* s = std::getenv("GENPOS_TIMEOUT")) {
      return std::atof(s);
    }
    return 0;
  }

  Budget budget_of(double seconds) {
    return seconds > 0 ? Budget::seconds(seconds) : Budget{};
  }

  json value_json(unsigned v, Status s, std::string method) {
    return {{"value", v}, {"status", to_string(s)}, {"method", std::move(method)}};
  }

  json elements_json(FiniteGroup const& g, std::vector<index_t> const& xs) {
    json a = json::array();
    for (auto x : xs) {
      a.push_back(g.format(g.element(x)));
    }
    return a;
  }

  json family_json(FiniteGroup const& g, GPFamily const& f) {
    json members = json::array();
    for (auto const& s : f.subgroups) {
      members.push_back({{"order", s.order()}, {"generators", serialize(s)}});
    }
    return {{"members", members}, {"witnesses", elements_json(g, f.witnesses)}};
  }

  // Type-1 members by their vector, type-2 by the index of X among the
  // maximal subgroups of H.
  json sym_family_json(GqpGroup const& g, SymFamily const& f) {
    json members = json::array();
    for (auto const& s : f.members) {
      if (s.kind == SymbolicSubgroup::Kind::affine) {
        members.push_back({{"type", 1}, {"v", format_vec(s.offset)}});
        continue;
      }
      auto const& maxs = g.h_maximals();
      long        idx  = -1;
      for (std::size_t j = 0; j < maxs.size(); ++j) {
        if (maxs[j].members() == *s.part) {
          idx = static_cast<long>(j);
        }
      }
      members.push_back({{"type", 2}, {"h_maximal", idx}});
    }
    json wit = json::array();
    for (auto const& w : f.witnesses) {
      wit.push_back({{"v", format_vec(w.v)}, {"h", g.h().format(g.h().element(w.h))}});
    }
    return {{"members", members}, {"witnesses", wit}};
  }

  struct Report {
    json j;
    int  code = ok;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Report(std::vector<std::string> const& argv) {
      j["tool"]    = "genpos";
      j["version"] = kVersion;
      j["command"] = argv;
    }

    void note_status(std::string const& s) {
      if (s == "fail") {
        code = error;
      } else if ((s == "lower_bound" || s == "skipped") && code == ok) {
        code = partial;
      }
    }

    int emit(bool as_json, std::function<void(std::ostream&)> const& human) {
      j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        human(std::cout);
      }
      return code;
    }
  };

  void human_values(std::ostream& os, json const& j) {
    if (j.contains("group")) {
      os << j["group"].get<std::string>() << "  order " << j["order"] << "\n";
    }
    for (auto const& [k, v] : j["invariants"].items()) {
      os << "  " << k << " = " << v["value"] << "  (" << v["status"].get<std::string>();
      if (v.contains("method")) {
        os << ", " << v["method"].get<std::string>();
      }
      os << ")\n";
    }
  }

  // ---- invariants -------------------------------------------------------

  struct InvArgs {
    std::string group;
    std::string which = "all";
    std::string mode  = "brute";
    double      timeout = -1;
    bool        as_json = false;
  };

  bool is_gqp_spec(FiniteGroup const& g, int& p, int& q) {
    return std::sscanf(g.spec().c_str(), "gqp:%d,%d", &p, &q) == 2;
  }

  int cmd_invariants(InvArgs const& a, Report& rep) {
    double timeout = a.timeout >= 0 ? a.timeout : env_timeout();
    auto   g       = construct(a.group, enumeration_cap());
    rep.j["group"] = g.spec();
    rep.j["order"] = g.order();
    json inv       = json::object();
    bool want_m = a.which == "m" || a.which == "all";
    bool want_md = a.which == "md" || a.which == "all";
    bool want_i = a.which == "i" || a.which == "all";
    bool chief = a.mode == "chief";
    int  p = 0, q = 0;
    bool gqp = is_gqp_spec(g, p, q);

    auto guarded = [&](char const* key, std::function<json()> const& f) {
      try {
        inv[key] = f();
      } catch (CapExceeded const& ex) {
        inv[key] = {{"value", nullptr}, {"status", "skipped"}, {"note", ex.what()}};
      }
      rep.note_status(inv[key]["status"]);
    };

    if (want_m) {
      guarded("m", [&] {
        if (chief) {
          return value_json(m_soluble(g), Status::exact, "complemented chief factors");
        }
        auto r   = m_bruteforce(g, budget_of(timeout));
        auto out = value_json(r.value, r.status, "brute force");
        out["certificate"] = elements_json(g, r.witness.elements);
        return out;
      });
    }
    if (want_md) {
      guarded("md", [&] {
        if (chief && gqp) {
          GqpGroup gg(p, q);
          auto     r = md_gqp(gg, {budget_of(timeout), true});
          auto out = value_json(r.value, r.status, "symbolic search");
          out["certificate"] = sym_family_json(gg, r.family);
          return out;
        }
        auto r   = md_search(g, budget_of(timeout));
        auto out = value_json(r.value, r.status, "general-position search");
        out["certificate"] = family_json(g, r.family);
        return out;
      });
    }
    if (want_i) {
      guarded("i", [&] {
        if (chief && gqp) {
          auto r = invariants_gqp(GqpGroup(p, q), budget_of(timeout));
          return value_json(r.i.value, r.i.status, r.i.method);
        }
        auto r   = i_bruteforce(g, budget_of(timeout));
        auto out = value_json(r.value, r.status, "max of m over subgroup classes");
        out["certificate"] = elements_json(g, r.witness.elements);
        return out;
      });
    }
    rep.j["invariants"] = inv;
    return rep.emit(a.as_json, [&](std::ostream& os) { human_values(os, rep.j); });
  }

  // ---- gqp --------------------------------------------------------------

  struct GqpArgs {
    int         p = 0, q = 0;
    std::string compute = "report";
    double      budget  = -1;
    bool        no_symmetry = false;
    bool        as_json = false;
  };

  // 300 s at p = 3; at p = 5 an exact search has to be asked for with an
  // explicit budget (0 meaning unlimited).
  double default_md_budget(int p) {
    return p <= 3 ? 300 : 60;
  }

  int cmd_gqp(GqpArgs const& a, Report& rep) {
    GqpGroup g(a.p, a.q);
    rep.j["group"] = g.spec();
    rep.j["order"] = g.order();
    double b = a.budget >= 0 ? a.budget : default_md_budget(a.p);
    json   inv = json::object();
    if (a.compute == "md") {
      auto r = md_gqp(g, {budget_of(b), !a.no_symmetry});
      inv["md"] = value_json(r.value, r.status, "symbolic search");
      inv["md"]["nodes"] = r.nodes;
      inv["md"]["certificate"] = sym_family_json(g, r.family);
      rep.note_status(to_string(r.status));
    } else if (a.compute == "family") {
      auto f     = lemma33_family(g);
      auto check = sym_general_position(g, f.members);
      json fam   = sym_family_json(g, check.family);
      fam["size"] = f.members.size();
      fam["general_position"] = check.general_position;
      fam["status"] = check.general_position ? "exact" : "fail";
      rep.j["family"] = fam;
      rep.note_status(fam["status"]);
      inv["md"] = value_json(static_cast<unsigned>(f.members.size()),
                             Status::lower_bound, "explicit conjugate family");
      rep.note_status("lower_bound");
    } else {
      auto r = invariants_gqp(g, budget_of(b));
      for (auto [key, v] : {std::pair{"m", &r.m}, {"md", &r.md}, {"i", &r.i}}) {
        inv[key] = value_json(v->value, v->status, v->method);
        rep.note_status(to_string(v->status));
      }
      inv["md"]["certificate"] = sym_family_json(g, r.md_search.family);
      json base = {{"chief_value", r.base.chief_value},
                   {"sequence_length", r.base.sequence_length}};
      base["sequence_verified"] = r.base.sequence_verified
                                      ? json(*r.base.sequence_verified)
                                      : json(nullptr);
      rep.j["base_certificate"] = base;
    }
    rep.j["invariants"] = inv;
    return rep.emit(a.as_json, [&](std::ostream& os) {
      human_values(os, rep.j);
      if (rep.j.contains("family")) {
        os << "  family of " << rep.j["family"]["size"] << " conjugates, general position: "
           << rep.j["family"]["general_position"] << "\n";
      }
    });
  }

  // ---- verify -----------------------------------------------------------

  struct VerifyArgs {
    std::string   target;
    std::uint64_t max_order = 0;
    unsigned      threads   = 1;
    double        timeout   = -1;
    bool          as_json   = false;
  };

  int cmd_verify(VerifyArgs const& a, Report& rep) {
    VerifyOptions opt;
    opt.max_order     = a.max_order;
    opt.threads       = a.threads;
    opt.group_timeout = a.timeout >= 0 ? a.timeout : env_timeout();
    auto r            = verify(a.target, opt);
    json entries      = json::array();
    for (auto const& e : r.entries) {
      json values = json::object();
      for (auto const& [k, v] : e.values) {
        values[k] = v;
      }
      json x = {{"group", e.spec}, {"order", e.order}, {"status", e.status},
                {"values", values}};
      if (!e.note.empty()) {
        x["note"] = e.note;
      }
      entries.push_back(x);
      rep.note_status(e.status);
    }
    rep.j["target"]     = r.target;
    rep.j["max_order"]  = r.max_order;
    rep.j["checked"]    = r.entries.size();
    rep.j["violations"] = r.violations();
    rep.j["skipped"]    = r.count("skipped");
    rep.j["undecided"]  = r.count("lower_bound");
    rep.j["entries"]    = entries;
    return rep.emit(a.as_json, [&](std::ostream& os) {
      for (auto const& e : r.entries) {
        os << e.spec << "  " << e.status;
        for (auto const& [k, v] : e.values) {
          os << "  " << k << "=" << v;
        }
        if (!e.note.empty()) {
          os << "  (" << e.note << ")";
        }
        os << "\n";
      }
      os << r.target << ": " << r.entries.size() << " groups, " << r.violations()
         << " violations, " << r.count("skipped") << " skipped, "
         << r.count("lower_bound") << " undecided\n";
    });
  }

  // ---- corpus / export --------------------------------------------------

  int cmd_corpus(std::uint64_t max_order, std::vector<std::string> const& filters) {
    CorpusFilter f;
    f.max_order = max_order;
    for (auto const& s : filters) {
      f.predicates.push_back(parse_predicate(s));
    }
    for_each_corpus(f, [](FiniteGroup const& g) {
      std::cout << corpus_json_line(g) << "\n";
    });
    return ok;
  }

  int cmd_export(std::string const& group, std::string const& out) {
    auto g = construct(group, enumeration_cap());
    if (out.empty() || out == "-") {
      std::cout << perm_json(g) << "\n";
    } else {
      export_perm(g, out);
    }
    return ok;
  }

  int cmd_import(std::string const& path, bool as_json) {
    auto g = import_perm(path, enumeration_cap());
    if (as_json) {
      std::cout << json{{"group", g.spec()}, {"order", g.order()}}.dump() << "\n";
    } else {
      std::cout << g.spec() << "  order " << g.order() << "\n";
    }
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Generating-set invariants of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  InvArgs inv;
  auto*   c_inv = app.add_subcommand("invariants", "m, md and i of one group");
  c_inv->add_option("--group", inv.group, "group descriptor")->required();
  c_inv->add_option("--which", inv.which)->check(CLI::IsMember({"m", "md", "i", "all"}));
  c_inv->add_option("--mode", inv.mode)->check(CLI::IsMember({"brute", "chief"}));
  c_inv->add_option("--timeout", inv.timeout, "seconds per search, 0 = none");
  c_inv->add_flag("--json", inv.as_json);

  GqpArgs gq;
  auto*   c_gqp = app.add_subcommand("gqp", "structured computations on G_{q,p}");
  c_gqp->add_option("--p", gq.p)->required();
  c_gqp->add_option("--q", gq.q)->required();
  c_gqp->add_option("--compute", gq.compute)
      ->check(CLI::IsMember({"md", "family", "report"}));
  c_gqp->add_option("--budget", gq.budget, "md search seconds, 0 = unlimited");
  c_gqp->add_flag("--no-symmetry", gq.no_symmetry);
  c_gqp->add_flag("--json", gq.as_json);

  VerifyArgs ver;
  auto*      c_ver = app.add_subcommand("verify", "check an identity across the corpus");
  c_ver->add_option("target", ver.target)->required()->check(CLI::IsMember(verify_targets()));
  c_ver->add_option("--max-order", ver.max_order);
  c_ver->add_option("--threads", ver.threads)->check(CLI::Range(1u, 256u));
  c_ver->add_option("--timeout", ver.timeout, "seconds per search, 0 = none");
  c_ver->add_flag("--json", ver.as_json);

  std::uint64_t            corpus_max = 200;
  std::vector<std::string> filters;
  auto* c_cor = app.add_subcommand("corpus", "list corpus groups as JSON lines");
  c_cor->add_option("--max-order", corpus_max);
  c_cor->add_option("--filter", filters, "soluble, abelian, derived_nilpotent, supersoluble_known");

  std::string exp_group, exp_out;
  auto* c_exp = app.add_subcommand("export", "write a group as permutation JSON");
  c_exp->add_option("--group", exp_group)->required();
  c_exp->add_option("--out", exp_out, "file, or - for stdout");

  std::string imp_path;
  bool        imp_json = false;
  auto* c_imp = app.add_subcommand("import", "read permutation JSON and report the order");
  c_imp->add_option("file", imp_path)->required();
  c_imp->add_flag("--json", imp_json);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : error;
  }

  bool   as_json = inv.as_json || gq.as_json || ver.as_json;
  Report rep(args);
  try {
    if (*c_inv) {
      return cmd_invariants(inv, rep);
    }
    if (*c_gqp) {
      return cmd_gqp(gq, rep);
    }
    if (*c_ver) {
      return cmd_verify(ver, rep);
    }
    if (*c_cor) {
      return cmd_corpus(corpus_max, filters);
    }
    if (*c_exp) {
      return cmd_export(exp_group, exp_out);
    }
    if (*c_imp) {
      return cmd_import(imp_path, imp_json);
    }
  } catch (genpos::Error const& e) {
    if (as_json) {
      rep.j["error"] = e.what();
      std::cout << rep.j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return error;
  }
  return error;
}
