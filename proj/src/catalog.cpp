#include "genpos/catalog.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "genpos/error.hpp"
#include "genpos/kernels.hpp"
#include "genpos/subgroup.hpp"

namespace genpos {

  namespace {

    struct Entry {
      std::uint64_t order;
      std::string   spec;
      bool          nonabelian;

      friend bool operator<(Entry const& a, Entry const& b) {
        return a.order != b.order ? a.order < b.order : a.spec < b.spec;
      }
    };

    // Invariant factor lists d_1 | d_2 | ... | d_k with k >= 2.
    void abelian_specs(std::uint64_t max, std::vector<std::uint64_t>& cur,
                       std::uint64_t prod, std::vector<Entry>& out) {
      if (cur.size() >= 2) {
        std::string s = "abelian:";
        for (std::size_t i = 0; i < cur.size(); ++i) {
          s += (i ? "," : "") + std::to_string(cur[i]);
        }
        out.push_back({prod, s, false});
      }
      std::uint64_t last = cur.empty() ? 1 : cur.back();
      for (std::uint64_t d = cur.empty() ? 2 : last; prod * d <= max; d += last) {
        // Later factors must be multiples of earlier ones; also keep room
        // for at least one more factor when starting out.
        if (cur.empty() && prod * d * d > max) {
          break;
        }
        cur.push_back(d);
        abelian_specs(max, cur, prod * d, out);
        cur.pop_back();
      }
    }

    std::vector<Entry> base_entries(std::uint64_t max) {
      std::vector<Entry> out;
      for (std::uint64_t n = 1; n <= max; ++n) {
        out.push_back({n, "cyclic:" + std::to_string(n), false});
      }
      std::vector<std::uint64_t> cur;
      abelian_specs(max, cur, 1, out);
      for (std::uint64_t n = 3; 2 * n <= max; ++n) {
        out.push_back({2 * n, "dihedral:" + std::to_string(n), true});
      }
      for (std::uint64_t n = 8; n <= max; n *= 2) {
        out.push_back({n, "quaternion:" + std::to_string(n), true});
      }
      for (auto [spec, order] : {std::pair<char const*, std::uint64_t>{"sym:3", 6},
                                 {"sym:4", 24},
                                 {"alt:4", 12},
                                 {"heis:3", 27},
                                 {"metacyclic:9,3,4", 27},
                                 {"heis:5", 125},
                                 {"metacyclic:25,5,6", 125},
                                 {"gqp:2,3", 72}}) {
        if (order <= max) {
          out.push_back({order, spec, true});
        }
      }
      // C_q x| C_p with p odd; p = 2 is the dihedral family.
      for (std::uint64_t p = 3; p * (p + 1) <= max; ++p) {
        if (!is_prime(p)) {
          continue;
        }
        for (std::uint64_t q = p + 1; p * q <= max; ++q) {
          if (is_prime(q) && (q - 1) % p == 0) {
            int c = least_root_of_unity(static_cast<int>(p), static_cast<int>(q));
            out.push_back({p * q,
                           "metacyclic:" + std::to_string(q) + ","
                               + std::to_string(p) + "," + std::to_string(c),
                           true});
          }
        }
      }
      for (std::uint64_t p = 2; p <= max; ++p) {
        if (!is_prime(p)) {
          continue;
        }
        for (std::uint64_t q = p, f = 1; q * (q - 1) <= max; q *= p, ++f) {
          if (q < 3) {
            continue;
          }
          std::uint64_t order = q * (q - 1);
          for (std::uint64_t n = 1; order <= max; ++n, order *= q) {
            std::string field = f == 1 ? std::to_string(p)
                                       : std::to_string(p) + "^" + std::to_string(f);
            out.push_back({order, "fieldmod:" + field + "," + std::to_string(n),
                           true});
          }
        }
      }
      return out;
    }

  }  // namespace

  Predicate parse_predicate(std::string const& name) {
    if (name == "soluble") {
      return Predicate::soluble;
    }
    if (name == "abelian") {
      return Predicate::abelian;
    }
    if (name == "derived_nilpotent") {
      return Predicate::derived_nilpotent;
    }
    if (name == "supersoluble_known") {
      return Predicate::supersoluble_known;
    }
    throw ParseError("unknown corpus predicate '" + name + "'");
  }

  std::string to_string(Predicate p) {
    switch (p) {
      case Predicate::soluble:
        return "soluble";
      case Predicate::abelian:
        return "abelian";
      case Predicate::derived_nilpotent:
        return "derived_nilpotent";
      case Predicate::supersoluble_known:
        return "supersoluble_known";
    }
    return "?";
  }

  std::vector<std::string> corpus_specs(std::uint64_t max_order) {
    if (max_order > kCorpusMaxOrder) {
      throw PreconditionError("corpus: max order " + std::to_string(max_order)
                              + " exceeds " + std::to_string(kCorpusMaxOrder));
    }
    auto bases = base_entries(max_order);
    std::set<Entry> all(bases.begin(), bases.end());
    for (auto const& a : bases) {
      if (!a.nonabelian) {
        continue;
      }
      for (auto const& b : bases) {
        if (b.order < 2 || a.order * b.order > max_order) {
          continue;
        }
        if (b.nonabelian && b.spec < a.spec) {
          continue;
        }
        all.insert({a.order * b.order, "direct(" + a.spec + "," + b.spec + ")",
                    true});
      }
    }
    std::vector<std::string> out;
    for (auto const& e : all) {
      out.push_back(e.spec);
    }
    return out;
  }

  bool satisfies(FiniteGroup const& g, Predicate p) {
    switch (p) {
      case Predicate::soluble:
        return is_soluble(g);
      case Predicate::abelian:
        return is_abelian(whole_group(g));
      case Predicate::derived_nilpotent:
        return is_nilpotent(derived_subgroup(g));
      case Predicate::supersoluble_known: {
        if (!is_soluble(g)) {
          return false;
        }
        for (auto const& f : chief_series(g).factors) {
          if (!is_prime(f.order)) {
            return false;
          }
        }
        return true;
      }
    }
    return false;
  }

  void for_each_corpus(CorpusFilter const&                            filter,
                       std::function<void(FiniteGroup const&)> const& visit) {
    for (auto const& spec : corpus_specs(filter.max_order)) {
      auto g = construct(spec);
      bool ok = true;
      for (auto p : filter.predicates) {
        if (!satisfies(g, p)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        visit(g);
      }
    }
  }

  std::vector<FiniteGroup> corpus(CorpusFilter const& filter) {
    std::vector<FiniteGroup> out;
    for_each_corpus(filter, [&](FiniteGroup const& g) { out.push_back(g); });
    return out;
  }

  FiniteGroup build_fieldmod(int p, int f, int n) {
    std::string field = f == 1 ? std::to_string(p)
                               : std::to_string(p) + "^" + std::to_string(f);
    return construct("fieldmod:" + field + "," + std::to_string(n),
                     kLatticeCap);
  }

  std::string corpus_json_line(FiniteGroup const& g) {
    nlohmann::json j;
    j["spec"]  = g.spec();
    j["order"] = g.order();
    for (auto p : {Predicate::soluble, Predicate::abelian,
                   Predicate::derived_nilpotent, Predicate::supersoluble_known}) {
      j[to_string(p)] = satisfies(g, p);
    }
    return j.dump();
  }

}  // namespace genpos
