#include "genpos/verify.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "genpos/catalog.hpp"
#include "genpos/error.hpp"
#include "genpos/group_spec.hpp"

namespace genpos {

  namespace {

    using Check = std::function<std::optional<VerifyEntry>(FiniteGroup const&)>;

    struct Ctx {
      VerifyOptions const& opt;

      Budget budget() const {
        return opt.group_timeout > 0 ? Budget::seconds(opt.group_timeout)
                                     : Budget{};
      }

      MResult m(FiniteGroup const& g) const {
        if (opt.cache != nullptr) {
          if (auto hit = opt.cache->find(g.spec())) {
            return *hit;
          }
        }
        auto r = m_bruteforce(g, budget());
        if (opt.cache != nullptr && r.status == Status::exact) {
          opt.cache->store(g.spec(), r);
        }
        return r;
      }
    };

    VerifyEntry entry_for(FiniteGroup const& g) {
      VerifyEntry e;
      e.spec  = g.spec();
      e.order = g.order();
      return e;
    }

    void mark(VerifyEntry& e, Status s) {
      if (s == Status::lower_bound && e.status == "exact") {
        e.status = "lower_bound";
      }
    }

    void fail(VerifyEntry& e, std::string note) {
      e.status = "fail";
      e.note   = std::move(note);
    }

    bool all_exact(VerifyEntry const& e) {
      return e.status == "exact";
    }

    Check thm1(Ctx const& c) {
      return [&c](FiniteGroup const& g) -> std::optional<VerifyEntry> {
        if (!satisfies(g, Predicate::derived_nilpotent)) {
          return std::nullopt;
        }
        auto e  = entry_for(g);
        auto m  = c.m(g);
        auto md = md_search(g, c.budget());
        e.values = {{"m", m.value}, {"md", md.value}};
        mark(e, m.status);
        mark(e, md.status);
        if (all_exact(e) && m.value != md.value) {
          fail(e, "md != m");
        }
        return e;
      };
    }

    Check remark_m2(Ctx const& c) {
      return [&c](FiniteGroup const& g) -> std::optional<VerifyEntry> {
        if (!satisfies(g, Predicate::soluble)) {
          return std::nullopt;
        }
        auto e     = entry_for(g);
        auto m     = c.m(g);
        auto chief = m_soluble(g);
        bool dn    = satisfies(g, Predicate::derived_nilpotent);
        e.values   = {{"m", m.value}, {"m_chief", chief}, {"derived_nilpotent", dn}};
        mark(e, m.status);
        if (!all_exact(e)) {
          return e;
        }
        if (m.value != chief) {
          fail(e, "brute force and chief-series m differ");
        } else if (m.value <= 2 && !dn) {
          fail(e, "m <= 2 but the derived subgroup is not nilpotent");
        }
        return e;
      };
    }

    Check abelian_families(Ctx const& c) {
      return [&c](FiniteGroup const& g) -> std::optional<VerifyEntry> {
        if (!satisfies(g, Predicate::abelian)) {
          return std::nullopt;
        }
        auto e   = entry_for(g);
        auto r   = lemma24_check(g, true, c.budget());
        e.values = {{"largest_family", r.largest}, {"m", r.m}};
        mark(e, r.status);
        if (!r.holds()) {
          fail(e, "general-position family larger than m");
        }
        return e;
      };
    }

    Check supplement_families(Ctx const&) {
      return [](FiniteGroup const& g) -> std::optional<VerifyEntry> {
        if (g.spec().rfind("fieldmod:", 0) != 0) {
          return std::nullopt;
        }
        auto e   = entry_for(g);
        auto r   = lemma22_check(g);
        e.values = {{"dim", r.dim},
                    {"supplements", r.supplements},
                    {"families", r.families},
                    {"largest_family", r.largest}};
        if (!r.holds()) {
          fail(e, r.violations.front());
        }
        return e;
      };
    }

    Check chain(Ctx const& c) {
      return [&c](FiniteGroup const& g) -> std::optional<VerifyEntry> {
        auto e  = entry_for(g);
        auto m  = c.m(g);
        auto md = md_search(g, c.budget());
        auto i  = i_bruteforce(g, c.budget());
        e.values = {{"m", m.value}, {"md", md.value}, {"i", i.value}};
        mark(e, m.status);
        mark(e, md.status);
        mark(e, i.status);
        if (all_exact(e) && !(m.value <= md.value && md.value <= i.value)) {
          fail(e, "m <= md <= i fails");
        }
        return e;
      };
    }

    Check frattini_invariance(Ctx const& c) {
      return [&c](FiniteGroup const& g) -> std::optional<VerifyEntry> {
        auto e    = entry_for(g);
        auto phi  = frattini(g);
        auto q    = quotient(g, phi).group;
        auto m    = c.m(g);
        auto mq   = m_bruteforce(q, c.budget());
        auto md   = md_search(g, c.budget());
        auto mdq  = md_search(q, c.budget());
        e.values = {{"frattini_order", phi.order()}, {"m", m.value},
                    {"m_quotient", mq.value},        {"md", md.value},
                    {"md_quotient", mdq.value}};
        for (auto s : {m.status, mq.status, md.status, mdq.status}) {
          mark(e, s);
        }
        if (all_exact(e) && (m.value != mq.value || md.value != mdq.value)) {
          fail(e, "value changes modulo the Frattini subgroup");
        }
        return e;
      };
    }

    Check make_check(std::string const& target, Ctx const& c) {
      if (target == "thm1") {
        return thm1(c);
      }
      if (target == "remark-m2") {
        return remark_m2(c);
      }
      if (target == "lemma24") {
        return abelian_families(c);
      }
      if (target == "cor23") {
        return supplement_families(c);
      }
      if (target == "chain") {
        return chain(c);
      }
      if (target == "frattini-invariance") {
        return frattini_invariance(c);
      }
      throw PreconditionError("verify: unknown target '" + target + "'");
    }

  }  // namespace

  std::size_t VerifyReport::count(std::string const& status) const {
    std::size_t n = 0;
    for (auto const& e : entries) {
      n += e.status == status;
    }
    return n;
  }

  std::optional<MResult> MCache::find(std::string const& spec) const {
    std::lock_guard lock(mu_);
    auto            it = map_.find(spec);
    if (it == map_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void MCache::store(std::string const& spec, MResult const& r) {
    std::lock_guard lock(mu_);
    map_[spec] = r;
  }

  std::vector<std::string> verify_targets() {
    return {"thm1", "remark-m2", "lemma24", "cor23", "chain",
            "frattini-invariance"};
  }

  std::uint64_t default_max_order(std::string const& target) {
    if (target == "thm1" || target == "remark-m2") {
      return 200;
    }
    if (target == "lemma24") {
      return 128;
    }
    if (target == "cor23") {
      return 48;
    }
    if (target == "chain" || target == "frattini-invariance") {
      return 100;
    }
    throw PreconditionError("verify: unknown target '" + target + "'");
  }

  VerifyReport verify(std::string const& target, VerifyOptions const& opt) {
    VerifyReport rep;
    rep.target    = target;
    rep.max_order = opt.max_order != 0 ? opt.max_order : default_max_order(target);
    Ctx   ctx{opt};
    Check check = make_check(target, ctx);

    auto specs = corpus_specs(rep.max_order);
    std::vector<std::optional<VerifyEntry>> slots(specs.size());
    std::atomic<std::size_t>                next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < specs.size();) {
        try {
          slots[i] = check(construct(specs[i]));
        } catch (CapExceeded const& ex) {
          VerifyEntry e;
          e.spec   = specs[i];
          e.status = "skipped";
          e.note   = ex.what();
          slots[i] = e;
        }
      }
    };
    unsigned n = std::max(1u, opt.threads);
    if (n == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto& s : slots) {
      if (s) {
        rep.entries.push_back(std::move(*s));
      }
    }
    return rep;
  }

}  // namespace genpos
