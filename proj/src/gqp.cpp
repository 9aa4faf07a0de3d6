#include "genpos/gqp.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "genpos/error.hpp"
#include "genpos/group_spec.hpp"

namespace genpos {

  namespace {

    std::uint64_t upow(std::uint64_t b, int e) {
      std::uint64_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }

    int modinv(int a, int q) {
      long long r = 1, b = a % q, e = q - 2;
      while (e > 0) {
        if (e & 1) {
          r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
      }
      return static_cast<int>(r);
    }

    // Row-echelon basis over F_q kept in reduced form. Rows are normalized
    // to a leading 1.
    class Echelon {
     public:
      Echelon(int n, int q) : n_(n), q_(q) {}

      // Reduces v against the basis; returns true and stores it when it was
      // independent.
      bool insert(Vec v) {
        reduce(v);
        int lead = 0;
        while (lead < n_ && v[lead] == 0) {
          ++lead;
        }
        if (lead == n_) {
          return false;
        }
        int inv = modinv(v[lead], q_);
        for (auto& x : v) {
          x = static_cast<std::int32_t>(static_cast<long long>(x) * inv % q_);
        }
        for (auto& r : rows_) {
          if (r[lead] != 0) {
            axpy(r, v, q_ - r[lead]);
          }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
      }

      void reduce(Vec& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
          int c = v[pivots_[k]];
          if (c != 0) {
            axpy(v, rows_[k], q_ - c);
          }
        }
      }

      std::size_t rank() const {
        return rows_.size();
      }
      std::vector<Vec> const& rows() const {
        return rows_;
      }
      std::vector<int> const& pivots() const {
        return pivots_;
      }

     private:
      void axpy(Vec& y, Vec const& x, int a) const {
        for (int i = 0; i < n_; ++i) {
          y[i] = static_cast<std::int32_t>(
              (y[i] + static_cast<long long>(a) * x[i]) % q_);
        }
      }

      int              n_, q_;
      std::vector<Vec> rows_;
      std::vector<int> pivots_;
    };

    // Basis of the null space of the rows of `eq`, in reduced echelon form.
    std::vector<Vec> null_space(Echelon const& eq, int n, int q) {
      std::vector<bool> is_pivot(n, false);
      for (int c : eq.pivots()) {
        is_pivot[c] = true;
      }
      Echelon out(n, q);
      for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) {
          continue;
        }
        Vec x(n, 0);
        x[f] = 1;
        for (std::size_t k = 0; k < eq.rows().size(); ++k) {
          x[eq.pivots()[k]]
              = static_cast<std::int32_t>((q - eq.rows()[k][f]) % q);
        }
        out.insert(std::move(x));
      }
      auto rows = out.rows();
      auto piv  = out.pivots();
      std::vector<std::size_t> ord(rows.size());
      for (std::size_t i = 0; i < ord.size(); ++i) {
        ord[i] = i;
      }
      std::sort(ord.begin(), ord.end(),
                [&](std::size_t a, std::size_t b) { return piv[a] < piv[b]; });
      std::vector<Vec> sorted;
      for (auto i : ord) {
        sorted.push_back(rows[i]);
      }
      return sorted;
    }

  }  // namespace

  struct GqpGroup::Cache {
    std::mutex                                                        mu;
    std::unordered_map<std::uint64_t, std::shared_ptr<Bitset const>> cent;
  };

  GqpGroup::GqpGroup(int p, int q)
      : p_(p),
        q_(q),
        action_(p > 1 && q > 2 && (q - 1) % p == 0 && is_prime(p)
                        && is_prime(q)
                    ? WreathAction(p, q, least_root_of_unity(p, q))
                    : WreathAction(1, 2, 1)),
        v_size_(0),
        h_(construct("cyclic:1")),
        cache_(std::make_shared<Cache>()) {
    std::string text = spec();
    if (p < 2 || q < 2 || !is_prime(p) || !is_prime(q)) {
      throw PreconditionError(text + ": p and q must be prime");
    }
    if ((q - 1) % p != 0) {
      throw PreconditionError(text + ": " + std::to_string(p)
                              + " does not divide " + std::to_string(q) + "-1");
    }
    if (p > 5) {
      throw CapExceeded(text + ": H = C_p wr C_p is too large to enumerate");
    }
    v_size_ = upow(static_cast<std::uint64_t>(q), p);
    h_      = construct("wreath:" + std::to_string(p));
    hpay_.resize(h_.size() * static_cast<std::size_t>(p + 1));
    for (index_t i = 0; i < h_.size(); ++i) {
      auto const& pl = h_.element(i).payload;
      std::copy(pl.begin(), pl.end(), hpay_.begin() + i * (p + 1));
    }
    h_gens_ = h_.generator_indices();
    auto whole = whole_group(h_);
    h_all_     = std::make_shared<Bitset const>(whole.members());
    h_max_     = maximal_subgroups(whole);
    std::sort(h_max_.begin(), h_max_.end(), canonical_less);
    h_phi_ = std::make_shared<Subgroup>(frattini(whole));
  }

  std::string GqpGroup::spec() const {
    return "gqp:" + std::to_string(p_) + "," + std::to_string(q_);
  }

  Vec GqpGroup::vector_at(std::uint64_t code) const {
    Vec v(p_);
    for (int i = p_ - 1; i >= 0; --i) {
      v[i] = static_cast<std::int32_t>(code % q_);
      code /= q_;
    }
    return v;
  }

  std::uint64_t GqpGroup::code_of(Vec const& v) const {
    std::uint64_t code = 0;
    for (int i = 0; i < p_; ++i) {
      code = code * q_ + static_cast<std::uint64_t>(v[i]);
    }
    return code;
  }

  Vec GqpGroup::unit(int i) const {
    Vec v(p_, 0);
    v[i] = 1;
    return v;
  }

  Vec GqpGroup::sub(Vec const& a, Vec const& b) const {
    Vec r(p_);
    for (int i = 0; i < p_; ++i) {
      r[i] = (a[i] - b[i] + q_) % q_;
    }
    return r;
  }

  Vec GqpGroup::action(Vec const& v, index_t h) const {
    Vec out(p_);
    action_.act(v.data(), hpay_.data() + h * (p_ + 1), out.data());
    return out;
  }

  std::shared_ptr<Bitset const> GqpGroup::centralizer(Vec const& d) const {
    std::uint64_t code = code_of(d);
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->cent.find(code);
      if (it != cache_->cent.end()) {
        return it->second;
      }
    }
    Bitset c(h_.size());
    Vec    out(p_);
    for (index_t h = 0; h < h_.size(); ++h) {
      action_.act(d.data(), hpay_.data() + h * (p_ + 1), out.data());
      if (out == d) {
        c.set(h);
      }
    }
    auto ptr = std::make_shared<Bitset const>(std::move(c));
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->cent.size() < 20000) {
      cache_->cent.emplace(code, ptr);
    }
    return ptr;
  }

  std::vector<Vec> GqpGroup::fixed_space(Bitset const& k) const {
    // v (M_h - I) = 0 for every h in k, one equation per output coordinate.
    Echelon eq(p_, q_);
    k.for_each([&](std::size_t h) {
      if (eq.rank() == static_cast<std::size_t>(p_)) {
        return;
      }
      std::int32_t const* pl = hpay_.data() + h * (p_ + 1);
      int                 s  = pl[p_];
      for (int j = 0; j < p_; ++j) {
        Vec row(p_, 0);
        int i  = ((j - s) % p_ + p_) % p_;
        row[i] = action_.cpow(pl[i]);
        row[j] = (row[j] - 1 + q_) % q_;
        eq.insert(std::move(row));
      }
    });
    return null_space(eq, p_, q_);
  }

  bool GqpGroup::v_irreducible() const {
    for (std::uint64_t code = 1; code < v_size_; ++code) {
      Vec v = vector_at(code);
      int lead = 0;
      while (v[lead] == 0) {
        ++lead;
      }
      if (v[lead] != 1) {
        continue;
      }
      Echelon          span(p_, q_);
      std::deque<Vec>  todo{v};
      span.insert(v);
      while (!todo.empty() && span.rank() < static_cast<std::size_t>(p_)) {
        Vec x = todo.front();
        todo.pop_front();
        for (index_t g : h_gens_) {
          Vec y = action(x, g);
          if (span.insert(y)) {
            todo.push_back(y);
          }
        }
      }
      if (span.rank() != static_cast<std::size_t>(p_)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::uint64_t> GqpGroup::orbit_representatives() const {
    std::vector<bool>          seen(v_size_, false);
    std::vector<std::uint64_t> reps;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t code = 0; code < v_size_; ++code) {
      if (seen[code]) {
        continue;
      }
      reps.push_back(code);
      seen[code] = true;
      stack.push_back(code);
      while (!stack.empty()) {
        Vec x = vector_at(stack.back());
        stack.pop_back();
        for (index_t g : h_gens_) {
          std::uint64_t y = code_of(action(x, g));
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    return reps;
  }

  unsigned GqpGroup::m_structural() const {
    if (!v_irreducible()) {
      throw std::logic_error(spec() + ": V is not an irreducible H-module");
    }
    // V is minimal normal with complement H; the chief factors of H are
    // central, and the complemented ones are those above Phi(H).
    std::uint64_t idx = h_.order() / h_phi_->order();
    unsigned      d   = 0;
    while (idx > 1) {
      idx /= static_cast<std::uint64_t>(p_);
      ++d;
    }
    return 1 + d;
  }

  Element GqpGroup::embed(Vec const& v, index_t h) const {
    std::vector<std::int32_t> pl(v.begin(), v.end());
    pl.insert(pl.end(), hpay_.begin() + h * (p_ + 1),
              hpay_.begin() + (h + 1) * (p_ + 1));
    return Element(std::move(pl));
  }

  SymbolicSubgroup full_v(std::shared_ptr<Bitset const> x) {
    return {SymbolicSubgroup::Kind::full_v, {}, std::move(x)};
  }

  SymbolicSubgroup affine(Vec v, std::shared_ptr<Bitset const> k) {
    return {SymbolicSubgroup::Kind::affine, std::move(v), std::move(k)};
  }

  std::vector<int> delta(Vec const& a, Vec const& b) {
    if (a.size() != b.size()) {
      throw PreconditionError("delta: vectors of different length");
    }
    if (a == b) {
      throw PreconditionError("delta: the vectors are equal");
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) {
        out.push_back(static_cast<int>(i) + 1);
      }
    }
    return out;
  }

  namespace {

    // {h in k : d^h = d}
    std::shared_ptr<Bitset const> fixing(GqpGroup const& g, Bitset const& k,
                                         Vec const& d,
                                         std::shared_ptr<Bitset const> share) {
      if (std::all_of(d.begin(), d.end(), [](std::int32_t x) { return x == 0; })) {
        return share ? share : std::make_shared<Bitset const>(k);
      }
      Bitset out(k.size());
      k.for_each([&](std::size_t h) {
        if (g.action(d, static_cast<index_t>(h)) == d) {
          out.set(h);
        }
      });
      if (share && out.count() == k.count()) {
        return share;
      }
      return std::make_shared<Bitset const>(std::move(out));
    }

    std::shared_ptr<Bitset const> meet_parts(
        std::shared_ptr<Bitset const> const& a,
        std::shared_ptr<Bitset const> const& b) {
      if (a == b || b->is_subset_of(*a)) {
        return b;
      }
      if (a->is_subset_of(*b)) {
        return a;
      }
      return std::make_shared<Bitset const>(*a & *b);
    }

  }  // namespace

  SymbolicSubgroup conj_meet(GqpGroup const& g, std::vector<Vec> const& vs) {
    if (vs.empty()) {
      throw PreconditionError("conj_meet: empty list");
    }
    auto k = g.h_all();
    for (std::size_t i = 1; i < vs.size(); ++i) {
      k = fixing(g, *k, g.sub(vs[i], vs[0]), k);
    }
    return affine(vs[0], k);
  }

  SymbolicSubgroup sym_intersect(GqpGroup const& g, SymbolicSubgroup const& a,
                                 SymbolicSubgroup const& b) {
    using K = SymbolicSubgroup::Kind;
    if (a.kind == K::full_v && b.kind == K::full_v) {
      return full_v(meet_parts(a.part, b.part));
    }
    if (a.kind == K::affine && b.kind == K::full_v) {
      return affine(a.offset, meet_parts(a.part, b.part));
    }
    if (a.kind == K::full_v && b.kind == K::affine) {
      return affine(b.offset, meet_parts(b.part, a.part));
    }
    auto k = meet_parts(a.part, b.part);
    return affine(a.offset, fixing(g, *k, g.sub(a.offset, b.offset), k));
  }

  bool sym_equal(GqpGroup const& g, SymbolicSubgroup const& a,
                 SymbolicSubgroup const& b) {
    if (a.kind != b.kind) {
      return false;
    }
    if (a.part != b.part && !(*a.part == *b.part)) {
      return false;
    }
    if (a.kind == SymbolicSubgroup::Kind::full_v) {
      return true;
    }
    Vec  d  = g.sub(a.offset, b.offset);
    bool eq = true;
    a.part->for_each([&](std::size_t h) {
      if (eq && g.action(d, static_cast<index_t>(h)) != d) {
        eq = false;
      }
    });
    return eq;
  }

  std::uint64_t sym_order(GqpGroup const& g, SymbolicSubgroup const& s) {
    std::uint64_t k = s.part->count();
    return s.kind == SymbolicSubgroup::Kind::full_v ? k * g.v_size() : k;
  }

  bool sym_contains(GqpGroup const& g, SymbolicSubgroup const& s, Vec const& u,
                    index_t h) {
    if (h >= s.part->size() || !s.part->test(h)) {
      return false;
    }
    if (s.kind == SymbolicSubgroup::Kind::full_v) {
      return true;
    }
    return u == g.sub(s.offset, g.action(s.offset, h));
  }

  SymbolicSubgroup canonical(GqpGroup const& g, SymbolicSubgroup const& s) {
    if (s.kind == SymbolicSubgroup::Kind::full_v) {
      return s;
    }
    // Subtracting any fixed vector leaves the set unchanged; reducing by the
    // echelon basis clears the pivot coordinates, which gives the least
    // representative in lexicographic order.
    auto basis = g.fixed_space(*s.part);
    Vec  v     = s.offset;
    for (auto const& row : basis) {
      int lead = 0;
      while (row[lead] == 0) {
        ++lead;
      }
      int c = v[lead];
      if (c != 0) {
        for (int i = 0; i < g.p(); ++i) {
          v[i] = static_cast<std::int32_t>(
              (v[i] + static_cast<long long>(g.q() - c) * row[i]) % g.q());
        }
      }
    }
    return affine(std::move(v), s.part);
  }

  Bitset to_dense(GqpGroup const& g, SymbolicSubgroup const& s,
                  FiniteGroup const& dense) {
    Bitset out(dense.size());
    s.part->for_each([&](std::size_t hs) {
      auto h = static_cast<index_t>(hs);
      if (s.kind == SymbolicSubgroup::Kind::affine) {
        out.set(dense.index_of(
            g.embed(g.sub(s.offset, g.action(s.offset, h)), h)));
        return;
      }
      for (std::uint64_t code = 0; code < g.v_size(); ++code) {
        out.set(dense.index_of(g.embed(g.vector_at(code), h)));
      }
    });
    return out;
  }

  std::vector<SymbolicSubgroup> maximal_subgroups_structural(
      GqpGroup const& g) {
    std::vector<SymbolicSubgroup> out;
    out.reserve(g.v_size() + g.h_maximals().size());
    for (std::uint64_t code = 0; code < g.v_size(); ++code) {
      out.push_back(affine(g.vector_at(code), g.h_all()));
    }
    for (auto const& x : g.h_maximals()) {
      out.push_back(full_v(std::make_shared<Bitset const>(x.members())));
    }
    return out;
  }

  namespace {

    // An element of outer that is not in inner, given inner < outer.
    std::optional<SymElement> separating(GqpGroup const&         g,
                                         SymbolicSubgroup const& outer,
                                         SymbolicSubgroup const& inner) {
      std::optional<SymElement> found;
      Vec                       zero(g.p(), 0);
      Vec                       e0 = g.unit(0);
      outer.part->for_each([&](std::size_t hs) {
        if (found) {
          return;
        }
        auto h = static_cast<index_t>(hs);
        if (outer.kind == SymbolicSubgroup::Kind::affine) {
          Vec u = g.sub(outer.offset, g.action(outer.offset, h));
          if (!sym_contains(g, inner, u, h)) {
            found = SymElement{u, h};
          }
          return;
        }
        for (auto const* u : {&zero, &e0}) {
          if (!sym_contains(g, inner, *u, h)) {
            found = SymElement{*u, h};
            return;
          }
        }
      });
      return found;
    }

    SymbolicSubgroup meet_all(GqpGroup const&                      g,
                              std::vector<SymbolicSubgroup> const& fam,
                              std::size_t                          skip) {
      SymbolicSubgroup acc = full_v(g.h_all());
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (j != skip) {
          acc = sym_intersect(g, acc, fam[j]);
        }
      }
      return acc;
    }

  }  // namespace

  SymGPCheck sym_general_position(GqpGroup const&                      g,
                                  std::vector<SymbolicSubgroup> const& family) {
    SymGPCheck out;
    out.family.members = family;
    auto all = meet_all(g, family, family.size());
    auto n   = sym_order(g, all);
    for (std::size_t i = 0; i < family.size(); ++i) {
      auto li = meet_all(g, family, i);
      if (sym_order(g, li) <= n) {
        out.family.witnesses.clear();
        return out;
      }
      auto w = separating(g, li, all);
      if (!w) {
        throw std::logic_error("sym_general_position: no separating element");
      }
      out.family.witnesses.push_back(*w);
    }
    out.general_position = true;
    return out;
  }

  SymFamily lemma33_family(GqpGroup const& g) {
    SymFamily fam;
    for (int i = 0; i < g.p(); ++i) {
      fam.members.push_back(affine(g.unit(i), g.h_all()));
      // h_i = diag(1,..,c,..,1): fixes e_j for j != i and moves e_i.
      std::vector<std::int32_t> pl(g.p() + 1, 0);
      pl[i] = 1;
      fam.witnesses.push_back(
          SymElement{Vec(g.p(), 0), g.h().index_of(Element(pl))});
    }
    auto check = sym_general_position(g, fam.members);
    if (!check.general_position) {
      throw std::logic_error(g.spec() + ": explicit family is not in general position");
    }
    auto all = meet_all(g, fam.members, fam.members.size());
    for (int i = 0; i < g.p(); ++i) {
      auto const& w = fam.witnesses[i];
      if (!sym_contains(g, meet_all(g, fam.members, i), w.v, w.h)
          || sym_contains(g, all, w.v, w.h)) {
        throw std::logic_error(g.spec() + ": explicit witness fails");
      }
    }
    return fam;
  }

  namespace {

    class MdGqpSearch {
     public:
      MdGqpSearch(GqpGroup const& g, MdGqpOptions const& opt)
          : g_(g), opt_(opt) {
        for (auto const& x : g.h_maximals()) {
          type2_.push_back(full_v(std::make_shared<Bitset const>(x.members())));
        }
        if (opt.symmetry) {
          for (auto code : g.orbit_representatives()) {
            if (code != 0) {
              reps_.push_back(code);
            }
          }
        }
      }

      MdGqpResult run() {
        auto seed   = lemma33_family(g_);
        result_.value  = static_cast<unsigned>(seed.members.size());
        result_.family = seed;
        limit_         = static_cast<unsigned>(2 * g_.p() + 1);
        Node root{{}, full_v(g_.h_all()), {}};
        if (opt_.symmetry) {
          // No complement at all: only type-2 members.
          extend_type2(root, 0);
          // The first complement is H itself; the second an orbit
          // representative; the rest are any vectors above it.
          Node n1;
          if (add(root, affine(Vec(g_.p(), 0), g_.h_all()), n1)) {
            visit(n1);
            extend_type2(n1, 0);
            for (auto code : reps_) {
              if (!promising(n1)) {
                break;
              }
              if (stop_) {
                break;
              }
              Node n2;
              if (add(n1, affine(g_.vector_at(code), g_.h_all()), n2)) {
                visit(n2);
                extend_free(n2, code + 1);
              }
            }
          }
        } else {
          extend_free(root, 0);
        }
        result_.status = stop_ ? Status::lower_bound : Status::exact;
        for (auto& m : result_.family.members) {
          m = canonical(g_, m);
        }
        return result_;
      }

     private:
      struct Node {
        std::vector<SymbolicSubgroup> members;
        SymbolicSubgroup              meet;
        std::vector<SymbolicSubgroup> leave;  // meets omitting one member
      };

      bool promising(Node const& n) const {
        if (n.members.size() >= limit_) {
          return false;
        }
        return n.members.size() + omega(sym_order(g_, n.meet)) > result_.value;
      }

      bool add(Node const& n, SymbolicSubgroup const& m, Node& out) {
        ++result_.nodes;
        if ((result_.nodes & 1023) == 0 && opt_.budget.expired()) {
          stop_ = true;
        }
        auto d      = sym_intersect(g_, n.meet, m);
        auto dorder = sym_order(g_, d);
        if (dorder >= sym_order(g_, n.meet)) {
          return false;
        }
        out.leave.clear();
        out.leave.reserve(n.leave.size() + 1);
        for (auto const& l : n.leave) {
          auto x = sym_intersect(g_, l, m);
          if (sym_order(g_, x) <= dorder) {
            return false;
          }
          out.leave.push_back(std::move(x));
        }
        out.leave.push_back(n.meet);
        out.members = n.members;
        out.members.push_back(m);
        out.meet = std::move(d);
        return true;
      }

      void visit(Node const& n) {
        if (n.members.size() > result_.value) {
          auto check = sym_general_position(g_, n.members);
          if (!check.general_position) {
            throw std::logic_error("md_gqp: search state disagrees with check");
          }
          result_.value  = static_cast<unsigned>(n.members.size());
          result_.family = check.family;
        }
      }

      void extend_type2(Node const& n, std::size_t from) {
        if (!promising(n)) {
          return;
        }
        std::size_t used = 0;
        for (auto const& m : n.members) {
          used += m.kind == SymbolicSubgroup::Kind::full_v;
        }
        if (opt_.symmetry && used >= 2) {
          return;
        }
        for (std::size_t j = from; j < type2_.size() && !stop_; ++j) {
          Node next;
          if (add(n, type2_[j], next)) {
            visit(next);
            extend_type2(next, j + 1);
          }
        }
      }

      void extend_free(Node const& n, std::uint64_t from) {
        if (!promising(n)) {
          return;
        }
        for (std::uint64_t code = from; code < g_.v_size() && !stop_; ++code) {
          Node next;
          if (add(n, affine(g_.vector_at(code), g_.h_all()), next)) {
            visit(next);
            extend_free(next, code + 1);
          }
        }
        extend_type2(n, 0);
      }

      GqpGroup const&               g_;
      MdGqpOptions                  opt_;
      std::vector<SymbolicSubgroup> type2_;
      std::vector<std::uint64_t>    reps_;
      MdGqpResult                   result_;
      unsigned                      limit_ = 0;
      bool                          stop_ = false;
    };

  }  // namespace

  MdGqpResult md_gqp(GqpGroup const& g, MdGqpOptions const& opt) {
    return MdGqpSearch(g, opt).run();
  }

  BaseCertificate base_certificate(GqpGroup const& g, std::size_t cap) {
    BaseCertificate out;
    int             p = g.p(), q = g.q();
    auto            factor
        = construct("metacyclic:" + std::to_string(q) + "," + std::to_string(p)
                    + "," + std::to_string(g.c()));
    out.chief_value = m_soluble(factor) * static_cast<unsigned>(p);

    // t_i = (e_i, 1) and h_i = (0, diag(c at i)).
    std::vector<Element> seq;
    for (int i = 0; i < p; ++i) {
      std::vector<std::int32_t> t(2 * p + 1, 0), h(2 * p + 1, 0);
      t[i]     = 1;
      h[p + i] = 1;
      seq.emplace_back(t);
      seq.emplace_back(h);
    }
    out.sequence_length = static_cast<unsigned>(seq.size());
    std::uint64_t target = upow(static_cast<std::uint64_t>(q) * p, p);
    if (target > cap) {
      return out;
    }
    auto g0     = construct(g.spec(), 0);
    auto const& kernel = g0.kernel();
    bool ok     = generated_order(kernel, seq, cap) == target;
    for (std::size_t i = 0; ok && i < seq.size(); ++i) {
      auto rest = seq;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      ok = generated_order(kernel, rest, cap) < target;
    }
    out.sequence_verified = ok;
    return out;
  }

  GqpReport invariants_gqp(GqpGroup const& g, Budget md_budget) {
    GqpReport r;
    r.m = {g.m_structural(), Status::exact,
           "chief series: V complemented, then d(H) factors above Phi(H)"};

    r.md_search = md_gqp(g, MdGqpOptions{md_budget, true});
    r.md        = {r.md_search.value, r.md_search.status,
                   "symbolic search over maximal subgroups"};

    r.base = base_certificate(g);
    if (g.p() == 2) {
      auto dense = construct(g.spec());
      auto ir    = i_bruteforce(dense);
      r.i        = {ir.value, ir.status, "exhaustive over subgroup classes"};
    } else {
      unsigned v = 2u * static_cast<unsigned>(g.p());
      if (r.base.chief_value != v
          || (r.base.sequence_verified && !*r.base.sequence_verified)) {
        throw std::logic_error(g.spec() + ": base subgroup certificate failed");
      }
      r.i = {v, Status::lower_bound,
             "m(V x| B) = 2p on the base subgroup; i = 2p itself is not "
             "computed"};
    }
    return r;
  }

  std::string format_vec(Vec const& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i ? "," : "") << v[i];
    }
    os << ")";
    return os.str();
  }

}  // namespace genpos
