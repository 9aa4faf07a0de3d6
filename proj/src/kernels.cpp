#include "genpos/kernels.hpp"

#include <numeric>
#include <sstream>
#include <string>

namespace genpos {

  namespace {

    int mod(long long a, long long m) {
      long long r = a % m;
      return static_cast<int>(r < 0 ? r + m : r);
    }

    class AbelianKernel final : public GroupKernel {
     public:
      explicit AbelianKernel(std::vector<std::int32_t> moduli)
          : moduli_(std::move(moduli)) {}

      std::size_t payload_size() const override {
        return moduli_.size();
      }
      Element identity() const override {
        return Element(std::vector<std::int32_t>(moduli_.size(), 0));
      }
      Element multiply(Element const& a, Element const& b) const override {
        Element r(a.payload);
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
          r.payload[i] = (a.payload[i] + b.payload[i]) % moduli_[i];
        }
        return r;
      }
      Element inverse(Element const& a) const override {
        Element r(a.payload);
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
          r.payload[i] = (moduli_[i] - a.payload[i]) % moduli_[i];
        }
        return r;
      }
      bool well_formed(Element const& a) const override {
        if (a.payload.size() != moduli_.size()) {
          return false;
        }
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
          if (a.payload[i] < 0 || a.payload[i] >= moduli_[i]) {
            return false;
          }
        }
        return true;
      }

     private:
      std::vector<std::int32_t> moduli_;
    };

    // Zero-based image arrays; (ab)(i) = b(a(i)) so points act on the right.
    class PermKernel final : public GroupKernel {
     public:
      explicit PermKernel(int degree) : degree_(degree) {}

      std::size_t payload_size() const override {
        return static_cast<std::size_t>(degree_);
      }
      Element identity() const override {
        std::vector<std::int32_t> id(degree_);
        std::iota(id.begin(), id.end(), 0);
        return Element(std::move(id));
      }
      Element multiply(Element const& a, Element const& b) const override {
        Element r(a.payload);
        for (int i = 0; i < degree_; ++i) {
          r.payload[i] = b.payload[a.payload[i]];
        }
        return r;
      }
      Element inverse(Element const& a) const override {
        Element r(a.payload);
        for (int i = 0; i < degree_; ++i) {
          r.payload[a.payload[i]] = i;
        }
        return r;
      }
      bool well_formed(Element const& a) const override {
        if (a.payload.size() != static_cast<std::size_t>(degree_)) {
          return false;
        }
        std::vector<bool> hit(degree_, false);
        for (auto x : a.payload) {
          if (x < 0 || x >= degree_ || hit[x]) {
            return false;
          }
          hit[x] = true;
        }
        return true;
      }
      bool ambient_is_group() const override {
        return false;
      }
      // Cycle notation, one-based points.
      std::string format(Element const& a) const override {
        std::ostringstream os;
        std::vector<bool>  seen(degree_, false);
        bool               any = false;
        for (int i = 0; i < degree_; ++i) {
          if (seen[i] || a.payload[i] == i) {
            continue;
          }
          any = true;
          os << '(';
          int j = i;
          do {
            seen[j] = true;
            os << (j == i ? "" : " ") << j + 1;
            j = a.payload[j];
          } while (j != i);
          os << ')';
        }
        return any ? os.str() : "()";
      }

     private:
      int degree_;
    };

    class MetacyclicKernel final : public GroupKernel {
     public:
      MetacyclicKernel(int n, int m, int r) : n_(n), m_(m), rpow_(m) {
        long long x = 1 % n;
        for (int k = 0; k < m; ++k) {
          rpow_[k] = static_cast<int>(x);
          x        = x * mod(r, n) % n;
        }
      }
      std::size_t payload_size() const override {
        return 2;
      }
      Element identity() const override {
        return Element({0, 0});
      }
      // (a,h)(b,k) = (a^k + b, hk)
      Element multiply(Element const& a, Element const& b) const override {
        long long x = static_cast<long long>(a.payload[0]) * rpow_[b.payload[1]]
                      + b.payload[0];
        return Element(
            {mod(x, n_), mod(a.payload[1] + b.payload[1], m_)});
      }
      Element inverse(Element const& a) const override {
        int       k = mod(-a.payload[1], m_);
        long long x = -static_cast<long long>(a.payload[0]) * rpow_[k];
        return Element({mod(x, n_), k});
      }
      bool well_formed(Element const& a) const override {
        return a.payload.size() == 2 && a.payload[0] >= 0
               && a.payload[0] < n_ && a.payload[1] >= 0
               && a.payload[1] < m_;
      }

     private:
      int              n_, m_;
      std::vector<int> rpow_;
    };

    // x^a y^e with x of order 2n, y^2 = x^n, y^-1 x y = x^-1.
    class DicyclicKernel final : public GroupKernel {
     public:
      explicit DicyclicKernel(int n) : n_(n) {}
      std::size_t payload_size() const override {
        return 2;
      }
      Element identity() const override {
        return Element({0, 0});
      }
      Element multiply(Element const& a, Element const& b) const override {
        int m = 2 * n_;
        if (a.payload[1] == 0) {
          return Element({mod(a.payload[0] + b.payload[0], m), b.payload[1]});
        }
        if (b.payload[1] == 0) {
          return Element({mod(a.payload[0] - b.payload[0], m), 1});
        }
        return Element({mod(a.payload[0] - b.payload[0] + n_, m), 0});
      }
      Element inverse(Element const& a) const override {
        int m = 2 * n_;
        if (a.payload[1] == 0) {
          return Element({mod(-a.payload[0], m), 0});
        }
        return Element({mod(a.payload[0] + n_, m), 1});
      }
      bool well_formed(Element const& a) const override {
        return a.payload.size() == 2 && a.payload[0] >= 0
               && a.payload[0] < 2 * n_ && (a.payload[1] == 0
                                             || a.payload[1] == 1);
      }

     private:
      int n_;
    };

    // Upper unitriangular 3x3 matrices over F_p as (x, y, z).
    class HeisenbergKernel final : public GroupKernel {
     public:
      explicit HeisenbergKernel(int p) : p_(p) {}
      std::size_t payload_size() const override {
        return 3;
      }
      Element identity() const override {
        return Element({0, 0, 0});
      }
      Element multiply(Element const& a, Element const& b) const override {
        auto const& x = a.payload;
        auto const& y = b.payload;
        return Element({mod(x[0] + y[0], p_), mod(x[1] + y[1], p_),
                        mod(x[2] + y[2] + x[0] * y[1], p_)});
      }
      Element inverse(Element const& a) const override {
        auto const& x = a.payload;
        return Element(
            {mod(-x[0], p_), mod(-x[1], p_), mod(-x[2] + x[0] * x[1], p_)});
      }
      bool well_formed(Element const& a) const override {
        if (a.payload.size() != 3) {
          return false;
        }
        for (auto x : a.payload) {
          if (x < 0 || x >= p_) {
            return false;
          }
        }
        return true;
      }

     private:
      int p_;
    };

    class DirectKernel final : public GroupKernel {
     public:
      DirectKernel(std::shared_ptr<GroupKernel const> a,
                   std::shared_ptr<GroupKernel const> b)
          : a_(std::move(a)), b_(std::move(b)), split_(a_->payload_size()) {}

      std::size_t payload_size() const override {
        return split_ + b_->payload_size();
      }
      Element identity() const override {
        return join(a_->identity(), b_->identity());
      }
      Element multiply(Element const& x, Element const& y) const override {
        return join(a_->multiply(left(x), left(y)),
                    b_->multiply(right(x), right(y)));
      }
      Element inverse(Element const& x) const override {
        return join(a_->inverse(left(x)), b_->inverse(right(x)));
      }
      bool well_formed(Element const& x) const override {
        return x.payload.size() == payload_size() && a_->well_formed(left(x))
               && b_->well_formed(right(x));
      }
      bool ambient_is_group() const override {
        return a_->ambient_is_group() && b_->ambient_is_group();
      }
      std::string format(Element const& x) const override {
        return "[" + a_->format(left(x)) + "," + b_->format(right(x)) + "]";
      }

     private:
      Element left(Element const& x) const {
        return Element(std::vector<std::int32_t>(
            x.payload.begin(), x.payload.begin() + split_));
      }
      Element right(Element const& x) const {
        return Element(std::vector<std::int32_t>(x.payload.begin() + split_,
                                                 x.payload.end()));
      }
      static Element join(Element l, Element const& r) {
        l.payload.insert(l.payload.end(), r.payload.begin(), r.payload.end());
        return l;
      }

      std::shared_ptr<GroupKernel const> a_, b_;
      std::size_t                        split_;
    };

    class WreathKernel final : public GroupKernel {
     public:
      WreathKernel(int p, int q, int c) : act_(p, q, c) {}
      std::size_t payload_size() const override {
        return static_cast<std::size_t>(act_.p() + 1);
      }
      Element identity() const override {
        return Element(std::vector<std::int32_t>(act_.p() + 1, 0));
      }
      Element multiply(Element const& a, Element const& b) const override {
        Element r(a.payload);
        act_.mul(a.payload.data(), b.payload.data(), r.payload.data());
        return r;
      }
      Element inverse(Element const& a) const override {
        Element r(a.payload);
        act_.inv(a.payload.data(), r.payload.data());
        return r;
      }
      bool well_formed(Element const& a) const override {
        if (a.payload.size() != payload_size()) {
          return false;
        }
        for (auto x : a.payload) {
          if (x < 0 || x >= act_.p()) {
            return false;
          }
        }
        return true;
      }

     private:
      WreathAction act_;
    };

    // F_q^p x| (C_p wr C_p); payload (v_0..v_{p-1}, a_0..a_{p-1}, s).
    class GqpKernel final : public GroupKernel {
     public:
      GqpKernel(int p, int q, int c) : act_(p, q, c) {}
      std::size_t payload_size() const override {
        return static_cast<std::size_t>(2 * act_.p() + 1);
      }
      Element identity() const override {
        return Element(std::vector<std::int32_t>(payload_size(), 0));
      }
      // (v,h)(w,k) = (v^k + w, hk)
      Element multiply(Element const& a, Element const& b) const override {
        int     p = act_.p();
        Element r(a.payload);
        act_.act(a.payload.data(), b.payload.data() + p, r.payload.data());
        for (int i = 0; i < p; ++i) {
          r.payload[i] = (r.payload[i] + b.payload[i]) % act_.q();
        }
        act_.mul(a.payload.data() + p, b.payload.data() + p,
                 r.payload.data() + p);
        return r;
      }
      // (v,h)^-1 = (-(v^{h^-1}), h^-1)
      Element inverse(Element const& a) const override {
        int     p = act_.p();
        Element r(a.payload);
        act_.inv(a.payload.data() + p, r.payload.data() + p);
        std::vector<std::int32_t> tmp(p);
        act_.act(a.payload.data(), r.payload.data() + p, tmp.data());
        for (int i = 0; i < p; ++i) {
          r.payload[i] = (act_.q() - tmp[i]) % act_.q();
        }
        return r;
      }
      bool well_formed(Element const& a) const override {
        int p = act_.p();
        if (a.payload.size() != payload_size()) {
          return false;
        }
        for (int i = 0; i < 2 * p + 1; ++i) {
          int bound = i < p ? act_.q() : p;
          if (a.payload[i] < 0 || a.payload[i] >= bound) {
            return false;
          }
        }
        return true;
      }
      std::string format(Element const& a) const override {
        int                p = act_.p();
        std::ostringstream os;
        os << "v=(";
        for (int i = 0; i < p; ++i) {
          os << (i ? "," : "") << a.payload[i];
        }
        os << ") h=(";
        for (int i = 0; i < p; ++i) {
          os << (i ? "," : "") << a.payload[p + i];
        }
        os << ";" << a.payload[2 * p] << ")";
        return os.str();
      }

     private:
      WreathAction act_;
    };

    class FieldModKernel final : public GroupKernel {
     public:
      FieldModKernel(int p, int f, int n) : field_(p, f), n_(n) {}
      std::size_t payload_size() const override {
        return static_cast<std::size_t>(n_ + 1);
      }
      Element identity() const override {
        return Element(std::vector<std::int32_t>(n_ + 1, 0));
      }
      // (v,k)(w,l) = (v*w^l + w, k+l) with w the primitive element.
      Element multiply(Element const& a, Element const& b) const override {
        Element r(a.payload);
        int     scale = field_.power_of_primitive(b.payload[n_]);
        for (int i = 0; i < n_; ++i) {
          r.payload[i]
              = field_.add(field_.mul(a.payload[i], scale), b.payload[i]);
        }
        r.payload[n_] = mod(a.payload[n_] + b.payload[n_], order_h());
        return r;
      }
      Element inverse(Element const& a) const override {
        Element r(a.payload);
        int     k     = mod(-a.payload[n_], order_h());
        int     scale = field_.power_of_primitive(k);
        for (int i = 0; i < n_; ++i) {
          r.payload[i] = field_.neg(field_.mul(a.payload[i], scale));
        }
        r.payload[n_] = k;
        return r;
      }
      bool well_formed(Element const& a) const override {
        if (a.payload.size() != payload_size()) {
          return false;
        }
        for (int i = 0; i < n_; ++i) {
          if (a.payload[i] < 0 || a.payload[i] >= field_.q()) {
            return false;
          }
        }
        return a.payload[n_] >= 0 && a.payload[n_] < order_h();
      }

     private:
      int order_h() const {
        return field_.q() - 1;
      }
      FieldTable field_;
      int        n_;
    };

    class QuotientKernel final : public GroupKernel {
     public:
      QuotientKernel(FiniteGroup parent, std::vector<index_t> labels)
          : parent_(std::move(parent)), labels_(std::move(labels)) {}
      std::size_t payload_size() const override {
        return 1;
      }
      Element identity() const override {
        return Element({0});
      }
      Element multiply(Element const& a, Element const& b) const override {
        index_t x = parent_.product(static_cast<index_t>(a.payload[0]),
                                    static_cast<index_t>(b.payload[0]));
        return Element({static_cast<std::int32_t>(labels_[x])});
      }
      Element inverse(Element const& a) const override {
        index_t x = parent_.inverse(static_cast<index_t>(a.payload[0]));
        return Element({static_cast<std::int32_t>(labels_[x])});
      }
      bool well_formed(Element const& a) const override {
        return a.payload.size() == 1 && a.payload[0] >= 0
               && static_cast<std::size_t>(a.payload[0]) < labels_.size()
               && labels_[a.payload[0]]
                      == static_cast<index_t>(a.payload[0]);
      }
      std::string format(Element const& a) const override {
        return parent_.format(
                   parent_.element(static_cast<index_t>(a.payload[0])))
               + "N";
      }

     private:
      FiniteGroup          parent_;
      std::vector<index_t> labels_;
    };

  }  // namespace

  FieldTable::FieldTable(int p, int f) : p_(p), f_(f), q_(1) {
    if (p < 2 || f < 1) {
      throw PreconditionError("field characteristic must be prime, degree >= 1");
    }
    for (int i = 0; i < f; ++i) {
      q_ *= p;
    }
    // digit-wise addition
    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        int r = 0, pw = 1, x = a, y = b;
        for (int i = 0; i < f; ++i) {
          r += ((x % p + y % p) % p) * pw;
          x /= p;
          y /= p;
          pw *= p;
        }
        add_[a * q_ + b] = r;
      }
      int r = 0, pw = 1, x = a;
      for (int i = 0; i < f; ++i) {
        r += ((p - x % p) % p) * pw;
        x /= p;
        pw *= p;
      }
      neg_[a] = r;
    }
    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0);
    if (q_ == 2) {
      return;
    }
    // Multiplication by x modulo a monic polynomial of degree f; accept the
    // first polynomial under which x has order q-1.
    auto times_x = [&](int a, std::vector<int> const& low) {
      std::vector<int> d(f);
      for (int i = 0; i < f; ++i) {
        d[i] = a % p;
        a /= p;
      }
      int top = d[f - 1];
      for (int i = f - 1; i > 0; --i) {
        d[i] = d[i - 1];
      }
      d[0] = 0;
      for (int i = 0; i < f; ++i) {
        d[i] = ((d[i] - top * low[i]) % p + p) % p;
      }
      int r = 0;
      for (int i = f - 1; i >= 0; --i) {
        r = r * p + d[i];
      }
      return r;
    };
    auto install = [&](std::vector<int> pw) {
      exp_ = std::move(pw);
      for (int k = 0; k < q_ - 1; ++k) {
        log_[exp_[k]] = k;
      }
    };
    // Powers of the candidate generator; empty when it is not primitive.
    auto cycle = [&](auto&& step) {
      std::vector<int> pw(q_ - 1);
      int              cur = 1;
      for (int k = 0; k < q_ - 1; ++k) {
        if ((k > 0 && cur == 1) || cur == 0) {
          return std::vector<int>{};
        }
        pw[k] = cur;
        cur   = step(cur);
      }
      return cur == 1 ? pw : std::vector<int>{};
    };
    if (f == 1) {
      for (int g = 2; g < p; ++g) {
        auto pw = cycle([&](int a) { return a * g % p; });
        if (!pw.empty()) {
          install(std::move(pw));
          return;
        }
      }
    } else {
      for (int code = 0; code < q_; ++code) {
        std::vector<int> low(f);
        for (int i = 0, c = code; i < f; ++i) {
          low[i] = c % p;
          c /= p;
        }
        auto pw = cycle([&](int a) { return times_x(a, low); });
        if (!pw.empty()) {
          install(std::move(pw));
          return;
        }
      }
    }
    throw PreconditionError("no primitive polynomial found");
  }

  WreathAction::WreathAction(int p, int q, int c)
      : p_(p), q_(q), c_(c), cpow_(p), clog_(q, -1) {
    long long x = 1;
    for (int k = 0; k < p; ++k) {
      cpow_[k]  = static_cast<int>(x);
      clog_[x]  = k;
      x         = x * c % q;
    }
  }

  void WreathAction::act(std::int32_t const* v, std::int32_t const* h,
                         std::int32_t* out) const noexcept {
    int s = h[p_];
    for (int i = 0; i < p_; ++i) {
      out[(i + s) % p_] = static_cast<std::int32_t>(
          static_cast<long long>(v[i]) * cpow_[h[i]] % q_);
    }
  }

  void WreathAction::mul(std::int32_t const* a, std::int32_t const* b,
                         std::int32_t* out) const noexcept {
    int s = a[p_];
    for (int j = 0; j < p_; ++j) {
      out[j] = (a[j] + b[(j + s) % p_]) % p_;
    }
    out[p_] = (s + b[p_]) % p_;
  }

  void WreathAction::inv(std::int32_t const* a, std::int32_t* out) const noexcept {
    int s = a[p_];
    // out may alias nothing; a is read fully before writes matter below
    std::vector<std::int32_t> tmp(p_);
    for (int j = 0; j < p_; ++j) {
      tmp[j] = (p_ - a[((j - s) % p_ + p_) % p_]) % p_;
    }
    for (int j = 0; j < p_; ++j) {
      out[j] = tmp[j];
    }
    out[p_] = (p_ - s) % p_;
  }

  int least_root_of_unity(int p, int q) {
    for (int c = 2; c < q; ++c) {
      long long x = 1;
      for (int k = 0; k < p; ++k) {
        x = x * c % q;
      }
      if (x == 1) {
        return c;
      }
    }
    throw PreconditionError("no element of order " + std::to_string(p)
                            + " modulo " + std::to_string(q));
  }

  std::shared_ptr<GroupKernel const> make_abelian_kernel(
      std::vector<std::int32_t> moduli) {
    return std::make_shared<AbelianKernel>(std::move(moduli));
  }
  std::shared_ptr<GroupKernel const> make_perm_kernel(int degree) {
    return std::make_shared<PermKernel>(degree);
  }
  std::shared_ptr<GroupKernel const> make_metacyclic_kernel(int n, int m,
                                                            int r) {
    return std::make_shared<MetacyclicKernel>(n, m, r);
  }
  std::shared_ptr<GroupKernel const> make_dicyclic_kernel(int n) {
    return std::make_shared<DicyclicKernel>(n);
  }
  std::shared_ptr<GroupKernel const> make_heisenberg_kernel(int p) {
    return std::make_shared<HeisenbergKernel>(p);
  }
  std::shared_ptr<GroupKernel const> make_direct_kernel(
      std::shared_ptr<GroupKernel const> a,
      std::shared_ptr<GroupKernel const> b) {
    return std::make_shared<DirectKernel>(std::move(a), std::move(b));
  }
  std::shared_ptr<GroupKernel const> make_wreath_kernel(int p, int q, int c) {
    return std::make_shared<WreathKernel>(p, q, c);
  }
  std::shared_ptr<GroupKernel const> make_gqp_kernel(int p, int q, int c) {
    return std::make_shared<GqpKernel>(p, q, c);
  }
  std::shared_ptr<GroupKernel const> make_fieldmod_kernel(int p, int f,
                                                          int n) {
    return std::make_shared<FieldModKernel>(p, f, n);
  }
  std::shared_ptr<GroupKernel const> make_quotient_kernel(
      FiniteGroup parent, std::vector<index_t> labels) {
    return std::make_shared<QuotientKernel>(std::move(parent),
                                            std::move(labels));
  }

}  // namespace genpos
