#ifndef GENPOS_KERNELS_HPP_
#define GENPOS_KERNELS_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "genpos/group.hpp"

namespace genpos {

  // Arithmetic in F_q, q = p^f, with elements encoded as integers whose
  // base-p digits are polynomial coefficients modulo a primitive
  // polynomial. The class of x is the designated primitive element.
  class FieldTable {
   public:
    FieldTable(int p, int f);

    int p() const noexcept {
      return p_;
    }
    int f() const noexcept {
      return f_;
    }
    int q() const noexcept {
      return q_;
    }
    int add(int a, int b) const noexcept {
      return add_[a * q_ + b];
    }
    int neg(int a) const noexcept {
      return neg_[a];
    }
    int mul(int a, int b) const noexcept {
      if (a == 0 || b == 0) {
        return 0;
      }
      return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    // primitive^k
    int power_of_primitive(long long k) const noexcept {
      long long m = q_ - 1;
      return exp_[((k % m) + m) % m];
    }
    int primitive() const noexcept {
      return q_ == 2 ? 1 : exp_[1];
    }

   private:
    int              p_, f_, q_;
    std::vector<int> add_, neg_, exp_, log_;
  };

  // Right action of C_p wr C_p on F_q^p. An element of the wreath group is
  // (a_0..a_{p-1}; s) meaning diag(c^{a_0},..,c^{a_{p-1}}) followed by the
  // s-th power of the coordinate rotation i -> i+1, so that
  // (v^h)_{i+s} = v_i c^{a_i}.
  class WreathAction {
   public:
    WreathAction(int p, int q, int c);

    int p() const noexcept {
      return p_;
    }
    int q() const noexcept {
      return q_;
    }
    int c() const noexcept {
      return c_;
    }
    // c^k for any integer k.
    int cpow(long long k) const noexcept {
      return cpow_[((k % p_) + p_) % p_];
    }
    // Discrete log base c, or -1 when x is not in <c>.
    int clog(int x) const noexcept {
      return clog_[x];
    }

    // `h` points at p+1 payload entries (a_0..a_{p-1}, s).
    void act(std::int32_t const* v, std::int32_t const* h,
             std::int32_t* out) const noexcept;
    // out = a * b in the wreath group.
    void mul(std::int32_t const* a, std::int32_t const* b,
             std::int32_t* out) const noexcept;
    void inv(std::int32_t const* a, std::int32_t* out) const noexcept;

   private:
    int              p_, q_, c_;
    std::vector<int> cpow_, clog_;
  };

  // Least c != 1 with c^p = 1 mod q. Requires p | q-1.
  int least_root_of_unity(int p, int q);

  std::shared_ptr<GroupKernel const> make_abelian_kernel(
      std::vector<std::int32_t> moduli);
  std::shared_ptr<GroupKernel const> make_perm_kernel(int degree);
  // C_n x| C_m, generator of C_m acting on the right by a -> a*r.
  std::shared_ptr<GroupKernel const> make_metacyclic_kernel(int n, int m,
                                                            int r);
  // Dicyclic group of order 4n (generalized quaternion when n is a power
  // of two).
  std::shared_ptr<GroupKernel const> make_dicyclic_kernel(int n);
  std::shared_ptr<GroupKernel const> make_heisenberg_kernel(int p);
  std::shared_ptr<GroupKernel const> make_direct_kernel(
      std::shared_ptr<GroupKernel const> a,
      std::shared_ptr<GroupKernel const> b);
  std::shared_ptr<GroupKernel const> make_wreath_kernel(int p, int q, int c);
  std::shared_ptr<GroupKernel const> make_gqp_kernel(int p, int q, int c);
  // (F_{p^f})^n x| <primitive>, scalar action.
  std::shared_ptr<GroupKernel const> make_fieldmod_kernel(int p, int f,
                                                          int n);
  // G/N with elements labelled by the least parent index of each coset.
  std::shared_ptr<GroupKernel const> make_quotient_kernel(
      FiniteGroup parent, std::vector<index_t> labels);

}  // namespace genpos

#endif  // GENPOS_KERNELS_HPP_
