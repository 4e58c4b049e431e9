#pragma once

#include <array>
#include <memory>
#include <string>

#include "hsl/errors.hpp"
#include "hsl/util.hpp"

namespace hsl {

// Second-order forward jet over the four real coordinates
// (Re t, Im t, Re z, Im z). Entries are complex so intermediate expression
// values need not be real; Wirtinger derivatives are assembled afterwards.
struct Jet2 {
  cplx v{};
  std::array<cplx, 4> g{};
  std::array<cplx, 10> h{};  // upper triangle: 00 01 02 03 11 12 13 22 23 33

  static int hidx(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int base[4] = {0, 4, 7, 9};
    return base[i] + (j - i);
  }
  static Jet2 constant(cplx c) {
    Jet2 j;
    j.v = c;
    return j;
  }
  static Jet2 variable_t(cplx t) {
    Jet2 j;
    j.v = t;
    j.g[0] = 1;
    j.g[1] = cplx(0, 1);
    return j;
  }
  static Jet2 variable_z(cplx z) {
    Jet2 j;
    j.v = z;
    j.g[2] = 1;
    j.g[3] = cplx(0, 1);
    return j;
  }
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 jet_conj(const Jet2& a);
Jet2 jet_exp(const Jet2& a);
Jet2 jet_log(const Jet2& a);
Jet2 jet_pow(const Jet2& a, int n);
Jet2 jet_re(const Jet2& a);
Jet2 jet_im(const Jet2& a);
Jet2 jet_abs2(const Jet2& a);

// Wirtinger derivatives of a C^2 function of (t, z) from its jet.
struct Wirtinger {
  cplx v;     // value
  cplx d_t;   // phi_t
  cplx d_z;   // phi_z
  cplx d_zb;  // phi_zbar
  cplx d_ttb; // phi_{t tbar}
  cplx d_zzb; // phi_{z zbar}
  cplx d_tbz; // phi_{tbar z}
  cplx d_tzb; // phi_{t zbar}
};
Wirtinger wirtinger(const Jet2& j);

// Expression tree over t, conj(t), z, conj(z) and real literals.
// Grammar (ASCII): literals, t, z, + - * /, unary -, exp(), log(), abs2(),
// re(), im(), conj(), pow(x, integer), parentheses.
class Expr {
 public:
  cplx eval(cplx t, cplx z) const;
  Jet2 jet(cplx t, cplx z) const;
  // dE/dt of a holomorphic expression (exact, via the jet).
  cplx holomorphic_derivative(cplx t) const;

  // Substitute z := z + shift(t) (the pole-normalization frame change).
  static std::shared_ptr<const Expr> shift_z(std::shared_ptr<const Expr> e,
                                             std::shared_ptr<const Expr> shift);

  static std::shared_ptr<const Expr> parse(const std::string& text);
  static std::shared_ptr<const Expr> constant(double c);
  static std::shared_ptr<const Expr> add(std::shared_ptr<const Expr> a,
                                         std::shared_ptr<const Expr> b);
  static std::shared_ptr<const Expr> sub(std::shared_ptr<const Expr> a,
                                         std::shared_ptr<const Expr> b);
  static std::shared_ptr<const Expr> re_of(std::shared_ptr<const Expr> a);
  static std::shared_ptr<const Expr> im_of(std::shared_ptr<const Expr> a);

  struct Node;
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  const std::shared_ptr<const Node>& root() const { return root_; }

 private:
  std::shared_ptr<const Node> root_;
};

using ExprPtr = std::shared_ptr<const Expr>;

}  // namespace hsl
