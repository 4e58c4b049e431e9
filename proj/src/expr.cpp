#include "hsl/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <vector>

namespace hsl {

Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v + b.v;
  for (int i = 0; i < 4; ++i) r.g[i] = a.g[i] + b.g[i];
  for (int i = 0; i < 10; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v - b.v;
  for (int i = 0; i < 4; ++i) r.g[i] = a.g[i] - b.g[i];
  for (int i = 0; i < 10; ++i) r.h[i] = a.h[i] - b.h[i];
  return r;
}

Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.v = -a.v;
  for (int i = 0; i < 4; ++i) r.g[i] = -a.g[i];
  for (int i = 0; i < 10; ++i) r.h[i] = -a.h[i];
  return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v * b.v;
  for (int i = 0; i < 4; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      int k = Jet2::hidx(i, j);
      r.h[k] = a.h[k] * b.v + a.v * b.h[k] + a.g[i] * b.g[j] + a.g[j] * b.g[i];
    }
  return r;
}

namespace {
// g(f) with scalar derivatives g', g''.
Jet2 compose(const Jet2& f, cplx g0, cplx g1, cplx g2) {
  Jet2 r;
  r.v = g0;
  for (int i = 0; i < 4; ++i) r.g[i] = g1 * f.g[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      int k = Jet2::hidx(i, j);
      r.h[k] = g1 * f.h[k] + g2 * f.g[i] * f.g[j];
    }
  return r;
}
}  // namespace

Jet2 operator/(const Jet2& a, const Jet2& b) {
  cplx iv = 1.0 / b.v;
  return a * compose(b, iv, -iv * iv, 2.0 * iv * iv * iv);
}

Jet2 jet_conj(const Jet2& a) {
  Jet2 r;
  r.v = std::conj(a.v);
  for (int i = 0; i < 4; ++i) r.g[i] = std::conj(a.g[i]);
  for (int i = 0; i < 10; ++i) r.h[i] = std::conj(a.h[i]);
  return r;
}

Jet2 jet_exp(const Jet2& a) {
  cplx e = std::exp(a.v);
  return compose(a, e, e, e);
}

Jet2 jet_log(const Jet2& a) {
  cplx iv = 1.0 / a.v;
  return compose(a, std::log(a.v), iv, -iv * iv);
}

Jet2 jet_pow(const Jet2& a, int n) {
  if (n == 0) return Jet2::constant(1.0);
  cplx p2 = 1.0, p1 = 1.0, p0 = 1.0;
  p0 = std::pow(a.v, n);
  p1 = double(n) * std::pow(a.v, n - 1);
  p2 = double(n) * double(n - 1) * std::pow(a.v, n - 2);
  return compose(a, p0, p1, p2);
}

Jet2 jet_re(const Jet2& a) {
  Jet2 r;
  r.v = a.v.real();
  for (int i = 0; i < 4; ++i) r.g[i] = 0.5 * (a.g[i] + std::conj(a.g[i]));
  for (int i = 0; i < 10; ++i) r.h[i] = 0.5 * (a.h[i] + std::conj(a.h[i]));
  return r;
}

Jet2 jet_im(const Jet2& a) {
  Jet2 r;
  cplx half_i(0, 0.5);
  r.v = a.v.imag();
  for (int i = 0; i < 4; ++i) r.g[i] = -half_i * (a.g[i] - std::conj(a.g[i]));
  for (int i = 0; i < 10; ++i) r.h[i] = -half_i * (a.h[i] - std::conj(a.h[i]));
  return r;
}

Jet2 jet_abs2(const Jet2& a) { return a * jet_conj(a); }

Wirtinger wirtinger(const Jet2& j) {
  Wirtinger w;
  const cplx I(0, 1);
  w.v = j.v;
  w.d_t = 0.5 * (j.g[0] - I * j.g[1]);
  w.d_z = 0.5 * (j.g[2] - I * j.g[3]);
  w.d_zb = 0.5 * (j.g[2] + I * j.g[3]);
  w.d_ttb = 0.25 * (j.h[Jet2::hidx(0, 0)] + j.h[Jet2::hidx(1, 1)]);
  w.d_zzb = 0.25 * (j.h[Jet2::hidx(2, 2)] + j.h[Jet2::hidx(3, 3)]);
  // d_tbz = (1/4)[(h_t1x + h_t2y) + i (h_t2x - h_t1y)]
  w.d_tbz = 0.25 * ((j.h[Jet2::hidx(0, 2)] + j.h[Jet2::hidx(1, 3)]) +
                    I * (j.h[Jet2::hidx(1, 2)] - j.h[Jet2::hidx(0, 3)]));
  // d_tzb = (1/4)[(h_t1x + h_t2y) + i (h_t1y - h_t2x)]
  w.d_tzb = 0.25 * ((j.h[Jet2::hidx(0, 2)] + j.h[Jet2::hidx(1, 3)]) +
                    I * (j.h[Jet2::hidx(0, 3)] - j.h[Jet2::hidx(1, 2)]));
  return w;
}

// ---------------------------------------------------------------------------

struct Expr::Node {
  enum Kind {
    kConst,
    kVarT,
    kVarZ,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kNeg,
    kExp,
    kLog,
    kAbs2,
    kRe,
    kIm,
    kConj,
    kPow
  } kind;
  double value = 0;  // kConst
  int exponent = 0;  // kPow
  std::shared_ptr<const Node> lhs, rhs;

  template <class S, class SeedT, class SeedZ>
  S eval(const SeedT& t, const SeedZ& z) const;
};

namespace {

template <class S>
struct Ops;

template <>
struct Ops<cplx> {
  static cplx constant(double c) { return cplx(c); }
  static cplx conj_(cplx a) { return std::conj(a); }
  static cplx exp_(cplx a) { return std::exp(a); }
  static cplx log_(cplx a) { return std::log(a); }
  static cplx pow_(cplx a, int n) { return std::pow(a, n); }
  static cplx re_(cplx a) { return a.real(); }
  static cplx im_(cplx a) { return a.imag(); }
  static cplx abs2_(cplx a) { return std::norm(a); }
};

template <>
struct Ops<Jet2> {
  static Jet2 constant(double c) { return Jet2::constant(c); }
  static Jet2 conj_(const Jet2& a) { return jet_conj(a); }
  static Jet2 exp_(const Jet2& a) { return jet_exp(a); }
  static Jet2 log_(const Jet2& a) { return jet_log(a); }
  static Jet2 pow_(const Jet2& a, int n) { return jet_pow(a, n); }
  static Jet2 re_(const Jet2& a) { return jet_re(a); }
  static Jet2 im_(const Jet2& a) { return jet_im(a); }
  static Jet2 abs2_(const Jet2& a) { return jet_abs2(a); }
};

}  // namespace

template <class S, class SeedT, class SeedZ>
S Expr::Node::eval(const SeedT& t, const SeedZ& z) const {
  switch (kind) {
    case kConst:
      return Ops<S>::constant(value);
    case kVarT:
      return t;
    case kVarZ:
      return z;
    case kAdd:
      return lhs->eval<S>(t, z) + rhs->eval<S>(t, z);
    case kSub:
      return lhs->eval<S>(t, z) - rhs->eval<S>(t, z);
    case kMul:
      return lhs->eval<S>(t, z) * rhs->eval<S>(t, z);
    case kDiv:
      return lhs->eval<S>(t, z) / rhs->eval<S>(t, z);
    case kNeg:
      return -lhs->eval<S>(t, z);
    case kExp:
      return Ops<S>::exp_(lhs->eval<S>(t, z));
    case kLog:
      return Ops<S>::log_(lhs->eval<S>(t, z));
    case kAbs2:
      return Ops<S>::abs2_(lhs->eval<S>(t, z));
    case kRe:
      return Ops<S>::re_(lhs->eval<S>(t, z));
    case kIm:
      return Ops<S>::im_(lhs->eval<S>(t, z));
    case kConj:
      return Ops<S>::conj_(lhs->eval<S>(t, z));
    case kPow:
      return Ops<S>::pow_(lhs->eval<S>(t, z), exponent);
  }
  return Ops<S>::constant(0);
}

cplx Expr::eval(cplx t, cplx z) const { return root_->eval<cplx>(t, z); }

Jet2 Expr::jet(cplx t, cplx z) const {
  return root_->eval<Jet2>(Jet2::variable_t(t), Jet2::variable_z(z));
}

cplx Expr::holomorphic_derivative(cplx t) const {
  Jet2 j = jet(t, cplx(0));
  return 0.5 * (j.g[0] - cplx(0, 1) * j.g[1]);
}

ExprPtr Expr::constant(double c) {
  auto node = std::make_shared<Expr::Node>();
  node->kind = Expr::Node::kConst;
  node->value = c;
  return std::make_shared<const Expr>(node);
}

namespace {
ExprPtr make_binary(Expr::Node::Kind kind, ExprPtr a, ExprPtr b) {
  auto node = std::make_shared<Expr::Node>();
  node->kind = kind;
  node->lhs = a->root();
  if (b) node->rhs = b->root();
  return std::make_shared<const Expr>(node);
}
}  // namespace

ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return make_binary(Node::kAdd, a, b); }
ExprPtr Expr::sub(ExprPtr a, ExprPtr b) { return make_binary(Node::kSub, a, b); }
ExprPtr Expr::re_of(ExprPtr a) { return make_binary(Node::kRe, a, nullptr); }
ExprPtr Expr::im_of(ExprPtr a) { return make_binary(Node::kIm, a, nullptr); }

std::shared_ptr<const Expr> Expr::shift_z(ExprPtr e, ExprPtr shift) {
  // Rebuild e with every z replaced by (z + shift(t)); conj(z) nodes pick up
  // the conjugated shift through the kConj recursion automatically.
  std::function<std::shared_ptr<const Node>(const std::shared_ptr<const Node>&)> walk =
      [&](const std::shared_ptr<const Node>& n) -> std::shared_ptr<const Node> {
    if (n->kind == Node::kVarZ) {
      auto add = std::make_shared<Node>();
      add->kind = Node::kAdd;
      add->lhs = n;
      add->rhs = shift->root();
      return add;
    }
    if (!n->lhs && !n->rhs) return n;
    auto copy = std::make_shared<Node>(*n);
    if (n->lhs) copy->lhs = walk(n->lhs);
    if (n->rhs) copy->rhs = walk(n->rhs);
    return copy;
  };
  return std::make_shared<const Expr>(walk(e->root()));
}

// ---------------------------------------------------------------------------
// Recursive-descent parser; errors cite the character position.

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  using NodePtr = std::shared_ptr<const Expr::Node>;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  NodePtr make(Expr::Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (consume('+'))
        lhs = make(Expr::Node::kAdd, lhs, parse_term());
      else if (consume('-'))
        lhs = make(Expr::Node::kSub, lhs, parse_term());
      else
        return lhs;
    }
  }

  NodePtr parse_term() {
    auto lhs = parse_factor();
    for (;;) {
      if (consume('*'))
        lhs = make(Expr::Node::kMul, lhs, parse_factor());
      else if (consume('/'))
        lhs = make(Expr::Node::kDiv, lhs, parse_factor());
      else
        return lhs;
    }
  }

  NodePtr parse_factor() {
    if (consume('-')) return make(Expr::Node::kNeg, parse_factor());
    if (consume('+')) return parse_factor();
    return parse_primary();
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (consume('(')) {
      auto e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    throw ParseError("unexpected character", pos);
  }

  NodePtr parse_number() {
    skip_ws();
    size_t start = pos;
    char* end = nullptr;
    double v = std::strtod(text.c_str() + start, &end);
    if (end == text.c_str() + start) throw ParseError("bad numeric literal", pos);
    pos = end - text.c_str();
    auto n = make(Expr::Node::kConst);
    const_cast<Expr::Node&>(*n).value = v;
    return n;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    bool neg = consume('-');
    skip_ws();
    size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected an integer exponent", start);
    int v = std::stoi(text.substr(dstart, pos - dstart));
    return neg ? -v : v;
  }

  NodePtr parse_ident() {
    size_t start = pos;
    while (pos < text.size() &&
           std::isalnum(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string name = text.substr(start, pos - start);
    if (name == "t") return make(Expr::Node::kVarT);
    if (name == "z") return make(Expr::Node::kVarZ);

    auto unary = [&](Expr::Node::Kind k) {
      expect('(');
      auto arg = parse_expr();
      expect(')');
      return make(k, arg);
    };
    if (name == "exp") return unary(Expr::Node::kExp);
    if (name == "log") return unary(Expr::Node::kLog);
    if (name == "abs2") return unary(Expr::Node::kAbs2);
    if (name == "re") return unary(Expr::Node::kRe);
    if (name == "im") return unary(Expr::Node::kIm);
    if (name == "conj") return unary(Expr::Node::kConj);
    if (name == "pow") {
      expect('(');
      auto arg = parse_expr();
      expect(',');
      int e = parse_int();
      expect(')');
      auto n = make(Expr::Node::kPow, arg);
      const_cast<Expr::Node&>(*n).exponent = e;
      return n;
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

}  // namespace

ExprPtr Expr::parse(const std::string& text) {
  Parser p{text};
  auto root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing characters", p.pos);
  return std::make_shared<const Expr>(root);
}

}  // namespace hsl
