/*
   Copyright 2026 The qfs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "poly.hpp"

#include <cctype>
#include <memory>

namespace qfs {

Poly reduce_mod(const ZPoly& f, std::uint32_t k) {
  ModRing ring(f.ctx()->p, k);
  Poly r(f.ctx(), ring);
  for (const auto& [m, c] : f.terms()) r.add_term(m, ring.from_mpz(c));
  return r;
}

Poly reduce_precision(const Poly& f, std::uint32_t k) {
  if (k > f.ring().k)
    throw InputError("cannot raise precision of a modular polynomial");
  if (k == f.ring().k) return f;
  ModRing ring(f.ring().p, k);
  Poly r(f.ctx(), ring);
  for (const auto& [m, c] : f.terms()) r.add_term(m, c % ring.modulus);
  return r;
}

ZPoly lift_exact(const Poly& f) {
  ZPoly r(f.ctx(), IntRing{});
  for (const auto& [m, c] : f.terms())
    r.add_term(m, mpz_class(static_cast<unsigned long>(c)));
  return r;
}

Poly delta1(const Poly& f) {
  const ModRing& ring = f.ring();
  if (ring.k < 2) throw InputError("delta1 requires precision k >= 2");
  Poly diff = poly_pow(f, ring.p) - frobenius_substitute(f, 1);
  ModRing down(ring.p, ring.k - 1);
  Poly r(f.ctx(), down);
  for (const auto& [m, c] : diff.terms()) {
    if (c % ring.p != 0)
      throw InternalError(
          "delta1: coefficient not divisible by p; the Frobenius-lift "
          "property guarantees divisibility, so this is a bug");
    r.add_term(m, c / ring.p);
  }
  return r;
}

ZPoly delta1_exact(const ZPoly& f) {
  std::uint64_t p = f.ctx()->p;
  ZPoly diff = poly_pow(f, p) - frobenius_substitute(f, 1);
  return divide_exact_p_power(diff, p, 1);
}

ZPoly divide_exact_p_power(const ZPoly& f, std::uint64_t p, std::uint32_t s) {
  if (s == 0) return f;
  mpz_class q(static_cast<unsigned long>(p));
  mpz_pow_ui(q.get_mpz_t(), q.get_mpz_t(), s);
  ZPoly r(f.ctx(), f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t()))
      throw InternalError("exact division by a power of p failed: bug");
    r.add_term(m, c / q);
  }
  return r;
}

Poly delta_n(const Poly& f, std::uint32_t n) {
  if (n < 1) throw InputError("delta_n requires n >= 1");
  const ModRing& ring = f.ring();
  if (ring.k < n + 1)
    throw InputError("delta_n at level " + std::to_string(n) +
                     " requires precision >= " + std::to_string(n + 1));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i) q *= ring.p;
  Poly d = delta1(poly_pow(reduce_precision(f, n + 1), q));  // precision n
  ModRing out(ring.p, 1);
  Poly r(f.ctx(), out);
  for (const auto& [m, c] : d.terms()) {
    std::uint64_t qq = d.ring().modulus / ring.p;  // p^(n-1)
    if (c % qq != 0)
      throw InternalError("delta_n: division by p^(n-1) not exact: bug");
    r.add_term(m, (c / qq) % ring.p);
  }
  return r;
}

Poly cartier_u(const Poly& f) { return cartier_u_direct(f, 1); }

Poly cartier_ue(const Poly& f, std::uint32_t e) {
  if (e < 1) throw InputError("cartier_ue requires e >= 1");
  Poly r = f;
  for (std::uint32_t i = 0; i < e; ++i) r = cartier_u(r);
  return r;
}

Poly cartier_u_direct(const Poly& f, std::uint32_t e) {
  const ModRing& ring = f.ring();
  if (ring.k != 1) throw InputError("the trace operator requires precision 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= ring.p;
  Poly r(f.ctx(), ring);
  for (const auto& [m, c] : f.terms()) {
    bool keep = true;
    Monomial mm(m.e.size());
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] % q != q - 1) {
        keep = false;
        break;
      }
      mm.e[i] = static_cast<std::uint32_t>((m.e[i] - (q - 1)) / q);
    }
    // c^(1/p^e) = c in F_p
    if (keep) r.add_term(std::move(mm), c);
  }
  return r;
}

bool monomial_ideal_member(const Poly& f, const std::vector<Monomial>& gens) {
  for (const auto& [m, c] : f.terms()) {
    bool divisible = false;
    for (const auto& g : gens)
      if (monomial_divides(g, m)) {
        divisible = true;
        break;
      }
    if (!divisible) return false;
  }
  return true;
}

std::vector<Monomial> frobenius_power_of_maximal_ideal(const Ctx& ctx,
                                                       std::uint64_t q) {
  check_exponent(q);
  std::vector<Monomial> gens;
  for (std::uint32_t i = 0; i < ctx->nvars(); ++i) {
    Monomial m(ctx->nvars());
    m.e[i] = static_cast<std::uint32_t>(q);
    gens.push_back(std::move(m));
  }
  return gens;
}

Poly drop_monomial_multiples(const Poly& f,
                             const std::vector<Monomial>& gens) {
  Poly r(f.ctx(), f.ring());
  for (const auto& [m, c] : f.terms()) {
    bool divisible = false;
    for (const auto& g : gens)
      if (monomial_divides(g, m)) {
        divisible = true;
        break;
      }
    if (!divisible) r.add_term(m, c);
  }
  return r;
}

// ---- expression parser -----------------------------------------------------

namespace {

struct Node {
  enum Kind { kInt, kVar, kAdd, kSub, kMul, kPow } kind;
  mpz_class literal;       // kInt
  std::uint32_t var = 0;   // kVar
  std::uint64_t exp = 0;   // kPow
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  Parser(std::string_view text, const Ctx& ctx) : text_(text), ctx_(ctx) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at position " + std::to_string(pos_ + 1) +
                     ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                       text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr acc = term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        NodePtr n = std::make_unique<Node>();
        n->kind = Node::kAdd;
        n->lhs = std::move(acc);
        n->rhs = term();
        acc = std::move(n);
      } else if (eat('-')) {
        NodePtr n = std::make_unique<Node>();
        n->kind = Node::kSub;
        n->lhs = std::move(acc);
        n->rhs = term();
        acc = std::move(n);
      } else {
        return acc;
      }
    }
  }

  NodePtr term() {
    NodePtr acc = factor();
    while (eat('*')) {
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::kMul;
      n->lhs = std::move(acc);
      n->rhs = factor();
      acc = std::move(n);
    }
    return acc;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (eat('^')) {
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::kPow;
      n->lhs = std::move(b);
      n->exp = parse_uint();
      return n;
    }
    return b;
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a nonnegative integer literal");
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kMaxExponent) fail("exponent exceeds the 32-bit limit");
      ++pos_;
    }
    return v;
  }

  NodePtr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::kInt;
      n->literal = mpz_class(std::string(text_.substr(start, pos_ - start)),
                             10);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      auto ident_char = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
               ch == '\'';
      };
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ctx_->var_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::kVar;
      n->var = static_cast<std::uint32_t>(idx);
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ctx& ctx_;
  std::size_t pos_ = 0;
};

template <class Ring>
BasicPoly<Ring> eval_node(const Node& n, const Ctx& ctx, const Ring& ring) {
  using P = BasicPoly<Ring>;
  switch (n.kind) {
    case Node::kInt:
      return P::constant(ctx, ring, ring.from_mpz(n.literal));
    case Node::kVar:
      return P::variable(ctx, ring, n.var);
    case Node::kAdd:
      return eval_node(*n.lhs, ctx, ring) + eval_node(*n.rhs, ctx, ring);
    case Node::kSub:
      return eval_node(*n.lhs, ctx, ring) - eval_node(*n.rhs, ctx, ring);
    case Node::kMul:
      return eval_node(*n.lhs, ctx, ring) * eval_node(*n.rhs, ctx, ring);
    case Node::kPow:
      return poly_pow(eval_node(*n.lhs, ctx, ring), n.exp);
  }
  throw InternalError("unreachable parse node kind");
}

}  // namespace

Poly parse_poly(std::string_view text, const Ctx& ctx, std::uint32_t k) {
  NodePtr root = Parser(text, ctx).run();
  return eval_node(*root, ctx, ModRing(ctx->p, k));
}

ZPoly parse_zpoly(std::string_view text, const Ctx& ctx) {
  NodePtr root = Parser(text, ctx).run();
  return eval_node(*root, ctx, IntRing{});
}

}  // namespace qfs
