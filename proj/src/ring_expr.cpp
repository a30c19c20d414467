#include "idealspace/ring_expr.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "idealspace/hom.hpp"

namespace idealspace {

namespace {

struct Literal {
  std::size_t pos = 0;
  std::optional<long long> value;  // set for integers
  std::vector<Literal> parts;      // set for tuples
};

// A built ring together with what is needed to resolve literals in it.
struct Node {
  RingPtr ring;
  std::optional<long long> modulus;          // Zn
  std::vector<std::shared_ptr<Node>> factors;  // products
  std::shared_ptr<Node> base;                 // quotients and localizations
  std::optional<RingHom> hom;
};
using NodePtr = std::shared_ptr<Node>;

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {}

  RingPtr run() {
    NodePtr n = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return n->ring;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000LL) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  NodePtr expr() {
    std::vector<NodePtr> pending{factor()};
    for (;;) {
      if (accept('x')) {
        pending.push_back(factor());
      } else if (peek_postfix('/')) {
        NodePtr base = collapse(pending);
        auto gens = elements(*base);
        pending = {quotient(base, gens)};
      } else if (peek_postfix('@')) {
        NodePtr base = collapse(pending);
        auto gens = elements(*base);
        pending = {localization(base, gens)};
      } else {
        return collapse(pending);
      }
    }
  }

  // Consumes "op(" when present.
  bool peek_postfix(char op) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == op) {
      ++pos_;
      expect('(');
      return true;
    }
    return false;
  }

  NodePtr factor() {
    skip_ws();
    if (accept('Z')) {
      const std::size_t at = pos_;
      const long long n = integer();
      auto node = std::make_shared<Node>();
      try {
        node->ring = make_zmod(n, limits_);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidSize)
          throw Error(ErrorKind::InvalidSize, "Z" + std::to_string(n) + " at position " +
                                                  std::to_string(at) + " needs n >= 2");
        throw;
      }
      node->modulus = n;
      return node;
    }
    if (accept('(')) {
      NodePtr n = expr();
      expect(')');
      return n;
    }
    fail("expected 'Z' or '('");
  }

  NodePtr collapse(const std::vector<NodePtr>& pending) {
    if (pending.size() == 1) return pending.front();
    std::vector<RingPtr> rings;
    for (const auto& n : pending) rings.push_back(n->ring);
    auto node = std::make_shared<Node>();
    node->ring = make_product(rings, limits_);
    node->factors = pending;
    return node;
  }

  Literal literal() {
    skip_ws();
    Literal lit;
    lit.pos = pos_;
    if (accept('(')) {
      lit.parts.push_back(literal());
      while (accept(',')) lit.parts.push_back(literal());
      expect(')');
      if (lit.parts.size() == 1) {
        Literal inner = std::move(lit.parts.front());
        return inner;
      }
      return lit;
    }
    const bool negative = accept('-');
    const long long v = integer();
    lit.value = negative ? -v : v;
    return lit;
  }

  // Element list after "op(", through the closing parenthesis.
  std::vector<Element> elements(const Node& base) {
    std::vector<Element> out;
    out.push_back(resolve(base, literal()));
    while (accept(',')) out.push_back(resolve(base, literal()));
    expect(')');
    return out;
  }

  Element resolve(const Node& node, const Literal& lit) const {
    if (node.modulus) {
      if (!lit.value) throw ParseError(lit.pos, "tuple literal in a cyclic ring");
      const long long n = *node.modulus;
      return static_cast<Element>(((*lit.value % n) + n) % n);
    }
    if (!node.factors.empty()) {
      if (lit.value) return node.ring->from_integer(*lit.value);
      if (lit.parts.size() != node.factors.size())
        throw ParseError(lit.pos, "tuple has " + std::to_string(lit.parts.size()) +
                                      " components, ring has " +
                                      std::to_string(node.factors.size()) + " factors");
      std::size_t idx = 0;
      for (std::size_t i = 0; i < node.factors.size(); ++i)
        idx = idx * node.factors[i]->ring->size() + resolve(*node.factors[i], lit.parts[i]);
      return static_cast<Element>(idx);
    }
    return (*node.hom)(resolve(*node.base, lit));
  }

  static std::string names(const FiniteRing& r, const std::vector<Element>& elems) {
    std::string s;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) s += ",";
      s += r.name(elems[i]);
    }
    return s;
  }

  NodePtr quotient(const NodePtr& base, const std::vector<Element>& gens) {
    const Ideal a = generate_ideal(base->ring, gens);
    auto [ring, hom] = make_quotient(base->ring, a, base->ring->label() + "/(" + names(*base->ring, gens) + ")");
    auto node = std::make_shared<Node>();
    node->ring = ring;
    node->base = base;
    node->hom.emplace(std::move(hom));
    return node;
  }

  NodePtr localization(const NodePtr& base, const std::vector<Element>& gens) {
    const auto s = MultiplicativeSet::generated_by(base->ring, gens);
    auto [ring, hom] = localize(s, base->ring->label() + "@(" + names(*base->ring, gens) + ")");
    auto node = std::make_shared<Node>();
    node->ring = ring;
    node->base = base;
    node->hom.emplace(std::move(hom));
    return node;
  }

  std::string_view text_;
  const Limits& limits_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr parse_ring_expression(std::string_view text, const Limits& limits) {
  return Parser(text, limits).run();
}

}  // namespace idealspace
