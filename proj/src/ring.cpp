#include "idealspace/ring.hpp"

#include "idealspace/kernels.hpp"

namespace idealspace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::InvalidIdeal: return "InvalidIdeal";
    case ErrorKind::InvalidHom: return "InvalidHom";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::ZeroInMultiplicativeSet: return "ZeroInMultiplicativeSet";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NoPartitionFound: return "NoPartitionFound";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

FiniteRing::FiniteRing(std::size_t size, std::vector<Element> add, std::vector<Element> mul,
                       Element zero, Element one, std::string label,
                       std::vector<std::string> names, Exec exec)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      label_(std::move(label)),
      names_(std::move(names)) {
  if (size_ < 2) throw Error(ErrorKind::InvalidSize, "rings must have at least two elements");
  if (add_.size() != size_ * size_ || mul_.size() != size_ * size_)
    throw Error(ErrorKind::InvalidTable, "operation tables must be size x size");
  if (names_.size() != size_) throw Error(ErrorKind::InvalidTable, "one name per element required");
  if (zero_ >= size_ || one_ >= size_) throw Error(ErrorKind::InvalidTable, "zero/one out of range");
  for (std::size_t i = 0; i < size_ * size_; ++i)
    if (add_[i] >= size_ || mul_[i] >= size_)
      throw Error(ErrorKind::InvalidTable, "table entry out of range");
  if (zero_ == one_) throw Error(ErrorKind::InvalidSize, "zero equals one");

  auto violation = exec == Exec::serial
                       ? kernels::serial::ring_axioms(size_, add_, mul_, zero_, one_)
                       : kernels::parallel::ring_axioms(size_, add_, mul_, zero_, one_);
  if (violation)
    throw Error(ErrorKind::InvalidTable,
                "ring axiom '" + violation->axiom + "' fails at (" + std::to_string(violation->a) +
                    "," + std::to_string(violation->b) + "," + std::to_string(violation->c) + ")");

  neg_.resize(size_);
  inverse_.resize(size_);
  for (Element a = 0; a < size_; ++a) {
    for (Element b = 0; b < size_; ++b) {
      if (this->add(a, b) == zero_) neg_[a] = b;
      if (this->mul(a, b) == one_) inverse_[a] = b;
    }
  }
  for (Element a = 0; a < size_; ++a) {
    if (!by_name_.emplace(names_[a], a).second)
      throw Error(ErrorKind::InvalidTable, "duplicate element name '" + names_[a] + "'");
  }
}

Element FiniteRing::power(Element a, std::size_t k) const {
  Element r = one_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteRing::is_zero_divisor(Element a) const {
  for (Element b = 0; b < size_; ++b)
    if (b != zero_ && mul(a, b) == zero_) return true;
  return false;
}

bool FiniteRing::is_nilpotent(Element a) const {
  Element p = a;
  for (std::size_t k = 1; k <= size_; ++k) {
    if (p == zero_) return true;
    p = mul(p, a);
  }
  return p == zero_;
}

std::size_t FiniteRing::additive_order(Element a) const {
  std::size_t k = 1;
  for (Element s = a; s != zero_; s = add(s, a)) ++k;
  return k;
}

Element FiniteRing::from_integer(long long k) const {
  const auto order = static_cast<long long>(additive_order(one_));
  long long r = k % order;
  if (r < 0) r += order;
  Element e = zero_;
  for (long long i = 0; i < r; ++i) e = add(e, one_);
  return e;
}

std::optional<Element> FiniteRing::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_zmod(long long n, const Limits& limits) {
  if (n < 2) throw Error(ErrorKind::InvalidSize, "Z" + std::to_string(n) + " needs n >= 2");
  if (static_cast<unsigned long long>(n) > limits.max_ring_size)
    throw Error(ErrorKind::CapExceeded, "Z" + std::to_string(n) + " exceeds ring size cap " +
                                            std::to_string(limits.max_ring_size));
  const auto size = static_cast<std::size_t>(n);
  std::vector<Element> add(size * size), mul(size * size);
  std::vector<std::string> names(size);
  for (std::size_t a = 0; a < size; ++a) {
    names[a] = std::to_string(a);
    for (std::size_t b = 0; b < size; ++b) {
      add[a * size + b] = static_cast<Element>((a + b) % size);
      mul[a * size + b] = static_cast<Element>((a * b) % size);
    }
  }
  return std::make_shared<const FiniteRing>(size, std::move(add), std::move(mul), 0, 1,
                                            "Z" + std::to_string(n), std::move(names));
}

namespace {

bool has_top_level_x(const std::string& label) {
  int depth = 0;
  for (char c : label) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == 'x' && depth == 0) return true;
  }
  return false;
}

}  // namespace

RingPtr make_product(std::span<const RingPtr> rings, const Limits& limits) {
  if (rings.empty()) throw Error(ErrorKind::InvalidArity, "product of an empty list");
  if (rings.size() == 1) return rings.front();

  std::size_t size = 1;
  for (const auto& r : rings) {
    size *= r->size();
    if (size > limits.max_ring_size)
      throw Error(ErrorKind::CapExceeded, "product exceeds ring size cap " +
                                              std::to_string(limits.max_ring_size));
  }
  const std::size_t k = rings.size();

  // Mixed radix with the first factor most significant.
  auto decode = [&](std::size_t idx) {
    std::vector<Element> comp(k);
    for (std::size_t i = k; i-- > 0;) {
      comp[i] = static_cast<Element>(idx % rings[i]->size());
      idx /= rings[i]->size();
    }
    return comp;
  };
  auto encode = [&](const std::vector<Element>& comp) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * rings[i]->size() + comp[i];
    return static_cast<Element>(idx);
  };

  std::vector<std::vector<Element>> comps(size);
  for (std::size_t i = 0; i < size; ++i) comps[i] = decode(i);

  std::vector<Element> add(size * size), mul(size * size);
  std::vector<Element> tmp(k);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = rings[i]->add(comps[a][i], comps[b][i]);
      add[a * size + b] = encode(tmp);
      for (std::size_t i = 0; i < k; ++i) tmp[i] = rings[i]->mul(comps[a][i], comps[b][i]);
      mul[a * size + b] = encode(tmp);
    }
  }

  std::vector<std::string> names(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += rings[i]->name(comps[a][i]);
    }
    names[a] = s + ")";
  }

  std::string label;
  std::vector<Element> zero(k), one(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i) label += "x";
    const std::string& l = rings[i]->label();
    label += has_top_level_x(l) ? "(" + l + ")" : l;
    zero[i] = rings[i]->zero();
    one[i] = rings[i]->one();
  }
  return std::make_shared<const FiniteRing>(size, std::move(add), std::move(mul), encode(zero),
                                            encode(one), std::move(label), std::move(names));
}

std::optional<AxiomViolation> check_ring_axioms(std::size_t size, std::span<const Element> add,
                                                std::span<const Element> mul, Element zero,
                                                Element one, Exec exec) {
  return exec == Exec::serial ? kernels::serial::ring_axioms(size, add, mul, zero, one)
                              : kernels::parallel::ring_axioms(size, add, mul, zero, one);
}

}  // namespace idealspace
