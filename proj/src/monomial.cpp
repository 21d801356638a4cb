#include "macfrob/monomial.hpp"

#include "macfrob/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace macfrob {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  require(!exps_.empty(), "monomial needs at least one variable");
  for (Exponent e : exps_) {
    require(e >= 0, "monomial exponents must be non-negative");
    degree_ += e;
  }
}

Monomial Monomial::one(int arity) {
  require(arity >= 1, "arity must be positive");
  return Monomial(std::vector<Exponent>(static_cast<std::size_t>(arity), 0));
}

Monomial Monomial::variable(int arity, int var, Exponent power) {
  require(arity >= 1 && var >= 0 && var < arity, "variable index out of range");
  require(power >= 0, "power must be non-negative");
  std::vector<Exponent> e(static_cast<std::size_t>(arity), 0);
  e[static_cast<std::size_t>(var)] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  require(arity() == rhs.arity(), "arity mismatch in monomial product");
  std::vector<Exponent> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Exponent>(e[i] + rhs.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::with_move(int from_var, int to_var) const {
  require(divisible_by(from_var), "monomial not divisible by the source variable");
  std::vector<Exponent> e(exps_);
  e[static_cast<std::size_t>(from_var)] -= 1;
  e[static_cast<std::size_t>(to_var)] += 1;
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < arity(); ++i) {
    Exponent e = exps_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!first) out << '*';
    out << 'x' << (i + 1);
    if (e > 1) out << '^' << e;
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Exponent e : exps_) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(e)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::string format_alias(const Monomial& m) {
  require(m.arity() <= 4, "alias form is only defined for up to four variables");
  static constexpr char names[4] = {'x', 'y', 'z', 'w'};
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.arity(); ++i) {
    Exponent e = m.exponent(i);
    if (e == 0) continue;
    out << names[i];
    if (e > 1) out << '^' << e;
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

Monomial parse_monomial(std::string_view text, int arity) {
  require(arity >= 1, "arity must be positive");
  std::vector<Exponent> exps(static_cast<std::size_t>(arity), 0);
  std::size_t i = 0;
  auto skip_seps = [&] {
    while (i < text.size() && (text[i] == '*' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
  };
  auto read_int = [&]() -> long {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    require(i > start, "expected digits in monomial");
    return std::stol(std::string(text.substr(start, i - start)));
  };

  skip_seps();
  require(i < text.size(), "empty monomial");
  if (text[i] == '1') {
    ++i;
    skip_seps();
    require(i == text.size(), "unexpected text after constant monomial");
    return Monomial(std::move(exps));
  }

  while (i < text.size()) {
    char c = text[i];
    int var = -1;
    if (c == 'x') {
      ++i;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        var = static_cast<int>(read_int()) - 1;
      } else {
        var = 0;
      }
    } else if (c == 'y' || c == 'z' || c == 'w') {
      var = (c == 'y') ? 1 : (c == 'z') ? 2 : 3;
      ++i;
    } else {
      throw std::invalid_argument("unexpected character in monomial: " + std::string(1, c));
    }
    require(var >= 0 && var < arity, "variable index out of range for this arity");
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = read_int();
      require(power >= 0, "negative exponent");
    }
    require(exps[static_cast<std::size_t>(var)] + power <= 32767, "exponent too large");
    exps[static_cast<std::size_t>(var)] = static_cast<Exponent>(exps[static_cast<std::size_t>(var)] + power);
    skip_seps();
  }
  return Monomial(std::move(exps));
}

std::string_view term_order_name(TermOrder order) {
  switch (order) {
    case TermOrder::Lex: return "lex";
    case TermOrder::RevLex: return "revlex";
    case TermOrder::DegRevLex: return "degrevlex";
  }
  throw std::logic_error("unknown term order");
}

TermOrder parse_term_order(std::string_view name) {
  if (name == "lex") return TermOrder::Lex;
  if (name == "revlex") return TermOrder::RevLex;
  if (name == "degrevlex") return TermOrder::DegRevLex;
  throw std::invalid_argument("unknown term order: " + std::string(name));
}

std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  require(a.arity() == b.arity(), "arity mismatch in comparison");
  require(a.degree() == b.degree(), "term orders are defined within one graded component");
  auto ea = a.exponents();
  auto eb = b.exponents();
  switch (order) {
    case TermOrder::Lex:
      for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] <=> eb[i];
      }
      return std::strong_ordering::equal;
    case TermOrder::RevLex:
    case TermOrder::DegRevLex:
      for (std::size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i]) return eb[i] <=> ea[i];
      }
      return std::strong_ordering::equal;
  }
  throw std::logic_error("unknown term order");
}

namespace {

void emit_monomials(int n, int d, std::vector<Exponent>& prefix, std::vector<Monomial>& out) {
  if (n == 1) {
    prefix.push_back(static_cast<Exponent>(d));
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    prefix.push_back(static_cast<Exponent>(e));
    emit_monomials(n - 1, d - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int n, int d, TermOrder order) {
  require(n >= 1, "arity must be positive");
  require(d >= 0, "degree must be non-negative");
  BigInt count = dim_graded_component(n, d);
  if (count > BigInt(100'000'000)) {
    throw SizeCapError("graded component too large to enumerate: dim = " + count.str());
  }
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Exponent> prefix;
  emit_monomials(n, d, prefix, out);  // descending Lex by construction
  if (order != TermOrder::Lex) {
    std::sort(out.begin(), out.end(),
              [order](const Monomial& a, const Monomial& b) { return order_greater(order, a, b); });
  }
  return out;
}

GradedBasis::GradedBasis(int n, int d, TermOrder order, std::int64_t size_cap)
    : n_(n), d_(d), order_(order) {
  BigInt count = dim_graded_component(n, d);
  if (count > BigInt(size_cap)) {
    throw SizeCapError("graded component exceeds cap: dim S_" + std::to_string(d) + " = " +
                       count.str());
  }
  monomials_ = enumerate_monomials(n, d, order);
}

std::size_t GradedBasis::rank_of(const Monomial& m) const {
  require(m.arity() == n_, "arity mismatch");
  require(m.degree() == d_, "degree mismatch");
  auto it = std::lower_bound(
      monomials_.begin(), monomials_.end(), m,
      [this](const Monomial& a, const Monomial& b) { return order_greater(order_, a, b); });
  if (it == monomials_.end() || !(*it == m)) {
    throw std::logic_error("monomial missing from graded basis");
  }
  return static_cast<std::size_t>(it - monomials_.begin());
}

BasisPtr make_basis(int n, int d, TermOrder order, std::int64_t size_cap) {
  return std::make_shared<const GradedBasis>(n, d, order, size_cap);
}

MonomialSpace::MonomialSpace(int n, int d, std::vector<Monomial> members)
    : n_(n), d_(d), members_(std::move(members)) {
  require(n >= 1 && d >= 0, "bad arity or degree");
  for (const Monomial& m : members_) {
    require(m.arity() == n, "member arity mismatch");
    require(m.degree() == d, "all members must share the space's degree");
  }
  std::sort(members_.begin(), members_.end(), [](const Monomial& a, const Monomial& b) {
    return order_greater(TermOrder::Lex, a, b);
  });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool MonomialSpace::contains(const Monomial& m) const {
  if (m.arity() != n_ || m.degree() != d_) return false;
  auto it = std::lower_bound(
      members_.begin(), members_.end(), m,
      [](const Monomial& a, const Monomial& b) { return order_greater(TermOrder::Lex, a, b); });
  return it != members_.end() && *it == m;
}

}  // namespace macfrob
