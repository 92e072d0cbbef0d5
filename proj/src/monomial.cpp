#include "polytoric/monomial.hpp"

#include <sstream>

namespace polytoric {

namespace {
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a) throw Overflow("exponent addition overflows 64 bits");
  return s;
}
}  // namespace

void Monomial::check_len(const Monomial& other, const char* op) const {
  if (e_.size() != other.e_.size())
    throw LengthMismatch(std::string(op) + ": operands have " +
                         std::to_string(e_.size()) + " and " +
                         std::to_string(other.e_.size()) + " variables");
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e_) d = checked_add(d, x);
  return d;
}

Monomial Monomial::multiply(const Monomial& other) const {
  check_len(other, "multiply");
  std::vector<std::uint64_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = checked_add(e_[i], other.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::exchange(int i, int j) const {
  if (e_[i] == 0)
    throw ZeroExponent("exchange: exponent of x_" + std::to_string(i + 1) + " is zero");
  if (i == j) return *this;
  std::vector<std::uint64_t> r = e_;
  r[i] -= 1;
  r[j] = checked_add(r[j], 1);
  return Monomial(std::move(r));
}

bool Monomial::divisible_by(const Monomial& other) const {
  check_len(other, "divisible_by");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < other.e_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& other) const {
  check_len(other, "divide");
  std::vector<std::uint64_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < other.e_[i]) throw PreconditionViolation("divide: not divisible");
    r[i] = e_[i] - other.e_[i];
  }
  return Monomial(std::move(r));
}

std::string Monomial::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out << ' ';
    out << e_[i];
  }
  return out.str();
}

std::optional<Monomial> try_exchange(const Monomial& m, int from, int to) {
  if (from == to) return m;
  if (m.deg(from) == 0) return std::nullopt;
  return m.exchange(from, to);
}

std::string pretty(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.deg(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m.deg(i) > 1) out += "^" + std::to_string(m.deg(i));
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  // splitmix64-style mixing of the exponent entries.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL * (m.vars() + 1);
  for (auto x : m.exponents()) {
    std::uint64_t z = h + x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace polytoric
