#include "hallkit/arith.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace hallkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

Factorization factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  Factorization f;
  BigInt m = n;
  for (std::uint64_t d = 2; BigInt(d) * d <= m; ++d) {
    while (m % d == 0) {
      ++f[d];
      m /= d;
    }
  }
  if (m > 1) {
    if (m > std::numeric_limits<std::uint64_t>::max())
      throw std::invalid_argument("factorize: cofactor exceeds 64 bits");
    ++f[m.convert_to<std::uint64_t>()];
  }
  return f;
}

BigInt expand(const Factorization& f) {
  BigInt r = 1;
  for (auto [p, e] : f)
    for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Factorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [p, e] : f) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

PiSet::PiSet(std::set<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p)) throw InvalidPi("not a prime: " + std::to_string(p));
}

PiSet::PiSet(std::initializer_list<std::uint64_t> primes)
    : PiSet(std::set<std::uint64_t>(primes)) {}

PiSet PiSet::parse(std::string_view csv) {
  std::set<std::uint64_t> primes;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto end = csv.find(',', pos);
    if (end == std::string_view::npos) end = csv.size();
    auto tok = csv.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw InvalidPi("empty entry in prime list '" + std::string(csv) + "'");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidPi("not an integer: '" + std::string(tok) + "'");
    primes.insert(v);
    pos = end + 1;
  }
  return PiSet(std::move(primes));
}

std::string PiSet::to_string() const {
  std::string s;
  for (auto p : primes_) {
    if (!s.empty()) s += ",";
    s += std::to_string(p);
  }
  return s;
}

Factorization pi_part(const Factorization& n, const PiSet& pi) {
  Factorization r;
  for (auto [p, e] : n)
    if (pi.contains(p)) r[p] = e;
  return r;
}

BigInt pi_part(const BigInt& n, const PiSet& pi) {
  if (n < 1) throw std::invalid_argument("pi_part: argument must be positive");
  BigInt r = 1;
  BigInt m = n;
  for (auto p : pi.primes()) {
    while (m % p == 0) {
      m /= p;
      r *= p;
    }
  }
  return r;
}

bool is_pi_number(const BigInt& n, const PiSet& pi) { return pi_part(n, pi) == n; }

bool is_pi_prime_set(const std::vector<std::uint64_t>& primes, const PiSet& pi) {
  for (auto p : primes)
    if (!pi.contains(p)) return false;
  return true;
}

}  // namespace hallkit
