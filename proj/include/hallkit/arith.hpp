#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hallkit {

using BigInt = boost::multiprecision::cpp_int;

/// prime -> exponent
using Factorization = std::map<std::uint64_t, unsigned>;

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
Factorization factorize(const BigInt& n);
BigInt expand(const Factorization& f);
std::string to_string(const BigInt& n);
/// Renders as e.g. "2^10*3^2*5".
std::string to_string(const Factorization& f);

class InvalidPi : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite set of primes. Everything outside the set belongs to the
/// complement pi'.
class PiSet {
 public:
  PiSet() = default;
  /// Throws InvalidPi if any member is not prime.
  explicit PiSet(std::set<std::uint64_t> primes);
  PiSet(std::initializer_list<std::uint64_t> primes);
  /// Parses a comma separated list such as "2,3".
  static PiSet parse(std::string_view csv);

  bool contains(std::uint64_t p) const { return primes_.count(p) != 0; }
  const std::set<std::uint64_t>& primes() const { return primes_; }
  std::string to_string() const;
  std::vector<std::uint64_t> to_vector() const { return {primes_.begin(), primes_.end()}; }

  friend bool operator==(const PiSet&, const PiSet&) = default;

 private:
  std::set<std::uint64_t> primes_;
};

/// Largest divisor of n whose prime factors all lie in pi.
BigInt pi_part(const BigInt& n, const PiSet& pi);
Factorization pi_part(const Factorization& n, const PiSet& pi);
bool is_pi_number(const BigInt& n, const PiSet& pi);
bool is_pi_prime_set(const std::vector<std::uint64_t>& primes, const PiSet& pi);

}  // namespace hallkit
