#include "symtau/cycles.hpp"

#include "symtau/rational.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace symtau {

namespace {

BigInt binomial_big(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) * i! / i! at each step
  }
  return out;
}

long long checked_ll(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error(std::string(what) + ": value exceeds long long");
  return v.convert_to<long long>();
}

void check_cover(const CoverDatum& cover, long genus) {
  if (genus < 2) throw std::invalid_argument("cover cycle: genus must be >= 2");
  if (cover.degree < 2) throw std::invalid_argument("cover cycle: degree must be >= 2");
  if (cover.target_genus < 0)
    throw std::invalid_argument("cover cycle: target genus must be >= 0");
}

}  // namespace

long long binomial(long long n, long long k) { return checked_ll(binomial_big(n, k), "binomial"); }

long long ramification_degree(const CoverDatum& cover, long genus) {
  check_cover(cover, genus);
  return 2LL * (genus - 1) - 2LL * cover.degree * (cover.target_genus - 1);
}

CycleNumbers cover_cycle(const CoverDatum& cover, long genus) {
  long long ram = ramification_degree(cover, genus);
  if (ram < 0)
    throw std::invalid_argument(
        "cover cycle: inadmissible cover (ramification degree " + std::to_string(ram) +
        " < 0 for " + std::to_string(cover.degree) + " sheets over genus " +
        std::to_string(cover.target_genus) + " with ambient genus " + std::to_string(genus) + ")");
  return {1, static_cast<long long>(cover.degree) * cover.target_genus, ram};
}

CycleNumbers b_cycle(const CoverDatum& cover, long symmetric_index, long genus) {
  check_cover(cover, genus);
  const long long n = cover.degree;
  const long long h = cover.target_genus;
  const long long d = symmetric_index;
  if (d < 2 || d > n)
    throw std::invalid_argument("b_cycle: symmetric index must satisfy 2 <= d <= sheets");

  BigInt x = binomial_big(n - 1, n - d);
  BigInt theta = n * h * binomial_big(n - 2, n - d) + genus * binomial_big(n - 2, n - d - 1);
  BigInt delta = 2 * (d + genus - 1) * x - 2 * theta;
  return {checked_ll(x, "b_cycle x"), checked_ll(theta, "b_cycle theta"),
          checked_ll(delta, "b_cycle delta")};
}

std::pair<long long, long long> diagonal_class(long symmetric_index, long genus) {
  if (genus < 2) throw std::invalid_argument("diagonal_class: genus must be >= 2");
  if (symmetric_index < 2)
    throw std::invalid_argument("diagonal_class: symmetric index must be >= 2");
  return {2LL * (symmetric_index + genus - 1), -2LL};
}

}  // namespace symtau
