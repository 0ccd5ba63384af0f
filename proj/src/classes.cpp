#include "symtau/classes.hpp"

#include <stdexcept>
#include <string>

namespace symtau {

namespace {

// Exact positive-semidefiniteness test by fraction-free symmetric
// elimination: pivot on a strictly positive diagonal entry and eliminate its
// row/column; a negative diagonal entry refutes, and once every diagonal
// entry is zero the matrix must vanish entirely (a PSD matrix with a zero
// diagonal entry has a zero row).
bool is_psd(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<bool> done(n, false);
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      int s = m[i][i].sign();
      if (s < 0) return false;
      if (s > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j] && m[i][j] != 0) return false;
      }
      return true;
    }
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Rational f = m[i][pivot] / m[pivot][pivot];
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m[i][j] -= f * m[pivot][j];
    }
  }
}

}  // namespace

ResidueSpace::ResidueSpace(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) throw std::invalid_argument("ResidueSpace: Gram matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw std::invalid_argument("ResidueSpace: Gram matrix not symmetric");
  // xi.xi <= 0 for every residue <=> -G is positive semidefinite.
  std::vector<std::vector<Rational>> neg(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) neg[i][j] = -gram_[i][j];
  if (!is_psd(std::move(neg)))
    throw std::invalid_argument("ResidueSpace: Gram matrix is not negative semidefinite");
}

const Rational& ResidueSpace::gram(std::size_t i, std::size_t j) const {
  if (i >= gram_.size() || j >= gram_.size())
    throw std::invalid_argument("ResidueSpace: unknown residue identifier " +
                                std::to_string(i >= gram_.size() ? i : j));
  return gram_[i][j];
}

NS2Class ns2(Rational n, Rational gamma) { return {std::move(n), std::move(gamma), {}}; }

NS2Class ns2(Rational n, Rational gamma, std::size_t residue_id) {
  return {std::move(n), std::move(gamma), {{residue_id, Rational(1)}}};
}

Rational residue_pairing(const ResidueVec& a, const ResidueVec& b, const ResidueSpace& space) {
  Rational out = 0;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) out += ci * cj * space.gram(i, j);
  return out;
}

Rational intersect(const NS2Class& d1, const NS2Class& d2, const ResidueSpace& space,
                   long genus) {
  if (genus < 2) throw std::invalid_argument("intersect: genus must be >= 2");
  return d1.n * d2.n - d1.gamma * d2.gamma * genus + residue_pairing(d1.residue, d2.residue, space);
}

Rational intersect(const NS2Class& d1, const NS2Class& d2, long genus) {
  if (!d1.residue.empty() || !d2.residue.empty())
    throw std::invalid_argument("intersect: class carries a residue but no space was given");
  return intersect(d1, d2, ResidueSpace(), genus);
}

NS2Class combine(const NS2Class& d1, const Rational& c1, const NS2Class& d2,
                 const Rational& c2) {
  NS2Class out;
  out.n = c1 * d1.n + c2 * d2.n;
  out.gamma = c1 * d1.gamma + c2 * d2.gamma;
  // Merge the two sorted residue combinations, dropping cancelled entries.
  std::size_t i = 0, j = 0;
  while (i < d1.residue.size() || j < d2.residue.size()) {
    bool take1 = j >= d2.residue.size() ||
                 (i < d1.residue.size() && d1.residue[i].first < d2.residue[j].first);
    bool take2 = i >= d1.residue.size() ||
                 (j < d2.residue.size() && d2.residue[j].first < d1.residue[i].first);
    if (take1) {
      Rational c = c1 * d1.residue[i].second;
      if (c != 0) out.residue.emplace_back(d1.residue[i].first, std::move(c));
      ++i;
    } else if (take2) {
      Rational c = c2 * d2.residue[j].second;
      if (c != 0) out.residue.emplace_back(d2.residue[j].first, std::move(c));
      ++j;
    } else {
      Rational c = c1 * d1.residue[i].second + c2 * d2.residue[j].second;
      if (c != 0) out.residue.emplace_back(d1.residue[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

std::pair<Rational, Rational> to_x_delta(const NS2Class& d) {
  return {d.n + d.gamma, -d.gamma / 2};
}

NS2Class from_x_delta(const Rational& coeff_x, const Rational& coeff_delta) {
  Rational gamma = coeff_delta * -2;
  return {coeff_x - gamma, std::move(gamma), {}};
}

NS2Class pencil_curve_class(long degree) {
  if (degree < 2) throw std::invalid_argument("pencil_curve_class: degree must be >= 2");
  return ns2(Rational(degree - 1), Rational(1));
}

Rational r_value(const Rational& x_deg, const Rational& delta_deg) {
  if (x_deg <= 0) throw std::invalid_argument("r_value: x-degree must be positive");
  return (delta_deg - 2 * x_deg) / (2 * x_deg);
}

}  // namespace symtau
