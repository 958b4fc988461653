#pragma once

// Test-only reference constructions, deliberately built along different
// routes from the library: ladder matrices come from Kronecker products of
// 2x2 blocks, constraint predicates are spelled out from their definitions.

#include <cstdint>
#include <string>
#include <vector>

#include "nicolai/fock.h"
#include "nicolai/sparse.h"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense identity(std::size_t n) {
  Dense m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
  Dense out(ra * rb, std::vector<std::int64_t>(ca * cb, 0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
  Dense out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

/// Jordan-Wigner ladder matrix: Z on every site below, a or a* on `site`,
/// identity above. Bit p (site lo + p) is the p-th least significant tensor
/// factor, so it appears p places from the right in the Kronecker product.
inline Dense ladder(const nicolai::SiteWindow& w, int site, bool dagger) {
  const Dense z{{1, 0}, {0, -1}};
  const Dense lower{{0, 1}, {0, 0}};  // |1> -> |0>
  const Dense raise{{0, 0}, {1, 0}};  // |0> -> |1>
  const Dense one = identity(2);
  Dense out{{1}};
  for (int s = w.hi(); s >= w.lo(); --s) {
    const Dense& f = s > site ? one : (s == site ? (dagger ? raise : lower) : z);
    out = kron(out, f);
  }
  return out;
}

/// Written product of ladder matrices (leftmost factor leftmost).
inline Dense monomial(const nicolai::FermionMonomial& m, const nicolai::SiteWindow& w) {
  Dense out = identity(w.dimension());
  for (const auto& l : m.written_factors()) out = multiply(out, ladder(w, l.site, l.dagger));
  for (auto& row : out)
    for (auto& x : row) x *= m.coefficient();
  return out;
}

inline Dense dense(const nicolai::SparseOperator& a) {
  const std::size_t n = a.dimension();
  Dense out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : a.column(j)) out[e.row][j] = e.value;
  return out;
}

/// Forbidden-triplet rule spelled out: for every even centre c with both
/// neighbours inside [lo, lo + size), bits (c-1, c, c+1) are not 010 / 101.
inline bool no_forbidden_triplet(int lo, const std::string& bits) {
  const int hi = lo + static_cast<int>(bits.size()) - 1;
  for (int c = lo + 1; c < hi; ++c) {
    if (((c % 2) + 2) % 2 != 0) continue;
    const std::string t = bits.substr(static_cast<std::size_t>(c - 1 - lo), 3);
    if (t == "010" || t == "101") return false;
  }
  return true;
}

inline bool open_boundary(const std::string& bits) {
  const std::size_t n = bits.size();
  return bits[0] == bits[1] && bits[n - 2] == bits[n - 1];
}

inline std::string bitstring(std::uint64_t index, int size) {
  std::string s(static_cast<std::size_t>(size), '0');
  for (int p = 0; p < size; ++p)
    if ((index >> p) & 1U) s[static_cast<std::size_t>(p)] = '1';
  return s;
}

/// Brute force over all 2^(2n+1) bitstrings on I(0, n).
inline std::vector<std::string> brute_force_upsilon_hat(int n) {
  std::vector<std::string> out;
  const int size = 2 * n + 1;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << size); ++b) {
    const std::string s = bitstring(b, size);
    if (no_forbidden_triplet(0, s) && open_boundary(s)) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
