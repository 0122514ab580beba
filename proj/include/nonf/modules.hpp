#pragma once

// Linear actions of a finite group on F_p-vector spaces: validation
// (homomorphism, faithfulness, irreducibility), the endomorphism algebra of
// a module, and the determinant test deciding when a shifted generating
// pair of the point group extends to a generating pair of the split
// extension V^u x| H with u = dim_End(V).
//
// Conventions: vectors are columns over F_p, matrices act on the left, and
// an F_p^d vector is encoded as an integer with little-endian base-p
// digits (digit i = coordinate i), matching the elementary abelian group
// construction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonf/common.hpp"
#include "nonf/families.hpp"
#include "nonf/group.hpp"
#include "nonf/subgroup.hpp"

namespace nonf {

// ------------------------------------------------------- F_p linear algebra ---

struct FpMat {
  std::uint32_t p = 2, rows = 0, cols = 0;
  std::vector<std::uint32_t> a;  // row-major, entries reduced mod p

  FpMat() = default;
  FpMat(std::uint32_t p_, std::uint32_t r, std::uint32_t c)
      : p(p_), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static FpMat identity(std::uint32_t p, std::uint32_t n) {
    FpMat m(p, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const FpMat& x, const FpMat& y) {
    return x.p == y.p && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline FpMat fp_mul(const FpMat& x, const FpMat& y) {
  if (x.cols != y.rows || x.p != y.p) throw ShapeMismatch("matrix product shape");
  FpMat r(x.p, x.rows, y.cols);
  for (std::uint32_t i = 0; i < x.rows; ++i)
    for (std::uint32_t k = 0; k < x.cols; ++k) {
      const std::uint64_t xv = x.at(i, k);
      if (!xv) continue;
      for (std::uint32_t j = 0; j < y.cols; ++j)
        r.at(i, j) = static_cast<std::uint32_t>((r.at(i, j) + xv * y.at(k, j)) % x.p);
    }
  return r;
}

inline FpMat fp_sub(const FpMat& x, const FpMat& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.p != y.p) throw ShapeMismatch("matrix difference shape");
  FpMat r(x.p, x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] + x.p - y.a[i]) % x.p;
  return r;
}

inline std::uint32_t fp_inv_scalar(std::uint32_t v, std::uint32_t p) {
  // p prime; Fermat.
  std::uint32_t r = 1, b = v % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * b % p);
    b = static_cast<std::uint32_t>(static_cast<std::uint64_t>(b) * b % p);
  }
  return r;
}

// In-place row reduction to reduced row echelon form; returns pivot columns.
inline std::vector<std::uint32_t> fp_rref(FpMat& m) {
  std::vector<std::uint32_t> pivots;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::uint32_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (std::uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
    const std::uint32_t inv = fp_inv_scalar(m.at(row, col), m.p);
    for (std::uint32_t j = 0; j < m.cols; ++j)
      m.at(row, j) = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m.at(row, j)) * inv % m.p);
    for (std::uint32_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const std::uint64_t f = m.at(i, col);
      for (std::uint32_t j = 0; j < m.cols; ++j)
        m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + (m.p - 1) * f % m.p * m.at(row, j)) % m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::uint32_t fp_rank(FpMat m) { return static_cast<std::uint32_t>(fp_rref(m).size()); }

inline std::optional<FpMat> fp_inverse(const FpMat& m) {
  if (m.rows != m.cols) throw ShapeMismatch("inverse of non-square matrix");
  FpMat aug(m.p, m.rows, 2 * m.cols);
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    for (std::uint32_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto piv = fp_rref(aug);
  if (piv.size() != m.rows) return std::nullopt;
  FpMat inv(m.p, m.rows, m.cols);
  for (std::uint32_t i = 0; i < m.rows; ++i)
    for (std::uint32_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

// Basis of the right kernel {x : m x = 0}.
inline std::vector<std::vector<std::uint32_t>> fp_nullspace(FpMat m) {
  const std::uint32_t n = m.cols;
  auto piv = fp_rref(m);
  std::vector<char> is_pivot(n, 0);
  for (std::uint32_t c : piv) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::uint32_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::uint32_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = (m.p - m.at(r, free) % m.p) % m.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = rhs; nullopt when inconsistent (m need not be square).
inline std::optional<std::vector<std::uint32_t>> fp_solve(const FpMat& m,
                                                          const std::vector<std::uint32_t>& rhs) {
  if (rhs.size() != m.rows) throw ShapeMismatch("solve rhs size");
  FpMat aug(m.p, m.rows, m.cols + 1);
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    for (std::uint32_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i] % m.p;
  }
  auto piv = fp_rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;  // 0 = 1 row
  std::vector<std::uint32_t> x(m.cols, 0);
  for (std::uint32_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, m.cols);
  return x;
}

inline std::vector<std::uint32_t> fp_mat_vec(const FpMat& m, const std::vector<std::uint32_t>& v) {
  if (v.size() != m.cols) throw ShapeMismatch("matrix-vector shape");
  std::vector<std::uint32_t> out(m.rows, 0);
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    std::uint64_t s = 0;
    for (std::uint32_t j = 0; j < m.cols; ++j) s += static_cast<std::uint64_t>(m.at(i, j)) * v[j];
    out[i] = static_cast<std::uint32_t>(s % m.p);
  }
  return out;
}

// Vector <-> little-endian base-p integer encoding.
inline std::vector<std::uint32_t> fp_unpack(std::uint32_t x, std::uint32_t p, std::uint32_t d) {
  std::vector<std::uint32_t> v(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    v[i] = x % p;
    x /= p;
  }
  return v;
}

inline std::uint32_t fp_pack(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::uint32_t x = 0, pw = 1;
  for (std::uint32_t c : v) {
    x += (c % p) * pw;
    pw *= p;
  }
  return x;
}

// Incremental row-echelon basis of a subspace of F_p^d.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {}

  // Reduces v against the basis; inserts the remainder if nonzero.
  // Returns true when the dimension grew.
  bool insert(std::vector<std::uint32_t> v) {
    reduce(v);
    std::uint32_t lead = d_;
    for (std::uint32_t i = 0; i < d_; ++i)
      if (v[i]) {
        lead = i;
        break;
      }
    if (lead == d_) return false;
    const std::uint32_t inv = fp_inv_scalar(v[lead], p_);
    for (auto& c : v) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p_);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  void reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t f = v[leads_[r]];
      if (!f) continue;
      for (std::uint32_t i = 0; i < d_; ++i)
        v[i] = static_cast<std::uint32_t>((v[i] + static_cast<std::uint64_t>(p_ - 1) * f % p_ * rows_[r][i]) % p_);
    }
  }

  bool contains(std::vector<std::uint32_t> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
  }

  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

 private:
  std::uint32_t p_, d_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::uint32_t> leads_;
};

// ----------------------------------------------------------- module actions ---

struct ModuleAction {
  GroupPtr h;              // the acting group
  std::uint32_t p = 2;     // field characteristic (prime)
  std::uint32_t dim = 0;   // F_p-dimension of the module
  std::vector<FpMat> gen_mats;  // one per h->generators(), in order
  std::vector<FpMat> mats;      // one per element of h

  const FpMat& matrix_of(element_t x) const { return mats[x]; }
};

// Builds per-element matrices by transporting the generator matrices along
// the Cayley graph, verifying consistency (i.e. that the assignment is a
// homomorphism) and invertibility.
inline ModuleAction build_module_action(GroupPtr h, std::uint32_t p, std::uint32_t dim,
                                        std::vector<FpMat> gen_mats) {
  const auto& gens = h->generators();
  if (gen_mats.size() != gens.size()) throw ShapeMismatch("one matrix per generator required");
  for (const FpMat& m : gen_mats) {
    if (m.p != p || m.rows != dim || m.cols != dim) throw ShapeMismatch("generator matrix shape");
    if (fp_rank(m) != dim) throw NotAnAction("generator matrix is singular");
  }
  ModuleAction act;
  act.h = h;
  act.p = p;
  act.dim = dim;
  act.gen_mats = gen_mats;
  act.mats.assign(h->order(), FpMat());
  std::vector<char> known(h->order(), 0);
  act.mats[kIdentity] = FpMat::identity(p, dim);
  known[kIdentity] = 1;
  std::vector<element_t> queue = {kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const element_t x = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const element_t y = h->mul(x, gens[s]);
      FpMat m = fp_mul(act.mats[x], gen_mats[s]);
      if (!known[y]) {
        act.mats[y] = std::move(m);
        known[y] = 1;
        queue.push_back(y);
      } else if (!(act.mats[y] == m)) {
        throw NotAnAction("generator matrices do not define a homomorphism");
      }
    }
  }
  if (queue.size() != h->order()) throw NotAnAction("generators do not generate the acting group");
  return act;
}

inline std::vector<element_t> action_kernel(const ModuleAction& act) {
  std::vector<element_t> k;
  const FpMat id = FpMat::identity(act.p, act.dim);
  for (element_t x = 0; x < act.h->order(); ++x)
    if (act.mats[x] == id) k.push_back(x);
  return k;
}

inline bool is_faithful(const ModuleAction& act) { return action_kernel(act).size() == 1; }

// Dimension of the smallest invariant subspace containing v.
inline std::uint32_t spin_dimension(const ModuleAction& act, const std::vector<std::uint32_t>& v) {
  EchelonBasis basis(act.p, act.dim);
  std::vector<std::vector<std::uint32_t>> queue;
  if (basis.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto cur = queue[head];
    for (const FpMat& m : act.gen_mats) {
      auto img = fp_mat_vec(m, cur);
      if (basis.insert(img)) queue.push_back(std::move(img));
    }
  }
  return basis.dim();
}

// Exact irreducibility: the module is reducible iff some nonzero vector
// spins to a proper subspace (any proper invariant subspace witnesses this
// through each of its nonzero vectors). Feasible whenever p^dim is small.
inline bool is_irreducible(const ModuleAction& act) {
  if (act.dim == 0) return false;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < act.dim; ++i) {
    total *= act.p;
    if (total > caps().module_vector_cap) throw CapExceeded("module too large for vector sweep");
  }
  for (std::uint32_t x = 1; x < total; ++x)
    if (spin_dimension(act, fp_unpack(x, act.p, act.dim)) != act.dim) return false;
  return true;
}

// Basis of the algebra of F_p-matrices commuting with the whole action
// (equivalently with every generator matrix). For an irreducible module
// this is a finite field extension of F_p.
inline std::vector<FpMat> commutant_basis(const ModuleAction& act) {
  const std::uint32_t d = act.dim, n = d * d;
  FpMat sys(act.p, static_cast<std::uint32_t>(act.gen_mats.size()) * n, n);
  std::uint32_t row = 0;
  for (const FpMat& m : act.gen_mats) {
    // T m = m T, entrywise: sum_k T[i,k] m[k,j] - m[i,k] T[k,j] = 0.
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) {
        for (std::uint32_t k = 0; k < d; ++k) {
          sys.at(row, i * d + k) = (sys.at(row, i * d + k) + m.at(k, j)) % act.p;
          sys.at(row, k * d + j) = (sys.at(row, k * d + j) + (act.p - m.at(i, k) % act.p)) % act.p;
        }
        ++row;
      }
  }
  std::vector<FpMat> basis;
  for (const auto& flat : fp_nullspace(std::move(sys))) {
    FpMat t(act.p, d, d);
    t.a.assign(flat.begin(), flat.end());
    basis.push_back(std::move(t));
  }
  return basis;
}

inline std::uint32_t endo_dim(const ModuleAction& act) {
  return static_cast<std::uint32_t>(commutant_basis(act).size());
}

// x acts fixed-point-freely iff 1 is not an eigenvalue of its matrix.
inline bool acts_fixed_point_freely(const ModuleAction& act, element_t x) {
  return fp_rank(fp_sub(act.mats[x], FpMat::identity(act.p, act.dim))) == act.dim;
}

// ------------------------------------------------- split extension V^u x| H ---

struct SplitExtension {
  GroupPtr x;          // V^u x| H
  GroupPtr h;          // the point group
  std::uint32_t p = 2, d = 0, u = 0;

  std::uint32_t module_order() const {
    std::uint32_t n = 1;
    for (std::uint32_t i = 0; i < d * u; ++i) n *= p;
    return n;
  }
  // Element of x for w in V^u (little-endian digits, block j holds copy j).
  element_t embed_module(std::uint32_t w) const { return x->provenance().left_embed[w]; }
  element_t embed_point(element_t hh) const { return x->provenance().right_embed[hh]; }
};

// X = V^u x| H with h acting as u diagonal blocks of its module matrix.
inline SplitExtension module_power_split(const ModuleAction& act, std::uint32_t u,
                                         const std::string& detail) {
  const std::uint32_t d = act.dim, du = d * u;
  std::vector<std::vector<std::uint32_t>> gen_blocks;
  for (const FpMat& m : act.gen_mats) {
    std::vector<std::uint32_t> big(static_cast<std::size_t>(du) * du, 0);
    for (std::uint32_t b = 0; b < u; ++b)
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
          big[static_cast<std::size_t>(b * d + i) * du + (b * d + j)] = m.at(i, j);
    gen_blocks.push_back(std::move(big));
  }
  SplitExtension ext;
  ext.h = act.h;
  ext.p = act.p;
  ext.d = d;
  ext.u = u;
  ext.x = semidirect_by_matrices(act.p, du, act.h, gen_blocks, detail);
  return ext;
}

// ------------------------------------- shifted generating pairs, det test ---

// Precomputed coordinates over the endomorphism field F of an irreducible
// module: an F-basis of V and the change of basis taking a vector to its
// stacked F-coordinates.
struct EndoCoordinates {
  std::uint32_t p = 2, d = 0, e = 0, u = 0;
  std::vector<FpMat> field_basis;              // basis of F over F_p (e matrices)
  std::vector<std::vector<std::uint32_t>> module_basis;  // u vectors spanning V over F
  FpMat to_coords;                             // d x d; v -> stacked coords c[k*e+j]
  std::vector<FpMat> mult_table;               // e x e matrix of y -> E_j y in F-coords
  std::vector<std::uint32_t> one;              // F-coords of the identity of F

  // F-coordinates (length e*u, u blocks) of a module vector.
  std::vector<std::uint32_t> coords(const std::vector<std::uint32_t>& v) const {
    return fp_mat_vec(to_coords, v);
  }

  // e x e matrix over F_p of multiplication by the F-element with
  // coordinates c.
  FpMat mult_by(const std::vector<std::uint32_t>& c) const {
    FpMat r(p, e, e);
    for (std::uint32_t j = 0; j < e; ++j)
      for (std::size_t i = 0; i < r.a.size(); ++i)
        r.a[i] = static_cast<std::uint32_t>((r.a[i] + static_cast<std::uint64_t>(c[j]) * mult_table[j].a[i]) % p);
    return r;
  }
};

inline EndoCoordinates build_endo_coordinates(const ModuleAction& act) {
  EndoCoordinates ec;
  ec.p = act.p;
  ec.d = act.dim;
  ec.field_basis = commutant_basis(act);
  ec.e = static_cast<std::uint32_t>(ec.field_basis.size());
  if (ec.e == 0 || ec.d % ec.e != 0)
    throw ValidationError("endomorphism algebra does not give a field structure");
  ec.u = ec.d / ec.e;

  // Greedy F-basis of V: each new vector outside the span so far extends it
  // by a full e-dimensional F-line.
  FpMat change(ec.p, ec.d, ec.d);
  EchelonBasis span(ec.p, ec.d);
  std::uint32_t col = 0;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < ec.d; ++i) total *= ec.p;
  for (std::uint32_t cand = 1; cand < total && ec.module_basis.size() < ec.u; ++cand) {
    auto v = fp_unpack(cand, ec.p, ec.d);
    if (span.contains(v)) continue;
    ec.module_basis.push_back(v);
    for (std::uint32_t j = 0; j < ec.e; ++j) {
      auto img = fp_mat_vec(ec.field_basis[j], v);
      if (!span.insert(img))
        throw ValidationError("field basis vectors are dependent on the module");
      for (std::uint32_t i = 0; i < ec.d; ++i) change.at(i, col) = img[i];
      ++col;
    }
  }
  if (ec.module_basis.size() != ec.u)
    throw ValidationError("could not complete a module basis over the endomorphism field");
  auto inv = fp_inverse(change);
  if (!inv) throw ValidationError("module basis change is singular");
  ec.to_coords = std::move(*inv);

  // Structure constants: coordinates of E_i E_j over the field basis, via
  // the flattened d^2-dimensional solve.
  FpMat flat(ec.p, ec.d * ec.d, ec.e);
  for (std::uint32_t j = 0; j < ec.e; ++j)
    for (std::uint32_t r = 0; r < ec.d * ec.d; ++r) flat.at(r, j) = ec.field_basis[j].a[r];
  auto field_coords = [&](const FpMat& m) {
    std::vector<std::uint32_t> rhs(m.a.begin(), m.a.end());
    auto c = fp_solve(flat, rhs);
    if (!c) throw ValidationError("matrix outside the endomorphism algebra");
    return *c;
  };
  ec.mult_table.resize(ec.e);
  for (std::uint32_t i = 0; i < ec.e; ++i) {
    FpMat tab(ec.p, ec.e, ec.e);
    for (std::uint32_t j = 0; j < ec.e; ++j) {
      auto c = field_coords(fp_mul(ec.field_basis[i], ec.field_basis[j]));
      for (std::uint32_t k = 0; k < ec.e; ++k) tab.at(k, j) = c[k];
    }
    ec.mult_table[i] = std::move(tab);
  }
  ec.one = field_coords(FpMat::identity(ec.p, ec.d));
  return ec;
}

// u x u matrix over F of an F-linear map given by its F_p matrix; entry
// (r, k) holds the F-coordinates of the w_k-image's r-th component.
inline std::vector<std::vector<std::uint32_t>> f_matrix_of(const EndoCoordinates& ec,
                                                           const FpMat& m) {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(ec.u) * ec.u);
  for (std::uint32_t k = 0; k < ec.u; ++k) {
    auto stacked = ec.coords(fp_mat_vec(m, ec.module_basis[k]));
    for (std::uint32_t r = 0; r < ec.u; ++r)
      out[static_cast<std::size_t>(r) * ec.u + k] =
          std::vector<std::uint32_t>(stacked.begin() + r * ec.e, stacked.begin() + (r + 1) * ec.e);
  }
  return out;
}

// The shifted-pair criterion: with A_i = I - X_i (X_i the F-matrix of h_i on
// V) and B the u x u matrix whose rows are the F-coordinates of the
// components of w = (v_1, ..., v_u), the pair (h_1, w h_2) generates
// V^u x| H exactly when the block matrix
//     [ A_1  A_2 ]
//     [  0    B  ]
// is invertible over F. Invertibility is tested on the F_p expansion
// (each F-entry replaced by its e x e multiplication matrix).
inline bool shifted_pair_generates_det(const EndoCoordinates& ec, const FpMat& m1,
                                       const FpMat& m2, const std::vector<std::uint32_t>& w) {
  const std::uint32_t u = ec.u, e = ec.e, n = 2 * u * e;
  if (w.size() != static_cast<std::size_t>(ec.d) * u) throw ShapeMismatch("module power vector size");
  auto x1 = f_matrix_of(ec, m1);
  auto x2 = f_matrix_of(ec, m2);
  auto neg = [&](std::vector<std::uint32_t> c) {
    for (auto& v : c) v = (ec.p - v % ec.p) % ec.p;
    return c;
  };
  auto a_entry = [&](const std::vector<std::vector<std::uint32_t>>& x, std::uint32_t r,
                     std::uint32_t k) {
    auto c = neg(x[static_cast<std::size_t>(r) * u + k]);
    if (r == k)
      for (std::uint32_t j = 0; j < e; ++j) c[j] = (c[j] + ec.one[j]) % ec.p;
    return c;
  };
  FpMat big(ec.p, n, n);
  auto place = [&](std::uint32_t br, std::uint32_t bc, const std::vector<std::uint32_t>& c) {
    FpMat blk = ec.mult_by(c);
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j) big.at(br * e + i, bc * e + j) = blk.at(i, j);
  };
  for (std::uint32_t r = 0; r < u; ++r)
    for (std::uint32_t k = 0; k < u; ++k) {
      place(r, k, a_entry(x1, r, k));          // A_1
      place(r, u + k, a_entry(x2, r, k));      // A_2
    }
  for (std::uint32_t j = 0; j < u; ++j) {
    // Row j of B: F-coordinates of v_j (component j of w).
    std::vector<std::uint32_t> vj(w.begin() + static_cast<std::size_t>(j) * ec.d,
                                  w.begin() + static_cast<std::size_t>(j + 1) * ec.d);
    auto stacked = ec.coords(vj);
    for (std::uint32_t k = 0; k < u; ++k)
      place(u + j, u + k,
            std::vector<std::uint32_t>(stacked.begin() + k * e, stacked.begin() + (k + 1) * e));
  }
  return fp_rank(std::move(big)) == n;
}

// Existence form: some w in V^u makes (h_1, w h_2) a generating pair of
// V^u x| H iff h_1 acts fixed-point-freely on V.
inline bool shift_exists_det(const ModuleAction& act, element_t h1) {
  return acts_fixed_point_freely(act, h1);
}

}  // namespace nonf
