#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pgtower/common.hpp"

namespace pgt {

// Sorted-by-column sparse vector over F_p; values in [1, p).
using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// w += c * v (mod p), result normalized.
SparseVec axpy(const SparseVec& w, std::uint32_t c, const SparseVec& v, std::uint32_t p);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Row-major sparse matrix over F_p.
struct FpMatrix {
  std::uint32_t rows = 0, cols = 0, p = 2;
  std::vector<SparseVec> row_data;

  FpMatrix() = default;
  FpMatrix(std::uint32_t r, std::uint32_t c, std::uint32_t prime)
      : rows(r), cols(c), p(prime), row_data(r) {}

  // Accumulates mod p; duplicates allowed, zeros dropped on normalize_row.
  void add(std::uint32_t r, std::uint32_t c, std::uint32_t v);
  void normalize_row(std::uint32_t r);
  std::uint64_t nnz() const;
  SparseVec apply(const SparseVec& x) const;  // matrix * column vector
};

// Exact rank by sparse elimination, pivot rule: least column, then least row.
// Internally eliminates the narrower orientation (rank is transpose-invariant).
std::uint32_t fp_rank(const FpMatrix& m);

// Deterministic kernel basis (free columns ascending). No transposition.
std::vector<SparseVec> kernel_basis(const FpMatrix& m);

// Incremental echelon basis of row vectors with optional coordinate tracking:
// each inserted vector may carry a tag; reduce() accumulates the tags of the
// pivot rows it uses, so callers can express vectors in terms of tagged
// inserts modulo untagged ones.
class Echelon {
 public:
  Echelon(std::uint32_t cols, std::uint32_t p, std::uint32_t tag_dim = 0)
      : cols_(cols), p_(p), tag_dim_(tag_dim) {}

  // Reduces v; if a nonzero remainder survives it becomes a new pivot row.
  // Returns true if the vector was independent.
  bool insert(SparseVec v, SparseVec tag = {});

  // Remainder of v after reduction. If tag_out is given, receives the tag
  // combination lambda with v = sum(lambda_i row_i) + remainder.
  SparseVec reduce(SparseVec v, SparseVec* tag_out = nullptr) const;

  std::uint32_t rank() const { return std::uint32_t(rows_.size()); }

 private:
  std::uint32_t cols_, p_, tag_dim_;
  struct Row {
    std::uint32_t pivot;
    SparseVec v;    // leading coefficient 1
    SparseVec tag;
  };
  std::vector<Row> rows_;              // kept sorted by pivot column
};

}  // namespace pgt
