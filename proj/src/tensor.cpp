#include <netshare/tensor.hpp>

#include <algorithm>
#include <numeric>

namespace netshare {

namespace {

Index checked_total_dim(const std::vector<Index>& dims) {
  if (dims.empty()) throw InvalidDimension("factor dimension list is empty");
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw InvalidDimension("factor dimensions must be positive");
    total *= d;
  }
  return total;
}

// Row-major strides: factor i advances the flat index by prod(dims[j], j>i).
std::vector<Index> strides_of(const std::vector<Index>& dims) {
  std::vector<Index> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
    s[i] = s[i + 1] * dims[i + 1];
  return s;
}

}  // namespace

Matrix partial_trace(const Matrix& rho, const std::vector<Index>& dims,
                     const std::vector<int>& keep) {
  const Index total = checked_total_dim(dims);
  if (rho.rows() != total || rho.cols() != total)
    throw DimensionMismatch("partial_trace: state size does not match factor dimensions");
  if (!std::is_sorted(keep.begin(), keep.end()) ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw IndexOutOfRange("partial_trace: keep list must be sorted and distinct");
  for (int s : keep)
    if (s < 0 || s >= static_cast<int>(dims.size()))
      throw IndexOutOfRange("partial_trace: keep index out of range");

  std::vector<int> traced;
  for (int s = 0; s < static_cast<int>(dims.size()); ++s)
    if (!std::binary_search(keep.begin(), keep.end(), s)) traced.push_back(s);

  const auto strides = strides_of(dims);
  Index dim_keep = 1;
  for (int s : keep) dim_keep *= dims[s];
  Index dim_traced = 1;
  for (int s : traced) dim_traced *= dims[s];

  // Flat offset of a multi-index restricted to `sites`, decoded from a
  // single counter in the mixed radix given by those sites' dimensions.
  auto offset = [&](const std::vector<int>& sites, Index counter) {
    Index off = 0;
    for (int i = static_cast<int>(sites.size()) - 1; i >= 0; --i) {
      const Index d = dims[sites[i]];
      off += (counter % d) * strides[sites[i]];
      counter /= d;
    }
    return off;
  };

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (Index r = 0; r < dim_keep; ++r) {
    const Index row_base = offset(keep, r);
    for (Index c = 0; c < dim_keep; ++c) {
      const Index col_base = offset(keep, c);
      Complex acc(0.0, 0.0);
      for (Index t = 0; t < dim_traced; ++t) {
        const Index shift = offset(traced, t);
        acc += rho(row_base + shift, col_base + shift);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix embed_at(const Matrix& op, const std::vector<Index>& dims, int site) {
  checked_total_dim(dims);
  if (site < 0 || site >= static_cast<int>(dims.size()))
    throw IndexOutOfRange("embed_at: site index out of range");
  if (op.rows() != op.cols() || op.rows() != dims[site])
    throw DimensionMismatch("embed_at: operator does not match the site dimension");

  Index before = 1, after = 1;
  for (int s = 0; s < site; ++s) before *= dims[s];
  for (int s = site + 1; s < static_cast<int>(dims.size()); ++s) after *= dims[s];
  return kron(kron(Matrix::Identity(before, before), op),
              Matrix::Identity(after, after));
}

}  // namespace netshare
