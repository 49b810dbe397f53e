#pragma once

#include "oracles.hpp"
#include "polar/matrix.hpp"

namespace th {

inline oracle::IMat to_ints(const polar::Matrix& m) {
  oracle::IMat out(m.rows(), oracle::IVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).v;
  return out;
}

inline oracle::IVec to_ints(std::span<const polar::Elem> v) {
  oracle::IVec out;
  for (polar::Elem x : v) out.push_back(x.v);
  return out;
}

inline polar::Vec to_vec(const oracle::IVec& v) {
  polar::Vec out;
  for (int x : v) out.push_back(polar::Elem{static_cast<std::uint8_t>(x)});
  return out;
}

}  // namespace th
