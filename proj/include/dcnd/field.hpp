// Copyright 2026 The dcnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcnd/error.hpp"

namespace dcnd {

namespace detail {

struct ConwayEntry {
  int p;
  int m;
  // Coefficients c_0..c_{m-1} of the monic modulus x^m + ... + c_1 x + c_0.
  std::vector<int> low;
};

inline const std::vector<ConwayEntry>& conway_catalog() {
  static const std::vector<ConwayEntry> table = {
      {2, 2, {1, 1}},           // x^2 + x + 1
      {2, 3, {1, 1, 0}},        // x^3 + x + 1
      {2, 4, {1, 1, 0, 0}},     // x^4 + x + 1
      {2, 5, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
      {2, 6, {1, 1, 0, 1, 1, 0}},     // x^6 + x^4 + x^3 + x + 1
      {2, 7, {1, 1, 0, 0, 0, 0, 0}},  // x^7 + x + 1
      {3, 2, {2, 2}},           // x^2 + 2x + 2
      {3, 3, {1, 2, 0}},        // x^3 + 2x + 1
      {3, 4, {2, 0, 0, 2}},     // x^4 + 2x^3 + 2
      {5, 2, {2, 4}},           // x^2 + 4x + 2
      {7, 2, {3, 6}},           // x^2 + 6x + 3
      {11, 2, {2, 7}},          // x^2 + 7x + 2
  };
  return table;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// GF(q) for q = p^m <= 128. Element e in [0, q) encodes the polynomial
/// whose base-p digits are its coefficients (least significant first).
class FiniteField {
 public:
  explicit FiniteField(int q) : q_(q) {
    if (q < 2 || q > 128) {
      throw DomainError("field order " + std::to_string(q) +
                        " outside supported range [2, 128]");
    }
    if (detail::is_prime(q)) {
      p_ = q;
      m_ = 1;
      modulus_ = {0};
    } else {
      bool found = false;
      for (const auto& e : detail::conway_catalog()) {
        int order = 1;
        for (int i = 0; i < e.m; ++i) order *= e.p;
        if (order == q) {
          p_ = e.p;
          m_ = e.m;
          modulus_ = e.low;
          found = true;
          break;
        }
      }
      if (!found) {
        throw DomainError(std::to_string(q) +
                          " is not a supported prime power");
      }
    }
    build_tables();
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const {
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) == 0) return b;
    }
    return -1;
  }

  /// Modulus coefficients c_0..c_{m-1} (monic leading term implied).
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(m_, 0);
    for (int i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a);
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<int> s(m_);
        for (int i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = encode(s);

        // Schoolbook product, then reduce x^k for k >= m using
        // x^m = -(c_{m-1} x^{m-1} + ... + c_0).
        std::vector<int> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i) {
          for (int j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
          }
        }
        for (int k = 2 * m_ - 2; k >= m_; --k) {
          int c = prod[k];
          if (c == 0) continue;
          prod[k] = 0;
          for (int i = 0; i < m_; ++i) {
            int sub = (c * modulus_[i]) % p_;
            int& slot = prod[k - m_ + i];
            slot = ((slot - sub) % p_ + p_) % p_;
          }
        }
        mul_[a * q_ + b] = encode({prod.begin(), prod.begin() + m_});
      }
    }
  }

  int q_ = 0;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

inline FiniteField build_field(int q) { return FiniteField(q); }

/// Every prime power q <= 128 that build_field accepts.
inline std::vector<int> supported_field_orders() {
  std::vector<int> out;
  for (int q = 2; q <= 128; ++q) {
    try {
      FiniteField f(q);
      out.push_back(q);
    } catch (const DomainError&) {
    }
  }
  return out;
}

}  // namespace dcnd
