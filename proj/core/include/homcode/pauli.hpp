#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "homcode/gf2.hpp"

namespace homcode {

// A signed n-qubit Pauli word.  Letters are I, X, Y, Z with the Hermitian
// convention Y = iXZ; the sign is +1 or -1 (imaginary phases never appear in
// a Hermitian word).  Internally the word is a pair of bit vectors: qubit q
// carries X iff x(q), Z iff z(q), Y iff both.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::size_t qubits, int sign = +1);

  // Accepts an optional leading '+' or '-' followed by letters in IXYZ.
  static PauliWord from_string(std::string_view text);
  std::string to_string() const;  // '-' prefix when negative, no prefix otherwise

  std::size_t size() const { return x_.size(); }
  int sign() const { return sign_; }
  void set_sign(int sign);

  char letter(std::size_t qubit) const;
  void set_letter(std::size_t qubit, char letter);

  bool x_bit(std::size_t qubit) const { return x_.get(qubit); }
  bool z_bit(std::size_t qubit) const { return z_.get(qubit); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }

  std::size_t weight() const;
  bool is_identity() const { return !x_.any() && !z_.any(); }

  // Symplectic representation (x half then z half, length 2n).
  BitVec symplectic() const;
  static PauliWord from_symplectic(const BitVec& vec, int sign = +1);

  bool commutes_with(const PauliWord& other) const;

  // Product of two commuting Hermitian words, with the sign tracked exactly.
  // Anticommuting factors would produce an anti-Hermitian result and are
  // reported as a validation error.
  PauliWord multiplied(const PauliWord& other) const;

  bool operator==(const PauliWord& other) const;
  bool operator!=(const PauliWord& other) const { return !(*this == other); }

 private:
  BitVec x_, z_;
  int sign_ = +1;
};

bool commutes(const PauliWord& a, const PauliWord& b);

// Per-generator anticommutation pattern of an error: bit j is set when the
// error anticommutes with generators[j].
BitVec syndrome(const std::vector<PauliWord>& generators, const PauliWord& error);

}  // namespace homcode
