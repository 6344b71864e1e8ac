#include "homcode/pauli.hpp"

#include "homcode/error.hpp"

namespace homcode {

PauliWord::PauliWord(std::size_t qubits, int sign) : x_(qubits), z_(qubits) { set_sign(sign); }

void PauliWord::set_sign(int sign) {
  if (sign != 1 && sign != -1)
    throw Error(ErrorKind::ValidationError, "Pauli sign must be +1 or -1");
  sign_ = sign;
}

PauliWord PauliWord::from_string(std::string_view text) {
  int sign = +1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  PauliWord word(text.size(), sign);
  for (std::size_t q = 0; q < text.size(); ++q) word.set_letter(q, text[q]);
  return word;
}

std::string PauliWord::to_string() const {
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out.reserve(out.size() + size());
  for (std::size_t q = 0; q < size(); ++q) out.push_back(letter(q));
  return out;
}

char PauliWord::letter(std::size_t qubit) const {
  bool x = x_.get(qubit), z = z_.get(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

void PauliWord::set_letter(std::size_t qubit, char letter) {
  bool x = false, z = false;
  switch (letter) {
    case 'I': break;
    case 'X': x = true; break;
    case 'Y': x = true; z = true; break;
    case 'Z': z = true; break;
    default:
      throw Error(ErrorKind::ParseError,
                  std::string("invalid Pauli letter '") + letter + "'");
  }
  x_.set(qubit, x);
  z_.set(qubit, z);
}

std::size_t PauliWord::weight() const {
  std::size_t count = 0;
  for (std::size_t q = 0; q < size(); ++q)
    if (x_.get(q) || z_.get(q)) ++count;
  return count;
}

BitVec PauliWord::symplectic() const {
  BitVec vec(2 * size());
  for (std::size_t q = 0; q < size(); ++q) {
    if (x_.get(q)) vec.set(q, true);
    if (z_.get(q)) vec.set(size() + q, true);
  }
  return vec;
}

PauliWord PauliWord::from_symplectic(const BitVec& vec, int sign) {
  if (vec.size() % 2 != 0)
    throw Error(ErrorKind::ValidationError, "symplectic vector must have even length");
  std::size_t n = vec.size() / 2;
  PauliWord word(n, sign);
  for (std::size_t q = 0; q < n; ++q) {
    word.x_.set(q, vec.get(q));
    word.z_.set(q, vec.get(n + q));
  }
  return word;
}

bool PauliWord::commutes_with(const PauliWord& other) const {
  if (size() != other.size())
    throw Error(ErrorKind::LengthMismatch, "Pauli words act on different qubit counts",
                "{\"left\":" + std::to_string(size()) +
                    ",\"right\":" + std::to_string(other.size()) + "}");
  return (x_.dot(other.z_) ^ z_.dot(other.x_)) == 0;
}

PauliWord PauliWord::multiplied(const PauliWord& other) const {
  if (!commutes_with(other))
    throw Error(ErrorKind::ValidationError,
                "product of anticommuting Pauli words is not Hermitian");
  // Phase bookkeeping per qubit in the Y = iXZ convention: writing each
  // letter as i^{xz} X^x Z^z, the product collects i to the power
  //   x1 z1 + x2 z2 + 2 z1 x2 - x3 z3   (mod 4),  x3 = x1^x2, z3 = z1^z2.
  // The total is even exactly when the words commute; 0 gives +, 2 gives -.
  int phase = 0;
  for (std::size_t q = 0; q < size(); ++q) {
    int x1 = x_.get(q), z1 = z_.get(q);
    int x2 = other.x_.get(q), z2 = other.z_.get(q);
    int x3 = x1 ^ x2, z3 = z1 ^ z2;
    phase = (phase + x1 * z1 + x2 * z2 + 2 * z1 * x2 - x3 * z3) % 4;
  }
  phase = (phase + 4) % 4;
  PauliWord result(size(), 1);
  result.x_ = x_;
  result.x_ ^= other.x_;
  result.z_ = z_;
  result.z_ ^= other.z_;
  int sign = sign_ * other.sign_ * (phase == 2 ? -1 : 1);
  result.set_sign(sign);
  return result;
}

bool PauliWord::operator==(const PauliWord& other) const {
  return sign_ == other.sign_ && x_ == other.x_ && z_ == other.z_;
}

bool commutes(const PauliWord& a, const PauliWord& b) { return a.commutes_with(b); }

BitVec syndrome(const std::vector<PauliWord>& generators, const PauliWord& error) {
  BitVec pattern(generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    pattern.set(j, !generators[j].commutes_with(error));
  return pattern;
}

}  // namespace homcode
