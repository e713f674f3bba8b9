#pragma once

#include <cstdint>

namespace spva {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity parity_of(long n) { return (n & 1) ? Parity::Odd : Parity::Even; }
constexpr Parity flip(Parity p) { return p + Parity::Odd; }

// (-1)^e
constexpr int sign(long e) { return (e & 1) ? -1 : 1; }

}  // namespace spva
