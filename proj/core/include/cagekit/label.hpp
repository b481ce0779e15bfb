// Copyright 2026 The cagekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cagekit/field.hpp"

namespace cagekit {

// A label coordinate: a field element or the formal symbol rho. Rho carries
// no arithmetic; elem() refuses it.
class Coord {
 public:
  constexpr Coord() = default;
  constexpr Coord(FieldElem e) noexcept : raw_(e.value) {}  // NOLINT

  static constexpr Coord rho() noexcept { return Coord(kRhoRaw); }

  constexpr bool is_rho() const noexcept { return raw_ == kRhoRaw; }
  // Throws InvalidLabel on rho.
  FieldElem elem() const;

  // Rho compares greater than every field element.
  friend constexpr auto operator<=>(Coord, Coord) = default;

 private:
  static constexpr std::uint32_t kRhoRaw = 0xffffffffu;
  explicit constexpr Coord(std::uint32_t raw) noexcept : raw_(raw) {}

  std::uint32_t raw_ = 0;
};

// Vertex label (a,b,c)_side.
struct Label {
  std::uint8_t side = 0;
  Coord a, b, c;

  // (a,b,c) with a in F_q or rho and b,c in F_q; (rho,rho,c); (rho,rho,rho).
  bool has_valid_shape() const noexcept;
  // True when all three coordinates are field elements.
  bool is_affine() const noexcept {
    return !a.is_rho() && !b.is_rho() && !c.is_rho();
  }

  friend constexpr bool operator==(const Label&, const Label&) = default;
};

Label make_label(std::uint8_t side, Coord a, Coord b, Coord c);

// "(a,b,c)_i" with rho spelled "rho" and field elements as integers.
std::string to_string(const Label& label);
// Inverse of to_string; throws InvalidLabel on malformed text.
Label parse_label(std::string_view text);

// Bijection between valid labels over F_q and [0, 2*stride).
//
// Side 0 occupies [0, stride), side 1 [stride, 2*stride). Within a side:
//   (a,b,c), a in F_q      -> a*q^2 + b*q + c
//   (rho,b,c)              -> q^3 + b*q + c
//   (rho,rho,c)            -> q^3 + q^2 + c
//   (rho,rho,rho)          -> q^3 + q^2 + q
class LabelCodec {
 public:
  explicit LabelCodec(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t stride() const noexcept { return stride_; }
  std::uint32_t size() const noexcept { return 2 * stride_; }

  // Throws InvalidLabel for invalid shapes or coordinates >= q.
  std::uint32_t encode(const Label& label) const;
  // Throws IndexOutOfRange for index >= size().
  Label decode(std::uint32_t index) const;

  friend bool operator==(const LabelCodec&, const LabelCodec&) = default;

 private:
  std::uint32_t q_;
  std::uint32_t stride_;
};

}  // namespace cagekit
