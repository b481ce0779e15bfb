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

#include "cagekit/label.hpp"

#include <charconv>

#include "cagekit/error.hpp"

namespace cagekit {

FieldElem Coord::elem() const {
  if (is_rho()) throw InvalidLabel("arithmetic on rho");
  return FieldElem{raw_};
}

bool Label::has_valid_shape() const noexcept {
  if (side > 1) return false;
  if (!b.is_rho()) return !c.is_rho();
  // b = rho forces a = rho.
  return a.is_rho();
}

Label make_label(std::uint8_t side, Coord a, Coord b, Coord c) {
  Label l{side, a, b, c};
  if (!l.has_valid_shape()) {
    throw InvalidLabel("invalid label shape " + to_string(l));
  }
  return l;
}

namespace {

void append_coord(std::string& out, Coord c) {
  if (c.is_rho()) {
    out += "rho";
  } else {
    out += std::to_string(c.elem().value);
  }
}

Coord parse_coord(std::string_view token, std::string_view whole) {
  if (token == "rho") return Coord::rho();
  std::uint32_t v = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidLabel("bad coordinate in label '" + std::string(whole) + "'");
  }
  return Coord(FieldElem{v});
}

}  // namespace

std::string to_string(const Label& label) {
  std::string out = "(";
  append_coord(out, label.a);
  out += ',';
  append_coord(out, label.b);
  out += ',';
  append_coord(out, label.c);
  out += ")_";
  out += std::to_string(label.side);
  return out;
}

Label parse_label(std::string_view text) {
  const auto bad = [&] {
    return InvalidLabel("malformed label '" + std::string(text) + "'");
  };
  if (text.size() < 9 || text.front() != '(') throw bad();
  const auto close = text.rfind(")_");
  if (close == std::string_view::npos || close + 3 != text.size()) throw bad();
  const char side_char = text.back();
  if (side_char != '0' && side_char != '1') throw bad();
  const std::string_view body = text.substr(1, close - 1);
  const auto c1 = body.find(',');
  if (c1 == std::string_view::npos) throw bad();
  const auto c2 = body.find(',', c1 + 1);
  if (c2 == std::string_view::npos || body.find(',', c2 + 1) != std::string_view::npos) {
    throw bad();
  }
  Label l;
  l.side = static_cast<std::uint8_t>(side_char - '0');
  l.a = parse_coord(body.substr(0, c1), text);
  l.b = parse_coord(body.substr(c1 + 1, c2 - c1 - 1), text);
  l.c = parse_coord(body.substr(c2 + 1), text);
  if (!l.has_valid_shape()) throw bad();
  return l;
}

LabelCodec::LabelCodec(std::uint32_t q) : q_(q), stride_(0) {
  const std::uint64_t qq = q;
  const std::uint64_t stride = qq * qq * qq + qq * qq + qq + 1;
  if (q == 0 || 2 * stride > 0xffffffffull) {
    throw InvalidLabel("label codec unsupported for q=" + std::to_string(q));
  }
  stride_ = static_cast<std::uint32_t>(stride);
}

std::uint32_t LabelCodec::encode(const Label& label) const {
  if (!label.has_valid_shape()) {
    throw InvalidLabel("invalid label shape " + to_string(label));
  }
  const auto value = [&](Coord c) {
    const std::uint32_t v = c.elem().value;
    if (v >= q_) {
      throw InvalidLabel("coordinate out of range in " + to_string(label));
    }
    return v;
  };
  const std::uint32_t q2 = q_ * q_;
  const std::uint32_t q3 = q2 * q_;
  std::uint32_t local = 0;
  if (!label.a.is_rho()) {
    local = value(label.a) * q2 + value(label.b) * q_ + value(label.c);
  } else if (!label.b.is_rho()) {
    local = q3 + value(label.b) * q_ + value(label.c);
  } else if (!label.c.is_rho()) {
    local = q3 + q2 + value(label.c);
  } else {
    local = q3 + q2 + q_;
  }
  return label.side * stride_ + local;
}

Label LabelCodec::decode(std::uint32_t index) const {
  if (index >= size()) {
    throw IndexOutOfRange("label index " + std::to_string(index) +
                          " out of range");
  }
  Label l;
  l.side = static_cast<std::uint8_t>(index / stride_);
  std::uint32_t local = index % stride_;
  const std::uint32_t q2 = q_ * q_;
  const std::uint32_t q3 = q2 * q_;
  const auto e = [](std::uint32_t v) { return Coord(FieldElem{v}); };
  if (local < q3) {
    l.a = e(local / q2);
    l.b = e(local / q_ % q_);
    l.c = e(local % q_);
  } else if ((local -= q3) < q2) {
    l.a = Coord::rho();
    l.b = e(local / q_);
    l.c = e(local % q_);
  } else if ((local -= q2) < q_) {
    l.a = l.b = Coord::rho();
    l.c = e(local);
  } else {
    l.a = l.b = l.c = Coord::rho();
  }
  return l;
}

}  // namespace cagekit
