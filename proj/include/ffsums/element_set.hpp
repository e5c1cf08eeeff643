// Copyright 2026 The ffsums Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FFSUMS_ELEMENT_SET_HPP
#define FFSUMS_ELEMENT_SET_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ffsums/field.hpp"

namespace ffsums {

// A subset of one field, kept both as a membership mask (indexed by element
// code) and as a sorted member list.
class ElementSet {
 public:
  explicit ElementSet(const FiniteField* field)
      : field_(field), mask_(field->order(), 0) {}

  static ElementSet from_codes(const FiniteField* field,
                               const std::vector<std::uint32_t>& codes) {
    ElementSet s(field);
    for (const std::uint32_t c : codes) s.insert(c);
    return s;
  }

  static ElementSet full(const FiniteField* field) {
    ElementSet s(field);
    for (std::uint64_t c = 0; c < field->order(); ++c) {
      s.insert(static_cast<std::uint32_t>(c));
    }
    return s;
  }

  const FiniteField& field() const { return *field_; }

  void insert(std::uint32_t code) {
    if (!mask_[code]) {
      mask_[code] = 1;
      members_.push_back(code);
      sorted_ = false;
    }
  }

  bool contains(std::uint32_t code) const { return mask_[code] != 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // Ascending codes.
  const std::vector<std::uint32_t>& members() const {
    if (!sorted_) {
      std::sort(members_.begin(), members_.end());
      sorted_ = true;
    }
    return members_;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.field_->same_field(*b.field_) && a.members() == b.members();
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) {
    return !(a == b);
  }

 private:
  const FiniteField* field_;
  std::vector<std::uint8_t> mask_;
  mutable std::vector<std::uint32_t> members_;
  mutable bool sorted_ = true;
};

}  // namespace ffsums

#endif  // FFSUMS_ELEMENT_SET_HPP
