// Copyright 2026 The ppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPC_STORAGE_SIM_HPP_
#define PPC_STORAGE_SIM_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ppc/polyspace.hpp"
#include "ppc/query_engine.hpp"
#include "ppc/rs_lagrange.hpp"

namespace ppc {

// f messages, each rows x k.
class MessageStore {
 public:
  using Message = std::vector<std::vector<FieldElement>>;

  // Throws UsageError on empty or ragged input.
  explicit MessageStore(std::vector<Message> messages);

  // Entries uniform over the field.
  static MessageStore random(const PrimeField& field, std::size_t f,
                             std::size_t rows, std::size_t k,
                             std::uint64_t seed);

  std::size_t messages() const { return messages_.size(); }
  std::size_t rows() const { return messages_.front().size(); }
  std::size_t width() const { return messages_.front().front().size(); }
  const Message& message(std::size_t m) const { return messages_.at(m); }
  // (W^(1)_{t,i}, ..., W^(f)_{t,i}).
  std::vector<FieldElement> point(std::size_t t, std::size_t i) const;

 private:
  std::vector<Message> messages_;
};

// Database j holds coordinate j of every coded row of every message.
class DatabaseNode {
 public:
  DatabaseNode(std::size_t index, std::vector<std::vector<FieldElement>> column)
      : index_(index), column_(std::move(column)) {}

  std::size_t index() const { return index_; }
  // column()[m][t] = coded symbol of message m, row t.
  const std::vector<std::vector<FieldElement>>& column() const { return column_; }
  // The f stored symbols of row t.
  std::vector<FieldElement> symbols(std::size_t t) const;

 private:
  std::size_t index_;
  std::vector<std::vector<FieldElement>> column_;
};

// Throws UsageError when the store's width differs from k.
std::vector<DatabaseNode> encode_store(const CodingContext& ctx,
                                       const MessageStore& store);

// One field element per query: sum of sign * candidate(stored symbols of the
// term's row). Throws UsageError on an out-of-range candidate or row.
std::vector<FieldElement> answer(const DatabaseNode& node,
                                 const CandidateSet& cs,
                                 std::span<const TauSum> queries);

}  // namespace ppc

#endif  // PPC_STORAGE_SIM_HPP_
