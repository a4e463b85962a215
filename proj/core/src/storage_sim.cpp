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

#include "ppc/storage_sim.hpp"

#include <string>

#include "ppc/errors.hpp"
#include "ppc/random.hpp"

namespace ppc {

MessageStore::MessageStore(std::vector<Message> messages)
    : messages_(std::move(messages)) {
  if (messages_.empty() || messages_.front().empty() ||
      messages_.front().front().empty()) {
    throw UsageError("message store must be nonempty");
  }
  for (const auto& msg : messages_) {
    if (msg.size() != rows()) throw UsageError("messages differ in row count");
    for (const auto& row : msg) {
      if (row.size() != width()) throw UsageError("message rows differ in width");
    }
  }
}

MessageStore MessageStore::random(const PrimeField& field, std::size_t f,
                                  std::size_t rows, std::size_t k,
                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Message> messages(f);
  for (auto& msg : messages) {
    msg.resize(rows);
    for (auto& row : msg) {
      row.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        row.push_back(field.element(rng.below(field.modulus())));
      }
    }
  }
  return MessageStore(std::move(messages));
}

std::vector<FieldElement> MessageStore::point(std::size_t t,
                                              std::size_t i) const {
  std::vector<FieldElement> out;
  out.reserve(messages_.size());
  for (const auto& msg : messages_) out.push_back(msg.at(t).at(i));
  return out;
}

std::vector<FieldElement> DatabaseNode::symbols(std::size_t t) const {
  std::vector<FieldElement> out;
  out.reserve(column_.size());
  for (const auto& c : column_) out.push_back(c.at(t));
  return out;
}

std::vector<DatabaseNode> encode_store(const CodingContext& ctx,
                                       const MessageStore& store) {
  if (store.width() != ctx.k()) {
    throw UsageError("message width " + std::to_string(store.width()) +
                     " differs from k = " + std::to_string(ctx.k()));
  }
  const Matrix gen = generator_matrix(ctx);
  const FieldElement zero = ctx.field().zero();
  std::vector<std::vector<std::vector<FieldElement>>> columns(
      ctx.n(), std::vector<std::vector<FieldElement>>(
                   store.messages(), std::vector<FieldElement>(store.rows(), zero)));
  for (std::size_t m = 0; m < store.messages(); ++m) {
    for (std::size_t t = 0; t < store.rows(); ++t) {
      const auto& w = store.message(m)[t];
      for (std::size_t j = 0; j < ctx.n(); ++j) {
        FieldElement acc = zero;
        for (std::size_t i = 0; i < ctx.k(); ++i) acc += w[i] * gen[i][j];
        columns[j][m][t] = acc;
      }
    }
  }
  std::vector<DatabaseNode> nodes;
  nodes.reserve(ctx.n());
  for (std::size_t j = 0; j < ctx.n(); ++j) {
    nodes.emplace_back(j, std::move(columns[j]));
  }
  return nodes;
}

std::vector<FieldElement> answer(const DatabaseNode& node,
                                 const CandidateSet& cs,
                                 std::span<const TauSum> queries) {
  const std::size_t rows = node.column().front().size();
  if (node.column().size() != cs.f()) {
    throw UsageError("node stores a different number of messages");
  }
  std::vector<FieldElement> out;
  out.reserve(queries.size());
  const PrimeField& field = cs.field();
  for (const auto& q : queries) {
    FieldElement acc = field.zero();
    for (const auto& term : q.terms) {
      if (term.candidate >= cs.size() || term.row >= rows) {
        throw UsageError("query references candidate " +
                         std::to_string(term.candidate + 1) + " row " +
                         std::to_string(term.row + 1) + " out of range");
      }
      const FieldElement value = cs[term.candidate].evaluate(node.symbols(term.row));
      acc += term.sign >= 0 ? value : -value;
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace ppc
