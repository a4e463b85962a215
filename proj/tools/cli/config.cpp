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

#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ppc/errors.hpp"

namespace ppc::cli {
namespace {

using nlohmann::json;

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw ConfigError(what + " must be a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

template <typename T>
void read_number(const json& doc, const char* key, T& target) {
  if (!doc.contains(key)) return;
  if (!doc[key].is_number_unsigned()) {
    throw ConfigError(std::string("config key '") + key +
                      "' must be a nonnegative integer");
  }
  target = doc[key].get<T>();
}

std::string read_text_or_number(const json& value, const char* key) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_unsigned()) return std::to_string(value.get<std::uint64_t>());
  throw ConfigError(std::string("config key '") + key +
                    "' must be a string or a nonnegative integer");
}

void apply_v(ExperimentConfig& cfg, const std::string& text) {
  if (text == "all") {
    cfg.v.reset();
    return;
  }
  const std::size_t v = parse_count(text, "v");
  if (v == 0) throw ConfigError("v is 1-based");
  cfg.v = v - 1;
}

// [{"exponents": [1, 0], "coeff": 2}, ...] -> "2*x1^1*x2^0 + ..."
std::string terms_to_text(const json& terms) {
  if (terms.empty()) throw ConfigError("candidate with no terms");
  std::string text;
  for (const auto& term : terms) {
    if (!term.is_object() || !term.contains("exponents") ||
        !term["exponents"].is_array()) {
      throw ConfigError("candidate term needs an 'exponents' array");
    }
    for (const auto& [key, value] : term.items()) {
      if (key != "exponents" && key != "coeff") {
        throw ConfigError("unknown candidate term key '" + key + "'");
      }
    }
    std::uint64_t coeff = 1;
    read_number(term, "coeff", coeff);
    if (!text.empty()) text += " + ";
    text += std::to_string(coeff);
    std::size_t var = 0;
    for (const auto& e : term["exponents"]) {
      ++var;
      if (!e.is_number_unsigned()) throw ConfigError("exponents must be nonnegative integers");
      text += "*x" + std::to_string(var) + "^" + std::to_string(e.get<std::uint64_t>());
    }
  }
  return text;
}

void apply_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  static const char* const kKeys[] = {"scheme", "n",     "k",     "g",
                                      "f",      "mu",    "q",     "v",
                                      "seed",   "seeds", "F",     "out",
                                      "candidates"};
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown config key '" + key + "'");
  }
  if (doc.contains("scheme")) {
    if (!doc["scheme"].is_string()) throw ConfigError("'scheme' must be a string");
    try {
      cfg.scheme = parse_scheme(doc["scheme"].get<std::string>());
    } catch (const UsageError& e) {
      throw ConfigError(e.what());
    }
  }
  read_number(doc, "n", cfg.n);
  read_number(doc, "k", cfg.k);
  read_number(doc, "g", cfg.g);
  read_number(doc, "f", cfg.f);
  read_number(doc, "seed", cfg.seed);
  read_number(doc, "seeds", cfg.seeds);
  read_number(doc, "F", cfg.max_f);
  if (doc.contains("q")) {
    std::uint64_t q = 0;
    read_number(doc, "q", q);
    cfg.q = q;
  }
  if (doc.contains("mu")) cfg.mu = read_text_or_number(doc["mu"], "mu");
  if (doc.contains("v")) apply_v(cfg, read_text_or_number(doc["v"], "v"));
  if (doc.contains("out")) {
    if (!doc["out"].is_string()) throw ConfigError("'out' must be a string");
    cfg.out = doc["out"].get<std::string>();
  }
  if (doc.contains("candidates")) {
    if (!doc["candidates"].is_array()) {
      throw ConfigError("'candidates' must be an array of strings");
    }
    for (const auto& c : doc["candidates"]) {
      if (c.is_string()) {
        cfg.candidates.push_back(c.get<std::string>());
      } else if (c.is_array()) {
        cfg.candidates.push_back(terms_to_text(c));
      } else {
        throw ConfigError("each candidate must be a string or a list of terms");
      }
    }
  }
}

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

}  // namespace

ExperimentConfig load_config(const ConfigOverrides& o) {
  ExperimentConfig cfg;
  if (o.config_path) apply_file(cfg, *o.config_path);
  if (o.scheme) {
    try {
      cfg.scheme = parse_scheme(*o.scheme);
    } catch (const UsageError& e) {
      throw ConfigError(e.what());
    }
  }
  if (o.n) cfg.n = *o.n;
  if (o.k) cfg.k = *o.k;
  if (o.g) cfg.g = *o.g;
  if (o.f) cfg.f = *o.f;
  if (o.mu) cfg.mu = *o.mu;
  if (o.q) cfg.q = *o.q;
  if (o.v) apply_v(cfg, *o.v);
  if (o.seed) cfg.seed = *o.seed;
  if (o.seeds) cfg.seeds = *o.seeds;
  if (o.max_f) cfg.max_f = *o.max_f;
  if (o.out) cfg.out = *o.out;
  if (o.fault) {
    if (*o.fault != "none" && *o.fault != "corrupt-answer" && *o.fault != "extra-query") {
      throw ConfigError("unknown fault '" + *o.fault + "'");
    }
    cfg.fault = *o.fault == "none" ? "" : *o.fault;
  }

  if (cfg.n == 0 || cfg.k == 0 || cfg.g == 0 || cfg.f == 0) {
    throw ConfigError("n, k, g and f must be at least 1");
  }
  if (cfg.k > cfg.n) throw ConfigError("k must not exceed n");
  if (cfg.g * (cfg.k - 1) + 1 > cfg.n) {
    throw ConfigError("g(k-1)+1 = " + std::to_string(cfg.g * (cfg.k - 1) + 1) +
                      " exceeds n = " + std::to_string(cfg.n));
  }
  if (cfg.max_f == 0) throw ConfigError("F must be at least 1");
  return cfg;
}

Candidate parse_candidate(const std::string& text, const PrimeField& field,
                          std::size_t f) {
  Candidate::Terms terms;
  const std::string body = trim(text);
  if (body.empty()) throw ConfigError("empty candidate polynomial");
  for (const std::string& term : split(body, '+')) {
    if (term.empty()) throw ConfigError("malformed candidate '" + text + "'");
    FieldElement coeff = field.one();
    ExponentVector exp(f, 0);
    bool has_variable = false;
    for (const std::string& factor : split(term, '*')) {
      if (factor.empty()) throw ConfigError("malformed candidate '" + text + "'");
      if (factor[0] != 'x') {
        coeff *= field.element(parse_count(factor, "coefficient"));
        continue;
      }
      const auto caret = factor.find('^');
      const std::size_t var = parse_count(factor.substr(1, caret - 1), "variable index");
      const std::size_t power =
          caret == std::string::npos ? 1 : parse_count(factor.substr(caret + 1), "exponent");
      if (var == 0 || var > f) {
        throw ConfigError("variable x" + std::to_string(var) + " outside x1..x" +
                          std::to_string(f));
      }
      exp[var - 1] += static_cast<unsigned>(power);
      has_variable = has_variable || power > 0;
    }
    if (!has_variable) throw ConfigError("candidates have no constant term: '" + text + "'");
    auto it = terms.find(exp);
    if (it == terms.end()) {
      terms.emplace(exp, coeff);
    } else {
      it->second += coeff;
    }
  }
  try {
    return Candidate(field, f, std::move(terms));
  } catch (const UsageError& e) {
    throw ConfigError("candidate '" + text + "': " + e.what());
  }
}

std::size_t resolve_mu(const ExperimentConfig& cfg, std::uint64_t q) {
  std::size_t mu = 0;
  if (!cfg.candidates.empty() && cfg.mu == "mtilde") {
    mu = cfg.candidates.size();
  } else if (cfg.mu == "mtilde") {
    mu = nonparallel_count(cfg.f, cfg.g);
  } else if (cfg.mu == "m") {
    mu = monomial_count(cfg.f, cfg.g);
  } else {
    mu = parse_count(cfg.mu, "mu");
  }
  if (mu < cfg.f) throw ConfigError("mu must be at least f");
  if (BigInt(mu) > polynomial_count(cfg.f, cfg.g, q)) {
    throw ConfigError("mu = " + std::to_string(mu) +
                      " exceeds the number of distinct candidate functions");
  }
  return mu;
}

CodingContext make_context(const ExperimentConfig& cfg) {
  try {
    return CodingContext::make(cfg.n, cfg.k, cfg.g,
                               cfg.scheme == Scheme::kSystematic, cfg.q);
  } catch (const UsageError& e) {
    throw ConfigError(e.what());
  }
}

CandidateSet make_candidates(const ExperimentConfig& cfg,
                             const CodingContext& ctx) {
  const std::size_t mu = resolve_mu(cfg, ctx.field().modulus());
  try {
    if (cfg.candidates.empty()) {
      return CandidateSet::canonical(cfg.f, cfg.g, mu, ctx.field());
    }
    if (cfg.candidates.size() != mu) {
      throw ConfigError("mu = " + std::to_string(mu) + " but " +
                        std::to_string(cfg.candidates.size()) +
                        " candidates were listed");
    }
    std::vector<Candidate> list;
    for (const auto& text : cfg.candidates) {
      list.push_back(parse_candidate(text, ctx.field(), cfg.f));
    }
    return CandidateSet(cfg.f, cfg.g, ctx.field(), std::move(list));
  } catch (const UsageError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace ppc::cli
