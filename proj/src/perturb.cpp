// Copyright 2026 The redumet Authors
// SPDX-License-Identifier: Apache-2.0

#include "redumet/perturb.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "redumet/detector.hpp"
#include "redumet/errors.hpp"

namespace redumet {

void PerturbationSpec::validate() const {
  if (count == 0) {
    throw InvariantViolation("perturbation count must be positive");
  }
  if (min_gap < 2) {
    throw InvariantViolation("min_gap must be at least 2");
  }
}

namespace {

struct Entry {
  Token token;
  // True when (this, next) is a continuous source/copy pair that later
  // insertions must not split.
  bool weld_next = false;
};

// mt19937_64 raw output with modulo reduction: bit-identical across
// platforms, unlike std::uniform_int_distribution.
std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

bool tokens_redundant(const Token& a, const Token& b,
                      const EmbeddingTable& table,
                      const SynonymConfig& config) {
  return redundant(a, b, table, config).has_value();
}

}  // namespace

PerturbResult perturb(const Sentence& base, const PerturbationSpec& spec,
                      const EmbeddingTable& table, const SynonymConfig& config,
                      const StopwordSet& stopwords) {
  spec.validate();
  if (base.size() < 2) {
    throw NoEligibleSite("base sentence has fewer than 2 tokens");
  }
  const bool continuous = category_of(spec.err_type) == Category::Continuous;
  const bool synonym = kind_of(spec.err_type) == Kind::Synonym;

  // A source must carry no redundancy against any other base token; a copy
  // of it would otherwise pick up unintended mates.  This subsumes the
  // no-prior-occurrence rule.
  std::vector<bool> source_ok(base.size(), false);
  for (std::size_t p = 0; p < base.size(); ++p) {
    if (stopwords.contains(match_key(base[p].surface, config.lowercase))) {
      continue;
    }
    bool clean = true;
    for (std::size_t m = 0; m < base.size() && clean; ++m) {
      if (m != p && tokens_redundant(base[p], base[m], table, config)) {
        clean = false;
      }
    }
    source_ok[p] = clean;
  }

  std::vector<Entry> cur;
  cur.reserve(base.size() + spec.count);
  for (const Token& tok : base) cur.push_back(Entry{tok, false});
  std::vector<std::size_t> base_pos(base.size());
  for (std::size_t p = 0; p < base.size(); ++p) base_pos[p] = p;

  std::vector<bool> used(base.size(), false);
  std::vector<Token> payloads;
  std::vector<AnnotationTuple> gold;
  std::mt19937_64 rng(spec.seed);

  auto payload_clear = [&](const Token& candidate, std::size_t source) {
    for (std::size_t m = 0; m < base.size(); ++m) {
      if (m != source && tokens_redundant(candidate, base[m], table, config)) {
        return false;
      }
    }
    for (const Token& prev : payloads) {
      if (tokens_redundant(candidate, prev, table, config)) return false;
    }
    return true;
  };

  auto synonym_candidates = [&](std::size_t source) {
    std::vector<Token> out;
    for (const std::string& word : table.tokens()) {
      Token candidate(word);
      if (!is_synonym(candidate, base[source], table, config)) continue;
      if (stopwords.contains(match_key(word, config.lowercase))) continue;
      if (!payload_clear(candidate, source)) continue;
      out.push_back(std::move(candidate));
    }
    return out;
  };

  auto disc_slots = [&](std::size_t source) {
    std::vector<std::size_t> out;
    // Insertion goes strictly after the source and before the final token;
    // appending would sidestep the gap constraint entirely.
    for (std::size_t q = base_pos[source] + spec.min_gap; q < cur.size();
         ++q) {
      if (!cur[q - 1].weld_next) out.push_back(q);
    }
    return out;
  };

  for (std::size_t round = 0; round < spec.count; ++round) {
    struct Option {
      std::size_t source;
      std::vector<Token> payload_choices;
      std::vector<std::size_t> slot_choices;
    };
    std::vector<Option> viable;
    for (std::size_t p = 0; p < base.size(); ++p) {
      if (!source_ok[p] || used[p]) continue;
      Option opt;
      opt.source = p;
      if (synonym) {
        opt.payload_choices = synonym_candidates(p);
      } else if (payload_clear(base[p], p)) {
        opt.payload_choices.push_back(base[p]);
      }
      if (opt.payload_choices.empty()) continue;
      if (continuous) {
        opt.slot_choices.push_back(base_pos[p] + 1);
      } else {
        opt.slot_choices = disc_slots(p);
      }
      if (opt.slot_choices.empty()) continue;
      viable.push_back(std::move(opt));
    }
    if (viable.empty()) {
      std::ostringstream msg;
      msg << "no eligible site for " << to_code(spec.err_type) << " error "
          << (round + 1) << " of " << spec.count;
      throw NoEligibleSite(msg.str());
    }

    Option& pick = viable[draw(rng, viable.size())];
    Token payload = pick.payload_choices.size() == 1
                        ? pick.payload_choices[0]
                        : pick.payload_choices[draw(
                              rng, pick.payload_choices.size())];
    const std::size_t slot =
        pick.slot_choices.size() == 1
            ? pick.slot_choices[0]
            : pick.slot_choices[draw(rng, pick.slot_choices.size())];

    for (std::size_t& pos : base_pos) {
      if (pos >= slot) ++pos;
    }
    for (AnnotationTuple& tuple : gold) {
      if (tuple.pos_a >= slot) ++tuple.pos_a;
      if (tuple.pos_b >= slot) ++tuple.pos_b;
    }
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(slot),
               Entry{payload, false});
    if (continuous) {
      cur[slot - 1].weld_next = true;
    }
    payloads.push_back(std::move(payload));
    used[pick.source] = true;

    AnnotationTuple tuple;
    tuple.sentence_id = 0;
    tuple.pos_a = base_pos[pick.source];
    tuple.pos_b = slot;
    tuple.err_type = spec.err_type;
    tuple.system = "perturb";
    tuple.validate();
    gold.push_back(std::move(tuple));
  }

  std::sort(gold.begin(), gold.end(),
            [](const AnnotationTuple& a, const AnnotationTuple& b) {
              return a.pos_b < b.pos_b;
            });

  PerturbResult result;
  result.sentence.reserve(cur.size());
  for (Entry& entry : cur) result.sentence.push_back(std::move(entry.token));
  result.gold = std::move(gold);
  return result;
}

}  // namespace redumet
