#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weakhopf/algebra.hpp"

namespace weakhopf {

enum class Corruption { Mult, Unit, Comult, Counit, Antipode };

const char* corruption_name(Corruption c);

struct CorruptionTrial {
  std::string instance;
  Corruption target = Corruption::Mult;
  std::size_t row = 0, col = 0;  // entry of the corrupted matrix
  std::string delta;
  std::vector<std::string> failures;
  // first failing item carrying a witness, empty when the corruption went unnoticed
  std::string caught_by;
  std::vector<std::size_t> witness;

  bool caught() const { return !caught_by.empty(); }
};

struct NamedHopf {
  std::string name;
  WeakHopfAlgebra h;
};

// Small zoo instances used as corruption targets.
std::vector<NamedHopf> fuzz_pool();

// Each trial picks an instance, an axiom and an entry in that axiom's support,
// then adds a nonzero delta. The entry is chosen so the axiom must break.
std::vector<CorruptionTrial> run_corruption_trials(std::uint64_t seed, std::size_t trials);
std::vector<CorruptionTrial> run_corruption_trials(std::uint64_t seed, std::size_t trials,
                                                   const std::vector<NamedHopf>& pool);

struct CandidateTrial {
  std::string kind;  // "lambda" or "z"
  std::vector<std::string> values;
  std::string violation;    // empty when accepted
  bool checker_passes = false;

  bool agrees() const { return violation.empty() == checker_passes; }
};

// Random lambda and z candidates on a disjoint union of group algebras, mostly
// built from genuine ones so that acceptance is exercised too.
std::vector<CandidateTrial> run_candidate_trials(std::uint64_t seed, std::size_t trials);

}  // namespace weakhopf
