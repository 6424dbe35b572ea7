// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Security experiments as seeded games with pluggable adversaries:
//   - the one-time SKE certified-deletion game over otcd,
//   - the certified-everlasting IND-CPA game over ce-ske / ce-pke,
//   - an exact evaluator for the certified everlasting lemma experiment
//     with a Monte-Carlo counterpart.
// Every trial draws its randomness from a seed derived from the run seed
// and the trial index, so a transcript can be replayed on its own.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "everlast/ce.hpp"
#include "everlast/otcd.hpp"

namespace everlast::harness {

enum class AdversaryClass : uint8_t { kHonestDeleter, kKeepAndMeasure, kCertGuesser, kCustom };
const char* class_name(AdversaryClass c);

uint64_t trial_seed(uint64_t run_seed, uint64_t trial);

struct GameTranscript {
  bool b = false;
  BitString m0, m1;
  bool refused = false;   // adversary sent no certificate
  bool accepted = false;  // certificate verified
  std::optional<bool> guess;
  uint64_t seed = 0;
  // Experiment output: the guess if accepted, otherwise bottom.
  std::optional<bool> output() const { return accepted ? guess : std::nullopt; }
  friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

// Counts over trials for one fixed challenge bit.
struct GameCounts {
  size_t trials = 0;
  size_t accepted = 0;
  size_t output_one = 0;        // experiment output is 1
  size_t accepted_correct = 0;  // accepted and guess == b
  size_t guess_one = 0;         // guess is 1, regardless of the verdict
  void add(const GameTranscript& t);
};

struct GameStats {
  GameCounts b0, b1;
  double acceptance() const;
  double acceptance_sigma() const;
  // |Pr[out = 1 | b = 1] - Pr[out = 1 | b = 0]| with bottom counted as 0.
  double advantage() const;
  double advantage_sigma() const;
  // Same restricted to accepted trials; 0 when nothing was accepted.
  double conditional_advantage() const;
  // Guess advantage ignoring the verdict.
  double unconditional_advantage() const;
};

// ---- OT-CD game ----

// Fresh instance per trial; the game calls messages, then cert, then guess.
class OtcdAdversary {
 public:
  virtual ~OtcdAdversary() = default;
  virtual AdversaryClass cls() const = 0;
  virtual std::string tag() const = 0;
  virtual std::pair<BitString, BitString> messages(Rng& rng) = 0;
  // nullopt refuses to delete.
  virtual std::optional<otcd::Cert> cert(otcd::Ciphertext& ct, Rng& rng) = 0;
  // sk is disclosed only when the certificate was accepted.
  virtual bool guess(const std::optional<otcd::Key>& sk, Rng& rng) = 0;
};
using OtcdFactory = std::function<std::unique_ptr<OtcdAdversary>()>;

// Built-in tags: honest-deleter, keep-and-measure, cert-guesser.
OtcdFactory otcd_adversary(const std::string& tag);
std::vector<std::string> otcd_adversary_tags();

GameTranscript otcd_trial(const OtcdFactory& adv, size_t lambda, bool b, uint64_t seed);
GameCounts run_otcd_game(const OtcdFactory& adv, size_t lambda, size_t trials, bool b, uint64_t seed);
GameStats run_otcd_game(const OtcdFactory& adv, size_t lambda, size_t trials, uint64_t seed);

// ---- Certified-everlasting IND-CPA game ----

enum class CePrimitive : uint8_t { kSkeQrom, kSkeCss, kPkeQrom, kPkeCss };
const char* primitive_name(CePrimitive p);
std::optional<CePrimitive> parse_primitive(const std::string& name);

// What the adversary may use once the key is disclosed.
struct Disclosure {
  std::function<std::optional<BitString>(ce::Ciphertext&)> decrypt;
};

class CeAdversary {
 public:
  virtual ~CeAdversary() = default;
  virtual AdversaryClass cls() const = 0;
  virtual std::string tag() const = 0;
  virtual std::pair<BitString, BitString> messages(Rng& rng) = 0;
  // nullopt refuses to delete. reg is the register holding ct, for
  // adversaries that need fresh qubits.
  virtual std::optional<ce::CertBundle> cert(ce::Ciphertext& ct, const qsim::RegisterPtr& reg, Rng& rng) = 0;
  virtual bool guess(const std::optional<Disclosure>& key, Rng& rng) = 0;
};
using CeFactory = std::function<std::unique_ptr<CeAdversary>()>;

// Built-in tags: honest-deleter, no-deletion, delete-then-decrypt,
// dec-before-delete.
CeFactory ce_adversary(const std::string& tag);
std::vector<std::string> ce_adversary_tags();

enum class Disclose : uint8_t {
  kOnAccept,  // the experiment as defined
  kAlways,    // diagnostic: the key is handed over whatever the verdict
};

GameTranscript ce_trial(CePrimitive prim, const CeFactory& adv, size_t lambda, bool b, uint64_t seed,
                        Disclose mode = Disclose::kOnAccept);
GameCounts run_ce_indcpa_game(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t trials, bool b,
                              uint64_t seed, Disclose mode = Disclose::kOnAccept);
GameStats run_ce_indcpa_game(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t trials, uint64_t seed,
                             Disclose mode = Disclose::kOnAccept);

// k independent instances with the same challenge bit; the keys are
// disclosed only if every certificate verifies. The adversary plays each
// instance with its own state and its guess is the first instance's guess.
GameTranscript ce_multi_trial(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t k, bool b,
                              uint64_t seed);
GameStats run_ce_multi_game(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t k, size_t trials,
                            uint64_t seed);

// ---- Certified everlasting lemma ----
//
// The adversary gets |z>_theta and bt = b xor (parity of z on theta = 0),
// measures each qubit in a fixed basis (1 = Hadamard), and from the
// outcomes o and bt picks a certificate z' and a classical residual rho.
// The experiment outputs rho if z' matches z on every theta = 1 position,
// bottom otherwise. Bit i of a mask is position i; lambda <= 16.

struct LemmaChoice {
  double prob = 1;
  uint64_t cert = 0;         // fixed certificate bits
  uint64_t cert_random = 0;  // positions filled with uniform bits instead
  uint32_t rho = 0;
};

class LemmaStrategy {
 public:
  virtual ~LemmaStrategy() = default;
  virtual std::string tag() const = 0;
  virtual uint64_t basis(size_t lambda) const = 0;
  // Appends the distribution of choices for outcomes o; probabilities sum to 1.
  virtual void choices(size_t lambda, bool bt, uint64_t o, std::vector<LemmaChoice>& out) const = 0;
  // Upper bound (exclusive) on rho.
  virtual uint32_t rho_range(size_t lambda) const = 0;
};

// Built-in tags: honest-deleter, ignore-ciphertext, measure-computational,
// keep-masked-bit, split-basis.
std::unique_ptr<LemmaStrategy> lemma_strategy(const std::string& tag);
std::vector<std::string> lemma_strategy_tags();

// Output distribution for one b: cell 0 is bottom, cell 1 + r is rho = r.
using LemmaDistribution = std::vector<double>;

struct LemmaExact {
  LemmaDistribution z0, z1;
  double distance = 0;  // total variation distance
};
// Throws std::invalid_argument for lambda = 0 or lambda > 10.
LemmaExact ce_lemma_exact(const LemmaStrategy& s, size_t lambda);

struct LemmaMonteCarlo {
  std::vector<size_t> counts0, counts1;
  size_t trials = 0;
};
// Runs the experiment on simulated qubits, `trials` times per b.
LemmaMonteCarlo ce_lemma_monte_carlo(const LemmaStrategy& s, size_t lambda, size_t trials, uint64_t seed);

// Compares the sampled gap on the optimal distinguishing set of the exact
// distributions against the exact distance.
struct LemmaCheck {
  double exact = 0;
  double estimate = 0;
  double sigma = 0;
  bool within(double k) const;
};
LemmaCheck compare(const LemmaExact& exact, const LemmaMonteCarlo& mc);

// ---- Reporting ----

struct TableRow {
  std::string experiment;
  std::string adversary;
  size_t lambda = 0;
  size_t trials = 0;
  std::string quantity;
  double value = 0;
  double sigma = 0;
  std::optional<double> target;
};
std::string format_table(const std::vector<TableRow>& rows);

// Exact acceptance probability of a uniformly random otcd certificate for
// a one-bit message: sum_k C(lambda, k) 2^(-lambda-k) = (3/4)^lambda.
double otcd_guess_acceptance(size_t lambda);

}  // namespace everlast::harness
