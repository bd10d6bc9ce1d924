#pragma once

#include <cstddef>
#include <vector>

#include "hlcode/bitword.hpp"
#include "hlcode/hl_code.hpp"
#include "hlcode/relations.hpp"

namespace hlcode {

struct DecodeOptions {
  /// Worker threads for the coefficients of one level. 0 or 1 = serial.
  unsigned threads = 1;
};

/// Tally of one coefficient's relations evaluated on a word.
struct Votes {
  std::size_t ones = 0;
  std::size_t zeros = 0;

  std::size_t total() const noexcept { return ones + zeros; }
  friend bool operator==(const Votes&, const Votes&) = default;
};

/// Evaluates every relation of `relations` on x (no early exit).
Votes count_votes(const RelationSet& relations, const BitWord& x);

/// Majority vote with early exit: stops as soon as either count exceeds half
/// of the relations. Throws DecodeFailure on an exact tie.
bool majority_coefficient(const RelationSet& relations, const BitWord& x, unsigned level);

struct LevelResult {
  BitWord partial_codeword;  ///< sum of a_j * G[j] over this degree
  BitWord partial_message;   ///< k bits, set only at rows of this degree
};

/// Decodes every coefficient of degree `degree` from x.
LevelResult decode_level(const RelationDictionary& relations, unsigned degree, const BitWord& x,
                         const GeneratorMatrix& g, const DecodeOptions& options = {});

struct DecodeOutcome {
  BitWord codeword;  ///< a * G
  BitWord message;   ///< a, k bits
  BitWord error;     ///< input - a * G
};

/// Word fed into each level during a decode, highest degree first.
struct DecodeTrace {
  struct Level {
    unsigned degree;
    BitWord input;
    BitWord partial_message;
  };
  std::vector<Level> levels;
  /// Residual a_0 v_0 + e that decides the constant coefficient.
  BitWord final_residual;
};

/// Multilevel majority-logic decoding. Levels run from the highest degree
/// down to 1, each on the residual left by the previous ones; a_0 is set
/// when the final residual has weight > n/2. Throws DecodeFailure on any tie.
DecodeOutcome decode(const BitWord& x, const GeneratorMatrix& g, const RelationDictionary& relations,
                     const DecodeOptions& options = {}, DecodeTrace* trace = nullptr);

}  // namespace hlcode
