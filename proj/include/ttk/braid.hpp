// Braid words in B_n and the moves that preserve closure type.
//
// A word stores its strand count and a sequence of signed generator letters:
// letter +i is sigma_i (strand i crossing under strand i+1), letter -i its
// inverse.  Words are stored verbatim; nothing auto-normalizes, because move
// replay and word-identity tests compare exact letter sequences.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ttk/error.hpp"

namespace ttk {

class BraidWord {
 public:
  // The identity braid on n strands.
  explicit BraidWord(int strands) : strands_(strands) { check_strands(); }
  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    check_strands();
    for (int g : letters_) check_letter(g);
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const BraidWord& rhs) const = default;

  // Text format: strand count, colon, space-separated signed letters,
  // e.g. "3: 1 2 1 -2".  The identity braid renders as "3:".
  std::string str() const;
  static BraidWord parse(std::string_view text);

 private:
  void check_strands() const {
    if (strands_ < 1) throw ValidationError("braid needs at least one strand");
  }
  void check_letter(int g) const {
    if (g == 0 || g <= -strands_ || g >= strands_)
      throw ValidationError("letter " + std::to_string(g) +
                            " out of range for " + std::to_string(strands_) +
                            " strands");
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

// Permutation of strand positions 0..n-1 (image[i] = where position i ends).
struct Permutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  int cycle_count() const;
  static Permutation identity(int n);
  // this applied first, then rhs.
  Permutation then(const Permutation& rhs) const;
  bool operator==(const Permutation& rhs) const = default;
};

// --- constructors from the braid conventions ---

// (k,ell): for ell >= 0 the word (s_1 s_2 ... s_{k-1})^ell; for ell < 0 the
// word (s_{k-1}^-1 ... s_1^-1)^|ell|.  k = 1 gives the empty word.
BraidWord torus_braid(int k, int ell);

// Barred variant: (s_{k-1} s_{k-2} ... s_1)^ell for ell >= 0, and
// (s_1^-1 ... s_{k-1}^-1)^|ell| for ell < 0.
BraidWord bar_torus_braid(int k, int ell);

// ell full twists on k strands: torus_braid(k, ell * k).
BraidWord full_twist(int k, int ell);
BraidWord bar_full_twist(int k, int ell);

// --- word operations ---

BraidWord concat(const BraidWord& b1, const BraidWord& b2);
// Same letters shifted onto strands offset+1 .. offset+b.strands of an
// n-strand braid.
BraidWord embed(const BraidWord& b, int n, int offset);
BraidWord mirror(const BraidWord& b);   // negate every letter
BraidWord reverse(const BraidWord& b);  // flip letter order

Permutation permutation(const BraidWord& b);
int closure_components(const BraidWord& b);
int exponent_sum(const BraidWord& b);

// --- Markov-type moves ---

// g^-1 . b . g
BraidWord conjugate(const BraidWord& b, int g);
// Word on n+1 strands ending in (sign) s_n.
BraidWord stabilize(const BraidWord& b, int sign);
// Inverse move; requires the last letter to be +-s_{n-1} and index n-1 to
// occur nowhere else in the word.
BraidWord destabilize(const BraidWord& b);
// Iteratively cancel adjacent s_i s_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& b);

struct Move {
  enum class Kind {
    FreeReduce,   // cancel letters at pos, pos+1
    Commute,      // swap commuting letters at pos, pos+1
    BraidRel,     // rewrite (a b a) -> (b a b) at pos (|a|-|b| = +-1, equal signs)
    Conjugate,    // conjugate whole word by `letter`
    Stabilize,    // sign in `letter` (+1/-1)
    Destabilize,
  };
  Kind kind;
  int pos = 0;     // letter position for the local moves
  int letter = 0;  // conjugating letter / stabilization sign
};

using MoveScript = std::vector<Move>;

// Replays a script, validating each move; throws MoveError with the index
// of the first inapplicable move.
BraidWord apply_move_script(const BraidWord& b, const MoveScript& script);

// Script text format, one move per line:
//   reduce <pos> | commute <pos> | braidrel <pos> | conj <letter> |
//   stab +|- | destab
// Positions are 0-based. '#' starts a comment.
MoveScript parse_move_script(std::string_view text);

}  // namespace ttk
