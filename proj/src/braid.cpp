#include "ttk/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ttk {

std::string BraidWord::str() const {
  std::ostringstream os;
  os << strands_ << ":";
  for (int g : letters_) os << " " << g;
  return os.str();
}

BraidWord BraidWord::parse(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw ParseError("braid word needs 'strands: letters'");
  int strands = 0;
  try {
    std::size_t used = 0;
    strands = std::stoi(s.substr(0, colon), &used);
    while (used < colon)
      if (!std::isspace(static_cast<unsigned char>(s[used++])))
        throw ParseError("bad strand count");
  } catch (const std::exception&) {
    throw ParseError("bad strand count in braid word");
  }
  std::vector<int> letters;
  std::istringstream rest(s.substr(colon + 1));
  std::string tok;
  while (rest >> tok) {
    try {
      std::size_t used = 0;
      int g = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad letter '" + tok + "'");
      letters.push_back(g);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + tok + "'");
    }
  }
  return BraidWord(strands, std::move(letters));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image[j]) seen[j] = true;
  }
  return cycles;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::then(const Permutation& rhs) const {
  Permutation out;
  out.image.resize(image.size());
  for (int i = 0; i < size(); ++i) out.image[i] = rhs.image[image[i]];
  return out;
}

BraidWord torus_braid(int k, int ell) {
  if (k < 1) throw ValidationError("torus braid needs k >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(std::abs(ell)) * (k - 1));
  if (ell >= 0) {
    for (int rep = 0; rep < ell; ++rep)
      for (int i = 1; i <= k - 1; ++i) letters.push_back(i);
  } else {
    for (int rep = 0; rep < -ell; ++rep)
      for (int i = k - 1; i >= 1; --i) letters.push_back(-i);
  }
  return BraidWord(k, std::move(letters));
}

BraidWord bar_torus_braid(int k, int ell) {
  if (k < 1) throw ValidationError("torus braid needs k >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(std::abs(ell)) * (k - 1));
  if (ell >= 0) {
    for (int rep = 0; rep < ell; ++rep)
      for (int i = k - 1; i >= 1; --i) letters.push_back(i);
  } else {
    for (int rep = 0; rep < -ell; ++rep)
      for (int i = 1; i <= k - 1; ++i) letters.push_back(-i);
  }
  return BraidWord(k, std::move(letters));
}

BraidWord full_twist(int k, int ell) { return torus_braid(k, ell * k); }
BraidWord bar_full_twist(int k, int ell) { return bar_torus_braid(k, ell * k); }

BraidWord concat(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands() != b2.strands())
    throw ValidationError("cannot concatenate braids on " +
                          std::to_string(b1.strands()) + " and " +
                          std::to_string(b2.strands()) + " strands");
  std::vector<int> letters = b1.letters();
  letters.insert(letters.end(), b2.letters().begin(), b2.letters().end());
  return BraidWord(b1.strands(), std::move(letters));
}

BraidWord embed(const BraidWord& b, int n, int offset) {
  if (offset < 0 || offset + b.strands() > n)
    throw ValidationError("embed: sub-braid does not fit");
  std::vector<int> letters;
  letters.reserve(b.letters().size());
  for (int g : b.letters()) letters.push_back(g > 0 ? g + offset : g - offset);
  return BraidWord(n, std::move(letters));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters;
  letters.reserve(b.letters().size());
  for (int g : b.letters()) letters.push_back(-g);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord reverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  return BraidWord(b.strands(), std::move(letters));
}

Permutation permutation(const BraidWord& b) {
  Permutation p = Permutation::identity(b.strands());
  // image[i] tracks where the strand currently at position i started; we
  // want starting position -> final position, so build it in reverse.
  std::vector<int> pos(p.image);  // pos[start] = current position
  for (int g : b.letters()) {
    int i = std::abs(g) - 1;
    for (int& x : pos)
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
  }
  Permutation out;
  out.image = std::move(pos);
  return out;
}

int closure_components(const BraidWord& b) {
  return permutation(b).cycle_count();
}

int exponent_sum(const BraidWord& b) {
  int sum = 0;
  for (int g : b.letters()) sum += (g > 0) ? 1 : -1;
  return sum;
}

BraidWord conjugate(const BraidWord& b, int g) {
  if (g == 0 || std::abs(g) >= b.strands())
    throw ValidationError("conjugating letter out of range");
  std::vector<int> letters;
  letters.reserve(b.letters().size() + 2);
  letters.push_back(-g);
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  letters.push_back(g);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("stabilize sign must be +-1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord destabilize(const BraidWord& b) {
  const int n = b.strands();
  if (n < 2) throw ValidationError("cannot destabilize a 1-strand braid");
  const auto& ls = b.letters();
  if (ls.empty() || std::abs(ls.back()) != n - 1)
    throw ValidationError("destabilize: last letter is not +-s_" +
                          std::to_string(n - 1));
  int uses = 0;
  for (int g : ls) uses += (std::abs(g) == n - 1);
  if (uses != 1)
    throw ValidationError("destabilize: index " + std::to_string(n - 1) +
                          " occurs more than once");
  std::vector<int> letters(ls.begin(), ls.end() - 1);
  return BraidWord(n - 1, std::move(letters));
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> stack;
  stack.reserve(b.letters().size());
  for (int g : b.letters()) {
    if (!stack.empty() && stack.back() == -g)
      stack.pop_back();
    else
      stack.push_back(g);
  }
  return BraidWord(b.strands(), std::move(stack));
}

namespace {

BraidWord apply_one(const BraidWord& b, const Move& m, int idx) {
  const auto& ls = b.letters();
  const int len = static_cast<int>(ls.size());
  auto need_pair = [&](int pos) {
    if (pos < 0 || pos + 1 >= len)
      throw MoveError(idx, "position " + std::to_string(pos) +
                               " out of range (length " + std::to_string(len) +
                               ")");
  };
  switch (m.kind) {
    case Move::Kind::FreeReduce: {
      need_pair(m.pos);
      if (ls[m.pos] != -ls[m.pos + 1])
        throw MoveError(idx, "letters at " + std::to_string(m.pos) +
                                 " do not cancel");
      std::vector<int> out(ls.begin(), ls.begin() + m.pos);
      out.insert(out.end(), ls.begin() + m.pos + 2, ls.end());
      return BraidWord(b.strands(), std::move(out));
    }
    case Move::Kind::Commute: {
      need_pair(m.pos);
      if (std::abs(std::abs(ls[m.pos]) - std::abs(ls[m.pos + 1])) < 2)
        throw MoveError(idx, "letters at " + std::to_string(m.pos) +
                                 " do not commute");
      std::vector<int> out = ls;
      std::swap(out[m.pos], out[m.pos + 1]);
      return BraidWord(b.strands(), std::move(out));
    }
    case Move::Kind::BraidRel: {
      if (m.pos < 0 || m.pos + 2 >= len)
        throw MoveError(idx, "position out of range for braid relation");
      const int a = ls[m.pos], c = ls[m.pos + 1];
      const bool ok = ls[m.pos + 2] == a && a != 0 && c != 0 &&
                      ((a > 0) == (c > 0)) &&
                      std::abs(std::abs(a) - std::abs(c)) == 1;
      if (!ok)
        throw MoveError(idx, "no braid relation at " + std::to_string(m.pos));
      std::vector<int> out = ls;
      out[m.pos] = c;
      out[m.pos + 1] = a;
      out[m.pos + 2] = c;
      return BraidWord(b.strands(), std::move(out));
    }
    case Move::Kind::Conjugate:
      try {
        return conjugate(b, m.letter);
      } catch (const ValidationError& e) {
        throw MoveError(idx, e.what());
      }
    case Move::Kind::Stabilize:
      try {
        return stabilize(b, m.letter);
      } catch (const ValidationError& e) {
        throw MoveError(idx, e.what());
      }
    case Move::Kind::Destabilize:
      try {
        return destabilize(b);
      } catch (const ValidationError& e) {
        throw MoveError(idx, e.what());
      }
  }
  throw MoveError(idx, "unknown move kind");
}

}  // namespace

BraidWord apply_move_script(const BraidWord& b, const MoveScript& script) {
  BraidWord cur = b;
  for (std::size_t i = 0; i < script.size(); ++i)
    cur = apply_one(cur, script[i], static_cast<int>(i));
  return cur;
}

MoveScript parse_move_script(std::string_view text) {
  MoveScript script;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd)) continue;
    Move m{};
    auto want_int = [&](const char* what) {
      int v;
      if (!(ls >> v))
        throw ParseError("line " + std::to_string(lineno) + ": " + cmd +
                         " needs " + what);
      return v;
    };
    if (cmd == "reduce") {
      m.kind = Move::Kind::FreeReduce;
      m.pos = want_int("a position");
    } else if (cmd == "commute") {
      m.kind = Move::Kind::Commute;
      m.pos = want_int("a position");
    } else if (cmd == "braidrel") {
      m.kind = Move::Kind::BraidRel;
      m.pos = want_int("a position");
    } else if (cmd == "conj") {
      m.kind = Move::Kind::Conjugate;
      m.letter = want_int("a letter");
    } else if (cmd == "stab") {
      m.kind = Move::Kind::Stabilize;
      std::string sign;
      if (!(ls >> sign) || (sign != "+" && sign != "-"))
        throw ParseError("line " + std::to_string(lineno) +
                         ": stab needs + or -");
      m.letter = (sign == "+") ? 1 : -1;
    } else if (cmd == "destab") {
      m.kind = Move::Kind::Destabilize;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown move '" +
                       cmd + "'");
    }
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) +
                       ": trailing input '" + extra + "'");
    script.push_back(m);
  }
  return script;
}

}  // namespace ttk
