#ifndef BB_WORD_HPP
#define BB_WORD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

enum class GenKind { vertex, edge, stable };

/// One interned generator. Directed edges carry their endpoints and a link to
/// the reversed edge, which is a distinct generator (not the formal inverse).
struct GeneratorInfo {
  std::string name;
  GenKind kind = GenKind::vertex;
  int from = -1;     // vertex gen id, edges only
  int to = -1;       // vertex gen id, edges only
  int reverse = -1;  // gen id of the reversed edge, edges only
};

struct Letter {
  int32_t gen = 0;
  int32_t sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

/// A word in the free monoid on the signed generators. Words are stored
/// unreduced; reduction is always an explicit operation.
struct Word {
  uint32_t alphabet = 0;  // 0 means "not bound to any alphabet yet"
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(uint32_t abc) : alphabet(abc) {}
  Word(uint32_t abc, std::vector<Letter> ls) : alphabet(abc), letters(std::move(ls)) {}

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](size_t i) const { return letters[i]; }
  Letter& operator[](size_t i) { return letters[i]; }

  void push_back(Letter l) { letters.push_back(l); }
  void append(const Word& other);
  void append_inverse(const Word& other);

  Word inverse() const;
  Word subword(size_t pos, size_t len) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (const Letter& l : w.letters) {
      h = (h ^ static_cast<uint64_t>(l.gen * 2 + (l.sign > 0))) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

/// The unique freely reduced word equal to w in the free group.
Word free_reduce(const Word& w);

/// True iff u and v are equal as elements of the free group.
bool freely_equal(const Word& u, const Word& v);

/// Signed count of occurrences of generator g in w.
long long exponent_sum(const Word& w, int gen);

/// Strips matching inverse letters from both ends: returns (core, c) with
/// w freely equal to c core c^-1 and core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// w rotated left by k letters.
Word rotate(const Word& w, size_t k);

/// Interned generator table for one complex. Holds vertex generators, both
/// orientations of every edge, and the stable letter, so that vertex words,
/// edge words and extension words all live in a single consistent id space.
class Alphabet {
 public:
  Alphabet();

  int add_vertex(const std::string& name);
  int add_edge(const std::string& name, int from, int to);
  int add_stable(const std::string& name);
  void link_reverse(int e, int erev);

  int id(std::string_view name) const;
  std::optional<int> find(std::string_view name) const;
  const GeneratorInfo& info(int gen) const { return gens_.at(static_cast<size_t>(gen)); }
  int size() const { return static_cast<int>(gens_.size()); }
  uint32_t uid() const { return uid_; }

  bool is_edge(int gen) const { return info(gen).kind == GenKind::edge; }
  int reverse_edge(int gen) const;

  Word word_of(std::initializer_list<Letter> ls) const;
  Word letter_word(int gen, int sign) const;
  Word power(int gen, long long n) const;  // |n| letters of sign sgn(n)

  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  std::string letter_name(Letter l) const;

 private:
  int add(GeneratorInfo gi);

  uint32_t uid_;
  std::vector<GeneratorInfo> gens_;
  std::unordered_map<std::string, int> by_name_;
};

}  // namespace bb

#endif
