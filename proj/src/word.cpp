#include "bb/word.hpp"

#include <atomic>
#include <sstream>

namespace bb {

namespace {

uint32_t merge_alphabets(uint32_t a, uint32_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b) throw AlphabetMismatch("words belong to different alphabets");
  return a;
}

std::atomic<uint32_t> next_alphabet_uid{1};

}  // namespace

void Word::append(const Word& other) {
  alphabet = merge_alphabets(alphabet, other.alphabet);
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
}

void Word::append_inverse(const Word& other) {
  alphabet = merge_alphabets(alphabet, other.alphabet);
  for (auto it = other.letters.rbegin(); it != other.letters.rend(); ++it) {
    letters.push_back(it->inverse());
  }
}

Word Word::inverse() const {
  Word out(alphabet);
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return out;
}

Word Word::subword(size_t pos, size_t len) const {
  Word out(alphabet);
  out.letters.assign(letters.begin() + static_cast<long>(pos),
                     letters.begin() + static_cast<long>(pos + len));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word out = a;
  out.append(b);
  out.append(c);
  return out;
}

Word free_reduce(const Word& w) {
  Word out(w.alphabet);
  out.letters.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

bool freely_equal(const Word& u, const Word& v) {
  merge_alphabets(u.alphabet, v.alphabet);
  // Reduce u, then feed v^-1 into the same stack.
  std::vector<Letter> stack;
  stack.reserve(u.size() + v.size());
  auto push = [&stack](Letter l) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  };
  for (const Letter& l : u.letters) push(l);
  for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it) push(it->inverse());
  return stack.empty();
}

long long exponent_sum(const Word& w, int gen) {
  long long s = 0;
  for (const Letter& l : w.letters) {
    if (l.gen == gen) s += l.sign;
  }
  return s;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conj(w.alphabet);
  size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core.letters[lo] == core.letters[hi - 1].inverse()) {
    conj.push_back(core.letters[lo]);
    ++lo;
    --hi;
  }
  Word inner(core.alphabet);
  inner.letters.assign(core.letters.begin() + static_cast<long>(lo),
                       core.letters.begin() + static_cast<long>(hi));
  return {inner, conj};
}

Word rotate(const Word& w, size_t k) {
  Word out(w.alphabet);
  size_t n = w.size();
  if (n == 0) return out;
  k %= n;
  out.letters.reserve(n);
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<long>(k), w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(k));
  return out;
}

Alphabet::Alphabet() : uid_(next_alphabet_uid.fetch_add(1)) {}

int Alphabet::add(GeneratorInfo gi) {
  if (by_name_.count(gi.name)) throw Error("duplicate generator name: " + gi.name);
  int id = static_cast<int>(gens_.size());
  by_name_.emplace(gi.name, id);
  gens_.push_back(std::move(gi));
  return id;
}

int Alphabet::add_vertex(const std::string& name) {
  return add({name, GenKind::vertex, -1, -1, -1});
}

int Alphabet::add_edge(const std::string& name, int from, int to) {
  return add({name, GenKind::edge, from, to, -1});
}

int Alphabet::add_stable(const std::string& name) {
  return add({name, GenKind::stable, -1, -1, -1});
}

void Alphabet::link_reverse(int e, int erev) {
  gens_.at(static_cast<size_t>(e)).reverse = erev;
  gens_.at(static_cast<size_t>(erev)).reverse = e;
}

int Alphabet::id(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw Error("unknown generator: " + std::string(name));
  return it->second;
}

std::optional<int> Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::reverse_edge(int gen) const {
  const GeneratorInfo& gi = info(gen);
  if (gi.kind != GenKind::edge || gi.reverse < 0) {
    throw Error("generator has no reversed edge: " + gi.name);
  }
  return gi.reverse;
}

Word Alphabet::word_of(std::initializer_list<Letter> ls) const {
  Word w(uid_);
  w.letters.assign(ls.begin(), ls.end());
  return w;
}

Word Alphabet::letter_word(int gen, int sign) const {
  Word w(uid_);
  w.push_back({gen, sign});
  return w;
}

Word Alphabet::power(int gen, long long n) const {
  Word w(uid_);
  int sign = n >= 0 ? 1 : -1;
  for (long long i = 0; i < (n >= 0 ? n : -n); ++i) w.push_back({gen, sign});
  return w;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w(uid_);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    w.push_back({id(tok), sign});
  }
  return w;
}

std::string Alphabet::letter_name(Letter l) const {
  std::string s = info(l.gen).name;
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string Alphabet::format_word(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

}  // namespace bb
