#include "bb/presentation.hpp"

namespace bb {

int Presentation::add(Word w, RelatorMeta meta) {
  if (w.empty()) throw Error("relators must be nonempty words");
  auto it = by_word_.find(w);
  if (it != by_word_.end()) return it->second;
  int id = static_cast<int>(words_.size());
  by_word_.emplace(w, id);
  words_.push_back(std::move(w));
  meta_.push_back(meta);
  return id;
}

std::optional<int> Presentation::find(const Word& w) const {
  auto it = by_word_.find(w);
  if (it == by_word_.end()) return std::nullopt;
  return it->second;
}

std::string Presentation::relator_label(int id) const {
  const RelatorMeta& m = meta(id);
  std::string out = relator_kind_name(m.kind);
  out += ':';
  bool first = true;
  for (int p : m.params) {
    if (p < 0) break;
    if (!first) out += ',';
    first = false;
    out += alphabet_->info(p).name;
  }
  out += ":0";
  return out;
}

std::string relator_kind_name(RelKind kind) {
  switch (kind) {
    case RelKind::generic: return "generic";
    case RelKind::edge_pair: return "edge-pair";
    case RelKind::triangle: return "triangle";
    case RelKind::anti_triangle: return "anti-triangle";
    case RelKind::s_relator: return "s";
    case RelKind::commutator: return "comm";
  }
  return "generic";
}

RelKind relator_kind_from_name(const std::string& name) {
  if (name == "edge-pair") return RelKind::edge_pair;
  if (name == "triangle") return RelKind::triangle;
  if (name == "anti-triangle") return RelKind::anti_triangle;
  if (name == "s") return RelKind::s_relator;
  if (name == "comm") return RelKind::commutator;
  if (name == "generic") return RelKind::generic;
  throw Error("unknown relator kind: " + name);
}

}  // namespace bb
