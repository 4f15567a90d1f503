#ifndef BB_PRESENTATION_HPP
#define BB_PRESENTATION_HPP

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bb/expression.hpp"
#include "bb/word.hpp"

namespace bb {

enum class RelKind {
  generic,
  edge_pair,      // e ebar
  triangle,       // e f g over a directed triangle cycle
  anti_triangle,  // e^-1 f^-1 g^-1
  s_relator,      // t e t^-1 w_e^-1 (extension) / its level-n image (indexed)
  commutator,     // [u, v]
};

/// Structural tag attached to a relator so expressions can be serialized and
/// indexed relators classified without string matching.
struct RelatorMeta {
  RelKind kind = RelKind::generic;
  std::array<int, 3> params = {-1, -1, -1};  // generator ids, kind-dependent
};

enum class PresentationLabel { p_a, p_a_ext, p_h, other };

/// Finite presentation: an alphabet plus a deduplicated, indexable store of
/// literal relator words.
class Presentation final : public RelatorStore {
 public:
  Presentation() = default;
  Presentation(const Alphabet* alphabet, PresentationLabel label)
      : alphabet_(alphabet), label_(label) {}

  /// Adds a relator unless the literal word is already present; returns its id.
  int add(Word w, RelatorMeta meta = {});

  std::optional<int> find(const Word& w) const;
  int relator_count() const { return static_cast<int>(words_.size()); }
  const RelatorMeta& meta(int id) const { return meta_.at(static_cast<size_t>(id)); }
  const Alphabet& alphabet() const { return *alphabet_; }
  PresentationLabel label() const { return label_; }

  const Word& relator_word(int id) const override { return words_.at(static_cast<size_t>(id)); }
  int relator_index(int id) const override {
    (void)id;
    return 0;
  }
  std::string relator_label(int id) const override;

 private:
  const Alphabet* alphabet_ = nullptr;
  PresentationLabel label_ = PresentationLabel::other;
  std::vector<Word> words_;
  std::vector<RelatorMeta> meta_;
  std::unordered_map<Word, int, WordHash> by_word_;
};

std::string relator_kind_name(RelKind kind);
RelKind relator_kind_from_name(const std::string& name);

}  // namespace bb

#endif
