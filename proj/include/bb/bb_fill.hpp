#ifndef BB_BB_FILL_HPP
#define BB_BB_FILL_HPP

#include <iosfwd>
#include <optional>
#include <unordered_map>

#include "bb/context.hpp"
#include "bb/expanders.hpp"
#include "bb/raag_fill.hpp"

namespace bb {

/// Letter of the height-graded alphabet t^k a t^-k.
struct XLetter {
  long long level = 0;
  int gen = 0;
  int sign = 1;

  friend bool operator==(const XLetter& a, const XLetter& b) {
    return a.level == b.level && a.gen == b.gen && a.sign == b.sign;
  }
};

struct XWord {
  std::vector<XLetter> letters;
};

/// Height-graded rewriting of a zero-height word over edges and the stable
/// letter: freely reduced over the graded alphabet, expansion freely equal
/// to the input. Throws on nonzero height.
XWord lambda_rewrite(const Context& ctx, const Word& u);

/// Back to letters over edges and the stable letter.
Word xword_expansion(const Context& ctx, const XWord& x);

/// Letterwise level substitution: t^k a t^-k maps to the level-k image of a.
Word psi_map(const Context& ctx, const XWord& x);

/// Converts an extended-presentation filling of a t-free word into an
/// indexed filling: area is preserved exactly and the penetration is bounded
/// by the input radius. Verifies over the indexed store.
NullExpression pushdown(const Context& ctx, const Word& w, const NullExpression& ext);

struct FillOptions {
  bool materialize_final = true;   // keep the edge-presentation expression
  bool keep_intermediates = false; // keep the vertex/extended/indexed stages
};

/// End-to-end certificate: per-stage metrics, certified bound values, and
/// the verification results. Stage expressions are retained on request.
struct FillingCertificate {
  Word input;
  ExpressionMetrics raag;
  ExpressionMetrics extended;
  ExpressionMetrics indexed;  // penetration lives here
  ExpressionMetrics final;
  long long rarea_at_penetration = 0;
  long long dehn_bound_at_n = 0;
  bool verified = false;

  std::optional<NullExpression> raag_expr;
  std::optional<NullExpression> extended_expr;
  std::optional<NullExpression> indexed_expr;
  std::optional<NullExpression> final_expr;
};

/// Reusable per-context expansion cache for repeated indexed relators.
class FillPipeline {
 public:
  explicit FillPipeline(const Context& ctx) : ctx_(&ctx) {}

  /// Full pipeline: embed, vertex filling, transport, pushdown, expansion,
  /// splice. Every stage is verified; any failure throws. Requires
  /// prepare_fillings on the context.
  FillingCertificate fill(const Word& w, const FillOptions& options = {});

 private:
  const NullExpression& expansion(int indexed_relator_id);

  const Context* ctx_;
  std::unordered_map<int, NullExpression> expansion_cache_;
};

/// Writes/reads the line-oriented certificate format. A file may hold
/// several certificates in sequence.
void write_certificate(std::ostream& out, const Context& ctx, const FillingCertificate& cert);

struct ParsedCertificate {
  std::string complex_hash;
  Word word;
  NullExpression expression;
  long long claimed_area = 0;
  long long claimed_rarea_bound = 0;
  long long claimed_dehn_bound = 0;
};

std::vector<ParsedCertificate> read_certificates(std::istream& in, const Context& ctx);

/// Re-checks a parsed certificate against the edge presentation: hash,
/// verification, area claim and bound inequality.
bool recheck_certificate(const Context& ctx, const ParsedCertificate& cert, std::string* why);

}  // namespace bb

#endif
