#include "bb/bb_fill.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace bb {

XWord lambda_rewrite(const Context& ctx, const Word& u) {
  XWord out;
  long long height = 0;
  for (const Letter& l : u.letters) {
    const GeneratorInfo& gi = ctx.alphabet.info(l.gen);
    if (gi.kind == GenKind::stable) {
      height += l.sign;
      continue;
    }
    if (gi.kind != GenKind::edge) throw Error("height rewriting expects edge or stable letters");
    XLetter x{height, l.gen, l.sign};
    if (!out.letters.empty() && out.letters.back().level == x.level &&
        out.letters.back().gen == x.gen && out.letters.back().sign == -x.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  if (height != 0) throw Error("height rewriting requires total height zero");
  // The expansion must recover the input in the free group.
  if (!freely_equal(xword_expansion(ctx, out), u)) {
    throw VerificationError("graded rewriting does not expand back to the input");
  }
  return out;
}

Word xword_expansion(const Context& ctx, const XWord& x) {
  Word out(ctx.alphabet.uid());
  for (const XLetter& l : x.letters) {
    out.append(ctx.alphabet.power(ctx.stable_gen, l.level));
    out.push_back({l.gen, l.sign});
    out.append(ctx.alphabet.power(ctx.stable_gen, -l.level));
  }
  return out;
}

Word psi_map(const Context& ctx, const XWord& x) {
  Word out(ctx.alphabet.uid());
  for (const XLetter& l : x.letters) {
    const Word& img = ctx.phi->generator_image(l.gen, l.level);
    if (l.sign > 0) {
      out.append(img);
    } else {
      out.append_inverse(img);
    }
  }
  return out;
}

NullExpression pushdown(const Context& ctx, const Word& w, const NullExpression& ext) {
  for (const Letter& l : w.letters) {
    if (ctx.alphabet.info(l.gen).kind != GenKind::edge) {
      throw Error("pushdown expects a t-free word over edges");
    }
  }
  ExpressionMetrics in_metrics = expression_metrics(ext);
  NullExpression out;
  out.target = w;
  out.terms.reserve(ext.terms.size());
  for (const ExprTerm& t : ext.terms) {
    long long k = exponent_sum(t.conjugator, ctx.stable_gen);
    Word shifted = concat(t.conjugator, ctx.alphabet.power(ctx.stable_gen, -k));
    Word conj = psi_map(ctx, lambda_rewrite(ctx, shifted));

    const RelatorMeta& meta = ctx.pa_ext.meta(t.relator.id);
    IndexedKey key;
    switch (meta.kind) {
      case RelKind::edge_pair:
        key = {IndexedKind::edge_pair, {meta.params[0], -1, -1}, k};
        break;
      case RelKind::triangle:
        key = {IndexedKind::triangle, meta.params, k};
        break;
      case RelKind::anti_triangle:
        key = {IndexedKind::anti_triangle, meta.params, k};
        break;
      case RelKind::s_relator:
        key = {IndexedKind::s_relator, {meta.params[0], -1, -1}, k};
        break;
      default:
        throw Error("pushdown met a relator it cannot classify");
    }
    // The conjugated relator's graded image must be the indexed word.
    Word zbar_input = concat(ctx.alphabet.power(ctx.stable_gen, k), ctx.pa_ext.relator_word(t.relator.id),
                             ctx.alphabet.power(ctx.stable_gen, -k));
    Word psi_z = psi_map(ctx, lambda_rewrite(ctx, zbar_input));
    int id = ctx.infinite->intern(key);
    if (!(psi_z == ctx.infinite->relator_word(id))) {
      throw VerificationError("pushdown classification mismatch (corrupt upstream expression)");
    }
    out.terms.push_back({std::move(conj),
                         {id, t.relator.sign, static_cast<int32_t>(k >= 0 ? k : -k)}});
  }
  ExpressionMetrics out_metrics = expression_metrics(out);
  if (out_metrics.area != in_metrics.area) {
    throw VerificationError("pushdown changed the area");
  }
  if (out_metrics.penetration > in_metrics.radius) {
    throw VerificationError("pushdown penetration exceeded the input radius");
  }
  if (!verify_expression(*ctx.infinite, out)) {
    throw VerificationError("pushdown output failed verification");
  }
  return out;
}

const NullExpression& FillPipeline::expansion(int indexed_relator_id) {
  auto it = expansion_cache_.find(indexed_relator_id);
  if (it != expansion_cache_.end()) return it->second;
  const IndexedRelator& rel = ctx_->infinite->relator(indexed_relator_id);
  NullExpression e = expand_indexed_relator(*ctx_, rel.key);
  if (!(e.target == rel.word)) {
    throw VerificationError("expansion target differs from the indexed relator word");
  }
  return expansion_cache_.emplace(indexed_relator_id, std::move(e)).first->second;
}

FillingCertificate FillPipeline::fill(const Word& w, const FillOptions& options) {
  const Context& ctx = *ctx_;
  if (!ctx.fillings_ready()) throw Error("context fillings not prepared");
  FillingCertificate cert;
  cert.input = w;

  Word vw = embed_to_vertices(ctx, w);
  if (!raag_trivial(ctx, vw)) {
    throw NotNullHomotopic("input word is not null-homotopic");
  }
  NullExpression raag = fill_raag(ctx, vw);
  cert.raag = expression_metrics(raag);
  if (!verify_expression(ctx.pa, raag)) throw VerificationError("vertex filling failed");

  NullExpression ext = transport_to_extended(ctx, w, raag);
  cert.extended = expression_metrics(ext);

  NullExpression indexed = pushdown(ctx, w, ext);
  cert.indexed = expression_metrics(indexed);

  long long n = static_cast<long long>(w.size());
  const ConstantsRecord& c = ctx.constants;
  if (cert.extended.area > c.alpha_prime(n)) {
    throw VerificationError("extended filling exceeded the recorded area guarantee");
  }
  if (cert.indexed.penetration > c.pi_prime(n)) {
    throw VerificationError("penetration exceeded the recorded radius guarantee");
  }

  // Expand every indexed term and splice; verification is streamed so large
  // certificates need not retain the whole expression.
  ReductionStack product;
  NullExpression final_expr;
  final_expr.target = w;
  long long area = 0, radius = 0;
  for (const ExprTerm& t : indexed.terms) {
    const NullExpression& e = expansion(t.relator.id);
    std::vector<ExprTerm> block;
    append_conjugated(block, e, t.conjugator, t.relator.sign);
    for (ExprTerm& bt : block) {
      ++area;
      radius = std::max(radius, static_cast<long long>(bt.conjugator.size()));
      product.push(bt.conjugator);
      const Word& r = ctx.ph.relator_word(bt.relator.id);
      if (bt.relator.sign >= 0) {
        product.push(r);
      } else {
        product.push_inverse(r);
      }
      product.push_inverse(bt.conjugator);
      if (options.materialize_final) final_expr.terms.push_back(std::move(bt));
    }
  }
  product.push_inverse(w);
  cert.verified = product.empty();
  if (!cert.verified) throw VerificationError("final expression failed verification");
  cert.final.area = area;
  cert.final.radius = radius;

  cert.rarea_at_penetration = c.rarea_bound(cert.indexed.penetration);
  cert.dehn_bound_at_n = c.dehn_bound(n);
  if (cert.final.area > cert.indexed.area * cert.rarea_at_penetration) {
    throw VerificationError("final area exceeded area x relational-area bound");
  }
  if (cert.indexed.area * cert.rarea_at_penetration > cert.dehn_bound_at_n) {
    throw VerificationError("certified product exceeded the degree-four bound");
  }

  if (options.materialize_final) cert.final_expr = std::move(final_expr);
  if (options.keep_intermediates) {
    cert.raag_expr = std::move(raag);
    cert.extended_expr = std::move(ext);
    cert.indexed_expr = std::move(indexed);
  }
  return cert;
}

void write_certificate(std::ostream& out, const Context& ctx, const FillingCertificate& cert) {
  out << "certificate: 1\n";
  out << "complex: " << ctx.hash << "\n";
  out << "word: " << ctx.alphabet.format_word(cert.input) << "\n";
  out << "n: " << cert.input.size() << "\n";
  out << "raag-area: " << cert.raag.area << "\nraag-radius: " << cert.raag.radius << "\n";
  out << "ext-area: " << cert.extended.area << "\next-radius: " << cert.extended.radius << "\n";
  out << "pushdown-area: " << cert.indexed.area << "\npenetration: " << cert.indexed.penetration
      << "\n";
  out << "final-area: " << cert.final.area << "\nfinal-radius: " << cert.final.radius << "\n";
  out << "rarea-bound: " << cert.rarea_at_penetration << "\n";
  out << "dehn-bound: " << cert.dehn_bound_at_n << "\n";
  out << "verified: " << (cert.verified ? "true" : "false") << "\n";
  if (cert.final_expr) {
    out << "terms: " << cert.final_expr->terms.size() << "\n";
    for (const ExprTerm& t : cert.final_expr->terms) {
      out << ctx.alphabet.format_word(t.conjugator) << '\t' << ctx.ph.relator_label(t.relator.id)
          << '\t' << (t.relator.sign >= 0 ? "+1" : "-1") << "\n";
    }
  } else {
    out << "terms: omitted\n";
  }
  out << "end\n";
}

namespace {

std::string expect_field(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw Error("unexpected end of certificate file");
  if (line.rfind(key + ": ", 0) != 0) throw Error("expected certificate field: " + key);
  return line.substr(key.size() + 2);
}

int resolve_relator(const Context& ctx, const std::string& label) {
  // kind:params:level with level 0; regenerate the word and look it up.
  size_t p1 = label.find(':');
  size_t p2 = label.rfind(':');
  if (p1 == std::string::npos || p2 == p1) throw Error("malformed relator label: " + label);
  RelKind kind = relator_kind_from_name(label.substr(0, p1));
  if (label.substr(p2 + 1) != "0") {
    throw Error("edge-presentation certificates must use level-0 relators");
  }
  std::string params = label.substr(p1 + 1, p2 - p1 - 1);
  std::vector<int> gens;
  size_t start = 0;
  while (start <= params.size() && !params.empty()) {
    size_t comma = params.find(',', start);
    std::string name = params.substr(start, comma == std::string::npos ? comma : comma - start);
    gens.push_back(ctx.alphabet.id(name));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  Word w(ctx.alphabet.uid());
  switch (kind) {
    case RelKind::edge_pair:
      w.push_back({gens.at(0), 1});
      w.push_back({ctx.edge_reverse(gens.at(0)), 1});
      break;
    case RelKind::triangle:
      for (int g : gens) w.push_back({g, 1});
      break;
    case RelKind::anti_triangle:
      for (int g : gens) w.push_back({g, -1});
      break;
    default:
      throw Error("relator kind not allowed in an edge-presentation certificate");
  }
  auto id = ctx.ph.find(w);
  if (!id) throw Error("certificate relator not present in the presentation: " + label);
  return *id;
}

}  // namespace

std::vector<ParsedCertificate> read_certificates(std::istream& in, const Context& ctx) {
  std::vector<ParsedCertificate> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("certificate: ", 0) != 0) throw Error("expected a certificate header");
    ParsedCertificate cert;
    cert.complex_hash = expect_field(in, "complex");
    cert.word = ctx.alphabet.parse_word(expect_field(in, "word"));
    cert.expression.target = cert.word;
    expect_field(in, "n");
    expect_field(in, "raag-area");
    expect_field(in, "raag-radius");
    expect_field(in, "ext-area");
    expect_field(in, "ext-radius");
    expect_field(in, "pushdown-area");
    expect_field(in, "penetration");
    cert.claimed_area = std::stoll(expect_field(in, "final-area"));
    expect_field(in, "final-radius");
    cert.claimed_rarea_bound = std::stoll(expect_field(in, "rarea-bound"));
    cert.claimed_dehn_bound = std::stoll(expect_field(in, "dehn-bound"));
    expect_field(in, "verified");
    std::string terms = expect_field(in, "terms");
    if (terms == "omitted") throw Error("certificate has no term list to re-check");
    long long count = std::stoll(terms);
    for (long long i = 0; i < count; ++i) {
      if (!std::getline(in, line)) throw Error("truncated certificate term list");
      size_t t1 = line.find('\t');
      size_t t2 = line.rfind('\t');
      if (t1 == std::string::npos || t2 == t1) throw Error("malformed certificate term");
      ExprTerm term;
      term.conjugator = ctx.alphabet.parse_word(line.substr(0, t1));
      term.relator.id = resolve_relator(ctx, line.substr(t1 + 1, t2 - t1 - 1));
      term.relator.sign = line.substr(t2 + 1) == "-1" ? -1 : 1;
      cert.expression.terms.push_back(std::move(term));
    }
    if (!std::getline(in, line) || line != "end") throw Error("missing certificate terminator");
    out.push_back(std::move(cert));
  }
  return out;
}

bool recheck_certificate(const Context& ctx, const ParsedCertificate& cert, std::string* why) {
  if (cert.complex_hash != ctx.hash) {
    if (why) *why = "complex hash mismatch";
    return false;
  }
  if (static_cast<long long>(cert.expression.terms.size()) != cert.claimed_area) {
    if (why) *why = "term count differs from the claimed area";
    return false;
  }
  if (cert.claimed_area > cert.claimed_dehn_bound) {
    if (why) *why = "claimed area exceeds the claimed bound";
    return false;
  }
  if (!verify_expression(ctx.ph, cert.word, cert.expression)) {
    if (why) *why = "expression does not fill the word";
    return false;
  }
  return true;
}

}  // namespace bb
