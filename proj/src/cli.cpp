#include <qplane/center.hpp>
#include <qplane/classify.hpp>
#include <qplane/cli.hpp>
#include <qplane/isotropy.hpp>
#include <qplane/parser.hpp>

#include <json.hpp>

#include <istream>
#include <iterator>
#include <sstream>

namespace qplane {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return "E_PARSE";
    case ErrorCode::Incompatible:
      return "E_INCOMPATIBLE";
    case ErrorCode::Mode:
      return "E_MODE";
    case ErrorCode::Kind:
      return "E_KIND";
    case ErrorCode::DivByZero:
      return "E_DIVZERO";
    case ErrorCode::Internal:
      return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

}  // namespace qplane

namespace qplane::cli {

using json = nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

struct Context {
  const Request& req;
  std::istream& in;
  const Field& field;

  std::string text(const std::string& s) const {
    if (s != "-") return s;
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!all.empty() && std::isspace(static_cast<unsigned char>(all.back()))) all.pop_back();
    return all;
  }

  QElem expr(std::size_t idx) const {
    if (idx >= req.exprs.size()) throw UsageError(req.command + ": missing expression argument");
    return parse_expr(text(req.exprs[idx]), field);
  }

  Automorphism aut(const std::optional<std::string>& s, const char* name) const {
    if (!s) throw UsageError(req.command + ": missing --" + std::string(name));
    return parse_automorphism(text(*s), field);
  }

  Automorphism sigma() const { return aut(req.sigma, "sigma"); }
  Automorphism rho() const { return aut(req.rho, "rho"); }

  SigmaDerivation derivation() const {
    const Automorphism s = sigma();
    if (req.w) {
      if (req.dx || req.dy) throw UsageError("give either --w or --dx/--dy");
      return inner_from(parse_expr(text(*req.w), field), s);
    }
    const QElem dx = req.dx ? parse_expr(text(*req.dx), field) : QElem(field);
    const QElem dy = req.dy ? parse_expr(text(*req.dy), field) : QElem(field);
    return SigmaDerivation::validate(s, dx, dy);
  }
};

json scalars(const std::vector<FieldElem>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

json describe_system(const BinomialSystem& s, const char* u, const char* v) {
  json out;
  out["equations"] = s.describe(u, v);
  out["solvable"] = s.solvable();
  return out;
}

const char* flip_part_name(FlipPart p) {
  switch (p) {
    case FlipPart::NotApplicable:
      return "not_applicable";
    case FlipPart::Empty:
      return "empty";
    case FlipPart::Conditions:
      return "conditions";
  }
  return "not_applicable";
}

json isotropy_json(const IsotropyDescriptor& d) {
  json out;
  json lat = json::array();
  for (auto [u, v] : d.lattice.vectors()) lat.push_back({u, v});
  out["lattice"] = lat;
  out["invariant_factors"] = {d.structure.d1, d.structure.d2};
  out["is_finite"] = d.structure.is_finite;
  out["order"] = d.structure.order ? json(*d.structure.order) : json(nullptr);
  out["flip_part"] = flip_part_name(d.flip_part);
  const char* u = d.sigma_is_flip ? "mu" : "u";
  if (d.flip_conditions) out["flip_conditions"] = describe_system(*d.flip_conditions, u, "v");
  if (d.exact_flip_conditions) out["exact_flip_conditions"] = describe_system(*d.exact_flip_conditions, u, "v");
  if (d.sigma_is_flip) {
    out["diagonal"] = {{"exponents", d.diagonal_exponents},
                       {"order", d.diagonal_order == 0 ? json(nullptr) : json(d.diagonal_order)}};
  }
  return out;
}

json decomposition_json(const SigmaDerivation& d) {
  json out;
  if (d.sigma().is_toric()) {
    const ToricDecomposition dec = decompose_toric(d);
    out["kind"] = "toric";
    out["w"] = dec.w.to_string();
    out["a_poly"] = scalars(dec.a_poly);
    out["b_poly"] = scalars(dec.b_poly);
    out["mn"] = dec.mn ? json::array({dec.mn->first, dec.mn->second}) : json(nullptr);
    out["lambda1"] = dec.lambda1.to_string();
    out["lambda2"] = dec.lambda2.to_string();
  } else {
    const FlipDecomposition dec = decompose_flip(d);
    out["kind"] = "flip";
    out["w"] = dec.w.to_string();
    json slices = json::array();
    for (const auto& s : dec.slices) slices.push_back({{"k", s.k}, {"b0", s.b0.to_string()}});
    out["slices"] = slices;
  }
  return out;
}

json derivation_json(const SigmaDerivation& d) {
  return {{"sigma", d.sigma().to_string()}, {"dx", d.dx().to_string()}, {"dy", d.dy().to_string()}};
}

json execute(const Context& ctx) {
  const std::string& cmd = ctx.req.command;
  if (cmd == "normalize") return {{"result", ctx.expr(0).to_string()}};
  if (cmd == "mul") return {{"result", (ctx.expr(0) * ctx.expr(1)).to_string()}};
  if (cmd == "validate") {
    json out = derivation_json(ctx.derivation());
    out["valid"] = true;
    return out;
  }
  if (cmd == "apply") return {{"result", apply(ctx.derivation(), ctx.expr(0)).to_string()}};
  if (cmd == "inner") {
    const QElem w = ctx.req.w ? parse_expr(ctx.text(*ctx.req.w), ctx.field) : ctx.expr(0);
    return derivation_json(inner_from(w, ctx.sigma()));
  }
  if (cmd == "is_inner") {
    const auto w = is_inner(ctx.derivation());
    return {{"inner", w.has_value()}, {"witness", w ? json(w->to_string()) : json(nullptr)}};
  }
  if (cmd == "decompose") return decomposition_json(ctx.derivation());
  if (cmd == "isotropy") return isotropy_json(isotropy(ctx.derivation()));
  if (cmd == "member") return {{"member", member(ctx.rho(), ctx.derivation())}};
  if (cmd == "centralizer") return {{"commutes", centralizer_contains(ctx.sigma(), ctx.rho())}};
  if (cmd == "twisted_center") {
    const TwistedCenterDesc z = twisted_center(ctx.sigma());
    const char* kind = z.kind == TwistedCenterDesc::Kind::Zero                   ? "zero"
                       : z.kind == TwistedCenterDesc::Kind::FullPolynomialCenter ? "full_polynomial_center"
                                                                                 : "center_times_monomial";
    json out{{"kind", kind}, {"description", z.to_string()}};
    out["monomial"] = z.kind == TwistedCenterDesc::Kind::CenterTimesMonomial
                          ? json::array({z.monomial.i, z.monomial.j})
                          : json(nullptr);
    return out;
  }
  throw UsageError("unknown command '" + cmd + "'");
}

void emit_text(std::ostream& os, const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) emit_text(os, *it, key);
    else if (it->is_string()) os << key << ": " << it->get<std::string>() << "\n";
    else os << key << ": " << it->dump() << "\n";
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"normalize", "mul",      "validate", "apply",
                                                 "inner",     "is_inner", "decompose", "isotropy",
                                                 "member",    "centralizer", "twisted_center"};
  return names;
}

Response run(const Request& req, std::istream& in) {
  Response r;
  json doc;
  try {
    if (req.format != "json" && req.format != "text") throw UsageError("unknown format '" + req.format + "'");
    const Field& field = parse_field(req.field, req.adjoin);
    doc = execute(Context{req, in, field});
  } catch (const Error& e) {
    json err{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (const auto* inc = dynamic_cast<const IncompatibleImages*>(&e)) err["residual"] = inc->residual().to_string();
    doc = {{"error", err}};
    r.exit_code = e.code() == ErrorCode::Internal ? 3 : 2;
    r.err = std::string(error_code_name(e.code())) + ": " + e.what() + "\n";
  }
  if (req.format == "text") {
    std::ostringstream os;
    emit_text(os, doc);
    r.out = os.str();
  } else {
    r.out = doc.dump() + "\n";
  }
  return r;
}

}  // namespace qplane::cli
