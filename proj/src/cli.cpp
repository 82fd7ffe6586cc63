#include "cellkit/cli.hpp"

#include "cellkit/errors.hpp"
#include "cellkit/linalg.hpp"
#include "cellkit/qh.hpp"
#include "cellkit/schur.hpp"
#include "cellkit/spec_file.hpp"
#include "cellkit/temperley_lieb.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace cellkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string algebra;
  std::string ring;
  std::string lambda;
  std::string output;
  bool strict = false;
  bool as_json = false;
  std::int64_t limit = kDefaultSchurLimit;
};

struct Target {
  std::string family;  // schur, tl or file
  int n = 0, d = 0;
  long delta = 0;
  Algebra algebra;     // cellular basis when a datum is known
  std::optional<CellDatum> datum;
  std::string datum_note;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::ParseError, "bad " + what + " '" + s + "'");
  return static_cast<int>(v);
}

std::pair<std::string, std::string> split_two(const std::string& s, const std::string& what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, what + " needs two comma separated values");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

Target load_target(const Options& o) {
  Target t;
  const std::string& spec = o.algebra;
  if (spec.starts_with("schur:")) {
    auto [a, b] = split_two(spec.substr(6), "schur:n,d");
    t.family = "schur";
    t.n = parse_int(a, "n");
    t.d = parse_int(b, "d");
    SchurData sd = schur_algebra(RingSpec::integers(), t.n, t.d, o.limit);
    try {
      CellularPresentation p = codeterminant_cell_datum(sd);
      t.algebra = std::move(p.algebra);
      t.datum = std::move(p.datum);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CandidateNotBasis && e.code() != ErrorCode::CandidateNotCellular) throw;
      t.algebra = sd.algebra;
      t.datum_note = std::string("cell datum unavailable (") + e.what() +
                     "); heredity-chain and dimension-formula results only";
    }
  } else if (spec.starts_with("tl:")) {
    auto [a, b] = split_two(spec.substr(3), "tl:n,delta");
    t.family = "tl";
    t.n = parse_int(a, "n");
    t.delta = parse_int(b, "delta");
    TLData tl = tl_algebra(RingSpec::integers(), t.n, t.delta);
    t.algebra = std::move(tl.algebra);
    t.datum = std::move(tl.datum);
  } else {
    t.family = "file";
    SpecFile f = load_spec_file(spec);
    t.algebra = std::move(f.algebra);
    t.datum = std::move(f.datum);
    if (!t.datum) t.datum_note = "the spec file carries no cell datum";
  }
  return t;
}

const CellDatum& need_datum(const Target& t) {
  if (!t.datum) throw Error(ErrorCode::InvalidArgument, t.datum_note);
  return *t.datum;
}

RingSpec ring_or(const Options& o, const RingSpec& fallback) {
  return o.ring.empty() ? fallback : RingSpec::parse(o.ring);
}

RingSpec need_field(const Options& o) {
  if (o.ring.empty()) throw Error(ErrorCode::WrongRing, "this command needs --ring naming a field");
  RingSpec r = RingSpec::parse(o.ring);
  if (!r.is_field()) throw Error(ErrorCode::WrongRing, r.to_string() + " is not a field");
  return r;
}

std::vector<std::size_t> selected_lambdas(const Options& o, const CellDatum& d) {
  if (o.lambda.empty()) {
    std::vector<std::size_t> all(d.size());
    for (std::size_t l = 0; l < d.size(); ++l) all[l] = l;
    return all;
  }
  return {d.find_label(o.lambda)};
}

json scalar_json(const Scalar& s) {
  if (s.denominator() == 1 && s.numerator().fits_slong_p()) return json(s.numerator().get_si());
  return json(s.to_string());
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json integers_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  return a;
}

std::string integer_set(const std::vector<Integer>& xs) {
  if (xs.empty()) return "none";
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + xs[k].get_str();
  return s + "}";
}

// Table with a label column; column widths fitted to the contents.
void print_table(std::ostream& out, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels, const Matrix& m) {
  std::size_t w0 = 0;
  for (const auto& r : row_labels) w0 = std::max(w0, r.size());
  std::vector<std::size_t> w(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    w[j] = j < col_labels.size() ? col_labels[j].size() : 0;
    for (std::size_t i = 0; i < m.rows(); ++i) w[j] = std::max(w[j], m(i, j).to_string().size());
  }
  if (!col_labels.empty()) {
    out << std::string(w0, ' ');
    for (std::size_t j = 0; j < m.cols(); ++j) out << "  " << std::setw(static_cast<int>(w[j])) << col_labels[j];
    out << "\n";
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << std::left << std::setw(static_cast<int>(w0)) << (i < row_labels.size() ? row_labels[i] : "")
        << std::right;
    for (std::size_t j = 0; j < m.cols(); ++j) out << "  " << std::setw(static_cast<int>(w[j])) << m(i, j).to_string();
    out << "\n";
  }
}

std::vector<std::string> labels_of(const CellDatum& d, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto l : idx) out.push_back(d.labels[l]);
  return out;
}

Algebra over(const Target& t, const RingSpec& ring) {
  return ring == t.algebra.ring() ? t.algebra : base_change(t.algebra, ring);
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  const Algebra a = over(t, ring_or(o, t.algebra.ring()));
  AlgebraReport ar = validate_algebra(a);
  std::optional<CellReport> cr;
  if (t.datum) cr = validate_cell_datum(a, *t.datum);
  const bool ok = ar.ok() && (!cr || cr->ok());
  if (o.as_json) {
    json doc;
    doc["ring"] = a.ring().to_string();
    doc["dim"] = a.dim();
    json av = json::array();
    for (const auto& v : ar.violations) av.push_back(v.message);
    doc["algebra_ok"] = ar.ok();
    doc["algebra_violations"] = av;
    if (cr) {
      json cv = json::array();
      for (const auto& v : cr->violations) cv.push_back({{"axiom", v.axiom}, {"message", v.message}});
      doc["datum_ok"] = cr->ok();
      doc["datum_violations"] = cv;
    } else {
      doc["datum_ok"] = nullptr;
      doc["note"] = t.datum_note;
    }
    doc["ok"] = ok;
    out << doc.dump(2) << "\n";
  } else {
    out << "algebra: dim " << a.dim() << " over " << a.ring() << "\n";
    if (ar.ok()) {
      out << "algebra axioms: ok\n";
    } else {
      out << "algebra axioms: " << ar.total << " violation(s)\n";
      for (std::size_t k = 0; k < std::min<std::size_t>(ar.violations.size(), 10); ++k) {
        out << "  " << ar.violations[k].message << "\n";
      }
    }
    if (cr) {
      if (cr->ok()) {
        out << "cell datum: ok\n";
      } else {
        out << "cell datum: " << cr->total << " violation(s)\n";
        for (std::size_t k = 0; k < std::min<std::size_t>(cr->violations.size(), 10); ++k) {
          out << "  [" << cr->violations[k].axiom << "] " << cr->violations[k].message << "\n";
        }
      }
    } else {
      out << "cell datum: " << t.datum_note << "\n";
    }
  }
  return ok ? kPositive : kNegative;
}

int cmd_info(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  json doc;
  doc["family"] = t.family;
  if (t.family == "schur") {
    doc["n"] = t.n;
    doc["d"] = t.d;
  } else if (t.family == "tl") {
    doc["n"] = t.n;
    doc["delta"] = t.delta;
  }
  doc["ring"] = t.algebra.ring().to_string();
  doc["dim"] = t.algebra.dim();
  if (t.datum) {
    json cells = json::array();
    for (std::size_t l = 0; l < t.datum->size(); ++l) {
      cells.push_back({{"label", t.datum->labels[l]}, {"cell_module_rank", t.datum->tableaux[l].size()}});
    }
    doc["cells"] = cells;
    doc["order"] = kOrderConvention;
  } else {
    doc["note"] = t.datum_note;
  }
  if (o.as_json) {
    out << doc.dump(2) << "\n";
    return kPositive;
  }
  out << "family: " << t.family;
  if (t.family == "schur") out << " n=" << t.n << " d=" << t.d;
  if (t.family == "tl") out << " n=" << t.n << " delta=" << t.delta;
  out << "\nring: " << t.algebra.ring() << "\ndim: " << t.algebra.dim() << "\n";
  if (t.datum) {
    out << "cells (" << kOrderConvention << "):\n";
    for (std::size_t l = 0; l < t.datum->size(); ++l) {
      out << "  " << t.datum->labels[l] << "  |M| = " << t.datum->tableaux[l].size() << "\n";
    }
  } else {
    out << t.datum_note << "\n";
  }
  return kPositive;
}

int cmd_gram(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  const CellDatum& d = need_datum(t);
  const Algebra a = over(t, ring_or(o, t.algebra.ring()));
  json doc = json::array();
  for (std::size_t l : selected_lambdas(o, d)) {
    GramData g = gram_matrix(a, d, l, o.strict);
    std::optional<std::size_t> r;
    if (a.ring().is_field()) r = rank(g.gram);
    if (o.as_json) {
      json e = {{"lambda", d.labels[l]}, {"gram", matrix_json(g.gram)}, {"symmetric", g.symmetric}};
      if (r) e["rank"] = *r;
      doc.push_back(std::move(e));
      continue;
    }
    out << "G_" << d.labels[l] << " over " << a.ring() << " (" << g.gram.rows() << "x" << g.gram.cols();
    if (r) out << ", rank " << *r;
    out << (g.symmetric ? "" : ", not symmetric") << "):\n";
    print_table(out, d.tableaux[l], {}, g.gram);
  }
  if (o.as_json) out << doc.dump(2) << "\n";
  return kPositive;
}

int cmd_simples(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  FieldAnalysis fa(t.algebra, need_datum(t), need_field(o));
  const auto& simples = fa.simples();
  const CellDatum& d = fa.datum();
  if (o.as_json) {
    json doc = json::array();
    for (const auto& s : simples) doc.push_back({{"lambda", d.labels[s.lambda]}, {"dim", s.module.rank}});
    out << doc.dump(2) << "\n";
  } else {
    out << simples.size() << " simple module(s) over " << fa.field() << ":\n";
    for (const auto& s : simples) out << "  L(" << d.labels[s.lambda] << ")  dim " << s.module.rank << "\n";
  }
  return kPositive;
}

int cmd_decomp(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  FieldAnalysis fa(t.algebra, need_datum(t), need_field(o));
  const Decomposition& dec = fa.decomposition();
  const CellDatum& d = fa.datum();
  if (o.as_json) {
    json doc = {{"rows", d.labels},
                {"columns", labels_of(d, dec.columns)},
                {"matrix", matrix_json(dec.matrix)},
                {"order", kOrderConvention}};
    out << doc.dump(2) << "\n";
  } else {
    out << "decomposition matrix over " << fa.field() << " (rows: cell modules, columns: simples; "
        << kOrderConvention << ")\n";
    print_table(out, d.labels, labels_of(d, dec.columns), dec.matrix);
  }
  return kPositive;
}

int cmd_cartan(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  FieldAnalysis fa(t.algebra, need_datum(t), need_field(o));
  const Cartan& c = fa.cartan();
  const auto names = labels_of(fa.datum(), c.labels);
  if (o.as_json) {
    json doc = {{"labels", names},
                {"matrix", matrix_json(c.matrix)},
                {"det", scalar_json(c.determinant)},
                {"order", kOrderConvention}};
    out << doc.dump(2) << "\n";
  } else {
    out << "Cartan matrix over " << fa.field() << " (" << kOrderConvention << ")\n";
    print_table(out, names, names, c.matrix);
    out << "det C = " << c.determinant << "\n";
  }
  return kPositive;
}

json report_json(const QHReport& r) {
  json doc;
  doc["ring"] = r.ring.to_string();
  doc["labels"] = r.labels;
  if (!r.gram_nonzero.empty()) doc["gram_nonzero"] = r.gram_nonzero;
  if (!r.layer_nonzero.empty()) doc["layer_nonzero"] = r.layer_nonzero;
  if (!r.gram_content.empty()) doc["gram_content"] = integers_json(r.gram_content);
  if (r.ring.is_field()) doc["simples"] = r.n_simples;
  doc["chain_length"] = r.chain_length;
  if (r.cartan_det) doc["cartan_det"] = scalar_json(*r.cartan_det);
  if (!r.ring.is_field()) doc["bad_primes"] = integers_json(r.bad_primes);
  json per = json::array();
  for (const auto& p : r.per_prime) per.push_back(report_json(p));
  if (!per.empty()) doc["per_prime"] = per;
  doc["notes"] = r.notes;
  doc["quasi_hereditary"] = r.verdict;
  return doc;
}

void print_report(std::ostream& out, const QHReport& r, const std::string& indent = "") {
  out << indent << "ring: " << r.ring << "\n";
  for (std::size_t l = 0; l < r.labels.size(); ++l) {
    out << indent << "  " << r.labels[l] << ":";
    if (l < r.gram_nonzero.size()) out << " phi " << (r.gram_nonzero[l] ? "nonzero" : "vanishes");
    if (l < r.layer_nonzero.size()) out << ", J^2 layer " << (r.layer_nonzero[l] ? "nonzero" : "zero");
    if (l < r.gram_content.size()) out << " gram content " << r.gram_content[l];
    out << "\n";
  }
  if (r.ring.is_field()) out << indent << "simples: " << r.n_simples << " of " << r.labels.size() << "\n";
  if (r.cartan_det) out << indent << "det C = " << *r.cartan_det << "\n";
  if (!r.ring.is_field()) out << indent << "bad primes: " << integer_set(r.bad_primes) << "\n";
  for (const auto& p : r.per_prime) print_report(out, p, indent + "  ");
  for (const auto& n : r.notes) out << indent << "note: " << n << "\n";
  out << indent << "verdict: " << (r.verdict ? "quasi-hereditary" : "not quasi-hereditary") << "\n";
}

int cmd_qh_check(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  QHReport r = qh_check_ring(t.algebra, need_datum(t), ring_or(o, t.algebra.ring()));
  if (o.as_json) {
    out << report_json(r).dump(2) << "\n";
  } else {
    print_report(out, r);
  }
  return r.verdict ? kPositive : kNegative;
}

int cmd_bad_primes(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  if (!o.ring.empty() && RingSpec::parse(o.ring) != RingSpec::integers()) {
    throw Error(ErrorCode::WrongRing, "bad primes are computed over Z only");
  }
  if (t.algebra.ring() != RingSpec::integers()) throw Error(ErrorCode::WrongRing, "the algebra is not defined over Z");
  QHReport r = bad_primes_over_Z(t.algebra, need_datum(t));
  if (o.as_json) {
    json doc = report_json(r);
    doc["fatal"] = r.fatal;
    out << doc.dump(2) << "\n";
  } else {
    out << "bad primes: " << integer_set(r.bad_primes) << "\n";
    if (r.fatal) out << "some Gram matrix vanishes over Z: not quasi-hereditary over any field of any characteristic\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
  }
  return r.bad_primes.empty() && !r.fatal ? kPositive : kNegative;
}

std::string bound_text(const std::optional<std::int64_t>& b) { return b ? std::to_string(*b) : "infinity"; }

int cmd_gldim(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  const RingSpec ring = ring_or(o, t.algebra.ring());
  json doc;
  doc["ring"] = ring.to_string();
  int code = kPositive;
  std::ostringstream text;
  bool formula = false;
  if (t.family == "schur") {
    try {
      DimensionReport r = gldim_schur(ring, t.n, t.d);
      formula = true;
      if (r.gldim_exact) {
        doc["gldim"] = *r.gldim_exact;
        text << "gldim = " << *r.gldim_exact << "\n";
      } else {
        doc["gldim"] = nullptr;
        text << "gldim: not finite over " << ring << "\n";
        code = kNegative;
      }
      doc["upper_bound"] = r.gldim_upper_bound ? json(*r.gldim_upper_bound) : json("infinity");
      text << "heredity-chain bound: " << bound_text(r.gldim_upper_bound) << "\n";
      json per;
      for (const auto& [field, v] : r.per_residue_field) {
        per[field] = v;
        text << "  over " << field << ": " << v << "\n";
      }
      doc["per_residue_field"] = per;
      doc["notes"] = r.notes;
      for (const auto& n : r.notes) text << "note: " << n << "\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisViolated) throw;
      doc["note"] = e.what();
      text << "note: " << e.what() << "\n";
    }
  }
  if (!formula) {
    QHReport r = qh_check_ring(t.algebra, need_datum(t), ring);
    const auto bound = r.verdict ? gldim_bound(r.chain_length, ring) : std::nullopt;
    doc["quasi_hereditary"] = r.verdict;
    doc["upper_bound"] = bound ? json(*bound) : json("infinity");
    if (bound) {
      text << "gldim <= " << *bound << " (heredity chain of length " << r.chain_length << ")\n";
    } else if (!r.verdict && ring.is_field()) {
      text << "gldim = infinity (not quasi-hereditary over " << ring << ")\n";
    } else {
      text << "no finite bound over " << ring << "\n";
    }
    code = bound ? kPositive : kNegative;
  }
  if (o.as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return code;
}

int cmd_findim(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  if (t.family != "schur") {
    throw Error(ErrorCode::InvalidArgument, "findim closed forms exist for schur:n,d families only");
  }
  const RingSpec ring = ring_or(o, t.algebra.ring());
  json doc;
  doc["ring"] = ring.to_string();
  std::ostringstream text;
  if (ring.kind() == RingKind::IntegersMod && !ring.is_field()) {
    const std::int64_t v = findim_schur_mod_m(t.n, t.d, ring.modulus());
    doc["findim"] = v;
    text << "findim = " << v << "\n";
  } else {
    DimensionReport r = gldim_schur(ring, t.n, t.d);
    doc["findim_lower"] = r.findim_lower;
    doc["findim_upper"] = r.findim_upper;
    if (r.findim_lower == r.findim_upper) {
      doc["findim"] = r.findim_lower;
      text << "findim = " << r.findim_lower << "\n";
    } else {
      text << "findim between " << r.findim_lower << " and " << r.findim_upper << "\n";
    }
  }
  if (o.as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kPositive;
}

int cmd_export(const Options& o, std::ostream& out) {
  Target t = load_target(o);
  const std::string text = export_spec(t.algebra, t.datum ? &*t.datum : nullptr);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + o.output + "'");
    f << text;
  }
  return kPositive;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cellular-algebra analysis"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, std::ostream&);
  struct Command {
    const char* name;
    const char* help;
    Handler handler;
  };
  const Command commands[] = {
      {"validate", "check the algebra axioms and the cell datum", cmd_validate},
      {"info", "dimension, cell labels and cell module ranks", cmd_info},
      {"gram", "Gram matrices of the cell forms", cmd_gram},
      {"simples", "simple modules over a field", cmd_simples},
      {"decomp", "decomposition matrix over a field", cmd_decomp},
      {"cartan", "Cartan matrix and its determinant over a field", cmd_cartan},
      {"qh-check", "decide quasi-heredity over a field, Z or Z/m", cmd_qh_check},
      {"bad-primes", "primes p with the reduction mod p not quasi-hereditary", cmd_bad_primes},
      {"gldim", "global dimension", cmd_gldim},
      {"findim", "finitistic dimension (Schur families)", cmd_findim},
      {"export", "write the canonical spec file", cmd_export},
  };
  Handler chosen = nullptr;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--algebra", o.algebra, "schur:n,d | tl:n,delta | path to a spec file")->required();
    sub->add_option("--ring", o.ring, "Z, Q, F2, Fp:p or Zm:m");
    sub->add_option("--lambda", o.lambda, "restrict to one cell label");
    sub->add_flag("--strict", o.strict, "check every witness pair of the Gram form");
    sub->add_flag("--json", o.as_json, "machine-readable output");
    sub->add_option("--limit", o.limit, "size limit n^d for Schur algebras");
    sub->add_option("--output", o.output, "file to write (export)");
    const Handler h = c.handler;
    sub->callback([&chosen, h] { chosen = h; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kUsage;
  }

  try {
    return chosen(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_internal() ? kInternal : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cellkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cellkit::cli
