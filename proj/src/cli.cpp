#include "polya/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polya/bounds.hpp"
#include "polya/simplex_opt.hpp"

#ifndef POLYA_VERSION
#define POLYA_VERSION "0.0.0"
#endif

namespace polya::cli {

using Json = nlohmann::ordered_json;

std::string version() { return POLYA_VERSION; }

// ---------------------------------------------------------------------------
// Input documents

InputDocument parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("input must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "matrix" && key != "label") {
      throw InputError("unknown input field '" + key + "'");
    }
  }

  InputDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw InputError("field 'n' must be a positive integer");
  }
  doc.n = static_cast<std::size_t>(j["n"].get<long long>());

  if (!j.contains("matrix") || !j["matrix"].is_array()) {
    throw InputError("field 'matrix' must be an array of rows");
  }
  const Json& rows = j["matrix"];
  if (rows.size() != doc.n) {
    throw InputError("matrix has " + std::to_string(rows.size()) + " rows, expected n = " +
                     std::to_string(doc.n));
  }
  for (std::size_t i = 0; i < doc.n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != doc.n) {
      throw InputError("matrix is not square: row " + std::to_string(i + 1) + " must have " +
                       std::to_string(doc.n) + " entries");
    }
    std::vector<Rational> parsed;
    parsed.reserve(doc.n);
    for (std::size_t k = 0; k < doc.n; ++k) {
      if (!row[k].is_string()) {
        throw InputError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                         ") must be a rational string");
      }
      try {
        parsed.push_back(parse_rational(row[k].get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw InputError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                         "): " + e.what());
      }
    }
    doc.matrix.push_back(std::move(parsed));
  }
  for (std::size_t i = 0; i < doc.n; ++i) {
    for (std::size_t k = i + 1; k < doc.n; ++k) {
      if (doc.matrix[i][k] != doc.matrix[k][i]) {
        throw InputError(AsymmetricMatrixError(i, k).what());
      }
    }
  }

  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError("field 'label' must be a string");
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

namespace {

Json rational_json(const Rational& r) { return to_string(r); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

Json point_json(const SimplexPoint& t) {
  Json a = Json::array();
  for (const Rational& c : t.coords()) a.push_back(rational_json(c));
  return a;
}

Json input_json(const InputDocument& doc) {
  Json j;
  j["n"] = doc.n;
  Json rows = Json::array();
  for (const auto& row : doc.matrix) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(rational_json(v));
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  if (doc.label) j["label"] = *doc.label;
  return j;
}

}  // namespace

std::string serialize_input(const InputDocument& doc) { return input_json(doc).dump(); }

QuadraticForm to_quadratic_form(const InputDocument& doc) { return QuadraticForm(doc.matrix); }

// ---------------------------------------------------------------------------
// Commands

namespace {

enum class Format { Text, Json };

struct Options {
  std::string input_path;
  std::string inline_doc;
  std::string format = "text";
  std::optional<unsigned> cap;
  unsigned max_m = 6;
  std::string kappa;
  std::vector<std::string> lambdas;
};

Json envelope(const std::string& command, Json input, Json result) {
  Json j;
  j["tool"] = "polya";
  j["version"] = version();
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  return j;
}

std::string describe(const InputDocument& doc) {
  return doc.label ? *doc.label : "n = " + std::to_string(doc.n);
}

std::string integer_text(const std::optional<Integer>& z) { return z ? to_string(*z) : "n/a"; }

InputDocument load_document(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.input_path.empty()) {
    if (!opt.inline_doc.empty()) throw InputError("give either --input or an inline document, not both");
    std::ifstream file(opt.input_path);
    if (!file) throw InputError("cannot open input file '" + opt.input_path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else if (!opt.inline_doc.empty()) {
    text = opt.inline_doc;
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  InputDocument doc = parse_input(text);
  if (doc.n > kMaxVariables) {
    throw InputError("n = " + std::to_string(doc.n) + " exceeds the face-enumeration limit of " +
                     std::to_string(kMaxVariables) + " variables");
  }
  return doc;
}

RunResult not_positive(const std::string& command, const InputDocument& doc,
                       const OptimumResult& min, Format format) {
  RunResult r;
  r.exit_code = kNotPositive;
  r.err = "error: precondition failed: form is not positive on the standard simplex; f(t) = " +
          to_string(min.value) + " <= 0 at t = " + to_string(min.argpoint) + "\n";
  if (format == Format::Json) {
    Json res;
    res["positive_on_simplex"] = false;
    res["min_f"] = rational_json(min.value);
    res["witness"] = point_json(min.argpoint);
    r.out = envelope(command, input_json(doc), std::move(res)).dump(2) + "\n";
  }
  return r;
}

RunResult cmd_bounds(const Options& opt, Format format, std::istream& in) {
  const InputDocument doc = load_document(opt, in);
  const QuadraticForm q = to_quadratic_form(doc);
  const BoundReport rep = bound_report(q);
  if (!rep.positive()) {
    return not_positive("bounds", doc, {rep.min_f, rep.argmin, rep.candidates_examined}, format);
  }

  RunResult r;
  if (format == Format::Json) {
    Json res;
    res["positive_on_simplex"] = true;
    res["min_f"] = rational_json(rep.min_f);
    res["argmin"] = point_json(rep.argmin);
    res["candidates_examined"] = rep.candidates_examined;
    res["diag_max"] = rational_json(rep.diag_max);
    res["entry_max"] = rational_json(rep.entry_max);
    res["ratio_floor"] = integer_json(*rep.ratio_floor);
    res["bound_new"] = integer_json(*rep.bound_new);
    res["bound_new_usable"] = integer_json(*rep.usable_bound_new());
    res["bound_corollary"] = integer_json(*rep.bound_corollary);
    res["bound_klp"] = integer_json(*rep.bound_klp);
    r.out = envelope("bounds", input_json(doc), std::move(res)).dump(2) + "\n";
    return r;
  }

  std::ostringstream os;
  os << "form             : " << describe(doc) << "\n"
     << "min f on simplex : " << to_string(rep.min_f) << " at t = " << to_string(rep.argmin) << "\n"
     << "max diagonal     : " << to_string(rep.diag_max) << "\n"
     << "max entry        : " << to_string(rep.entry_max) << "\n"
     << "floor sup fhat/f : " << integer_text(rep.ratio_floor) << "\n"
     << "bound_new        : " << integer_text(rep.usable_bound_new()) << " (raw "
     << integer_text(rep.bound_new) << ")\n"
     << "bound_corollary  : " << integer_text(rep.bound_corollary) << "\n"
     << "bound_klp        : " << integer_text(rep.bound_klp) << "\n";
  r.out = os.str();
  return r;
}

RunResult cmd_exponent(const Options& opt, Format format, std::istream& in) {
  const InputDocument doc = load_document(opt, in);
  const QuadraticForm q = to_quadratic_form(doc);

  unsigned cap = 0;
  if (opt.cap) {
    cap = *opt.cap;
  } else if (is_positive_on_simplex(q)) {
    cap = default_exponent_cap(q);
  }
  const ExponentResult res = exact_polya_exponent(q, cap);

  RunResult r;
  r.exit_code = res.outcome == ExponentOutcome::CapExceeded ? kCapExceeded : kSuccess;
  if (format == Format::Json) {
    Json j;
    j["outcome"] = to_string(res.outcome);
    if (res.outcome == ExponentOutcome::Found) j["exponent"] = res.exponent;
    if (res.outcome != ExponentOutcome::CertifiedInfinite) j["cap"] = cap;
    j["min_f"] = rational_json(res.minimum.value);
    j["argmin"] = point_json(res.minimum.argpoint);
    r.out = envelope("exponent", input_json(doc), std::move(j)).dump(2) + "\n";
    return r;
  }

  std::ostringstream os;
  os << "form             : " << describe(doc) << "\n"
     << "min f on simplex : " << to_string(res.minimum.value) << " at t = "
     << to_string(res.minimum.argpoint) << "\n";
  switch (res.outcome) {
    case ExponentOutcome::Found:
      os << "polya exponent   : " << res.exponent << "\n";
      break;
    case ExponentOutcome::CapExceeded:
      os << "polya exponent   : > " << cap << " (cap exceeded)\n";
      break;
    case ExponentOutcome::CertifiedInfinite:
      os << "polya exponent   : infinite (f(t) <= 0 at t = " << to_string(res.minimum.argpoint)
         << ")\n";
      break;
  }
  r.out = os.str();
  return r;
}

RunResult cmd_identity(const Options& opt, Format format, std::istream& in) {
  const InputDocument doc = load_document(opt, in);
  const QuadraticForm q = to_quadratic_form(doc);

  RunResult r;
  bool all = true;
  Json checks = Json::array();
  std::ostringstream os;
  os << "form : " << describe(doc) << "\n";
  for (unsigned m = 0; m <= opt.max_m; ++m) {
    const bool ok = check_identity(q, m);
    all = all && ok;
    Json c;
    c["m"] = m;
    c["holds"] = ok;
    checks.push_back(std::move(c));
    os << "m = " << m << " : " << (ok ? "holds" : "FAILS") << "\n";
  }
  os << "identity " << (all ? "verified" : "violated") << " for m = 0.." << opt.max_m << "\n";
  r.exit_code = all ? kSuccess : kIdentityViolated;
  if (!all) r.err = "error: coefficient identity violated\n";

  if (format == Format::Json) {
    Json j;
    j["max_m"] = opt.max_m;
    j["checks"] = std::move(checks);
    j["all_hold"] = all;
    r.out = envelope("identity", input_json(doc), std::move(j)).dump(2) + "\n";
  } else {
    r.out = os.str();
  }
  return r;
}

RunResult cmd_fkappa(const Options& opt, Format format) {
  Rational kappa;
  std::vector<Rational> lambdas;
  try {
    kappa = parse_rational(opt.kappa);
    for (const auto& s : opt.lambdas) lambdas.push_back(parse_rational(s));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::vector<FKappaRow> rows;
  try {
    rows = fkappa_report(kappa, lambdas);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  RunResult r;
  if (format == Format::Json) {
    Json input;
    input["kappa"] = to_string(kappa);
    Json ls = Json::array();
    for (const auto& l : lambdas) ls.push_back(to_string(l));
    input["lambda"] = std::move(ls);
    Json out = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["lambda"] = rational_json(row.lambda);
      j["bound_new"] = integer_json(row.bound_new);
      j["bound_corollary"] = integer_json(row.bound_corollary);
      j["bound_klp"] = integer_json(row.bound_klp);
      j["sup_ratio_minus_one"] =
          row.sup_ratio_minus_one ? Json(rational_json(*row.sup_ratio_minus_one)) : Json(nullptr);
      j["closed_form_sup_ratio_minus_one"] = rational_json(row.closed_form_sup_minus_one);
      j["sup_matches"] = row.sup_matches();
      j["min_f"] = rational_json(row.min_f);
      j["closed_form_min_f"] = rational_json(row.closed_form_min_f);
      j["min_matches"] = row.min_matches();
      j["ratio"] = rational_json(row.ratio);
      j["predicted_ratio"] = rational_json(row.predicted_ratio);
      out.push_back(std::move(j));
    }
    Json res;
    res["rows"] = std::move(out);
    r.out = envelope("fkappa", std::move(input), std::move(res)).dump(2) + "\n";
    return r;
  }

  std::ostringstream os;
  os << "kappa = " << to_string(kappa) << "\n";
  for (const auto& row : rows) {
    os << "lambda = " << to_string(row.lambda) << "\n"
       << "  bound_new        : " << to_string(row.bound_new) << "\n"
       << "  bound_corollary  : " << to_string(row.bound_corollary) << "\n"
       << "  bound_klp        : " << to_string(row.bound_klp) << "\n"
       << "  sup fhat/f - 1   : "
       << (row.sup_ratio_minus_one ? to_string(*row.sup_ratio_minus_one) : std::string("n/a"))
       << " (closed form " << to_string(row.closed_form_sup_minus_one) << ", "
       << (row.sup_matches() ? "match" : "MISMATCH") << ")\n"
       << "  min f            : " << to_string(row.min_f) << " (closed form "
       << to_string(row.closed_form_min_f) << ", " << (row.min_matches() ? "match" : "MISMATCH")
       << ")\n"
       << "  new / klp        : " << to_string(row.ratio) << " (predicted (1+kappa)/(2 lambda) = "
       << to_string(row.predicted_ratio) << ")\n";
  }
  r.out = os.str();
  return r;
}

void add_document_options(CLI::App* sub, Options& opt) {
  sub->add_option("--input", opt.input_path, "Read the input document from a file");
  sub->add_option("document", opt.inline_doc, "Inline JSON input document");
}

void add_format_option(CLI::App* sub, Options& opt) {
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

RunResult run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Exact Polya-exponent bounds for quadratic forms on the standard simplex", "polya"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  Options opt;
  auto* bounds = app.add_subcommand("bounds", "Three upper bounds on the Polya exponent");
  add_document_options(bounds, opt);
  add_format_option(bounds, opt);

  auto* exponent = app.add_subcommand("exponent", "Exact Polya exponent by expansion");
  add_document_options(exponent, opt);
  add_format_option(exponent, opt);
  exponent->add_option("--cap", opt.cap, "Largest exponent to try (default 10 * (bound_new + 2))");

  auto* identity = app.add_subcommand("identity", "Verify the coefficient identity for m = 0..max-m");
  add_document_options(identity, opt);
  add_format_option(identity, opt);
  identity->add_option("--max-m", opt.max_m, "Largest m to check")->capture_default_str();

  auto* fkappa = app.add_subcommand("fkappa", "Bounds for lambda^2 x1^2 - 2 kappa lambda x1 x2 + x2^2");
  add_format_option(fkappa, opt);
  fkappa->add_option("--kappa", opt.kappa, "kappa in [0, 1)")->required();
  fkappa->add_option("--lambda", opt.lambdas, "lambda > 1 (repeatable)")->required();

  RunResult r;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    r.out = out.str();
    r.err = err.str();
    r.exit_code = code == 0 ? kSuccess : kInputError;
    return r;
  }

  const Format format = opt.format == "json" ? Format::Json : Format::Text;
  try {
    if (bounds->parsed()) return cmd_bounds(opt, format, in);
    if (exponent->parsed()) return cmd_exponent(opt, format, in);
    if (identity->parsed()) return cmd_identity(opt, format, in);
    return cmd_fkappa(opt, format);
  } catch (const InputError& e) {
    r.exit_code = kInputError;
    r.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    r.exit_code = kInputError;
    r.err = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

}  // namespace polya::cli
