#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "equiareal/cli/commands.hpp"
#include "equiareal/errors.hpp"

namespace equiareal::cli {

namespace {

std::string leaf(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, leaf(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

const std::vector<std::string> kScanColumns{"t", "family", "A4", "valid_triangle", "regulator", "independent", "notes"};

Rational parse_t(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw InputError("--t expects a rational 'a/b' or 'a', got '" + s + "'");
  }
}

}  // namespace

std::string render(const Report& r, Format format) {
  if (format == Format::Json) return r.body.dump(2) + "\n";
  if (format == Format::Csv && r.body.contains("rows")) {
    std::string s;
    for (std::size_t i = 0; i < kScanColumns.size(); ++i) s += (i ? "," : "") + kScanColumns[i];
    s += "\n";
    for (const auto& row : r.body["rows"]) {
      for (std::size_t i = 0; i < kScanColumns.size(); ++i) {
        s += (i ? "," : "") + csv_field(leaf(row[kScanColumns[i]]));
      }
      s += "\n";
    }
    return s;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(r.body, "", kv);
  std::string s = format == Format::Csv ? "key,value\n" : "";
  for (const auto& [k, v] : kv) {
    s += format == Format::Csv ? csv_field(k) + "," + csv_field(v) + "\n" : k + ": " + v + "\n";
  }
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equiareal triangles with square sides, the octic phi(x) = phi(y) and the rank >= 5 family E_t"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string precision_text, normalization = "unhalved", format = "json", out_path;
  unsigned jobs = 1;
  app.add_option("--precision", precision_text, "Working precision in bits (>= 128; default from EQUIAREAL_PRECISION or 192)");
  app.add_option("--normalization", normalization, "Height convention: unhalved or halved");
  app.add_option("--format", format, "Output format: json, csv or text");
  app.add_option("--out", out_path, "Write the report to this file");
  app.add_option("--jobs", jobs, "Parallel rows for scan")->check(CLI::PositiveNumber);

  std::string suite = "all", family = "et", t_text, grid;
  bool table1 = false;

  auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
  verify->add_option("suite", suite, "octic, elliptic, heights or all");
  auto* triangles = app.add_subcommand("triangles", "Equiareal triangle pair for a solution family at t");
  triangles->add_option("--family", family, "sol1 or sol2")->required();
  triangles->add_option("--t", t_text, "Parameter a/b")->required();
  auto* curve = app.add_subcommand("curve", "Curve coefficient, torsion and the five points");
  curve->add_option("--family", family, "sol1, sol2 or et");
  curve->add_option("--t", t_text, "Parameter a/b")->required();
  auto* reg = app.add_subcommand("regulator", "Canonical heights and regulator of the five points");
  reg->add_option("--family", family, "sol1, sol2 or et");
  reg->add_option("--t", t_text, "Parameter a/b")->required();
  auto* gens = app.add_subcommand("generators", "Halving generators, relations and basis analysis on E_t");
  gens->add_option("--t", t_text, "Parameter a/b (default 2)");
  auto* gt = app.add_subcommand("gtcheck", "Square-free divisor criterion for injective specialization");
  gt->add_option("--t", t_text, "Parameter a/b")->required();
  auto* scan = app.add_subcommand("scan", "Regulator scan over a grid of t");
  scan->add_option("--family", family, "sol1, sol2 or et");
  scan->add_option("--grid", grid, "Comma list a,b,c or range lo:hi:step");
  scan->add_flag("--table1", table1, "Use the eleven known rank 8 and 9 parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  try {
    RunConfig cfg;
    cfg.precision = precision_text.empty() ? default_precision() : static_cast<unsigned>(std::stoul(precision_text));
    if (cfg.precision < heights::kMinHeightPrecisionBits) {
      throw InputError("precision must be at least " + std::to_string(heights::kMinHeightPrecisionBits) + " bits");
    }
    cfg.normalization = heights::parse_normalization(normalization);
    cfg.format = parse_format(format);
    cfg.out = out_path;
    cfg.jobs = jobs;

    if (*verify) {
      report = cmd_verify(suite, cfg);
    } else if (*triangles) {
      report = cmd_triangles(parse_curve_family(family), parse_t(t_text), cfg);
    } else if (*curve) {
      report = cmd_curve(parse_curve_family(family), parse_t(t_text), cfg);
    } else if (*reg) {
      report = cmd_regulator(parse_curve_family(family), parse_t(t_text), cfg);
    } else if (*gens) {
      report = cmd_generators(t_text.empty() ? Rational(2) : parse_t(t_text), cfg);
    } else if (*gt) {
      report = cmd_gtcheck(parse_t(t_text), cfg);
    } else if (*scan) {
      std::vector<Rational> values = table1 ? high_rank_parameters() : parse_grid(grid);
      if (table1 && !grid.empty()) {
        for (const auto& v : parse_grid(grid)) values.push_back(v);
      }
      report = cmd_scan(parse_curve_family(family), values, cfg);
    }
    const std::string text = render(report, cfg.format);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw InputError("cannot write " + cfg.out);
      f << text;
    }
    if (report.exit_code == 1 && report.body.contains("first_failure")) {
      err << "verification failed: " << report.body["first_failure"].get<std::string>() << "\n";
    }
    return report.exit_code;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace equiareal::cli
