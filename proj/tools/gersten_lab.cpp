#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gersten/category_c.hpp"
#include "gersten/error.hpp"
#include "gersten/json_io.hpp"
#include "gersten/k0.hpp"
#include "gersten/ring.hpp"
#include "gersten/verify.hpp"

namespace {

using gersten::Error;
using gersten::ErrorCode;

long elapsed_ms(std::chrono::steady_clock::time_point start) {
  auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

void emit(const gersten::io::Json& j) { std::cout << j.dump(2) << "\n"; }

gersten::io::Json error_json(const Error& e) {
  return gersten::io::Json{
      {"error", {{"code", gersten::error_code_name(e.code())}, {"what", e.what()}}}};
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    if (std::cin.bad()) gersten::fail(ErrorCode::ParseError, "failed to read standard input");
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) gersten::fail(ErrorCode::ParseError, "cannot open file: " + path);
    buf << in.rdbuf();
    if (in.bad()) gersten::fail(ErrorCode::ParseError, "failed to read file: " + path);
  }
  return std::move(buf).str();
}

int cmd_verify(const gersten::SuiteConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  gersten::Report report = gersten::run_all_suites(cfg);
  std::cout << gersten::render(report);
  std::fprintf(stderr, "wall-time: %ld ms\n", elapsed_ms(start));
  return report.all_passed() ? 0 : 1;
}

int cmd_classify(const std::string& path) {
  auto start = std::chrono::steady_clock::now();
  gersten::ChainComplex x = [&] {
    std::string text = read_input(path);
    return gersten::io::complex_from_json(gersten::io::parse_text(text));
  }();
  int status = 0;
  try {
    gersten::Classified c = gersten::classify(x);
    gersten::io::Json j = gersten::io::to_json(c);
    j["n"] = c.object.n;
    j["m"] = c.object.m;
    emit(j);
  } catch (const Error& e) {
    emit(error_json(e));
    status = 1;
  }
  std::fprintf(stderr, "wall-time: %ld ms\n", elapsed_ms(start));
  return status;
}

int cmd_k0(const std::string& ring_name, const std::string& f_text) {
  auto start = std::chrono::steady_clock::now();
  gersten::Domain dom(gersten::Ring::make(ring_name), gersten::Tag::Base);
  gersten::Element f = dom.parse(f_text);
  int status = 0;
  try {
    gersten::SESWitness w = gersten::telescope_witness(dom, f);
    gersten::Decomposition dec = gersten::generator_decompose(w.c);
    gersten::io::Json j{{"ring", ring_name},
                        {"f", dom.to_string(f)},
                        {"valuation", *dom.valuation(f)},
                        {"telescope", gersten::io::to_json(w)},
                        {"ses_additive", gersten::ses_additive(w)},
                        {"k0_class", gersten::k0_class(w.c)},
                        {"torsion_length", gersten::torsion_length(w.c)},
                        {"decomposition", gersten::io::to_json(dec)}};
    emit(j);
  } catch (const Error& e) {
    emit(error_json(e));
    status = 1;
  }
  std::fprintf(stderr, "wall-time: %ld ms\n", elapsed_ms(start));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for matrix-category constructions over effective DVRs"};
  app.require_subcommand(1);

  gersten::SuiteConfig cfg;
  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite and print a report");
  verify->add_option("--ring", cfg.ring, "base ring, Z@p or Q[t]@t")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "root seed for instance generation")
      ->envname("GERSTEN_LAB_SEED")
      ->capture_default_str();
  verify->add_option("--count", cfg.count, "instances per suite")->capture_default_str();
  verify->add_option("--max-dim", cfg.max_dim, "rank and block dimension bound")
      ->capture_default_str();
  verify->add_option("--max-val", cfg.max_val, "valuation bound")->capture_default_str();
  verify->add_option("--format", cfg.format, "report format, json or markdown")
      ->capture_default_str();
  verify->add_option("--level", cfg.level, "simplicial truncation depth, 1..3")
      ->capture_default_str();
  verify->add_option("--sabotage", cfg.sabotage,
                     "test only: plant a known defect (ut-sign, star-order, r-sign)");

  std::string classify_path;
  CLI::App* classify =
      app.add_subcommand("classify", "recognize a two-term complex as a standard object");
  classify->add_option("file", classify_path, "complex JSON file, or - for standard input")
      ->required();

  std::string k0_ring = "Z@5";
  std::string k0_f;
  CLI::App* k0 = app.add_subcommand("k0", "telescope witness and class of R/(f)");
  k0->add_option("f", k0_f, "ring element, e.g. 25 or t^2")->required();
  k0->add_option("--ring", k0_ring, "base ring, Z@p or Q[t]@t")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      gersten::validate_config(cfg);
      return cmd_verify(cfg);
    }
    if (classify->parsed()) return cmd_classify(classify_path);
    return cmd_k0(k0_ring, k0_f);
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
