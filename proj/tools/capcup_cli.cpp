// capcup command line: ingest point sets, label and chart configurations,
// extract and verify certificates, run the exhaustive search engine.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "capcup/certificate_io.hpp"
#include "capcup/chains.hpp"
#include "capcup/configuration.hpp"
#include "capcup/errors.hpp"
#include "capcup/geometry.hpp"
#include "capcup/labeling.hpp"
#include "capcup/render.hpp"
#include "capcup/search.hpp"
#include "capcup/witness.hpp"

namespace {

using namespace capcup;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw domain_error("cannot-open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw domain_error("cannot-open: " + out_path);
  out << text;
}

// Points file or configuration file, by first line.
configuration load_configuration(const std::string& path, bool rotate) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  if (text.rfind("configuration", 0) == 0) return read_configuration(in);
  const std::vector<point> raw = read_points(in);
  if (rotate) return configuration_from_points(rotate_to_general_position(raw));
  return configuration_from_points(point_set(raw));
}

struct cli_options {
  std::string input, output, cert_path;
  bool rotate = false;
  int n = 4, a = 4, b = 4, k = 2, m = 1, limit = 12, trials = 100;
  int threads = 1;
  std::uint64_t seed = 1;
  double budget_seconds = 0;  // 0 = unlimited
  std::int64_t bound = 1000000000;
  std::string mode = "exhaustive", format = "ascii";
  std::string gon_spec;  // "a,b" or "a,b,strong"
};

search_budget make_budget(double seconds) {
  search_budget b;
  if (seconds > 0) b.seconds = seconds;
  return b;
}

avoidance_spec make_spec(const CLI::App* cmd, const cli_options& opt) {
  avoidance_spec spec;
  if (cmd->count("--a")) spec.cap_bound = opt.a;
  if (cmd->count("--b")) spec.cup_bound = opt.b;
  if (!opt.gon_spec.empty()) {
    gon_bound g;
    char strong_word[16] = {0};
    const int got = std::sscanf(opt.gon_spec.c_str(), "%d,%d,%15s", &g.a,
                                &g.b, strong_word);
    if (got < 2) throw domain_error("bad-gon-spec: expected a,b[,strong]");
    if (got == 3) {
      const std::string w = strong_word;
      if (w == "strong")
        g.strong = true;
      else if (w != "weak")
        throw domain_error("bad-gon-spec: expected a,b[,strong]");
    }
    spec.gon = g;
  }
  spec.validate();
  return spec;
}

search_mode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return search_mode::exhaustive;
  if (mode == "random") return search_mode::random;
  throw domain_error("bad-mode: expected exhaustive or random");
}

int run(int argc, char** argv) {
  CLI::App app{"caps, cups and gon certificates in ordered configurations"};
  app.require_subcommand(1);
  cli_options opt;

  auto add_io = [&](CLI::App* cmd, bool input = true) {
    if (input) cmd->add_option("input", opt.input, "points or configuration file (- for stdin)");
    cmd->add_option("-o,--output", opt.output, "output file (default stdout)");
  };

  CLI::App* ingest = app.add_subcommand("ingest", "points file -> configuration file");
  add_io(ingest);
  ingest->add_flag("--rotate", opt.rotate,
                   "shear duplicate x-coordinates apart first (lossy)");

  CLI::App* label = app.add_subcommand("label", "canonical slope labeling, one line per edge");
  add_io(label);
  label->add_option("--a", opt.a, "cap bound")->capture_default_str();

  CLI::App* alpha = app.add_subcommand("alpha", "alpha statistic, one line per vertex");
  add_io(alpha);
  alpha->add_option("--a", opt.a, "cap bound")->capture_default_str();
  alpha->add_option("--b", opt.b, "cup bound")->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "(alpha,beta)-plane as ascii or svg");
  add_io(render);
  render->add_option("--n", opt.n, "cup bound")->capture_default_str();
  render->add_option("--format", opt.format, "ascii or svg")->capture_default_str();

  CLI::App* find_gon_cmd = app.add_subcommand("find-gon", "4-cap, n-cup or (3,n-1)-gon certificate");
  add_io(find_gon_cmd);
  find_gon_cmd->add_option("--n", opt.n, "gon parameter")->capture_default_str();

  CLI::App* extract = app.add_subcommand("extract-pair", "interweaved laced (n-1)-cup pair certificate");
  add_io(extract);
  extract->add_option("--n", opt.n, "cup parameter")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify-cert", "re-check a certificate against a configuration");
  verify->add_option("input", opt.input, "points or configuration file")->required();
  verify->add_option("certificate", opt.cert_path, "certificate file")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream pattern-free configurations");
  add_io(enumerate);
  enumerate->remove_option(enumerate->get_option_no_throw("input"));
  enumerate->add_option("--m", opt.m, "configuration size")->required();
  enumerate->add_option("--a", opt.a, "forbid a-caps");
  enumerate->add_option("--b", opt.b, "forbid b-cups");
  enumerate->add_option("--gon", opt.gon_spec, "forbid (a,b)-gons: a,b[,strong]");
  enumerate->add_option("--budget", opt.budget_seconds, "wall clock seconds");
  enumerate->add_option("--threads", opt.threads, "worker threads")->capture_default_str();

  CLI::App* maxsize = app.add_subcommand("max-size", "largest pattern-free size up to a limit");
  add_io(maxsize);
  maxsize->remove_option(maxsize->get_option_no_throw("input"));
  maxsize->add_option("--a", opt.a, "forbid a-caps");
  maxsize->add_option("--b", opt.b, "forbid b-cups");
  maxsize->add_option("--gon", opt.gon_spec, "forbid (a,b)-gons: a,b[,strong]");
  maxsize->add_option("--limit", opt.limit, "largest size to try")->required();
  maxsize->add_option("--budget", opt.budget_seconds, "wall clock seconds");
  maxsize->add_option("--threads", opt.threads, "worker threads")->capture_default_str();

  CLI::App* check_thm = app.add_subcommand("check-theorem", "certificates on every / sampled size-(C(n-1,2)+2) configuration");
  add_io(check_thm);
  check_thm->remove_option(check_thm->get_option_no_throw("input"));
  check_thm->add_option("--n", opt.n, "gon parameter")->required();
  check_thm->add_option("--mode", opt.mode, "exhaustive or random")->capture_default_str();
  check_thm->add_option("--trials", opt.trials, "random mode trials")->capture_default_str();
  check_thm->add_option("--seed", opt.seed, "random mode seed")->capture_default_str();
  check_thm->add_option("--budget", opt.budget_seconds, "wall clock seconds");
  check_thm->add_option("--threads", opt.threads, "worker threads")->capture_default_str();

  CLI::App* check_conj = app.add_subcommand("check-conjecture", "k mutually interweaved laced cups per configuration");
  add_io(check_conj);
  check_conj->remove_option(check_conj->get_option_no_throw("input"));
  check_conj->add_option("--n", opt.n, "cup parameter")->required();
  check_conj->add_option("--k", opt.k, "family size")->required();
  check_conj->add_option("--mode", opt.mode, "exhaustive or random")->capture_default_str();
  check_conj->add_option("--trials", opt.trials, "random mode trials")->capture_default_str();
  check_conj->add_option("--seed", opt.seed, "random mode seed")->capture_default_str();
  check_conj->add_option("--budget", opt.budget_seconds, "wall clock seconds");
  check_conj->add_option("--threads", opt.threads, "worker threads")->capture_default_str();

  CLI::App* gen_ext = app.add_subcommand("gen-extremal", "cap/cup-free extremal point set");
  add_io(gen_ext);
  gen_ext->remove_option(gen_ext->get_option_no_throw("input"));
  gen_ext->add_option("--a", opt.a, "cap bound")->required();
  gen_ext->add_option("--b", opt.b, "cup bound")->required();

  CLI::App* gen_rand = app.add_subcommand("gen-random", "seeded random point set in general position");
  add_io(gen_rand);
  gen_rand->remove_option(gen_rand->get_option_no_throw("input"));
  gen_rand->add_option("--m", opt.m, "point count")->required();
  gen_rand->add_option("--seed", opt.seed, "seed")->capture_default_str();
  gen_rand->add_option("--bound", opt.bound, "coordinate bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  std::ostringstream out;
  if (ingest->parsed()) {
    const configuration s = load_configuration(opt.input, opt.rotate);
    write_configuration(out, s);
  } else if (label->parsed()) {
    const configuration s = load_configuration(opt.input, false);
    const slope_labeling sl = canonical_labeling(s, opt.a);
    for (int x = 0; x < s.size(); ++x)
      for (int y = x + 1; y < s.size(); ++y)
        out << x << " " << y << " -> " << sl.label(x, y) << "\n";
  } else if (alpha->parsed()) {
    const configuration s = load_configuration(opt.input, false);
    const slope_labeling sl = canonical_labeling(s, opt.a);
    const alpha_statistic st = compute_alpha(s, sl, opt.b);
    for (int v = 0; v < s.size(); ++v) {
      out << v << " -> (";
      for (int i = 1; i <= opt.a - 2; ++i)
        out << (i > 1 ? "," : "") << st.value(v, i);
      out << ")\n";
    }
  } else if (render->parsed()) {
    const configuration s = load_configuration(opt.input, false);
    const alpha_beta_plane plane = make_alpha_beta_plane(s, opt.n);
    if (opt.format == "svg")
      out << render_plane_svg(plane);
    else if (opt.format == "ascii")
      out << render_plane_ascii(plane);
    else
      throw domain_error("bad-format: expected ascii or svg");
  } else if (find_gon_cmd->parsed()) {
    const configuration s = load_configuration(opt.input, false);
    write_certificate(out, find_gon(s, opt.n));
  } else if (extract->parsed()) {
    const configuration s = load_configuration(opt.input, false);
    const pair_or_forbidden pr = find_interweaved_laced_pair(s, opt.n);
    certificate cert;
    cert.n = opt.n;
    if (std::holds_alternative<chain>(pr)) {
      const chain& c = std::get<chain>(pr);
      cert.kind = c.kind == orient::cap ? certificate_kind::cap
                                        : certificate_kind::cup;
      cert.a = 4;
      cert.b = opt.n;
      cert.single = c;
    } else {
      cert.kind = certificate_kind::laced_pair;
      cert.a = 4;
      cert.b = opt.n;
      const interweaved_pair& p = std::get<interweaved_pair>(pr);
      cert.family = {p.first, p.second};
    }
    write_certificate(out, cert);
  } else if (verify->parsed()) {
    const configuration s = load_configuration(opt.input, false);
    const std::string cert_text = slurp(opt.cert_path);
    std::istringstream cs(cert_text);
    const certificate cert = read_certificate(cs);
    const verify_result vr = verify_certificate(s, cert);
    if (!vr.ok) throw domain_error("certificate-invalid: " + vr.reason);
    out << "ok " << kind_name(cert.kind) << "\n";
  } else if (enumerate->parsed()) {
    const avoidance_spec spec = make_spec(enumerate, opt);
    std::ostringstream stream_out;
    const search_report r = enumerate_free(
        opt.m, spec, make_budget(opt.budget_seconds), opt.threads,
        [&](const configuration& s) { write_configuration(stream_out, s); });
    write_report(out, r);
    out << stream_out.str();
  } else if (maxsize->parsed()) {
    const avoidance_spec spec = make_spec(maxsize, opt);
    write_report(out, max_free_size(spec, opt.limit,
                                    make_budget(opt.budget_seconds),
                                    opt.threads));
  } else if (check_thm->parsed()) {
    write_report(out, check_main_theorem(opt.n, parse_mode(opt.mode),
                                         opt.trials, opt.seed,
                                         make_budget(opt.budget_seconds),
                                         opt.threads));
  } else if (check_conj->parsed()) {
    write_report(out, check_conjecture_k(opt.n, opt.k, parse_mode(opt.mode),
                                         opt.trials, opt.seed,
                                         make_budget(opt.budget_seconds),
                                         opt.threads));
  } else if (gen_ext->parsed()) {
    std::ostringstream pts;
    write_points(pts, capcup_extremal_points(opt.a, opt.b).points);
    out << pts.str();
  } else if (gen_rand->parsed()) {
    std::ostringstream pts;
    write_points(pts, random_point_set(opt.m, opt.seed, opt.bound).points);
    out << pts.str();
  }
  emit(opt.output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const capcup::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const capcup::internal_error& e) {
    std::cerr << "internal-error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
