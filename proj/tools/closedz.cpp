// closedz: generate m-bonacci word families, factorize, compute oc-sequences
// and run the verification suites.

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closedz/closedz.hpp"

namespace {

using namespace closedz;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a..b" or a single integer, inclusive.
std::pair<int, int> parse_range(std::string const& s) {
  auto const dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int const v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (std::exception const&) {
    throw usage_error("bad range '" + s + "' (expected a..b or a single integer)");
  }
}

void check_m(int m) {
  if (m < 2 || m > max_alphabet_size) {
    throw usage_error("--m must satisfy 2 <= m <= 36, got " + std::to_string(m));
  }
}

family parse_family(std::string const& s) {
  if (s == "h") return family::bonacci;
  if (s == "u") return family::palindromic_prefix;
  if (s == "w") return family::singular;
  if (s == "z") return family::closed_factor;
  if (s == "P") return family::closed_prefix;
  if (s == "t") return family::ladder_gap;
  throw usage_error("unknown family '" + s + "'");
}

word read_word_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw usage_error("cannot open '" + path + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  return parse_word(text);
}

struct common {
  std::string format = "text";
};

void add_format(CLI::App* cmd, common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed z-factorizations of m-bonacci words"};
  app.require_subcommand(1);

  // generate
  common gen_c;
  int gen_m = 2;
  std::string gen_family;
  std::optional<int> gen_n;
  std::optional<std::size_t> gen_length;
  auto* gen = app.add_subcommand("generate", "Print a word of one of the families");
  gen->add_option("--m", gen_m, "Alphabet size")->capture_default_str();
  gen->add_option("--family", gen_family, "fixed-point, h, u, w, z, P or t")
      ->required()
      ->check(CLI::IsMember({"fixed-point", "h", "u", "w", "z", "P", "t"}));
  gen->add_option("--n", gen_n, "Family index");
  gen->add_option("--length", gen_length, "Prefix length (fixed-point)");
  add_format(gen, gen_c);

  // factorize
  common fac_c;
  std::optional<int> fac_m;
  std::string fac_input;
  std::string fac_scheme;
  std::size_t fac_count = 10;
  std::optional<std::size_t> fac_length_cap;
  std::string fac_mode = "cc-longest-closed";
  auto* fac = app.add_subcommand("factorize", "Factorize the m-bonacci word or an input word");
  auto* fac_m_opt = fac->add_option("--m", fac_m, "Factorize the m-bonacci fixed point");
  auto* fac_in_opt = fac->add_option("--input", fac_input, "File holding one serialized word");
  fac_m_opt->excludes(fac_in_opt);
  fac->add_option("--scheme", fac_scheme, "z, cz, pz, c or cc")
      ->required()
      ->check(CLI::IsMember({"z", "cz", "pz", "c", "cc"}));
  fac->add_option("--count", fac_count, "Number of factors (stream input)")->capture_default_str();
  fac->add_option("--length-cap", fac_length_cap, "Length budget (file input, z/cz/pz)");
  fac->add_option("--cc-mode", fac_mode, "cc-longest-closed or cc-alternative")
      ->check(CLI::IsMember({"cc-longest-closed", "cc-alternative"}))
      ->capture_default_str();
  add_format(fac, fac_c);

  // oc
  common oc_c;
  int oc_m = 2;
  std::size_t oc_length = 0;
  bool oc_runs = false;
  auto* ocs = app.add_subcommand("oc", "oc-sequence of the m-bonacci word");
  ocs->add_option("--m", oc_m, "Alphabet size")->capture_default_str();
  ocs->add_option("--length", oc_length, "Number of prefixes")->required();
  ocs->add_flag("--runs", oc_runs, "Print the lengths of the blocks of ones");
  add_format(ocs, oc_c);

  // verify
  common ver_c;
  std::string ver_suite = "all";
  std::string ver_m = "2..5";
  suite_config cfg;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", ver_suite,
                  "fibonacci, families, recursions, nonoccurrence, theorem, ocseq, pz, all, or a check id")
      ->capture_default_str();
  ver->add_option("--m", ver_m, "Alphabet sizes, a..b")->capture_default_str();
  ver->add_option("--max-n", cfg.max_n_search, "Largest index for factor-search checks")->capture_default_str();
  ver->add_option("--max-n-identity", cfg.max_n_identity, "Largest index for word identities")
      ->capture_default_str();
  ver->add_option("--length-cap", cfg.length_cap, "Largest materialized word")
      ->envname("CLOSEDZ_LENGTH_CAP")
      ->capture_default_str();
  ver->add_option("--oc-length", cfg.oc_length, "Prefix count for the classification checks")
      ->capture_default_str();
  ver->add_option("--oc-runs-length", cfg.oc_runs_length, "Prefix count for the run-length checks")
      ->capture_default_str();
  ver->add_option("--pz-count", cfg.pz_factor_count, "Palindromic z-factors to compare")->capture_default_str();
  ver->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();
  add_format(ver, ver_c);

  // conjecture
  common con_c;
  std::string con_m = "3";
  std::size_t con_count = 20;
  std::string con_mode = "both";
  auto* con = app.add_subcommand("conjecture", "Closed c-factor lengths against |h_{i-m+1}| (report only)");
  con->add_option("--m", con_m, "Alphabet sizes, a..b, each >= 3")->capture_default_str();
  con->add_option("--count", con_count, "Number of factors")->capture_default_str();
  con->add_option("--mode", con_mode, "cc-longest-closed, cc-alternative or both")
      ->check(CLI::IsMember({"cc-longest-closed", "cc-alternative", "both"}))
      ->capture_default_str();
  add_format(con, con_c);

  // morphism
  common mor_c;
  int mor_m = 2;
  std::string mor_kind = "phi";
  int mor_index = 0;
  auto* mor = app.add_subcommand("morphism", "Print phi, psi_a or mu_n");
  mor->add_option("--m", mor_m, "Alphabet size")->capture_default_str();
  mor->add_option("--kind", mor_kind, "phi, psi or mu")
      ->check(CLI::IsMember({"phi", "psi", "mu"}))
      ->capture_default_str();
  mor->add_option("--n", mor_index, "Letter for psi, index for mu")->capture_default_str();
  add_format(mor, mor_c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      check_m(gen_m);
      auto const fmt = parse_format(gen_c.format);
      if (gen_family == "fixed-point") {
        if (!gen_length) throw usage_error("--family fixed-point needs --length");
        if (*gen_length == 0) throw usage_error("--length must be >= 1");
        auto const w = fixed_point_prefix(bonacci_morphism(gen_m), 0, *gen_length);
        std::cout << render_word(w, "fixed-point", fmt);
        return 0;
      }
      auto const f = parse_family(gen_family);
      if (!gen_n) throw usage_error("--family " + gen_family + " needs --n");
      if (f == family::singular && gen_m != 2) throw usage_error("--family w needs --m 2");
      if (*gen_n < min_index(f)) {
        throw usage_error("--n must be >= " + std::to_string(min_index(f)) + " for family " + gen_family);
      }
      auto const len = family_length(gen_m, f, *gen_n);
      if (len > default_stream_cap) {
        throw usage_error("word of length " + std::to_string(len) + " is too long to print");
      }
      std::cout << render_word(family_word(gen_m, f, *gen_n), gen_family + "_" + std::to_string(*gen_n), fmt);
      return 0;
    }

    if (fac->parsed()) {
      auto const fmt = parse_format(fac_c.format);
      auto const kind = parse_scheme(fac_scheme);
      auto const mode = parse_cc_mode(fac_mode);
      if (!fac_m && fac_input.empty()) throw usage_error("factorize needs --m or --input");
      factorization f;
      if (fac_m) {
        check_m(*fac_m);
        if (kind == scheme::c || kind == scheme::cc) {
          throw usage_error("schemes c and cc need a finite --input word");
        }
        if (fac_count == 0) throw usage_error("--count must be >= 1");
        auto stream = bonacci_stream(*fac_m);
        f = kind == scheme::z    ? z_factorize(stream, fac_count)
            : kind == scheme::cz ? closed_z_factorize(stream, fac_count)
                                 : palindromic_z_factorize(stream, fac_count);
      } else {
        auto const w = read_word_file(fac_input);
        if (w.empty()) throw usage_error("input word is empty");
        std::size_t const cap = fac_length_cap.value_or(SIZE_MAX);
        switch (kind) {
          case scheme::z: f = z_factorize(w, cap); break;
          case scheme::cz: f = closed_z_factorize(w, cap); break;
          case scheme::pz: f = palindromic_z_factorize(w, cap); break;
          case scheme::c: f = c_factorize(w); break;
          case scheme::cc: f = closed_c_factorize(w, mode); break;
        }
      }
      std::cout << render(f, fac_m, fmt);
      return 0;
    }

    if (ocs->parsed()) {
      check_m(oc_m);
      if (oc_length == 0) throw usage_error("--length must be >= 1");
      auto stream = bonacci_stream(oc_m);
      std::cout << render_oc(oc(stream, oc_length), oc_m, oc_runs, parse_format(oc_c.format));
      return 0;
    }

    if (ver->parsed()) {
      auto const [lo, hi] = parse_range(ver_m);
      check_m(lo);
      check_m(hi);
      if (lo > hi) throw usage_error("--m range is empty");
      cfg.m_min = lo;
      cfg.m_max = hi;
      auto const results = run_suite(ver_suite, cfg);
      std::cout << render(results, parse_format(ver_c.format));
      return any_failed(results) ? 1 : 0;
    }

    if (con->parsed()) {
      auto const [lo, hi] = parse_range(con_m);
      if (lo < 3 || hi > max_alphabet_size || lo > hi) throw usage_error("--m must lie in 3..36");
      if (con_count < static_cast<std::size_t>(2 * hi - 1)) {
        throw usage_error("--count must be >= 2m-1 = " + std::to_string(2 * hi - 1));
      }
      std::vector<cc_mode> modes;
      if (con_mode != "cc-alternative") modes.push_back(cc_mode::longest_closed);
      if (con_mode != "cc-longest-closed") modes.push_back(cc_mode::alternative);
      std::vector<conjecture_report> reps;
      for (int m = lo; m <= hi; ++m) {
        for (auto mode : modes) reps.push_back(check_conjecture(m, con_count, mode));
      }
      std::cout << render(reps, parse_format(con_c.format));
      return 0;
    }

    if (mor->parsed()) {
      check_m(mor_m);
      morphism f = bonacci_morphism(mor_m);
      std::string name = "phi";
      if (mor_kind == "psi") {
        if (mor_index < 0 || mor_index >= mor_m) throw usage_error("--n must be a letter below --m");
        f = elementary_morphism(mor_m, static_cast<letter>(mor_index));
        name = "psi_" + std::to_string(mor_index);
      } else if (mor_kind == "mu") {
        if (mor_index < 0) throw usage_error("--n must be >= 0");
        f = directive_morphism(mor_m, mor_index);
        name = "mu_" + std::to_string(mor_index);
      }
      auto const fmt = parse_format(mor_c.format);
      if (fmt == output_format::json) {
        ordered_json j{{"m", mor_m}, {"name", name}, {"images", ordered_json::array()}};
        for (auto const& img : f.images()) j["images"].push_back(to_string(img));
        std::cout << dump(j);
      } else if (fmt == output_format::csv) {
        std::cout << "letter,image\n";
        for (int a = 0; a < mor_m; ++a) {
          std::cout << to_char(static_cast<letter>(a)) << ',' << to_string(f.image(static_cast<letter>(a))) << '\n';
        }
      } else {
        std::cout << to_text(f);
      }
      return 0;
    }
  } catch (usage_error const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
