#pragma once

// Text, CSV and JSON renderings of factorizations, oc-sequences, check
// reports and conjecture tables.

#include "json.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "closedz/factorize.hpp"
#include "closedz/ocseq.hpp"
#include "closedz/verify.hpp"
#include "closedz/word.hpp"

namespace closedz {

enum class output_format { text, csv, json };

inline output_format parse_format(std::string const& s) {
  if (s == "text") return output_format::text;
  if (s == "csv") return output_format::csv;
  if (s == "json") return output_format::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Factorizations
// ---------------------------------------------------------------------------

/// {"m", "scheme", "complete", "factors": [{"index", "word", "length"}]};
/// m is null for factorizations of an input word.
inline ordered_json to_json(factorization const& f, std::optional<int> m) {
  ordered_json j;
  j["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
  j["scheme"] = to_string(f.kind);
  j["complete"] = f.complete;
  j["factors"] = ordered_json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    j["factors"].push_back(ordered_json{
        {"index", i}, {"word", to_string(f.factors[i])}, {"length", f.factors[i].size()}});
  }
  return j;
}

struct tagged_factorization {
  std::optional<int> m;
  factorization value;
};

inline tagged_factorization factorization_from_json(ordered_json const& j) {
  tagged_factorization out;
  if (!j.at("m").is_null()) {
    out.m = j.at("m").get<int>();
  }
  out.value.kind = parse_scheme(j.at("scheme").get<std::string>());
  out.value.complete = j.at("complete").get<bool>();
  std::size_t expect = 0;
  for (auto const& f : j.at("factors")) {
    if (f.at("index").get<std::size_t>() != expect++) {
      throw std::invalid_argument("factorization JSON: indices must be 0, 1, 2, ...");
    }
    auto w = parse_word(f.at("word").get<std::string>());
    if (w.size() != f.at("length").get<std::size_t>()) {
      throw std::invalid_argument("factorization JSON: length does not match word");
    }
    out.value.factors.push_back(std::move(w));
  }
  return out;
}

inline std::string dump(ordered_json const& j) { return j.dump(2) + "\n"; }

inline std::string render(factorization const& f, std::optional<int> m, output_format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case output_format::json:
      return dump(to_json(f, m));
    case output_format::csv:
      os << "index,word,length\n";
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        os << i << ',' << to_string(f.factors[i]) << ',' << f.factors[i].size() << '\n';
      }
      return os.str();
    case output_format::text:
      os << "# scheme " << to_string(f.kind);
      if (m) os << ", m = " << *m;
      os << ", " << f.factors.size() << " factors, " << f.total_length() << " letters"
         << (f.complete ? "" : " (incomplete)") << '\n';
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        os << i << '\t' << f.factors[i].size() << '\t' << to_string(f.factors[i]) << '\n';
      }
      return os.str();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Words and oc-sequences
// ---------------------------------------------------------------------------

inline std::string render_word(word_view w, std::string const& label, output_format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case output_format::json:
      return dump(ordered_json{{"name", label}, {"word", to_string(w)}, {"length", w.size()}});
    case output_format::csv:
      os << "name,word,length\n" << label << ',' << to_string(w) << ',' << w.size() << '\n';
      return os.str();
    case output_format::text:
      os << to_string(w) << '\n' << "length " << w.size() << '\n';
      return os.str();
  }
  return {};
}

inline std::string join_runs(std::vector<std::size_t> const& runs) {
  std::string out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i]);
  }
  return out;
}

inline std::string render_oc(oc_sequence const& seq, int m, bool runs, output_format fmt) {
  auto const r = runs_of_ones(seq);
  switch (fmt) {
    case output_format::json: {
      ordered_json j{{"m", m}, {"length", seq.size()}};
      if (runs) {
        j["runs"] = r;
        j["last_run_truncated"] = last_run_truncated(seq);
      } else {
        j["bits"] = seq.to_string();
      }
      return dump(j);
    }
    case output_format::csv: {
      std::ostringstream os;
      if (runs) {
        os << "index,run\n";
        for (std::size_t i = 0; i < r.size(); ++i) os << i << ',' << r[i] << '\n';
      } else {
        os << "length,bit\n";
        for (std::size_t i = 0; i < seq.size(); ++i) os << i + 1 << ',' << int(seq.bits[i]) << '\n';
      }
      return os.str();
    }
    case output_format::text:
      return (runs ? join_runs(r) : seq.to_string()) + "\n";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

inline ordered_json to_json(property_check const& c) {
  ordered_json j;
  j["id"] = c.id;
  j["suite"] = c.suite;
  j["m_range"] = {c.m_min, c.m_max};
  j["n_range"] = {c.n_min, c.n_max};
  j["status"] = to_string(c.status);
  if (c.failure) {
    j["counterexample"] = {{"m", c.failure->m}, {"n", c.failure->n}, {"detail", c.failure->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["detail"] = c.detail;
  return j;
}

inline std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string render(std::vector<property_check> const& checks, output_format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case output_format::json: {
      ordered_json arr = ordered_json::array();
      for (auto const& c : checks) arr.push_back(to_json(c));
      return dump(arr);
    }
    case output_format::csv:
      os << "id,suite,m_min,m_max,n_min,n_max,status,cx_m,cx_n,cx_detail,detail\n";
      for (auto const& c : checks) {
        os << c.id << ',' << c.suite << ',' << c.m_min << ',' << c.m_max << ',' << c.n_min << ','
           << c.n_max << ',' << to_string(c.status) << ',';
        if (c.failure) {
          os << c.failure->m << ',' << c.failure->n << ',' << csv_field(c.failure->detail);
        } else {
          os << ",,";
        }
        os << ',' << csv_field(c.detail) << '\n';
      }
      return os.str();
    case output_format::text: {
      std::size_t width = 0;
      for (auto const& c : checks) width = std::max(width, c.id.size());
      std::size_t counts[4] = {0, 0, 0, 0};
      for (auto const& c : checks) {
        ++counts[static_cast<int>(c.status)];
        os << c.id << std::string(width + 2 - c.id.size(), ' ') << to_string(c.status);
        os << "  m " << c.m_min << ".." << c.m_max << "  n " << c.n_min << ".." << c.n_max;
        if (c.failure) {
          os << "  counterexample m=" << c.failure->m << " n=" << c.failure->n << ": " << c.failure->detail;
        }
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << '\n';
      }
      os << checks.size() << " checks: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
         << " report-only, " << counts[3] << " skipped\n";
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Conjecture reports
// ---------------------------------------------------------------------------

inline ordered_json to_json(conjecture_report const& r) {
  ordered_json j;
  j["m"] = r.m;
  j["mode"] = to_string(r.mode);
  j["prefix_length"] = r.prefix_length;
  j["stable"] = r.stable;
  j["lengths"] = r.lengths;
  j["rows"] = ordered_json::array();
  for (auto const& row : r.rows) {
    j["rows"].push_back(ordered_json{{"i", row.index},
                                     {"factor_length", row.factor_length},
                                     {"predicted", row.predicted},
                                     {"equal", row.equal}});
  }
  j["check"] = to_json(as_check(r));
  return j;
}

inline std::string render(std::vector<conjecture_report> const& reps, output_format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case output_format::json: {
      ordered_json arr = ordered_json::array();
      for (auto const& r : reps) arr.push_back(to_json(r));
      return dump(arr);
    }
    case output_format::csv:
      os << "m,mode,i,factor_length,predicted,equal\n";
      for (auto const& r : reps) {
        for (auto const& row : r.rows) {
          os << r.m << ',' << to_string(r.mode) << ',' << row.index << ',' << row.factor_length << ','
             << row.predicted << ',' << (row.equal ? "true" : "false") << '\n';
        }
      }
      return os.str();
    case output_format::text:
      for (auto const& r : reps) {
        os << "# m = " << r.m << ", " << to_string(r.mode) << ", prefix length " << r.prefix_length
           << (r.stable ? "" : " (not stable)") << "\n";
        os << "i\t|c_i|\t|h_{i-m+1}|\tequal\n";
        for (auto const& row : r.rows) {
          os << row.index << '\t' << row.factor_length << '\t' << row.predicted << '\t'
             << (row.equal ? "yes" : "no") << '\n';
        }
        os << "report-only: " << as_check(r).detail << "\n";
      }
      return os.str();
  }
  return {};
}

}  // namespace closedz
