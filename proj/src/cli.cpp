// Copyright 2026 The hgmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hgm/cli.hpp"

#include <charconv>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgm/distribution.hpp"
#include "hgm/moments.hpp"
#include "hgm/oracle.hpp"
#include "hgm/sampler.hpp"
#include "hgm/verify.hpp"

namespace hgm::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& text, const char* flag) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) {
      throw UsageError(std::string(flag) + ": empty list element in '" + text + "'");
    }
    parts.push_back(item);
  }
  if (parts.empty() || text.back() == ',') {
    throw UsageError(std::string(flag) + ": expected a comma-separated list, got '" + text + "'");
  }
  return parts;
}

std::int64_t parse_int(const std::string& text, const char* flag) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string(flag) + ": '" + text + "' is not an integer");
  }
  return value;
}

MultiIndex parse_alpha(const std::string& text) {
  std::vector<std::uint64_t> entries;
  for (const auto& part : split_list(text, "--alpha")) {
    const auto v = parse_int(part, "--alpha");
    if (v < 0) {
      throw UsageError("--alpha: exponents must be nonnegative");
    }
    entries.push_back(static_cast<std::uint64_t>(v));
  }
  return MultiIndex(std::move(entries));
}

Json index_json(const MultiIndex& m) {
  Json arr = Json::array();
  for (auto v : m.entries()) {
    arr.push_back(v);
  }
  return arr;
}

Json params_json(const CliRequest& request, const DistributionParams& params) {
  Json rec;
  rec["N"] = params.population();
  rec["n"] = params.sample_size();
  Json counts = Json::array();
  for (auto c : params.counts()) {
    counts.push_back(c);
  }
  rec["counts"] = std::move(counts);
  if (request.probs) {
    Json probs = Json::array();
    for (const auto& p : *request.probs) {
      probs.push_back(to_exact_string(p));
    }
    rec["probs"] = std::move(probs);
  }
  return rec;
}

void add_value(Json& rec, const char* key, const ExactRational& value, const OutputFormat& format) {
  rec[key] = to_exact_string(value);
  if (format.decimal_digits) {
    rec[std::string(key) + "_decimal"] = to_decimal_string(value, *format.decimal_digits);
  }
}

void emit(std::ostream& out, const Json& rec) { out << rec.dump() << '\n'; }

DistributionParams build_params(const CliRequest& request) {
  if (request.counts) {
    return params_from_counts(request.population, request.sample_size, *request.counts);
  }
  return params_from_probs(request.population, request.sample_size, ProbabilityVector(*request.probs));
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "rational") {
    return OutputFormat{};
  }
  constexpr std::string_view prefix = "decimal:";
  if (text.starts_with(prefix)) {
    const auto digits = parse_int(text.substr(prefix.size()), "--format");
    if (digits < 0 || digits > 10000) {
      throw UsageError("--format: decimal digits must be in [0, 10000]");
    }
    return OutputFormat{static_cast<unsigned>(digits)};
  }
  throw UsageError("--format: expected 'rational' or 'decimal:<digits>', got '" + text + "'");
}

CliRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Exact moments of the multivariate hypergeometric distribution"};
  app.name(args.empty() ? "hgmoments" : args.front());

  std::int64_t population = 0;
  std::int64_t sample_size = 0;
  std::string counts_text;
  std::string probs_text;
  std::string alpha_text;
  std::string kind_text;
  std::string mode_text = "single";
  std::string format_text = "rational";
  std::int64_t max_order = -1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;

  app.add_option("--N", population, "Total population size")->required();
  app.add_option("--n", sample_size, "Sample size")->required();
  auto* counts_opt = app.add_option("--counts", counts_text, "Subpopulation counts N_1,...,N_d");
  auto* probs_opt = app.add_option("--probs", probs_text, "Proportions p_1,...,p_d as rationals (e.g. 1/2,1/3)");
  counts_opt->excludes(probs_opt);
  auto* alpha_opt = app.add_option("--alpha", alpha_text, "Exponent vector a_1,...,a_d");
  auto* kind_opt = app.add_option("--kind", kind_text, "factorial | noncentral | central");
  app.add_option("--mode", mode_text, "single | table | verify");
  auto* order_opt = app.add_option("--max-order", max_order, "Largest |alpha| in table and verify modes");
  app.add_option("--format", format_text, "rational | decimal:<digits>");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for a Monte Carlo cross-check in single mode");
  app.add_option("--samples", samples, "Number of Monte Carlo draws (with --seed)");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) {
    rest.pop_back();
  }
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliRequest request;
  request.population = population;
  request.sample_size = sample_size;
  if (counts_opt->count() > 0) {
    std::vector<std::int64_t> counts;
    for (const auto& part : split_list(counts_text, "--counts")) {
      counts.push_back(parse_int(part, "--counts"));
    }
    request.counts = std::move(counts);
  } else if (probs_opt->count() > 0) {
    std::vector<ExactRational> probs;
    for (const auto& part : split_list(probs_text, "--probs")) {
      try {
        probs.push_back(parse_rational(part));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--probs: ") + e.what());
      }
    }
    request.probs = std::move(probs);
  } else {
    throw UsageError("one of --counts or --probs is required");
  }

  if (kind_opt->count() > 0) {
    request.kind = parse_moment_kind(kind_text);
    if (!request.kind) {
      throw UsageError("--kind: expected factorial, noncentral or central, got '" + kind_text + "'");
    }
  }
  if (mode_text == "single") {
    request.mode = Mode::Single;
  } else if (mode_text == "table") {
    request.mode = Mode::Table;
  } else if (mode_text == "verify") {
    request.mode = Mode::Verify;
  } else {
    throw UsageError("--mode: expected single, table or verify, got '" + mode_text + "'");
  }
  request.format = parse_format(format_text);

  if (alpha_opt->count() > 0) {
    request.alpha = parse_alpha(alpha_text);
  }
  if (order_opt->count() > 0) {
    if (max_order < 0) {
      throw UsageError("--max-order must be >= 0");
    }
    request.max_order = static_cast<std::uint64_t>(max_order);
  }
  if (request.mode == Mode::Single && !request.alpha) {
    throw UsageError("single mode requires --alpha");
  }
  if (request.mode != Mode::Single && !request.max_order) {
    throw UsageError("table and verify modes require --max-order");
  }
  if (seed_opt->count() > 0) {
    request.seed = seed;
  }
  if (samples == 0) {
    throw UsageError("--samples must be >= 1");
  }
  request.samples = samples;
  return request;
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  DistributionParams params = [&] {
    try {
      return build_params(request);
    } catch (const NonIntegralCount& e) {
      err << "error: " << e.what() << "; (N, p) does not describe a finite population\n";
      throw;
    } catch (const InvalidParams& e) {
      err << "error: " << e.what() << '\n';
      throw;
    }
  }();

  const Json base = params_json(request, params);
  const MomentKind default_kind = request.kind.value_or(MomentKind::Noncentral);

  switch (request.mode) {
    case Mode::Single: {
      check_dimension(params, *request.alpha, "--alpha");
      Json rec = base;
      rec["alpha"] = index_json(*request.alpha);
      rec["kind"] = to_string(default_kind);
      add_value(rec, "value", compute_moment(params, *request.alpha, default_kind).value, request.format);
      if (request.seed) {
        const auto est = mc_moment_estimate(params, *request.alpha, default_kind, request.samples, *request.seed);
        rec["mc_seed"] = *request.seed;
        rec["mc_samples"] = est.num_samples;
        rec["mc_estimate"] = est.mean;
        rec["mc_standard_error"] = est.standard_error;
      }
      emit(out, rec);
      return kExitOk;
    }
    case Mode::Table: {
      for (const auto& alpha : indices_up_to_order(params.dimension(), *request.max_order)) {
        Json rec = base;
        rec["alpha"] = index_json(alpha);
        rec["kind"] = to_string(default_kind);
        add_value(rec, "value", compute_moment(params, alpha, default_kind).value, request.format);
        emit(out, rec);
      }
      return kExitOk;
    }
    case Mode::Verify: {
      const BruteForceOracle oracle(params);
      std::vector<MomentKind> kinds;
      if (request.kind) {
        kinds.push_back(*request.kind);
      } else {
        kinds.assign(std::begin(kAllMomentKinds), std::end(kAllMomentKinds));
      }
      std::uint64_t checked = 0;
      std::uint64_t mismatches = 0;
      for (const auto& alpha : indices_up_to_order(params.dimension(), *request.max_order)) {
        for (auto kind : kinds) {
          const OracleReport report = verify(oracle, alpha, kind);
          Json rec = base;
          rec["alpha"] = index_json(alpha);
          rec["kind"] = to_string(kind);
          add_value(rec, "value", report.formula_value, request.format);
          add_value(rec, "oracle", report.oracle_value, request.format);
          rec["match"] = report.match;
          emit(out, rec);
          ++checked;
          if (!report.match) {
            ++mismatches;
          }
        }
      }
      if (mismatches > 0) {
        err << "verification failed: " << mismatches << " of " << checked << " records mismatch\n";
        return kExitMismatch;
      }
      return kExitOk;
    }
  }
  return kExitOk;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_request(args), out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const InvalidParams&) {
    // Already reported by run().
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInvalid;
}

}  // namespace hgm::cli
