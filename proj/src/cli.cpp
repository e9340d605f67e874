#include "framecert/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Dense>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "framecert/errors.hpp"
#include "framecert/examples.hpp"
#include "framecert/falsifier.hpp"
#include "framecert/frame.hpp"
#include "framecert/json_io.hpp"
#include "framecert/linalg.hpp"
#include "framecert/naimark.hpp"
#include "framecert/operators.hpp"
#include "framecert/spark.hpp"
#include "framecert/subspace.hpp"
#include "framecert/util.hpp"

namespace framecert {

namespace {

// ===========================================================================
// option plumbing
// ===========================================================================

struct CommonOpts {
  std::string input_path;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t max_m = kDefaultMaxEnumeration;
  bool to_exact = false;
  bool to_float = false;
};

ToleranceConfig tol_config(const CommonOpts& o) {
  ToleranceConfig t;
  t.witness_tol = o.tol;
  return t;
}

struct LoadedInput {
  std::string raw;
  Json json;
};

LoadedInput load_input(const std::string& path) {
  LoadedInput in;
  in.raw = read_text_file(path);
  in.json = parse_json_text(in.raw);
  return in;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Frame exact_copy(const Frame& f) {
  std::vector<Vector> vectors;
  vectors.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) vectors.push_back(f.vec(i).to_exact());
  return Frame(f.dim(), std::move(vectors));
}

Frame convert_frame(Frame f, const CommonOpts& o) {
  if (o.to_float && f.field() == Field::Exact) return f.to_float();
  if (o.to_exact && f.field() == Field::Float) return exact_copy(f);
  return f;
}

SubspaceFamily convert_family(SubspaceFamily fam, const CommonOpts& o,
                              const ToleranceConfig& tol) {
  if (o.to_float && fam.field() == Field::Exact) return fam.to_float();
  if (o.to_exact && fam.field() == Field::Float) {
    std::vector<Subspace> members;
    members.reserve(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      members.emplace_back(fam.member(i).basis().to_exact(), tol);
    }
    return SubspaceFamily(fam.ambient_dim(), std::move(members));
  }
  return fam;
}

int exit_for(const Certificate& c) {
  if (c.verdict == Verdict::Yes) return kExitYes;
  if (c.verdict == Verdict::No) return kExitNo;
  return kExitUnknown;
}

int emit(const Certificate& cert, const std::string& digest, std::ostream& out,
         const Json& extra = Json::object()) {
  out << certificate_to_json(cert, digest, extra).dump(2) << "\n";
  return exit_for(cert);
}

std::size_t threads_from_env() {
  const char* raw = std::getenv("THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const unsigned long parsed = std::strtoul(raw, &end, 10);
  if (end == raw || parsed == 0) return 1;
  return static_cast<std::size_t>(parsed);
}

// ===========================================================================
// subcommand handlers
// ===========================================================================

int run_report(const CommonOpts& o, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const ToleranceConfig tol = tol_config(o);
  const Frame f = convert_frame(frame_from_json(in.json), o);
  const FrameReport r = frame_report(f, tol);
  Certificate cert;
  cert.verdict = r.is_frame ? Verdict::Yes : Verdict::No;
  cert.method = Method::FrameBounds;
  cert.arithmetic_mode = f.field();
  cert.value = f.size();
  cert.notes.push_back("dim: " + std::to_string(f.dim()));
  cert.notes.push_back("lower_bound: " + fmt(r.lower_bound));
  cert.notes.push_back("upper_bound: " + fmt(r.upper_bound));
  cert.notes.push_back(std::string("tight: ") + (r.is_tight ? "true" : "false"));
  cert.notes.push_back(std::string("parseval: ") + (r.is_parseval ? "true" : "false"));
  return emit(cert, digest_string(in.raw), out);
}

int run_spark(const CommonOpts& o, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const Frame f = convert_frame(frame_from_json(in.json), o);
  return emit(spark_certificate(f, tol_config(o), o.max_m), digest_string(in.raw), out);
}

int run_cp(const CommonOpts& o, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const Frame f = convert_frame(frame_from_json(in.json), o);
  return emit(complement_property(f, tol_config(o), o.max_m), digest_string(in.raw), out);
}

int run_pr_vectors(const CommonOpts& o, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const Frame f = convert_frame(frame_from_json(in.json), o);
  return emit(yields_phase_retrieval_vectors(f, tol_config(o), o.max_m), digest_string(in.raw),
              out);
}

int run_naimark(const CommonOpts& o, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const ToleranceConfig tol = tol_config(o);
  const Frame f = convert_frame(frame_from_json(in.json), o);
  NaimarkPair pair = naimark_complement(f, tol);
  const bool ok = verify_naimark_pair(pair, tol);
  const Eigen::MatrixXd sum =
      gram_matrix(pair.primary).to_eigen() + gram_matrix(pair.complement).to_eigen();
  const double residual =
      (sum - Eigen::MatrixXd::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
  Certificate cert;
  cert.verdict = ok ? Verdict::Yes : Verdict::No;
  cert.method = Method::GramComplement;
  cert.arithmetic_mode = pair.complement.field();
  cert.value = pair.complement.dim();
  cert.notes.push_back("gram_sum_residual: " + fmt(residual));
  Json extra = Json::object();
  extra["complement"] = frame_to_json(pair.complement);
  return emit(cert, digest_string(in.raw), out, extra);
}

int run_nr_cert(const CommonOpts& o, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const ToleranceConfig tol = tol_config(o);
  const SubspaceFamily fam = convert_family(family_from_json(in.json, tol), o, tol);
  return emit(norm_retrieval_certificate(fam, tol), digest_string(in.raw), out);
}

int run_nr_falsify(const CommonOpts& o, std::size_t restarts, std::size_t iters,
                   std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const ToleranceConfig tol = tol_config(o);
  const SubspaceFamily fam = convert_family(family_from_json(in.json, tol), o, tol);
  SearchConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = iters;
  cfg.seed = o.seed;
  cfg.threads = threads_from_env();
  Certificate cert;
  cert.arithmetic_mode = Field::Float;
  if (std::optional<WitnessPair> pair = nr_violation_search(fam, cfg)) {
    cert.verdict = Verdict::No;
    cert.method = Method::GradientSearch;
    cert.pair = std::move(*pair);
  } else {
    cert.verdict = Verdict::Unknown;
    cert.method = Method::SearchExhausted;
    cert.notes.push_back("restarts: " + std::to_string(cfg.restarts));
    cert.notes.push_back("no violation found; absence of a witness is not a proof");
  }
  return emit(cert, digest_string(in.raw), out);
}

int run_abc_suite(const CommonOpts& o, std::size_t trials, std::ostream& out) {
  const LoadedInput in = load_input(o.input_path);
  const ToleranceConfig tol = tol_config(o);
  const Frame f = convert_frame(frame_from_json(in.json), o);
  const EquivalenceReport rep = invertible_equivalence_suite(f, trials, o.seed, tol, o.max_m);
  Certificate cert = rep.ground_truth;
  cert.notes.push_back("trials: " + std::to_string(rep.trials));
  cert.notes.push_back("matched: " + std::to_string(rep.matched));
  Json extra = Json::object();
  if (rep.failure_operator) {
    extra["operator_field"] = field_name(rep.failure_operator->field());
    extra["operator"] = matrix_to_json(rep.failure_operator->matrix());
  }
  if (rep.failure_pair) extra["transformed_pair"] = witness_pair_to_json(*rep.failure_pair);
  if (!rep.all_matched()) {
    cert.notes.push_back("verdict was not invariant across trials; inspect the operator payload");
  }
  return emit(cert, digest_string(in.raw), out, extra);
}

int run_pop_family(std::size_t n, std::size_t m, const CommonOpts& o, std::ostream& out) {
  const ToleranceConfig tol = tol_config(o);
  const RankOneFamily fam = generic_rank_one_family(n, m, o.seed, tol);
  Certificate cert;
  cert.verdict = Verdict::Yes;
  cert.method = Method::IdentityInSpan;
  cert.arithmetic_mode = Field::Float;
  cert.coefficients = fam.coefficients;
  cert.value = m;
  cert.notes.push_back("generic rank-one family; identity coefficients are all positive");
  Json extra = Json::object();
  extra["frame"] = frame_to_json(fam.frame);
  extra["family"] = family_to_json(fam.family);
  const std::string key = "pop-family n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " seed=" + std::to_string(o.seed);
  return emit(cert, digest_string(key), out, extra);
}

int run_example(const std::string& name, const CommonOpts& o, std::ostream& out) {
  const ToleranceConfig tol = tol_config(o);
  const std::string digest = digest_string("example " + name + " seed=" + std::to_string(o.seed));
  Json b = Json::object();
  b["name"] = name;
  if (name == "duplicate-vector") {
    const DuplicateVectorExample ex = duplicate_vector_example(tol);
    b["primary"] = frame_to_json(ex.primary);
    b["complement"] = frame_to_json(ex.complement);
    b["primary_pr"] = certificate_to_json(ex.primary_pr, digest);
    b["complement_cp"] = certificate_to_json(ex.complement_cp, digest);
  } else if (name == "free-measurement") {
    const FreeMeasurementExample ex = free_measurement_example(o.seed, 100, tol);
    b["full"] = frame_to_json(ex.full);
    b["reduced"] = frame_to_json(ex.reduced);
    b["full_pr"] = certificate_to_json(ex.full_pr, digest);
    b["reduced_pr"] = certificate_to_json(ex.reduced_pr, digest);
    b["trials"] = ex.trials;
    b["max_reconstruction_error"] = ex.max_reconstruction_error;
  } else if (name == "pop-generic") {
    const GenericFamilyExample ex = generic_family_example(o.seed, tol);
    b["frame"] = frame_to_json(ex.sample.frame);
    b["family"] = family_to_json(ex.sample.family);
    b["certificate"] = certificate_to_json(ex.certificate, digest);
    b["identity_residual"] = ex.identity_residual;
    b["proper_subfamilies_excluded"] = ex.proper_subfamilies_excluded;
  } else if (name == "naimark-bounds") {
    const NaimarkBoundsExample ex = naimark_bounds_example(o.seed, tol);
    Json cases = Json::array();
    for (const BoundsCase& c : ex.cases) {
      Json entry = Json::object();
      entry["m"] = c.frame.size();
      entry["frame"] = frame_to_json(c.frame);
      entry["complement"] = frame_to_json(c.complement);
      entry["bounds"] = certificate_to_json(c.bounds, digest);
      entry["primary_pr"] = certificate_to_json(c.primary_pr, digest);
      entry["complement_pr"] = certificate_to_json(c.complement_pr, digest);
      cases.push_back(std::move(entry));
    }
    b["cases"] = cases;
  } else {
    fail(ErrorCode::UnknownExample,
         "unknown example \"" + name +
             "\"; known: duplicate-vector, free-measurement, pop-generic, naimark-bounds");
  }
  b["inputs_digest"] = digest;
  b["tool_version"] = kToolVersion;
  out << b.dump(2) << "\n";
  return kExitYes;
}

// ===========================================================================
// certificate verification
// ===========================================================================

struct CheckList {
  Json checks = Json::array();
  bool passed = true;
  void add(const std::string& name, bool ok) {
    checks.push_back(Json{{"check", name}, {"ok", ok}});
    passed = passed && ok;
  }
  void note(const std::string& name, const std::string& text) {
    checks.push_back(Json{{"check", name}, {"note", text}});
  }
};

int run_verify(const std::string& cert_path, const CommonOpts& o, std::ostream& out) {
  const LoadedInput certfile = load_input(cert_path);
  const LoadedInput input = load_input(o.input_path);
  const ToleranceConfig tol = tol_config(o);
  const Certificate cert = certificate_from_json(certfile.json);
  const Json witness =
      certfile.json.contains("witness") ? certfile.json.at("witness") : Json::object();

  std::optional<Frame> frame;
  std::optional<SubspaceFamily> family;
  if (input.json.is_object() && input.json.contains("vectors")) {
    Frame f = frame_from_json(input.json);
    if (cert.arithmetic_mode == Field::Float && f.field() == Field::Exact) f = f.to_float();
    if (cert.arithmetic_mode == Field::Exact && f.field() == Field::Float) f = exact_copy(f);
    frame = std::move(f);
  } else if (input.json.is_object() && input.json.contains("subspaces")) {
    SubspaceFamily fam = family_from_json(input.json, tol);
    if (cert.arithmetic_mode == Field::Float && fam.field() == Field::Exact) {
      fam = fam.to_float();
    }
    family = std::move(fam);
  } else {
    fail(ErrorCode::ParseError,
         "input is neither a frame file (\"vectors\") nor a subspace file (\"subspaces\")");
  }

  CheckList checks;
  const std::string recomputed = digest_string(input.raw);
  if (certfile.json.contains("inputs_digest") &&
      certfile.json.at("inputs_digest").is_string() &&
      certfile.json.at("inputs_digest").get<std::string>() == recomputed) {
    checks.add("inputs_digest matches the input file", true);
  } else {
    checks.note("inputs_digest",
                "digest differs from the input file; witness is checked against the given input");
  }

  // Certified gaps must survive re-measurement; the "differ" thresholds sit
  // three orders of magnitude above the agreement tolerance.
  const double norm_floor = 1000.0 * tol.witness_tol;
  auto check_frame_pair = [&](const WitnessPair& stored) {
    if (!frame) {
      checks.add("frame input present for pair witness", false);
      return;
    }
    const WitnessPair re =
        make_frame_witness(frame->to_float(), stored.x.to_float(), stored.y.to_float());
    checks.add("pair measurements agree within tol", re.measurement_gap <= tol.witness_tol);
    checks.add("pair differs beyond a global sign", re.phase_gap >= norm_floor);
  };
  auto check_family_pair = [&](const WitnessPair& stored) {
    if (!family) {
      checks.add("family input present for pair witness", false);
      return;
    }
    // Gradient search accepts a squared residual of 1e-12, which bounds each
    // measurement difference by 1e-6; constructed witnesses are exact.
    const double gap_tol = cert.method == Method::GradientSearch
                               ? std::max(tol.witness_tol, 1e-6)
                               : tol.witness_tol;
    const WitnessPair re =
        make_family_witness(family->to_float(), stored.x.to_float(), stored.y.to_float());
    checks.add("pair measurements agree within tol", re.measurement_gap <= gap_tol);
    checks.add("pair norms differ", re.norm_gap >= norm_floor);
  };
  auto check_partition = [&](const std::vector<std::size_t>& subset) {
    if (!frame) {
      checks.add("frame input present for partition witness", false);
      return;
    }
    const std::size_t m = frame->size();
    const std::size_t n = frame->dim();
    bool in_range = !subset.empty() && subset.size() < m;
    for (std::size_t i : subset) in_range = in_range && i < m;
    checks.add("partition indices are in range", in_range);
    if (!in_range) return;
    const Matrix& syn = frame->synthesis_matrix();
    const double scale = syn.max_abs();
    auto spans = [&](const std::vector<std::size_t>& idx) {
      return idx.size() >= n && rank(syn.select_columns(idx), tol, scale) == n;
    };
    checks.add("subset side does not span", !spans(subset));
    checks.add("complementary side does not span", !spans(partition_complement(m, subset)));
  };
  auto identity_residual = [&](const Vector& a) {
    const SubspaceFamily ff = family->to_float();
    const std::size_t n = ff.ambient_dim();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < ff.size(); ++i) {
      sum += a.float_at(i) * ff.member(i).projection().to_eigen();
    }
    return (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  };
  auto check_coefficients = [&](bool require_sum_away_from_one) {
    if (!cert.coefficients || !family) {
      checks.add("coefficients and family input present", false);
      return;
    }
    if (cert.coefficients->dim() != family->size()) {
      checks.add("one coefficient per member", false);
      return;
    }
    checks.add("coefficients reproduce the identity",
               identity_residual(*cert.coefficients) <= std::max(tol.witness_tol, 1e-9));
    if (require_sum_away_from_one) {
      double s = 0.0;
      for (std::size_t i = 0; i < cert.coefficients->dim(); ++i) {
        s += cert.coefficients->float_at(i);
      }
      checks.add("coefficient sum differs from 1", std::abs(s - 1.0) > tol.witness_tol);
    }
  };

  switch (cert.method) {
    case Method::FrameBounds: {
      if (!frame) {
        checks.add("frame input present", false);
        break;
      }
      const FrameReport r = frame_report(*frame, tol);
      checks.add("frame property matches the verdict", r.is_frame == cert.yes());
      break;
    }
    case Method::SparkEnumeration: {
      if (!frame) {
        checks.add("frame input present", false);
        break;
      }
      checks.add("spark value present", cert.value.has_value());
      if (!cert.value) break;
      checks.add("spark value in range", *cert.value >= 1 && *cert.value <= frame->size() + 1);
      if (cert.subset) {
        bool in_range = true;
        for (std::size_t i : *cert.subset) in_range = in_range && i < frame->size();
        checks.add("subset indices are in range", in_range);
        checks.add("subset size equals the spark", cert.subset->size() == *cert.value);
        if (in_range && !cert.subset->empty()) {
          const Matrix& syn = frame->synthesis_matrix();
          checks.add("subset is dependent",
                     rank(syn.select_columns(*cert.subset), tol, syn.max_abs()) <
                         cert.subset->size());
        }
      } else {
        checks.note("minimality",
                    "no dependent subset exists to spot-check; the value came from full "
                    "enumeration");
      }
      break;
    }
    case Method::ComplementProperty:
    case Method::CountBound: {
      if (cert.no()) {
        if (cert.subset) {
          check_partition(*cert.subset);
        } else {
          checks.add("violating partition present", false);
        }
        if (cert.pair) check_frame_pair(*cert.pair);
      } else {
        checks.note("enumeration",
                    "YES verdicts summarize an exhaustive enumeration; no succinct witness "
                    "exists to spot-check");
      }
      break;
    }
    case Method::GramComplement: {
      if (!frame) {
        checks.add("frame input present", false);
        break;
      }
      checks.add("complement frame present", witness.contains("complement"));
      if (witness.contains("complement")) {
        NaimarkPair pair{frame->to_float(), frame_from_json(witness.at("complement"))};
        checks.add("gram matrices sum to the identity", verify_naimark_pair(pair, tol));
      }
      break;
    }
    case Method::IdentityInSpan: {
      check_coefficients(false);
      break;
    }
    case Method::IdentityCoefficientSum: {
      check_coefficients(true);
      break;
    }
    case Method::Orthogonality:
    case Method::SumProjectionsIdentity:
    case Method::SpanDeficit:
    case Method::GradientSearch: {
      if (cert.no()) {
        if (cert.pair) {
          check_family_pair(*cert.pair);
        } else {
          checks.add("witness pair present", false);
        }
      } else if (cert.yes() && family) {
        Vector ones(family->size(), Field::Float);
        for (std::size_t i = 0; i < family->size(); ++i) ones.set(i, Scalar(1.0));
        checks.add("projections sum to the identity",
                   identity_residual(ones) <= std::max(tol.witness_tol, 1e-9));
      } else {
        checks.note("witness", "nothing checkable for this verdict");
      }
      break;
    }
    case Method::SearchExhausted:
    case Method::Undecided: {
      checks.note("no claim", "UNKNOWN certificates assert nothing checkable");
      break;
    }
    default: {
      if (cert.pair && frame) {
        check_frame_pair(*cert.pair);
      } else if (cert.pair && family) {
        check_family_pair(*cert.pair);
      } else {
        checks.note("method", "no independent witness check implemented for this method");
      }
      break;
    }
  }

  // Equivalence-suite payload: replay the transformed frame and its pair.
  if (witness.contains("operator") && witness.contains("transformed_pair") && frame) {
    Field opf = Field::Float;
    if (witness.contains("operator_field") && witness.at("operator_field").is_string()) {
      opf = field_from_name(witness.at("operator_field").get<std::string>());
    }
    const Matrix op_matrix = matrix_from_json(witness.at("operator"), opf).to_float();
    const InvertibleOperator op = InvertibleOperator::from_matrix(op_matrix, tol);
    const Frame transformed = apply_operator(frame->to_float(), op);
    const WitnessPair tp = witness_pair_from_json(witness.at("transformed_pair"));
    const WitnessPair re = make_frame_witness(transformed, tp.x.to_float(), tp.y.to_float());
    checks.add("transformed pair measurements agree within tol",
               re.measurement_gap <= tol.witness_tol);
    checks.add("transformed pair differs beyond a global sign", re.phase_gap >= norm_floor);
  }

  Json rep = Json::object();
  rep["verified"] = checks.passed;
  rep["verdict"] = verdict_name(cert.verdict);
  rep["method"] = method_name(cert.method);
  rep["checks"] = checks.checks;
  rep["inputs_digest"] = recomputed;
  rep["tool_version"] = kToolVersion;
  out << rep.dump(2) << "\n";
  return checks.passed ? kExitYes : kExitNo;
}

}  // namespace

// ===========================================================================
// argument parsing
// ===========================================================================

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certification toolkit for phase and norm retrieval over frames and projection "
               "families"};
  app.require_subcommand(1);

  CommonOpts o;
  std::size_t trials = 50;
  std::size_t restarts = 64;
  std::size_t iters = 2000;
  std::size_t pop_n = 0;
  std::size_t pop_m = 0;
  std::string example_name;
  std::string cert_path;

  auto add_common = [&o](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", o.input_path, "input JSON file")->required();
    sub->add_option("--tol", o.tol, "witness tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed (default 0)");
    sub->add_option("--max-m", o.max_m, "subset enumeration cap (default 24)");
    CLI::Option* ex = sub->add_flag("--exact", o.to_exact, "convert the input to exact rationals");
    CLI::Option* fl = sub->add_flag("--float", o.to_float, "convert the input to floats");
    ex->excludes(fl);
    fl->excludes(ex);
  };

  CLI::App* c_report = app.add_subcommand("report", "frame bounds and basic properties");
  add_common(c_report, true);
  CLI::App* c_spark = app.add_subcommand("spark", "spark of a vector frame by enumeration");
  add_common(c_spark, true);
  CLI::App* c_cp = app.add_subcommand("cp", "complement property of a vector frame");
  add_common(c_cp, true);
  CLI::App* c_pr = app.add_subcommand("pr-vectors", "phase retrieval decision for a frame");
  add_common(c_pr, true);
  CLI::App* c_prf =
      app.add_subcommand("pr-falsify", "phase retrieval counterexample for a frame");
  add_common(c_prf, true);
  CLI::App* c_naimark = app.add_subcommand("naimark", "Naimark complement of a Parseval frame");
  add_common(c_naimark, true);
  CLI::App* c_nr = app.add_subcommand("nr-cert", "norm retrieval decision for a family");
  add_common(c_nr, true);
  CLI::App* c_nrf =
      app.add_subcommand("nr-falsify", "randomized norm retrieval violation search");
  add_common(c_nrf, true);
  c_nrf->add_option("--restarts", restarts, "search restarts (default 64)");
  c_nrf->add_option("--iters", iters, "iterations per restart (default 2000)");
  CLI::App* c_abc =
      app.add_subcommand("abc-suite", "invariance of the decision under invertible operators");
  add_common(c_abc, true);
  c_abc->add_option("--trials", trials, "random operators to test (default 50)");
  CLI::App* c_pop = app.add_subcommand("pop-family", "generic rank-one projection family");
  c_pop->add_option("n", pop_n, "ambient dimension")->required();
  c_pop->add_option("m", pop_m, "number of members")->required();
  add_common(c_pop, false);
  CLI::App* c_example = app.add_subcommand("example", "named example constructions");
  c_example
      ->add_option("name", example_name,
                   "duplicate-vector | free-measurement | pop-generic | naimark-bounds")
      ->required();
  add_common(c_example, false);
  CLI::App* c_verify = app.add_subcommand("verify", "re-check a certificate against its input");
  c_verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  c_verify->add_option("--input", o.input_path, "input file the certificate refers to")
      ->required();
  c_verify->add_option("--tol", o.tol, "witness tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*c_report) return run_report(o, out);
    if (*c_spark) return run_spark(o, out);
    if (*c_cp) return run_cp(o, out);
    if (*c_pr || *c_prf) return run_pr_vectors(o, out);
    if (*c_naimark) return run_naimark(o, out);
    if (*c_nr) return run_nr_cert(o, out);
    if (*c_nrf) return run_nr_falsify(o, restarts, iters, out);
    if (*c_abc) return run_abc_suite(o, trials, out);
    if (*c_pop) return run_pop_family(pop_n, pop_m, o, out);
    if (*c_example) return run_example(example_name, o, out);
    if (*c_verify) return run_verify(cert_path, o, out);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitBadInput;
  }
  err << "usage error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace framecert
