#include "poincare/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "poincare/algebra.hpp"
#include "poincare/error.hpp"
#include "poincare/netconics.hpp"

namespace poincare {
namespace {

Integer choose2(std::size_t n) { return Integer(static_cast<long>(n * (n - 1) / 2)); }

std::vector<Integer> to_integers(const std::vector<std::uint64_t>& v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

struct Candidate {
  std::string label;
  RationalFunction formula;
};

void add_candidate(std::vector<Candidate>& out, const FormulaParams& f) {
  out.push_back({catalog_label(f), catalog_formula(f)});
}

bool is_h1331(const AlgebraInvariants& inv) {
  return inv.hilbert.size() == 4 && inv.hilbert[2] == 3 && inv.hilbert[3] == 1 && inv.gorenstein;
}

bool is_stretched_shape(const AlgebraInvariants& inv) {
  if (!inv.gorenstein || inv.hilbert.size() < 3) return false;
  for (std::size_t t = 3; t < inv.hilbert.size(); ++t) {
    if (inv.hilbert[t] != 1) return false;
  }
  return inv.hilbert[2] <= 2;
}

// Catalog entries whose hypotheses the algebra satisfies. `printed_t` is the
// family index when known; `pipeline_base` the n = 3 generator count eps0.
std::vector<Candidate> applicable_candidates(const AlgebraInvariants& inv, std::size_t mu,
                                             std::optional<unsigned> printed_t,
                                             std::optional<std::size_t> pipeline_base,
                                             std::vector<std::string>& notes) {
  std::vector<Candidate> out;
  const std::size_t n = inv.emdim;
  if (n == 0) return out;
  FormulaParams f;
  f.entry = CatalogEntry::CompleteIntersection;
  f.n = n;
  add_candidate(out, f);
  if (inv.gorenstein && n == 3 && mu >= 3) {
    f = {};
    f.entry = CatalogEntry::Codim3Gorenstein;
    f.epsilon = mu;
    add_candidate(out, f);
  }
  if (inv.gorenstein && n == 4 && mu >= 1) {
    for (unsigned v = 1; v <= 3; ++v) {
      f = {};
      f.entry = CatalogEntry::Codim4Gorenstein;
      f.epsilon = mu;
      f.variant = v;
      if (v < 3) {
        add_candidate(out, f);
        continue;
      }
      for (std::size_t p = 1; p <= mu; ++p) {
        f.p = p;
        add_candidate(out, f);
      }
    }
  }
  if (n >= 2 && is_stretched_shape(inv)) {
    f = {};
    f.entry = CatalogEntry::StretchedGorenstein;
    f.n = n;
    add_candidate(out, f);
  }
  if (is_h1331(inv) && n >= 3) {
    f = {};
    f.entry = CatalogEntry::H1331Printed;
    f.n = n;
    for (unsigned t : printed_t ? std::vector<unsigned>{*printed_t} : std::vector<unsigned>{1, 4}) {
      f.t = t;
      add_candidate(out, f);
    }
    if (pipeline_base) {
      f.entry = CatalogEntry::H1331Pipeline;
      f.base_epsilon = *pipeline_base;
      add_candidate(out, f);
    } else {
      notes.push_back("no n = 3 base available for the pipeline form");
    }
  }
  return out;
}

std::optional<std::size_t> first_difference(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

std::optional<RationalFunction> catalog_base(std::size_t eps0) {
  if (eps0 < 3) return std::nullopt;
  FormulaParams f;
  if (eps0 == 3) {
    f.entry = CatalogEntry::CompleteIntersection;
    f.n = 3;
  } else {
    f.entry = CatalogEntry::Codim3Gorenstein;
    f.epsilon = eps0;
  }
  return catalog_formula(f);
}

VerificationReport build_report(const IdealPresentation& p, std::size_t max_step, ResolutionOptions options,
                                const std::string& source, std::optional<unsigned> printed_t,
                                std::optional<std::size_t> base, std::vector<std::string> notes) {
  if (max_step < 2) throw InputError("verify needs --max-step >= 2");
  const LocalAlgebra a = build_quotient_algebra(p);
  const AlgebraInvariants inv = algebra_invariants(a);
  const std::size_t mu = minimal_generator_count(p);
  const BettiResult res = betti_numbers(a, max_step, options);

  VerificationReport r;
  r.source = source;
  r.n = inv.emdim;
  r.field = a.field();
  r.betti = res.betti;
  r.epsilon_from_betti = Integer(res.betti[2]) - choose2(inv.emdim);
  r.epsilon_from_generators = mu;
  r.epsilon_agree = r.epsilon_from_betti == Integer(mu);
  r.notes = std::move(notes);
  if (!r.epsilon_agree) r.notes.push_back("b2 - C(n,2) disagrees with the minimal generator count");

  if (!base && is_h1331(inv) && inv.emdim >= 3) {
    // eps = eps0 + (n-3)(n+4)/2 along the pipeline.
    const std::size_t m = inv.emdim - 3;
    const std::size_t shift = m * (m + 7) / 2;
    if (mu >= shift + 3) base = mu - shift;
  }

  const std::vector<Integer> betti = to_integers(res.betti);
  const auto candidates = applicable_candidates(inv, mu, printed_t, base, r.notes);
  std::optional<std::size_t> printed_index;
  std::optional<std::size_t> pipeline_index;
  for (const auto& c : candidates) {
    auto same = std::find_if(r.candidates.begin(), r.candidates.end(),
                             [&](const CandidateVerdict& v) { return v.formula == c.formula; });
    if (same == r.candidates.end()) {
      CandidateVerdict v;
      v.formula = c.formula;
      v.expansion = expand_rational(c.formula, max_step).coefficients;
      v.first_divergence = first_difference(v.expansion, betti);
      v.match = !v.first_divergence;
      r.candidates.push_back(std::move(v));
      same = std::prev(r.candidates.end());
    }
    same->labels.push_back(c.label);
    const auto idx = static_cast<std::size_t>(same - r.candidates.begin());
    if (c.label.rfind("h1331-printed", 0) == 0 && !printed_index) printed_index = idx;
    if (c.label.rfind("h1331-pipeline", 0) == 0) pipeline_index = idx;
  }

  if (printed_index && pipeline_index && *printed_index != *pipeline_index && printed_t) {
    const auto& pr = r.candidates[*printed_index];
    const auto& pl = r.candidates[*pipeline_index];
    const std::size_t far = max_step + 16;
    const auto pe = expand_rational(pr.formula, far).coefficients;
    const auto qe = expand_rational(pl.formula, far).coefficients;
    const auto k = first_difference(pe, qe);
    std::ostringstream s;
    if (!k) {
      s << "printed and pipeline forms agree through b_" << far;
    } else if (*k > max_step) {
      s << "printed and pipeline forms first differ at b_" << *k << " (" << pe[*k] << " vs " << qe[*k]
        << "), beyond the computed prefix";
    } else {
      s << "printed and pipeline forms first differ at b_" << *k << ": printed " << pe[*k] << ", pipeline "
        << qe[*k] << "; resolution gives " << betti[*k] << ", confirming ";
      if (pr.match) {
        s << "the printed form";
      } else if (pl.match) {
        s << "the pipeline form";
      } else {
        s << "neither";
      }
    }
    r.adjudication = s.str();
  }
  return r;
}

// -- command plumbing -------------------------------------------------------

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw InputError("empty entry in CSV list \"" + text + "\"");
    out.push_back(item);
  }
  if (out.empty()) throw InputError("empty CSV list");
  return out;
}

IntPolynomial parse_int_csv(const std::string& text) {
  IntPolynomial out;
  for (const auto& s : split_csv(text)) {
    try {
      out.push_back(Integer::parse(s));
    } catch (const Error&) {
      throw InputError("bad integer \"" + s + "\" in CSV list");
    }
  }
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

unsigned family_index(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::I1: return 1;
    case FamilyTag::I2: return 2;
    case FamilyTag::I3: return 3;
    case FamilyTag::I4: return 4;
    case FamilyTag::I5: return 5;
    case FamilyTag::I6: return 6;
    default: return 0;
  }
}

Field family_field(const std::string& selector) {
  const Field f = Field::parse_selector(selector);
  if (!f.is_rational() && f.characteristic() < 5) throw InputError("family commands need a prime >= 5");
  return f;
}

}  // namespace

bool VerificationReport::any_match() const {
  return std::any_of(candidates.begin(), candidates.end(), [](const CandidateVerdict& c) { return c.match; });
}

bool VerificationReport::success() const { return any_match() && epsilon_agree; }

std::vector<std::string> VerificationReport::matched_labels() const {
  std::vector<std::string> out;
  for (const auto& c : candidates) {
    if (c.match) out.insert(out.end(), c.labels.begin(), c.labels.end());
  }
  return out;
}

VerificationReport verify_family(const FamilySpec& spec, std::size_t max_step, ResolutionOptions options) {
  const IdealPresentation p = family_ideal(spec);
  std::optional<unsigned> t;
  std::optional<std::size_t> base;
  std::vector<std::string> notes;
  if (is_h1331_family(spec.tag)) {
    t = family_index(spec.tag);
    FamilySpec at3 = spec;
    at3.n = 3;
    const IdealPresentation p3 = family_ideal(at3);
    const LocalAlgebra a3 = build_quotient_algebra(p3);
    const std::size_t eps0 = minimal_generator_count(p3);
    const auto candidate = catalog_base(eps0);
    const std::size_t probe = std::min<std::size_t>(max_step, 6);
    const auto measured = to_integers(betti_numbers(a3, probe, options).betti);
    if (candidate && expand_rational(*candidate, probe).coefficients == measured) {
      base = eps0;
    } else {
      notes.push_back("the n = 3 member does not follow its codim-3 catalog form");
    }
  }
  return build_report(p, max_step, options, family_name(spec.tag), t, base, std::move(notes));
}

VerificationReport verify_presentation(const IdealPresentation& p, std::size_t max_step, ResolutionOptions options,
                                       const std::string& source) {
  return build_report(p, max_step, options, source, std::nullopt, std::nullopt, {});
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["source"] = r.source;
  j["n"] = r.n;
  j["field"] = r.field.name();
  j["betti"] = r.betti;
  j["steps"] = r.betti.empty() ? 0 : r.betti.size() - 1;
  j["epsilon"] = {{"from_betti", integer_to_json(r.epsilon_from_betti)},
                  {"from_generators", r.epsilon_from_generators},
                  {"agree", r.epsilon_agree}};
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json e;
    e["labels"] = c.labels;
    e["formula"] = rational_to_json(c.formula);
    Json ex = Json::array();
    for (const auto& x : c.expansion) ex.push_back(integer_to_json(x));
    e["expansion"] = ex;
    e["match"] = c.match;
    e["first_divergence"] = c.first_divergence ? Json(*c.first_divergence) : Json(nullptr);
    cands.push_back(e);
  }
  j["candidates"] = cands;
  j["matched"] = r.matched_labels();
  j["adjudication"] = r.adjudication ? Json(*r.adjudication) : Json(nullptr);
  j["notes"] = r.notes;
  j["status"] = r.success() ? "match" : "mismatch";
  return j;
}

CommandResult execute(const std::vector<std::string>& args) {
  CLI::App app{"Betti numbers and Poincare series of local Artinian algebras", "poincare"};
  app.require_subcommand(1);

  std::string name;
  std::size_t n = 0;
  long alpha = 0;
  int pflag = -1;
  std::string exponents_csv;
  unsigned socle_degree = 3;
  auto* family = app.add_subcommand("family", "emit the presentation of a named family");
  family->add_option("--name", name, "family name")
      ->required()
      ->check(CLI::IsMember({"I1", "I2", "I3", "I4", "I5", "I6", "CI", "stretched", "almost-stretched"}));
  family->add_option("--n", n, "number of variables")->required();
  auto* alpha_opt = family->add_option("--alpha", alpha, "constant alpha of I1");
  auto* p_opt = family->add_option("--p", pflag, "p of I_{3-p}")->check(CLI::IsMember({0, 1}));
  auto* exp_opt = family->add_option("--exponents", exponents_csv, "complete intersection exponents");
  auto* socle_opt = family->add_option("--socle-degree", socle_degree, "socle degree of stretched algebras");

  std::string file;
  std::size_t max_step = 0;
  std::string field_sel = "Q";
  auto* invariants = app.add_subcommand("invariants", "length, Hilbert function, socle and generator count");
  invariants->add_option("file", file, "presentation JSON")->required();

  auto* betti = app.add_subcommand("betti", "Betti numbers of the residue field");
  betti->add_option("file", file, "presentation JSON")->required();
  betti->add_option("--max-step", max_step, "last homological degree")->required();
  betti->add_option("--field", field_sel, "Q or p:PRIME");

  std::size_t num_deg = 0;
  std::size_t den_deg = 0;
  auto* fit = app.add_subcommand("fit", "fit a rational function to the Betti numbers");
  fit->add_option("file", file, "presentation JSON")->required();
  fit->add_option("--max-step", max_step, "last homological degree")->required();
  fit->add_option("--num-deg", num_deg, "numerator degree bound")->required();
  fit->add_option("--den-deg", den_deg, "denominator degree bound")->required();

  std::string verify_family_name;
  auto* verify = app.add_subcommand("verify", "compare the Betti numbers with the formula catalog");
  auto* vfile = verify->add_option("file", file, "presentation JSON");
  auto* vfam = verify->add_option("--family", verify_family_name, "family name")
                   ->check(CLI::IsMember({"I1", "I2", "I3", "I4", "I5", "I6", "CI", "stretched", "almost-stretched"}));
  auto* vn = verify->add_option("--n", n, "number of variables");
  verify->add_option("--max-step", max_step, "last homological degree")->required();
  verify->add_option("--field", field_sel, "Q or p:PRIME");
  vfam->excludes(vfile);
  vfile->excludes(vfam);
  vn->needs(vfam);

  std::uint64_t seed = 1;
  auto* netclass = app.add_subcommand("netclass", "classify the net of conics of an H = (1,n,3,1) algebra");
  netclass->add_option("file", file, "presentation JSON")->required();
  netclass->add_option("--seed", seed, "search seed");

  std::string num_csv;
  std::string den_csv;
  std::size_t order = 0;
  auto* series = app.add_subcommand("series", "rational function utilities");
  series->require_subcommand(1);
  auto* expand = series->add_subcommand("expand", "power series coefficients of num/den");
  expand->add_option("--num", num_csv, "numerator coefficients")->required();
  expand->add_option("--den", den_csv, "denominator coefficients")->required();
  expand->add_option("--order", order, "last coefficient index")->required();

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = 2;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  try {
    if (family->parsed()) {
      FamilySpec spec;
      spec.tag = parse_family_tag(name);
      spec.n = n;
      if (alpha_opt->count() && spec.tag != FamilyTag::I1) throw InputError("--alpha only applies to I1");
      if (p_opt->count() && spec.tag != FamilyTag::I2 && spec.tag != FamilyTag::I3) {
        throw InputError("--p only applies to I2 and I3");
      }
      if (exp_opt->count() && spec.tag != FamilyTag::CI) throw InputError("--exponents only applies to CI");
      if (socle_opt->count() && spec.tag != FamilyTag::Stretched && spec.tag != FamilyTag::AlmostStretched) {
        throw InputError("--socle-degree only applies to stretched and almost-stretched");
      }
      spec.alpha = alpha;
      spec.p = pflag;
      spec.socle_degree = socle_degree;
      if (exp_opt->count()) {
        for (const auto& s : split_csv(exponents_csv)) {
          try {
            const long e = std::stol(s);
            if (e < 2) throw InputError("complete intersection exponents must be >= 2");
            spec.exponents.push_back(static_cast<unsigned>(e));
          } catch (const std::logic_error&) {
            throw InputError("bad exponent \"" + s + "\"");
          }
        }
        if (spec.exponents.size() != n) throw InputError("--exponents must list exactly n values");
      }
      result.out = dump(presentation_to_json(family_ideal(spec)));
    } else if (invariants->parsed()) {
      const IdealPresentation p = load_presentation(file);
      const LocalAlgebra a = build_quotient_algebra(p);
      result.out = dump(invariants_to_json(a, algebra_invariants(a), minimal_generator_count(p)));
    } else if (betti->parsed()) {
      IdealPresentation p = load_presentation(file);
      if (betti->count("--field")) p.field = Field::parse_selector(field_sel);
      result.out = dump(betti_to_json(betti_numbers(build_quotient_algebra(p), max_step)));
    } else if (fit->parsed()) {
      const IdealPresentation p = load_presentation(file);
      const BettiResult r = betti_numbers(build_quotient_algebra(p), max_step);
      const auto f = fit_rational(TruncatedSeries{to_integers(r.betti)}, num_deg, den_deg);
      if (f) {
        result.out = dump(rational_to_json(*f));
      } else {
        result.out = dump(Json{{"num", nullptr}, {"den", nullptr}});
        result.err = "no rational function within the degree bounds matches the Betti numbers\n";
        result.status = 1;
      }
    } else if (verify->parsed()) {
      VerificationReport r;
      if (vfam->count() && vfile->count()) throw InputError("verify takes either a presentation file or --family, not both");
      if (vfam->count()) {
        if (!vn->count()) throw InputError("verify --family needs --n");
        FamilySpec spec;
        spec.tag = parse_family_tag(verify_family_name);
        spec.n = n;
        spec.field = family_field(field_sel);
        r = verify_family(spec, max_step);
      } else if (vfile->count()) {
        IdealPresentation p = load_presentation(file);
        if (verify->count("--field")) p.field = Field::parse_selector(field_sel);
        r = verify_presentation(p, max_step, {}, file);
      } else {
        throw InputError("verify needs --family NAME --n INT or a presentation file");
      }
      result.out = dump(report_to_json(r));
      if (!r.success()) result.status = 1;
    } else if (netclass->parsed()) {
      const IdealPresentation p = load_presentation(file);
      SquareSearchOptions opts;
      opts.seed = seed;
      result.out = dump(netclass_to_json(classify_net(build_quotient_algebra(p), opts)));
    } else if (expand->parsed()) {
      const RationalFunction f(parse_int_csv(num_csv), parse_int_csv(den_csv));
      const TruncatedSeries s = expand_rational(f, order);
      Json j = rational_to_json(f);
      Json coeffs = Json::array();
      for (const auto& c : s.coefficients) coeffs.push_back(integer_to_json(c));
      j["coefficients"] = coeffs;
      result.out = dump(j);
    }
  } catch (const InputError& e) {
    result = {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ResourceLimit& e) {
    std::string partial;
    for (auto b : e.partial_betti()) partial += (partial.empty() ? "" : ",") + std::to_string(b);
    result = {3, "", std::string("resource limit: ") + e.what() + " (exact prefix " + partial + ")\n"};
  } catch (const std::exception& e) {
    result = {3, "", std::string("failure: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace poincare
