#pragma once

// The end-to-end verification suite driven by a ring file's "verify" plan.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/ideal.hpp"
#include "f2coh/morphism.hpp"
#include "f2coh/quotient_ring.hpp"
#include "f2coh/report.hpp"
#include "f2coh/ringfile.hpp"
#include "f2coh/series.hpp"
#include "f2coh/spectral.hpp"
#include "f2coh/steenrod.hpp"

namespace f2coh {

inline SeriesComparison matches_form(const Coefficients& c, const RationalForm& f, int up_to) {
  return compare_coefficients(c, f.expand(up_to), up_to);
}

inline std::string mismatch_text(const SeriesComparison& cmp, const Coefficients& got,
                                 const Coefficients& want) {
  if (cmp.equal) return "";
  const auto d = static_cast<std::size_t>(*cmp.first_mismatch);
  return "first mismatch at degree " + std::to_string(d) + ": got " + std::to_string(got[d]) +
         ", expected " + std::to_string(want[d]);
}

struct SerrePageResult {
  int page = 0;  // page reached after the differential
  std::string transgression;
  std::string image;
  Coefficients series;
  std::optional<RationalForm> expected;
  SeriesComparison match;
};

struct SerreRun {
  std::vector<SerrePageResult> pages;
  bool permanent = false;
  std::string permanence_note;
  std::optional<HilbertSeries> total;
};

inline SerreRun run_serre_script(const RingFile& file, std::optional<int> truncation = std::nullopt) {
  if (!file.serre()) throw ValidationError("ring file has no 'serre' script");
  const SerreScript& script = *file.serre();
  auto state = serre_start(file.ring(script.base, truncation));
  const int top = state.base->truncation();
  SerreRun run;
  std::size_t k = 0;
  for (const auto& step : script.steps) {
    if (step.permanent) {
      state = state.made_permanent();
      run.permanent = true;
      run.permanence_note = step.note;
      run.total = serre_total(state);
      break;
    }
    const Polynomial v = file.resolve(script.base, step.value);
    SerrePageResult page;
    page.page = state.page() + 1;
    page.transgression = file.describe(step.value);
    page.image = to_string(v);
    state = serre_step(state.with_transgression(v));
    page.series = page_series(state);
    if (k < script.pages.size()) {
      page.expected = script.pages[k];
      page.match = matches_form(page.series, *page.expected, top);
    }
    run.pages.push_back(std::move(page));
    ++k;
  }
  return run;
}

struct VerifyOptions {
  /// Overrides the file's truncation for every ring except explicit
  /// per-check bounds.
  std::optional<int> truncation;
};

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

/// Runs one check; library errors become failures, input errors propagate.
inline void guarded(Report& report, const std::string& name, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    report.add(name, false, e.what());
  }
}

}  // namespace detail

class Verifier {
 public:
  Verifier(const RingFile& file, VerifyOptions options) : file_(file), options_(options) {}

  Report run(const std::string& origin) {
    report_.title = "verify: " + origin;
    const Json& plan = file_.document().contains("verify") ? file_.document()["verify"] : Json::object();
    file_check();
    if (plan.contains("relation_variants")) relation_variants(plan["relation_variants"]);
    if (plan.contains("presentation")) presentation(plan["presentation"]);
    if (plan.contains("q_identities")) q_identities(plan["q_identities"]);
    if (plan.contains("composite_squares")) composite_squares(plan["composite_squares"]);
    if (plan.contains("regular_sequence")) regular_sequence(plan["regular_sequence"]);
    if (file_.serre()) serre();
    if (plan.contains("morphism")) morphism(plan["morphism"]);
    if (plan.contains("nilradical")) nilradical(plan["nilradical"]);
    if (plan.contains("nilpotency")) nilpotency(plan["nilpotency"]);
    derivation_axioms();
    if (plan.contains("q_cohomology")) q_cohomology_checks(plan["q_cohomology"]);
    if (plan.contains("exact_sequences")) exact_sequences(plan["exact_sequences"]);
    if (plan.contains("bockstein")) bockstein(plan["bockstein"]);
    return std::move(report_);
  }

 private:
  std::optional<int> bound() const { return options_.truncation; }
  int top(const std::string& ring) const { return file_.ring(ring, bound())->truncation(); }

  static std::string str(const Json& j, const char* key, const std::string& path) {
    return detail::with_context(path + "." + key, [&] { return detail::required(j, key, path).get<std::string>(); });
  }

  void file_check() {
    OrderedJson p;
    p["rings"] = file_.ring_names();
    p["derivations"] = file_.derivation_names();
    p["morphisms"] = file_.morphism_names();
    report_.add("ring file", true,
                std::to_string(file_.ring_names().size()) + " rings, " +
                    std::to_string(file_.derivation_names().size()) + " derivations, " +
                    std::to_string(file_.morphism_names().size()) + " morphisms parsed and validated",
                p);
  }

  void relation_variants(const Json& list) {
    for (const auto& v : list) {
      const std::string ring = str(v, "ring", "verify.relation_variants");
      const std::string rel = str(v, "relation", "verify.relation_variants");
      const std::string variant = str(v, "variant", "verify.relation_variants");
      const std::string name = "relation variant for " + rel + " in " + ring;
      const auto& def = file_.definition(ring);
      Polynomial p = detail::with_context("verify.relation_variants", [&] { return parse_polynomial(variant, def.table); });
      OrderedJson payload;
      payload["variant"] = variant;
      payload["used"] = to_string(file_.element(ring, rel));
      std::vector<int> degrees;
      for (const auto& m : p.terms())
        if (std::find(degrees.begin(), degrees.end(), m.degree) == degrees.end()) degrees.push_back(m.degree);
      payload["variant_degrees"] = degrees;
      if (p.is_homogeneous()) {
        report_.add(name, false, "variant '" + variant + "' is homogeneous; the choice is not forced", payload);
      } else {
        Check& c = report_.add(name, true, "variant '" + variant + "' rejected as inhomogeneous", payload);
        c.status = CheckStatus::kAssumed;
        c.note = v.value("note", "");
      }
    }
  }

  void presentation(const Json& j) {
    const std::string ring = str(j, "ring", "verify.presentation");
    const std::string name = "presentation series " + ring;
    detail::guarded(report_, name, [&] {
      const auto& def = file_.definition(ring);
      if (!def.series) throw ValidationError("verify.presentation: ring '" + ring + "' declares no series");
      const auto h = hilbert(*file_.ring(ring, bound()));
      const int d = h.truncation();
      const auto want = def.series->expand(d);
      const auto cmp = compare_coefficients(h.coefficients, want, d);
      OrderedJson p;
      p["coefficients"] = h.coefficients;
      p["rational_form"] = def.series->to_string();
      report_.add(name, cmp.equal,
                  cmp.equal ? "degrees 0.." + std::to_string(d) + " equal " + def.series->to_string()
                            : mismatch_text(cmp, h.coefficients, want),
                  p);
    });
  }

  void q_identities(const Json& j) {
    const std::string ring = str(j, "ring", "verify.q_identities");
    for (const auto& c : detail::required(j, "checks", "verify.q_identities")) {
      const Json& lhs = detail::required(c, "lhs", "verify.q_identities.checks");
      const Json& rhs = detail::required(c, "rhs", "verify.q_identities.checks");
      std::vector<std::string> mod_names;
      if (c.contains("modulo"))
        for (const auto& m : c["modulo"]) mod_names.push_back(file_.describe(m));
      std::string name = "identity " + file_.describe(lhs) + " = " + file_.describe(rhs);
      if (!mod_names.empty()) name += " mod (" + detail::join(mod_names, ", ") + ")";
      detail::guarded(report_, name, [&] {
        const Polynomial l = file_.resolve(ring, lhs);
        const Polynomial r = file_.resolve(ring, rhs);
        OrderedJson p;
        p["lhs"] = to_string(l);
        p["rhs"] = to_string(r);
        if (!c.contains("modulo")) {
          report_.add(name, l == r, l == r ? "exact equality" : "difference " + to_string(l + r), p);
          return;
        }
        RingPresentation pres{file_.definition(ring).table, {}, top(ring)};
        for (const auto& m : c["modulo"]) pres.relations.push_back(file_.resolve(ring, m));
        const QuotientRing q(std::move(pres));
        const Polynomial residue = q.normal_form(l + r);
        p["residue"] = to_string(residue);
        report_.add(name, residue.is_zero(),
                    residue.is_zero() ? "difference lies in the ideal" : "residue " + to_string(residue), p);
      });
    }
  }

  void composite_squares(const Json& j) {
    const std::string ring = str(j, "ring", "verify.composite_squares");
    const auto& def = file_.definition(ring);
    if (!def.steenrod) throw ValidationError("verify.composite_squares: ring '" + ring + "' has no Steenrod table");
    const std::vector<int> ks = detail::with_context("verify.composite_squares.k", [&] { return j.at("k").get<std::vector<int>>(); });
    const auto basis = monomial_basis(*def.table, 2);
    if (basis.size() > 16) throw ValidationError("verify.composite_squares: degree-2 space too large to enumerate");
    for (int k : ks) {
      const std::string name = "composite squares k=" + std::to_string(k) + " on degree 2 of " + ring;
      detail::guarded(report_, name, [&] {
        std::size_t checked = 0;
        std::vector<std::string> failures;
        for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
          std::vector<Monomial> terms;
          for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask & (std::size_t{1} << i)) terms.push_back(basis[i]);
          const Polynomial x = Polynomial::from_terms(def.table, terms);
          ++checked;
          if (!composite_square_identity(*def.steenrod, x, k)) failures.push_back(to_string(x));
        }
        OrderedJson p;
        p["elements"] = checked;
        p["failures"] = failures;
        report_.add(name, failures.empty(),
                    std::to_string(checked) + " elements, " + std::to_string(failures.size()) + " disagreements", p);
      });
    }
  }

  void regular_sequence(const Json& j) {
    const std::string ring = str(j, "ring", "verify.regular_sequence");
    const Json& seq = detail::required(j, "sequence", "verify.regular_sequence");
    auto current = file_.ring(ring, bound());
    std::vector<std::string> prefix;
    for (const auto& ref : seq) {
      const std::string label = file_.describe(ref);
      const std::string over = prefix.empty() ? ring : ring + "/(" + detail::join(prefix, ", ") + ")";
      const std::string name = "non-zero-divisor " + label + " on " + over;
      detail::guarded(report_, name, [&] {
        const Polynomial f = file_.resolve(ring, ref);
        const auto v = is_nonzerodivisor(f, *current, NzdMethod::kRank);
        OrderedJson p;
        p["degrees_checked"] = v.per_degree.size();
        if (v.first_failure) p["first_failure"] = *v.first_failure;
        report_.add(name, v.all(),
                    v.all() ? "injective in degrees 0.." + std::to_string(v.per_degree.size() - 1)
                            : "not injective from degree " + std::to_string(*v.first_failure),
                    p);
        current = std::make_shared<const QuotientRing>(current->with_relation(f));
      });
      prefix.push_back(label);
    }
  }

  void serre() {
    detail::guarded(report_, "transgression script", [&] {
      const SerreRun run = run_serre_script(file_, bound());
      const int d = file_.ring(file_.serre()->base, bound())->truncation();
      for (const auto& page : run.pages) {
        const std::string name = "page E" + std::to_string(page.page) + " after d(" + page.transgression + ")";
        OrderedJson p;
        p["image"] = page.image;
        p["series"] = page.series;
        if (!page.expected) {
          report_.add(name, true, "no expected series declared", p);
          continue;
        }
        p["expected"] = page.expected->to_string();
        report_.add(name, page.match.equal,
                    page.match.equal ? "degrees 0.." + std::to_string(d) + " equal " + page.expected->to_string()
                                     : mismatch_text(page.match, page.series, page.expected->expand(d)),
                    p);
      }
      if (!run.permanent) return;
      Check& c = report_.add("permanence of the last fiber class", true, "taken as input");
      c.status = CheckStatus::kAssumed;
      c.note = run.permanence_note;
      if (!file_.serre()->compare_with) return;
      const std::string target = *file_.serre()->compare_with;
      const auto h = hilbert(*file_.ring(target, bound()));
      const auto cmp = series_equal(*run.total, h, std::min(d, h.truncation()));
      OrderedJson p;
      p["series"] = run.total->coefficients;
      report_.add("total series equals " + target, cmp.equal,
                  cmp.equal ? "degrees 0.." + std::to_string(d) + " equal"
                            : mismatch_text(cmp, run.total->coefficients, h.coefficients),
                  p);
    });
  }

  void morphism(const Json& j) {
    const std::string mname = str(j, "name", "verify.morphism");
    const auto m = file_.morphism(mname, bound());
    detail::guarded(report_, "morphism " + mname + " well-defined", [&] {
      const auto check = morphism_check(m);
      report_.add("morphism " + mname + " well-defined", check.well_defined,
                  check.well_defined ? "every relation maps to zero" : check.message);
    });
    detail::guarded(report_, "morphism " + mname + " injective", [&] {
      const auto image = image_series(m);
      const auto source = hilbert(m.source());
      std::vector<int> bad;
      for (int d = 0; d <= image.truncation(); ++d)
        if (image[d] != source[d]) bad.push_back(d);
      OrderedJson p;
      p["ranks"] = image.coefficients;
      p["non_injective_degrees"] = bad;
      report_.add("morphism " + mname + " injective", bad.empty(),
                  bad.empty() ? "rank equals source dimension in degrees 0.." + std::to_string(image.truncation())
                              : "rank deficit in " + std::to_string(bad.size()) + " degrees",
                  p);
      const auto cmp = series_equal(image, source, image.truncation());
      report_.add("image series of " + mname + " equals source series", cmp.equal,
                  cmp.equal ? "degrees 0.." + std::to_string(image.truncation()) + " equal"
                            : mismatch_text(cmp, image.coefficients, source.coefficients));
    });
  }

  void nilradical(const Json& j) {
    const std::string ring = str(j, "ring", "verify.nilradical");
    const int nil_truncation = detail::with_context("verify.nilradical.truncation", [&] { return j.value("truncation", top(ring)); });
    const int up_to = detail::with_context("verify.nilradical.up_to", [&] { return j.value("up_to", nil_truncation / 2); });
    const auto gens_j = detail::required(j, "generators", "verify.nilradical");
    std::vector<std::string> labels;
    for (const auto& g : gens_j) labels.push_back(file_.describe(g));
    const std::string name = "nilradical of " + ring + " equals (" + detail::join(labels, ", ") + ")";
    detail::guarded(report_, name, [&] {
      const auto q = file_.ring(ring, nil_truncation);
      std::vector<Polynomial> gens;
      for (const auto& g : gens_j) gens.push_back(file_.resolve(ring, g));
      std::vector<std::size_t> nil_dims, ideal_dims;
      std::optional<int> first_bad;
      for (int d = 1; d <= up_to; ++d) {
        const auto nil = nilradical_slice(*q, d);
        const auto ideal = generated_slice(*q, gens, d);
        nil_dims.push_back(nil.dimension());
        ideal_dims.push_back(ideal.dimension());
        if (!first_bad && !same_subspace(nil, ideal)) first_bad = d;
      }
      OrderedJson p;
      p["truncation"] = q->truncation();
      p["nilradical_dims"] = nil_dims;
      p["ideal_dims"] = ideal_dims;
      if (first_bad) p["first_mismatch"] = *first_bad;
      const auto idx = static_cast<std::size_t>(first_bad.value_or(1) - 1);
      report_.add(name, !first_bad,
                  first_bad ? "slices differ at degree " + std::to_string(*first_bad) + ": nilradical dim " +
                                  std::to_string(nil_dims[idx]) + ", ideal dim " + std::to_string(ideal_dims[idx])
                            : "slices agree in degrees 1.." + std::to_string(up_to) + " at truncation " +
                                  std::to_string(q->truncation()),
                  p);
    });
  }

  void nilpotency(const Json& list) {
    for (const auto& e : list) {
      const std::string ring = str(e, "ring", "verify.nilpotency");
      const Json& ref = detail::required(e, "element", "verify.nilpotency");
      const std::string label = file_.describe(ref);
      const std::optional<unsigned> expected =
          e.contains("order") && !e["order"].is_null() ? std::optional<unsigned>(e["order"].get<unsigned>()) : std::nullopt;
      const std::string name = "nilpotency of " + label + " in " + ring;
      detail::guarded(report_, name, [&] {
        const auto q = file_.ring(ring, bound());
        const Polynomial x = file_.resolve(ring, ref);
        const auto r = nilpotency_order(x, *q);
        OrderedJson p;
        p["order"] = r.order ? OrderedJson(*r.order) : OrderedJson(nullptr);
        p["powers_checked"] = 1u << r.max_steps_checked;
        std::string detail = r.order ? label + "^" + std::to_string(*r.order) + " = 0"
                                     : "no power up to " + label + "^" + std::to_string(1u << r.max_steps_checked) +
                                           " vanishes";
        for (const auto& mname : file_.morphism_names()) {
          const auto& def = file_.morphism_definition(mname);
          if (def.source != ring) continue;
          const auto m = file_.morphism(mname, bound());
          const auto ir = nilpotency_order(m(x), m.target());
          p["image_order"][mname] = ir.order ? OrderedJson(*ir.order) : OrderedJson(nullptr);
          detail += "; image under " + mname + ": " +
                    (ir.order ? "order " + std::to_string(*ir.order) : std::string("not witnessed"));
        }
        report_.add(name, r.order == expected, detail, p);
      });
    }
  }

  void derivation_axioms() {
    for (const auto& dname : file_.derivation_names()) {
      const auto& def = file_.derivation(dname);
      for (const auto& a : def.axioms) {
        const auto g = *def.derivation.table()->index_of(a);
        Check& c = report_.add(dname + "(" + a + ") = " + to_string(def.derivation.values()[g]), true,
                               "generator value taken as input");
        c.status = CheckStatus::kAssumed;
      }
    }
  }

  const QCohomology& cohomology(const std::string& ring, const std::string& dname) {
    auto key = std::make_pair(ring, dname);
    auto it = cohomology_.find(key);
    if (it != cohomology_.end()) return it->second;
    const auto& def = file_.derivation(dname);
    const auto q = file_.ring(ring, bound());
    return cohomology_.emplace(key, q_cohomology(*q, def.derivation)).first->second;
  }

  void q_cohomology_checks(const Json& list) {
    for (const auto& e : list) {
      const std::string ring = str(e, "ring", "verify.q_cohomology");
      const std::string dname = str(e, "derivation", "verify.q_cohomology");
      const RationalForm form = detail::parse_series(detail::required(e, "series", "verify.q_cohomology"), "verify.q_cohomology.series");
      const std::string h = "H(" + ring + ", " + dname + ")";
      const std::string dn = dname + " on " + ring + " descends and squares to zero";
      bool ok = true;
      detail::guarded(report_, dn, [&] {
        try {
          cohomology(ring, dname);
        } catch (...) {
          ok = false;
          throw;
        }
        report_.add(dn, true, "checked on all relations and degrees 0.." +
                                  std::to_string(top(ring) - 2 * file_.derivation(dname).derivation.shift()));
      });
      if (!ok) continue;
      const auto& hq = cohomology(ring, dname);
      const int last = hq.last_evaluable();
      const auto dims = hq.dims();
      const auto want = form.expand(hq.truncation);
      const auto cmp = compare_coefficients(dims, want, last);
      OrderedJson p;
      p["dims"] = dims;
      p["expected"] = form.to_string();
      report_.add(h + " series", cmp.equal,
                  cmp.equal ? "degrees 0.." + std::to_string(last) + " equal " + form.to_string()
                            : mismatch_text(cmp, dims, want),
                  p);
      std::vector<int> odd;
      for (int d = 1; d <= last; d += 2)
        if (dims[static_cast<std::size_t>(d)] != 0) odd.push_back(d);
      OrderedJson po;
      po["nonzero_odd_degrees"] = odd;
      report_.add(h + " odd degrees vanish", odd.empty(),
                  odd.empty() ? "zero in odd degrees up to " + std::to_string(last)
                              : "nonzero in " + std::to_string(odd.size()) + " odd degrees",
                  po);
      std::vector<int> edge;
      for (int d = last + 1; d <= hq.truncation; ++d) edge.push_back(d);
      Check& c = report_.add(h + " edge degrees", true,
                             "degrees " + std::to_string(last + 1) + ".." + std::to_string(hq.truncation) +
                                 " excluded: kernel leaves the truncation bound");
      c.status = CheckStatus::kEdgeExcluded;
      c.payload["degrees"] = edge;
    }
  }

  void exact_sequences(const Json& list) {
    for (const auto& e : list) {
      const std::string small = str(e, "small", "verify.exact_sequences");
      const std::string large = str(e, "large", "verify.exact_sequences");
      const std::string dname = str(e, "derivation", "verify.exact_sequences");
      const int shift = detail::with_context("verify.exact_sequences.shift", [&] { return e.at("shift").get<int>(); });
      const std::string name = "exact sequence " + small + " -> " + large + " splits";
      detail::guarded(report_, name, [&] {
        const auto& a = cohomology(small, dname);
        const auto& b = cohomology(large, dname);
        const int last = std::min(a.last_evaluable(), b.last_evaluable());
        std::optional<int> bad;
        for (int d = 0; d <= last && !bad; ++d) {
          const auto at = [&](const QCohomology& h, int k) -> std::size_t {
            return k >= 0 ? h.degrees[static_cast<std::size_t>(k)].cohomology : 0;
          };
          if (at(b, d) != at(a, d) + at(a, d - shift)) bad = d;
        }
        report_.add(name, !bad,
                    bad ? "dimension identity fails at degree " + std::to_string(*bad)
                        : "dim H^d(" + large + ") = dim H^d(" + small + ") + dim H^(d-" + std::to_string(shift) +
                              ")(" + small + ") for d <= " + std::to_string(last));
      });
    }
  }

  void bockstein(const Json& j) {
    const std::string ring = str(j, "ring", "verify.bockstein");
    const std::string dname = str(j, "derivation", "verify.bockstein");
    detail::guarded(report_, "Bockstein collapse for " + ring, [&] {
      const auto q = file_.ring(ring, bound());
      const auto& def = file_.derivation(dname);
      const auto result = bockstein_pages(*q, def.derivation, 2);
      OrderedJson p;
      p["page2"] = result.pages.back().dims;
      report_.add("Bockstein collapse for " + ring, result.collapsed, result.pages.back().note, p);
      if (j.contains("series")) {
        const auto form = detail::parse_series(j["series"], "verify.bockstein.series");
        const int last = result.e2.last_evaluable();
        const auto& dims = result.pages.back().dims;
        const auto want = form.expand(q->truncation());
        const auto cmp = compare_coefficients(dims, want, last);
        report_.add("E-infinity series for " + ring, cmp.equal,
                    cmp.equal ? "degrees 0.." + std::to_string(last) + " equal " + form.to_string()
                              : mismatch_text(cmp, dims, want));
      }
      if (!j.contains("squares")) return;
      std::vector<Polynomial> classes;
      std::vector<std::optional<bool>> expect;
      std::vector<std::string> labels;
      for (const auto& s : j["squares"]) {
        classes.push_back(file_.resolve(ring, detail::required(s, "element", "verify.bockstein.squares")));
        labels.push_back(file_.describe(s["element"]));
        expect.push_back(s.contains("zero") ? std::optional<bool>(s["zero"].get<bool>()) : std::nullopt);
      }
      const auto rep = einfty_nilpotence_report(*q, def.derivation, classes);
      for (std::size_t i = 0; i < rep.size(); ++i) {
        const auto& r = rep[i];
        const bool zero = r.square_zero_in_ring;
        OrderedJson ps;
        ps["square"] = to_string(r.square);
        ps["zero_in_ring"] = zero;
        ps["zero_in_cohomology"] = r.square_zero_in_cohomology;
        const bool ok = !expect[i] || (*expect[i] ? zero : (!zero && !r.square_zero_in_cohomology));
        report_.add("square of " + labels[i] + " in " + ring, ok,
                    labels[i] + "^2 = " + to_string(r.square) +
                        (zero ? "" : r.square_zero_in_cohomology ? " (a boundary)" : " (nonzero in cohomology)"),
                    ps);
      }
    });
  }

  const RingFile& file_;
  VerifyOptions options_;
  Report report_;
  std::map<std::pair<std::string, std::string>, QCohomology> cohomology_;
};

inline Report verify_file(const RingFile& file, const std::string& origin, VerifyOptions options = {}) {
  return Verifier(file, options).run(origin);
}

}  // namespace f2coh
