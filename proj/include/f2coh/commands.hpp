#pragma once

// Subcommand implementations behind the f2coh executable. Each returns the
// text to print and an exit code: 0 success, 1 failed check. Input errors
// propagate as InputError (exit code 2 at the front end).

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "f2coh/ideal.hpp"
#include "f2coh/morphism.hpp"
#include "f2coh/report.hpp"
#include "f2coh/ringfile.hpp"
#include "f2coh/series.hpp"
#include "f2coh/spectral.hpp"
#include "f2coh/steenrod.hpp"
#include "f2coh/verify.hpp"

namespace f2coh {

struct CommandOptions {
  std::string file;
  std::optional<std::string> ring;
  std::optional<std::string> derivation;
  std::optional<std::string> element;
  std::optional<std::string> morphism;
  std::optional<int> up_to;
  bool json = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline std::string pick(const std::optional<std::string>& given, const std::vector<std::string>& names,
                        const char* what) {
  if (given) return *given;
  if (names.size() == 1) return names.front();
  throw ValidationError(std::string("--") + what + " is required (the file declares " +
                        std::to_string(names.size()) + ")");
}

inline CommandResult emit(const OrderedJson& j, int code = 0) { return {code, j.dump(2) + "\n"}; }

}  // namespace detail

inline CommandResult cmd_hilbert(const RingFile& file, const CommandOptions& o) {
  const std::string name = detail::pick(o.ring, file.ring_names(), "ring");
  const auto q = file.ring(name, o.up_to);
  HilbertSeries h = hilbert(*q);
  h.rational_form = file.definition(name).series;
  const bool match = h.matches_rational_form();
  const int code = match ? 0 : 1;
  if (o.json) {
    OrderedJson j;
    j["ring"] = name;
    j["truncation"] = q->truncation();
    j["coefficients"] = h.coefficients;
    if (h.rational_form) {
      j["rational_form"] = h.rational_form->to_string();
      j["match"] = match;
    }
    return detail::emit(j, code);
  }
  std::string out = to_string(h.coefficients) + "\n";
  if (h.rational_form)
    out += "rational form " + h.rational_form->to_string() + ": " + (match ? "match" : "MISMATCH") + "\n";
  return {code, out};
}

inline CommandResult cmd_nilradical(const RingFile& file, const CommandOptions& o) {
  const std::string name = detail::pick(o.ring, file.ring_names(), "ring");
  const auto q = file.ring(name, o.up_to);
  const int last = q->truncation() / 2;
  std::vector<Polynomial> generators;
  OrderedJson rows = OrderedJson::array();
  std::ostringstream text;
  text << "ring " << name << ", truncation " << q->truncation() << ", slices in degrees 1.." << last << "\n";
  text << std::left << std::setw(8) << "degree" << std::setw(6) << "dim" << std::setw(8) << "power"
       << "new generators\n";
  std::optional<int> first;
  for (int d = 1; d <= last; ++d) {
    const auto nil = nilradical_slice(*q, d);
    auto span = generated_slice(*q, generators, d).basis;
    std::vector<std::string> fresh;
    for (const auto& e : nil.elements(*q)) {
      const auto v = q->coordinates(e, d);
      if (gf2::member(v, span).member) continue;
      generators.push_back(e);
      fresh.push_back(to_string(e));
      span.matrix.append_row(v);
      span = gf2::rref(std::move(span.matrix));
    }
    if (!first && nil.dimension()) first = d;
    OrderedJson row;
    row["degree"] = d;
    row["dimension"] = nil.dimension();
    row["power"] = 1u << nil.frobenius_steps;
    row["new_generators"] = fresh;
    rows.push_back(row);
    text << std::setw(8) << d << std::setw(6) << nil.dimension() << std::setw(8)
         << ("2^" + std::to_string(nil.frobenius_steps)) << detail::join(fresh, ", ") << "\n";
  }
  if (first)
    text << "first nonzero slice: degree " << *first << "\n";
  else
    text << "all slices zero\n";
  if (o.json) {
    OrderedJson j;
    j["ring"] = name;
    j["truncation"] = q->truncation();
    j["slices"] = rows;
    j["first_nonzero"] = first ? OrderedJson(*first) : OrderedJson(nullptr);
    return detail::emit(j);
  }
  return {0, text.str()};
}

inline CommandResult cmd_qcohomology(const RingFile& file, const CommandOptions& o) {
  const std::string dname = detail::pick(o.derivation, file.derivation_names(), "derivation");
  const auto& def = file.derivation(dname);
  const std::string name = o.ring.value_or(def.ring);
  const auto q = file.ring(name, o.up_to);
  if (!same_table(q->table(), def.derivation.table()))
    throw ValidationError("derivation '" + dname + "' is not defined over ring '" + name + "'");
  const auto h = q_cohomology(*q, def.derivation);
  if (o.json) {
    OrderedJson j;
    j["ring"] = name;
    j["derivation"] = dname;
    j["truncation"] = h.truncation;
    j["last_evaluable"] = h.last_evaluable();
    OrderedJson degrees = OrderedJson::array();
    for (const auto& e : h.degrees) {
      OrderedJson row;
      row["degree"] = e.degree;
      row["dimension"] = e.dimension;
      if (e.edge) {
        row["edge"] = true;
      } else {
        row["kernel"] = e.kernel;
        row["image"] = e.image;
        row["cohomology"] = e.cohomology;
        std::vector<std::string> reps;
        for (const auto& r : e.representatives) reps.push_back(to_string(r));
        row["representatives"] = reps;
      }
      degrees.push_back(row);
    }
    j["degrees"] = degrees;
    return detail::emit(j);
  }
  std::ostringstream text;
  text << "H(" << name << ", " << dname << "), truncation " << h.truncation << "\n";
  text << std::left << std::setw(8) << "degree" << std::setw(8) << "dim" << std::setw(8) << "ker" << std::setw(8)
       << "im" << "H\n";
  for (const auto& e : h.degrees) {
    text << std::setw(8) << e.degree << std::setw(8) << e.dimension;
    if (e.edge)
      text << "edge\n";
    else
      text << std::setw(8) << e.kernel << std::setw(8) << e.image << e.cohomology << "\n";
  }
  return {0, text.str()};
}

inline CommandResult cmd_nilpotency(const RingFile& file, const CommandOptions& o) {
  const std::string name = detail::pick(o.ring, file.ring_names(), "ring");
  if (!o.element) throw ValidationError("--element is required");
  const auto q = file.ring(name, o.up_to);
  const Polynomial x = file.element(name, *o.element);
  const auto r = nilpotency_order(x, *q);
  if (o.json) {
    OrderedJson j;
    j["ring"] = name;
    j["element"] = to_string(x);
    j["order"] = r.order ? OrderedJson(*r.order) : OrderedJson(nullptr);
    j["powers_checked"] = 1u << r.max_steps_checked;
    return detail::emit(j);
  }
  if (r.order) return {0, *o.element + ": order " + std::to_string(*r.order) + "\n"};
  return {0, *o.element + ": not witnessed (checked up to power " + std::to_string(1u << r.max_steps_checked) +
                 " at truncation " + std::to_string(q->truncation()) + ")\n"};
}

inline CommandResult cmd_morphism(const RingFile& file, const CommandOptions& o) {
  const std::string name = detail::pick(o.morphism, file.morphism_names(), "morphism");
  const auto m = file.morphism(name, o.up_to);
  const auto check = morphism_check(m);
  OrderedJson j;
  j["morphism"] = name;
  j["well_defined"] = check.well_defined;
  std::ostringstream text;
  text << "morphism " << name << ": " << (check.well_defined ? "well-defined" : "NOT well-defined: " + check.message)
       << "\n";
  if (!check.well_defined) {
    j["offending_relation"] = to_string(m.source().presentation().relations[*check.offending_relation]);
    j["residue"] = to_string(check.residue);
    return o.json ? detail::emit(j, 1) : CommandResult{1, text.str()};
  }
  const auto image = image_series(m);
  const auto source = hilbert(m.source());
  bool injective = true;
  OrderedJson rows = OrderedJson::array();
  text << std::left << std::setw(8) << "degree" << std::setw(8) << "source" << "rank\n";
  for (int d = 0; d <= image.truncation(); ++d) {
    injective = injective && image[d] == source[d];
    rows.push_back({{"degree", d}, {"source", source[d]}, {"rank", image[d]}});
    text << std::setw(8) << d << std::setw(8) << source[d] << image[d] << "\n";
  }
  text << "injective through degree " << image.truncation() << ": " << (injective ? "yes" : "no") << "\n";
  j["degrees"] = rows;
  j["injective"] = injective;
  return o.json ? detail::emit(j) : CommandResult{0, text.str()};
}

inline CommandResult cmd_serre(const RingFile& file, const CommandOptions& o) {
  const SerreRun run = run_serre_script(file, o.up_to);
  bool ok = true;
  OrderedJson pages = OrderedJson::array();
  std::ostringstream text;
  for (const auto& p : run.pages) {
    ok = ok && p.match.equal;
    OrderedJson row;
    row["page"] = p.page;
    row["transgression"] = p.transgression;
    row["image"] = p.image;
    row["series"] = p.series;
    if (p.expected) {
      row["expected"] = p.expected->to_string();
      row["match"] = p.match.equal;
    }
    pages.push_back(row);
    text << "E" << p.page << " after d(" << p.transgression << ") = " << p.image << "\n  " << to_string(p.series)
         << "\n";
    if (p.expected) text << "  expected " << p.expected->to_string() << ": " << (p.match.equal ? "match" : "MISMATCH") << "\n";
  }
  OrderedJson j;
  j["pages"] = pages;
  j["permanent"] = run.permanent;
  if (run.total) {
    text << "permanent" << (run.permanence_note.empty() ? "" : " (" + run.permanence_note + ")") << "\n  total "
         << to_string(run.total->coefficients) << "\n";
    j["total"] = run.total->coefficients;
    if (file.serre()->compare_with) {
      const auto h = hilbert(*file.ring(*file.serre()->compare_with, o.up_to));
      const bool eq = series_equal(*run.total, h, std::min(run.total->truncation(), h.truncation())).equal;
      ok = ok && eq;
      text << "  total equals " << *file.serre()->compare_with << ": " << (eq ? "yes" : "NO") << "\n";
      j["equals_" + *file.serre()->compare_with] = eq;
    }
  }
  const int code = ok ? 0 : 1;
  return o.json ? detail::emit(j, code) : CommandResult{code, text.str()};
}

inline CommandResult cmd_bockstein(const RingFile& file, const CommandOptions& o) {
  const std::string dname = detail::pick(o.derivation, file.derivation_names(), "derivation");
  const auto& def = file.derivation(dname);
  const std::string name = o.ring.value_or(def.ring);
  const auto q = file.ring(name, o.up_to);
  const auto result = bockstein_pages(*q, def.derivation, 3);
  OrderedJson pages = OrderedJson::array();
  std::ostringstream text;
  for (const auto& p : result.pages) {
    OrderedJson row;
    row["page"] = p.page;
    row["dims"] = p.dims;
    row["note"] = p.note;
    OrderedJson fates = OrderedJson::object();
    for (const auto& f : p.fates) fates[f.generator] = f.fate;
    if (!p.fates.empty()) row["fates"] = fates;
    pages.push_back(row);
    text << "E" << p.page << ": " << to_string(p.dims) << "\n  " << p.note << "\n";
    for (const auto& f : p.fates) text << "  " << f.generator << ": " << f.fate << "\n";
  }
  text << (result.collapsed ? "collapses at E2" : "collapse not established") << "\n";
  OrderedJson j;
  j["ring"] = name;
  j["derivation"] = dname;
  j["pages"] = pages;
  j["collapsed"] = result.collapsed;
  return o.json ? detail::emit(j) : CommandResult{0, text.str()};
}

inline CommandResult cmd_verify(const RingFile& file, const CommandOptions& o) {
  const Report r = verify_file(file, o.file, VerifyOptions{o.up_to});
  return {r.exit_code(), o.json ? render_json(r) : render_text(r)};
}

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"hilbert", "nilradical", "qcohomology", "nilpotency",
                                              "morphism", "serre", "bockstein", "verify-paper"};
  return names;
}

/// Loads the file and dispatches. Throws InputError on bad input.
inline CommandResult run_command(const std::string& command, const CommandOptions& o) {
  if (o.up_to && *o.up_to < 1) throw ValidationError("--up-to must be positive");
  const RingFile file = RingFile::load(o.file);
  if (command == "hilbert") return cmd_hilbert(file, o);
  if (command == "nilradical") return cmd_nilradical(file, o);
  if (command == "qcohomology") return cmd_qcohomology(file, o);
  if (command == "nilpotency") return cmd_nilpotency(file, o);
  if (command == "morphism") return cmd_morphism(file, o);
  if (command == "serre") return cmd_serre(file, o);
  if (command == "bockstein") return cmd_bockstein(file, o);
  if (command == "verify-paper") return cmd_verify(file, o);
  throw ValidationError("unknown command '" + command + "'");
}

}  // namespace f2coh
