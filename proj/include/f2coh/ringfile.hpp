#pragma once

// Ring-definition files: JSON documents declaring rings, Steenrod tables,
// derivations, morphisms, a transgression script and a verification plan.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "f2coh/error.hpp"
#include "f2coh/expression.hpp"
#include "f2coh/morphism.hpp"
#include "f2coh/polynomial.hpp"
#include "f2coh/quotient_ring.hpp"
#include "f2coh/series.hpp"
#include "f2coh/steenrod.hpp"

namespace f2coh {

using Json = nlohmann::json;

struct RingDefinition {
  std::string name;
  TablePtr table;
  std::vector<Polynomial> relations;
  /// Named elements in declaration order.
  std::vector<std::pair<std::string, Polynomial>> elements;
  std::optional<SteenrodSpec> steenrod;
  std::optional<RationalForm> series;
  int truncation = kDefaultTruncation;
};

struct DerivationDefinition {
  std::string name;
  std::string ring;
  Derivation derivation;
  /// Generators whose values are taken as given rather than derived.
  std::vector<std::string> axioms;
};

struct MorphismDefinition {
  std::string name;
  std::string source;
  std::string target;
  std::vector<Polynomial> images;
};

struct SerreStepDefinition {
  bool permanent = false;
  Json value;  // element reference when not permanent
  std::string note;
};

struct SerreScript {
  std::string base;
  std::vector<SerreStepDefinition> steps;
  /// Expected page series after each transgression step.
  std::vector<RationalForm> pages;
  /// Ring whose presentation series the total must reproduce.
  std::optional<std::string> compare_with;
};

namespace detail {

template <class Fn>
auto with_context(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  } catch (const HomogeneityError& e) {
    throw HomogeneityError(path + ": " + e.what());
  } catch (const InputError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const Json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

inline const Json& required(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw ValidationError(path + ": missing key '" + key + "'");
  return obj.at(key);
}

inline RationalForm parse_series(const Json& j, const std::string& path) {
  return with_context(path, [&] {
    RationalForm f{j.value("numerator", std::vector<int>{}), j.value("denominator", std::vector<int>{})};
    for (int a : f.numerator)
      if (a < 1) throw ValidationError("series exponents must be positive");
    for (int a : f.denominator)
      if (a < 1) throw ValidationError("series exponents must be positive");
    return f;
  });
}

}  // namespace detail

class RingFile {
 public:
  static RingFile parse(const std::string& text, const std::string& origin = "<input>") {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(origin + ": " + e.what(), e.byte);
    }
    return RingFile(std::move(doc));
  }

  static RingFile load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open ring file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
  }

  explicit RingFile(Json doc) : doc_(std::move(doc)) {
    if (!doc_.is_object()) throw ValidationError("ring file must be a JSON object");
    truncation_ = detail::with_context("truncation", [&] { return doc_.value("truncation", kDefaultTruncation); });
    if (truncation_ < 1) throw ValidationError("truncation must be positive");
    const Json& rings = detail::required(doc_, "rings", "<root>");
    if (!rings.is_object() || rings.empty()) throw ValidationError("rings: expected a non-empty object");
    for (auto it = rings.begin(); it != rings.end(); ++it) load_ring(it.key(), rings);
    if (doc_.contains("derivations"))
      for (auto it = doc_["derivations"].begin(); it != doc_["derivations"].end(); ++it)
        load_derivation(it.key(), it.value());
    if (doc_.contains("morphisms"))
      for (auto it = doc_["morphisms"].begin(); it != doc_["morphisms"].end(); ++it)
        load_morphism(it.key(), it.value());
    if (doc_.contains("serre")) load_serre(doc_["serre"]);
  }

  int truncation() const noexcept { return truncation_; }
  const Json& document() const noexcept { return doc_; }

  std::vector<std::string> ring_names() const {
    std::vector<std::string> out;
    for (const auto& r : ring_order_) out.push_back(r);
    return out;
  }

  const RingDefinition& definition(const std::string& name) const {
    auto it = rings_.find(name);
    if (it == rings_.end()) throw ValidationError("unknown ring '" + name + "'");
    return it->second;
  }

  /// Quotient ring, built on first use and cached per truncation.
  std::shared_ptr<const QuotientRing> ring(const std::string& name,
                                           std::optional<int> truncation = std::nullopt) const {
    const auto& def = definition(name);
    const int d = truncation.value_or(def.truncation);
    std::lock_guard lock(cache_mutex_);
    auto key = std::make_pair(name, d);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto q = detail::with_context("rings." + name, [&] {
      return std::make_shared<const QuotientRing>(RingPresentation{def.table, def.relations, d});
    });
    cache_.emplace(key, q);
    return q;
  }

  /// An element name declared on the ring, else an expression over its generators.
  Polynomial element(const std::string& ring_name, const std::string& ref) const {
    const auto& def = definition(ring_name);
    for (const auto& [n, p] : def.elements)
      if (n == ref) return p;
    return detail::with_context("ring " + ring_name + ", '" + ref + "'",
                                [&] { return parse_polynomial(ref, def.table); });
  }

  /// A string reference, or {"milnor": i, "of": ref} evaluated with the ring's Steenrod table.
  Polynomial resolve(const std::string& ring_name, const Json& ref) const {
    if (ref.is_string()) return element(ring_name, ref.get<std::string>());
    if (ref.is_object() && ref.contains("milnor")) {
      const auto& def = definition(ring_name);
      if (!def.steenrod) throw ValidationError("ring '" + ring_name + "' has no Steenrod table");
      const int i = detail::with_context("milnor", [&] { return ref.at("milnor").get<int>(); });
      if (i < 0) throw ValidationError("milnor index must be non-negative");
      return milnor_q(i, resolve(ring_name, detail::required(ref, "of", "milnor")), *def.steenrod);
    }
    throw ValidationError("cannot interpret element reference " + ref.dump());
  }

  std::string describe(const Json& ref) const {
    if (ref.is_string()) return ref.get<std::string>();
    if (ref.is_object() && ref.contains("milnor") && ref.contains("of"))
      return "Q" + ref["milnor"].dump() + "(" + describe(ref["of"]) + ")";
    return ref.dump();
  }

  const DerivationDefinition& derivation(const std::string& name) const {
    auto it = derivations_.find(name);
    if (it == derivations_.end()) throw ValidationError("unknown derivation '" + name + "'");
    return it->second;
  }
  std::vector<std::string> derivation_names() const {
    std::vector<std::string> out;
    for (const auto& [n, d] : derivations_) out.push_back(n);
    return out;
  }

  const MorphismDefinition& morphism_definition(const std::string& name) const {
    auto it = morphisms_.find(name);
    if (it == morphisms_.end()) throw ValidationError("unknown morphism '" + name + "'");
    return it->second;
  }
  std::vector<std::string> morphism_names() const {
    std::vector<std::string> out;
    for (const auto& [n, m] : morphisms_) out.push_back(n);
    return out;
  }

  RingMorphism morphism(const std::string& name, std::optional<int> truncation = std::nullopt) const {
    const auto& def = morphism_definition(name);
    return RingMorphism(ring(def.source, truncation), ring(def.target, truncation), def.images);
  }

  const std::optional<SerreScript>& serre() const noexcept { return serre_; }

 private:
  void load_ring(const std::string& name, const Json& rings) {
    if (rings_.count(name)) return;
    const std::string path = "rings." + name;
    if (loading_.count(name)) throw ValidationError(path + ": cyclic 'extends'");
    const Json& j = rings.at(name);
    if (!j.is_object()) throw ValidationError(path + ": expected an object");
    loading_.insert({name, true});
    RingDefinition def;
    def.name = name;
    def.truncation = truncation_;
    if (j.contains("extends")) {
      if (j.contains("generators")) throw ValidationError(path + ": 'extends' and 'generators' are exclusive");
      const std::string parent = detail::with_context(path + ".extends", [&] { return j.at("extends").get<std::string>(); });
      if (!rings.contains(parent)) throw ValidationError(path + ".extends: unknown ring '" + parent + "'");
      load_ring(parent, rings);
      const auto& p = rings_.at(parent);
      def.table = p.table;
      def.relations = p.relations;
      def.elements = p.elements;
      def.steenrod = p.steenrod;
    } else {
      const Json& gens = detail::required(j, "generators", path);
      std::vector<std::string> names;
      std::vector<int> degrees;
      detail::with_context(path + ".generators", [&] {
        for (const auto& g : gens) {
          names.push_back(g.at("name").get<std::string>());
          degrees.push_back(g.at("degree").get<int>());
        }
        def.table = make_table(names, degrees);
        return 0;
      });
    }
    if (j.contains("truncation"))
      def.truncation = detail::with_context(path + ".truncation", [&] { return j.at("truncation").get<int>(); });
    rings_.emplace(name, def);  // visible to element() while loading
    auto& d = rings_.at(name);
    if (j.contains("elements")) {
      const Json& el = j.at("elements");
      for (auto it = el.begin(); it != el.end(); ++it) {
        const std::string ep = path + ".elements." + it.key();
        if (d.table->index_of(it.key())) throw ValidationError(ep + ": element name shadows a generator");
        Polynomial p = detail::with_context(ep, [&] { return parse_polynomial(it.value().get<std::string>(), d.table); });
        if (!p.is_homogeneous()) throw HomogeneityError(ep + ": element must be homogeneous");
        d.elements.emplace_back(it.key(), std::move(p));
      }
    }
    if (j.contains("relations")) {
      std::size_t i = 0;
      for (const auto& r : j.at("relations")) {
        const std::string rp = path + ".relations[" + std::to_string(i++) + "]";
        Polynomial p = detail::with_context(rp, [&] { return element(name, r.get<std::string>()); });
        if (!p.is_homogeneous()) throw HomogeneityError(rp + ": relation '" + r.get<std::string>() + "' is not homogeneous");
        d.relations.push_back(std::move(p));
      }
    }
    if (j.contains("steenrod")) load_steenrod(d, j.at("steenrod"), path + ".steenrod");
    if (j.contains("series")) d.series = detail::parse_series(j.at("series"), path + ".series");
    loading_.erase(name);
    ring_order_.push_back(name);
  }

  void load_steenrod(RingDefinition& d, const Json& j, const std::string& path) {
    std::vector<std::vector<Polynomial>> squares(d.table->size());
    for (std::size_t g = 0; g < d.table->size(); ++g) {
      const std::string& gname = d.table->name(g);
      const Json& list = detail::required(j, gname, path);
      for (const auto& e : list)
        squares[g].push_back(detail::with_context(path + "." + gname, [&] {
          return parse_polynomial(e.get<std::string>(), d.table);
        }));
    }
    d.steenrod = detail::with_context(path, [&] { return SteenrodSpec(d.table, std::move(squares)); });
  }

  void load_derivation(const std::string& name, const Json& j) {
    const std::string path = "derivations." + name;
    const std::string ring_name = detail::with_context(path + ".ring", [&] { return detail::required(j, "ring", path).get<std::string>(); });
    const auto& def = definition(ring_name);
    const int shift = detail::with_context(path + ".shift", [&] { return detail::required(j, "shift", path).get<int>(); });
    const Json& values = detail::required(j, "values", path);
    std::vector<Polynomial> v;
    for (std::size_t g = 0; g < def.table->size(); ++g) {
      const std::string& gname = def.table->name(g);
      v.push_back(detail::with_context(path + ".values." + gname, [&] {
        return resolve(ring_name, detail::required(values, gname, path + ".values"));
      }));
    }
    std::vector<std::string> axioms =
        detail::with_context(path + ".axioms", [&] { return j.value("axioms", std::vector<std::string>{}); });
    for (const auto& a : axioms)
      if (!def.table->index_of(a)) throw ValidationError(path + ".axioms: unknown generator '" + a + "'");
    Derivation d = detail::with_context(path, [&] { return Derivation(def.table, shift, std::move(v)); });
    derivations_.emplace(name, DerivationDefinition{name, ring_name, std::move(d), std::move(axioms)});
  }

  void load_morphism(const std::string& name, const Json& j) {
    const std::string path = "morphisms." + name;
    MorphismDefinition m;
    m.name = name;
    detail::with_context(path, [&] {
      m.source = detail::required(j, "source", path).get<std::string>();
      m.target = detail::required(j, "target", path).get<std::string>();
      return 0;
    });
    const auto& src = definition(m.source);
    definition(m.target);
    const Json& images = detail::required(j, "images", path);
    for (std::size_t g = 0; g < src.table->size(); ++g) {
      const std::string& gname = src.table->name(g);
      Polynomial p = detail::with_context(path + ".images." + gname, [&] {
        return resolve(m.target, detail::required(images, gname, path + ".images"));
      });
      if (!p.is_zero() && p.homogeneous_degree() != src.table->degree(g))
        throw HomogeneityError(path + ".images." + gname + ": image must be homogeneous of degree " +
                               std::to_string(src.table->degree(g)));
      m.images.push_back(std::move(p));
    }
    morphisms_.emplace(name, std::move(m));
  }

  void load_serre(const Json& j) {
    const std::string path = "serre";
    SerreScript s;
    s.base = detail::with_context(path + ".base", [&] { return detail::required(j, "base", path).get<std::string>(); });
    definition(s.base);
    std::size_t i = 0;
    for (const auto& step : detail::required(j, "steps", path)) {
      const std::string sp = path + ".steps[" + std::to_string(i++) + "]";
      SerreStepDefinition st;
      if (step.is_string() && step.get<std::string>() == "permanent") {
        st.permanent = true;
      } else if (step.is_object() && step.contains("permanent")) {
        st.permanent = true;
        st.note = step.value("note", "");
      } else {
        detail::with_context(sp, [&] { return resolve(s.base, step); });
        st.value = step;
      }
      s.steps.push_back(std::move(st));
    }
    for (std::size_t k = 0; k + 1 < s.steps.size(); ++k)
      if (s.steps[k].permanent) throw ValidationError(path + ".steps: 'permanent' must be the last step");
    if (j.contains("pages")) {
      std::size_t p = 0;
      for (const auto& page : j.at("pages"))
        s.pages.push_back(detail::parse_series(page, path + ".pages[" + std::to_string(p++) + "]"));
    }
    if (j.contains("compare_with")) {
      s.compare_with = j.at("compare_with").get<std::string>();
      definition(*s.compare_with);
    }
    serre_ = std::move(s);
  }

  Json doc_;
  int truncation_ = kDefaultTruncation;
  std::map<std::string, RingDefinition> rings_;
  std::vector<std::string> ring_order_;
  std::map<std::string, bool> loading_;
  std::map<std::string, DerivationDefinition> derivations_;
  std::map<std::string, MorphismDefinition> morphisms_;
  std::optional<SerreScript> serre_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::string, int>, std::shared_ptr<const QuotientRing>> cache_;
};

}  // namespace f2coh
