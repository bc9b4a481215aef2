#include "posetkit/report.hpp"

#include "posetkit/errors.hpp"

namespace posetkit {

const Binding* PropertyReport::find(std::string_view var) const {
  for (const auto& b : witness) {
    if (b.var == var) return &b;
  }
  return nullptr;
}

Element PropertyReport::element(std::string_view var) const {
  const Binding* b = find(var);
  if (!b || !std::holds_alternative<Element>(b->value)) {
    throw Error(ErrorKind::InvalidArgument, "witness has no element '" + std::string(var) + "'");
  }
  return std::get<Element>(b->value);
}

const Subset& PropertyReport::subset(std::string_view var) const {
  const Binding* b = find(var);
  if (!b || !std::holds_alternative<Subset>(b->value)) {
    throw Error(ErrorKind::InvalidArgument, "witness has no subset '" + std::string(var) + "'");
  }
  return std::get<Subset>(b->value);
}

std::string describe_witness(const Poset& p, const PropertyReport& r) {
  std::string out;
  for (const auto& b : r.witness) {
    if (!out.empty()) out += ' ';
    out += b.var;
    out += '=';
    if (const auto* e = std::get_if<Element>(&b.value)) {
      out += p.name(*e);
    } else {
      out += p.label(std::get<Subset>(b.value));
    }
  }
  return out;
}

PropertyReport all_of(std::string property, const std::vector<PropertyReport>& parts) {
  PropertyReport out = PropertyReport::pass(std::move(property));
  bool all_vacuous = !parts.empty();
  for (const auto& part : parts) {
    out.exhaustive = out.exhaustive && part.exhaustive;
    out.samples += part.samples;
    all_vacuous = all_vacuous && part.vacuous;
    if (!part.holds && out.holds) {
      out.holds = false;
      out.witness = part.witness;
      out.note = part.property;
    }
  }
  out.vacuous = out.holds && all_vacuous;
  return out;
}

}  // namespace posetkit
